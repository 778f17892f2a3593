use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::Value;
use tori::tori::{
    corollary_paths, projective_params, torus_canonical_with, torus_order, torus_psl, torus_sl,
};
use tori::{CanonicalMethod, Group, GroupFamily, Result, Spec};

use crate::common::{check_strict, group_name, report_json, EpsArg, Format, PartitionArg, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Chain,
    Canonical,
    Corollary,
    All,
}

/// Chain output follows the order the parts are given in; the group does not.
#[derive(clap::Args)]
pub struct Args {
    /// Field size, any integer >= 2 unless --strict.
    #[arg(long)]
    q: BigInt,
    #[command(flatten)]
    eps: EpsArg,
    /// Parts of n, e.g. 3,6,6,9 or 3,6^2,9.
    #[arg(long)]
    partition: PartitionArg,
    /// Decompose the image in PSL / PSU.
    #[arg(long)]
    projective: bool,
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
    /// Algorithm behind the canonical path.
    #[arg(long, default_value = "lcm_of_gcds")]
    canonical_method: CanonicalMethod,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Require q to be a prime power.
    #[arg(long)]
    strict: bool,
}

pub struct Path {
    pub label: String,
    pub group: Group,
}

pub fn fast_path(spec: &Spec, family: GroupFamily) -> Result<Group> {
    match family {
        GroupFamily::Sl => torus_sl(spec),
        GroupFamily::Psl => torus_psl(spec, None),
    }
}

fn paths(
    spec: &Spec,
    family: GroupFamily,
    method: Method,
    cm: CanonicalMethod,
) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    if matches!(method, Method::Chain | Method::All) {
        out.push(Path {
            label: "chain".into(),
            group: fast_path(spec, family)?,
        });
    }
    if matches!(method, Method::Canonical | Method::All) {
        out.push(Path {
            label: "canonical".into(),
            group: torus_canonical_with(spec, family, cm)?,
        });
    }
    if matches!(method, Method::Corollary | Method::All) {
        for (case, group) in corollary_paths(spec, family.is_projective())? {
            out.push(Path {
                label: format!("corollary:{case}"),
                group,
            });
        }
    }
    Ok(out)
}

pub fn run(args: Args) -> Result<Status> {
    if args.strict {
        check_strict(&args.q)?;
    }
    let spec = Spec::new(args.q, args.eps.get(), args.partition.0)?;
    let family = GroupFamily::from_projective(args.projective);
    let found = paths(&spec, family, args.method, args.canonical_method)?;
    let order = torus_order(&spec, args.projective)?;

    let orders_ok = found.iter().all(|p| p.group.order() == order);
    let iso_ok = found
        .windows(2)
        .all(|w| w[0].group.is_isomorphic(&w[1].group));

    match args.format {
        Format::Json => {
            let records: Vec<Value> = found
                .iter()
                .map(|p| report_json(&spec, family, &p.label, &p.group))
                .collect();
            let out = match (args.method, records.len()) {
                (Method::Chain | Method::Canonical, 1) => records.into_iter().next().unwrap(),
                _ => Value::Array(records),
            };
            println!("{out}");
        }
        Format::Text => {
            let parts: Vec<String> = spec.partition().iter().map(u32::to_string).collect();
            println!(
                "{}  partition {}",
                group_name(&spec, family),
                parts.join(",")
            );
            if args.projective {
                let p = projective_params(&spec, None)?;
                println!("d={} d'={} t={}", p.d, p.d_prime, p.t);
            }
            if found.is_empty() {
                println!("no corollary applies to this partition");
            }
            let width = found.iter().map(|p| p.label.len()).max().unwrap_or(0);
            for p in &found {
                println!("{:<width$}  {}", p.label, p.group);
            }
            println!("{:<width$}  {order}", "order");
            if !orders_ok {
                println!("order mismatch");
            }
            if found.len() > 1 {
                println!(
                    "{}",
                    if iso_ok {
                        "all paths isomorphic"
                    } else {
                        "paths NOT isomorphic"
                    }
                );
            }
        }
    }
    Ok(Status::from_ok(orders_ok && iso_ok))
}
