use std::path::PathBuf;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::Value;
use tori::partition::format_partition;
use tori::tori::{torus_canonical_with, torus_order};
use tori::{CanonicalMethod, Eps, FixtureRow, Group, GroupFamily, Partitions, Result, Spec};

use crate::common::{fixtures, group_name, report_json, EpsArg, Format, Status};
use crate::decompose::fast_path;

#[derive(clap::Args)]
pub struct Args {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, default_value = "2")]
    q: BigInt,
    #[command(flatten)]
    eps: EpsArg,
    #[arg(long)]
    projective: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also compare each row with the canonical decomposition.
    #[arg(long)]
    verify_canonical: bool,
    /// Fixture corpus to compare against instead of the built-in one.
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum FixtureCheck {
    Match,
    Mismatch,
    Absent,
}

struct Row {
    spec: Spec,
    group: Group,
    invariants_ok: bool,
    fixture: FixtureCheck,
}

fn compare(row: Option<&FixtureRow>, q: &BigInt, eps: Eps, group: &Group) -> FixtureCheck {
    match row.map(|r| r.evaluate(q, eps)) {
        None => FixtureCheck::Absent,
        Some(Ok(want)) if want.is_isomorphic(group) => FixtureCheck::Match,
        Some(_) => FixtureCheck::Mismatch,
    }
}

fn build(
    spec: Spec,
    family: GroupFamily,
    verify_canonical: bool,
    fixture: Option<&FixtureRow>,
) -> Result<Row> {
    let group = fast_path(&spec, family)?;
    let mut invariants_ok = group.order() == torus_order(&spec, family.is_projective())?;
    if verify_canonical {
        let canon = torus_canonical_with(&spec, family, CanonicalMethod::LcmOfGcds)?;
        invariants_ok &= canon.is_isomorphic(&group);
    }
    let fixture = compare(fixture, spec.q(), spec.eps(), &group);
    Ok(Row {
        spec,
        group,
        invariants_ok,
        fixture,
    })
}

pub fn run(args: Args) -> Result<Status> {
    let eps = args.eps.get();
    let family = GroupFamily::from_projective(args.projective);
    let corpus = fixtures(args.fixtures.as_deref())?;
    let table: Vec<&FixtureRow> = corpus
        .iter()
        .filter(|r| r.is_table_row() && r.family == family && r.n() == args.n && r.applies_to(eps))
        .collect();
    let lookup = |parts: &[u32]| table.iter().copied().find(|r| r.partition == parts);

    let specs: Vec<Spec> = Partitions::new(args.n)
        .map(|p| Spec::new(args.q.clone(), eps, p))
        .collect::<Result<_>>()?;
    let rows: Vec<Row> = specs
        .into_par_iter()
        .map(|spec| {
            let fx = lookup(spec.partition());
            build(spec, family, args.verify_canonical, fx)
        })
        .collect::<Result<_>>()?;

    let matched = rows
        .iter()
        .filter(|r| r.fixture == FixtureCheck::Match)
        .count();
    let mismatched = rows
        .iter()
        .filter(|r| r.fixture == FixtureCheck::Mismatch)
        .count();
    let bad = rows.iter().filter(|r| !r.invariants_ok).count();

    match args.format {
        Format::Json => {
            let out: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut v = report_json(&r.spec, family, "chain", &r.group);
                    v["invariants_ok"] = Value::Bool(r.invariants_ok);
                    v["fixture"] = match r.fixture {
                        FixtureCheck::Match => "match".into(),
                        FixtureCheck::Mismatch => "mismatch".into(),
                        FixtureCheck::Absent => Value::Null,
                    };
                    v
                })
                .collect();
            println!("{}", Value::Array(out));
        }
        Format::Text => {
            let labels: Vec<String> = rows
                .iter()
                .map(|r| format_partition(r.spec.partition()))
                .collect();
            let groups: Vec<String> = rows.iter().map(|r| r.group.to_string()).collect();
            let lw = labels
                .iter()
                .map(String::len)
                .max()
                .unwrap_or(0)
                .max("partition".len());
            let gw = groups
                .iter()
                .map(String::len)
                .max()
                .unwrap_or(0)
                .max("group".len());
            println!(
                "{}, {} partitions",
                group_name(&rows[0].spec, family),
                rows.len()
            );
            println!(
                "{:<lw$}  {:<gw$}  {:>20}  check",
                "partition", "group", "order"
            );
            for ((row, label), group) in rows.iter().zip(&labels).zip(&groups) {
                let mut check = if row.invariants_ok {
                    "ok"
                } else {
                    "INVARIANT FAILED"
                }
                .to_string();
                match row.fixture {
                    FixtureCheck::Match => check.push_str(", fixture match"),
                    FixtureCheck::Mismatch => check.push_str(", fixture MISMATCH"),
                    FixtureCheck::Absent => {}
                }
                println!(
                    "{label:<lw$}  {group:<gw$}  {:>20}  {check}",
                    row.group.order().to_string()
                );
            }
            print!("{} rows", rows.len());
            if !table.is_empty() {
                print!(", {matched} fixture matches, {mismatched} mismatches");
            }
            println!(", {} invariant failures", bad);
        }
    }
    Ok(Status::from_ok(mismatched == 0 && bad == 0))
}
