use std::path::PathBuf;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tori::arith::check_eqab;
use tori::decomp::{canonical_decompose, chain_decompose, prime_profile};
use tori::tori::{
    corollary_paths, torus_order, torus_psl, torus_psl_canonical, torus_sl_canonical,
};
use tori::{AbelianGroup, CanonicalMethod, Eps, GroupFamily, Partitions, Result, Spec};

use crate::common::{fixtures, Status};
use crate::decompose::fast_path;

#[derive(clap::Args)]
pub struct Args {
    /// Largest n for the exhaustive torus checks.
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    /// Values of q, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,7,8,9")]
    q_set: Vec<u64>,
    /// Seed for the random multisets.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random multisets.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Fixture corpus to check instead of the built-in one.
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Default)]
struct Tally {
    passed: usize,
    failed: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.first_failure.get_or_insert_with(what);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.passed += other.passed;
        self.failed += other.failed;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }
}

fn eqab(qs: &[u64]) -> Result<Tally> {
    let mut t = Tally::default();
    for &q in qs {
        let q = BigInt::from(q);
        for eps in Eps::BOTH {
            for a in 1..=30 {
                for b in 1..=30 {
                    let ok = check_eqab(&q, eps, a, b)?;
                    t.record(ok, || format!("q={q} eps={eps} a={a} b={b}"));
                }
            }
        }
    }
    Ok(t)
}

fn multisets(seed: u64, samples: usize) -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for _ in 0..samples {
        let len = rng.gen_range(1..=8);
        let m: Vec<BigInt> = (0..len)
            .map(|_| BigInt::from(rng.gen_range(1..=1_000_000u64)))
            .collect();
        let reference = chain_decompose(&m)?.group().invariant_factors();
        let mut ok = true;
        for method in CanonicalMethod::ALL {
            ok &= canonical_decompose(&m, method)?.group().invariant_factors() == reference;
        }
        let rebuilt = AbelianGroup::from_orders(prime_profile(&m)?.invariant_factors::<BigInt>())?;
        ok &= rebuilt.invariant_factors() == reference;
        t.record(ok, || format!("multiset {m:?}"));
    }
    Ok(t)
}

// Rotations and the reversal of the parts, and of the a_2..a_s relabel.
fn orderings(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 0..k.max(1) {
        out.push((0..k).map(|i| (i + r) % k).collect());
    }
    out.push((0..k).rev().collect());
    out
}

fn torus_checks(spec: &Spec) -> Result<Tally> {
    let mut t = Tally::default();
    for family in [GroupFamily::Sl, GroupFamily::Psl] {
        let projective = family.is_projective();
        let g = fast_path(spec, family)?;
        let canon = if projective {
            torus_psl_canonical(spec)?
        } else {
            torus_sl_canonical(spec)?
        };
        t.record(g.is_isomorphic(&canon), || {
            format!("{family} {spec}: fast {g} vs canonical {canon}")
        });
        for (case, h) in corollary_paths(spec, projective)? {
            t.record(h.is_isomorphic(&g), || {
                format!("{family} {spec}: {case} {h} vs fast {g}")
            });
        }
        let order = torus_order(spec, projective)?;
        t.record(g.order() == order, || {
            format!("{family} {spec}: order {} vs {order}", g.order())
        });

        let parts = spec.partition();
        for perm in orderings(parts.len()) {
            let other = spec.with_partition(perm.iter().map(|&i| parts[i]).collect())?;
            let h = fast_path(&other, family)?;
            t.record(h.is_isomorphic(&g), || {
                format!("{family} {other}: reordering gives {h}, not {g}")
            });
        }
        if projective {
            for relabel in orderings(parts.len() - 1) {
                let h = torus_psl(spec, Some(&relabel))?;
                t.record(h.is_isomorphic(&g), || {
                    format!("{spec} relabel {relabel:?}: {h}, not {g}")
                });
            }
        }
    }
    Ok(t)
}

fn tori(n_max: u32, qs: &[u64]) -> Result<Tally> {
    let mut specs = Vec::new();
    for n in 1..=n_max {
        for parts in Partitions::new(n) {
            for &q in qs {
                for eps in Eps::BOTH {
                    specs.push(Spec::new(BigInt::from(q), eps, parts.clone())?);
                }
            }
        }
    }
    specs
        .par_iter()
        .map(torus_checks)
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

fn fixture_rows(args: &Args) -> Result<Tally> {
    let mut t = Tally::default();
    for row in fixtures(args.fixtures.as_deref())? {
        if row.n() > args.n_max {
            continue;
        }
        for &q in &args.q_set {
            for eps in Eps::BOTH.into_iter().filter(|&e| row.applies_to(e)) {
                let q = BigInt::from(q);
                let spec = Spec::new(q.clone(), eps, row.partition.clone())?;
                let g = fast_path(&spec, row.family)?;
                let ok = row
                    .evaluate(&q, eps)
                    .is_ok_and(|want| want.is_isomorphic(&g));
                t.record(ok, || format!("fixture `{row}` at q={q} eps={eps}"));
            }
        }
    }
    Ok(t)
}

pub fn run(args: Args) -> Result<Status> {
    if args.q_set.iter().any(|&q| q < 2) {
        return Err(tori::Error::InvalidArgument(
            "every q in --q-set must be at least 2".into(),
        ));
    }
    let sections = [
        ("eqab sweep", eqab(&args.q_set)?),
        ("random multisets", multisets(args.seed, args.samples)?),
        ("torus paths", tori(args.n_max, &args.q_set)?),
        ("fixture rows", fixture_rows(&args)?),
    ];
    let mut failed = 0;
    let mut passed = 0;
    for (name, t) in &sections {
        println!("{name:<17} {:>8} passed {:>4} failed", t.passed, t.failed);
        if let Some(f) = &t.first_failure {
            println!("  first failure: {f}");
        }
        passed += t.passed;
        failed += t.failed;
    }
    println!("{:<17} {passed:>8} passed {failed:>4} failed", "total");
    Ok(Status::from_ok(failed == 0))
}
