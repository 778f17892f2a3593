use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tori::decomp::{canonical_decompose, chain_decompose, COMBINATORIAL_GUARD};
use tori::{CanonicalMethod, Result, Spec};

use crate::common::{EpsArg, Status};

#[derive(clap::Args)]
pub struct Args {
    /// Largest number of parts. Subset enumeration stops at the guard.
    #[arg(long, default_value_t = 16)]
    s_max: usize,
    #[arg(long, default_value = "2")]
    q: BigInt,
    #[command(flatten)]
    eps: EpsArg,
    /// Timings per point; the minimum is reported.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    repeat: u32,
    /// Largest s timed with subset enumeration, capped at the guard.
    #[arg(long, default_value_t = COMBINATORIAL_GUARD)]
    subsets_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn min_nanos<F: FnMut() -> Result<()>>(repeat: u32, mut f: F) -> Result<u128> {
    let mut best = u128::MAX;
    for _ in 0..repeat {
        let start = Instant::now();
        f()?;
        best = best.min(start.elapsed().as_nanos());
    }
    Ok(best)
}

pub fn run(args: Args) -> Result<Status> {
    let eps = args.eps.get();
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    println!("s,method,nanoseconds,input");
    for s in 1..=args.s_max {
        let random: Vec<u32> = (0..s).map(|_| rng.gen_range(1..=12)).collect();
        for (input, parts) in [("ones", vec![1; s]), ("random", random)] {
            let m = Spec::new(args.q.clone(), eps, parts)?.m();
            let chain = min_nanos(args.repeat, || {
                std::hint::black_box(chain_decompose(std::hint::black_box(&m))?);
                Ok(())
            })?;
            println!("{s},chain,{chain},{input}");
            if s <= args.subsets_max.min(COMBINATORIAL_GUARD) {
                let subsets = min_nanos(args.repeat, || {
                    std::hint::black_box(canonical_decompose(&m, CanonicalMethod::Subsets)?);
                    Ok(())
                })?;
                println!("{s},subsets,{subsets},{input}");
            }
        }
    }
    Ok(Status::Ok)
}
