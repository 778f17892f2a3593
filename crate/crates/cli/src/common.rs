use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Number, Value};
use tori::arith::is_prime_power;
use tori::exprfix::{fixture_rows, load_fixtures};
use tori::partition::parse_partition;
use tori::{Eps, Error, FixtureRow, Group, GroupFamily, Result, Spec};

pub enum Status {
    Ok,
    Mismatch,
}

impl Status {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Ok
        } else {
            Status::Mismatch
        }
    }
}

/// 2 for bad input, 3 for a tripped resource guard, 1 otherwise.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidArgument(_) | Error::Parse(_) | Error::Fixture { .. } => 2,
        Error::ResourceLimit { .. } => 3,
        _ => 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// `--eps +1|-1`, or the `--sl` / `--su` shorthands. Defaults to `+1`.
#[derive(clap::Args, Clone, Debug)]
pub struct EpsArg {
    /// Sign of q: +1 for the linear groups, -1 for the unitary ones.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["sl", "su"])]
    eps: Option<Eps>,
    /// Same as --eps +1.
    #[arg(long, conflicts_with = "su")]
    sl: bool,
    /// Same as --eps -1.
    #[arg(long)]
    su: bool,
}

impl EpsArg {
    pub fn get(&self) -> Eps {
        match (self.eps, self.su) {
            (Some(e), _) => e,
            (None, true) => Eps::Minus,
            (None, false) => Eps::Plus,
        }
    }
}

/// A comma separated partition, `3,2,2` or `3,2^2`.
#[derive(Clone, Debug)]
pub struct PartitionArg(pub Vec<u32>);

impl FromStr for PartitionArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        parse_partition(s).map(PartitionArg)
    }
}

/// Rejects q that is not a prime power (used with `--strict`).
pub fn check_strict(q: &BigInt) -> Result<()> {
    match q.to_u64() {
        Some(v) if is_prime_power(v) => Ok(()),
        Some(_) => Err(Error::InvalidArgument(format!(
            "q = {q} is not a prime power"
        ))),
        None => Err(Error::InvalidArgument(format!(
            "q = {q} is too large for the prime-power check"
        ))),
    }
}

pub fn fixtures(path: Option<&std::path::Path>) -> Result<Vec<FixtureRow>> {
    match path {
        Some(p) => load_fixtures(p),
        None => Ok(fixture_rows()),
    }
}

/// `SL_10(2)`, `PSU_24(3)`.
pub fn group_name(spec: &Spec, family: GroupFamily) -> String {
    let kind = match spec.eps() {
        Eps::Plus => "L",
        Eps::Minus => "U",
    };
    let p = if family.is_projective() { "P" } else { "" };
    format!("{p}S{kind}_{}({})", spec.n(), spec.q())
}

fn number(x: &BigInt) -> Value {
    // arbitrary_precision keeps the digits verbatim
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

/// The stable per-decomposition JSON record.
pub fn report_json(spec: &Spec, family: GroupFamily, method: &str, group: &Group) -> Value {
    json!({
        "family": family.to_string(),
        "q": number(spec.q()),
        "eps": spec.eps().as_i32(),
        "partition": spec.partition(),
        "projective": family.is_projective(),
        "method": method,
        "factors": group.factors().iter().map(number).collect::<Vec<_>>(),
        "order": group.order().to_string(),
    })
}
