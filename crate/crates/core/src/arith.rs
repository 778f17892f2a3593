//! Signed integer helpers around the quantity `εq`.
//!
//! Everything stays signed until a value becomes a group order; gcd and lcm
//! are always reported positive.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result, Scalar};

/// The sign `ε`: `Plus` for the linear groups, `Minus` for the unitary ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Eps {
    Plus,
    Minus,
}

impl Eps {
    pub const BOTH: [Eps; 2] = [Eps::Plus, Eps::Minus];

    pub fn as_i32(self) -> i32 {
        match self {
            Eps::Plus => 1,
            Eps::Minus => -1,
        }
    }

    pub fn from_i32(v: i32) -> Result<Self> {
        match v {
            1 => Ok(Eps::Plus),
            -1 => Ok(Eps::Minus),
            _ => Err(Error::invalid(format!("eps must be +1 or -1, got {v}"))),
        }
    }

    /// `ε·x`.
    pub fn apply<T: Scalar>(self, x: &T) -> T {
        match self {
            Eps::Plus => x.clone(),
            Eps::Minus => -x.clone(),
        }
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eps::Plus => "+1",
            Eps::Minus => "-1",
        })
    }
}

impl FromStr for Eps {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "+1" | "+" => Ok(Eps::Plus),
            "-1" | "-" => Ok(Eps::Minus),
            other => Err(Error::invalid(format!(
                "eps must be +1 or -1, got `{other}`"
            ))),
        }
    }
}

/// `(εq)^k - 1` together with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VeqTerm<T> {
    pub q: T,
    pub eps: Eps,
    pub k: u32,
    pub value: T,
}

pub(crate) fn gcd2<T: Scalar>(a: &T, b: &T) -> T {
    a.gcd(b)
}

/// Positive lcm of two nonzero values, as `|a / gcd(a, b) * b|`.
pub(crate) fn lcm2<T: Scalar>(a: &T, b: &T) -> T {
    let g = a.gcd(b);
    (a.clone() / g * b.clone()).abs()
}

fn check_nonempty_nonzero<T: Scalar>(xs: &[T], what: &str) -> Result<()> {
    if xs.is_empty() {
        return Err(Error::invalid(format!("{what} of an empty list")));
    }
    if let Some(pos) = xs.iter().position(|x| x.is_zero()) {
        return Err(Error::invalid(format!("{what}: element {pos} is zero")));
    }
    Ok(())
}

/// Positive gcd of a nonempty list of nonzero integers.
pub fn gcd_all<T: Scalar>(xs: &[T]) -> Result<T> {
    check_nonempty_nonzero(xs, "gcd")?;
    let mut acc = xs[0].abs();
    for x in &xs[1..] {
        if acc.is_one() {
            break;
        }
        acc = gcd2(&acc, x);
    }
    Ok(acc)
}

/// Positive lcm of a nonempty list of nonzero integers. No factorization.
pub fn lcm_all<T: Scalar>(xs: &[T]) -> Result<T> {
    check_nonempty_nonzero(xs, "lcm")?;
    Ok(xs[1..].iter().fold(xs[0].abs(), |acc, x| lcm2(&acc, x)))
}

/// `εq` as a signed value.
pub fn veq<T: Scalar>(q: &T, eps: Eps) -> T {
    eps.apply(q)
}

fn check_q<T: Scalar>(q: &T) -> Result<()> {
    let two = T::one() + T::one();
    if *q < two {
        return Err(Error::invalid(format!("q must be at least 2, got {q}")));
    }
    Ok(())
}

/// Signed `(εq)^k - 1` without validation; `k = 0` gives zero.
pub(crate) fn veq_pow_m1<T: Scalar>(veq: &T, k: u32) -> T {
    num_traits::pow(veq.clone(), k as usize) - T::one()
}

/// `(εq)^k - 1`. Negative exactly when `ε = -1` and `k` is odd.
pub fn veq_pow_minus_one<T: Scalar>(q: &T, eps: Eps, k: u32) -> Result<VeqTerm<T>> {
    check_q(q)?;
    if k < 1 {
        return Err(Error::invalid("exponent k must be at least 1"));
    }
    let value = veq_pow_m1(&veq(q, eps), k);
    Ok(VeqTerm {
        q: q.clone(),
        eps,
        k,
        value,
    })
}

/// Checks `|((εq)^a - 1, (εq)^b - 1)| = |(εq)^(a,b) - 1|`.
pub fn check_eqab<T: Scalar>(q: &T, eps: Eps, a: u32, b: u32) -> Result<bool> {
    let x = veq_pow_minus_one(q, eps, a)?.value;
    let y = veq_pow_minus_one(q, eps, b)?.value;
    let g = veq_pow_minus_one(q, eps, num_integer::gcd(a, b))?.value;
    Ok(gcd2(&x, &y) == g.abs())
}

/// Trial-division factorization, primes ascending. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut strip = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    strip(2, &mut n);
    let mut p = 3u64;
    while p.saturating_mul(p) <= n {
        strip(p, &mut n);
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// True iff `n = p^k` for a prime `p` and `k ≥ 1`.
pub fn is_prime_power(n: u64) -> bool {
    factorize(n).len() == 1
}
