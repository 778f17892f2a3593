//! Finite abelian groups as multisets of cyclic orders.
//!
//! Isomorphism is decided through invariant factors, which only need gcd
//! and lcm. Nothing here factors an integer.

use std::fmt;

use crate::arith::{gcd2, lcm2};
use crate::{Error, Result, Scalar};

/// `Z_{m_1} × … × Z_{m_k}`, stored normalized: every factor is at least 2
/// and the factors are sorted ascending. The trivial group has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup<T> {
    factors: Vec<T>,
}

/// Invariant factors `d_1 | d_2 | … | d_k`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantFactors<T>(pub Vec<T>);

impl<T: Scalar> AbelianGroup<T> {
    pub fn trivial() -> Self {
        AbelianGroup {
            factors: Vec::new(),
        }
    }

    /// Builds the group from cyclic orders. Signs are discarded since a
    /// cyclic group of order `n` has order `|n|`; factors of order 1 vanish.
    pub fn from_orders<I>(orders: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
    {
        let mut factors = Vec::new();
        for m in orders {
            if m.is_zero() {
                return Err(Error::invalid("cyclic factor of order zero"));
            }
            let m = m.abs();
            if !m.is_one() {
                factors.push(m);
            }
        }
        factors.sort();
        Ok(AbelianGroup { factors })
    }

    pub fn cyclic(m: T) -> Result<Self> {
        Self::from_orders([m])
    }

    pub fn factors(&self) -> &[T] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn order(&self) -> T {
        self.factors.iter().fold(T::one(), |acc, m| acc * m.clone())
    }

    pub fn invariant_factors(&self) -> InvariantFactors<T> {
        invariant_factors(&self.factors)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    /// The direct product `self × other`.
    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        factors.sort();
        AbelianGroup { factors }
    }
}

impl<T: Scalar> From<InvariantFactors<T>> for AbelianGroup<T> {
    fn from(d: InvariantFactors<T>) -> Self {
        AbelianGroup { factors: d.0 }
    }
}

/// Writes `Z3 x Z63 x Z63`, or `1` for the trivial group.
impl<T: fmt::Display> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, m) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

impl<T> InvariantFactors<T> {
    pub fn as_slice(&self) -> &[T] {
        &self.0
    }
}

/// Canonical invariant factors of `Z_{m_1} × … × Z_{m_k}`.
///
/// Each pair `(x_i, x_j)`, `i < j`, is replaced by `(gcd, lcm)`. After slot
/// `i` has met every later slot it holds the gcd of the remaining multiset
/// and divides all of them, so one sweep leaves a divisibility chain.
pub fn invariant_factors<T: Scalar>(orders: &[T]) -> InvariantFactors<T> {
    let mut xs: Vec<T> = orders
        .iter()
        .filter(|m| !m.is_zero())
        .map(|m| m.abs())
        .filter(|m| !m.is_one())
        .collect();
    let k = xs.len();
    for i in 0..k {
        for j in i + 1..k {
            if xs[j].is_multiple_of(&xs[i]) {
                continue;
            }
            let g = gcd2(&xs[i], &xs[j]);
            let l = lcm2(&xs[i], &xs[j]);
            xs[i] = g;
            xs[j] = l;
        }
    }
    xs.retain(|m| !m.is_one());
    InvariantFactors(xs)
}

pub fn is_isomorphic<T: Scalar>(g1: &AbelianGroup<T>, g2: &AbelianGroup<T>) -> bool {
    g1.is_isomorphic(g2)
}

pub fn order<T: Scalar>(g: &AbelianGroup<T>) -> T {
    g.order()
}
