//! Cyclic decompositions of `Z_{m_1} × … × Z_{m_s}`.
//!
//! [`chain_decompose`] is the linear gcd/lcm chain
//!
//! ```text
//! a_1 = (m_1, …, m_s)
//! a_i = [m_{i-1}, (m_i, …, m_s)]      2 ≤ i ≤ s
//! ```
//!
//! which is isomorphic to the input but depends on its ordering.
//! [`canonical_decompose`] produces the invariant factors `d_1 | … | d_s`
//! in one of three ways: determinant divisors over all `k`-subsets, lcm of
//! gcds over all `(s-k+1)`-subsets, or per-prime exponent sorting. The first
//! two enumerate `2^s` subsets and are refused above [`COMBINATORIAL_GUARD`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::abelian::AbelianGroup;
use crate::arith::{factorize, gcd2, lcm2};
use crate::{Error, Result, Scalar};

/// Largest `s` accepted by the subset-enumerating methods (about 4M subsets).
pub const COMBINATORIAL_GUARD: usize = 22;

/// Largest input accepted by [`prime_profile`].
pub const FACTORIZATION_BOUND: u64 = 1 << 48;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainResult<T> {
    /// `a_1, …, a_s`, all positive.
    pub a: Vec<T>,
    /// Number of gcd and lcm evaluations spent.
    pub gcd_lcm_calls: usize,
}

impl<T: Scalar> ChainResult<T> {
    pub fn group(&self) -> AbelianGroup<T> {
        AbelianGroup::from_orders(self.a.iter().cloned()).expect("chain values are positive")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalResult<T> {
    /// `d_1, …, d_s`; leading entries may be 1.
    pub d: Vec<T>,
    /// Determinant divisors `δ_0 = 1, δ_1, …, δ_s`.
    pub delta: Vec<T>,
}

impl<T: Scalar> CanonicalResult<T> {
    pub fn group(&self) -> AbelianGroup<T> {
        AbelianGroup::from_orders(self.d.iter().cloned()).expect("invariant factors are positive")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CanonicalMethod {
    /// `δ_k` = gcd of all products of `k` inputs.
    Subsets,
    /// `d_k` = lcm of the gcds of all `(s-k+1)`-subsets.
    LcmOfGcds,
    /// Sorted prime exponents of the inputs.
    Factorization,
}

impl CanonicalMethod {
    pub const ALL: [CanonicalMethod; 3] = [
        CanonicalMethod::Subsets,
        CanonicalMethod::LcmOfGcds,
        CanonicalMethod::Factorization,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CanonicalMethod::Subsets => "subsets",
            CanonicalMethod::LcmOfGcds => "lcm_of_gcds",
            CanonicalMethod::Factorization => "factorization",
        }
    }
}

impl fmt::Display for CanonicalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CanonicalMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CanonicalMethod::ALL
            .into_iter()
            .find(|m| m.label() == s)
            .ok_or_else(|| Error::invalid(format!("unknown canonical method `{s}`")))
    }
}

/// Per prime `p`, the exponents of `p` in the inputs sorted ascending
/// (`ν_{p,1} ≤ … ≤ ν_{p,s}`), zeros included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeExponentProfile {
    pub len: usize,
    pub exponents: BTreeMap<u64, Vec<u32>>,
}

impl PrimeExponentProfile {
    /// `d_k = ∏_p p^{ν_{p,k}}` for `k = 1..=s`.
    pub fn invariant_factors<T: Scalar>(&self) -> Vec<T> {
        let mut d = vec![T::one(); self.len];
        for (&p, nu) in &self.exponents {
            let p = T::from_u64(p).expect("prime fits the scalar type");
            for (dk, &e) in d.iter_mut().zip(nu) {
                *dk = dk.clone() * num_traits::pow(p.clone(), e as usize);
            }
        }
        d
    }

    /// `δ_k = ∏_p p^{ν_{p,1} + … + ν_{p,k}}` for `k = 0..=s`.
    pub fn determinant_divisors<T: Scalar>(&self) -> Vec<T> {
        prefix_products(&self.invariant_factors())
    }
}

fn positive_inputs<T: Scalar>(m: &[T]) -> Result<Vec<T>> {
    if m.is_empty() {
        return Err(Error::invalid("decomposition of an empty list"));
    }
    if let Some(pos) = m.iter().position(|x| x.is_zero()) {
        return Err(Error::invalid(format!("input {pos} is zero")));
    }
    Ok(m.iter().map(|x| x.abs()).collect())
}

fn prefix_products<T: Scalar>(d: &[T]) -> Vec<T> {
    let mut delta = Vec::with_capacity(d.len() + 1);
    delta.push(T::one());
    for dk in d {
        let next = delta.last().unwrap().clone() * dk.clone();
        delta.push(next);
    }
    delta
}

/// The chain `a_1, …, a_s` with `Z_{a_1} × … × Z_{a_s} ≅ Z_{m_1} × … × Z_{m_s}`.
///
/// One suffix-gcd sweep then one lcm pass: `2(s-1)` gcd/lcm calls.
pub fn chain_decompose<T: Scalar>(m: &[T]) -> Result<ChainResult<T>> {
    let m = positive_inputs(m)?;
    let s = m.len();
    let mut calls = 0;

    let mut suffix = m.clone();
    for i in (0..s - 1).rev() {
        suffix[i] = gcd2(&m[i], &suffix[i + 1]);
        calls += 1;
    }

    let mut a = Vec::with_capacity(s);
    a.push(suffix[0].clone());
    for i in 1..s {
        a.push(lcm2(&m[i - 1], &suffix[i]));
        calls += 1;
    }
    Ok(ChainResult {
        a,
        gcd_lcm_calls: calls,
    })
}

fn check_guard(s: usize, method: CanonicalMethod) -> Result<()> {
    if s > COMBINATORIAL_GUARD {
        return Err(Error::ResourceLimit {
            guard: "COMBINATORIAL_GUARD",
            detail: format!(
                "method {method} enumerates 2^{s} subsets; at most {COMBINATORIAL_GUARD} inputs allowed"
            ),
        });
    }
    Ok(())
}

/// Invariant factors `d_1 | … | d_s` and determinant divisors of `diag(m)`.
pub fn canonical_decompose<T: Scalar>(
    m: &[T],
    method: CanonicalMethod,
) -> Result<CanonicalResult<T>> {
    let m = positive_inputs(m)?;
    match method {
        CanonicalMethod::Subsets => {
            check_guard(m.len(), method)?;
            let delta = determinant_divisors(&m);
            let mut d = Vec::with_capacity(m.len());
            for k in 1..delta.len() {
                let (q, r) = delta[k].div_rem(&delta[k - 1]);
                if !r.is_zero() {
                    return Err(Error::Internal(format!(
                        "determinant divisor δ_{k} = {} not divisible by δ_{} = {}",
                        delta[k],
                        k - 1,
                        delta[k - 1]
                    )));
                }
                d.push(q);
            }
            Ok(CanonicalResult { d, delta })
        }
        CanonicalMethod::LcmOfGcds => {
            check_guard(m.len(), method)?;
            let d = lcm_of_gcds(&m);
            let delta = prefix_products(&d);
            Ok(CanonicalResult { d, delta })
        }
        CanonicalMethod::Factorization => {
            let profile = prime_profile(&m)?;
            Ok(CanonicalResult {
                d: profile.invariant_factors(),
                delta: profile.determinant_divisors(),
            })
        }
    }
}

/// `δ_k` = gcd over all `k`-subsets of the subset product, `k = 0..=s`.
fn determinant_divisors<T: Scalar>(m: &[T]) -> Vec<T> {
    fn visit<T: Scalar>(m: &[T], start: usize, size: usize, prod: &T, delta: &mut [T]) {
        for j in start..m.len() {
            let p = prod.clone() * m[j].clone();
            delta[size + 1] = gcd2(&delta[size + 1], &p);
            visit(m, j + 1, size + 1, &p, delta);
        }
    }
    let mut delta = vec![T::zero(); m.len() + 1];
    delta[0] = T::one();
    visit(m, 0, 0, &T::one(), &mut delta);
    delta
}

/// `d_k` = lcm over all `(s-k+1)`-subsets of the subset gcd, `k = 1..=s`.
fn lcm_of_gcds<T: Scalar>(m: &[T]) -> Vec<T> {
    fn visit<T: Scalar>(m: &[T], start: usize, size: usize, g: &T, d: &mut [T]) {
        let s = m.len();
        for j in start..s {
            let h = if size == 0 {
                m[j].clone()
            } else {
                gcd2(g, &m[j])
            };
            // a subset of size j+1 contributes to d_{s-size}, 0-based s-size-1
            let k = s - (size + 1);
            d[k] = lcm2(&d[k], &h);
            visit(m, j + 1, size + 1, &h, d);
        }
    }
    let mut d = vec![T::one(); m.len()];
    visit(m, 0, 0, &T::zero(), &mut d);
    d
}

/// Exact prime-exponent profile by trial division. Inputs must not exceed
/// [`FACTORIZATION_BOUND`].
pub fn prime_profile<T: Scalar>(m: &[T]) -> Result<PrimeExponentProfile> {
    let m = positive_inputs(m)?;
    let s = m.len();
    let mut exponents: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for (i, x) in m.iter().enumerate() {
        let x = x
            .to_u64()
            .filter(|&v| v <= FACTORIZATION_BOUND)
            .ok_or_else(|| Error::ResourceLimit {
                guard: "FACTORIZATION_BOUND",
                detail: format!("input {i} = {x} exceeds 2^48"),
            })?;
        for (p, e) in factorize(x) {
            exponents.entry(p).or_insert_with(|| vec![0; s])[i] = e;
        }
    }
    for nu in exponents.values_mut() {
        nu.sort_unstable();
    }
    Ok(PrimeExponentProfile { len: s, exponents })
}
