//! Maximal tori of `SL_n(εq)` and their images in `PSL_n(εq)`.
//!
//! A torus is named by a partition `n = n_1 + … + n_s`. With `v = εq`,
//! `m_i = v^{n_i} - 1` and `t = (n_1, …, n_s)`, the fast path uses
//!
//! ```text
//! a_1 = v^t - 1
//! a_i = [v^{n_{i-1}} - 1, v^{(n_i, …, n_s)} - 1]     2 ≤ i ≤ s
//! T  ≅ Z_{a_1 / (v-1)} × Z_{a_2} × … × Z_{a_s}
//! ```
//!
//! and for the projective image a second chain `b_2, …, b_s` over
//! `a_2, …, a_s`, corrected by `d = (n, v-1)` and `d' = (n/t, v-1)`.
//! The canonical path takes the invariant factors of `Z_{m_1} × … × Z_{m_s}`
//! and applies the same corrections to its first one or two factors.
//!
//! Values are kept signed; only group orders are taken in absolute value.

use std::fmt;

use crate::abelian::AbelianGroup;
use crate::arith::{gcd2, lcm2, veq, veq_pow_m1};
use crate::decomp::{canonical_decompose, chain_decompose, CanonicalMethod};
use crate::{Eps, Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    /// The torus itself, in `SL_n(εq)`.
    Sl,
    /// Its image in `PSL_n(εq)`.
    Psl,
}

impl GroupFamily {
    pub fn is_projective(self) -> bool {
        self == GroupFamily::Psl
    }

    pub fn from_projective(projective: bool) -> Self {
        if projective {
            GroupFamily::Psl
        } else {
            GroupFamily::Sl
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupFamily::Sl => "SL",
            GroupFamily::Psl => "PSL",
        })
    }
}

/// `(q, ε, n_1 + … + n_s)`: one conjugacy class of maximal tori.
///
/// The order of the parts is kept as given since the chain values depend
/// on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSpec<T> {
    q: T,
    eps: Eps,
    partition: Vec<u32>,
}

impl<T: Scalar> TorusSpec<T> {
    /// `q` must be at least 2 and every part positive. Prime-power `q` is
    /// not enforced.
    pub fn new(q: T, eps: Eps, partition: Vec<u32>) -> Result<Self> {
        if q < T::one() + T::one() {
            return Err(Error::invalid(format!("q must be at least 2, got {q}")));
        }
        if partition.is_empty() {
            return Err(Error::invalid("partition must have at least one part"));
        }
        if partition.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if partition
            .iter()
            .try_fold(0u32, |acc, &p| acc.checked_add(p))
            .is_none()
        {
            return Err(Error::invalid("partition sum overflows"));
        }
        Ok(TorusSpec { q, eps, partition })
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn eps(&self) -> Eps {
        self.eps
    }

    pub fn partition(&self) -> &[u32] {
        &self.partition
    }

    pub fn n(&self) -> u32 {
        self.partition.iter().sum()
    }

    pub fn s(&self) -> usize {
        self.partition.len()
    }

    /// `t = (n_1, …, n_s)`.
    pub fn t(&self) -> u32 {
        self.partition
            .iter()
            .fold(0, |g, &p| num_integer::gcd(g, p))
    }

    /// `εq`.
    pub fn veq(&self) -> T {
        veq(&self.q, self.eps)
    }

    /// Signed `(εq)^k - 1`.
    pub fn veq_term(&self, k: u32) -> T {
        veq_pow_m1(&self.veq(), k)
    }

    /// `m_i = (εq)^{n_i} - 1`, signed.
    pub fn m(&self) -> Vec<T> {
        let v = self.veq();
        self.partition.iter().map(|&k| veq_pow_m1(&v, k)).collect()
    }

    /// `d = (n, εq - 1)`.
    pub fn d(&self) -> T {
        let n = T::from_u32(self.n()).expect("n fits the scalar type");
        gcd2(&n, &self.veq_term(1))
    }

    /// `d' = (n/t, εq - 1)`.
    pub fn d_prime(&self) -> T {
        let nt = T::from_u32(self.n() / self.t()).expect("n fits the scalar type");
        gcd2(&nt, &self.veq_term(1))
    }

    pub fn with_partition(&self, partition: Vec<u32>) -> Result<Self> {
        TorusSpec::new(self.q.clone(), self.eps, partition)
    }
}

impl<T: fmt::Display> fmt::Display for TorusSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partition.iter().map(u32::to_string).collect();
        write!(f, "q={} eps={} [{}]", self.q, self.eps, parts.join(","))
    }
}

fn exact_div<T: Scalar>(num: T, den: &T, what: &str) -> Result<T> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

/// The chain `a_1, …, a_s` of a torus. `a_1` keeps its sign, the lcm values
/// are positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusChain<T> {
    pub a: Vec<T>,
    /// `a_1 / (εq - 1)`.
    pub a1_prime: T,
}

pub fn torus_chain<T: Scalar>(spec: &TorusSpec<T>) -> Result<TorusChain<T>> {
    let v = spec.veq();
    let parts = spec.partition();
    let s = parts.len();

    let mut tail_gcd = parts.to_vec();
    for i in (0..s - 1).rev() {
        tail_gcd[i] = num_integer::gcd(parts[i], tail_gcd[i + 1]);
    }

    let mut a = Vec::with_capacity(s);
    a.push(veq_pow_m1(&v, tail_gcd[0]));
    for i in 1..s {
        let prev = veq_pow_m1(&v, parts[i - 1]);
        let tail = veq_pow_m1(&v, tail_gcd[i]);
        a.push(lcm2(&prev, &tail));
    }
    let a1_prime = exact_div(a[0].clone(), &veq_pow_m1(&v, 1), "a_1 / (εq - 1)")?;
    Ok(TorusChain { a, a1_prime })
}

/// `T ≅ Z_{a_1'} × Z_{a_2} × … × Z_{a_s}`.
pub fn torus_sl<T: Scalar>(spec: &TorusSpec<T>) -> Result<AbelianGroup<T>> {
    let chain = torus_chain(spec)?;
    AbelianGroup::from_orders(std::iter::once(chain.a1_prime).chain(chain.a.into_iter().skip(1)))
}

/// Constants of the projective chain. For `s = 1` the list `b` is empty and
/// `b2_prime` is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveParams<T> {
    pub t: u32,
    pub d: T,
    pub d_prime: T,
    /// `b_2, …, b_s`.
    pub b: Vec<T>,
    pub b1_prime: T,
    pub b2_prime: Option<T>,
}

fn check_relabel(relabel: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    if relabel.len() != len {
        return Err(Error::invalid(format!(
            "relabel must permute {len} positions, got {} entries",
            relabel.len()
        )));
    }
    for &i in relabel {
        if i >= len || std::mem::replace(&mut seen[i], true) {
            return Err(Error::invalid(format!(
                "relabel {relabel:?} is not a permutation"
            )));
        }
    }
    Ok(())
}

/// `relabel`, if given, lists which of `a_2, …, a_s` (0-based) takes each
/// slot before the `b` chain is formed.
pub fn projective_params<T: Scalar>(
    spec: &TorusSpec<T>,
    relabel: Option<&[usize]>,
) -> Result<ProjectiveParams<T>> {
    let chain = torus_chain(spec)?;
    let d = spec.d();
    let d_prime = spec.d_prime();
    if !d.is_multiple_of(&d_prime) {
        return Err(Error::Internal(format!(
            "d' = {d_prime} does not divide d = {d}"
        )));
    }
    let v_minus_1 = spec.veq_term(1).abs();
    let a1 = chain.a[0].abs();

    let rest = &chain.a[1..];
    if rest.is_empty() {
        if let Some(r) = relabel {
            check_relabel(r, 0)?;
        }
        let b1_prime = exact_div(a1, &(d.clone() * v_minus_1), "a_1 / d(εq - 1)")?;
        return Ok(ProjectiveParams {
            t: spec.t(),
            d,
            d_prime,
            b: Vec::new(),
            b1_prime,
            b2_prime: None,
        });
    }

    let ordered: Vec<T> = match relabel {
        Some(r) => {
            check_relabel(r, rest.len())?;
            r.iter().map(|&i| rest[i].clone()).collect()
        }
        None => rest.to_vec(),
    };
    let b = chain_decompose(&ordered)?.a;
    let b1_prime = exact_div(
        d_prime.clone() * a1,
        &(d.clone() * v_minus_1),
        "d' a_1 / d(εq - 1)",
    )?;
    let b2_prime = exact_div(b[0].clone(), &d_prime, "b_2 / d'")?;
    Ok(ProjectiveParams {
        t: spec.t(),
        d,
        d_prime,
        b,
        b1_prime,
        b2_prime: Some(b2_prime),
    })
}

/// `T̄ ≅ Z_{b_1'} × Z_{b_2'} × Z_{b_3} × … × Z_{b_s}`.
pub fn torus_psl<T: Scalar>(
    spec: &TorusSpec<T>,
    relabel: Option<&[usize]>,
) -> Result<AbelianGroup<T>> {
    let p = projective_params(spec, relabel)?;
    let mut orders = vec![p.b1_prime];
    orders.extend(p.b2_prime);
    orders.extend(p.b.into_iter().skip(1));
    AbelianGroup::from_orders(orders)
}

/// Invariant factors of `Z_{m_1} × … × Z_{m_s}` with the first one or two
/// corrected for the torus (or its projective image).
pub fn torus_canonical_with<T: Scalar>(
    spec: &TorusSpec<T>,
    family: GroupFamily,
    method: CanonicalMethod,
) -> Result<AbelianGroup<T>> {
    let m: Vec<T> = spec.m().into_iter().map(|x| x.abs()).collect();
    let mut d = canonical_decompose(&m, method)?.d;
    let v_minus_1 = spec.veq_term(1).abs();
    match family {
        GroupFamily::Sl => {
            d[0] = exact_div(d[0].clone(), &v_minus_1, "d_1 / (εq - 1)")?;
        }
        GroupFamily::Psl if d.len() == 1 => {
            d[0] = exact_div(d[0].clone(), &(spec.d() * v_minus_1), "d_1 / d(εq - 1)")?;
        }
        GroupFamily::Psl => {
            let dd = spec.d();
            let dp = spec.d_prime();
            d[0] = exact_div(
                dp.clone() * d[0].clone(),
                &(dd * v_minus_1),
                "d' d_1 / d(εq - 1)",
            )?;
            d[1] = exact_div(d[1].clone(), &dp, "d_2 / d'")?;
        }
    }
    AbelianGroup::from_orders(d)
}

/// Canonical form of `T`, via lcm of gcds over subsets of the parts.
pub fn torus_sl_canonical<T: Scalar>(spec: &TorusSpec<T>) -> Result<AbelianGroup<T>> {
    torus_canonical_with(spec, GroupFamily::Sl, CanonicalMethod::LcmOfGcds)
}

/// Canonical form of `T̄`.
pub fn torus_psl_canonical<T: Scalar>(spec: &TorusSpec<T>) -> Result<AbelianGroup<T>> {
    torus_canonical_with(spec, GroupFamily::Psl, CanonicalMethod::LcmOfGcds)
}

/// `∏|m_i| / |εq - 1|`, further divided by `d` when projective.
pub fn torus_order<T: Scalar>(spec: &TorusSpec<T>, projective: bool) -> Result<T> {
    let prod = spec.m().into_iter().fold(T::one(), |acc, x| acc * x.abs());
    let mut den = spec.veq_term(1).abs();
    if projective {
        den = den * spec.d();
    }
    exact_div(prod, &den, "torus order")
}

/// A closed-form special case. Indices are 0-based positions in the
/// partition as given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorollaryCase {
    /// `(n_i/t, n_j/t) = 1`.
    CoprimeReduced { i: usize, j: usize },
    /// `n_i = t`.
    PartEqualsGcd { i: usize },
    /// `(n_i, n_j) = 1`.
    CoprimeParts { i: usize, j: usize },
    /// All parts equal.
    AllEqual,
    /// `(n_i/t, n_j/t, n_k/t) = 1`.
    CoprimeTriple { i: usize, j: usize, k: usize },
    /// Projective, `s = 1`.
    ProjSingle,
    /// Projective, `s = 2`.
    ProjPair,
    /// Projective, `n_i = n_j = 1`.
    ProjTwoOnes { i: usize, j: usize },
    /// Projective, `n_i = 1` and `(n_j, n_k) = 1`.
    ProjOneAndCoprime { i: usize, j: usize, k: usize },
    /// Projective, `(n_i, n_j) = (n_k, n_l) = 1`.
    ProjTwoCoprimePairs {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    /// Projective, `n_i = t` and `n_j = r = gcd of the other parts`.
    ProjGcdPartAndRest { i: usize, j: usize },
    /// Projective, all parts equal.
    ProjAllEqual,
    /// Projective, `n_i = t` and `(n_j, n_k) = r`.
    ProjGcdPartAndPair { i: usize, j: usize, k: usize },
}

impl CorollaryCase {
    /// Short tag used in reports.
    pub fn label(&self) -> &'static str {
        match self {
            CorollaryCase::CoprimeReduced { .. } => "ninj",
            CorollaryCase::PartEqualsGcd { .. } => "cni1",
            CorollaryCase::CoprimeParts { .. } => "coprime_pair",
            CorollaryCase::AllEqual => "enieq",
            CorollaryCase::CoprimeTriple { .. } => "cmaing",
            CorollaryCase::ProjSingle => "corp_i",
            CorollaryCase::ProjPair => "s2",
            CorollaryCase::ProjTwoOnes { .. } => "corp_iii",
            CorollaryCase::ProjOneAndCoprime { .. } => "corp_iv",
            CorollaryCase::ProjTwoCoprimePairs { .. } => "corp_v",
            CorollaryCase::ProjGcdPartAndRest { .. } => "corp_vi1",
            CorollaryCase::ProjAllEqual => "pnieq",
            CorollaryCase::ProjGcdPartAndPair { .. } => "corp_vi2",
        }
    }
}

impl fmt::Display for CorollaryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn pairs(s: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..s).flat_map(move |i| (i + 1..s).map(move |j| (i, j)))
}

fn triples(s: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    pairs(s).flat_map(move |(i, j)| (j + 1..s).map(move |k| (i, j, k)))
}

/// Evaluates the closed-form decompositions whose hypotheses hold for
/// `spec`. The first matching index choice in lexicographic order is used.
/// An empty list means no special case applies.
pub fn corollary_paths<T: Scalar>(
    spec: &TorusSpec<T>,
    projective: bool,
) -> Result<Vec<(CorollaryCase, AbelianGroup<T>)>> {
    let cx = Closed::new(spec);
    let out = if projective {
        cx.projective_cases()?
    } else {
        cx.linear_cases()?
    };
    out.into_iter()
        .map(|(case, orders)| Ok((case, AbelianGroup::from_orders(orders)?)))
        .collect()
}

struct Closed<'a, T> {
    spec: &'a TorusSpec<T>,
    parts: &'a [u32],
    t: u32,
    v: T,
}

impl<'a, T: Scalar> Closed<'a, T> {
    fn new(spec: &'a TorusSpec<T>) -> Self {
        Closed {
            spec,
            parts: spec.partition(),
            t: spec.t(),
            v: spec.veq(),
        }
    }

    fn x(&self, k: u32) -> T {
        veq_pow_m1(&self.v, k)
    }

    fn div(&self, num: T, den: T) -> Result<T> {
        exact_div(num, &den, "closed-form factor")
    }

    /// `x(n_r)` for every position not in `skip`.
    fn others(&self, skip: &[usize]) -> Vec<T> {
        (0..self.parts.len())
            .filter(|r| !skip.contains(r))
            .map(|r| self.x(self.parts[r]))
            .collect()
    }

    fn linear_cases(&self) -> Result<Vec<(CorollaryCase, Vec<T>)>> {
        let p = self.parts;
        let s = p.len();
        let t = self.t;
        let reduced: Vec<u32> = p.iter().map(|&n| n / t).collect();
        let head = || self.div(self.x(t), self.x(1));
        let mut out = Vec::new();

        if let Some((i, j)) = pairs(s).find(|&(i, j)| num_integer::gcd(reduced[i], reduced[j]) == 1)
        {
            let mut f = vec![head()?, self.div(self.x(p[i]) * self.x(p[j]), self.x(t))?];
            f.extend(self.others(&[i, j]));
            out.push((CorollaryCase::CoprimeReduced { i, j }, f));
        }
        if let Some(i) = reduced.iter().position(|&r| r == 1) {
            let mut f = vec![head()?];
            f.extend(self.others(&[i]));
            out.push((CorollaryCase::PartEqualsGcd { i }, f));
        }
        if let Some((i, j)) = pairs(s).find(|&(i, j)| num_integer::gcd(p[i], p[j]) == 1) {
            let mut f = vec![self.div(self.x(p[i]) * self.x(p[j]), self.x(1))?];
            f.extend(self.others(&[i, j]));
            out.push((CorollaryCase::CoprimeParts { i, j }, f));
        }
        if p.iter().all(|&n| n == t) {
            let mut f = vec![head()?];
            f.extend(std::iter::repeat_with(|| self.x(t)).take(s - 1));
            out.push((CorollaryCase::AllEqual, f));
        }
        if let Some((i, j, k)) = triples(s).find(|&(i, j, k)| {
            num_integer::gcd(num_integer::gcd(reduced[i], reduced[j]), reduced[k]) == 1
        }) {
            let mut f = vec![
                head()?,
                lcm2(&self.x(p[i]), &self.x(num_integer::gcd(p[j], p[k]))),
                lcm2(&self.x(p[j]), &self.x(p[k])),
            ];
            f.extend(self.others(&[i, j, k]));
            out.push((CorollaryCase::CoprimeTriple { i, j, k }, f));
        }
        Ok(out)
    }

    fn projective_cases(&self) -> Result<Vec<(CorollaryCase, Vec<T>)>> {
        let p = self.parts;
        let s = p.len();
        let t = self.t;
        let d = self.spec.d();
        let dp = self.spec.d_prime();
        let x1 = self.x(1);
        let coprime = |i: usize, j: usize| num_integer::gcd(p[i], p[j]) == 1;
        // d' (v^t - 1) / d (v - 1)
        let head = || self.div(dp.clone() * self.x(t), d.clone() * x1.clone());
        let mut out = Vec::new();

        if s == 1 {
            let f = vec![self.div(self.x(p[0]), d.clone() * x1.clone())?];
            out.push((CorollaryCase::ProjSingle, f));
        }
        if s == 2 {
            let f = vec![
                head()?,
                self.div(self.x(p[0]) * self.x(p[1]), dp.clone() * self.x(t))?,
            ];
            out.push((CorollaryCase::ProjPair, f));
        }
        if let Some((i, j)) = pairs(s).find(|&(i, j)| p[i] == 1 && p[j] == 1) {
            let mut f = vec![self.div(x1.clone(), d.clone())?];
            f.extend(self.others(&[i, j]));
            out.push((CorollaryCase::ProjTwoOnes { i, j }, f));
        }
        let one_and_coprime = (0..s).filter(|&i| p[i] == 1).find_map(|i| {
            pairs(s)
                .find(|&(j, k)| j != i && k != i && coprime(j, k))
                .map(|(j, k)| (i, j, k))
        });
        if let Some((i, j, k)) = one_and_coprime {
            let mut f = vec![
                self.div(x1.clone(), d.clone())?,
                self.div(self.x(p[j]) * self.x(p[k]), x1.clone())?,
            ];
            f.extend(self.others(&[i, j, k]));
            out.push((CorollaryCase::ProjOneAndCoprime { i, j, k }, f));
        }
        let two_pairs = pairs(s).filter(|&(i, j)| coprime(i, j)).find_map(|(i, j)| {
            pairs(s)
                .find(|&(k, l)| ![i, j].contains(&k) && ![i, j].contains(&l) && coprime(k, l))
                .map(|(k, l)| (i, j, k, l))
        });
        if let Some((i, j, k, l)) = two_pairs {
            let mut f = vec![
                self.div(x1.clone(), d.clone())?,
                self.div(self.x(p[i]) * self.x(p[j]), x1.clone())?,
                self.div(self.x(p[k]) * self.x(p[l]), x1.clone())?,
            ];
            f.extend(self.others(&[i, j, k, l]));
            out.push((CorollaryCase::ProjTwoCoprimePairs { i, j, k, l }, f));
        }

        if s >= 2 {
            // r = gcd of the parts other than a part equal to t
            let rest_gcd = |i: usize| {
                (0..s)
                    .filter(|&l| l != i)
                    .fold(0, |g, l| num_integer::gcd(g, p[l]))
            };
            let gcd_parts: Vec<usize> = (0..s).filter(|&i| p[i] == t).collect();

            let vi1 = gcd_parts.iter().find_map(|&i| {
                let r = rest_gcd(i);
                (0..s).find(|&j| j != i && p[j] == r).map(|j| (i, j, r))
            });
            if let Some((i, j, r)) = vi1 {
                let mut f = vec![head()?, self.div(self.x(r), dp.clone())?];
                f.extend(self.others(&[i, j]));
                out.push((CorollaryCase::ProjGcdPartAndRest { i, j }, f));
            }
            if p.iter().all(|&n| n == t) {
                let mut f = vec![head()?, self.div(self.x(t), dp.clone())?];
                f.extend(std::iter::repeat_with(|| self.x(t)).take(s - 2));
                out.push((CorollaryCase::ProjAllEqual, f));
            }
            let vi2 = gcd_parts.iter().find_map(|&i| {
                let r = rest_gcd(i);
                pairs(s)
                    .find(|&(j, k)| j != i && k != i && num_integer::gcd(p[j], p[k]) == r)
                    .map(|(j, k)| (i, j, k, r))
            });
            if let Some((i, j, k, r)) = vi2 {
                let mut f = vec![
                    head()?,
                    self.div(self.x(r), dp.clone())?,
                    self.div(self.x(p[j]) * self.x(p[k]), self.x(r))?,
                ];
                f.extend(self.others(&[i, j, k]));
                out.push((CorollaryCase::ProjGcdPartAndPair { i, j, k }, f));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn spec(q: i64, eps: Eps, parts: &[u32]) -> TorusSpec<BigInt> {
        TorusSpec::new(BigInt::from(q), eps, parts.to_vec()).unwrap()
    }

    fn group(xs: &[i64]) -> AbelianGroup<BigInt> {
        AbelianGroup::from_orders(xs.iter().map(|&x| BigInt::from(x))).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn spec_validation() {
        assert!(TorusSpec::new(1i64, Eps::Plus, vec![2]).is_err());
        assert!(TorusSpec::new(2i64, Eps::Plus, vec![]).is_err());
        assert!(TorusSpec::new(2i64, Eps::Plus, vec![2, 0]).is_err());
        let s = spec(7, Eps::Plus, &[5, 5]);
        assert_eq!((s.n(), s.s(), s.t()), (10, 2, 5));
        assert_eq!(s.d(), big(2));
        assert_eq!(s.d_prime(), big(2));
    }

    #[test]
    fn sl_examples() {
        assert_eq!(
            torus_sl(&spec(2, Eps::Plus, &[5, 5])).unwrap(),
            group(&[31, 31])
        );
        // chain values are {3, 9, 63, 3591}, isomorphic to the displayed form
        let su = torus_sl(&spec(2, Eps::Minus, &[3, 6, 6, 9])).unwrap();
        assert!(su.is_isomorphic(&group(&[3, 63, 63, 513])));
        let sl = torus_sl(&spec(2, Eps::Plus, &[1, 2, 3, 4, 5, 6])).unwrap();
        assert!(sl.is_isomorphic(&group(&[3, 7, 15, 31, 63])));
    }

    #[test]
    fn sl_single_part() {
        for n in 1..12 {
            let g = torus_sl(&spec(2, Eps::Plus, &[n])).unwrap();
            assert_eq!(g.order(), big(2i64.pow(n) - 1));
        }
        assert!(torus_sl(&spec(5, Eps::Plus, &[1])).unwrap().is_trivial());
    }

    #[test]
    fn psl_examples() {
        let g = torus_psl(&spec(7, Eps::Plus, &[5, 5]), None).unwrap();
        assert_eq!(g, group(&[2801, 8403]));
        let g = torus_psl(&spec(2, Eps::Plus, &[10]), None).unwrap();
        assert_eq!(g, group(&[1023]));
        assert!(torus_psl(&spec(3, Eps::Plus, &[1, 1]), None)
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn psl_params() {
        let p = projective_params(&spec(7, Eps::Plus, &[5, 5]), None).unwrap();
        assert_eq!(p.t, 5);
        assert_eq!((p.d, p.d_prime), (big(2), big(2)));
        assert_eq!(p.b, vec![big(16806)]);
        assert_eq!(p.b1_prime, big(2801));
        assert_eq!(p.b2_prime, Some(big(8403)));
    }

    #[test]
    fn relabel_validation() {
        let s = spec(2, Eps::Plus, &[6, 10, 15]);
        assert!(torus_psl(&s, Some(&[1, 0])).is_ok());
        assert!(torus_psl(&s, Some(&[0, 0])).is_err());
        assert!(torus_psl(&s, Some(&[0])).is_err());
        assert!(torus_psl(&s, Some(&[0, 2])).is_err());
    }

    #[test]
    fn canonical_examples() {
        let g = torus_sl_canonical(&spec(2, Eps::Plus, &[1, 2, 3, 4, 5, 6])).unwrap();
        // (v-1)^2, v^2-1, (v^3-1)(v+1), (v^6-1)(v^4+v^3+v^2+v+1)(v^2+1) at v = 2
        assert_eq!(g, group(&[3, 21, 63 * 31 * 5]));
        for n in 1..10 {
            let g = torus_sl_canonical(&spec(2, Eps::Plus, &[n])).unwrap();
            assert_eq!(g.order(), big(2i64.pow(n) - 1));
        }
        let g = torus_sl_canonical(&spec(2, Eps::Plus, &[6, 10, 15])).unwrap();
        // (v^15-1)(v^5+1)(v^2-v+1) and (v^5-1)(v^2+v+1)(v+1) at v = 2
        assert_eq!(g, group(&[32767 * 33 * 3, 31 * 7 * 3]));
    }

    #[test]
    fn canonical_psl_examples() {
        let g = torus_psl_canonical(&spec(7, Eps::Plus, &[5, 5])).unwrap();
        assert!(g.is_isomorphic(&group(&[2801, 8403])));
        for n in 2..10u32 {
            let g = torus_psl_canonical(&spec(2, Eps::Plus, &[n])).unwrap();
            let d = num_integer::gcd(n as i64, 1);
            assert_eq!(g.order(), big((2i64.pow(n) - 1) / d));
        }
        let s = spec(2, Eps::Minus, &[3, 6, 6, 9]);
        assert!(torus_psl_canonical(&s)
            .unwrap()
            .is_isomorphic(&torus_psl(&s, None).unwrap()));
    }

    #[test]
    fn orders() {
        assert_eq!(
            torus_order(&spec(2, Eps::Plus, &[5, 5]), false).unwrap(),
            big(961)
        );
        assert_eq!(
            torus_order(&spec(7, Eps::Plus, &[5, 5]), true).unwrap(),
            big(2801 * 8403)
        );
        assert_eq!(
            torus_order(&spec(2, Eps::Plus, &[1]), false).unwrap(),
            big(1)
        );
    }

    #[test]
    fn unitary_single_part_order() {
        for q in 2..8i64 {
            for n in 1..10u32 {
                let g = torus_sl(&spec(q, Eps::Minus, &[n])).unwrap();
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(g.order(), big((q.pow(n) - sign) / (q + 1)));
            }
        }
    }

    #[test]
    fn corollary_examples() {
        let s = spec(2, Eps::Plus, &[1, 2, 3, 4, 5, 6]);
        let paths = corollary_paths(&s, false).unwrap();
        let cni1 = paths
            .iter()
            .find(|(c, _)| c.label() == "cni1")
            .expect("n_i = t applies");
        assert_eq!(cni1.1, group(&[3, 7, 15, 31, 63]));

        let s = spec(2, Eps::Plus, &[6, 10, 15]);
        let paths = corollary_paths(&s, false).unwrap();
        assert_eq!(paths.len(), 1);
        let (case, g) = &paths[0];
        assert_eq!(*case, CorollaryCase::CoprimeTriple { i: 0, j: 1, k: 2 });
        // [v^6-1, v^5-1] and [v^10-1, v^15-1] at v = 2
        assert_eq!(*g, group(&[63 * 31, 1023 * 32767 / 31]));

        let s = spec(2, Eps::Plus, &[3, 6, 9, 12]);
        let paths = corollary_paths(&s, true).unwrap();
        let (_, g) = paths
            .iter()
            .find(|(c, _)| matches!(c, CorollaryCase::ProjGcdPartAndPair { .. }))
            .expect("vi.2 applies");
        // (v^2+v+1)/d_3, (v^3-1)/d_10, (v^9-1)(v^3+1), v^12-1 at v = 2
        assert_eq!(*g, group(&[7, 7, 511 * 9, 4095]));
    }

    #[test]
    fn corollary_paths_match_fast_path_small() {
        for n in 1..=9u32 {
            for parts in crate::Partitions::new(n) {
                for q in [2i64, 3, 4, 5] {
                    for eps in Eps::BOTH {
                        let s = spec(q, eps, &parts);
                        let sl = torus_sl(&s).unwrap();
                        for (case, g) in corollary_paths(&s, false).unwrap() {
                            assert!(g.is_isomorphic(&sl), "{s} {case}");
                        }
                        let psl = torus_psl(&s, None).unwrap();
                        for (case, g) in corollary_paths(&s, true).unwrap() {
                            assert!(g.is_isomorphic(&psl), "{s} {case}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn machine_integers_work_when_small() {
        let s = TorusSpec::new(3i64, Eps::Minus, vec![4, 3, 2, 1]).unwrap();
        let big_s = spec(3, Eps::Minus, &[4, 3, 2, 1]);
        let small: Vec<BigInt> = torus_psl(&s, None)
            .unwrap()
            .factors()
            .iter()
            .map(|&x| big(x))
            .collect();
        assert_eq!(small, torus_psl(&big_s, None).unwrap().factors());
    }
}
