//! Cyclic decompositions of the maximal tori of `SL_n(εq)` and their images
//! in `PSL_n(εq)`, where `SL_n(-q)` stands for `SU_n(q)`.
//!
//! The conjugacy classes of maximal tori are parameterized by partitions
//! `n = n_1 + ... + n_s`. Two routes are provided for every torus:
//!
//! * a linear gcd/lcm chain over the parts ([`tori::torus_sl`],
//!   [`tori::torus_psl`]), costing `O(s)` gcd/lcm operations;
//! * the canonical invariant-factor form built from determinant divisors
//!   ([`tori::torus_sl_canonical`], [`tori::torus_psl_canonical`]), whose
//!   cost grows with the number of subsets of the parts.
//!
//! All arithmetic is generic over a signed integer type (see [`Scalar`]).
//! Torus orders grow like `q^n` and overflow machine words quickly, so the
//! crate-root aliases fix the scalar to [`num_bigint::BigInt`].

pub mod abelian;
pub mod arith;
pub mod decomp;
mod error;
pub mod exprfix;
pub mod partition;
mod scalar;
pub mod tori;

pub use abelian::{AbelianGroup, InvariantFactors};
pub use arith::{Eps, VeqTerm};
pub use decomp::{CanonicalMethod, CanonicalResult, ChainResult, PrimeExponentProfile};
pub use error::{Error, Result};
pub use exprfix::{FixtureExpr, FixtureRow};
pub use partition::Partitions;
pub use scalar::Scalar;
pub use tori::{CorollaryCase, GroupFamily, ProjectiveParams, TorusChain, TorusSpec};

/// Arbitrary-precision integer used by the default aliases.
pub type Int = num_bigint::BigInt;
pub type Group = AbelianGroup<Int>;
pub type Spec = TorusSpec<Int>;
pub type Chain = ChainResult<Int>;
pub type Canonical = CanonicalResult<Int>;
