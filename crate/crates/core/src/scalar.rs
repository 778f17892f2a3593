use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Signed integer scalar the decomposition machinery is generic over.
///
/// Implemented for every type with exact signed integer arithmetic, most
/// usefully [`num_bigint::BigInt`], `i64` and `i128`. Machine integers are
/// only safe while every intermediate product fits.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
}
