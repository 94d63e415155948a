//! Exact scalar arithmetic.
//!
//! Everything in this crate runs over an exact field: no rounding, ever.
//! The math is generic over [`Scalar`]; the shipped backend is
//! arbitrary-precision rationals ([`Rat`]), which `num-rational` keeps in
//! canonical reduced form with a positive denominator.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{Num, Signed};

/// An exact field element.
///
/// `Num + Signed` supplies the ring and division operators; the remaining
/// bounds let scalars live in maps, reports and threads. Floating-point
/// types are deliberately not implementable: they fail `Eq`.
pub trait Scalar:
    Num + Signed + Clone + Eq + Hash + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Num + Signed + Clone + Eq + Hash + Debug + Display + Send + Sync + 'static
{
}

/// The default scalar: an arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient as a `usize`.
///
/// Sizes in this crate stay far below overflow range (dimensions of
/// filtered pieces of enveloping algebras with `n <= 8`, cutoffs `<= 16`),
/// but the accumulation runs in `u128` anyway.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflows usize")
}
