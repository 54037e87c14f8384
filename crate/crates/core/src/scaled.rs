//! Integer kernels for the hot enumeration loops.
//!
//! A batch of rationals is multiplied through by the lcm of its denominators,
//! after which every quotient the loops need is a ratio of integer
//! differences. Keys are reduced fractions `(num, den)` with `den > 0`, so equal
//! rationals produce equal keys. When a bit bound shows every intermediate
//! fits, the kernels run on `i128`; otherwise they fall back to `BigInt`. Both
//! paths produce identical keys once lifted back to [`Rational`].

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::exact::Rational;

/// Bits available for intermediate magnitudes on the `i128` path.
const SMALL_BITS: u64 = 125;

pub(crate) trait ExactInt: Integer + Signed + Clone + Hash + Eq + Send + Sync + Debug {
    fn from_big(v: &BigInt) -> Self;
    fn into_big(self) -> BigInt;
}

impl ExactInt for i128 {
    fn from_big(v: &BigInt) -> Self {
        i128::try_from(v).expect("value checked against the i128 bound")
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl ExactInt for BigInt {
    fn from_big(v: &BigInt) -> Self {
        v.clone()
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Canonical `(num, den)` with `den > 0` and `gcd = 1`. `den` must be nonzero.
#[inline]
pub(crate) fn reduce<T: ExactInt>(num: T, den: T) -> (T, T) {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return (T::zero(), T::one());
    }
    let g = num.gcd(&den);
    let (n, d) = (num / g.clone(), den / g);
    if d.is_negative() {
        (-n, -d)
    } else {
        (n, d)
    }
}

pub(crate) fn key_to_rational<T: ExactInt>((n, d): (T, T)) -> Rational {
    Rational::from_canonical(n.into_big(), d.into_big())
}

/// Common denominator of `values` and the scaled integers `v * lcm`.
pub(crate) fn common_scale<'a>(values: impl IntoIterator<Item = &'a Rational>) -> (BigInt, Vec<BigInt>) {
    let values: Vec<&Rational> = values.into_iter().collect();
    let lcm = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled = values.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    (lcm, scaled)
}

pub(crate) fn max_bits<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> u64 {
    values.into_iter().map(|v| v.bits()).max().unwrap_or(0)
}

pub(crate) fn fits_small(bits: u64) -> bool {
    bits <= SMALL_BITS
}
