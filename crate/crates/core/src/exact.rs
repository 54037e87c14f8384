//! Exact rational scalars.
//!
//! Every quantity in the lab (set elements, quotient values, line slopes and
//! intercepts, intersection coordinates) is a [`Rational`]. Values are kept in
//! reduced form with a positive denominator, so structural equality, hashing and
//! ordering all agree with equality of the underlying real numbers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `p/q` in canonical form.
    pub fn normalize(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(p.into(), q)))
    }

    /// Builds from a numerator and denominator already known to be coprime
    /// with a positive denominator.
    pub(crate) fn from_canonical(p: BigInt, q: BigInt) -> Self {
        debug_assert!(q.is_positive());
        debug_assert!(p.gcd(&q).is_one());
        Rational(BigRational::new_raw(p, q))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Real-number order; identical to `Ord::cmp`.
    pub fn total_order(&self, other: &Rational) -> Ordering {
        self.cmp(other)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str, allow_minus: bool) -> Option<BigInt> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) if allow_minus => (true, rest),
        _ => (false, s),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v = BigInt::parse_bytes(digits.as_bytes(), 10)?;
    Some(if neg { -v } else { v })
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        match s.split_once('/') {
            None => parse_digits(s, true).map(Rational::integer).ok_or_else(bad),
            Some((p, q)) => {
                let p = parse_digits(p, true).ok_or_else(bad)?;
                let q = parse_digits(q, false).ok_or_else(bad)?;
                Rational::normalize(p, q)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(Rational::normalize(2, 4).unwrap().to_string(), "1/2");
        assert_eq!(Rational::normalize(3, -6).unwrap().to_string(), "-1/2");
        let z = Rational::normalize(0, 5).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (BigInt::from(0), BigInt::from(1)));
        assert_eq!(Rational::normalize(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(r("1/2") + r("1/3"), r("5/6"));
        assert_eq!(r("1/2") * r("2/3"), r("1/3"));
        assert_eq!(r("1/2").checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(r("3/4").checked_div(&r("-3/2")).unwrap(), r("-1/2"));
    }

    #[test]
    fn order_examples() {
        assert_eq!(r("1/3").total_order(&r("1/2")), Ordering::Less);
        assert_eq!(r("-1/2").total_order(&r("-1/2")), Ordering::Equal);
        assert_eq!(r("2").total_order(&r("3/2")), Ordering::Greater);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(r("-6/4").to_string(), "-3/2");
        assert_eq!(r("10/5").to_string(), "2");
        assert_eq!(r("-0").to_string(), "0");
        for bad in ["", "-", "1/", "/2", "+3", "1/-2", "0x10", "1.5", "1/0", " 1", "--1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
        assert_eq!("1/0".parse::<Rational>(), Err(Error::ZeroDenominator));
    }

    #[test]
    fn big_values_survive() {
        let big = r("1000000000000000000000000000001/7");
        let sq = big.pow(3);
        assert_eq!(sq.denom(), &BigInt::from(343));
        assert_eq!(sq.to_string().parse::<Rational>().unwrap(), sq);
    }

    #[test]
    fn serde_as_string() {
        let v = serde_json::to_string(&r("-7/3")).unwrap();
        assert_eq!(v, "\"-7/3\"");
        let back: Rational = serde_json::from_str(&v).unwrap();
        assert_eq!(back, r("-7/3"));
    }

    fn small() -> impl Strategy<Value = (i64, i64)> {
        (-1000i64..1000, (1i64..1000).prop_flat_map(|q| prop_oneof![Just(q), Just(-q)]))
    }

    proptest! {
        #[test]
        fn scaling_invariance((p, q) in small(), k in prop_oneof![-50i64..-1, 1i64..50]) {
            prop_assert_eq!(Rational::normalize(p, q).unwrap(), Rational::normalize(p * k, q * k).unwrap());
        }

        #[test]
        fn field_laws(a in small(), b in small(), c in small()) {
            let a = Rational::normalize(a.0, a.1).unwrap();
            let b = Rational::normalize(b.0, b.1).unwrap();
            let c = Rational::normalize(c.0, c.1).unwrap();
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a + &(-&a), Rational::zero());
            prop_assert!((&a - &a).denom().is_one());
        }

        #[test]
        fn order_matches_cross_multiplication((a, b) in small(), (c, d) in small()) {
            let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
            let (c, d) = if d < 0 { (-c, -d) } else { (c, d) };
            let lhs = Rational::normalize(a, b).unwrap();
            let rhs = Rational::normalize(c, d).unwrap();
            prop_assert_eq!(lhs.total_order(&rhs), (a * d - c * b).cmp(&0));
        }

        #[test]
        fn text_round_trip((p, q) in small()) {
            let v = Rational::normalize(p, q).unwrap();
            prop_assert_eq!(v.to_string().parse::<Rational>().unwrap(), v);
        }
    }
}
