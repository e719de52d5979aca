//! Coefficient scalars.
//!
//! Polynomial containers are generic over [`Scalar`], a minimal commutative-ring
//! bundle from `num-traits`. Everything downstream of plain arithmetic
//! (elimination, root isolation, solving) works over the exact field
//! [`Rational`], which is the default scalar everywhere.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::ops::{Neg, Sub};

/// Exact arbitrary-precision rational. Always stored reduced, denominator positive.
pub type Rational = Ratio<BigInt>;

/// Ring operations required of a polynomial coefficient.
///
/// Blanket-implemented; `Rational` and `f64` both qualify.
pub trait Scalar:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Canonical text form: `"a"` when the denominator is 1, else `"a/b"`.
pub fn rat_str(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"a"` or `"a/b"` (the inverse of [`rat_str`]).
pub fn rat_parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from(n))
        }
    }
}

/// Sign of an exact rational: -1, 0, or 1.
pub fn rat_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = rat(2, -4);
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat_str(&r), "-1/2");
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = rat(0, 7);
        assert_eq!(rat_str(&z), "0");
        assert!(z.is_zero());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3", "-3", "3/2", "-7/4", "0"] {
            let r = rat_parse(s).unwrap();
            assert_eq!(rat_str(&r), s);
        }
        assert!(rat_parse("1/0").is_none());
        assert!(rat_parse("x").is_none());
    }
}
