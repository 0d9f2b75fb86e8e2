//! Coefficient scalars.
//!
//! All arithmetic in this crate is exact.  The [`Scalar`] trait abstracts the
//! coefficient ring of a Laurent polynomial over the `num-traits` interfaces,
//! with two instantiations: arbitrary-precision integers ([`BigInt`]) and
//! arbitrary-precision rationals ([`BigRational`]).  Floating point types are
//! deliberately not supported.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};
use std::fmt::Display;

/// An exact coefficient ring.
///
/// The bounds come from `num-traits`: a [`Signed`] number ring with exact
/// equality.  On top of that, implementors provide exact division (total on
/// fields, partial on integers) and parsing of coefficient literals.
pub trait Scalar: Clone + Eq + Signed + FromPrimitive + Display + std::fmt::Debug + 'static {
    /// Exact division: returns `Some(q)` if and only if `q * rhs == self`
    /// holds in the ring.  Division by zero returns `None`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Parse a coefficient literal (`-12`, or `3/4` for rationals).
    fn parse_coeff(s: &str) -> Option<Self>;

    /// Embed the coefficient into the rationals (used for point evaluation).
    fn to_rational(&self) -> BigRational;

    /// Product through references.  Implementations for arbitrary-precision
    /// scalars override this to skip cloning both operands.
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    /// In-place sum through a reference.
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.clone() + rhs.clone();
    }

    /// In-place difference through a reference.
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self = self.clone() - rhs.clone();
    }
}

impl Scalar for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        s.parse().ok()
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from(self.clone())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
}

impl Scalar for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        s.parse().ok()
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = &*self + rhs;
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn integer_exact_div_detects_divisibility() {
        let a = BigInt::from(12);
        let b = BigInt::from(4);
        assert_eq!(a.exact_div(&b), Some(BigInt::from(3)));
        let c = BigInt::from(5);
        assert_eq!(a.exact_div(&c), None);
        assert_eq!(a.exact_div(&BigInt::zero()), None);
        let neg = BigInt::from(-12);
        assert_eq!(neg.exact_div(&b), Some(BigInt::from(-3)));
    }

    #[test]
    fn rational_exact_div_is_total_away_from_zero() {
        let a = BigRational::new(BigInt::from(3), BigInt::from(7));
        let b = BigRational::new(BigInt::from(2), BigInt::from(5));
        let q = a.exact_div(&b).expect("nonzero divisor");
        assert_eq!(q * b, a);
        assert_eq!(a.exact_div(&BigRational::zero()), None);
    }

    #[test]
    fn coefficient_literals_parse() {
        assert_eq!(BigInt::parse_coeff("-42"), Some(BigInt::from(-42)));
        assert_eq!(
            BigRational::parse_coeff("3/4"),
            Some(BigRational::new(BigInt::from(3), BigInt::from(4)))
        );
        assert_eq!(BigRational::parse_coeff("5"), Some(BigRational::from_integer(BigInt::from(5))));
        assert_eq!(BigInt::parse_coeff("x"), None);
    }

    #[test]
    fn reference_ops_agree_with_value_ops() {
        let a = BigInt::from(1234567890123456789i64);
        let b = BigInt::from(-987654321i64);
        assert_eq!(a.mul_ref(&b), a.clone() * b.clone());
        let mut s = a.clone();
        s.add_assign_ref(&b);
        assert_eq!(s, a.clone() + b.clone());
        let mut d = a.clone();
        d.sub_assign_ref(&b);
        assert_eq!(d, a.clone() - b.clone());

        let p = BigRational::new(BigInt::from(3), BigInt::from(7));
        let q = BigRational::new(BigInt::from(-5), BigInt::from(2));
        assert_eq!(p.mul_ref(&q), p.clone() * q.clone());
        let mut s = p.clone();
        s.add_assign_ref(&q);
        assert_eq!(s, p.clone() + q.clone());
        let mut d = p.clone();
        d.sub_assign_ref(&q);
        assert_eq!(d, p - q);
    }

    #[test]
    fn rational_embedding_is_identity_on_integers() {
        assert_eq!(BigInt::from(9).to_rational(), BigRational::from_integer(BigInt::from(9)));
        assert!(BigRational::one().to_rational().is_one());
    }
}
