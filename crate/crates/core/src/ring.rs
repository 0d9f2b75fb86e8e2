//! A minimal commutative-ring interface for generic matrix and
//! partition-function code.
//!
//! The `num-traits` operator traits work by value, which is awkward for
//! heap-backed polynomial types; this trait works by reference and is
//! implemented for every exact ring used in the crate.

use crate::frac::Frac;
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring operations by reference.
pub trait Ring: Clone + PartialEq {
    /// Additive identity.
    fn ring_zero() -> Self;
    /// Multiplicative identity.
    fn ring_one() -> Self;
    /// Test against the additive identity.
    fn ring_is_zero(&self) -> bool;
    /// Sum.
    fn ring_add(&self, other: &Self) -> Self;
    /// Difference.
    fn ring_sub(&self, other: &Self) -> Self;
    /// Product.
    fn ring_mul(&self, other: &Self) -> Self;
    /// Additive inverse.
    fn ring_neg(&self) -> Self;
}

impl<C: Scalar> Ring for LaurentPoly<C> {
    fn ring_zero() -> Self {
        Self::zero()
    }
    fn ring_one() -> Self {
        Self::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
}

impl<C: Scalar> Ring for Frac<C> {
    fn ring_zero() -> Self {
        Self::zero()
    }
    fn ring_one() -> Self {
        Self::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
}

impl Ring for BigRational {
    fn ring_zero() -> Self {
        Self::zero()
    }
    fn ring_one() -> Self {
        Self::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}
