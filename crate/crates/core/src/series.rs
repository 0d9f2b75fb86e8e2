//! Truncated power series in a formal parameter `t` with Laurent polynomial
//! coefficients.
//!
//! Generating functions of path and partition-function models are computed
//! order by order; a [`TSeries`] holds coefficients `c_0 … c_N` for a fixed
//! truncation order `N`.  Multiplicative inverses exist exactly when the
//! constant coefficient is `1` (all series inverted in this crate are of that
//! shape).

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// Coefficients `c_0 + c_1 t + … + c_N t^N` of a truncated series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries<C: Scalar> {
    coeffs: Vec<LaurentPoly<C>>,
}

impl<C: Scalar> TSeries<C> {
    /// The zero series truncated at order `n`.
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); n + 1],
        }
    }

    /// The constant series `1` truncated at order `n`.
    pub fn one(n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// Build from explicit coefficients (`coeffs[k]` is the `t^k`
    /// coefficient); the truncation order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly<C>>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the t^0 coefficient");
        Self { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; panics beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &LaurentPoly<C> {
        &self.coeffs[k]
    }

    /// All stored coefficients.
    pub fn coeffs(&self) -> &[LaurentPoly<C>] {
        &self.coeffs
    }

    /// Re-truncate to order `n` (extending with zeros if needed).
    pub fn truncated(&self, n: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n + 1, LaurentPoly::zero());
        coeffs.truncate(n + 1);
        Self { coeffs }
    }

    /// Sum (result truncated at the shorter order).
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|k| self.coeffs[k].add(&other.coeffs[k]))
                .collect(),
        }
    }

    /// Difference (result truncated at the shorter order).
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|k| self.coeffs[k].sub(&other.coeffs[k]))
                .collect(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Product (truncated at the shorter order).
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![LaurentPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs }
    }

    /// Multiply every coefficient by a polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly<C>) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    /// Multiply by `t^k` (shift coefficients up, truncating at the top).
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![LaurentPoly::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= n {
                coeffs[i + k] = c.clone();
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse; requires the constant coefficient to be `1`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Invalid(
                "series inverse requires constant coefficient 1".to_string(),
            ));
        }
        let n = self.order();
        let mut inv = vec![LaurentPoly::zero(); n + 1];
        inv[0] = LaurentPoly::one();
        for k in 1..=n {
            // c_k(inv) = -Σ_{j=1..k} a_j * inv_{k-j}.
            let mut acc = LaurentPoly::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&inv[k - j]));
                }
            }
            inv[k] = acc.neg();
        }
        Ok(Self { coeffs: inv })
    }

    /// Quotient `self / other`; requires `other` to have constant
    /// coefficient `1`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::VarRegistry;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;
    type S = TSeries<BigInt>;

    #[test]
    fn geometric_series_inverse() {
        let mut reg = VarRegistry::new();
        let y = P::var(reg.intern("y"));
        // 1/(1 - ty) = Σ y^k t^k.
        let mut d = S::one(6);
        d = d.sub(&S::from_coeffs(vec![P::zero(), y.clone()]).truncated(6));
        let inv = d.inverse().unwrap();
        for k in 0..=6 {
            assert_eq!(*inv.coeff(k), y.pow(k as u32), "t^{k} coefficient");
        }
        assert_eq!(d.mul(&inv), S::one(6));
    }

    #[test]
    fn multiplication_truncates_consistently() {
        let mut reg = VarRegistry::new();
        let a = P::var(reg.intern("a"));
        let s = S::from_coeffs(vec![P::one(), a.clone(), a.mul(&a)]);
        let t = s.mul(&s);
        assert_eq!(*t.coeff(0), P::one());
        assert_eq!(*t.coeff(1), a.scale(&BigInt::from(2)));
        assert_eq!(*t.coeff(2), a.mul(&a).scale(&BigInt::from(3)));
    }

    #[test]
    fn shift_moves_coefficients() {
        let s = S::from_coeffs(vec![P::int(1), P::int(2), P::int(3)]);
        let sh = s.shift(1);
        assert_eq!(*sh.coeff(0), P::zero());
        assert_eq!(*sh.coeff(1), P::int(1));
        assert_eq!(*sh.coeff(2), P::int(2));
    }

    #[test]
    fn inverse_requires_unit_constant_term() {
        let s = S::from_coeffs(vec![P::int(2), P::int(1)]);
        assert!(s.inverse().is_err());
    }

    #[test]
    fn division_round_trips() {
        let mut reg = VarRegistry::new();
        let a = P::var(reg.intern("a"));
        let b = P::var(reg.intern("b"));
        let num = S::from_coeffs(vec![P::one(), a.clone(), b.clone(), a.mul(&b), P::zero()]);
        let den = S::from_coeffs(vec![P::one(), b.clone(), a.add(&b), P::zero(), P::one()]);
        let q = num.div(&den).unwrap();
        assert_eq!(q.mul(&den), num);
    }
}
