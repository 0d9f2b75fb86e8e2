//! Exact fractions of Laurent polynomials.
//!
//! Several identities in this crate live in the field of rational functions:
//! weight mutations divide by sums of weights, and conserved quantities built
//! from shifted variables are ratios of polynomials.  [`Frac`] represents such
//! elements as numerator/denominator pairs.  Normalization is opportunistic
//! (monomial content and exact polynomial division), and equality is decided
//! by cross-multiplication, which is always exact.

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};
use crate::scalar::Scalar;

/// A ratio of Laurent polynomials with a nonzero denominator.
#[derive(Debug, Clone)]
pub struct Frac<C: Scalar> {
    num: LaurentPoly<C>,
    den: LaurentPoly<C>,
}

impl<C: Scalar> Frac<C> {
    /// Build `num / den`.  Panics if `den` is zero (callers construct
    /// denominators from products of nonzero quantities).
    pub fn new(num: LaurentPoly<C>, den: LaurentPoly<C>) -> Self {
        assert!(!den.is_zero(), "fraction denominator must be nonzero");
        let mut f = Self { num, den };
        f.normalize();
        f
    }

    /// Embed a polynomial.
    pub fn from_poly(p: LaurentPoly<C>) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// The zero fraction.
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    /// The unit fraction.
    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    /// Numerator after normalization.
    pub fn num(&self) -> &LaurentPoly<C> {
        &self.num
    }

    /// Denominator after normalization.
    pub fn den(&self) -> &LaurentPoly<C> {
        &self.den
    }

    /// Whether the fraction is zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // First try full exact division, which collapses the denominator.
        if let Ok(q) = self.num.exact_div(&self.den) {
            self.num = q;
            self.den = LaurentPoly::one();
            return;
        }
        if let Ok(q) = self.den.exact_div(&self.num) {
            // num/den = 1/q when den = q*num.
            if let Some((m, c)) = q.as_monomial() {
                if let Some(ci) = C::one().exact_div(c) {
                    self.num = LaurentPoly::term(m.pow(-1), ci);
                    self.den = LaurentPoly::one();
                    return;
                }
            }
            self.den = q;
            self.num = LaurentPoly::one();
            return;
        }
        // Otherwise strip the common monomial factor to keep exponents small.
        let mn = self.num.monomial_content();
        let md = self.den.monomial_content();
        let nvars = [&mn, &md]
            .iter()
            .flat_map(|m| m.iter().map(|(v, _)| v.0 as usize + 1))
            .max()
            .unwrap_or(0);
        let mut exps = vec![0; nvars];
        for (i, e) in exps.iter_mut().enumerate() {
            let v = crate::laurent::VarId(i as u32);
            *e = mn.exp(v).min(md.exp(v));
        }
        let g = Monomial::from_exps(exps);
        if !g.is_one() {
            let gp = LaurentPoly::term(g.pow(-1), C::one());
            self.num = self.num.mul(&gp);
            self.den = self.den.mul(&gp);
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Quotient; fails on a zero divisor.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    /// Reciprocal; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(self.den.clone(), self.num.clone()))
    }

    /// Integer power (negative allowed away from zero).
    pub fn powi(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            Ok(Self {
                num: self.num.pow(k as u32),
                den: self.den.pow(k as u32),
            })
        } else {
            self.inv().map(|f| Self {
                num: f.num.pow((-k) as u32),
                den: f.den.pow((-k) as u32),
            })
        }
    }

    /// Collapse to a Laurent polynomial when the denominator divides exactly.
    pub fn to_poly(&self) -> Result<LaurentPoly<C>> {
        self.num.exact_div(&self.den)
    }
}

impl<C: Scalar> PartialEq for Frac<C> {
    /// Equality by cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<C: Scalar> Eq for Frac<C> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::VarRegistry;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;
    type F = Frac<BigInt>;

    fn vars() -> (VarRegistry, P, P) {
        let mut reg = VarRegistry::new();
        let x = reg.intern("x");
        let y = reg.intern("y");
        (reg, P::var(x), P::var(y))
    }

    #[test]
    fn equality_ignores_representation() {
        let (_, x, y) = vars();
        // x/y == x^2/(xy).
        let a = F::new(x.clone(), y.clone());
        let b = F::new(x.mul(&x), x.mul(&y));
        assert_eq!(a, b);
        let c = F::new(y.clone(), x.clone());
        assert_ne!(a, c);
    }

    #[test]
    fn field_identities_hold() {
        let (_, x, y) = vars();
        let a = F::new(x.add(&P::one()), y.clone());
        let b = F::new(y.sub(&x), x.mul(&y));
        let lhs = a.add(&b).mul(&a.sub(&b));
        let rhs = a.mul(&a).sub(&b.mul(&b));
        assert_eq!(lhs, rhs);
        assert_eq!(a.div(&a).unwrap(), F::one());
        assert_eq!(a.sub(&a), F::zero());
        assert!(F::one().div(&F::zero()).is_err());
    }

    #[test]
    fn exact_quotients_collapse_to_polynomials() {
        let (_, x, y) = vars();
        let n = x.mul(&x).sub(&y.mul(&y));
        let f = F::new(n, x.add(&y));
        assert_eq!(f.to_poly().unwrap(), x.sub(&y));
        let g = F::new(x.add(&P::one()), y.clone());
        // (x+1)/y is a Laurent element: y is a monomial.
        assert_eq!(
            g.to_poly().unwrap(),
            x.add(&P::one()).mul(&y.invert().unwrap())
        );
        let h = F::new(x.clone(), x.add(&P::one()));
        assert!(h.to_poly().is_err());
    }

    #[test]
    fn powers_and_reciprocals() {
        let (_, x, y) = vars();
        let f = F::new(x.add(&y), y.clone());
        let p3 = f.powi(3).unwrap();
        assert_eq!(p3, f.mul(&f).mul(&f));
        let pm2 = f.powi(-2).unwrap();
        assert_eq!(pm2.mul(&f).mul(&f), F::one());
    }
}
