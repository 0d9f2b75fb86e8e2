//! Exact binomial and multinomial coefficients.
//!
//! The closed-form expansions in this crate sum multinomials whose top
//! argument can go negative at boundary configurations.  The convention used
//! throughout is:
//!
//! * any negative lower argument gives `0`;
//! * if every lower argument is `0` the value is `1`, for every `n`
//!   (the empty product of choices, even when `n` is negative);
//! * otherwise the value is `0` when `n` is less than the sum of the lower
//!   arguments, and the usual factorial quotient when `n` is at least that
//!   sum.

use num_bigint::BigInt;
use num_traits::{One, Zero};

fn factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Multinomial coefficient `n! / (m_1! … m_k! (n - Σ m_i)!)` under the
/// boundary convention described in the module docs.
pub fn multinomial(n: i64, parts: &[i64]) -> BigInt {
    if parts.iter().any(|&m| m < 0) {
        return BigInt::zero();
    }
    if parts.iter().all(|&m| m == 0) {
        return BigInt::one();
    }
    let s: i64 = parts.iter().sum();
    if n < s {
        return BigInt::zero();
    }
    let mut acc = factorial(n);
    for &m in parts {
        acc /= factorial(m);
    }
    acc / factorial(n - s)
}

/// Binomial coefficient `C(n, k)` under the same convention
/// (`C(n, 0) = 1` for every `n`, including negative `n`).
pub fn binomial(n: i64, k: i64) -> BigInt {
    multinomial(n, &[k])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials_match_pascal() {
        for n in 0..10i64 {
            for k in 0..=n {
                let direct = binomial(n, k);
                let pascal = binomial(n - 1, k - 1) + binomial(n - 1, k);
                if n > 0 {
                    assert_eq!(direct, pascal, "Pascal rule at ({n},{k})");
                }
            }
        }
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 7), BigInt::zero());
    }

    #[test]
    fn boundary_convention() {
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(multinomial(-1, &[0, 0]), BigInt::one());
        assert_eq!(multinomial(3, &[-1, 2]), BigInt::zero());
        assert_eq!(binomial(-2, 1), BigInt::zero());
        assert_eq!(multinomial(0, &[0, 0, 0]), BigInt::one());
    }

    #[test]
    fn multinomial_counts_words() {
        // 6!/(2!2!2!) = 90 and 6!/(3!2!1!) with implicit remainder 1.
        assert_eq!(multinomial(6, &[2, 2, 2]), BigInt::from(90));
        assert_eq!(multinomial(6, &[3, 2]), BigInt::from(60));
        // Sum over a row: Σ_k C(n,k) = 2^n.
        let total: BigInt = (0..=8).map(|k| binomial(8, k)).sum();
        assert_eq!(total, BigInt::from(256));
    }
}
