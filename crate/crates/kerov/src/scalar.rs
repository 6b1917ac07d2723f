//! The scalar ring: arbitrary-precision rational numbers.
//!
//! Every coefficient in the crate is a [`Rational`]. `num`'s `BigRational`
//! keeps values in lowest terms with a positive denominator, so equality is
//! structural and arithmetic is exact.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// The integer `n` as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `n!` as an [`Integer`].
pub fn factorial(n: u64) -> Integer {
    (1..=n).map(BigInt::from).product()
}

/// Binomial coefficient `C(n, k)` for a possibly large `n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// True if the rational is an integer (denominator 1).
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// True if the rational is strictly positive.
pub fn is_positive(r: &Rational) -> bool {
    r.numer().sign() == Sign::Plus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(1, -2), frac(-1, 2));
        assert!(is_integer(&frac(6, 3)));
        assert!(!is_integer(&frac(1, 3)));
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(30, 15), BigInt::from(155117520u64));
    }

    #[test]
    fn sign_predicate() {
        assert!(is_positive(&frac(1, 3)));
        assert!(!is_positive(&rat(0)));
        assert!(!is_positive(&frac(-1, 3)));
    }
}
