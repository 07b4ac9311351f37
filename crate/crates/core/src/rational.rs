//! Exact rational scalars and the integer combinatorial functions used to
//! build coefficients.
//!
//! `Rational` is `num_rational::BigRational`, which always keeps its value
//! in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use num_rational::BigRational as Rational;

/// Builds the rational `num / den`. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rising factorial `a (a+1) ... (a+n-1)`; equals 1 for `n = 0`.
pub fn rising_factorial(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Renders a rational as `p` or `p/q`.
pub fn render(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(render(&r), "-3/2");
        assert_eq!(render(&ratio(4, 2)), "2");
    }

    #[test]
    fn round_trip() {
        let a = ratio(3, 7);
        let c = ratio(-5, 11);
        assert_eq!((&a + &c) - &c, a);
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(12, 6), BigInt::from(924));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(rising_factorial(&ratio(1, 6), 2), ratio(7, 36));
        assert_eq!(rising_factorial(&ratio(5, 6), 0), int(1));
    }
}
