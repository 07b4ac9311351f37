//! Hermite polynomials in both normalizations, and the moments of the
//! umbra `M` defined by `e^{Mz} = e^{z^2/2}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::UPolynomial;
use crate::rational::{self, Rational};

/// Which Hermite normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HermiteKind {
    /// `h_n`, generating function `e^{uz + z^2/2}`; counts matchings.
    Matching,
    /// `H_n`, generating function `e^{2uz - z^2}`.
    Physicist,
}

impl fmt::Display for HermiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HermiteKind::Matching => "h",
            HermiteKind::Physicist => "H",
        })
    }
}

impl FromStr for HermiteKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "h" => Ok(HermiteKind::Matching),
            "H" => Ok(HermiteKind::Physicist),
            other => Err(format!("unknown Hermite kind `{other}` (expected h or H)")),
        }
    }
}

/// `h_0, ..., h_n` from `h_{k+1} = u h_k + k h_{k-1}`.
pub fn hermite_h_table(n: u32) -> Vec<UPolynomial> {
    three_term_table(n, &UPolynomial::u(), |k| rational::int(k as i64))
}

/// `H_0, ..., H_n` from `H_{k+1} = 2u H_k - 2k H_{k-1}`.
pub fn hermite_phys_table(n: u32) -> Vec<UPolynomial> {
    let two_u = UPolynomial::u().scale(&rational::int(2));
    three_term_table(n, &two_u, |k| rational::int(-2 * k as i64))
}

fn three_term_table(n: u32, lead: &UPolynomial, back: impl Fn(u32) -> Rational) -> Vec<UPolynomial> {
    let mut table = Vec::with_capacity(n as usize + 1);
    table.push(UPolynomial::one());
    for k in 0..n {
        let mut next = lead * &table[k as usize];
        if k > 0 {
            next += &table[k as usize - 1].scale(&back(k));
        }
        table.push(next);
    }
    table
}

/// `h_n(u)`.
pub fn hermite_h(n: u32) -> UPolynomial {
    hermite_h_table(n).pop().unwrap()
}

/// `H_n(u)`.
#[allow(non_snake_case)]
pub fn hermite_H(n: u32) -> UPolynomial {
    hermite_phys_table(n).pop().unwrap()
}

pub fn hermite(kind: HermiteKind, n: u32) -> UPolynomial {
    match kind {
        HermiteKind::Matching => hermite_h(n),
        HermiteKind::Physicist => hermite_H(n),
    }
}

/// Moment `eval(M^n)`: `(2k)!/(2^k k!)` for `n = 2k`, zero for odd `n`.
pub fn m_moment(n: u32) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    let k = n / 2;
    let num = rational::factorial(n);
    let den = rational::factorial(k) << k as usize;
    Rational::new(num, den)
}

/// Checks `[u^{n-2k}] H_n = (-1)^k 2^{n-k} [u^{n-2k}] h_n` for every `k`,
/// and that both polynomials vanish in every other degree. This is the
/// rational form of `h_n(u) = i^n 2^{-n/2} H_n(-iu/sqrt 2)`.
pub fn normalization_relation_check(n: u32) -> bool {
    let h = hermite_h(n);
    let big_h = hermite_H(n);
    for d in 0..=n {
        let lhs = big_h.coeff(d, 0);
        let rhs = if (n - d).is_multiple_of(2) {
            let k = (n - d) / 2;
            let sign = if k.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            h.coeff(d, 0) * Rational::from_integer(sign << (n - k) as usize)
        } else {
            if !h.coeff(d, 0).is_zero() {
                return false;
            }
            Rational::zero()
        };
        if lhs != rhs {
            return false;
        }
    }
    h.degree_u() == Some(n) && big_h.degree_u() == Some(n)
}
