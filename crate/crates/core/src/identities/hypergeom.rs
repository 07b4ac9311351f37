//! The multi-cycle factor as a terminating-at-each-order `2F0` series.

use crate::hermite::m_moment;
use crate::poly::UPolynomial;
use crate::rational::{self, ratio, Rational};
use crate::report::{IdentityReport, Mismatch};

/// `(1/6)_n (5/6)_n 54^n / n!`, the weight of `z^{2n} (1 - 6wz)^{-3n}` in
/// the hypergeometric form.
pub fn two_f_zero_weight(n: u32) -> Rational {
    let fifty_four = Rational::from_integer(num_bigint::BigInt::from(54).pow(n));
    rational::rising_factorial(&ratio(1, 6), n) * rational::rising_factorial(&ratio(5, 6), n) * fifty_four
        / Rational::from_integer(rational::factorial(n))
}

/// `(6n)! / (2^{3n} (3n)! (2n)!)`, the same weight read off the multi-cycle
/// sum.
pub fn matching_weight(n: u32) -> Rational {
    m_moment(6 * n) / Rational::from_integer(rational::factorial(2 * n))
}

/// Checks `two_f_zero_weight(n) == matching_weight(n)` for `n <= terms`.
pub fn hypergeom_form_check(terms: u32) -> IdentityReport {
    for n in 0..=terms {
        let lhs = two_f_zero_weight(n);
        let rhs = matching_weight(n);
        if lhs != rhs {
            return IdentityReport::mismatch(
                "hypergeom",
                terms,
                Mismatch {
                    exponents: vec![n],
                    lhs: UPolynomial::constant(lhs),
                    rhs: UPolynomial::constant(rhs),
                },
            );
        }
    }
    IdentityReport::verified("hypergeom", terms)
}
