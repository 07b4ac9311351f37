//! Polynomials in the umbra `M` with truncated-series coefficients, the
//! evaluation functional `eval(M^n) = m_moment(n)`, and executable checks of
//! the shift lemma, `e^{M^2 z} = (1-2z)^{-1/2}`, and their corollaries.
//!
//! An [`MExpression`] keeps M-degrees `0..=bound`. Products and exponentials
//! that would need a higher M-degree are only accepted when the dropped
//! terms vanish at the series truncation order; otherwise the operation
//! fails with [`UmbralError::MDegreeOverflow`]. For expressions in which every
//! `M` is paired with at least one power of `z` or `x` (`e^{Mz}`, `e^{M^2 z}`,
//! `e^{M^3 x}`), a bound of `3N` at series order `N` is always sufficient.

use num_traits::Zero;
use thiserror::Error;

use crate::hermite::m_moment;
use crate::poly::UPolynomial;
use crate::rational::{self, Rational};
use crate::report::{compare_pairs, compare_series, IdentityReport};
use crate::series::{SeriesError, SeriesVars, TruncSeries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UmbralError {
    #[error("exponent argument has nonzero constant term `{0}`")]
    NonzeroConstant(String),
    #[error("M-degree {degree} exceeds the bound {bound}")]
    MDegreeOverflow { degree: u32, bound: u32 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// M-degree bound sufficient at series order `order`; never below 3 so the
/// exponents `M^2 z` and `M^3 x` can always be written down.
pub fn default_bound(order: u32) -> u32 {
    3 * order.max(1)
}

/// `sum_d coeff_d M^d` for `d <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MExpression {
    coeffs: Vec<TruncSeries>,
}

impl MExpression {
    pub fn zero(vars: SeriesVars, order: u32, bound: u32) -> Self {
        Self {
            coeffs: vec![TruncSeries::zero(vars, order); bound as usize + 1],
        }
    }

    /// `coeff * M^degree`.
    pub fn monomial(degree: u32, coeff: TruncSeries, bound: u32) -> Result<Self, UmbralError> {
        if degree > bound {
            return Err(UmbralError::MDegreeOverflow { degree, bound });
        }
        let mut e = Self::zero(coeff.vars(), coeff.order(), bound);
        e.coeffs[degree as usize] = coeff;
        Ok(e)
    }

    /// `a + b M`.
    pub fn linear(a: TruncSeries, b: TruncSeries, bound: u32) -> Result<Self, UmbralError> {
        Self::monomial(0, a, bound)?.checked_add(&Self::monomial(1, b, bound)?)
    }

    pub fn bound(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn order(&self) -> u32 {
        self.coeffs[0].order()
    }

    pub fn vars(&self) -> SeriesVars {
        self.coeffs[0].vars()
    }

    /// Coefficient of `M^degree`.
    pub fn coeff(&self, degree: u32) -> Option<&TruncSeries> {
        self.coeffs.get(degree as usize)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, UmbralError> {
        let bound = self.bound().max(other.bound());
        let mut out = Self::zero(self.vars(), self.order().min(other.order()), bound);
        for (d, c) in out.coeffs.iter_mut().enumerate() {
            for side in [self, other] {
                if let Some(s) = side.coeffs.get(d) {
                    *c = c.checked_add(s)?;
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the series `s`.
    pub fn scale_series(&self, s: &TruncSeries) -> Result<Self, UmbralError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(s))
            .collect::<Result<_, _>>()?;
        Ok(Self { coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, UmbralError> {
        let bound = self.bound().max(other.bound());
        let order = self.order().min(other.order());
        let mut out = Self::zero(self.vars(), order, bound);
        for (i, a) in self.coeffs.iter().enumerate() {
            let Some(va) = a.valuation() else { continue };
            for (j, b) in other.coeffs.iter().enumerate() {
                let Some(vb) = b.valuation() else { continue };
                if va + vb > order {
                    continue;
                }
                let prod = a.checked_mul(b)?;
                if prod.is_zero() {
                    continue;
                }
                let degree = (i + j) as u32;
                if degree > bound {
                    return Err(UmbralError::MDegreeOverflow { degree, bound });
                }
                let slot = &mut out.coeffs[degree as usize];
                *slot = slot.checked_add(&prod)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self, UmbralError> {
        let mut acc = Self::monomial(0, TruncSeries::one(self.vars(), self.order()), self.bound())?;
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// `exp` of an M-polynomial whose coefficients all have zero constant
    /// term, so that the `k`-th power starts at series degree `k`.
    pub fn exp(&self) -> Result<Self, UmbralError> {
        if let Some(c) = self.coeffs.iter().find(|c| !c.constant_term().is_zero()) {
            return Err(UmbralError::NonzeroConstant(c.constant_term().to_string()));
        }
        let mut acc = Self::monomial(0, TruncSeries::one(self.vars(), self.order()), self.bound())?;
        let mut power = acc.clone();
        for k in 1..=self.order() {
            power = power.checked_mul(self)?;
            let scaled = Self {
                coeffs: power
                    .coeffs
                    .iter()
                    .map(|c| c.scale(&Rational::new(1.into(), rational::factorial(k))))
                    .collect(),
            };
            acc = acc.checked_add(&scaled)?;
        }
        Ok(acc)
    }
}

/// `eval(sum_d c_d M^d) = sum_d m_moment(d) c_d`.
pub fn umbral_eval(p: &MExpression) -> TruncSeries {
    let mut out = TruncSeries::zero(p.vars(), p.order());
    for (d, c) in p.coeffs.iter().enumerate() {
        let m = m_moment(d as u32);
        if !m.is_zero() {
            out = &out + &c.scale(&m);
        }
    }
    out
}

/// `e^{M s} = sum_{d <= bound} M^d s^d / d!` for `s` with zero constant term.
pub fn exp_of_linear_m(s: &TruncSeries, bound: u32) -> Result<MExpression, UmbralError> {
    let c0 = s.constant_term();
    if !c0.is_zero() {
        return Err(UmbralError::NonzeroConstant(c0.to_string()));
    }
    let mut out = MExpression::zero(s.vars(), s.order(), bound);
    let mut power = TruncSeries::one(s.vars(), s.order());
    for d in 0..=bound {
        out.coeffs[d as usize] = power.scale(&Rational::new(1.into(), rational::factorial(d)));
        power = &power * s;
    }
    if !power.is_zero() {
        return Err(UmbralError::MDegreeOverflow {
            degree: bound + 1,
            bound,
        });
    }
    Ok(out)
}

fn poly(c: Rational) -> UPolynomial {
    UPolynomial::constant(c)
}

/// `eval(e^{Mz} e^{Mx})` and `e^{z^2/2} e^{zx} eval(e^{Mx})`.
pub fn lemma_fm_i_sides(order: u32) -> Result<(TruncSeries, TruncSeries), UmbralError> {
    let bound = default_bound(order);
    let z = TruncSeries::z(SeriesVars::ZX, order);
    let x = TruncSeries::x(order);
    let lhs = umbral_eval(&exp_of_linear_m(&z, bound)?.checked_mul(&exp_of_linear_m(&x, bound)?)?);
    let gauss = (&z * &z).scale(&rational::ratio(1, 2)).exp()?;
    let cross = (&z * &x).exp()?;
    let rhs = gauss * cross * umbral_eval(&exp_of_linear_m(&x, bound)?);
    Ok((lhs, rhs))
}

/// Shift lemma for `f(t) = e^{tx}`, in `z` and `x` to total order `order`.
pub fn verify_lemma_fm_i(order: u32) -> Result<IdentityReport, UmbralError> {
    let (lhs, rhs) = lemma_fm_i_sides(order)?;
    Ok(compare_series("lemma-fm-i", order, &lhs, &rhs))
}

/// `eval(sum_n M^{2n} z^n / n!)` and `1 / sqrt(1 - 2z)`.
pub fn lemma_fm_ii_sides(order: u32) -> Result<(TruncSeries, TruncSeries), UmbralError> {
    let bound = default_bound(order);
    let mut sum = MExpression::zero(SeriesVars::Z, order, bound);
    for n in 0..=order {
        let term = TruncSeries::monomial(
            poly(Rational::new(1.into(), rational::factorial(n))),
            [n, 0],
            SeriesVars::Z,
            order,
        );
        sum = sum.checked_add(&MExpression::monomial(2 * n, term, bound)?)?;
    }
    let lhs = umbral_eval(&sum);
    let rhs = one_minus_two_z(SeriesVars::Z, order).sqrt()?.inverse()?;
    Ok((lhs, rhs))
}

pub fn verify_lemma_fm_ii(order: u32) -> Result<IdentityReport, UmbralError> {
    let (lhs, rhs) = lemma_fm_ii_sides(order)?;
    Ok(compare_series("lemma-fm-ii", order, &lhs, &rhs))
}

fn one_minus_two_z(vars: SeriesVars, order: u32) -> TruncSeries {
    TruncSeries::one(vars, order) - TruncSeries::z(vars, order).scale(&rational::int(2))
}

/// `eval(e^{M^2 z + M x})` and `(1-2z)^{-1/2} e^{x^2 / (2(1-2z))}`.
pub fn corollary_sides(order: u32) -> Result<(TruncSeries, TruncSeries), UmbralError> {
    let bound = default_bound(order);
    let z = TruncSeries::z(SeriesVars::ZX, order);
    let x = TruncSeries::x(order);
    let exponent = MExpression::monomial(2, z, bound)?.checked_add(&MExpression::monomial(1, x.clone(), bound)?)?;
    let lhs = umbral_eval(&exponent.exp()?);
    let base = one_minus_two_z(SeriesVars::ZX, order);
    let gauss = (&x * &x * base.inverse()?).scale(&rational::ratio(1, 2)).exp()?;
    let rhs = base.sqrt()?.inverse()? * gauss;
    Ok((lhs, rhs))
}

/// `eval(e^{M^2 z + M^3 x})` and
/// `(1-2z)^{-1/2} sum_k m_moment(3k) x^k / (k! (1-2z)^{3k/2})`.
pub fn ecor_sides(order: u32) -> Result<(TruncSeries, TruncSeries), UmbralError> {
    let bound = default_bound(order);
    let z = TruncSeries::z(SeriesVars::ZX, order);
    let x = TruncSeries::x(order);
    let exponent = MExpression::monomial(2, z, bound)?.checked_add(&MExpression::monomial(3, x.clone(), bound)?)?;
    let lhs = umbral_eval(&exponent.exp()?);
    let root = one_minus_two_z(SeriesVars::ZX, order).sqrt()?;
    let mut sum = TruncSeries::zero(SeriesVars::ZX, order);
    for k in 0..=order {
        let moment = m_moment(3 * k);
        if moment.is_zero() {
            continue;
        }
        let weight = moment / Rational::from_integer(rational::factorial(k));
        let term = x.pow_int(k as i64)? * root.pow_int(-3 * k as i64)?;
        sum = sum + term.scale(&weight);
    }
    let rhs = root.inverse()? * sum;
    Ok((lhs, rhs))
}

/// Corollary instance `f(t) = e^{tx}` followed by the `e^{M^2 z + M^3 x}`
/// reduction, both to total order `order` in `z` and `x`.
pub fn verify_corollary_and_ecor(order: u32) -> Result<IdentityReport, UmbralError> {
    let (cl, cr) = corollary_sides(order)?;
    let (el, er) = ecor_sides(order)?;
    Ok(compare_pairs("corollary-ecor", order, &[(&cl, &cr), (&el, &er)]))
}
