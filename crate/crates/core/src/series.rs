//! Truncated formal power series in `z` (optionally also in a second series
//! variable `x`) with [`UPolynomial`] coefficients.
//!
//! A series of order `N` keeps every term of total series degree `<= N`.
//! Binary operations produce a result of order `min` of the operand orders.
//! Inverse, square root, exponential and logarithm are computed one
//! homogeneous component at a time from the usual coefficient recurrences,
//! which makes them exact and valid for both the one- and two-variable case.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::UPolynomial;
use crate::rational::{self, Rational};

/// Exponents `[deg_z, deg_x]`; `deg_x` is always 0 for univariate series.
pub type Exponents = [u32; 2];

/// Series variables a [`TruncSeries`] ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesVars {
    /// `z` alone.
    Z,
    /// `z` and `x`, truncated by total degree.
    ZX,
}

impl SeriesVars {
    pub fn arity(self) -> usize {
        match self {
            SeriesVars::Z => 1,
            SeriesVars::ZX => 2,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("incompatible series variables {0:?} and {1:?}")]
    IncompatibleVars(SeriesVars, SeriesVars),
    #[error("constant term `{0}` is not a nonzero scalar")]
    NonUnitConstant(String),
    #[error("constant term must be 1, found `{0}`")]
    ConstantNotOne(String),
    #[error("constant term must be 0, found `{0}`")]
    ConstantNotZero(String),
    #[error("exponents {exponents:?} exceed truncation order {order}")]
    BeyondOrder { exponents: Vec<u32>, order: u32 },
    #[error("exponent tuple of length {0} does not match the series variables")]
    BadExponentArity(usize),
    #[error("series has terms free of z and cannot be divided by z")]
    NotDivisibleByZ,
    #[error("series of order 0 cannot be divided by z")]
    OrderExhausted,
}

type Homog = BTreeMap<Exponents, UPolynomial>;

fn total(e: &Exponents) -> u32 {
    e[0] + e[1]
}

fn hom_add_term(h: &mut Homog, e: Exponents, p: UPolynomial) {
    if p.is_zero() {
        return;
    }
    let entry = h.entry(e).or_default();
    *entry += &p;
    if entry.is_zero() {
        h.remove(&e);
    }
}

fn hom_mul_into(acc: &mut Homog, a: &Homog, b: &Homog, factor: &Rational) {
    for (ea, pa) in a {
        for (eb, pb) in b {
            let prod = (pa * pb).scale(factor);
            hom_add_term(acc, [ea[0] + eb[0], ea[1] + eb[1]], prod);
        }
    }
}

fn hom_scale(h: &Homog, factor: &Rational) -> Homog {
    h.iter()
        .map(|(e, p)| (*e, p.scale(factor)))
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

/// Truncated power series with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    vars: SeriesVars,
    order: u32,
    coeffs: BTreeMap<Exponents, UPolynomial>,
}

impl TruncSeries {
    pub fn zero(vars: SeriesVars, order: u32) -> Self {
        Self {
            vars,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(vars: SeriesVars, order: u32) -> Self {
        Self::constant(UPolynomial::one(), vars, order)
    }

    pub fn constant(p: UPolynomial, vars: SeriesVars, order: u32) -> Self {
        Self::monomial(p, [0, 0], vars, order)
    }

    /// The series variable `z`.
    pub fn z(vars: SeriesVars, order: u32) -> Self {
        Self::monomial(UPolynomial::one(), [1, 0], vars, order)
    }

    /// The second series variable `x` of a bivariate series.
    pub fn x(order: u32) -> Self {
        Self::monomial(UPolynomial::one(), [0, 1], SeriesVars::ZX, order)
    }

    /// `p * z^e[0] * x^e[1]`, dropped if beyond the order.
    pub fn monomial(p: UPolynomial, e: Exponents, vars: SeriesVars, order: u32) -> Self {
        assert!(
            vars == SeriesVars::ZX || e[1] == 0,
            "x exponent in a univariate series"
        );
        let mut s = Self::zero(vars, order);
        s.add_term(e, p);
        s
    }

    /// Univariate series from the coefficients of `z^0, z^1, ...`.
    pub fn from_z_coeffs<I: IntoIterator<Item = UPolynomial>>(order: u32, coeffs: I) -> Self {
        let mut s = Self::zero(SeriesVars::Z, order);
        for (n, p) in coeffs.into_iter().enumerate() {
            s.add_term([n as u32, 0], p);
        }
        s
    }

    /// Adds `p` to the coefficient at `e`; terms beyond the order are dropped.
    pub fn add_term(&mut self, e: Exponents, p: UPolynomial) {
        if total(&e) > self.order || p.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_default();
        *entry += &p;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn vars(&self) -> SeriesVars {
        self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &UPolynomial)> {
        self.coeffs.iter()
    }

    /// Lowest total degree carrying a nonzero term.
    pub fn valuation(&self) -> Option<u32> {
        self.coeffs.keys().map(total).min()
    }

    pub fn constant_term(&self) -> UPolynomial {
        self.coeffs.get(&[0, 0]).cloned().unwrap_or_default()
    }

    /// Exact coefficient at `exponents` (one entry per series variable).
    pub fn coefficient(&self, exponents: &[u32]) -> Result<UPolynomial, SeriesError> {
        if exponents.len() != self.vars.arity() {
            return Err(SeriesError::BadExponentArity(exponents.len()));
        }
        let e = [exponents[0], exponents.get(1).copied().unwrap_or(0)];
        if total(&e) > self.order {
            return Err(SeriesError::BeyondOrder {
                exponents: exponents.to_vec(),
                order: self.order,
            });
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_default())
    }

    /// Coefficient of `z^n` of a univariate series, zero beyond the order.
    pub fn coeff_z(&self, n: u32) -> UPolynomial {
        self.coeffs.get(&[n, 0]).cloned().unwrap_or_default()
    }

    /// Every exponent tuple within the order, by ascending total degree and
    /// then ascending `z` exponent.
    pub fn exponent_grid(vars: SeriesVars, order: u32) -> Vec<Exponents> {
        let mut out = Vec::new();
        for t in 0..=order {
            match vars {
                SeriesVars::Z => out.push([t, 0]),
                SeriesVars::ZX => out.extend((0..=t).map(|i| [i, t - i])),
            }
        }
        out
    }

    /// Drops every term of total degree above `order`.
    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        Self {
            vars: self.vars,
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| total(e) <= order)
                .map(|(e, p)| (*e, p.clone()))
                .collect(),
        }
    }

    /// Views a univariate series as a bivariate one in `z` and `x`.
    pub fn to_bivariate(&self) -> Self {
        Self {
            vars: SeriesVars::ZX,
            order: self.order,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Applies `f` to every coefficient polynomial.
    pub fn map_coeffs<F: Fn(&UPolynomial) -> UPolynomial>(&self, f: F) -> Self {
        let mut out = Self::zero(self.vars, self.order);
        for (e, p) in &self.coeffs {
            out.add_term(*e, f(p));
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|p| p.scale(c))
    }

    pub fn mul_poly(&self, q: &UPolynomial) -> Self {
        self.map_coeffs(|p| p * q)
    }

    /// Coefficient-wise derivative in the polynomial variable `u`.
    pub fn diff_u(&self) -> Self {
        self.map_coeffs(UPolynomial::diff_u)
    }

    /// Divides by `z`. Every term must contain `z`; the result has order
    /// one less than the input.
    pub fn div_z(&self) -> Result<Self, SeriesError> {
        if self.order == 0 {
            return Err(SeriesError::OrderExhausted);
        }
        if self.coeffs.keys().any(|e| e[0] == 0) {
            return Err(SeriesError::NotDivisibleByZ);
        }
        Ok(Self {
            vars: self.vars,
            order: self.order - 1,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, p)| ([e[0] - 1, e[1]], p.clone()))
                .collect(),
        })
    }

    fn check_vars(&self, other: &Self) -> Result<(), SeriesError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(SeriesError::IncompatibleVars(self.vars, other.vars))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_vars(other)?;
        let order = self.order.min(other.order);
        let mut out = self.truncate(order);
        for (e, p) in &other.coeffs {
            out.add_term(*e, p.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.checked_add(&-other)
    }

    /// Truncated product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_vars(other)?;
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.vars, order);
        for (ea, pa) in &self.coeffs {
            let ta = total(ea);
            if ta > order {
                continue;
            }
            for (eb, pb) in &other.coeffs {
                if ta + total(eb) <= order {
                    out.add_term([ea[0] + eb[0], ea[1] + eb[1]], pa * pb);
                }
            }
        }
        Ok(out)
    }

    fn components(&self) -> Vec<Homog> {
        let mut comps = vec![Homog::new(); self.order as usize + 1];
        for (e, p) in &self.coeffs {
            comps[total(e) as usize].insert(*e, p.clone());
        }
        comps
    }

    fn from_components(vars: SeriesVars, order: u32, comps: Vec<Homog>) -> Self {
        let mut out = Self::zero(vars, order);
        for h in comps {
            for (e, p) in h {
                out.add_term(e, p);
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self
            .constant_term()
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| SeriesError::NonUnitConstant(self.constant_term().to_string()))?;
        let neg_inv = -c0.recip();
        let a = self.components();
        let mut b: Vec<Homog> = Vec::with_capacity(a.len());
        b.push(hom_scale(&a[0], &c0.recip().pow(2)));
        for k in 1..a.len() {
            let mut acc = Homog::new();
            for j in 1..=k {
                hom_mul_into(&mut acc, &a[j], &b[k - j], &neg_inv);
            }
            b.push(acc);
        }
        Ok(Self::from_components(self.vars, self.order, b))
    }

    /// Square root with constant term 1; the input must have constant term 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        self.require_constant_one()?;
        let a = self.components();
        let half = rational::ratio(1, 2);
        let minus_half = -half.clone();
        let mut s: Vec<Homog> = Vec::with_capacity(a.len());
        s.push(a[0].clone());
        for k in 1..a.len() {
            let mut acc = hom_scale(&a[k], &half);
            for j in 1..k {
                hom_mul_into(&mut acc, &s[j], &s[k - j], &minus_half);
            }
            s.push(acc);
        }
        Ok(Self::from_components(self.vars, self.order, s))
    }

    /// Exponential; the input must have zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(SeriesError::ConstantNotZero(c0.to_string()));
        }
        let a = self.components();
        let mut f: Vec<Homog> = Vec::with_capacity(a.len());
        f.push(BTreeMap::from([([0, 0], UPolynomial::one())]));
        for k in 1..a.len() {
            let mut acc = Homog::new();
            for j in 1..=k {
                let w = rational::ratio(j as i64, k as i64);
                hom_mul_into(&mut acc, &a[j], &f[k - j], &w);
            }
            f.push(acc);
        }
        Ok(Self::from_components(self.vars, self.order, f))
    }

    /// Logarithm; the input must have constant term 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        self.require_constant_one()?;
        let a = self.components();
        let mut l: Vec<Homog> = Vec::with_capacity(a.len());
        l.push(Homog::new());
        for k in 1..a.len() {
            let mut acc = a[k].clone();
            for j in 1..k {
                let w = rational::ratio(-(j as i64), k as i64);
                hom_mul_into(&mut acc, &l[j], &a[k - j], &w);
            }
            l.push(acc);
        }
        Ok(Self::from_components(self.vars, self.order, l))
    }

    /// Integer power; negative exponents go through [`TruncSeries::inverse`].
    pub fn pow_int(&self, k: i64) -> Result<Self, SeriesError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.vars, self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    fn require_constant_one(&self) -> Result<(), SeriesError> {
        let c0 = self.constant_term();
        if c0.as_constant().is_some_and(|c| c.is_one()) {
            Ok(())
        } else {
            Err(SeriesError::ConstantNotOne(c0.to_string()))
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in Self::exponent_grid(self.vars, self.order) {
            let Some(p) = self.coeffs.get(&e) else {
                continue;
            };
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({p})")?;
            if e[0] > 0 {
                write!(f, "*z^{}", e[0])?;
            }
            if e[1] > 0 {
                write!(f, "*x^{}", e[1])?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({})", self.order + 1)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        self.map_coeffs(|p| -p)
    }
}

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}

macro_rules! series_binop {
    ($($tr:ident $method:ident $checked:ident),*) => {$(
        /// Panics on incompatible series variables; see the `checked_` form.
        impl $tr for &TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: &TruncSeries) -> TruncSeries {
                self.$checked(rhs).expect("incompatible series variables")
            }
        }
        impl $tr for TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: TruncSeries) -> TruncSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: &TruncSeries) -> TruncSeries {
                (&self).$method(rhs)
            }
        }
        impl $tr<TruncSeries> for &TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: TruncSeries) -> TruncSeries {
                self.$method(&rhs)
            }
        }
    )*};
}

series_binop!(Add add checked_add, Sub sub checked_sub, Mul mul checked_mul);
