//! Sparse polynomials over the rationals in the two commuting formal
//! variables `u` and `x`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

/// Exponent pair `(deg_u, deg_x)`.
pub type Monomial = (u32, u32);

/// Polynomial in `u` and `x` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// coefficient-wise equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl UPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The variable `u`.
    pub fn u() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, deg_u: u32, deg_x: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_u, deg_x), c);
        }
        Self { terms }
    }

    /// Polynomial in `u` alone from coefficients listed by ascending degree.
    pub fn from_u_coeffs<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in coeffs.into_iter().enumerate() {
            p.add_term((d as u32, 0), c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c` to the coefficient of `m`, pruning the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(deg_u, deg_x)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_u: u32, deg_x: u32) -> Rational {
        self.terms
            .get(&(deg_u, deg_x))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Returns the scalar value if the polynomial has no `u` or `x`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn degree_u(&self) -> Option<u32> {
        self.terms.keys().map(|&(du, _)| du).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplies by `u^deg_u x^deg_x`.
    pub fn shift(&self, deg_u: u32, deg_x: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(du, dx), v)| ((du + deg_u, dx + deg_x), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative in `u`; `x` is a constant.
    pub fn diff_u(&self) -> Self {
        let mut out = Self::zero();
        for (&(du, dx), c) in &self.terms {
            if du > 0 {
                out.add_term((du - 1, dx), c * rational::int(du as i64));
            }
        }
        out
    }

    /// Formal antiderivative in `u` with zero constant of integration.
    pub fn int_u(&self) -> Self {
        let mut out = Self::zero();
        for (&(du, dx), c) in &self.terms {
            out.add_term((du + 1, dx), c / rational::int(du as i64 + 1));
        }
        out
    }

    /// Substitutes a rational value for `u`.
    pub fn eval_u(&self, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(du, dx), c) in &self.terms {
            out.add_term((0, dx), c * num_traits::pow(value.clone(), du as usize));
        }
        out
    }
}

fn render_monomial(du: u32, dx: u32) -> String {
    let mut parts = Vec::new();
    match du {
        0 => {}
        1 => parts.push("u".to_string()),
        d => parts.push(format!("u^{d}")),
    }
    match dx {
        0 => {}
        1 => parts.push("x".to_string()),
        d => parts.push(format!("x^{d}")),
    }
    parts.join("*")
}

/// Canonical text form: descending degree in `u`, then in `x`, explicit `*`
/// and `^`, fractions as `p/q`.
impl fmt::Display for UPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(du, dx), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mono = render_monomial(du, dx);
            if mono.is_empty() {
                f.write_str(&rational::render(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", rational::render(&mag), mono)?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for UPolynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for UPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(rational::int(c))
    }
}

impl AddAssign<&UPolynomial> for UPolynomial {
    fn add_assign(&mut self, rhs: &UPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&UPolynomial> for UPolynomial {
    fn sub_assign(&mut self, rhs: &UPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &UPolynomial {
    type Output = UPolynomial;
    fn add(self, rhs: &UPolynomial) -> UPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &UPolynomial {
    type Output = UPolynomial;
    fn sub(self, rhs: &UPolynomial) -> UPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &UPolynomial {
    type Output = UPolynomial;
    fn mul(self, rhs: &UPolynomial) -> UPolynomial {
        let mut out = UPolynomial::zero();
        for (&(au, ax), ac) in &self.terms {
            for (&(bu, bx), bc) in &rhs.terms {
                out.add_term((au + bu, ax + bx), ac * bc);
            }
        }
        out
    }
}

impl Neg for &UPolynomial {
    type Output = UPolynomial;
    fn neg(self) -> UPolynomial {
        UPolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for UPolynomial {
    type Output = UPolynomial;
    fn neg(self) -> UPolynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for UPolynomial {
            type Output = UPolynomial;
            fn $method(self, rhs: UPolynomial) -> UPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&UPolynomial> for UPolynomial {
            type Output = UPolynomial;
            fn $method(self, rhs: &UPolynomial) -> UPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<UPolynomial> for &UPolynomial {
            type Output = UPolynomial;
            fn $method(self, rhs: UPolynomial) -> UPolynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
