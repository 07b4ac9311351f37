//! The series `w = u C(3uz)` and the three factors of the `h_{3n}`
//! generating function, each built by more than one route.

use crate::hermite::{hermite_h_table, m_moment};
use crate::poly::UPolynomial;
use crate::rational::{self, Rational};
use crate::report::compare_pairs;
use crate::series::{SeriesVars, TruncSeries};

use super::IdentityError;

const Z: SeriesVars = SeriesVars::Z;

fn u() -> UPolynomial {
    UPolynomial::u()
}

fn z(order: u32) -> TruncSeries {
    TruncSeries::z(Z, order)
}

fn constant(p: UPolynomial, order: u32) -> TruncSeries {
    TruncSeries::constant(p, Z, order)
}

fn inv_factorial(n: u32) -> Rational {
    Rational::new(1.into(), rational::factorial(n))
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan_number(n: u32) -> Rational {
    Rational::new(rational::binomial(2 * n, n), (n + 1).into())
}

/// `w` computed three independent ways.
#[derive(Clone, Debug)]
pub struct WRoutes {
    /// Iterates `w <- u + 3 w^2 z` from `w = u`.
    pub fixed_point: TruncSeries,
    /// `(1 - sqrt(1 - 12uz)) / (6z)`.
    pub closed_form: TruncSeries,
    /// `sum_n 3^n C_n u^{n+1} z^n`.
    pub explicit: TruncSeries,
}

fn fixed_point_step(w: &TruncSeries, order: u32) -> TruncSeries {
    constant(u(), order) + (w * w * z(order)).scale(&rational::int(3))
}

pub fn w_routes(order: u32) -> Result<WRoutes, IdentityError> {
    // each pass fixes one more power of z
    let mut fixed_point = constant(u(), order);
    for _ in 0..order {
        fixed_point = fixed_point_step(&fixed_point, order);
    }

    let twelve_uz = z(order + 1).mul_poly(&u().scale(&rational::int(12)));
    let root = (TruncSeries::one(Z, order + 1) - twelve_uz).sqrt()?;
    let closed_form = (TruncSeries::one(Z, order + 1) - root)
        .div_z()?
        .scale(&rational::ratio(1, 6));

    let explicit = TruncSeries::from_z_coeffs(
        order,
        (0..=order).map(|n| {
            let c = catalan_number(n) * Rational::from_integer(num_bigint::BigInt::from(3).pow(n));
            UPolynomial::monomial(c, n + 1, 0)
        }),
    );

    Ok(WRoutes {
        fixed_point,
        closed_form,
        explicit,
    })
}

/// Checks that every route for `w` agrees and that `w = u + 3 w^2 z`.
pub fn check_w_routes(order: u32) -> Result<crate::report::IdentityReport, IdentityError> {
    let r = w_routes(order)?;
    let functional = fixed_point_step(&r.explicit, order);
    Ok(compare_pairs(
        "w-routes",
        order,
        &[
            (&r.fixed_point, &r.closed_form),
            (&r.fixed_point, &r.explicit),
            (&r.explicit, &functional),
        ],
    ))
}

/// The weighted w-tree generating function, with all routes checked equal.
pub fn w_series(order: u32) -> Result<TruncSeries, IdentityError> {
    let report = check_w_routes(order)?;
    if !report.is_verified() {
        return Err(IdentityError::RouteDisagreement(Box::new(report)));
    }
    Ok(w_routes(order)?.explicit)
}

/// `sum_{n <= order} h_{k n}(u) z^n / n!` for stride `k` in `{2, 3}`.
pub fn lhs_lacunary(stride: u32, order: u32) -> Result<TruncSeries, IdentityError> {
    if !(2..=3).contains(&stride) {
        return Err(IdentityError::UnsupportedStride(stride));
    }
    let table = hermite_h_table(stride * order);
    Ok(TruncSeries::from_z_coeffs(
        order,
        (0..=order).map(|n| table[(stride * n) as usize].scale(&inv_factorial(n))),
    ))
}

/// `(1 - 2z)^{-1/2} exp(u^2 z / (1 - 2z))`.
pub fn rhs_doetsch(order: u32) -> Result<TruncSeries, IdentityError> {
    let base = TruncSeries::one(Z, order) - z(order).scale(&rational::int(2));
    let exponent = z(order).mul_poly(&u().pow(2)) * base.inverse()?;
    Ok(base.sqrt()?.inverse()? * exponent.exp()?)
}

/// `T`, the generating function of acyclic components, by every route.
#[derive(Clone, Debug)]
pub struct TreeRoutes {
    /// `(w - u)(3u - w) / 6`.
    pub product_form: TruncSeries,
    /// Vertex-rooted minus edge-rooted trees, `w^3 z - 9 w^4 z^2 / 2`.
    pub rooted_difference: TruncSeries,
    /// `((1 - 12uz)^{3/2} - 1) / (108 z^2) + u / (6z) - u^2 / 2`.
    pub integrated: TruncSeries,
    /// `sum_{n >= 1} 3^n (2n)! / (n+2)! u^{n+2} z^n / n!`.
    pub explicit: TruncSeries,
}

/// `T` by its integrated closed form. Inputs are formed at `order + 2` and
/// divided by `z` twice, so the result is exact at `order`.
fn tree_integrated(order: u32) -> Result<TruncSeries, IdentityError> {
    let hi = order + 2;
    let one = TruncSeries::one(Z, hi);
    let root = (&one - z(hi).mul_poly(&u().scale(&rational::int(12)))).sqrt()?;
    // 108 z^2 (u / (6z) - u^2 / 2) = 18 u z - 54 u^2 z^2
    let pole_terms = z(hi).mul_poly(&u().scale(&rational::int(18)))
        - (z(hi) * z(hi)).mul_poly(&u().pow(2).scale(&rational::int(54)));
    let numerator = root.pow_int(3)? - one + pole_terms;
    Ok(numerator.div_z()?.div_z()?.scale(&rational::ratio(1, 108)))
}

fn tree_explicit(order: u32) -> TruncSeries {
    let mut t = TruncSeries::zero(Z, order);
    for n in 1..=order {
        let c = Rational::new(
            num_bigint::BigInt::from(3).pow(n) * rational::factorial(2 * n),
            rational::factorial(n + 2) * rational::factorial(n),
        );
        t.add_term([n, 0], UPolynomial::monomial(c, n + 2, 0));
    }
    t
}

/// Shared ingredients for one truncation order. `w` is computed (and its
/// routes cross-checked) once, and every factor is derived from that value.
#[derive(Clone, Debug)]
pub struct LacunaryFactors {
    order: u32,
    w: TruncSeries,
}

impl LacunaryFactors {
    pub fn new(order: u32) -> Result<Self, IdentityError> {
        Ok(Self {
            order,
            w: w_series(order)?,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn w(&self) -> &TruncSeries {
        &self.w
    }

    fn one(&self) -> TruncSeries {
        TruncSeries::one(Z, self.order)
    }

    fn u_series(&self) -> TruncSeries {
        constant(u(), self.order)
    }

    /// `6 w z`.
    pub fn six_wz(&self) -> TruncSeries {
        (&self.w * z(self.order)).scale(&rational::int(6))
    }

    /// `1 / (1 - 6wz)`, the weight of one subdivided edge.
    pub fn edge_factor(&self) -> Result<TruncSeries, IdentityError> {
        Ok((self.one() - self.six_wz()).inverse()?)
    }

    pub fn tree_routes(&self) -> Result<TreeRoutes, IdentityError> {
        let n = self.order;
        let w = &self.w;
        let u_s = self.u_series();
        let product_form = ((w - &u_s) * (u_s.scale(&rational::int(3)) - w)).scale(&rational::ratio(1, 6));
        let zz = z(n) * z(n);
        let w2 = w * w;
        let rooted_difference = &w2 * w * z(n) - (&w2 * &w2 * zz).scale(&rational::ratio(9, 2));
        Ok(TreeRoutes {
            product_form,
            rooted_difference,
            integrated: tree_integrated(n)?,
            explicit: tree_explicit(n),
        })
    }

    pub fn check_tree_routes(&self) -> Result<crate::report::IdentityReport, IdentityError> {
        let r = self.tree_routes()?;
        Ok(compare_pairs(
            "tree-gf-routes",
            self.order,
            &[
                (&r.product_form, &r.rooted_difference),
                (&r.product_form, &r.integrated),
                (&r.product_form, &r.explicit),
            ],
        ))
    }

    /// `T`; fails if its routes disagree.
    pub fn tree_gf(&self) -> Result<TruncSeries, IdentityError> {
        let report = self.check_tree_routes()?;
        if !report.is_verified() {
            return Err(IdentityError::RouteDisagreement(Box::new(report)));
        }
        Ok(self.tree_routes()?.product_form)
    }

    /// `dT/du` and `w - u`.
    pub fn derivative_sides(&self) -> Result<(TruncSeries, TruncSeries), IdentityError> {
        Ok((self.tree_gf()?.diff_u(), &self.w - self.u_series()))
    }

    /// The one-cycle factor as `exp(sum_n (6wz)^n / (2n))`,
    /// `exp(-log(1 - 6wz) / 2)` and `1 / sqrt(1 - 6wz)`.
    pub fn one_cycle_routes(&self) -> Result<[TruncSeries; 3], IdentityError> {
        let s = self.six_wz();
        let mut cycles = TruncSeries::zero(Z, self.order);
        let mut power = self.one();
        for n in 1..=self.order {
            power = &power * &s;
            cycles = cycles + power.scale(&rational::ratio(1, 2 * n as i64));
        }
        let base = self.one() - &s;
        Ok([
            cycles.exp()?,
            base.log()?.scale(&rational::ratio(-1, 2)).exp()?,
            base.sqrt()?.inverse()?,
        ])
    }

    pub fn check_one_cycle_routes(&self) -> Result<crate::report::IdentityReport, IdentityError> {
        let [a, b, c] = self.one_cycle_routes()?;
        Ok(compare_pairs("one-cycle-routes", self.order, &[(&a, &b), (&a, &c)]))
    }

    /// `(1 - 6wz)^{-1/2}`; fails if its routes disagree.
    pub fn one_cycle_factor(&self) -> Result<TruncSeries, IdentityError> {
        let report = self.check_one_cycle_routes()?;
        if !report.is_verified() {
            return Err(IdentityError::RouteDisagreement(Box::new(report)));
        }
        let [_, _, c] = self.one_cycle_routes()?;
        Ok(c)
    }

    /// `sum_n (6n)! / (2^{3n} (3n)!) (1 - 6wz)^{-3n} z^{2n} / (2n)!`.
    pub fn multi_cycle_factor(&self) -> Result<TruncSeries, IdentityError> {
        let edge = self.edge_factor()?;
        let mut sum = TruncSeries::zero(Z, self.order);
        for n in 0..=self.order / 2 {
            let weight = m_moment(6 * n) * inv_factorial(2 * n);
            let term = edge.pow_int(3 * n as i64)? * z(self.order).pow_int(2 * n as i64)?;
            sum = sum + term.scale(&weight);
        }
        Ok(sum)
    }

    /// The same factor written as `2F0(1/6, 5/6; ; 54 z^2 / (1 - 6wz)^3)`.
    pub fn hypergeometric_factor(&self) -> Result<TruncSeries, IdentityError> {
        let edge = self.edge_factor()?;
        let mut sum = TruncSeries::zero(Z, self.order);
        for n in 0..=self.order / 2 {
            let weight = super::hypergeom::two_f_zero_weight(n);
            let term = edge.pow_int(3 * n as i64)? * z(self.order).pow_int(2 * n as i64)?;
            sum = sum + term.scale(&weight);
        }
        Ok(sum)
    }

    /// `e^T (1 - 6wz)^{-1/2} sum_n ...`, the right side of the `h_{3n}`
    /// identity.
    pub fn rhs_main(&self) -> Result<TruncSeries, IdentityError> {
        Ok(self.tree_gf()?.exp()? * self.one_cycle_factor()? * self.multi_cycle_factor()?)
    }
}

pub fn tree_gf(order: u32) -> Result<TruncSeries, IdentityError> {
    LacunaryFactors::new(order)?.tree_gf()
}

pub fn one_cycle_factor(order: u32) -> Result<TruncSeries, IdentityError> {
    LacunaryFactors::new(order)?.one_cycle_factor()
}

pub fn multi_cycle_factor(order: u32) -> Result<TruncSeries, IdentityError> {
    LacunaryFactors::new(order)?.multi_cycle_factor()
}

pub fn rhs_main(order: u32) -> Result<TruncSeries, IdentityError> {
    LacunaryFactors::new(order)?.rhs_main()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::hermite_h;
    use crate::rational::{int, ratio};

    fn up(c: Rational, d: u32) -> UPolynomial {
        UPolynomial::monomial(c, d, 0)
    }

    #[test]
    fn catalan() {
        let cs: Vec<Rational> = (0..7).map(catalan_number).collect();
        let expected: Vec<Rational> = [1, 1, 2, 5, 14, 42, 132].iter().map(|&c| int(c)).collect();
        assert_eq!(cs, expected);
    }

    #[test]
    fn w_coefficients() {
        let w = w_series(6).unwrap();
        assert_eq!(w.coeff_z(0), u());
        assert_eq!(w.coeff_z(1), up(int(3), 2));
        assert_eq!(w.coeff_z(2), up(int(18), 3));
        assert_eq!(w.coeff_z(3), up(int(135), 4));
        assert!(check_w_routes(12).unwrap().is_verified());
    }

    #[test]
    fn lacunary_lhs() {
        let l3 = lhs_lacunary(3, 2).unwrap();
        assert_eq!(l3.coeff_z(0), UPolynomial::one());
        assert_eq!(l3.coeff_z(1), hermite_h(3));
        assert_eq!(l3.coeff_z(1).to_string(), "u^3 + 3*u");
        let l2 = lhs_lacunary(2, 2).unwrap();
        assert_eq!(l2.coeff_z(1).to_string(), "u^2 + 1");
        assert!(matches!(lhs_lacunary(4, 2), Err(IdentityError::UnsupportedStride(4))));
    }

    #[test]
    fn doetsch_rhs() {
        let r = rhs_doetsch(4).unwrap();
        assert_eq!(r.coeff_z(0), UPolynomial::one());
        assert_eq!(r.coeff_z(1).to_string(), "u^2 + 1");
        assert_eq!(r.coeff_z(2), hermite_h(4).scale(&ratio(1, 2)));
        assert_eq!(r.coeff_z(2).to_string(), "1/2*u^4 + 3*u^2 + 3/2");
    }

    #[test]
    fn tree_coefficients() {
        let f = LacunaryFactors::new(8).unwrap();
        let t = f.tree_gf().unwrap();
        assert!(t.coeff_z(0).is_zero());
        assert_eq!(t.coeff_z(1), up(int(1), 3));
        assert_eq!(t.coeff_z(2), up(ratio(9, 2), 4));
        assert!(f.check_tree_routes().unwrap().is_verified());
        let (dt, wu) = f.derivative_sides().unwrap();
        assert_eq!(dt, wu);
    }

    #[test]
    fn cycle_factors() {
        let f = LacunaryFactors::new(6).unwrap();
        let one = f.one_cycle_factor().unwrap();
        assert_eq!(one.coeff_z(0), UPolynomial::one());
        assert_eq!(one.coeff_z(1), up(int(3), 1));
        assert!(f.check_one_cycle_routes().unwrap().is_verified());

        let multi = f.multi_cycle_factor().unwrap();
        assert_eq!(multi.coeff_z(0), UPolynomial::one());
        assert!(multi.coeff_z(1).is_zero());
        assert_eq!(multi.coeff_z(2), UPolynomial::from(ratio(15, 2)));
        assert_eq!(m_moment(12), int(10395));
        assert_eq!(f.hypergeometric_factor().unwrap(), multi);
    }

    /// Order-1 hand expansion: `e^T` gives `u^3 z`, the cycle factor `3u z`.
    #[test]
    fn main_identity_low_order() {
        let r = rhs_main(1).unwrap();
        assert_eq!(r.coeff_z(0), UPolynomial::one());
        assert_eq!(r.coeff_z(1), hermite_h(3));
        assert_eq!(rhs_main(0).unwrap(), TruncSeries::one(Z, 0));
    }
}
