//! Both sides of every generating-function identity, and the closed set of
//! named checks run by [`verify`].

mod factors;
pub mod hypergeom;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::report::{compare_pairs, compare_series, IdentityReport};
use crate::series::SeriesError;
use crate::umbral::{self, UmbralError};

pub use factors::{
    catalan_number, check_w_routes, lhs_lacunary, multi_cycle_factor, one_cycle_factor, rhs_doetsch, rhs_main,
    tree_gf, w_routes, w_series, LacunaryFactors, TreeRoutes, WRoutes,
};
pub use hypergeom::hypergeom_form_check;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("lacunary stride {0} is not supported (expected 2 or 3)")]
    UnsupportedStride(u32),
    #[error("independent routes disagree: {0}")]
    RouteDisagreement(Box<IdentityReport>),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Umbral(#[from] UmbralError),
}

/// Every identity [`verify`] knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `sum h_{2n} z^n/n! = (1-2z)^{-1/2} exp(u^2 z/(1-2z))`.
    Doetsch,
    /// `sum h_{3n} z^n/n!` against the three-factor product.
    Main,
    TreeGfRoutes,
    OneCycleRoutes,
    WRoutes,
    Hypergeom,
    LemmaFmI,
    LemmaFmII,
    CorollaryEcor,
    /// `dT/du = w - u`.
    DtDu,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::Doetsch,
        Identity::Main,
        Identity::TreeGfRoutes,
        Identity::OneCycleRoutes,
        Identity::WRoutes,
        Identity::Hypergeom,
        Identity::LemmaFmI,
        Identity::LemmaFmII,
        Identity::CorollaryEcor,
        Identity::DtDu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Doetsch => "doetsch",
            Identity::Main => "main",
            Identity::TreeGfRoutes => "tree-gf-routes",
            Identity::OneCycleRoutes => "one-cycle-routes",
            Identity::WRoutes => "w-routes",
            Identity::Hypergeom => "hypergeom",
            Identity::LemmaFmI => "lemma-fm-i",
            Identity::LemmaFmII => "lemma-fm-ii",
            Identity::CorollaryEcor => "corollary-ecor",
            Identity::DtDu => "dT-du",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| IdentityError::UnknownIdentity(s.to_string()))
    }
}

/// Compares the two sides of `identity` coefficient by coefficient up to
/// `order` and reports the first mismatch.
pub fn verify(identity: Identity, order: u32) -> Result<IdentityReport, IdentityError> {
    let name = identity.name();
    let report = match identity {
        Identity::Doetsch => compare_series(name, order, &lhs_lacunary(2, order)?, &rhs_doetsch(order)?),
        Identity::Main => {
            let factors = LacunaryFactors::new(order)?;
            compare_series(name, order, &lhs_lacunary(3, order)?, &factors.rhs_main()?)
        }
        Identity::TreeGfRoutes => LacunaryFactors::new(order)?.check_tree_routes()?,
        Identity::OneCycleRoutes => LacunaryFactors::new(order)?.check_one_cycle_routes()?,
        Identity::WRoutes => check_w_routes(order)?,
        Identity::Hypergeom => {
            let scalar = hypergeom_form_check(order);
            if !scalar.is_verified() {
                return Ok(scalar);
            }
            let factors = LacunaryFactors::new(order)?;
            compare_series(
                name,
                order,
                &factors.hypergeometric_factor()?,
                &factors.multi_cycle_factor()?,
            )
        }
        Identity::LemmaFmI => umbral::verify_lemma_fm_i(order)?,
        Identity::LemmaFmII => umbral::verify_lemma_fm_ii(order)?,
        Identity::CorollaryEcor => umbral::verify_corollary_and_ecor(order)?,
        Identity::DtDu => {
            let (dt, wu) = LacunaryFactors::new(order)?.derivative_sides()?;
            compare_pairs(name, order, &[(&dt, &wu)])
        }
    };
    Ok(report)
}

/// [`verify`] by identity name.
pub fn verify_named(name: &str, order: u32) -> Result<IdentityReport, IdentityError> {
    verify(name.parse()?, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert_eq!(
            "nope".parse::<Identity>(),
            Err(IdentityError::UnknownIdentity("nope".into()))
        );
    }

    #[test]
    fn low_orders_verify() {
        for id in Identity::ALL {
            for order in 0..=3 {
                let r = verify(id, order).unwrap();
                assert!(r.is_verified(), "{r}");
            }
        }
    }

    #[test]
    fn main_and_doetsch_at_moderate_order() {
        assert!(verify(Identity::Main, 6).unwrap().is_verified());
        assert!(verify(Identity::Doetsch, 8).unwrap().is_verified());
    }
}
