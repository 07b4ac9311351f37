//! Brute-force enumeration of the combinatorial objects behind each
//! generating-function factor, used as ground truth for the series side.

mod graph;
mod matching;
mod wtree;

use serde::Serialize;
use thiserror::Error;

use crate::hermite::hermite_h;
use crate::identities::{IdentityError, LacunaryFactors};
use crate::poly::UPolynomial;
use crate::rational::{self, Rational};

pub use graph::{
    enumerate_marked_graphs, Component, ComponentCensus, ComponentClass, ComponentProfile, MarkedGraph,
    GRAPH_BOUND,
};
pub use matching::{enumerate_matchings, for_each_involution, Matching, MATCHING_BOUND};
pub use wtree::{enumerate_w_trees, w_tree_census, WTreeCensus, W_TREE_BOUND};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("size {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: u32, bound: u32 },
    #[error(transparent)]
    Identity(#[from] IdentityError),
}

/// Which census slice a [`CensusCheck`] compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorSlice {
    /// Every component a tree; against `e^T`.
    AcyclicOnly,
    /// Every component a single cycle of w-trees; against `(1-6wz)^{-1/2}`.
    UnicyclicOnly,
    /// Every component with at least two cycles; against the multi-cycle sum.
    MulticyclicOnly,
    /// All graphs; against `h_{3n}(u)`.
    Total,
}

fn as_text<S: serde::Serializer>(p: &UPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// One census slice at one `n`: the enumerated weight against `n!` times
/// the series coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusCheck {
    pub n: u32,
    pub slice: FactorSlice,
    #[serde(serialize_with = "as_text")]
    pub census: UPolynomial,
    #[serde(serialize_with = "as_text")]
    pub series: UPolynomial,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n_max: u32,
    pub checks: Vec<CensusCheck>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// For each `n <= n_max`, compares the enumerated acyclic-only,
/// unicyclic-only, multicyclic-only and total censuses with the matching
/// series factors and with `h_{3n}(u)`.
pub fn factor_census_check(n_max: u32) -> Result<CensusReport, OracleError> {
    if n_max > GRAPH_BOUND {
        return Err(OracleError::BoundExceeded { n: n_max, bound: GRAPH_BOUND });
    }
    let factors = LacunaryFactors::new(n_max).map_err(OracleError::from)?;
    let exp_tree = factors
        .tree_gf()?
        .exp()
        .map_err(|e| OracleError::Identity(e.into()))?;
    let one_cycle = factors.one_cycle_factor()?;
    let multi_cycle = factors.multi_cycle_factor()?;

    let mut checks = Vec::new();
    for n in 0..=n_max {
        let census = enumerate_marked_graphs(n)?;
        let nf = Rational::from_integer(rational::factorial(n));
        let slices = [
            (FactorSlice::AcyclicOnly, census.only(ComponentClass::Acyclic), exp_tree.coeff_z(n).scale(&nf)),
            (FactorSlice::UnicyclicOnly, census.only(ComponentClass::Unicyclic), one_cycle.coeff_z(n).scale(&nf)),
            (
                FactorSlice::MulticyclicOnly,
                census.only(ComponentClass::Multicyclic),
                multi_cycle.coeff_z(n).scale(&nf),
            ),
            (FactorSlice::Total, census.total(), hermite_h(3 * n)),
        ];
        for (slice, census, series) in slices {
            let pass = census == series;
            checks.push(CensusCheck {
                n,
                slice,
                census,
                series,
                pass,
            });
        }
    }
    Ok(CensusReport { n_max, checks })
}
