//! Verification reports shared by the umbral and identity checks.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::poly::UPolynomial;
use crate::series::TruncSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Mismatch,
}

fn as_text<S: Serializer>(p: &UPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// First coefficient slot where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponents: Vec<u32>,
    #[serde(serialize_with = "as_text")]
    pub lhs: UPolynomial,
    #[serde(serialize_with = "as_text")]
    pub rhs: UPolynomial,
}

/// Outcome of comparing two sides of an identity up to a truncation order.
///
/// Serializes to
/// `{"identity", "order", "status": "verified"|"mismatch", "mismatch": {...}|null}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub order: u32,
    pub status: Status,
    pub mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn verified(identity: &str, order: u32) -> Self {
        Self {
            identity: identity.to_string(),
            order,
            status: Status::Verified,
            mismatch: None,
        }
    }

    pub fn mismatch(identity: &str, order: u32, mismatch: Mismatch) -> Self {
        Self {
            identity: identity.to_string(),
            order,
            status: Status::Mismatch,
            mismatch: Some(mismatch),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "{} (order {}): verified", self.identity, self.order),
            Some(m) => write!(
                f,
                "{} (order {}): mismatch at {:?}\n  lhs: {}\n  rhs: {}",
                self.identity, self.order, m.exponents, m.lhs, m.rhs
            ),
        }
    }
}

/// First slot, by ascending total degree, where `lhs` and `rhs` differ
/// within `order`.
pub fn first_mismatch(lhs: &TruncSeries, rhs: &TruncSeries, order: u32) -> Option<Mismatch> {
    let arity = lhs.vars().arity();
    TruncSeries::exponent_grid(lhs.vars(), order)
        .into_iter()
        .find_map(|e| {
            let exps = &e[..arity];
            let l = lhs.coefficient(exps).unwrap_or_default();
            let r = rhs.coefficient(exps).unwrap_or_default();
            (l != r).then(|| Mismatch {
                exponents: exps.to_vec(),
                lhs: l,
                rhs: r,
            })
        })
}

/// Compares each `(lhs, rhs)` pair in turn and reports the first failure.
pub fn compare_pairs(identity: &str, order: u32, pairs: &[(&TruncSeries, &TruncSeries)]) -> IdentityReport {
    for (lhs, rhs) in pairs {
        let usable = order.min(lhs.order()).min(rhs.order());
        if let Some(m) = first_mismatch(lhs, rhs, usable) {
            return IdentityReport::mismatch(identity, order, m);
        }
    }
    IdentityReport::verified(identity, order)
}

pub fn compare_series(identity: &str, order: u32, lhs: &TruncSeries, rhs: &TruncSeries) -> IdentityReport {
    compare_pairs(identity, order, &[(lhs, rhs)])
}
