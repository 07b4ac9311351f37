//! Exact construction and verification of lacunary generating functions for
//! Hermite polynomials.
//!
//! The identities are checked three ways: by expanding both sides as
//! truncated power series over `Q[u, x]`, by evaluating expressions in the
//! umbra `M` whose moments are the perfect-matching counts, and by brute-force
//! enumeration of matchings, w-trees and marked trivalent graphs.

pub mod cli;
pub mod hermite;
pub mod identities;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod report;
pub mod series;
pub mod umbral;

pub use identities::{verify, verify_named, Identity, IdentityError};
pub use hermite::{hermite_H, hermite_h, m_moment, HermiteKind};
pub use poly::UPolynomial;
pub use rational::Rational;
pub use report::{IdentityReport, Mismatch, Status};
pub use series::{SeriesError, SeriesVars, TruncSeries};
pub use umbral::{umbral_eval, MExpression, UmbralError};
