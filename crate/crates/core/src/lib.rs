//! Complementarity spectra and spectral redundancy of garlic graphs.
//!
//! A garlic graph `G_{p,q}` has a center with `p` pendant vertices and `q`
//! paths of length two to a far vertex. Its squared spectral radius is the
//! quadratic surd `(p + 2q + √(p² + 4q²)) / 2`, so coincidences among the radii
//! of its connected induced subgraphs can be decided exactly. The crate also
//! carries a numeric engine for arbitrary small graphs used as a cross-check.

pub mod audit;
pub mod canon;
pub mod error;
pub mod garlic;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod pythagorean;
pub mod redundancy;
pub mod subgraphs;
pub mod surd;

pub use audit::{audit_paper_claims, AuditEntry, AuditGrid, ClaimStatus};
pub use canon::{canonical_code, CanonicalCode};
pub use error::{ArithError, GarlicError, GraphError};
pub use garlic::{EqualityRule, GarlicParams, SubgraphId};
pub use graph::Graph;
pub use pythagorean::{PerimeterFamily, PythTriplet};
pub use redundancy::{CoincidenceClass, Ratio, RedundancyReport, SweepRow};
pub use subgraphs::NumericCensus;
pub use surd::RhoSquared;
