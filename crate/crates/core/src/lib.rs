//! Exact coefficients for integer and real powers of `sinc` and `sinhc`.
//!
//! The crate computes central factorial numbers of the second kind, Stirling
//! numbers of the second kind and their weighted generalisation, partial Bell
//! polynomials, and the Taylor coefficients of `sinc^r z` and `sinhc^r z` from
//! closed forms over those triangles. Every closed form has an independent
//! route through [`series::TruncatedSeries`] arithmetic so results can be
//! compared with exact rational equality.
//!
//! All scalar values are [`Rational`]s; floating point only appears in
//! [`numeric`], which evaluates truncated series for convergence diagnostics.

pub mod bell;
pub mod error;
pub mod expansions;
pub mod identities;
pub mod numbers;
pub mod numeric;
pub mod series;

pub use bell::BellArgs;
pub use error::{Error, Result};
pub use expansions::{ClosedForm, ExpansionRequest, Method};
pub use identities::IdentityReport;
pub use numbers::{parse_rational, Integer, Rational, TriangleKind, Triangles};
pub use numeric::ConvergenceRecord;
pub use series::{Cardinal, TruncatedSeries};
