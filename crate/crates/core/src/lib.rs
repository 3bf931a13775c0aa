//! Exact verification of three q-series identities over partitions, via
//! Cohen-Lenstra type measures and terminating `2phi1` series.
//!
//! All identity checks run in `Q(q)` with exact rational coefficients and are
//! repeated numerically at `q = 2, 3, 5`.

pub mod arith;
pub mod distributions;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod qseries;
pub mod report;
pub mod verify;

pub use arith::{parse_rational, format_rational, BigRational, Polynomial, RationalFunction, Scalar};
pub use distributions::{CLFamily, CLParams, Probability, Sample};
pub use error::{ArithError, Error, Result};
pub use partitions::{ParityConstraint, Partition, WeightSign};
pub use qseries::TruncatedSeries;
pub use report::{IdentityId, VerificationReport};
pub use verify::{verify_all, Selector, VerifyConfig};
