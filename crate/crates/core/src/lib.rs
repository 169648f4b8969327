//! Exact computation of characteristic classes, Pontryagin numbers and
//! multiplicative genera for projectivized sums of line bundles over complex
//! projective spaces, quaternionic projective spaces and their products.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: exact rationals, truncated graded rings with rewrite rules,
//!   truncated power series and dense rational linear algebra.
//! - [`manifolds`]: cohomology models of `CP^n`, `HP^n`, projective bundles
//!   `P(E)` and finite products.
//! - [`genera`]: multiplicative sequences, signature, Â-genus, the twisted
//!   Dirac index `Â(M; T_C M)` and the q-expansion of the elliptic genus.
//! - [`cobordism`]: Pontryagin-number vectors, linear functionals on rational
//!   cobordism, parameter families and the unboundedness / distinctness engines.

pub mod algebra;
pub mod cobordism;
pub mod error;
pub mod genera;
pub mod manifolds;

pub use algebra::{ExactRational, GradedElement, Partition, QSeries, RationalMatrix, RingSpec};
pub use error::{Error, Result};
pub use manifolds::ManifoldModel;
