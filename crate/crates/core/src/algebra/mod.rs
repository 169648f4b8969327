//! Exact scalar arithmetic, truncated graded polynomial rings, truncated power
//! series and dense rational linear algebra.

mod coeff;
mod matrix;
mod partition;
mod poly;
mod rational;
mod ring;
mod series;

pub use coeff::Coeff;
pub use matrix::RationalMatrix;
pub use partition::{partitions, Partition};
pub use poly::Polynomial;
pub use rational::{int, parse_rational, rat, ExactRational};
pub use ring::{ring_mul, ring_pow, GradedElement, Monomial, RingSpec, RuleSpec};
pub use series::{series_mul, QSeries, Series};
