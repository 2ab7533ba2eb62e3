//! Exact arithmetic substrate shared by every other crate in the workspace.
//!
//! Scalars are arbitrary-precision rationals. Nothing in this crate touches
//! floating point except the explicit `to_f64` conversion helpers.

pub mod bernoulli;
pub mod error;
pub mod interp;
pub mod linalg;
pub mod measure;
pub mod poly;
pub mod rational;
pub mod vector;

pub use bernoulli::bernoulli;
pub use error::CoreError;
pub use interp::interpolate;
pub use measure::{LatticeKind, LatticeMeasure};
pub use poly::MultivariatePolynomial;
pub use rational::{parse_rational, rat, rat_int, Rational};
pub use vector::RationalVector;
