//! Centered box spline of a positive root system.
//!
//! The density `b` is evaluated exactly as a slice volume of the cube
//! `[-1/2, 1/2]^m`. Densities are taken with respect to Lebesgue measure in
//! simple-root coordinates, so the root lattice has covolume one.

mod error;
mod identities;
mod intmat;
mod rpoly;
mod slice;
mod spline;
mod table;
mod volume;

pub use error::BoxSplineError;
pub use identities::{verify_identities, IdentityCheck, IdentityReport};
pub use rpoly::{
    fourier_symbol, poisson_sum, poisson_sum_extrapolated, r_polynomial, r_polynomial_torus, scan_r_positivity, torus_point, RScan,
};
pub use slice::{SliceGeometry, SliceVolumeProblem, MAX_SLICE_DIM};
pub use spline::BoxSpline;
pub use table::{lattice_table, BoxSplineTable};
