//! Three routes from lattice values of `J(lambda', mu'; .)` back to tensor
//! product multiplicities: exact deconvolution by `b|_Q`, Fourier inversion on
//! the torus, and the truncated series in the box spline Laplacian.

mod algorithmic;
mod error;
mod findiff;
mod fourier;
mod laplacian;
mod peel;

pub use algorithmic::{b_weight_measure, forward_j_measure, multiplicities_from_j_algorithmic, multiplicities_from_skew, skew_from_multiplicities};
pub use error::DeconvError;
pub use findiff::{finite_difference_inversion, finite_difference_inversion_with, finite_difference_value, finite_difference_value_with};
pub use fourier::{c_kernel_numeric, c_kernel_window_residual, fourier_quadrature, multiplicities_from_j_fourier, torus_coefficient, FourierReport, MAX_FOURIER_RANK};
pub use laplacian::{
    apply_stencil, compose, convolution_sides, jlr_laplacian_sides, jlr_laplacian_verify, laplacian_apply, neumann_stencil,
    LaplacianOperator, Stencil,
};
pub use peel::lattice_deconvolve;
