//! Weight multiplicities through the Duistermaat-Heckman density
//! `I(lambda'; beta) = b * sum_mu mult_lambda(mu) delta_mu`.
//!
//! Multiplicities are recovered from lattice values of `I` by exact
//! deconvolution, by Fourier inversion, and for shielded pairs of type A by the
//! truncated Laplacian series or a local `A-hat` fit.

mod density;
mod error;
mod inversion;

pub use density::{dh_density_i, i_lattice_measure, WeightDensity};
pub use error::WeightError;
pub use inversion::{
    i_lattice_and_deconv_roundtrip, i_total_mass, kostka_fd_inversion, kostka_from_i_fourier, kostka_local_fit, kostka_via_local_fit,
    multiplicities_from_i_algorithmic, sample_shielded_pairs, shielded_pair_test,
};
