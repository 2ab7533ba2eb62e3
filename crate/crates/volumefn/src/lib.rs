//! The volume function `J(lambda', mu'; gamma)` of Horn's problem.
//!
//! `J` is evaluated exactly as the convolution of the box spline with the
//! skew multiplicity measure `sum_nu C_{lambda mu}^nu sum_w eps(w) delta_{w(nu')}`.
//! Around that sit the Harish-Chandra formula, the Horn density, shielded
//! triples with the `A-hat` inversion, and stretched LR coefficients.

mod ahat;
mod error;
mod evaluator;
mod harish;
mod horn;
mod jlr;
mod shielded;
mod stretched;

pub use ahat::{ahat_coefficient, ahat_fit_at, ahat_local_fit, ahat_symbol, ahat_via_local_fit, apply_symbol_at_origin, LocalFit};
pub use error::VolumeError;
pub use evaluator::{VolumeContext, VolumeEvaluator};
pub use harish::{discriminant, harish_chandra, hciz_determinant};
pub use horn::{discriminant_exact, horn_density, horn_density_exact};
pub use jlr::{conjugate, conjugation_sums, jlr_sides, jlr_verify, ConjugationReport};
pub use shielded::{sample_shielded_near, sample_shielded_triples, shielded_test, shielding_stencil, HyperplaneArrangement};
pub use stretched::{j_stretched_sides, polynomiality_degree, semiclassical_check, stretched_polynomial, SemiclassicalReport, StretchedFit};
