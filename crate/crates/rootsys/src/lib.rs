//! Classical root systems of types A, B, C and D.
//!
//! Vectors of the Cartan subalgebra are stored in the standard `e`-coordinate
//! realization, scaled by a per-system integer `den` so that every weight has
//! integer entries. Type A uses the sum-zero subspace of `R^{r+1}`.
//! Long roots have squared length 2; for type C this is achieved by scaling
//! the inner product by 1/2 instead of the coordinates.

mod combinatorics;
mod error;
mod system;
mod weyl;

pub use combinatorics::{is_unimodular, smoothness_degree};
pub use error::RootError;
pub use system::{RootSystem, RootType, Weight};
pub use weyl::WeylElement;
