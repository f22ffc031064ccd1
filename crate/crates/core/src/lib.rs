//! Exact structure-constant computations for anti-dendriform algebras,
//! their bialgebras, r-matrices and Rota-Baxter operators.

pub mod algebra;
pub mod bialgebra;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod report;
pub mod representation;
pub mod rota_baxter;
pub mod scalar;
pub mod search;
pub mod tensor;
pub mod ybe;

/// Largest supported dimension (doubles of 16-dimensional inputs).
pub const MAX_DIM: usize = 32;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use report::{Failure, Report};
pub use scalar::{Field, Scalar};
pub use tensor::{act2, act3, tau, Slot, Tensor2, Tensor3};
