use thiserror::Error;

use crate::exactla::ExactLaError;
use crate::exterior::ExteriorError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("real subspace needs a Bott-Chern or Aeppli group of bidegree (p,p), got {0}")]
    NotDiagonalBidegree(String),
    #[error("form does not lie in the numerator of {0}")]
    NotAClass(String),
    #[error("pairing needs Bott-Chern ({0}) against Aeppli ({1}) of complementary bidegree")]
    IncompatiblePairing(String, String),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    LinearAlgebra(#[from] ExactLaError),
}
