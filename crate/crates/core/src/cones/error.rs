use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::exactla::ExactLaError;
use crate::exterior::ExteriorError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("metric is not Gauduchon: dd^c(omega^(n-1)) = {0}")]
    NotGauduchon(String),
    #[error("metric is not locally conformally Kahler: {0}")]
    NotLCK(String),
    #[error("class has {found} coordinates, expected {expected}")]
    WrongClassSize { expected: usize, found: usize },
    #[error("primal and dual searches both succeeded: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    LinearAlgebra(#[from] ExactLaError),
}
