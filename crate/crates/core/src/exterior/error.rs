use thiserror::Error;

use crate::exactla::ExactLaError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("d^2 != 0 on generator {generator}: d(d {generator}) = {residual}")]
    JacobiFailure { generator: String, residual: String },
    #[error("not unimodular: modular form {modular_form} is nonzero")]
    NotUnimodular { modular_form: String },
    #[error("expected {expected} generators, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("odd real dimension {0}")]
    OddDimension(usize),
    #[error("J^2 != -Id")]
    NotComplexStructure,
    #[error("J is not integrable: d({generator}) has a (0,2) part")]
    NotIntegrable { generator: String },
    #[error("degree {degree} exceeds the top degree {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("expected a form of bidegree ({}, {}), found {found}", .expected.0, .expected.1)]
    WrongBidegree {
        expected: (usize, usize),
        found: String,
    },
    #[error("form is not real")]
    NotReal,
    #[error("Hermitian form is not positive definite")]
    NotPositiveDefinite,
    #[error("(n-1,n-1)-form is not strictly positive")]
    NotStrictlyPositive,
    #[error(transparent)]
    LinearAlgebra(#[from] ExactLaError),
}
