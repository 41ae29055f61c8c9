//! Exact linear algebra over rationals and Gaussian rationals.

mod error;
mod hermitian;
mod matrix;
mod polyhedral;
mod scalar;
mod subspace;

pub use error::ExactLaError;
pub use hermitian::{characteristic_polynomial, is_psd_hermitian, Definiteness};
pub use matrix::{axpy, dot, scale_vec, Echelon, Matrix};
pub use polyhedral::{dual_cone_polyhedral, ConeDual, PolyhedralCone};
pub use scalar::{
    approximate, from_f64, gauss, i_unit, is_real, q, qi, signum, to_f64, Gaussian, Rational,
    Scalar, ShowGaussian,
};
pub use subspace::{combine, image, kernel, quotient, Quotient, Subspace};
