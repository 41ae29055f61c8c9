//! Exterior algebra of a Lie algebra dual: the Chevalley-Eilenberg
//! differential, complex structures and the bigraded operators, Hodge star,
//! and pointwise positivity.

mod algebra;
pub mod basis;
mod complex;
mod error;
mod form;
mod metric;

pub use algebra::{LieAlgebra, ValidationReport};
pub use complex::Manifold;
pub use error::ExteriorError;
pub use form::Form;
pub use metric::{HermitianMetric, RootReport};
