//! Invariant de Rham, Dolbeault, Bott-Chern and Aeppli cohomology as exact
//! quotients, the Bott-Chern/Aeppli pairing, closed holomorphic 1-forms and
//! the Lee-Gauduchon space.

mod error;
mod group;
mod theories;

pub use error::CohomologyError;
pub use group::{CohomologyGroup, Degree, Frame, Theory};
pub use theories::{Cohomology, ExactSequenceReport, LeeGauduchonSpace, PairingMatrix};
