//! Exact invariant-form cohomology, Hermitian metric classification and
//! Lee-Gauduchon cones of compact complex manifolds given as Lie algebra
//! presentations with a left-invariant complex structure.

pub mod cohomology;
pub mod cones;
pub mod exactla;
pub mod exterior;
pub mod models;
