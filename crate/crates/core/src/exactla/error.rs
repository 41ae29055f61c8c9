use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactLaError {
    #[error("subspace is not contained in the ambient subspace")]
    SubspaceNotContained,
    #[error("vector does not lie in the ambient subspace")]
    NotInAmbient,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("pairing is degenerate (rank {rank} < {needed})")]
    DegeneratePairing { rank: usize, needed: usize },
}
