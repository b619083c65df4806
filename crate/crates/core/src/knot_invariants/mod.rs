//! Classical concordance invariants computed from a Seifert matrix.

mod invariants;
mod seifert;
mod slice;
mod table;

pub use invariants::{alexander, arf, lt_matrix, lt_signature, signature_integral, Jump, SignatureIntegral, ARF_SIZE_LIMIT};
pub use seifert::SeifertMatrix;
pub use slice::{algebraically_slice, fox_milnor, is_metabolizer_certificate, FoxMilnor, Obstruction, SliceVerdict, DEFAULT_SEARCH_BOUND};
pub use table::{Expected, KnotEntry, KnotTable};

use crate::exactmath::MathError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KnotError {
    #[error("Seifert matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("Seifert matrix has odd size {0}")]
    OddSize(usize),
    #[error("A - A^T is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("{size}x{size} form is too large for exhaustive enumeration (limit {limit})")]
    TooLarge { size: usize, limit: usize },
    #[error("resolution must be at least 16, got {0}")]
    Resolution(usize),
    #[error("knot table: {0}")]
    Table(String),
    #[error(transparent)]
    Math(#[from] MathError),
}
