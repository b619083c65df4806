//! Braid words, grid (rectilinear) diagrams and the quantities read off them.

mod braid;
mod grid;

pub use braid::{
    braid_stats, parse_braid, parse_braid_with_strands, rasmussen_positive, seifert_matrix_from_braid,
    slice_bennequin_bound, sqp_expand, BraidStats, BraidWord,
};
pub use grid::{tb_grid, GridDiagram, GridStats};

use crate::knot_invariants::KnotError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiagramError {
    #[error("token {token}: {message}")]
    Parse { token: usize, message: String },
    #[error("letter {letter} at index {index} needs |letter| < {strands}")]
    LetterRange { index: usize, letter: i64, strands: usize },
    #[error("letter at index {index} is zero")]
    ZeroLetter { index: usize },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("generator sigma_{i},{j} needs 1 <= i < j <= {n}")]
    GeneratorBounds { i: usize, j: usize, n: usize },
    #[error("braid has a negative letter at index {0}; positive-diagram formula does not apply")]
    NotPositive(usize),
    #[error("closure has {0} components, expected a knot")]
    Disconnected(usize),
    #[error("Seifert matrix has size {got}, expected {expected}")]
    RankMismatch { got: usize, expected: usize },
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error(transparent)]
    Knot(#[from] KnotError),
}
