//! Exact computations for knot and link concordance: Seifert-matrix invariants and slice
//! obstructions, boundary-pair matrix collections of Bing doubles, C-complex invariants,
//! hermitian module checks, braid and grid diagrams, and an s-invariant constraint solver.

pub mod boundary_forms;
pub mod ccomplex;
pub mod diagrams;
pub mod exactmath;
pub mod knot_invariants;
pub mod random;
pub mod representations;
pub mod s_calculus;

pub use boundary_forms::{BoundaryError, BoundaryPairMatrix, ComponentCongruence};
pub use ccomplex::{CComplexData, CComplexError};
pub use diagrams::{BraidWord, DiagramError, GridDiagram};
pub use exactmath::{CirclePoint, IntMatrix, LaurentPoly1, LaurentPoly2, MathError, Poly, RatMatrix, Signature};
pub use knot_invariants::{KnotError, KnotTable, SeifertMatrix, SliceVerdict};
pub use representations::{RepError, Representation};
pub use s_calculus::{SCalcError, SConstraint, SConstraintSystem, ValueSet};
