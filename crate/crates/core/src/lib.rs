//! Exact combinatorics of level-two cyclotomic Hecke algebras and the
//! generalized arc algebras that describe their module categories.
//!
//! The crate is organised bottom-up:
//!
//! - [`diagram`] — weight diagrams on the integer line (labels `o v ^ x`),
//!   bipartition encodings, blocks, the Bruhat order, defect and
//!   restrictedness, and the diagram encodings of related module categories.
//! - [`cupcap`] — non-crossing cup/cap matchings over a weight diagram,
//!   oriented cup/cap diagrams, canonical matchings, containment of weights
//!   and enumeration.
//! - [`circle`] — circle diagrams (cup + cap over a common weight), the
//!   surgery product, idempotents and the diagrammatic algebra.
//! - [`tangle`] — the shared stacked-diagram engine: components, orientation,
//!   relabelling and the surgery smoothing rules.
//! - [`tableau`] — standard tableaux for pairs of partitions, residue
//!   sequences and counting identities.
//! - [`stretched`] — stretched cup diagrams of tableaux: layer strips, the
//!   degree statistic and tableau weights.
//! - [`series`] — truncated two-variable series used by the intertwiner
//!   action (square-zero generators).
//! - [`young`] — the graded Young modules, the intertwiner/dot operators,
//!   generator matrices, Specht and irreducible quotients, relation checks.
//! - [`rep`] — decomposition numbers, Kazhdan–Lusztig polynomials,
//!   multiplicity-freeness, resolutions and character data.
//! - [`endo`] — the diagrammatic action on stacked Young modules, a
//!   brute-force endomorphism oracle and the isomorphism verifier.
//! - [`linalg`] — dense exact matrices over the rationals with fraction-free
//!   elimination.
//! - [`textfmt`] — parsers and printers for the text and JSON wire formats.

pub mod circle;
pub mod cupcap;
pub mod diagram;
pub mod endo;
pub mod linalg;
pub mod rep;
pub mod series;
pub mod stretched;
pub mod tableau;
pub mod tangle;
pub mod textfmt;
pub mod young;

use num::BigRational;

/// Exact scalar type used throughout the crate.
pub type Scalar = BigRational;

/// Convenience: the rational `n`.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(n.into())
}

/// Convenience: the rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(n.into(), d.into())
}

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid weight diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid circle diagram: {0}")]
    InvalidCircle(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("operation needs a finite strand set: {0}")]
    InfiniteStrands(String),
    #[error("size guard exceeded: {0}")]
    TooLarge(String),
    #[error("ambiguous: {0}")]
    Ambiguous(String),
    #[error("division by a non-unit: {0}")]
    DivisionByNonUnit(String),
    #[error("not restricted: {0}")]
    NotRestricted(String),
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("not multiplicity-free: {0}")]
    NotMultiplicityFree(String),
    #[error("weight list is not a full block: {0}")]
    NotBlockClosed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
