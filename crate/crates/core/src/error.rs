use thiserror::Error;

use crate::exact_trig::AngleFraction;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure surfaced by the library.
///
/// The set of variants (and their [`Error::code`] strings) is part of the
/// public contract; the CLI prints the code in its machine-readable error
/// output.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a = {a} and b = {b} are not coprime")]
    NotCoprime { a: u32, b: u32 },

    #[error("a = {a}, b = {b}, c = {c} are not pairwise coprime")]
    NotPairwiseCoprime { a: u32, b: u32, c: u64 },

    #[error("a = {0} must be odd for this operation")]
    EvenA(u32),

    #[error("degenerate angle {0}: its sine vanishes")]
    DegenerateAngle(AngleFraction),

    #[error("degenerate crossing sign at (k = {k}, h = {h})")]
    DegenerateSign { k: u32, h: u32 },

    #[error("(k = {k}, h = {h}) is not a crossing of the ({a}, {b}) curve")]
    InvalidCrossing { a: u32, b: u32, k: u32, h: u32 },

    #[error("point ({x}, {y}) lies outside the square [-1, 1]^2")]
    OutOfSquare { x: f64, y: f64 },

    #[error("ambiguous sign at crossing {index}: margin {margin:e} does not exceed {threshold:e}")]
    AmbiguousSign { index: usize, margin: f64, threshold: f64 },

    #[error("no (c, phi) realizes the target within the search budget")]
    NotFound,

    #[error("Conway reader needs a 3-strand diagram, got a = {0}")]
    NotAThreeStrand(u32),

    #[error("continued fraction tail starting at entry {0} evaluates to zero")]
    DivisionByZero(usize),

    #[error("{p}/{q} is not the fraction of a 2-bridge knot")]
    NotAKnotFraction { p: i64, q: i64 },

    #[error("{crossings} crossings exceed the state-sum budget of {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },

    #[error("sign vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("knot table: {0}")]
    Table(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotCoprime { .. } => "not_coprime",
            Error::NotPairwiseCoprime { .. } => "not_pairwise_coprime",
            Error::EvenA(_) => "even_a",
            Error::DegenerateAngle(_) => "degenerate_angle",
            Error::DegenerateSign { .. } => "degenerate_sign",
            Error::InvalidCrossing { .. } => "invalid_crossing",
            Error::OutOfSquare { .. } => "out_of_square",
            Error::AmbiguousSign { .. } => "ambiguous_sign",
            Error::NotFound => "not_found",
            Error::NotAThreeStrand(_) => "not_a_three_strand",
            Error::DivisionByZero(_) => "division_by_zero",
            Error::NotAKnotFraction { .. } => "not_a_knot_fraction",
            Error::TooManyCrossings { .. } => "too_many_crossings",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::InvalidInput(_) => "invalid_input",
            Error::Table(_) => "table",
        }
    }
}
