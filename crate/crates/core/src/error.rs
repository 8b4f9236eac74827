//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The pair of diagrams is not a one-box covering pair.
    #[error("not a cover: {smaller} -> {larger}")]
    NotCover { smaller: String, larger: String },

    /// The partition is not the double of any strict partition.
    #[error("not a D-symmetric diagram: {0}")]
    NotSymmetric(String),

    /// No one-box addition restores D-symmetry.
    #[error("no symmetrizing completion exists for {0}")]
    NoCompletion(String),

    /// A level or size bound was exceeded.
    #[error("cap exceeded: n = {n} is above the configured cap {cap}")]
    CapExceeded { n: u64, cap: u64 },

    /// Measure-family parameters violate their admissibility condition.
    #[error("inadmissible parameters: {0}")]
    InadmissibleParams(String),

    /// Coordinates do not strictly interlace or fail the balance condition.
    #[error("bad interlacing coordinates: {0}")]
    BadInterlacing(String),

    /// Partial fractions need simple poles.
    #[error("pole at {0} is not simple")]
    NonSimplePole(String),

    /// The denominator has a factor without rational roots.
    #[error("denominator factor without rational roots: {0}")]
    IrrationalPole(String),

    /// `1 - 4*alpha` is not the square of a rational.
    #[error("1 - 4*alpha = {0} is not a rational square")]
    IrrationalNu(String),

    /// Tables refer to different levels or supports.
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: u64, right: u64 },

    /// An even growth step produced a diagram with no symmetrizing
    /// completion; indicates a bug, not bad input.
    #[error("forced growth assertion breach at {0}: completable mass is not 1")]
    CompletionFailure(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
