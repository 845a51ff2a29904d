//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the crate, from digraph parsing to
/// exact linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop arrow {0} -> {0} is not allowed")]
    LoopArrow(String),
    #[error("duplicate arrow {0} -> {1}")]
    DuplicateArrow(String, String),
    #[error("syntax error on line {line}: {content:?}")]
    Syntax { line: usize, content: String },
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("digraph has a multisquare between {x:?} and {y:?}")]
    MultisquarePresent { x: String, y: String },
    #[error("vector at level {level} is not in the span of the codomain basis")]
    NotInSpan { level: usize },
    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
