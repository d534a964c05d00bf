use thiserror::Error;

/// Errors raised by the toolkit. Each variant names the violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at token {position}: {token:?}")]
    Syntax { token: String, position: usize },

    #[error("index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("word contains a singular letter where only sigma letters are allowed")]
    SingularLetter,

    #[error("word contains an inverse singular letter")]
    InverseSingular,

    #[error("expansion needs {taus} singular letters, budget is {budget}")]
    ExpansionBudget { taus: usize, budget: usize },

    #[error("inverse singular letters cannot be cleared: {0}")]
    NotClearable(String),

    #[error("word is not pure: permutation {0}")]
    NotPure(String),

    #[error("rewriting failed: {0}")]
    Rewrite(String),

    #[error("representation {0} has no invertible image for inverse singular letters")]
    NonInvertible(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("search budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
