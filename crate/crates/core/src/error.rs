//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enumeration.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An assignment's length does not match the instance it is used with.
    #[error("assignment has {got} bits but the instance has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },

    /// Exact 64-bit integer arithmetic overflowed; results are never wrapped.
    #[error("arithmetic overflow in 64-bit weight computation")]
    ArithmeticOverflow,

    /// A variable id is outside the instance's range.
    #[error("variable {0} is out of range")]
    InvalidVariable(usize),

    /// A construction parameter violates its documented bounds.
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    /// The problem exceeds a hard size cap of an exhaustive algorithm.
    #[error("too large: {0}")]
    TooLarge(String),

    /// An exploration exceeded its node budget.
    #[error("exploration budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: usize },

    /// No variables carry the requested gadget label.
    #[error("instance has no variables labelled as gadget {0}")]
    UnknownGadget(u32),

    /// A vertex name does not exist in the graph or hypergraph at hand.
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    /// Per-gadget decompositions cannot be chained into a whole-chain one.
    #[error("gadget interfaces do not line up: {0}")]
    InterfaceMismatch(String),

    /// A serialized or hand-built instance violates the data-model invariants.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
