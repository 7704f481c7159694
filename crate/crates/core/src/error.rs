use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A caller-supplied parameter violates a precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Family parameters (n, t, l) do not describe a realizable graph.
    #[error("infeasible family parameters: {0}")]
    Infeasible(String),

    /// The eigensolver did not reach the requested residual.
    #[error("eigensolver did not converge: achieved residual {achieved:e}, requested {requested:e}")]
    EigenNoConvergence { achieved: f64, requested: f64 },

    /// Minor search exceeded its node budget; the answer is unknown,
    /// not "no".
    #[error("minor search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    /// A depressed cubic whose discriminant says it does not have three
    /// real roots.
    #[error("cubic discriminant {discriminant:e} is negative beyond tolerance")]
    NegativeDiscriminant { discriminant: f64 },

    /// Malformed graph6 input.
    #[error("graph6: {0}")]
    Graph6(String),

    /// I/O wrapper for CLI file handling.
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
