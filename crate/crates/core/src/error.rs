use thiserror::Error;

/// Errors produced by the library and surfaced by the CLI and the C ABI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),

    #[error("total degree {0} exceeds the supported maximum")]
    DegreeOverflow(u64),

    #[error("quadratic extensions use different discriminants")]
    DiscriminantMismatch,

    #[error("index {index} out of range (expected < {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid recurrence: {0}")]
    InvalidSpec(String),

    #[error("term budget exceeded: {actual} terms > limit {limit}")]
    BudgetExceeded { limit: usize, actual: usize },

    #[error("root finder did not converge after {iterations} iterations (max residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },

    #[error("field `{field}`: {message}")]
    Document { field: String, message: String },

    #[error("engine `{engine}` needs delta initial terms; pass --compose to use the basis decomposition")]
    NeedsDeltaInitials { engine: String },

    #[error("engines disagree at n={n}: {left} gives `{left_value}`, {right} gives `{right_value}`")]
    EngineDisagreement {
        n: u64,
        left: String,
        right: String,
        left_value: String,
        right_value: String,
    },

    #[error("{0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the CLI: 1 verification, 2 usage/parse, 3 resource.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } | Error::DegreeOverflow(_) | Error::NoConvergence { .. } => 3,
            Error::EngineDisagreement { .. } => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
