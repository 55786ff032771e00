use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QgwError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at evaluation point")]
    PoleAtPoint,
    #[error("no value assigned to indeterminate `{0}`")]
    MissingAssignment(String),
    #[error("too many indeterminates (limit {0})")]
    TooManyVariables(usize),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("rewrite step cap {0} exceeded")]
    StepCapExceeded(u64),
    #[error("relation cannot be solved: {0}")]
    NotSolvable(String),
    #[error("solved rule is not order-decreasing: {0}")]
    NonTerminatingOrder(String),
    #[error("overlap check failed: {0}")]
    ConfluenceFailure(String),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("tensor mode mismatch")]
    ModeMismatch,
    #[error("bad leg positions {0:?} for arity {1}")]
    BadPositions(Vec<usize>, usize),
    #[error("no antipode defined")]
    NoAntipode,
    #[error("distinguished group-like does not square to 1")]
    NotInvolutive,
    #[error("generator `{0}` is not homogeneous under the g-adjoint action")]
    NotGradedCentral(String),
    #[error("grading is not compatible with the algebra: {0}")]
    ActionNotCompatible(String),
    #[error("R-matrix violates the null-degree condition")]
    NullDegreeViolated,
    #[error("R-matrix is not superizable under the given grading")]
    NotSuperizable,
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("no inverses adjoined for the diagonal entries")]
    NoInverses,
    #[error("degenerate representation label")]
    DegenerateLabel,
    #[error("integer representation label required")]
    NonIntegerLabel,
    #[error("no intertwiner found")]
    NoIntertwiner,
    #[error("R-matrix fails the Hecke condition")]
    NotHecke,
    #[error("unknown acting generator `{0}`")]
    UnknownActor(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrices violate a defining relation: {0}")]
    NotARepresentation(String),
    #[error("io: {0}")]
    Io(String),
    #[error("format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, QgwError>;
