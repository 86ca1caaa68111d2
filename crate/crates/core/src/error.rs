use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}, column {column}: unknown generator `{name}`")]
    UnknownGenerator {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("generator `{0}` must have positive degree")]
    ZeroDegreeGenerator(String),

    #[error("{context}: polynomial `{poly}` is not homogeneous")]
    NonHomogeneous { context: String, poly: String },

    #[error("Sq^{i} {generator} = {value} violates the unstable condition ({reason})")]
    Unstable {
        generator: String,
        i: u32,
        value: String,
        reason: String,
    },

    #[error("Sq^{i} {generator} must have degree {expected}, found `{value}`")]
    TableDegree {
        generator: String,
        i: u32,
        expected: u32,
        value: String,
    },

    #[error("degree {degree} exceeds the computation bound {max_degree}")]
    DegreeBound { degree: u32, max_degree: u32 },

    #[error("unknown Steenrod value Sq^{i} {generator}")]
    UnknownSteenrod { generator: String, i: u32 },

    #[error("unknown model `{0}` (expected one of BPU4, BS1, P1, P1x4)")]
    UnknownModel(String),

    #[error("invalid operation word `{0}`: expected tokens of the form Sq<k>")]
    Word(String),

    #[error("declared degree {declared} but the reduction has degree {found}")]
    DegreeMismatch { declared: u32, found: u32 },

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
}
