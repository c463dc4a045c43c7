use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid order: cyclotomic order must be at least 1")]
    InvalidOrder,
    #[error("order {order} exceeds the configured cap (phi({order}) = {phi} > {cap})")]
    OrderTooLarge { order: u64, phi: u64, cap: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{k} is not a unit modulo {order}")]
    NotAUnit { k: i64, order: u64 },
    #[error("schema violation at {location}: {message}")]
    SchemaViolation { location: String, message: String },
    #[error("fusion coefficient N_{{{i},{j}}}^{{{k}}} = {value} is not a nonnegative integer")]
    NotFusionIntegral {
        i: usize,
        j: usize,
        k: usize,
        value: String,
    },
    #[error("degenerate S-matrix: {0}")]
    DegenerateS(String),
    #[error("character column {column} has no unique Galois image under unit {unit}")]
    NotGaloisStable { unit: u64, column: usize },
    #[error("no consistent sign function for unit {unit}")]
    NotGaloisSymmetric { unit: u64 },
    #[error("invalid family member: {0}")]
    InvalidFamily(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not a modular representation: {0}")]
    NotModular(String),
    #[error("not tabulated: {0}")]
    NotTabulated(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("bad level: {0}")]
    BadLevel(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
