//! Crate-wide error type.

use thiserror::Error;

use crate::space::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NonSquareMatrix {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("matrix has no rows")]
    EmptyMatrix,
    #[error("expected {size} labels, got {labels}")]
    LabelCountMismatch { labels: usize, size: usize },
    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),
    #[error("metric axioms violated: {0}")]
    InvalidMetric(ValidationReport),
    #[error("diagonal entry at index {i} must be zero")]
    NonzeroDiagonal { i: usize },
    #[error("matrix is not symmetric at ({i},{j})")]
    AsymmetricInput { i: usize, j: usize },
    #[error("entry ({i},{j}) is negative")]
    NegativeEntry { i: usize, j: usize },
    #[error("off-diagonal entry ({i},{j}) is zero; distinct points cannot be merged")]
    UnrepairableZero { i: usize, j: usize },
    #[error("point tuple needs at least 2 entries, got {len}")]
    TupleTooShort { len: usize },
    #[error("point index {index} out of range for a space of {size} points")]
    PointOutOfRange { index: usize, size: usize },
    #[error("map table has {table} entries for a space of {size} points")]
    TableSizeMismatch { table: usize, size: usize },
    #[error("map defined on {map} points but the space has {space}")]
    MapSpaceMismatch { map: usize, space: usize },
    #[error("tuple arity must satisfy 2 <= n <= {size}, got n = {n}")]
    ArityOutOfRange { n: usize, size: usize },
    #[error("operation needs n >= 2, got n = {n}")]
    ArityTooSmall { n: usize },
    #[error("example family needs n >= 3, got {n}")]
    FamilyTooSmall { n: usize },
    #[error("example family needs M > 1, got {m}")]
    FamilyScaleTooSmall { m: String },
    #[error("max_steps must be positive")]
    ZeroMaxSteps,
    #[error("gap sequence of length {len} is shorter than the window arity {n}")]
    ShortGapSequence { len: usize, n: usize },
    #[error("decay rate must lie in [0,1), got {rho}")]
    RhoOutOfRange { rho: String },
    #[error("coefficient {value} outside the domain [0, {sup}) of rule {rule}")]
    CoefficientOutOfDomain {
        value: String,
        sup: String,
        rule: &'static str,
    },
    #[error("combiner returned a negative value {value}; it must map into [0, inf)")]
    NegativeCombiner { value: String },
    #[error("expected {n} weight functions, got {betas}")]
    BetaCountMismatch { betas: usize, n: usize },
    #[error("generator needs at least 2 points, got {size}")]
    GeneratorTooSmall { size: usize },
    #[error("separation mining needs n >= 3, got {n}")]
    SeparationArity { n: usize },
    #[error("campaign needs at least one trial")]
    ZeroTrials,
    #[error("campaign size range {min}..={max} is invalid (need 2 <= min <= max)")]
    BadSizeRange { min: usize, max: usize },
    #[error("campaign arity range {min}..={max} is invalid (need 2 <= min <= max <= max size)")]
    BadArityRange { min: usize, max: usize },
    #[error("cannot parse rational {0:?}; expected \"p/q\" or an integer string")]
    BadRational(String),
    #[error("unknown point label {0:?}")]
    UnknownLabel(String),
    #[error("map lists point {0:?} more than once")]
    DuplicateMapEntry(String),
    #[error("map is missing an image for point {0:?}")]
    MissingMapEntry(String),
    #[error("document has no map field; this operation needs one")]
    MissingMap,
    #[error("malformed document: {0}")]
    Document(String),
    #[error("malformed JSON document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV document: {0}")]
    Csv(#[from] csv::Error),
}
