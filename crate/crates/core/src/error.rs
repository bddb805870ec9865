use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("malformed document: {0}")]
    MalformedDocument(String),

    #[error("ground set size {n} exceeds the cap of {cap}")]
    GroundSetTooLarge { n: usize, cap: usize },
    #[error("element {element} is outside the ground set [1..{n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("set lists element {0} twice")]
    RepeatedElement(usize),
    #[error("the empty set cannot be a family member")]
    EmptySet,
    #[error("set {0} appears twice in the family")]
    DuplicateSet(String),
    #[error("the set family is empty")]
    EmptyFamily,
    #[error("probability {value} for set {set} is outside [0, 1]")]
    ProbabilityOutOfRange { set: String, value: String },
    #[error("expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("atom weight {0} is negative")]
    NegativeWeight(String),
    #[error("atom weights sum to {0}, not 1")]
    NotNormalized(String),
    #[error("interval [{lo}, {hi}] is not inside [0, 1] or has lo > hi")]
    InvalidInterval { lo: String, hi: String },

    #[error("instance is infeasible: no atom distribution realizes it")]
    InfeasibleInstance,
    #[error("no realization has union probability {0}")]
    NotInUnionPolytope(String),

    #[error("inclusion-exclusion needs every nonempty subset of [{0}]")]
    IncompleteFamily(usize),
    #[error("the family is missing singleton {{{0}}}")]
    MissingSingletons(usize),
    #[error("Bonferroni truncation at depth {k} needs set {missing}")]
    MissingSets { k: usize, missing: String },
    #[error("truncation depth {k} is outside [1, {n}]")]
    InvalidDepth { k: usize, n: usize },

    #[error("point has {actual} coordinates, polytope has {expected}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("polytope has no vertices")]
    EmptyPolytope,
    #[error("{what} is {actual}, above the enumeration guard of {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("vertex {vertex} is outside [1..{n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0},{1}}} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("edge weight {weight} on {{{u},{v}}} is outside [0, {max}]")]
    WeightOutOfRange {
        u: usize,
        v: usize,
        weight: String,
        max: String,
    },
    #[error("graph needs at least {0}")]
    GraphTooSmall(&'static str),
    #[error("clique size k = {0} must be at least 2")]
    InvalidCliqueSize(usize),

    #[error("line {line}: expected {expected} columns, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: entry {token:?} is not 0 or 1")]
    NonBinaryEntry { line: usize, token: String },
    #[error("matrix has no data rows")]
    EmptyMatrix,
    #[error("family is over [{family}] but the matrix has {columns} columns")]
    FamilyColumnMismatch { family: usize, columns: usize },
    #[error("threshold {0} is outside (0, 1]")]
    ThresholdOutOfRange(String),
}

impl Error {
    /// Whether the error comes from reading input (documents, numbers, flags)
    /// rather than from the mathematics of a well-formed input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedRational(_)
                | Error::ZeroDenominator(_)
                | Error::MalformedDocument(_)
                | Error::RaggedRow { .. }
                | Error::NonBinaryEntry { .. }
                | Error::EmptyMatrix
        )
    }
}
