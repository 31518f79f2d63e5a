use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("root of unity of order {0} is not in Q(zeta_60)")]
    UnsupportedOrder(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not real: {0}")]
    NotReal(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown conjugacy class label {label} in {group}")]
    UnknownClass { group: String, label: String },
    #[error("unknown subgroup {name} in {group}")]
    UnknownSubgroup { group: String, name: String },
    #[error("element {elem} is not in {group}")]
    NotAMember { group: String, elem: String },
    #[error("{sub} is not contained in {sup}")]
    NotContained { sub: String, sup: String },
    #[error("{sub} is not normal in {sup}")]
    NotNormal { sub: String, sup: String },
    #[error("quotient of order {0} is not isomorphic to a standard group")]
    UnrecognizedQuotient(usize),
    #[error("class functions live on different groups ({0} vs {1})")]
    GroupMismatch(String, String),
    #[error("class function is not a character: multiplicity {0} of {1}")]
    NotACharacter(String, String),
    #[error("character table construction failed for {0}: {1}")]
    CharacterTable(String, String),
    #[error("labelling failed for {0}: {1}")]
    Labelling(String, String),
    #[error("basis construction failed: {0}")]
    Construction(String),
    #[error("leading term matching failed: {0}")]
    Matching(String),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("triangularity violated: {0}")]
    Triangularity(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
}
