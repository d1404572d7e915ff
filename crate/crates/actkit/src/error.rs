//! Error type shared by every module in the crate.

use thiserror::Error;

/// Errors raised by document loading, validation, constructors, and the
/// bounded search operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActError {
    /// The document does not match the expected JSON schema.
    #[error("malformed document: {0}")]
    MalformedDocument(String),

    /// The declared identity element does not act as a two-sided identity.
    #[error("no two-sided identity: element '{0}' fails the identity laws")]
    MissingIdentity(String),

    /// The multiplication table is not associative; reports the first
    /// violating triple in index order.
    #[error("non-associative table: ({s}·{t})·{u} != {s}·({t}·{u})")]
    NonAssociative { s: String, t: String, u: String },

    /// A label referenced in a document is not declared.
    #[error("unknown label '{0}'")]
    UnknownLabel(String),

    /// Unrecognized builtin name or out-of-range parameter.
    #[error("unsupported builtin: {0}")]
    UnsupportedParams(String),

    /// The element passed where an idempotent is required is not one.
    #[error("element '{0}' is not idempotent")]
    NotIdempotent(String),

    /// An action table breaks `a·1 = a`; reports the first violating point.
    #[error("identity axiom violated at '{point}': {point}·1 != {point}")]
    IdentityAxiomViolation { point: String },

    /// An action table breaks `a·(st) = (a·s)·t`; reports the first
    /// violating triple in index order.
    #[error("compatibility violated at ({point}, {s}, {t}): {point}·({s}·{t}) != ({point}·{s})·{t}")]
    CompatibilityViolation { point: String, s: String, t: String },

    /// Two acts that must share a monoid do not.
    #[error("acts are defined over different monoids")]
    MonoidMismatch,

    /// Acts are non-empty; an empty carrier or empty coproduct was requested.
    #[error("empty act: acts must have a non-empty carrier")]
    EmptyAct,

    /// Input exceeds the size bound of a brute-force operation.
    #[error("size {size} exceeds the brute-force bound {bound}")]
    SizeBoundExceeded { size: usize, bound: usize },

    /// An enumeration or suite exceeded its search budget.
    #[error("search budget of {budget} candidates exceeded")]
    BudgetExceeded { budget: u64 },

    /// Filesystem or I/O failure while reading a document.
    #[error("io error on '{path}': {message}")]
    Io { path: String, message: String },
}

impl ActError {
    /// Short machine-readable kind tag, used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            ActError::MalformedDocument(_) => "malformed-document",
            ActError::MissingIdentity(_) => "missing-identity",
            ActError::NonAssociative { .. } => "non-associative",
            ActError::UnknownLabel(_) => "unknown-label",
            ActError::UnsupportedParams(_) => "unsupported-params",
            ActError::NotIdempotent(_) => "not-idempotent",
            ActError::IdentityAxiomViolation { .. } => "identity-axiom-violation",
            ActError::CompatibilityViolation { .. } => "compatibility-violation",
            ActError::MonoidMismatch => "monoid-mismatch",
            ActError::EmptyAct => "empty-act",
            ActError::SizeBoundExceeded { .. } => "size-bound-exceeded",
            ActError::BudgetExceeded { .. } => "budget-exceeded",
            ActError::Io { .. } => "io-error",
        }
    }
}
