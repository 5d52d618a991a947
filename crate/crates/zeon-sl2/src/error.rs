//! Error type shared across the crate.

/// Errors produced by constructors, operator application, and verification
/// entry points.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The ground-set size is outside the supported range for an operation.
    #[error("n = {n} out of range for {what} (allowed 1..={max})")]
    SizeOutOfRange {
        what: &'static str,
        n: usize,
        max: usize,
    },

    /// Two objects over different ground sets were combined.
    #[error("ground-set mismatch: n = {0} vs n = {1}")]
    SizeMismatch(usize, usize),

    /// A bitmask has bits outside `1..=n`.
    #[error("mask {bits:#b} has bits outside a ground set of size {n}")]
    InvalidMask { bits: u32, n: usize },

    /// A 1-based element index is outside `1..=n`.
    #[error("element {element} out of range 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },

    /// A rank is outside the enumeration range of the chosen order.
    #[error("rank {rank} out of range for n = {n} (only {count} subsets)")]
    RankOutOfRange { rank: usize, n: usize, count: usize },

    /// Johnson distance needs both subsets on the same layer.
    #[error("Johnson distance needs equal cardinalities, got {0} and {1}")]
    JohnsonCardMismatch(usize, usize),

    /// A numeric or structural parameter is outside its documented range.
    #[error("parameter {name} = {value} out of range: {reason}")]
    ParamOutOfRange {
        name: &'static str,
        value: String,
        reason: &'static str,
    },

    /// Text that should denote a rational number does not parse.
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    /// Text that should denote a subset does not parse.
    #[error("cannot parse subset from {0:?}")]
    ParseSubset(String),

    /// Text that should denote a vector term line does not parse.
    #[error("cannot parse vector line {0:?}")]
    ParseVector(String),

    /// A chain-state label violates one of its range invariants.
    #[error("invalid state label: {0}")]
    InvalidLabel(String),

    /// Group composition hit a parameter set outside the group domain.
    #[error("group composition undefined: {0}")]
    SingularComposition(String),

    /// A factored operator form does not exist for these parameters.
    #[error("factored form undefined: {0}")]
    FactoredFormUndefined(String),

    /// The binary-expansion extraction met data it cannot decompose.
    #[error("binary-expansion extraction failed: {0}")]
    Extraction(String),

    /// An unknown verification suite name was requested.
    #[error("unknown verification suite {0:?} (expected one of: boolean-core, sl2-ops, zbasis, schemes, all)")]
    UnknownSuite(String),

    /// A structural invariant the library maintains internally was violated.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
