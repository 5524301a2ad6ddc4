use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("statistic `{statistic}` does not apply to {group} elements")]
    StatisticMismatch {
        statistic: &'static str,
        group: &'static str,
    },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("enumerating {group} for n = {n} exceeds the limit n <= {limit}")]
    SizeLimit {
        group: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("sequences must have equal length (got {left} and {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("a sequence must have at least one entry")]
    EmptySequence,

    #[error("index (n = {n}, k = {k}) outside the valid range {range}")]
    IndexOutOfRange { n: usize, k: usize, range: String },

    #[error("exhaustive scan needs {needed} sequences, above the cap of {cap}; use the min/max criterion for pairs")]
    CapExceeded { needed: String, cap: u64 },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("rule `{rule}` has negative {coefficient} coefficient {value} at (n = {n}, k = {k})")]
    RuleViolation {
        rule: String,
        coefficient: &'static str,
        value: i64,
        n: usize,
        k: i64,
    },

    #[error("rule parse error: {0}")]
    RuleParse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
