use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series in different variables: {0} vs {1}")]
    IncompatibleVariables(String, String),

    #[error("coefficient of exponent {exponent} is beyond the truncation (known from {known_from})")]
    Truncated { exponent: i64, known_from: i64 },

    #[error("lattice data missing site {site} (window {lo}..={hi})")]
    MissingSite { site: i64, lo: i64, hi: i64 },

    #[error("series is not divisible: {0}")]
    NotDivisible(String),

    #[error("formal composition needs a zero constant term")]
    NonzeroConstantTerm,

    #[error("series has no multiplicative inverse (zero leading term)")]
    NotInvertible,

    #[error("evaluation hits a pole at {0}")]
    Pole(String),

    #[error("enumeration budget exceeded: {required} matchings needed, budget allows total degree {budget}")]
    BudgetExceeded { required: String, budget: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal consistency violation: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
