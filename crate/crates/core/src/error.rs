use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside the domain of the requested object
    /// (`k = 0`, `m > k`, `i > n`, a theorem hypothesis such as `k ≥ r`, ...).
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    /// The request is well formed but no verified formula covers it; the
    /// brute-force oracle is the only source for these cells.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    /// Enumeration would visit more words than the caller allowed.
    #[error("enumeration budget exceeded: more than {budget} words")]
    BudgetExceeded { budget: u64 },

    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not invertible: constant term {0} is not ±t^j")]
    NonInvertible(String),

    #[error("unknown formula id `{0}`")]
    UnknownFormula(String),
}
