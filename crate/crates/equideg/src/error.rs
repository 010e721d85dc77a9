use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid permutation input: {0}")]
    NonPermutationInput(String),
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("non-integral multiplicity {value} for {label}")]
    NonIntegralMultiplicity { label: String, value: f64 },
    #[error("non-integral trace average {0}")]
    NonIntegralTrace(f64),
    #[error("orbit type {0} is infinite")]
    InfiniteSubgroup(String),
    #[error("orbit type {0} has an infinite Weyl group")]
    InfiniteWeyl(String),
    #[error("truncation did not stabilise for {what}: {at_n} at N, {at_2n} at 2N")]
    StabilizationFailure { what: String, at_n: i64, at_2n: i64 },
    #[error("non-integral recurrence coefficient for {0}")]
    NonIntegralCoefficient(String),
    #[error("fast path disagrees with the Burnside product for {what}: fast {fast}, product {product}")]
    CrossCheckMismatch { what: String, fast: i64, product: i64 },
    #[error("root finding did not converge: {0}")]
    ConvergenceFailure(String),
    #[error("Bessel horizon too small: need m_max >= {m_max}, n_max >= {n_max}")]
    InsufficientHorizon { m_max: usize, n_max: usize },
    #[error("alpha = {0} is a critical value")]
    AlphaIsCritical(f64),
    #[error("critical point {0} is not isolated")]
    NotIsolated(String),
    #[error("unknown orbit type symbol {0}")]
    UnknownOrbitType(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("coupling matrix is not equivariant: residual {0:e}")]
    EquivarianceViolation(f64),
    #[error("linearization is not scalar on isotypic block {0}")]
    NonScalarIsotypicBlock(usize),
    #[error("eigenvalue curve {0} is not strictly monotone")]
    NonMonotoneCurve(usize),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Configuration problems map to CLI exit code 2, everything else to 3.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            Error::Schema(_)
                | Error::EquivarianceViolation(_)
                | Error::NonScalarIsotypicBlock(_)
                | Error::NonMonotoneCurve(_)
                | Error::NonPermutationInput(_)
                | Error::UnknownOrbitType(_)
                | Error::Io(_)
        )
    }
}
