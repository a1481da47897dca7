use thiserror::Error;

/// Errors surfaced by the exact-arithmetic layer and the map operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A square root was requested of a rational that is not the square of a rational.
    #[error("{0} is not a perfect square of a rational")]
    NotPerfectSquare(String),

    /// A scalar could not be parsed from text.
    #[error("invalid rational literal `{0}`")]
    ParseScalar(String),

    /// Denominator of zero supplied to a constructor.
    #[error("zero denominator")]
    ZeroDenominator,

    /// A point coordinate violated strict positivity.
    #[error("coordinate {index} is {value}, but phase-space coordinates must be > 0")]
    NonPositive { index: usize, value: String },

    /// A point had the wrong number of coordinates for the requested operation.
    #[error("expected arity {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// A point was required to lie on a specific fiber and does not.
    #[error("point projects to {found}, not to the required ({a}, {b})")]
    NotOnVariety { a: String, b: String, found: String },

    /// A closed-form step count is only defined on multiples of the period
    /// away from the fixed fiber.
    #[error("step count {n} not admissible off the fixed fiber: must be a multiple of {period}")]
    NotOnBaseVariety { n: usize, period: usize },

    /// Closed-form value disagreed with direct iteration.
    #[error("closed form disagrees with iteration at n = {n}: closed {closed} vs iterated {iterated}")]
    ClosedFormMismatch {
        n: usize,
        closed: String,
        iterated: String,
    },

    /// Growth probes only make sense for the unreduced maps; the reduced and
    /// periodic maps revisit their starting point.
    #[error("growth probe rejected: {0}")]
    GrowthProbeRejected(String),

    /// A parameter was outside the documented domain of an operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Eigenrelation validation failed when registering a scaled diagonal map.
    #[error("scale function does not satisfy G(g(x)) = c G(x) at probe point {0}")]
    BadEigenrelation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
