//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
///
/// Evaluation routines report structural problems (dimension mismatches,
/// unknown catalog names) and numerical ones (poles, exhausted truncation
/// policies, quadrature failures) through the same enum so that the
/// verification pipeline can propagate any of them into a report.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Evaluation requested at (or within the detection window of) a pole.
    #[error("pole at {location}: {detail}")]
    Pole { location: String, detail: String },

    /// Argument vector length does not match the declared dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// Richardson-extrapolated numeric differentiation failed to stabilize.
    #[error("numeric derivative did not stabilize to {target:e} (best residual {residual:e})")]
    NumericDerivative { target: f64, residual: f64 },

    /// A truncation policy ran out of terms before the tail threshold was met.
    #[error("truncation policy exhausted after {terms} terms (last |term| = {last_term:e})")]
    PolicyExhausted { terms: usize, last_term: f64 },

    /// Argument outside the documented domain of a function.
    #[error("domain error in {what}: {detail}")]
    Domain { what: String, detail: String },

    /// A series or m-sum violates its convergence precondition.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// Numeric overflow past representable magnitude.
    #[error("overflow in {0}")]
    Overflow(String),

    /// Quadrature stopped at the level cap without meeting the tolerance.
    #[error("tolerance not met: estimate {estimate:e} vs requested {requested:e}")]
    ToleranceNotMet { estimate: f64, requested: f64 },

    /// Integrand returned NaN/inf at a quadrature abscissa.
    #[error("non-finite sample at x = {abscissa}")]
    NonFiniteSample { abscissa: f64 },

    /// Principal-value residual did not settle; the pole is likely misplaced.
    #[error("principal-value pole location rejected at x0 = {x0}: {detail}")]
    PoleLocation { x0: f64, detail: String },

    /// Monte-Carlo standard error exceeded 10% of the estimate.
    #[error("Monte-Carlo variance warning: value {value:e}, std error {std_error:e}")]
    VarianceWarning { value: f64, std_error: f64 },

    /// Catalog name not registered.
    #[error("unknown transform entry: {0}")]
    UnknownEntry(String),

    /// Fixture id not registered.
    #[error("unknown fixture: {0}")]
    UnknownFixture(String),

    /// Parameter violates a documented validity constraint.
    #[error("parameter error for {name}: {constraint}")]
    Param { name: String, constraint: String },

    /// Spec-document syntax error with position information.
    #[error("syntax error at line {line}, column {col}: expected {expected}")]
    Syntax {
        line: usize,
        col: usize,
        expected: String,
    },

    /// Unknown coefficient-function preset in a spec document.
    #[error("unknown preset: {0}")]
    UnknownPreset(String),

    /// A consistency-suite fixture failed its side condition.
    #[error("fixture side condition violated: {0}")]
    FixtureCondition(String),
}

impl Error {
    pub fn pole(location: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Pole {
            location: location.into(),
            detail: detail.into(),
        }
    }

    pub fn domain(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Domain {
            what: what.into(),
            detail: detail.into(),
        }
    }

    pub fn param(name: impl Into<String>, constraint: impl Into<String>) -> Self {
        Error::Param {
            name: name.into(),
            constraint: constraint.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
