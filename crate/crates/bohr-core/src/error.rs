use std::fmt;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Evaluation radius outside `[0, 1)`.
    RadiusOutOfRange(f64),
    /// A scalar parameter left its documented domain.
    ParamOutOfRange { name: &'static str, value: f64 },
    /// Inner function of a composition does not vanish at the origin.
    NonVanishingInnerConstant(f64),
    /// Root or crossover bracketing failed: endpoints do not straddle.
    BadBracket { lo: f64, hi: f64 },
    /// The evaluation radius exceeds the range on which the inequality is
    /// known to hold; reported, never silently clamped.
    PreconditionViolated { limit: f64, requested: f64 },
    /// The analytic part has no detectable zero order (constant head).
    ConstantAnalyticPart,
    /// Malformed external series data.
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RadiusOutOfRange(r) => write!(f, "radius {r} outside [0, 1)"),
            Error::ParamOutOfRange { name, value } => {
                write!(f, "parameter `{name}` = {value} outside its domain")
            }
            Error::NonVanishingInnerConstant(c) => {
                write!(f, "inner function has |w(0)| = {c} > 0")
            }
            Error::BadBracket { lo, hi } => {
                write!(f, "no sign/verdict change on bracket [{lo}, {hi}]")
            }
            Error::PreconditionViolated { limit, requested } => {
                write!(f, "radius {requested} exceeds validity radius {limit}")
            }
            Error::ConstantAnalyticPart => {
                write!(f, "analytic part is constant to working precision")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
