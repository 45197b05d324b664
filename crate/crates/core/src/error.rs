use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantTerm,

    #[error("series is not normalized (need constant term 0 and linear coefficient 1)")]
    NotNormalized,

    #[error("unknown indeterminate `{0}`")]
    UnknownIndeterminate(String),

    #[error("need {needed} coefficients, only {available} available")]
    InsufficientCoefficients { needed: usize, available: usize },

    #[error("parameter constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("point ({u}, {v}, {w}) lies outside [0,2]x[0,1]x[0,1]")]
    OutOfBox { u: f64, v: f64, w: f64 },

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("measure has no atoms")]
    EmptyMeasure,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
