//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid Frobenius coordinates: {0}")]
    Frobenius(String),

    #[error("table window [{have_lo}, {have_hi}] does not cover required index range [{need_lo}, {need_hi}]")]
    Window {
        need_lo: i64,
        need_hi: i64,
        have_lo: i64,
        have_hi: i64,
    },

    #[error("parameter values collide: {0}")]
    ParameterCollision(String),

    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    #[error("{n} variables are too few for a diagram of depth {d}")]
    TooFewVariables { n: usize, d: usize },

    #[error("singular interpolation system: {0}")]
    SingularSystem(String),

    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}
