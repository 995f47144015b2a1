//! Three quantum problems that reduce to Heun-type equations.

mod coulomb;
mod doublewell;
mod electrons;

pub use coulomb::*;
pub use doublewell::*;
pub use electrons::*;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AppError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("no admissible accessory root: {0}")]
    NoState(String),
    #[error("relation residual {0:.3e} above tolerance")]
    Relation(f64),
    #[error("roots {0} and {1} coincide")]
    Coincident(usize, usize),
    #[error(transparent)]
    Heun(#[from] crate::heun::HeunError),
    #[error(transparent)]
    Che(#[from] crate::che::CheError),
    #[error(transparent)]
    Oracle(#[from] crate::oracle::OracleError),
}
