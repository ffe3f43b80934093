use thiserror::Error;

use crate::approx::ApproxError;
use crate::expr::{EvalError, ParseError};
use crate::fraccalc::FracError;
use crate::linalg::LinalgError;
use crate::polybasis::BasisError;
use crate::projection::ProjectionError;
use crate::solver::SolveError;

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Frac(#[from] FracError),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
    #[error(transparent)]
    Approx(#[from] ApproxError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
