//! Best `L2[0,1]` approximation in the Boubaker span and error measurement.

mod quadrature;

pub use quadrature::{QuadratureRule, MAX_POINTS};

use thiserror::Error;

use crate::linalg::Vector;
use crate::polybasis::{BasisError, BoubakerBasis};
use crate::projection::{ProjectionError, ProjectionScheme};

/// Points in the inner-product rule.
pub const QUADRATURE_POINTS: usize = 64;
/// Grading exponent `x = t^q` used when the integrand is singular at 0.
pub const GRADING_POWER: u32 = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ApproxError {
    #[error("function is not finite at x = {x}")]
    NonFinite { x: f64 },
    #[error(transparent)]
    Projection(#[from] ProjectionError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

/// How the target behaves at the left endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Endpoint {
    #[default]
    Smooth,
    /// Power-type singularity at `x = 0`, e.g. `x^0.3`.
    Singular,
}

impl Endpoint {
    pub fn rule(self) -> QuadratureRule {
        match self {
            Endpoint::Smooth => QuadratureRule::gauss_legendre(QUADRATURE_POINTS),
            Endpoint::Singular => QuadratureRule::graded(QUADRATURE_POINTS, GRADING_POWER),
        }
    }
}

fn sample(f: &dyn Fn(f64) -> f64, rule: &QuadratureRule) -> Result<Vec<f64>, ApproxError> {
    rule.nodes()
        .iter()
        .map(|&x| {
            let v = f(x);
            if v.is_finite() {
                Ok(v)
            } else {
                Err(ApproxError::NonFinite { x })
            }
        })
        .collect()
}

/// Coefficients `C` minimizing `||f - C^T B||` on `[0, 1]`.
pub fn project(
    f: &dyn Fn(f64) -> f64,
    basis: &BoubakerBasis,
    scheme: &dyn ProjectionScheme,
    endpoint: Endpoint,
) -> Result<Vector, ApproxError> {
    let rule = endpoint.rule();
    let samples = sample(f, &rule)?;
    Ok(scheme.project_sampled(basis, &rule, &samples)?)
}

/// `sqrt(int_0^1 (f - C^T B)^2 dx)`.
pub fn l2_error(
    f: &dyn Fn(f64) -> f64,
    c: &[f64],
    basis: &BoubakerBasis,
    endpoint: Endpoint,
) -> Result<f64, ApproxError> {
    let rule = endpoint.rule();
    let mut acc = 0.0;
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        let fx = f(x);
        if !fx.is_finite() {
            return Err(ApproxError::NonFinite { x });
        }
        let d = fx - basis.eval_series(c, x)?;
        acc += w * d * d;
    }
    Ok(acc.sqrt())
}

/// `|f(x) - C^T B(x)|` at each grid point.
pub fn max_abs_error_on_grid(
    f: &dyn Fn(f64) -> f64,
    c: &[f64],
    basis: &BoubakerBasis,
    grid: &[f64],
) -> Result<Vec<(f64, f64)>, ApproxError> {
    grid.iter()
        .map(|&x| Ok((x, (f(x) - basis.eval_series(c, x)?).abs())))
        .collect()
}

/// `{0.1, 0.2, ..., 0.9}` style grids: `k / denom` for `k` in `range`.
pub fn decimal_grid(range: std::ops::RangeInclusive<u32>, denom: u32) -> Vec<f64> {
    range.map(|k| k as f64 / denom as f64).collect()
}
