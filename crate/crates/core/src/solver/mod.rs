//! Collocation solve of
//!
//! ```text
//! D^{2a} u + (lambda / x^a) D^a u + s(x) g(u) = h(x),   u(0) = a0,  D^a u(0) = b0
//! ```
//!
//! with `u = C^T B` on `N + 1` Boubaker polynomials.

mod collocation;
mod newton;

pub use collocation::{assemble_residual, collocation_points, residual_certificate, CollocationSystem};
pub use newton::{newton, NewtonOutcome};

use thiserror::Error;

use crate::approx::decimal_grid;
use crate::expr::{EvalError, Expression, ParseError};
use crate::fraccalc::FracError;
use crate::linalg::{condition_estimate, gram, LinalgError, CONDITION_WARNING};
use crate::polybasis::{BasisError, BoubakerBasis, Polynomial};
use crate::projection::{default_scheme, ProjectionScheme};

/// Variables visible to `s`, `h` and `exact`.
pub const X_VARS: [&str; 3] = ["x", "alpha", "lambda"];
/// Variables visible to `g`.
pub const U_VARS: [&str; 1] = ["u"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("alpha must lie in (1/2, 1], got {0}")]
    Alpha(f64),
    #[error("lambda must be finite and >= 0, got {0}")]
    Lambda(f64),
    #[error("initial value {name} must be finite, got {value}")]
    InitialValue { name: &'static str, value: f64 },
    #[error("missing expression for {0}")]
    MissingExpression(&'static str),
    #[error("in {field}: {source}")]
    Parse {
        field: &'static str,
        #[source]
        source: ParseError,
    },
    #[error("evaluating {field} at x = {x}: {source}")]
    Eval {
        field: &'static str,
        x: f64,
        #[source]
        source: EvalError,
    },
    #[error("need N >= 2 for collocation, got {0}")]
    TooFewPoints(usize),
    #[error("grid point {0} is outside (0, 1]")]
    GridPoint(f64),
    #[error("singular Jacobian at Newton iteration {iteration}")]
    SingularJacobian { iteration: usize },
    #[error("Newton did not converge in {iterations} iterations (best residual {best_residual:e})")]
    NotConverged {
        iterations: usize,
        best_residual: f64,
    },
    #[error(transparent)]
    Frac(#[from] FracError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A singular fractional Emden-Fowler initial value problem.
#[derive(Debug, Clone, PartialEq)]
pub struct EmdenFowlerProblem {
    pub alpha: f64,
    pub lambda: f64,
    pub s: Expression,
    pub g: Expression,
    pub h: Expression,
    /// `u(0)`
    pub a: f64,
    /// `D^alpha u(0)`
    pub b: f64,
    pub exact: Option<Expression>,
}

impl EmdenFowlerProblem {
    pub fn builder(alpha: f64, lambda: f64) -> ProblemBuilder {
        ProblemBuilder {
            alpha,
            lambda,
            ..ProblemBuilder::default()
        }
    }

    fn eval_x(&self, field: &'static str, e: &Expression, x: f64) -> Result<f64, SolveError> {
        e.eval(&[("x", x), ("alpha", self.alpha), ("lambda", self.lambda)])
            .map_err(|source| SolveError::Eval { field, x, source })
    }

    pub fn s_at(&self, x: f64) -> Result<f64, SolveError> {
        self.eval_x("s", &self.s, x)
    }

    pub fn h_at(&self, x: f64) -> Result<f64, SolveError> {
        self.eval_x("h", &self.h, x)
    }

    /// `g(u)`; `x` is only carried into the error.
    pub fn g_of(&self, u: f64, x: f64) -> Result<f64, SolveError> {
        self.g
            .eval(&[("u", u)])
            .map_err(|source| SolveError::Eval { field: "g", x, source })
    }

    pub fn exact_at(&self, x: f64) -> Option<Result<f64, SolveError>> {
        self.exact.as_ref().map(|e| self.eval_x("exact", e, x))
    }
}

#[derive(Debug, Clone, Default)]
pub struct ProblemBuilder {
    alpha: f64,
    lambda: f64,
    s: Option<String>,
    g: Option<String>,
    h: Option<String>,
    exact: Option<String>,
    a: f64,
    b: f64,
}

impl ProblemBuilder {
    pub fn s(mut self, src: &str) -> Self {
        self.s = Some(src.to_string());
        self
    }

    pub fn g(mut self, src: &str) -> Self {
        self.g = Some(src.to_string());
        self
    }

    pub fn h(mut self, src: &str) -> Self {
        self.h = Some(src.to_string());
        self
    }

    pub fn exact(mut self, src: &str) -> Self {
        self.exact = Some(src.to_string());
        self
    }

    pub fn initial_values(mut self, a: f64, b: f64) -> Self {
        self.a = a;
        self.b = b;
        self
    }

    pub fn build(self) -> Result<EmdenFowlerProblem, SolveError> {
        if !(self.alpha > 0.5 && self.alpha <= 1.0) {
            return Err(SolveError::Alpha(self.alpha));
        }
        if !(self.lambda >= 0.0 && self.lambda.is_finite()) {
            return Err(SolveError::Lambda(self.lambda));
        }
        for (name, value) in [("a", self.a), ("b", self.b)] {
            if !value.is_finite() {
                return Err(SolveError::InitialValue { name, value });
            }
        }
        let parse = |field: &'static str, src: Option<String>, vars: &[&str]| {
            let src = src.ok_or(SolveError::MissingExpression(field))?;
            Expression::parse(&src, vars).map_err(|source| SolveError::Parse { field, source })
        };
        let exact = match self.exact {
            Some(src) => Some(parse("exact", Some(src), &X_VARS)?),
            None => None,
        };
        Ok(EmdenFowlerProblem {
            alpha: self.alpha,
            lambda: self.lambda,
            s: parse("s", self.s, &X_VARS)?,
            g: parse("g", self.g, &U_VARS)?,
            h: parse("h", self.h, &X_VARS)?,
            a: self.a,
            b: self.b,
            exact,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub tol: f64,
    pub max_iters: usize,
    /// Relative finite-difference step for the Jacobian.
    pub fd_step: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iters: 50,
            fd_step: 1e-7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRow {
    pub x: f64,
    pub approx: f64,
    pub exact: f64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub coefficients: Vec<f64>,
    /// `u_N` in monomial form.
    pub solution: Polynomial,
    pub points: Vec<f64>,
    pub newton_iters: usize,
    pub residual_inf: f64,
    pub cond_q: f64,
    pub warnings: Vec<String>,
    /// Present when the problem has an exact solution; grid `0.1, ..., 1.0`.
    pub error_table: Option<Vec<ErrorRow>>,
}

impl SolveReport {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.solution.eval(x)
    }

    pub fn max_abs_error(&self) -> Option<f64> {
        self.error_table
            .as_ref()
            .map(|t| t.iter().map(|r| r.abs_error).fold(0.0, f64::max))
    }
}

pub fn solve(
    problem: &EmdenFowlerProblem,
    n: usize,
    opts: &SolveOptions,
) -> Result<SolveReport, SolveError> {
    solve_with(problem, n, opts, default_scheme().as_ref())
}

pub fn solve_with(
    problem: &EmdenFowlerProblem,
    n: usize,
    opts: &SolveOptions,
    scheme: &dyn ProjectionScheme,
) -> Result<SolveReport, SolveError> {
    let system = CollocationSystem::new(problem, n, scheme)?;
    let mut c0 = vec![0.0; n + 1];
    c0[0] = problem.a;
    let out = newton(|c| system.residual(c), &c0, opts)?;

    let basis = system.basis();
    let cond_q = condition_estimate(&gram(basis));
    let mut warnings = Vec::new();
    if cond_q > CONDITION_WARNING {
        warnings.push(format!(
            "Gram matrix condition number {cond_q:.3e} exceeds {CONDITION_WARNING:e}"
        ));
    }
    let solution = basis.to_monomial(&out.x)?;
    let error_table = match &problem.exact {
        None => None,
        Some(_) => Some(error_table(problem, &solution, &decimal_grid(1..=10, 10))?),
    };
    Ok(SolveReport {
        coefficients: out.x,
        solution,
        points: system.points().to_vec(),
        newton_iters: out.iterations,
        residual_inf: out.residual_inf,
        cond_q,
        warnings,
        error_table,
    })
}

/// `|u_N(x) - exact(x)|` on `grid`. Requires an exact solution.
pub fn error_table(
    problem: &EmdenFowlerProblem,
    solution: &Polynomial,
    grid: &[f64],
) -> Result<Vec<ErrorRow>, SolveError> {
    grid.iter()
        .map(|&x| {
            let exact = problem
                .exact_at(x)
                .ok_or(SolveError::MissingExpression("exact"))??;
            let approx = solution.eval(x);
            Ok(ErrorRow {
                x,
                approx,
                exact,
                abs_error: (approx - exact).abs(),
            })
        })
        .collect()
}

/// Convenience: basis of degree `n` matching a report.
pub fn basis_for(report: &SolveReport) -> Result<BoubakerBasis, SolveError> {
    Ok(BoubakerBasis::new(report.degree())?)
}
