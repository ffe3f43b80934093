use std::f64::consts::PI;

use crate::fraccalc::operational::build_d_with;
use crate::fraccalc::{caputo_polynomial, OperationalMatrix};
use crate::linalg::{Matrix, Vector};
use crate::polybasis::BoubakerBasis;
use crate::projection::ProjectionScheme;

use super::{EmdenFowlerProblem, SolveError};

/// Interior Chebyshev-Lobatto points `(cos(i pi / N) + 1) / 2`, `i = 1..N-1`,
/// in descending order.
pub fn collocation_points(n: usize) -> Result<Vec<f64>, SolveError> {
    if n < 2 {
        return Err(SolveError::TooFewPoints(n));
    }
    Ok((1..n)
        .map(|i| {
            let x = 0.5 * ((i as f64 * PI / n as f64).cos() + 1.0);
            // cos(pi/2) is 6e-17, not 0
            if 2 * i == n {
                0.5
            } else {
                x
            }
        })
        .collect())
}

#[derive(Debug, Clone)]
struct Node {
    x: f64,
    /// `D^{2a} B(x)`
    d2: Vector,
    /// `(lambda / x^a) D^a B(x)`
    d1: Vector,
    b: Vector,
    s: f64,
    h: f64,
}

/// The `N + 1` nonlinear equations in `C`, with everything that does not
/// depend on `C` evaluated once.
#[derive(Debug, Clone)]
pub struct CollocationSystem<'p> {
    problem: &'p EmdenFowlerProblem,
    basis: BoubakerBasis,
    points: Vec<f64>,
    nodes: Vec<Node>,
    b0: Vector,
    db0: Vector,
}

impl<'p> CollocationSystem<'p> {
    pub fn new(
        problem: &'p EmdenFowlerProblem,
        n: usize,
        scheme: &dyn ProjectionScheme,
    ) -> Result<Self, SolveError> {
        if n < 2 {
            return Err(SolveError::TooFewPoints(n));
        }
        let basis = BoubakerBasis::new(n)?;
        let d1 = build_d_with(problem.alpha, &basis, scheme)?;
        let d2 = build_d_with(2.0 * problem.alpha, &basis, scheme)?;
        Self::from_parts(problem, basis, &d1, &d2)
    }

    pub fn from_parts(
        problem: &'p EmdenFowlerProblem,
        basis: BoubakerBasis,
        d_alpha: &OperationalMatrix,
        d_2alpha: &OperationalMatrix,
    ) -> Result<Self, SolveError> {
        let points = collocation_points(basis.degree())?;
        let (da, d2a) = (d_alpha.matrix(), d_2alpha.matrix());
        let mut nodes = Vec::with_capacity(points.len());
        for &x in &points {
            let b = basis.eval(x);
            let weight = problem.lambda / x.powf(problem.alpha);
            nodes.push(Node {
                x,
                d2: d2a * &b,
                d1: (da * &b) * weight,
                s: problem.s_at(x)?,
                h: problem.h_at(x)?,
                b,
            });
        }
        let b0 = basis.eval(0.0);
        let db0 = da * &b0;
        Ok(Self {
            problem,
            basis,
            points,
            nodes,
            b0,
            db0,
        })
    }

    pub fn basis(&self) -> &BoubakerBasis {
        &self.basis
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Entries `0..N-1` are the collocation residuals, then `C^T B(0) - a`
    /// and `C^T D^a B(0) - b`.
    pub fn residual(&self, c: &[f64]) -> Result<Vec<f64>, SolveError> {
        let c = Vector::from_column_slice(c);
        let mut r = Vec::with_capacity(self.nodes.len() + 2);
        for node in &self.nodes {
            let u = c.dot(&node.b);
            let g = self.problem.g_of(u, node.x)?;
            r.push(c.dot(&node.d2) + c.dot(&node.d1) + node.s * g - node.h);
        }
        r.push(c.dot(&self.b0) - self.problem.a);
        r.push(c.dot(&self.db0) - self.problem.b);
        Ok(r)
    }

    /// `(A, r0)` with `residual(C) = A C + r0`. Only meaningful when `g` is
    /// affine in `u`.
    pub fn affine_system(&self) -> Result<(Matrix, Vector), SolveError> {
        let n = self.basis.len();
        let r0 = Vector::from_vec(self.residual(&vec![0.0; n])?);
        let mut a = Matrix::zeros(n, n);
        let mut e = vec![0.0; n];
        for j in 0..n {
            e[j] = 1.0;
            let rj = Vector::from_vec(self.residual(&e)?);
            a.set_column(j, &(rj - &r0));
            e[j] = 0.0;
        }
        Ok((a, r0))
    }
}

/// Residual vector for given operational matrices; see
/// [`CollocationSystem::residual`].
pub fn assemble_residual(
    problem: &EmdenFowlerProblem,
    basis: &BoubakerBasis,
    d_alpha: &OperationalMatrix,
    d_2alpha: &OperationalMatrix,
    c: &[f64],
) -> Result<Vec<f64>, SolveError> {
    CollocationSystem::from_parts(problem, basis.clone(), d_alpha, d_2alpha)?.residual(c)
}

/// Pointwise residual of the differential equation for `u = C^T B`, with
/// derivatives taken exactly term by term rather than through the
/// operational matrix.
pub fn residual_certificate(
    problem: &EmdenFowlerProblem,
    c: &[f64],
    basis: &BoubakerBasis,
    grid: &[f64],
) -> Result<Vec<(f64, f64)>, SolveError> {
    let u = basis.to_monomial(c)?;
    let d1 = caputo_polynomial(&u, problem.alpha)?;
    let d2 = caputo_polynomial(&u, 2.0 * problem.alpha)?;
    grid.iter()
        .map(|&x| {
            if !(x > 0.0 && x <= 1.0) {
                return Err(SolveError::GridPoint(x));
            }
            let lhs = d2.eval(x)
                + problem.lambda / x.powf(problem.alpha) * d1.eval(x)
                + problem.s_at(x)? * problem.g_of(u.eval(x), x)?;
            Ok((x, lhs - problem.h_at(x)?))
        })
        .collect()
}
