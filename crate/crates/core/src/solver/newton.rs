use crate::linalg::{Lu, LinalgError, Matrix, Vector};

use super::{SolveError, SolveOptions};

/// Step halvings tried before a Newton step is taken regardless.
pub const MAX_HALVINGS: usize = 30;

#[derive(Debug, Clone, PartialEq)]
pub struct NewtonOutcome {
    pub x: Vec<f64>,
    pub iterations: usize,
    pub residual_inf: f64,
}

fn inf_norm(r: &[f64]) -> f64 {
    r.iter().fold(0.0, |m, v| if v.is_nan() { f64::NAN } else { m.max(v.abs()) })
}

/// Damped Newton for the square system `f(x) = 0` with a forward-difference
/// Jacobian. Stops once `||f||_inf <= tol`.
pub fn newton<F>(f: F, x0: &[f64], opts: &SolveOptions) -> Result<NewtonOutcome, SolveError>
where
    F: Fn(&[f64]) -> Result<Vec<f64>, SolveError>,
{
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut r = f(&x)?;
    let mut norm = inf_norm(&r);
    let mut best = norm;

    for iteration in 0..opts.max_iters {
        if norm <= opts.tol {
            return Ok(NewtonOutcome {
                x,
                iterations: iteration,
                residual_inf: norm,
            });
        }
        let mut jac = Matrix::zeros(r.len(), n);
        for j in 0..n {
            let h = opts.fd_step * x[j].abs().max(1.0);
            let mut xp = x.clone();
            xp[j] += h;
            let rp = f(&xp)?;
            for (i, (a, b)) in rp.iter().zip(&r).enumerate() {
                jac[(i, j)] = (a - b) / h;
            }
        }
        let singular = |_: LinalgError| SolveError::SingularJacobian { iteration };
        let rhs = -Vector::from_column_slice(&r);
        let dx = Lu::factor(&jac).and_then(|lu| lu.solve(&rhs)).map_err(singular)?;

        let mut t = 1.0;
        let mut trial = None;
        for _ in 0..=MAX_HALVINGS {
            let xt: Vec<f64> = x.iter().zip(dx.iter()).map(|(a, d)| a + t * d).collect();
            if let Ok(rt) = f(&xt) {
                let nt = inf_norm(&rt);
                let accept = nt < norm;
                trial = Some((xt, rt, nt));
                if accept {
                    break;
                }
            }
            t *= 0.5;
        }
        let Some((xt, rt, nt)) = trial else {
            break;
        };
        if nt.is_nan() {
            break;
        }
        x = xt;
        r = rt;
        norm = nt;
        best = best.min(norm);
    }
    if norm <= opts.tol {
        return Ok(NewtonOutcome {
            x,
            iterations: opts.max_iters,
            residual_inf: norm,
        });
    }
    Err(SolveError::NotConverged {
        iterations: opts.max_iters,
        best_residual: best,
    })
}
