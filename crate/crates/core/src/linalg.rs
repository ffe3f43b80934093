//! Dense linear algebra on top of `nalgebra`: Hilbert and Gram matrices,
//! pivoted LU solves, inversion and 1-norm conditioning.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use thiserror::Error;

use crate::polybasis::BoubakerBasis;

pub type Matrix = DMatrix<f64>;
pub type Vector = DVector<f64>;

/// Gram matrices with a 1-norm condition number above this get a warning.
pub const CONDITION_WARNING: f64 = 1e12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix is singular (zero pivot at index {pivot})")]
    Singular { pivot: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: matrix has {expected} rows, right-hand side has {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix contains non-finite entries")]
    NonFinite,
}

/// `H[i][j] = 1 / (i + j + 1)` for `i, j = 0..=n`, the Gram matrix of the
/// monomials on `[0, 1]`.
pub fn hilbert(n: usize) -> Matrix {
    Matrix::from_fn(n + 1, n + 1, |i, j| 1.0 / (i + j + 1) as f64)
}

/// `Q = M H M^T`, i.e. `Q[i][j] = <B_i, B_j>` on `[0, 1]`.
///
/// Only the upper triangle is computed; the lower one is mirrored so the
/// result is exactly symmetric.
pub fn gram(basis: &BoubakerBasis) -> Matrix {
    let n = basis.len();
    let m = basis.m_exact();
    let mut q = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut acc = 0.0;
            for (k, &mik) in m[i][..=i].iter().enumerate() {
                if mik == 0 {
                    continue;
                }
                for (l, &mjl) in m[j][..=j].iter().enumerate() {
                    if mjl != 0 {
                        acc += (mik * mjl) as f64 / (k + l + 1) as f64;
                    }
                }
            }
            q[(i, j)] = acc;
            q[(j, i)] = acc;
        }
    }
    q
}

/// LU factorization with partial pivoting.
#[derive(Debug, Clone)]
pub struct Lu {
    inner: nalgebra::LU<f64, Dyn, Dyn>,
}

impl Lu {
    pub fn factor(a: &Matrix) -> Result<Self, LinalgError> {
        if !a.is_square() {
            return Err(LinalgError::NotSquare {
                rows: a.nrows(),
                cols: a.ncols(),
            });
        }
        if a.iter().any(|v| !v.is_finite()) {
            return Err(LinalgError::NonFinite);
        }
        let inner = a.clone().lu();
        if let Some(pivot) = inner.u().diagonal().iter().position(|&d| d == 0.0) {
            return Err(LinalgError::Singular { pivot });
        }
        Ok(Self { inner })
    }

    pub fn dim(&self) -> usize {
        self.inner.l().nrows()
    }

    pub fn solve(&self, b: &Vector) -> Result<Vector, LinalgError> {
        self.check_rows(b.len())?;
        // zero pivots were rejected in `factor`
        Ok(self.inner.solve(b).expect("nonsingular factorization"))
    }

    pub fn solve_matrix(&self, b: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_rows(b.nrows())?;
        Ok(self.inner.solve(b).expect("nonsingular factorization"))
    }

    pub fn inverse(&self) -> Matrix {
        let n = self.dim();
        self.inner
            .solve(&Matrix::identity(n, n))
            .expect("nonsingular factorization")
    }

    fn check_rows(&self, got: usize) -> Result<(), LinalgError> {
        if got != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                got,
            });
        }
        Ok(())
    }
}

pub fn lu_solve(a: &Matrix, b: &Vector) -> Result<Vector, LinalgError> {
    Lu::factor(a)?.solve(b)
}

pub fn lu_solve_matrix(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    Lu::factor(a)?.solve_matrix(b)
}

pub fn invert(a: &Matrix) -> Result<Matrix, LinalgError> {
    Ok(Lu::factor(a)?.inverse())
}

/// Maximum absolute column sum.
pub fn norm_1(a: &Matrix) -> f64 {
    a.column_iter()
        .map(|col| col.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `||A||_1 ||A^-1||_1` from the explicit inverse; `+inf` when `A` is singular.
pub fn condition_estimate(a: &Matrix) -> f64 {
    match invert(a) {
        Ok(inv) if inv.iter().all(|v| v.is_finite()) => norm_1(a) * norm_1(&inv),
        _ => f64::INFINITY,
    }
}

pub fn is_positive_definite(a: &Matrix) -> bool {
    a.is_square() && Cholesky::new(a.clone()).is_some()
}

/// Largest absolute entry of `a - b`.
pub fn max_abs_diff(a: &Matrix, b: &Matrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert(0), Matrix::from_element(1, 1, 1.0));
        assert_eq!(
            hilbert(1),
            Matrix::from_row_slice(2, 2, &[1.0, 0.5, 0.5, 1.0 / 3.0])
        );
        assert_eq!(hilbert(4)[(2, 3)], 1.0 / 6.0);
    }

    #[test]
    fn gram_examples() {
        let q0 = gram(&BoubakerBasis::new(0).unwrap());
        assert_eq!(q0, Matrix::from_element(1, 1, 1.0));
        let q1 = gram(&BoubakerBasis::new(1).unwrap());
        assert_eq!(q1, hilbert(1));
        let q2 = gram(&BoubakerBasis::new(2).unwrap());
        assert!((q2[(0, 2)] - 7.0 / 3.0).abs() < 1e-15);
        assert_eq!(q2[(0, 2)], q2[(2, 0)]);
    }

    #[test]
    fn gram_matches_m_h_mt() {
        let basis = BoubakerBasis::new(6).unwrap();
        let m = basis.m();
        let direct = m * hilbert(6) * m.transpose();
        assert!(max_abs_diff(&gram(&basis), &direct) < 1e-12);
    }

    #[test]
    fn lu_examples() {
        let b = Vector::from_vec(vec![1.0, 2.0, 3.0]);
        assert_eq!(lu_solve(&Matrix::identity(3, 3), &b).unwrap(), b);

        let a = Matrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 4.0]);
        let x = lu_solve(&a, &Vector::from_vec(vec![2.0, 8.0])).unwrap();
        assert_eq!(x.as_slice(), &[1.0, 2.0]);

        let h = hilbert(4);
        let ones = Vector::from_element(5, 1.0);
        let x = lu_solve(&h, &(&h * &ones)).unwrap();
        assert!(x.iter().all(|v| (v - 1.0).abs() < 1e-8));
    }

    #[test]
    fn lu_errors() {
        let singular = Matrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert!(matches!(
            Lu::factor(&singular),
            Err(LinalgError::Singular { pivot: 1 })
        ));
        let zero_col = Matrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 1.0]);
        assert_eq!(
            Lu::factor(&zero_col).unwrap_err(),
            LinalgError::Singular { pivot: 0 }
        );
        assert!(matches!(
            Lu::factor(&Matrix::zeros(2, 3)),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        ));
        let lu = Lu::factor(&Matrix::identity(2, 2)).unwrap();
        assert!(matches!(
            lu.solve(&Vector::zeros(3)),
            Err(LinalgError::DimensionMismatch { expected: 2, got: 3 })
        ));
        let nan = Matrix::from_element(1, 1, f64::NAN);
        assert_eq!(Lu::factor(&nan).unwrap_err(), LinalgError::NonFinite);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&Matrix::identity(5, 5)).unwrap(), Matrix::identity(5, 5));
        let a = Matrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 4.0]);
        assert_eq!(
            invert(&a).unwrap(),
            Matrix::from_row_slice(2, 2, &[0.5, 0.0, 0.0, 0.25])
        );
        let q = gram(&BoubakerBasis::new(2).unwrap());
        let prod = &q * invert(&q).unwrap();
        assert!(max_abs_diff(&prod, &Matrix::identity(3, 3)) <= 1e-10);
        assert!(invert(&Matrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn condition_examples() {
        assert_eq!(condition_estimate(&Matrix::identity(4, 4)), 1.0);
        let d = Matrix::from_diagonal(&Vector::from_vec(vec![1.0, 1000.0]));
        assert!((condition_estimate(&d) - 1000.0).abs() < 1e-9);
        assert_eq!(condition_estimate(&Matrix::zeros(3, 3)), f64::INFINITY);
    }

    #[test]
    fn positive_definite() {
        assert!(is_positive_definite(&hilbert(5)));
        let indefinite = Matrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(!is_positive_definite(&indefinite));
    }
}
