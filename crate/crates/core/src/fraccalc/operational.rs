//! The Caputo operational matrix `D = M Z P` on the Boubaker basis.
//!
//! `D^a T(x) = Z Xbar(x)` holds exactly, where `T` is the monomial vector,
//! `Z` is diagonal with `Gamma(i+1)/Gamma(i+1-a)` and `Xbar_i = x^(i-a)` for
//! `i >= ceil(a)` (zero otherwise). Each `x^(i-a)` is replaced by its L2
//! projection `e_i . B(x)` onto the basis; stacking the `e_i` as rows of `P`
//! gives `D^a B(x) ~= M Z P B(x)`.
//!
//! For integer orders every `x^(i-a)` lies in the span and `D` is exact.

use nalgebra::DMatrix;

use super::{ceil_order, check_order, gamma, FracError};
use crate::linalg::Matrix;
use crate::polybasis::BoubakerBasis;
use crate::projection::{self, ProjectionScheme};

/// One component of `Xbar`: either the zero function or `x^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum XbarEntry {
    Zero,
    Power(f64),
}

fn check_degree(alpha: f64, degree: usize) -> Result<(), FracError> {
    check_order(alpha)?;
    let need = ceil_order(alpha);
    if need > degree {
        return Err(FracError::DegreeTooSmall {
            alpha,
            need,
            degree,
        });
    }
    Ok(())
}

/// Diagonal `Z` with `Z[j][j] = Gamma(j+1) / Gamma(j+1-alpha)` for
/// `j >= ceil(alpha)` and zero elsewhere.
pub fn build_z(alpha: f64, degree: usize) -> Result<Matrix, FracError> {
    check_degree(alpha, degree)?;
    let mut z = Matrix::zeros(degree + 1, degree + 1);
    for j in ceil_order(alpha)..=degree {
        let jf = j as f64;
        z[(j, j)] = gamma(jf + 1.0)? / gamma(jf + 1.0 - alpha)?;
    }
    Ok(z)
}

pub fn xbar_exponents(alpha: f64, degree: usize) -> Vec<XbarEntry> {
    let first = ceil_order(alpha);
    (0..=degree)
        .map(|i| {
            if i < first {
                XbarEntry::Zero
            } else {
                XbarEntry::Power(i as f64 - alpha)
            }
        })
        .collect()
}

/// Matrix `P` whose row `i` holds the basis coefficients `e_i` of the L2
/// projection of `x^(i-alpha)`; rows below `ceil(alpha)` are zero.
pub fn build_e(
    alpha: f64,
    basis: &BoubakerBasis,
    scheme: &dyn ProjectionScheme,
) -> Result<Matrix, FracError> {
    check_degree(alpha, basis.degree())?;
    let n = basis.len();
    let mut e = Matrix::zeros(n, n);
    for (i, entry) in xbar_exponents(alpha, basis.degree()).into_iter().enumerate() {
        if let XbarEntry::Power(s) = entry {
            let row = scheme.project_power(basis, s)?;
            e.row_mut(i).copy_from(&row.transpose());
        }
    }
    Ok(e)
}

/// Operational matrix of the Caputo derivative of order `alpha` on a basis
/// of degree `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperationalMatrix {
    alpha: f64,
    degree: usize,
    matrix: Matrix,
}

impl OperationalMatrix {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.matrix
            .row_iter()
            .map(|r| r.iter().copied().collect())
            .collect()
    }
}

/// `D = M Z P` using the default projection scheme.
pub fn build_d(alpha: f64, basis: &BoubakerBasis) -> Result<OperationalMatrix, FracError> {
    build_d_with(alpha, basis, projection::default_scheme().as_ref())
}

pub fn build_d_with(
    alpha: f64,
    basis: &BoubakerBasis,
    scheme: &dyn ProjectionScheme,
) -> Result<OperationalMatrix, FracError> {
    let z = build_z(alpha, basis.degree())?;
    let e = build_e(alpha, basis, scheme)?;
    let mut matrix: DMatrix<f64> = basis.m() * z * e;
    // zero rows must be exact, not rounding residue
    for r in 0..ceil_order(alpha) {
        matrix.row_mut(r).fill(0.0);
    }
    if matrix.iter().any(|v| !v.is_finite()) {
        return Err(FracError::Linalg(crate::linalg::LinalgError::NonFinite));
    }
    Ok(OperationalMatrix {
        alpha,
        degree: basis.degree(),
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;
    use crate::projection::ProjectionRegistry;

    fn d(alpha: f64, n: usize) -> Matrix {
        build_d(alpha, &BoubakerBasis::new(n).unwrap())
            .unwrap()
            .into_matrix()
    }

    #[test]
    fn z_examples() {
        let z = build_z(1.0, 2).unwrap();
        assert_eq!(z.diagonal().as_slice(), &[0.0, 1.0, 2.0]);
        let z = build_z(2.0, 3).unwrap();
        assert_eq!(z.diagonal().as_slice(), &[0.0, 0.0, 2.0, 6.0]);
        let z = build_z(0.5, 1).unwrap();
        assert!((z[(1, 1)] - 1.128_379_167_095_512_6).abs() < 1e-13);
        assert_eq!(z[(0, 1)], 0.0);
    }

    #[test]
    fn z_requires_degree() {
        assert_eq!(
            build_z(1.5, 1),
            Err(FracError::DegreeTooSmall {
                alpha: 1.5,
                need: 2,
                degree: 1
            })
        );
        assert!(matches!(build_z(2.5, 4), Err(FracError::Order(_))));
    }

    #[test]
    fn xbar_examples() {
        use XbarEntry::*;
        assert_eq!(
            xbar_exponents(1.0, 3),
            vec![Zero, Power(0.0), Power(1.0), Power(2.0)]
        );
        let x = xbar_exponents(0.7, 2);
        assert_eq!(x[0], Zero);
        assert!(matches!(x[1], Power(e) if (e - 0.3).abs() < 1e-15));
        assert!(matches!(x[2], Power(e) if (e - 1.3).abs() < 1e-15));
        let x = xbar_exponents(1.4, 4);
        assert_eq!(&x[..2], &[Zero, Zero]);
        for (i, want) in [(2, 0.6), (3, 1.6), (4, 2.6)] {
            assert!(matches!(x[i], Power(e) if (e - want).abs() < 1e-14));
        }
    }

    #[test]
    fn e_examples() {
        let scheme = crate::projection::default_scheme();
        let e = build_e(1.0, &BoubakerBasis::new(2).unwrap(), scheme.as_ref()).unwrap();
        assert_eq!(e.row(0).iter().copied().collect::<Vec<_>>(), [0.0; 3]);
        let row1: Vec<f64> = e.row(1).iter().copied().collect();
        assert!(row1.iter().zip([1.0, 0.0, 0.0]).all(|(a, b)| (a - b).abs() < 1e-13));

        let e = build_e(1.0, &BoubakerBasis::new(3).unwrap(), scheme.as_ref()).unwrap();
        let row3: Vec<f64> = e.row(3).iter().copied().collect();
        let want = [-2.0, 0.0, 1.0, 0.0];
        assert!(row3.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-12), "{row3:?}");
    }

    #[test]
    fn d_integer_examples() {
        let d1 = d(1.0, 2);
        let want = Matrix::from_row_slice(3, 3, &[0., 0., 0., 1., 0., 0., 0., 2., 0.]);
        assert!(max_abs_diff(&d1, &want) < 1e-12);
        let d13 = d(1.0, 3);
        let row3: Vec<f64> = d13.row(3).iter().copied().collect();
        assert!(row3.iter().zip([-5.0, 0.0, 3.0, 0.0]).all(|(a, b)| (a - b).abs() < 1e-12));
        let d24 = d(2.0, 4);
        let row4: Vec<f64> = d24.row(4).iter().copied().collect();
        assert!(row4
            .iter()
            .zip([-24.0, 0.0, 12.0, 0.0, 0.0])
            .all(|(a, b)| (a - b).abs() < 1e-12));
    }

    #[test]
    fn d_fractional_first_entry() {
        let d07 = d(0.7, 4);
        // 50-digit reference: Q^{-1} applied to exact moments of x^0.3 / Gamma(1.3)
        let want = [
            7.374_542_128_794_905_8,
            -4.301_104_569_089_331_1,
            -6.549_009_220_479_113_2,
            7.330_578_222_100_077_3,
            -3.009_004_236_436_349_3,
        ];
        for (j, w) in want.iter().enumerate() {
            assert!((d07[(1, j)] - w).abs() < 1e-12, "{}", d07[(1, j)]);
        }
        assert!(d07.row(0).iter().all(|&v| v == 0.0));
    }

    #[test]
    fn schemes_agree_at_low_degree() {
        let registry = ProjectionRegistry::with_defaults();
        let basis = BoubakerBasis::new(4).unwrap();
        for alpha in [0.7, 1.0, 1.4, 2.0] {
            let a = build_d_with(alpha, &basis, registry.get("gram-lu").unwrap().as_ref()).unwrap();
            let b = build_d_with(alpha, &basis, registry.get("legendre").unwrap().as_ref()).unwrap();
            assert!(max_abs_diff(a.matrix(), b.matrix()) < 1e-8, "alpha {alpha}");
        }
    }
}
