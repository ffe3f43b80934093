//! Boubaker polynomials and the basis-to-monomial matrix `M`.
//!
//! The basis is defined by the explicit monomial expansion
//!
//! ```text
//! B_0(x) = 1
//! B_n(x) = sum_{p=0}^{floor(n/2)} m_{n,p} x^{n-2p},
//! m_{n,p} = (n - 4p) / (n - p) * C(n - p, p) * (-1)^p
//! ```
//!
//! which gives `B_1 = x`, `B_2 = x^2 + 2`, `B_3 = x^3 + x`, `B_4 = x^4 - 2`.
//! The three-term recurrence `B_m = x B_{m-1} - B_{m-2}` holds from `m = 3`
//! onwards only; [`recurrence_check`] verifies that agreement.
//!
//! All coefficients are computed in exact integer arithmetic and converted to
//! `f64` at the end.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

/// Largest degree for which exact `i128` coefficients are guaranteed.
pub const MAX_DEGREE: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BasisError {
    #[error("coefficient index p = {p} out of range for n = {n} (need p <= {})", n / 2)]
    CoefficientIndex { n: usize, p: usize },
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("coefficient vector has length {got}, basis expects {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Dense polynomial in ascending monomial order: `coeffs[i]` multiplies `x^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(vec![0.0])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Highest power with a nonzero coefficient, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

impl fmt::Display for Polynomial {
    /// Descending powers, e.g. `x^4 - 2` or `x^3 + x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            } else if c < 0.0 {
                f.write_str("-")?;
            }
            let show_mag = k == 0 || mag != 1.0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 if show_mag => f.write_str("*x")?,
                1 => f.write_str("x")?,
                _ if show_mag => write!(f, "*x^{k}")?,
                _ => write!(f, "x^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Binomial coefficient from one row of Pascal's triangle.
fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let mut row = vec![0i128; n + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=i).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

fn exact_coefficient(n: usize, p: usize) -> Result<i128, BasisError> {
    if n > MAX_DEGREE {
        return Err(BasisError::DegreeTooLarge(n));
    }
    if p > n / 2 {
        return Err(BasisError::CoefficientIndex { n, p });
    }
    // 0/0 in the general formula
    if n == 0 {
        return Ok(1);
    }
    let num = (n as i128 - 4 * p as i128) * binomial(n - p, p);
    let den = (n - p) as i128;
    debug_assert_eq!(num % den, 0, "m_{{{n},{p}}} is not integral");
    let sign = if p % 2 == 0 { 1 } else { -1 };
    Ok(sign * num / den)
}

/// The coefficient `m_{n,p}` of `x^{n-2p}` in `B_n`.
pub fn boubaker_coefficient(n: usize, p: usize) -> Result<f64, BasisError> {
    exact_coefficient(n, p).map(|c| c as f64)
}

/// Exact integer monomial coefficients of `B_n`, ascending order, length `n + 1`.
pub fn integer_coefficients(n: usize) -> Result<Vec<i128>, BasisError> {
    let mut coeffs = vec![0i128; n + 1];
    for p in 0..=n / 2 {
        coeffs[n - 2 * p] = exact_coefficient(n, p)?;
    }
    Ok(coeffs)
}

pub fn boubaker_polynomial(n: usize) -> Result<Polynomial, BasisError> {
    let coeffs = integer_coefficients(n)?;
    Ok(Polynomial::new(coeffs.into_iter().map(|c| c as f64).collect()))
}

/// True iff `x B_{m-1} - B_{m-2}` reproduces `B_m` exactly for every `3 <= m <= n`.
///
/// `B_2` is taken from the explicit expansion; seeding the recurrence with
/// `B_0` and `B_1` alone would give `x^2 - 1` instead.
pub fn recurrence_check(n: usize) -> Result<bool, BasisError> {
    if n < 3 {
        return Ok(true);
    }
    let mut prev2 = integer_coefficients(1)?;
    let mut prev1 = integer_coefficients(2)?;
    for m in 3..=n {
        let mut next = vec![0i128; m + 1];
        for (k, &c) in prev1.iter().enumerate() {
            next[k + 1] += c;
        }
        for (k, &c) in prev2.iter().enumerate() {
            next[k] -= c;
        }
        if next != integer_coefficients(m)? {
            return Ok(false);
        }
        prev2 = std::mem::replace(&mut prev1, next);
    }
    Ok(true)
}

/// `(n+1) x (n+1)` matrix whose row `k` holds the monomial coefficients of `B_k`.
pub fn boubaker_matrix(n: usize) -> Result<DMatrix<f64>, BasisError> {
    let rows = exact_rows(n)?;
    Ok(DMatrix::from_fn(n + 1, n + 1, |i, j| rows[i][j] as f64))
}

fn exact_rows(n: usize) -> Result<Vec<Vec<i128>>, BasisError> {
    (0..=n)
        .map(|k| {
            let mut row = integer_coefficients(k)?;
            row.resize(n + 1, 0);
            Ok(row)
        })
        .collect()
}

/// The Boubaker polynomials `B_0..=B_N` with their monomial matrix `M`,
/// so that `B(x) = M T(x)` with `T(x) = [1, x, ..., x^N]`.
#[derive(Debug, Clone)]
pub struct BoubakerBasis {
    degree: usize,
    polys: Vec<Polynomial>,
    m: DMatrix<f64>,
    m_exact: Vec<Vec<i128>>,
}

impl BoubakerBasis {
    pub fn new(degree: usize) -> Result<Self, BasisError> {
        let m_exact = exact_rows(degree)?;
        let m = DMatrix::from_fn(degree + 1, degree + 1, |i, j| m_exact[i][j] as f64);
        let polys = (0..=degree)
            .map(|k| Polynomial::new(m_exact[k][..=k].iter().map(|&c| c as f64).collect()))
            .collect();
        Ok(Self {
            degree,
            polys,
            m,
            m_exact,
        })
    }

    /// The degree bound `N`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of basis functions, `N + 1`.
    pub fn len(&self) -> usize {
        self.degree + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn m(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn m_exact(&self) -> &[Vec<i128>] {
        &self.m_exact
    }

    /// `B(x) = [B_0(x), ..., B_N(x)]`, each row of `M` evaluated by Horner.
    pub fn eval(&self, x: f64) -> DVector<f64> {
        DVector::from_iterator(self.len(), self.polys.iter().map(|p| p.eval(x)))
    }

    /// `C^T B(x)`.
    pub fn eval_series(&self, c: &[f64], x: f64) -> Result<f64, BasisError> {
        self.check_len(c.len())?;
        Ok(self.eval(x).iter().zip(c).map(|(b, c)| b * c).sum())
    }

    /// Monomial coefficients of `C^T B`, i.e. `M^T C`.
    pub fn to_monomial(&self, c: &[f64]) -> Result<Polynomial, BasisError> {
        self.check_len(c.len())?;
        let n = self.len();
        let mut a = vec![0.0; n];
        for (k, &ck) in c.iter().enumerate() {
            for (j, &mkj) in self.m_exact[k][..=k].iter().enumerate() {
                a[j] += ck * mkj as f64;
            }
        }
        Ok(Polynomial::new(a))
    }

    /// Basis coefficients of a polynomial of degree `<= N` given in monomial
    /// form: solves `M^T C = a` by back substitution (`M` is unit lower
    /// triangular).
    pub fn from_monomial(&self, a: &[f64]) -> Result<DVector<f64>, BasisError> {
        self.check_len(a.len())?;
        let n = self.len();
        let mut c = DVector::zeros(n);
        for j in (0..n).rev() {
            let mut acc = a[j];
            for k in j + 1..n {
                acc -= self.m_exact[k][j] as f64 * c[k];
            }
            c[j] = acc;
        }
        Ok(c)
    }

    fn check_len(&self, got: usize) -> Result<(), BasisError> {
        if got != self.len() {
            return Err(BasisError::LengthMismatch {
                expected: self.len(),
                got,
            });
        }
        Ok(())
    }
}
