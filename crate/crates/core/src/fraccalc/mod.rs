//! Caputo fractional calculus on (generalized) polynomials and the
//! Boubaker operational matrix.
//!
//! The Caputo derivative of order `a` acts on powers by
//!
//! ```text
//! D^a x^b = 0                                      b integer, b < ceil(a)
//! D^a x^b = Gamma(b+1) / Gamma(b+1-a) * x^(b-a)    otherwise
//! ```
//!
//! [`caputo`] applies this term-wise and is exact. It serves as the oracle for
//! the operational matrix built in [`operational`].

mod gamma;
pub mod operational;

pub use gamma::gamma;
pub use operational::{build_d, build_e, build_z, xbar_exponents, OperationalMatrix, XbarEntry};

use std::fmt;

use thiserror::Error;

use crate::linalg::LinalgError;
use crate::polybasis::{BasisError, Polynomial};
use crate::projection::ProjectionError;

/// Largest supported derivative order.
pub const MAX_ORDER: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FracError {
    #[error("gamma is only defined here for z > 0, got {0}")]
    GammaDomain(f64),
    #[error("derivative order must lie in (0, {MAX_ORDER}], got {0}")]
    Order(f64),
    #[error("order {alpha} needs degree at least {need}, got {degree}")]
    DegreeTooSmall { alpha: f64, need: usize, degree: usize },
    #[error("exponent must be >= 0, got {0}")]
    NegativeExponent(f64),
    #[error("Caputo derivative of order {alpha} of x^{beta} would have negative exponent")]
    SingularImage { beta: f64, alpha: f64 },
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
}

/// `ceil(alpha)`, the integer `n` with `n - 1 < alpha <= n`.
pub fn ceil_order(alpha: f64) -> usize {
    alpha.ceil() as usize
}

pub fn check_order(alpha: f64) -> Result<(), FracError> {
    if alpha > 0.0 && alpha <= MAX_ORDER {
        Ok(())
    } else {
        Err(FracError::Order(alpha))
    }
}

/// Finite sum of `coeff * x^exponent` with real exponents `>= 0`.
///
/// Canonical form: exponents strictly increasing, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GeneralizedPolynomial {
    terms: Vec<(f64, f64)>,
}

impl GeneralizedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from `(coeff, exponent)` pairs, merging equal exponents.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (f64, f64)>,
    ) -> Result<Self, FracError> {
        let mut terms: Vec<(f64, f64)> = terms.into_iter().collect();
        if let Some(&(_, e)) = terms.iter().find(|(_, e)| !(*e >= 0.0)) {
            return Err(FracError::NegativeExponent(e));
        }
        terms.sort_by(|a, b| a.1.total_cmp(&b.1));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            match merged.last_mut() {
                Some(last) if last.1 == e => last.0 += c,
                _ => merged.push((c, e)),
            }
        }
        merged.retain(|&(c, _)| c != 0.0);
        Ok(Self { terms: merged })
    }

    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum c * x^e`, with `0^0 = 1`.
    pub fn eval(&self, x: f64) -> f64 {
        self.terms.iter().map(|&(c, e)| c * x.powf(e)).sum()
    }
}

impl From<&Polynomial> for GeneralizedPolynomial {
    fn from(p: &Polynomial) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, &c)| (c, k as f64)),
        )
        .expect("monomial exponents are nonnegative")
    }
}

impl fmt::Display for GeneralizedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(c, e)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            } else if c < 0.0 {
                f.write_str("-")?;
            }
            write!(f, "{}", c.abs())?;
            if e != 0.0 {
                write!(f, "*x^{e}")?;
            }
        }
        Ok(())
    }
}

/// Caputo derivative of order `alpha` of the single power `x^beta`.
pub fn caputo_monomial(beta: f64, alpha: f64) -> Result<GeneralizedPolynomial, FracError> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(FracError::Order(alpha));
    }
    if !(beta >= 0.0) || !beta.is_finite() {
        return Err(FracError::NegativeExponent(beta));
    }
    let order = alpha.ceil();
    if beta.fract() == 0.0 && beta < order {
        return Ok(GeneralizedPolynomial::zero());
    }
    if beta - alpha < 0.0 {
        return Err(FracError::SingularImage { beta, alpha });
    }
    let coeff = gamma(beta + 1.0)? / gamma(beta + 1.0 - alpha)?;
    GeneralizedPolynomial::from_terms([(coeff, beta - alpha)])
}

/// Term-wise exact Caputo derivative.
pub fn caputo(
    p: &GeneralizedPolynomial,
    alpha: f64,
) -> Result<GeneralizedPolynomial, FracError> {
    let mut out = Vec::new();
    for &(c, e) in p.terms() {
        for (dc, de) in caputo_monomial(e, alpha)?.terms {
            out.push((c * dc, de));
        }
    }
    GeneralizedPolynomial::from_terms(out)
}

pub fn caputo_polynomial(p: &Polynomial, alpha: f64) -> Result<GeneralizedPolynomial, FracError> {
    caputo(&GeneralizedPolynomial::from(p), alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polybasis::boubaker_polynomial;

    #[test]
    fn monomial_examples() {
        for alpha in [0.3, 1.0, 1.7, 2.0] {
            assert!(caputo_monomial(0.0, alpha).unwrap().is_zero());
        }
        assert_eq!(caputo_monomial(2.0, 1.0).unwrap().terms(), &[(2.0, 1.0)]);
        let d = caputo_monomial(2.0, 0.7).unwrap();
        let (c, e) = d.terms()[0];
        assert!((c - 1.714_219_243_918_926).abs() < 1e-12);
        assert!((e - 1.3).abs() < 1e-15);
    }

    #[test]
    fn integer_powers_below_order_vanish() {
        assert!(caputo_monomial(1.0, 1.4).unwrap().is_zero());
        assert!(caputo_monomial(1.0, 2.0).unwrap().is_zero());
        assert!(!caputo_monomial(1.0, 0.9).unwrap().is_zero());
    }

    #[test]
    fn monomial_errors() {
        assert_eq!(
            caputo_monomial(0.5, 0.8),
            Err(FracError::SingularImage {
                beta: 0.5,
                alpha: 0.8
            })
        );
        assert!(matches!(caputo_monomial(-1.0, 0.5), Err(FracError::NegativeExponent(_))));
        assert!(matches!(caputo_monomial(1.0, 0.0), Err(FracError::Order(_))));
    }

    #[test]
    fn polynomial_examples() {
        let b2 = boubaker_polynomial(2).unwrap();
        assert_eq!(caputo_polynomial(&b2, 1.0).unwrap().terms(), &[(2.0, 1.0)]);
        let b3 = boubaker_polynomial(3).unwrap();
        assert_eq!(caputo_polynomial(&b3, 2.0).unwrap().terms(), &[(6.0, 1.0)]);
        let b4 = boubaker_polynomial(4).unwrap();
        assert_eq!(caputo_polynomial(&b4, 1.0).unwrap().terms(), &[(4.0, 3.0)]);
    }

    #[test]
    fn canonical_form() {
        let p = GeneralizedPolynomial::from_terms([(1.0, 2.0), (2.0, 0.5), (-1.0, 2.0)]).unwrap();
        assert_eq!(p.terms(), &[(2.0, 0.5)]);
        assert!(GeneralizedPolynomial::from_terms([(1.0, -0.5)]).is_err());
        assert_eq!(p.to_string(), "2*x^0.5");
        assert!((p.eval(4.0) - 4.0).abs() < 1e-15);
    }

    #[test]
    fn order_helpers() {
        assert_eq!(ceil_order(0.7), 1);
        assert_eq!(ceil_order(1.0), 1);
        assert_eq!(ceil_order(1.4), 2);
        assert!(check_order(2.0).is_ok());
        assert!(check_order(2.5).is_err());
        assert!(check_order(0.0).is_err());
        assert!(check_order(f64::NAN).is_err());
    }
}
