//! Interchangeable schemes for the L2 projection onto the Boubaker span.
//!
//! Every scheme computes the same mathematical object, the coefficient
//! vector `C = Q^-1 <f, B>` of the best `L2[0,1]` approximation, but along
//! different numerical routes:
//!
//! - `gram-lu`: forms the Gram matrix `Q = M H M^T` and solves the normal
//!   equations with a pivoted LU. `Q` is Hilbert-like, so accuracy degrades
//!   quickly beyond `N = 5`.
//! - `legendre`: factors `Q^-1 = M^-T H^-1 M^-1` and evaluates `H^-1 <f, T>`
//!   through the orthogonal shifted Legendre expansion. For powers `x^s` the
//!   Legendre moments have the closed form
//!   `prod_{j<n}(s - j) / prod_{j=1}^{n+1}(s + j)`, so no cancellation occurs.
//!
//! Schemes are looked up by name in a [`ProjectionRegistry`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use nalgebra::DVector;
use thiserror::Error;

use crate::approx::QuadratureRule;
use crate::linalg::{gram, LinalgError, Lu, Vector};
use crate::polybasis::{BasisError, BoubakerBasis};

pub const DEFAULT_SCHEME: &str = "legendre";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProjectionError {
    #[error("unknown projection scheme '{name}' (available: {available})")]
    UnknownScheme { name: String, available: String },
    #[error("x^{0} is not square integrable on [0, 1]")]
    InvalidExponent(f64),
    #[error("{got} samples for a {expected}-point rule")]
    SampleCount { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

pub trait ProjectionScheme: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Basis coefficients of the projection of `x^exponent`, `exponent > -1/2`.
    fn project_power(
        &self,
        basis: &BoubakerBasis,
        exponent: f64,
    ) -> Result<Vector, ProjectionError>;

    /// Basis coefficients of the projection of a function known through its
    /// samples at the nodes of `rule`.
    fn project_sampled(
        &self,
        basis: &BoubakerBasis,
        rule: &QuadratureRule,
        samples: &[f64],
    ) -> Result<Vector, ProjectionError>;
}

impl fmt::Debug for dyn ProjectionScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjectionScheme({})", self.name())
    }
}

fn check_exponent(s: f64) -> Result<(), ProjectionError> {
    if s > -0.5 && s.is_finite() {
        Ok(())
    } else {
        Err(ProjectionError::InvalidExponent(s))
    }
}

fn check_samples(rule: &QuadratureRule, samples: &[f64]) -> Result<(), ProjectionError> {
    if rule.len() != samples.len() {
        return Err(ProjectionError::SampleCount {
            expected: rule.len(),
            got: samples.len(),
        });
    }
    Ok(())
}

/// Normal equations `Q C = <f, B>` solved with LU.
#[derive(Debug, Default, Clone, Copy)]
pub struct GramLu;

impl ProjectionScheme for GramLu {
    fn name(&self) -> &'static str {
        "gram-lu"
    }

    fn description(&self) -> &'static str {
        "solve Q C = <f, B> with Q = M H M^T by pivoted LU"
    }

    fn project_power(
        &self,
        basis: &BoubakerBasis,
        exponent: f64,
    ) -> Result<Vector, ProjectionError> {
        check_exponent(exponent)?;
        // <x^s, B_j> = sum_k M[j][k] / (s + k + 1)
        let rhs = DVector::from_iterator(
            basis.len(),
            basis.m_exact().iter().map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &m)| m != 0)
                    .map(|(k, &m)| m as f64 / (exponent + k as f64 + 1.0))
                    .sum::<f64>()
            }),
        );
        Ok(Lu::factor(&gram(basis))?.solve(&rhs)?)
    }

    fn project_sampled(
        &self,
        basis: &BoubakerBasis,
        rule: &QuadratureRule,
        samples: &[f64],
    ) -> Result<Vector, ProjectionError> {
        check_samples(rule, samples)?;
        let mut rhs = Vector::zeros(basis.len());
        for ((&x, &w), &f) in rule.nodes().iter().zip(rule.weights()).zip(samples) {
            rhs += basis.eval(x) * (w * f);
        }
        Ok(Lu::factor(&gram(basis))?.solve(&rhs)?)
    }
}

/// Factored normal equations through the shifted Legendre expansion.
#[derive(Debug, Default, Clone, Copy)]
pub struct LegendreExpansion;

/// Monomial coefficients of the shifted Legendre polynomial `P_n(2x - 1)`:
/// `(-1)^(n+k) C(n,k) C(n+k,k)`.
fn shifted_legendre_coeffs(n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n + 1];
    let mut c_nk = 1.0; // C(n, k)
    let mut c_npk = 1.0; // C(n + k, k)
    for (k, slot) in out.iter_mut().enumerate() {
        if k > 0 {
            // multiply before dividing so each step stays an exact integer
            c_nk = c_nk * (n + 1 - k) as f64 / k as f64;
            c_npk = c_npk * (n + k) as f64 / k as f64;
        }
        let sign = if (n + k) % 2 == 0 { 1.0 } else { -1.0 };
        *slot = sign * c_nk * c_npk;
    }
    out
}

/// `int_0^1 x^s P_n(2x - 1) dx`.
fn legendre_power_moment(s: f64, n: usize) -> f64 {
    let mut v = 1.0 / (s + 1.0);
    for j in 0..n {
        v *= (s - j as f64) / (s + j as f64 + 2.0);
    }
    v
}

impl LegendreExpansion {
    /// Converts normalized Legendre moments `(2n+1) <f, P_n>` into basis
    /// coefficients.
    fn from_legendre(
        basis: &BoubakerBasis,
        weights: impl IntoIterator<Item = f64>,
    ) -> Result<Vector, ProjectionError> {
        let mut mono = vec![0.0; basis.len()];
        for (n, w) in weights.into_iter().enumerate() {
            if w == 0.0 {
                continue;
            }
            for (k, c) in shifted_legendre_coeffs(n).into_iter().enumerate() {
                mono[k] += w * c;
            }
        }
        Ok(basis.from_monomial(&mono)?)
    }
}

impl ProjectionScheme for LegendreExpansion {
    fn name(&self) -> &'static str {
        "legendre"
    }

    fn description(&self) -> &'static str {
        "factored Q^-1 = M^-T H^-1 M^-1 via the shifted Legendre expansion"
    }

    fn project_power(
        &self,
        basis: &BoubakerBasis,
        exponent: f64,
    ) -> Result<Vector, ProjectionError> {
        check_exponent(exponent)?;
        Self::from_legendre(
            basis,
            (0..basis.len()).map(|n| (2 * n + 1) as f64 * legendre_power_moment(exponent, n)),
        )
    }

    fn project_sampled(
        &self,
        basis: &BoubakerBasis,
        rule: &QuadratureRule,
        samples: &[f64],
    ) -> Result<Vector, ProjectionError> {
        check_samples(rule, samples)?;
        let len = basis.len();
        let mut moments = vec![0.0; len];
        for ((&x, &w), &f) in rule.nodes().iter().zip(rule.weights()).zip(samples) {
            let t = 2.0 * x - 1.0;
            let (mut p_prev, mut p) = (0.0, 1.0);
            for (n, m) in moments.iter_mut().enumerate() {
                *m += w * f * p;
                let nf = n as f64;
                let next = ((2.0 * nf + 1.0) * t * p - nf * p_prev) / (nf + 1.0);
                p_prev = p;
                p = next;
            }
        }
        Self::from_legendre(
            basis,
            moments
                .into_iter()
                .enumerate()
                .map(|(n, m)| (2 * n + 1) as f64 * m),
        )
    }
}

/// Name-indexed collection of projection schemes.
#[derive(Clone, Default)]
pub struct ProjectionRegistry {
    schemes: BTreeMap<&'static str, Arc<dyn ProjectionScheme>>,
}

impl ProjectionRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registry holding `gram-lu` and `legendre`.
    pub fn with_defaults() -> Self {
        let mut registry = Self::new();
        registry.register(Arc::new(GramLu));
        registry.register(Arc::new(LegendreExpansion));
        registry
    }

    /// Adds a scheme, replacing any previous one with the same name.
    pub fn register(&mut self, scheme: Arc<dyn ProjectionScheme>) {
        self.schemes.insert(scheme.name(), scheme);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn ProjectionScheme>, ProjectionError> {
        self.schemes
            .get(name)
            .cloned()
            .ok_or_else(|| ProjectionError::UnknownScheme {
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.schemes.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn ProjectionScheme>> {
        self.schemes.values()
    }
}

impl fmt::Debug for ProjectionRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.schemes.keys()).finish()
    }
}

pub fn default_scheme() -> Arc<dyn ProjectionScheme> {
    Arc::new(LegendreExpansion)
}
