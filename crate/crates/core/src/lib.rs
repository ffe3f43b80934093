//! # boubaker
//!
//! Spectral collocation for singular fractional Emden-Fowler initial value
//! problems
//!
//! ```text
//! D^{2a} u + (lambda / x^a) D^a u + s(x) g(u) = h(x),   0 < x < 1,
//! u(0) = a0,  D^a u(0) = b0,                          1/2 < a <= 1,
//! ```
//!
//! using Boubaker polynomials as the trial basis and a Caputo operational
//! matrix `D = M Z P` acting on coefficient vectors.
//!
//! ## Layout
//!
//! - [`polybasis`]: Boubaker polynomials, the basis-to-monomial matrix `M`.
//! - [`linalg`]: Hilbert and Gram matrices, LU solves, conditioning.
//! - [`fraccalc`]: Gamma function, exact Caputo derivatives, operational matrices.
//! - [`projection`]: interchangeable L2-projection schemes, looked up by name.
//! - [`approx`]: Gauss-Legendre quadrature, function projection, error norms.
//! - [`expr`]: the small expression language used by problem definitions.
//! - [`solver`]: collocation assembly and the damped Newton solve.
//!
//! ## Example
//!
//! ```
//! use boubaker::expr::Expression;
//! use boubaker::solver::{solve, EmdenFowlerProblem, SolveOptions};
//!
//! // u'' + (2/x) u' + 1 = 0, u(0) = 1, u'(0) = 0  =>  u = 1 - x^2/6
//! let problem = EmdenFowlerProblem::builder(1.0, 2.0)
//!     .s("1").g("1").h("0")
//!     .initial_values(1.0, 0.0)
//!     .build()
//!     .unwrap();
//! let report = solve(&problem, 2, &SolveOptions::default()).unwrap();
//! assert!((report.coefficients[0] - 4.0 / 3.0).abs() < 1e-12);
//! assert!((report.coefficients[2] + 1.0 / 6.0).abs() < 1e-12);
//! ```

pub mod approx;
pub mod error;
pub mod expr;
pub mod fraccalc;
pub mod linalg;
pub mod polybasis;
pub mod projection;
pub mod solver;

pub use error::{Error, Result};
pub use fraccalc::{build_d, OperationalMatrix};
pub use polybasis::{BoubakerBasis, Polynomial};
pub use projection::{ProjectionRegistry, ProjectionScheme};
