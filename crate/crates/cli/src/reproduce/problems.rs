//! The four worked examples.

use boubaker::solver::EmdenFowlerProblem;

fn build(b: boubaker::solver::ProblemBuilder) -> EmdenFowlerProblem {
    b.build().expect("built-in problem is valid")
}

/// `u'' + (2/x) u' + u^n = 0`, `u(0) = 1`, `u'(0) = 0`, for `n = 0` or `1`.
pub fn example1(n: u32) -> EmdenFowlerProblem {
    let (g, exact) = match n {
        0 => ("1", "1 - x^2/6"),
        _ => ("u", "sin(x)/x"),
    };
    build(
        EmdenFowlerProblem::builder(1.0, 2.0)
            .s("1")
            .g(g)
            .h("0")
            .exact(exact)
            .initial_values(1.0, 0.0),
    )
}

/// Exact solution `3 + x^(2 alpha)`.
pub fn example2(alpha: f64) -> EmdenFowlerProblem {
    build(
        EmdenFowlerProblem::builder(alpha, 1.0)
            .s("1 + x^alpha")
            .g("u")
            .h("gamma(1+2*alpha) + gamma(1+2*alpha)/gamma(1+alpha) + (1 + x^alpha)*(3 + x^(2*alpha))")
            .exact("3 + x^(2*alpha)")
            .initial_values(3.0, 0.0),
    )
}

/// `u'' + (2/x) u' - 2(2x^2 + 3) u = 0`, exact solution `exp(x^2)`.
pub fn example3() -> EmdenFowlerProblem {
    build(
        EmdenFowlerProblem::builder(1.0, 2.0)
            .s("-2*(2*x^2 + 3)")
            .g("u")
            .h("0")
            .exact("exp(x^2)")
            .initial_values(1.0, 0.0),
    )
}

/// Exact solution `1 + x^(2 alpha) + x^(3 alpha)`; `u(0) = 1`.
pub fn example4(alpha: f64) -> EmdenFowlerProblem {
    build(
        EmdenFowlerProblem::builder(alpha, 1.0)
            .s("-9")
            .g("u")
            .h("-9 + gamma(1+2*alpha)/gamma(1+alpha) + gamma(1+2*alpha) \
                + (gamma(1+3*alpha)/gamma(1+alpha) + gamma(1+3*alpha)/gamma(1+2*alpha))*x^alpha \
                - 9*x^(2*alpha) - 9*x^(3*alpha)")
            .exact("1 + x^(2*alpha) + x^(3*alpha)")
            .initial_values(1.0, 0.0),
    )
}

pub const EXAMPLE4_NOTE: &str = "Example 4 is solved with u(0) = 1: the stated condition u(0) = 2 \
contradicts both the exact solution 1 + x^(2a) + x^(3a) and the published coefficient table";
