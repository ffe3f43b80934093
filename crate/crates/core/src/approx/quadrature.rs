use std::f64::consts::PI;

/// Nodes and positive weights on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

pub const MAX_POINTS: usize = 256;

impl QuadratureRule {
    /// `n`-point Gauss-Legendre rule mapped to `[0, 1]`, exact for
    /// polynomials of degree `2n - 1`.
    ///
    /// Nodes come from Newton iteration on `P_n`, started from the
    /// Tricomi-type estimate `cos(pi (i - 1/4) / (n + 1/2))`.
    ///
    /// # Panics
    ///
    /// If `n` is zero or above [`MAX_POINTS`].
    pub fn gauss_legendre(n: usize) -> Self {
        assert!((1..=MAX_POINTS).contains(&n), "rule size {n} out of range");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..(n + 1) / 2 {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // x is the i-th largest root; its mirror is -x
            nodes[n - 1 - i] = 0.5 * (1.0 + x);
            nodes[i] = 0.5 * (1.0 - x);
            weights[n - 1 - i] = 0.5 * w;
            weights[i] = 0.5 * w;
        }
        Self { nodes, weights }
    }

    /// Gauss-Legendre rule under the substitution `x = t^power`, which
    /// smooths integrands with a power-type singularity at `x = 0`.
    pub fn graded(n: usize, power: u32) -> Self {
        let base = Self::gauss_legendre(n);
        let p = power as f64;
        let nodes = base.nodes.iter().map(|t| t.powi(power as i32)).collect();
        let weights = base
            .nodes
            .iter()
            .zip(&base.weights)
            .map(|(t, w)| w * p * t.powi(power as i32 - 1))
            .collect();
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}
