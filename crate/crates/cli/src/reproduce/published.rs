//! Reference values as printed in the original tables, transcribed verbatim
//! (4 to 5 significant digits). Every cell carries the same provenance tag.

pub const PROVENANCE: &str = "published";

/// Grid of the absolute-error tables for Examples 1 and 2.
pub const ODD_GRID: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

/// Example 1 (`g(u) = u`), absolute error against `sin(x)/x`, rows `N = 3, 6`.
pub const TABLE1: [(usize, [f64; 5]); 2] = [
    (3, [3.6881e-5, 1.5070e-4, 7.9560e-5, 1.9380e-4, 3.9614e-4]),
    (6, [3.3891e-8, 3.0512e-7, 8.4791e-8, 1.6714e-7, 2.9611e-7]),
];

/// Example 2 at `N = 2`, absolute error against `3 + x^(2 alpha)`.
pub const TABLE2_DEGREE: usize = 2;
pub const TABLE2: [(f64, [f64; 5]); 3] = [
    (1.0, [0.0, 0.0, 0.0, 0.0, 0.0]),
    (0.85, [6.7607e-2, 1.0759e-2, 8.3712e-3, 6.9827e-3, 1.1870e-3]),
    (0.75, [9.7032e-2, 1.0264e-2, 5.1643e-3, 4.9891e-3, 1.9924e-3]),
];

/// Example 4 coefficient vectors at `N = 4`.
pub const UNKNOWNS_DEGREE: usize = 4;
pub const UNKNOWNS: [(f64, [f64; 5]); 3] = [
    (0.7, [-2.2706, 0.57555, 1.6168, -7.5937e-2, 1.8568e-2]),
    (0.8, [-2.2895, 7.9481e-2, 1.6352, 0.14592, 9.5450e-3]),
    (1.0, [-1.0004, -0.99965, 1.0002, 0.99965, 2.2216e-5]),
];

/// Example 4 absolute errors on `x = 0.1, ..., 1.0`; the caption says
/// `N = 5`, the surrounding text `N = 4`.
pub const TABLE3_ALPHAS: [f64; 3] = [0.7, 0.8, 1.0];
pub const TABLE3: [[f64; 3]; 10] = [
    [5.5839e-2, 2.8251e-2, 3.8348e-5],
    [4.9238e-2, 2.3678e-2, 3.4764e-5],
    [4.5776e-2, 2.0665e-2, 3.1270e-5],
    [4.3242e-2, 1.8550e-2, 2.9831e-5],
    [4.0654e-2, 1.7195e-2, 3.2362e-5],
    [3.7510e-2, 1.6605e-2, 4.0721e-5],
    [3.3528e-2, 1.6810e-2, 5.6716e-5],
    [2.8539e-2, 1.7824e-2, 8.2100e-5],
    [2.2428e-2, 1.9619e-2, 1.1857e-4],
    [1.5099e-2, 2.2125e-2, 1.6778e-4],
];

/// `D^(0.7)` at `N = 4`.
pub const D07: [[f64; 5]; 5] = [
    [0.0, 0.0, 0.0, 0.0, 0.0],
    [7.5067, -5.1084, -7.0969, 8.2458, -3.4888],
    [-0.75854, -2.489, -1.8287, 4.1182, -2.1815],
    [3.8518, -5.5229, -5.0826, 8.4712, -3.3057],
    [1.8646, -2.3313, -0.31872, 2.3752, 0.61468],
];

/// Integer-order matrices: `(alpha, N, rows)`.
pub const D1_N2: [[f64; 3]; 3] = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 2.0, 0.0]];
pub const D2_N2: [[f64; 3]; 3] = [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [2.0, 0.0, 0.0]];
pub const D1_N3: [[f64; 4]; 4] = [
    [0.0, 0.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 2.0, 0.0, 0.0],
    [-5.0, 0.0, 3.0, 0.0],
];
pub const D2_N3: [[f64; 4]; 4] = [
    [0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0],
    [2.0, 0.0, 0.0, 0.0],
    [0.0, 6.0, 0.0, 0.0],
];
pub const D1_N4: [[f64; 5]; 5] = [
    [0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 2.0, 0.0, 0.0, 0.0],
    [-5.0, 0.0, 3.0, 0.0, 0.0],
    [0.0, -4.0, 0.0, 4.0, 0.0],
];
pub const D2_N4: [[f64; 5]; 5] = [
    [0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.0],
    [2.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 6.0, 0.0, 0.0, 0.0],
    [-24.0, 0.0, 12.0, 0.0, 0.0],
];

/// Example 1 (`g(u) = u`, `N = 3`) linear system rows at `x = 3/4, 1/4`.
pub const EXAMPLE1_SYSTEM: [[f64; 4]; 2] = [
    [1.0, 41.0 / 12.0, 137.0 / 16.0, 2465.0 / 192.0],
    [1.0, 33.0 / 4.0, 129.0 / 16.0, 721.0 / 64.0],
];
pub const EXAMPLE1_COEFFS: [f64; 4] = [
    25673.0 / 19113.0,
    -256.0 / 19113.0,
    -3280.0 / 19113.0,
    256.0 / 19113.0,
];
