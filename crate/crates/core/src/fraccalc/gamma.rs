//! Gamma function via the Lanczos approximation (g = 7, 9 coefficients).

use std::f64::consts::PI;

use super::FracError;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Integers up to this value go through the exact factorial path.
const MAX_EXACT_FACTORIAL: f64 = 23.0;

/// `Gamma(z)` for `z > 0`.
///
/// Positive integers up to 23 return the exact factorial; `z < 1/2` uses the
/// reflection formula.
pub fn gamma(z: f64) -> Result<f64, FracError> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(FracError::GammaDomain(z));
    }
    if z.fract() == 0.0 && z <= MAX_EXACT_FACTORIAL {
        return Ok((2..z as u64).map(|k| k as f64).product());
    }
    Ok(lanczos(z))
}

fn lanczos(z: f64) -> f64 {
    if z < 0.5 {
        return PI / ((PI * z).sin() * lanczos(1.0 - z));
    }
    let z = z - 1.0;
    let series = LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, &c)| acc + c / (z + (i + 1) as f64));
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * series
}
