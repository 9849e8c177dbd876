//! Complete elliptic integral of the second kind by the arithmetic-geometric mean.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// `E(k) = ∫₀^{π/2} √(1 − k² sin²θ) dθ` for modulus `k ∈ [0, 1]`.
pub fn elliptic_e(modulus: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&modulus) {
        return Err(Error::EllipticDomain(modulus));
    }
    let m = modulus * modulus;
    if m == 0.0 {
        return Ok(FRAC_PI_2);
    }
    if m == 1.0 {
        return Ok(1.0);
    }
    // E = K (1 - Σ 2^{n-1} c_n²), K = π / (2 AGM(1, √(1-m)))
    let mut a = 1.0f64;
    let mut b = (1.0 - m).sqrt();
    let mut weight = 0.5;
    let mut sum = weight * m;
    for _ in 0..64 {
        let c = 0.5 * (a - b);
        let next_a = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next_a;
        weight *= 2.0;
        sum += weight * c * c;
        if c.abs() <= f64::EPSILON * a {
            break;
        }
    }
    Ok(FRAC_PI_2 / a * (1.0 - sum))
}
