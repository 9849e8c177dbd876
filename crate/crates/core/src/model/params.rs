use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One instance of the chain: hopping `J`, pair strengths `Δa`, `Δb`,
/// chemical potential `μ` and dimer count `N` (2N sites).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub j: f64,
    pub delta_a: f64,
    pub delta_b: f64,
    pub mu: f64,
    pub n: usize,
}

impl ModelParams {
    pub fn new(j: f64, delta_a: f64, delta_b: f64, mu: f64, n: usize) -> Result<Self> {
        let p = Self {
            j,
            delta_a,
            delta_b,
            mu,
            n,
        };
        p.validate()?;
        Ok(p)
    }

    /// Point on the fixed line `Δa + Δb = sum` with `Δa − Δb = imbalance`, at `μ = 0`.
    pub fn on_fixed_line(j: f64, sum: f64, imbalance: f64, n: usize) -> Result<Self> {
        Self::new(j, 0.5 * (sum + imbalance), 0.5 * (sum - imbalance), 0.0, n)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 || self.n % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "N must be even and at least 2 (got {})",
                self.n
            )));
        }
        for (name, v) in [
            ("J", self.j),
            ("delta_a", self.delta_a),
            ("delta_b", self.delta_b),
            ("mu", self.mu),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!("{name} must be finite")));
            }
        }
        Ok(())
    }

    /// `Δa + Δb`, the intercept of the fixed line through this point.
    pub fn pair_sum(&self) -> f64 {
        self.delta_a + self.delta_b
    }

    /// `Δa − Δb`, the non-Hermitian imbalance.
    pub fn imbalance(&self) -> f64 {
        self.delta_a - self.delta_b
    }

    pub fn sites(&self) -> usize {
        2 * self.n
    }

    pub fn with_mu(self, mu: f64) -> Self {
        Self { mu, ..self }
    }

    pub fn with_deltas(self, delta_a: f64, delta_b: f64) -> Self {
        Self {
            delta_a,
            delta_b,
            ..self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_odd_and_small_n() {
        assert!(ModelParams::new(1.0, 1.0, 1.0, 0.0, 7).is_err());
        assert!(ModelParams::new(1.0, 1.0, 1.0, 0.0, 0).is_err());
        assert!(ModelParams::new(1.0, 1.0, 1.0, 0.0, 2).is_ok());
    }

    #[test]
    fn rejects_non_finite() {
        assert!(ModelParams::new(f64::NAN, 1.0, 1.0, 0.0, 4).is_err());
        assert!(ModelParams::new(1.0, 1.0, f64::INFINITY, 0.0, 4).is_err());
    }

    #[test]
    fn fixed_line_point() {
        let p = ModelParams::on_fixed_line(1.0, 2.0, 1.0, 8).unwrap();
        assert_eq!((p.delta_a, p.delta_b), (1.5, 0.5));
        assert_eq!(p.pair_sum(), 2.0);
        assert_eq!(p.imbalance(), 1.0);
    }
}
