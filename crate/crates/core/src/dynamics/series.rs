use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{inner, vec_norm, ComplexMatrix};

/// Which quantity a [`FidelitySeries`] reports in `values`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `|⟨Φ(0)|Φ(t)⟩|² / ‖Φ(t)‖²`.
    #[default]
    Normalized,
    /// `|⟨Φ(0)|Φ(t)⟩|²` as written, without dividing by the evolved norm.
    Raw,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FidelitySeries {
    pub times: Vec<f64>,
    /// Fidelity under `policy`.
    pub values: Vec<f64>,
    /// The unnormalized fidelity, recorded whatever the policy. May overflow
    /// to infinity under strong non-Hermitian growth.
    pub raw: Vec<f64>,
    /// `ln ‖Φ(t)‖`.
    pub log_norm: Vec<f64>,
    pub policy: Normalization,
}

impl FidelitySeries {
    pub(crate) fn from_blocks(
        times: Vec<f64>,
        blocks: &[Vec<BlockSample>],
        policy: Normalization,
    ) -> Self {
        let len = times.len();
        let mut normalized = vec![1.0; len];
        let mut log_norm = vec![0.0; len];
        for b in blocks {
            for (i, s) in b.iter().enumerate() {
                normalized[i] *= s.overlap.norm_sqr();
                log_norm[i] += s.log_norm;
            }
        }
        let raw: Vec<f64> = normalized
            .iter()
            .zip(&log_norm)
            .map(|(f, l)| f * (2.0 * l).exp())
            .collect();
        let values = match policy {
            Normalization::Normalized => normalized,
            Normalization::Raw => raw.clone(),
        };
        Self {
            times,
            values,
            raw,
            log_norm,
            policy,
        }
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Largest `|F − 1|` over the series.
    pub fn max_deviation_from_one(&self) -> f64 {
        self.values.iter().map(|v| (v - 1.0).abs()).fold(0.0, f64::max)
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Two-column CSV `t,fidelity` (plus `raw` and `log_norm`).
    pub fn to_csv(&self) -> String {
        let mut s = String::from("t,fidelity,raw,log_norm\n");
        for i in 0..self.len() {
            s.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                self.times[i], self.values[i], self.raw[i], self.log_norm[i]
            ));
        }
        s
    }
}

/// One block at one time: overlap of the initial block state with the
/// normalized evolved state, and the accumulated log of its norm.
#[derive(Clone, Copy, Debug)]
pub(crate) struct BlockSample {
    pub overlap: Complex64,
    pub log_norm: f64,
}

/// Steps one block state through `times`, renormalizing after each step.
/// `propagator(t0, dt)` returns the map from `t0` to `t0 + dt`.
pub(crate) fn evolve_block(
    initial: &[Complex64],
    times: &[f64],
    mut propagator: impl FnMut(f64, f64) -> Result<ComplexMatrix>,
) -> Result<Vec<BlockSample>> {
    let mut out = Vec::with_capacity(times.len());
    let mut state = initial.to_vec();
    let mut log_norm = 0.0;
    let n0 = vec_norm(initial);
    let mut prev = match times.first() {
        Some(&t) => t,
        None => return Ok(out),
    };
    out.push(BlockSample {
        overlap: Complex64::new(n0 * n0, 0.0),
        log_norm: 0.0,
    });
    for &t in &times[1..] {
        let dt = t - prev;
        if dt != 0.0 {
            let u = propagator(prev, dt)?;
            state = u.apply(&state);
            let n = vec_norm(&state);
            if !n.is_finite() || n == 0.0 {
                return Err(Error::NonFiniteEvolution { time: t });
            }
            state.iter_mut().for_each(|z| *z /= n);
            log_norm += n.ln();
        }
        out.push(BlockSample {
            overlap: inner(initial, &state),
            log_norm,
        });
        prev = t;
    }
    Ok(out)
}

pub(crate) fn check_times(times: &[f64]) -> Result<()> {
    if times.is_empty() {
        return Err(Error::EmptySeries);
    }
    if times[0] != 0.0 {
        return Err(Error::InvalidParameter("time grid must start at t = 0".into()));
    }
    if times.windows(2).any(|w| !(w[1] >= w[0])) || times.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidParameter(
            "time grid must be finite and non-decreasing".into(),
        ));
    }
    Ok(())
}

/// Uniform grid `t_i = i·t_max/steps`, `i = 0..=steps`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    pub t_max: f64,
    pub steps: usize,
}

impl TimeGrid {
    pub fn new(t_max: f64, steps: usize) -> Result<Self> {
        if !(t_max > 0.0 && t_max.is_finite()) || steps == 0 {
            return Err(Error::InvalidParameter(format!(
                "time grid needs t_max > 0 and at least one step (got {t_max}, {steps})"
            )));
        }
        Ok(Self { t_max, steps })
    }

    pub fn times(&self) -> Vec<f64> {
        let h = self.t_max / self.steps as f64;
        (0..=self.steps).map(|i| i as f64 * h).collect()
    }
}

/// First grid time with `F < threshold`, linearly interpolated from the
/// previous point. `None` when the series never crosses.
pub fn detect_drop(series: &FidelitySeries, threshold: f64) -> Result<Option<f64>> {
    drop_time(&series.times, &series.values, threshold)
}

pub(crate) fn drop_time(times: &[f64], values: &[f64], threshold: f64) -> Result<Option<f64>> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "drop threshold must lie in (0, 1) (got {threshold})"
        )));
    }
    if times.is_empty() {
        return Err(Error::EmptySeries);
    }
    for i in 0..values.len() {
        if values[i] < threshold {
            if i == 0 {
                return Ok(Some(times[0]));
            }
            let (v0, v1) = (values[i - 1], values[i]);
            let frac = (v0 - threshold) / (v0 - v1);
            return Ok(Some(times[i - 1] + frac * (times[i] - times[i - 1])));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(times: &[f64], values: &[f64]) -> FidelitySeries {
        FidelitySeries {
            times: times.to_vec(),
            values: values.to_vec(),
            raw: values.to_vec(),
            log_norm: vec![0.0; times.len()],
            policy: Normalization::Normalized,
        }
    }

    #[test]
    fn drop_interpolates() {
        let s = series(&[0.0, 1.0, 2.0], &[1.0, 1.0, 0.0]);
        assert_eq!(detect_drop(&s, 0.5).unwrap(), Some(1.5));
        let flat = series(&[0.0, 1.0, 2.0], &[1.0; 3]);
        assert_eq!(detect_drop(&flat, 0.5).unwrap(), None);
    }

    #[test]
    fn drop_guards() {
        let s = series(&[], &[]);
        assert_eq!(detect_drop(&s, 0.5).unwrap_err(), Error::EmptySeries);
        let s = series(&[0.0], &[1.0]);
        assert!(detect_drop(&s, 1.0).is_err());
        assert!(detect_drop(&s, 0.0).is_err());
    }

    #[test]
    fn grid_and_checks() {
        let g = TimeGrid::new(2.0, 4).unwrap();
        assert_eq!(g.times(), vec![0.0, 0.5, 1.0, 1.5, 2.0]);
        assert!(TimeGrid::new(0.0, 4).is_err());
        assert!(check_times(&[0.0, 1.0, 0.5]).is_err());
        assert!(check_times(&[0.1, 1.0]).is_err());
    }

    #[test]
    fn growth_is_tracked_in_log_norm() {
        let h = ComplexMatrix::from_diag(&[Complex64::new(0.0, 0.5)]);
        let v0 = [Complex64::new(1.0, 0.0)];
        let times = [0.0, 1.0, 2.0];
        let b = evolve_block(&v0, &times, |_, dt| crate::numerics::expm(&h.scale(Complex64::new(0.0, -dt)))).unwrap();
        // e^{-i(0.5i)t} = e^{0.5t}
        assert!((b[2].log_norm - 1.0).abs() < 1e-14);
        let s = FidelitySeries::from_blocks(times.to_vec(), &[b], Normalization::Normalized);
        assert!(s.max_deviation_from_one() < 1e-14);
        assert!((s.raw[2] - 1f64.exp().powi(2)).abs() < 1e-12);
    }
}
