use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::series::{
    check_times, drop_time, evolve_block, BlockSample, FidelitySeries, Normalization, TimeGrid,
};
use crate::error::{Error, Result};
use crate::model::{
    boundary_hamiltonian, fock_hamiltonian, momentum_grid, pair_hamiltonian, Boundary, ModelParams,
    MAX_FOCK_MODES,
};
use crate::numerics::{eig_complex, expm, inner, vec_norm, ComplexMatrix, EigenDecomposition};
use crate::spectral::ground_state;

/// Default threshold for [`detect_drop`](super::detect_drop) and scans.
pub const DEFAULT_DROP_THRESHOLD: f64 = 0.5;

/// Block Hamiltonians in ground-state block order: the boundary space, then
/// each pair momentum in ascending order.
pub fn block_hamiltonians(p: &ModelParams) -> Result<Vec<ComplexMatrix>> {
    let grid = momentum_grid(p.n)?;
    let mut out = vec![boundary_hamiltonian(p)];
    for &k in &grid.pairs {
        out.push(pair_hamiltonian(p, k)?);
    }
    Ok(out)
}

pub(crate) fn block_hamiltonian(p: &ModelParams, block: usize, pairs: &[f64]) -> Result<ComplexMatrix> {
    if block == 0 {
        Ok(boundary_hamiltonian(p))
    } else {
        pair_hamiltonian(p, pairs[block - 1])
    }
}

/// `e^{−iHτ}`, reusing the last result while `τ` repeats.
pub(crate) struct PropagatorCache<'a> {
    h: &'a ComplexMatrix,
    last: Option<(f64, ComplexMatrix)>,
}

impl<'a> PropagatorCache<'a> {
    pub(crate) fn new(h: &'a ComplexMatrix) -> Self {
        Self { h, last: None }
    }

    pub(crate) fn get(&mut self, dt: f64) -> Result<ComplexMatrix> {
        if let Some((tau, u)) = &self.last {
            if (tau - dt).abs() <= 1e-14 * dt.abs() {
                return Ok(u.clone());
            }
        }
        let u = expm(&self.h.scale(Complex64::new(0.0, -dt)))?;
        self.last = Some((dt, u.clone()));
        Ok(u)
    }
}

/// Expansion coefficients `|cᵢ| < COEFFICIENT_FLOOR·‖wᵢ‖` are below what the
/// eigensolver resolves and are dropped. Kept, they would be amplified by
/// `e^{Im λᵢ t}` along growing modes and swamp the evolution.
pub const COEFFICIENT_FLOOR: f64 = 1e-12;

/// Eigenbases with a condition number above this fall back to stepping.
pub const SPECTRAL_ROUTE_MAX_CONDITION: f64 = 1e8;

/// `Σᵢ cᵢ e^{−iλᵢt} vᵢ` with `cᵢ = wᵢ†φ₀`, rescaled to unit norm at each time.
fn spectral_block(evd: &EigenDecomposition, initial: &[Complex64], times: &[f64]) -> Result<Vec<BlockSample>> {
    let n = evd.values.len();
    let kept: Vec<(usize, Complex64)> = (0..n)
        .filter_map(|i| {
            let w = evd.left_vectors.column(i);
            let c = inner(&w, initial);
            (c.norm() >= COEFFICIENT_FLOOR * vec_norm(&w)).then_some((i, c))
        })
        .collect();
    let mut out = Vec::with_capacity(times.len());
    for &t in times {
        if t == 0.0 {
            let n0 = vec_norm(initial);
            out.push(BlockSample {
                overlap: Complex64::new(n0 * n0, 0.0),
                log_norm: 0.0,
            });
            continue;
        }
        // log-magnitude of each term, to factor out the largest before exponentiating
        let logs: Vec<f64> = kept
            .iter()
            .map(|&(i, c)| c.norm().ln() + evd.values[i].im * t)
            .collect();
        let m = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mut state = vec![Complex64::new(0.0, 0.0); n];
        for &(i, c) in &kept {
            let a = c * (Complex64::new(0.0, -t) * evd.values[i] - m).exp();
            for (s, r) in state.iter_mut().zip(0..n) {
                *s += a * evd.right_vectors[(r, i)];
            }
        }
        let norm = vec_norm(&state);
        if !norm.is_finite() || norm == 0.0 || !m.is_finite() {
            return Err(Error::NonFiniteEvolution { time: t });
        }
        state.iter_mut().for_each(|z| *z /= norm);
        out.push(BlockSample {
            overlap: inner(initial, &state),
            log_norm: m + norm.ln(),
        });
    }
    Ok(out)
}

fn static_block(h: &ComplexMatrix, initial: &[Complex64], times: &[f64]) -> Result<Vec<BlockSample>> {
    if let Ok(evd) = eig_complex(h) {
        if !evd.defective && evd.max_condition <= SPECTRAL_ROUTE_MAX_CONDITION {
            return spectral_block(&evd, initial, times);
        }
    }
    let mut cache = PropagatorCache::new(h);
    evolve_block(initial, times, |_, dt| cache.get(dt))
}

/// Fidelity of the `pre` ground state evolved under the static `pos`
/// Hamiltonian, block by block in each block's eigenbasis.
pub fn evolve_quench(
    pre: &ModelParams,
    pos: &ModelParams,
    times: &[f64],
    policy: Normalization,
) -> Result<FidelitySeries> {
    if pre.n != pos.n {
        return Err(Error::DimensionMismatch(format!(
            "pre-quench N = {} but post-quench N = {}",
            pre.n, pos.n
        )));
    }
    pos.validate()?;
    check_times(times)?;
    let g = ground_state(pre)?;
    let hs = block_hamiltonians(pos)?;
    let initial = g.blocks();
    let samples = hs
        .par_iter()
        .zip(initial.par_iter())
        .map(|(h, v)| static_block(h, &v.amplitudes, times))
        .collect::<Result<Vec<_>>>()?;
    Ok(FidelitySeries::from_blocks(times.to_vec(), &samples, policy))
}

/// Brute-force counterpart of [`evolve_quench`] on the full `2^{2N}` chain
/// space with periodic boundaries, by repeated dense propagators.
pub fn fock_quench_fidelity(
    pre: &ModelParams,
    pos: &ModelParams,
    times: &[f64],
    policy: Normalization,
) -> Result<FidelitySeries> {
    if pre.n != pos.n {
        return Err(Error::DimensionMismatch(format!(
            "pre-quench N = {} but post-quench N = {}",
            pre.n, pos.n
        )));
    }
    if pre.sites() > MAX_FOCK_MODES {
        return Err(Error::FockTooLarge {
            modes: pre.sites(),
            limit: MAX_FOCK_MODES,
        });
    }
    check_times(times)?;
    let psi = ground_state(pre)?.to_real_space()?;
    let h = fock_hamiltonian(pos, Boundary::Periodic)?;
    let mut cache = PropagatorCache::new(&h);
    let samples = evolve_block(&psi.amplitudes, times, |_, dt| cache.get(dt))?;
    Ok(FidelitySeries::from_blocks(times.to_vec(), &[samples], policy))
}

/// One-parameter quench families for 2D scans. In every family the
/// pre-quench Hamiltonian has `μ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum QuenchFamily {
    /// Scan over the post-quench `μ` at fixed pairing strengths.
    Mu { j: f64, delta_a: f64, delta_b: f64, n: usize },
    /// Scan over `Δa/Δb` at fixed `Δa+Δb = sum` and post-quench `μ`.
    Ratio { j: f64, sum: f64, mu: f64, n: usize },
}

impl QuenchFamily {
    pub fn parameter_name(&self) -> &'static str {
        match self {
            QuenchFamily::Mu { .. } => "mu",
            QuenchFamily::Ratio { .. } => "ratio",
        }
    }

    /// `(pre, pos)` at scan parameter `x`.
    pub fn pair(&self, x: f64) -> Result<(ModelParams, ModelParams)> {
        match *self {
            QuenchFamily::Mu { j, delta_a, delta_b, n } => {
                let pre = ModelParams::new(j, delta_a, delta_b, 0.0, n)?;
                let pos = ModelParams::new(j, delta_a, delta_b, x, n)?;
                Ok((pre, pos))
            }
            QuenchFamily::Ratio { j, sum, mu, n } => {
                if !(x.is_finite() && (1.0 + x).abs() > 1e-12) {
                    return Err(Error::InvalidParameter(format!("ratio {x} leaves Δa+Δb undefined")));
                }
                let b = sum / (1.0 + x);
                let pre = ModelParams::new(j, x * b, b, 0.0, n)?;
                Ok((pre, pre.with_mu(mu)))
            }
        }
    }
}

/// Fidelity over a time × parameter grid. `values[i][c]` is time `i`,
/// parameter column `c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub family: QuenchFamily,
    pub times: Vec<f64>,
    pub parameters: Vec<f64>,
    pub values: Vec<Vec<f64>>,
    pub drop_times: Vec<Option<f64>>,
    /// Error message for columns whose evolution failed; their values are NaN.
    pub failures: Vec<Option<String>>,
    pub threshold: f64,
    pub policy: Normalization,
}

impl ScanResult {
    pub fn column(&self, c: usize) -> Vec<f64> {
        self.values.iter().map(|row| row[c]).collect()
    }

    /// Header `t,<parameters…>`, one row per time.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("t");
        for p in &self.parameters {
            s.push_str(&format!(",{p:.16e}"));
        }
        s.push('\n');
        for (t, row) in self.times.iter().zip(&self.values) {
            s.push_str(&format!("{t:.16e}"));
            for v in row {
                s.push_str(&format!(",{v:.16e}"));
            }
            s.push('\n');
        }
        s
    }
}

/// Runs one quench per parameter in parallel. A failing column is marked in
/// `failures` rather than aborting the scan.
pub fn scan_quench(
    family: &QuenchFamily,
    grid: &TimeGrid,
    parameters: &[f64],
    threshold: f64,
    policy: Normalization,
) -> Result<ScanResult> {
    drop_time(&[0.0], &[1.0], threshold)?;
    let times = grid.times();
    let columns: Vec<Result<FidelitySeries>> = parameters
        .par_iter()
        .map(|&x| {
            let (pre, pos) = family.pair(x)?;
            evolve_quench(&pre, &pos, &times, policy)
        })
        .collect();
    let mut values = vec![vec![f64::NAN; parameters.len()]; times.len()];
    let mut drop_times = Vec::with_capacity(parameters.len());
    let mut failures = Vec::with_capacity(parameters.len());
    for (c, col) in columns.into_iter().enumerate() {
        match col {
            Ok(s) => {
                for (row, v) in values.iter_mut().zip(&s.values) {
                    row[c] = *v;
                }
                drop_times.push(drop_time(&s.times, &s.values, threshold)?);
                failures.push(None);
            }
            Err(e) => {
                drop_times.push(None);
                failures.push(Some(e.to_string()));
            }
        }
    }
    Ok(ScanResult {
        family: *family,
        times,
        parameters: parameters.to_vec(),
        values,
        drop_times,
        failures,
        threshold,
        policy,
    })
}
