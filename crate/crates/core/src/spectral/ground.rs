//! Ground state and ground energy of the periodic chain at `μ = 0`.

use num_complex::Complex64;
use rayon::prelude::*;

use super::modes::{energy_unchecked, mode_basis, BandIndex};
use crate::error::{Error, Result};
use crate::model::{
    boundary_space, fourier_creators, kspace_labels, momentum_grid, FockSpace, FockVector,
    ModelParams, Op, Term, MAX_FOCK_MODES,
};
use crate::numerics::fix_phase;

const LOWER: [BandIndex; 2] = [BandIndex::ALL[2], BandIndex::ALL[3]];

fn sign(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// Lowest level of `H₀ + H_π` at `μ = 0`.
pub fn boundary_ground_energy(p: &ModelParams) -> f64 {
    -(2.0 * p.j.abs() + p.pair_sum().abs())
}

/// `½(1 − s_S α†_π β†_π)(α†₀ − s_J β†₀)|0⟩` with `s_x = sgn(x)`, the lowest
/// state of `H₀ + H_π` at `μ = 0`.
pub fn boundary_ground_state(p: &ModelParams) -> FockVector {
    let space = boundary_space();
    let (sj, ss) = (sign(p.j), sign(p.pair_sum()));
    // modes: 0 = α₀, 1 = β₀, 2 = α_π, 3 = β_π
    let zero_part = [
        Term::real(0.5, vec![Op::Create(0)]),
        Term::real(-0.5 * sj, vec![Op::Create(1)]),
    ];
    let pi_part = [
        Term::real(1.0, vec![]),
        Term::real(-ss, vec![Op::Create(2), Op::Create(3)]),
    ];
    let vac = space.vacuum().amplitudes;
    let v = space.apply(&zero_part, &vac).expect("boundary modes");
    let mut v = space.apply(&pi_part, &v).expect("boundary modes");
    fix_phase(&mut v);
    FockVector::new(space, v).expect("sixteen amplitudes")
}

/// `Ā_{−+} Ā_{−−} |Vac⟩` for one pair momentum.
pub fn pair_ground_state(p: &ModelParams, k: f64) -> Result<FockVector> {
    mode_basis(p, k)?.pair_state(LOWER[0], LOWER[1])
}

/// `E_g = 2 Σ_{k∈(0,π)} Re ε_{−+}(k) − (2|J| + |Δa+Δb|)`.
pub fn ground_energy(p: &ModelParams) -> Result<f64> {
    p.validate()?;
    if p.mu != 0.0 {
        return Err(Error::NonzeroMu(p.mu));
    }
    let grid = momentum_grid(p.n)?;
    let bulk: f64 = grid
        .pairs
        .iter()
        .map(|&k| 2.0 * energy_unchecked(p, k, LOWER[0]).re)
        .sum();
    Ok(bulk + boundary_ground_energy(p))
}

#[derive(Clone, Debug)]
pub struct GroundState {
    pub params: ModelParams,
    pub boundary_vector: FockVector,
    /// `(k, state)` in ascending `k`.
    pub pair_vectors: Vec<(f64, FockVector)>,
    pub energy: Complex64,
}

pub fn ground_state(p: &ModelParams) -> Result<GroundState> {
    let energy = ground_energy(p)?;
    let grid = momentum_grid(p.n)?;
    let pair_vectors = grid
        .pairs
        .par_iter()
        .map(|&k| pair_ground_state(p, k).map(|v| (k, v)))
        .collect::<Result<Vec<_>>>()?;
    let imag: Complex64 = grid
        .pairs
        .iter()
        .map(|&k| LOWER.iter().map(|&b| energy_unchecked(p, k, b)).sum::<Complex64>())
        .sum();
    Ok(GroundState {
        params: *p,
        boundary_vector: boundary_ground_state(p),
        pair_vectors,
        energy: Complex64::new(energy, imag.im),
    })
}

impl GroundState {
    /// Block vectors in global order: boundary first, then pairs by `k`.
    pub fn blocks(&self) -> Vec<&FockVector> {
        std::iter::once(&self.boundary_vector)
            .chain(self.pair_vectors.iter().map(|(_, v)| v))
            .collect()
    }

    /// `|⟨self_b|other_b⟩|` for every block.
    pub fn block_overlaps(&self, other: &GroundState) -> Result<Vec<f64>> {
        if self.pair_vectors.len() != other.pair_vectors.len() {
            return Err(Error::DimensionMismatch(
                "ground states of chains with different N".into(),
            ));
        }
        self.blocks()
            .iter()
            .zip(other.blocks())
            .map(|(a, b)| a.overlap(b).map(|z| z.norm()))
            .collect()
    }

    /// The product state on all `2N` momentum modes (boundary block in the
    /// lowest bits).
    pub fn to_kspace(&self) -> Result<FockVector> {
        let labels = kspace_labels(self.params.n)?;
        let space = FockSpace::new(labels)?;
        let mut amps = self.boundary_vector.amplitudes.clone();
        for (_, v) in &self.pair_vectors {
            let mut next = Vec::with_capacity(amps.len() * v.amplitudes.len());
            for &hi in &v.amplitudes {
                next.extend(amps.iter().map(|&lo| lo * hi));
            }
            amps = next;
        }
        FockVector::new(space, amps)
    }

    /// The state in the real-space occupation basis of the `2N`-site chain.
    pub fn to_real_space(&self) -> Result<FockVector> {
        let sites = self.params.sites();
        if sites > MAX_FOCK_MODES {
            return Err(Error::FockTooLarge {
                modes: sites,
                limit: MAX_FOCK_MODES,
            });
        }
        let k = self.to_kspace()?;
        k.transform(&FockSpace::chain(sites)?, &fourier_creators(self.params.n)?)
    }
}
