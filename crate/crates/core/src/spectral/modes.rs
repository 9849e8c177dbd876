//! Closed-form quasiparticle modes of one momentum pair `(k, −k)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{check_momentum, core_matrix, pair_space, FockVector, ModelParams, Op, Term};
use crate::numerics::{fix_phase, null_space, ComplexMatrix};

/// Branch labels `(ρ, σ)` of `ε_ρσ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandIndex {
    pub rho: i8,
    pub sigma: i8,
}

impl BandIndex {
    /// `(+,+), (+,−), (−,+), (−,−)`; this order indexes every per-band array.
    pub const ALL: [BandIndex; 4] = [
        BandIndex { rho: 1, sigma: 1 },
        BandIndex { rho: 1, sigma: -1 },
        BandIndex { rho: -1, sigma: 1 },
        BandIndex { rho: -1, sigma: -1 },
    ];

    pub fn new(rho: i8, sigma: i8) -> Result<Self> {
        if rho.abs() != 1 || sigma.abs() != 1 {
            return Err(Error::InvalidParameter(format!(
                "band signs must be ±1 (got rho={rho}, sigma={sigma})"
            )));
        }
        Ok(Self { rho, sigma })
    }

    pub fn index(self) -> usize {
        (if self.rho > 0 { 0 } else { 2 }) + (if self.sigma > 0 { 0 } else { 1 })
    }

    fn signs(self) -> (f64, f64) {
        (self.rho as f64, self.sigma as f64)
    }
}

fn require_zero_mu(p: &ModelParams) -> Result<()> {
    if p.mu != 0.0 {
        return Err(Error::NonzeroMu(p.mu));
    }
    Ok(())
}

/// `ε_ρσ(k) = ρ√((2J cos k/2)² + (Δa+Δb)² sin² k/2) + iσ(Δa−Δb) cos k/2`.
pub fn quasiparticle_energy(p: &ModelParams, k: f64, b: BandIndex) -> Result<Complex64> {
    require_zero_mu(p)?;
    check_momentum(k)?;
    Ok(energy_unchecked(p, k, b))
}

pub(crate) fn energy_unchecked(p: &ModelParams, k: f64, b: BandIndex) -> Complex64 {
    let (rho, sigma) = b.signs();
    let (s, c) = (0.5 * k).sin_cos();
    let re = ((2.0 * p.j * c).powi(2) + (p.pair_sum() * s).powi(2)).sqrt();
    Complex64::new(rho * re, sigma * p.imbalance() * c)
}

/// All four `ε_ρσ(k)` in [`BandIndex::ALL`] order.
pub fn band_energies(p: &ModelParams, k: f64) -> Result<[Complex64; 4]> {
    require_zero_mu(p)?;
    check_momentum(k)?;
    Ok(BandIndex::ALL.map(|b| energy_unchecked(p, k, b)))
}

/// Analytic mode operators of one momentum pair.
///
/// `A_ρσ = Σ_i coeffs_a[b][i] ψ_i` over `ψ = (α_k, β_k, α†_{−k}, β†_{−k})` and
/// `Ā_ρσ = Σ_i coeffs_abar[b][i] ψ†_i` over `ψ† = (α†_k, β†_k, α_{−k}, β_{−k})`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModeBasis {
    pub k: f64,
    pub theta: f64,
    pub omega: [f64; 4],
    pub coeffs_a: [[Complex64; 4]; 4],
    pub coeffs_abar: [[Complex64; 4]; 4],
}

/// `θ` from `tan θ = sin k (2J−S) / (2J+S+cos k (2J−S))`, `S = Δa+Δb`.
pub fn mode_angle(p: &ModelParams, k: f64) -> f64 {
    let s = p.pair_sum();
    let d = 2.0 * p.j - s;
    (k.sin() * d).atan2(2.0 * p.j + s + k.cos() * d)
}

fn raw_coefficients(theta: f64, k: f64, b: BandIndex) -> [Complex64; 4] {
    let (rho, sigma) = b.signs();
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    let e1 = Complex64::from_polar(1.0, theta - 0.5 * k);
    let e2 = Complex64::from_polar(1.0, theta - k);
    let e3 = Complex64::from_polar(1.0, -0.5 * k);
    [
        one + rho * sigma * i * e1,
        rho * e2 + sigma * i * e3,
        one - rho * sigma * i * e1,
        -rho * e2 + sigma * i * e3,
    ]
}

/// Largest `|uᵀ h_k − ε uᵀ| / |u|` over the four bands.
fn left_eigen_residual(h: &ComplexMatrix, energies: &[Complex64; 4], u: &[[Complex64; 4]; 4]) -> f64 {
    let mut worst = 0.0f64;
    for (row, e) in u.iter().zip(energies) {
        let norm: f64 = row.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for j in 0..4 {
            let lhs: Complex64 = (0..4).map(|i| row[i] * h[(i, j)]).sum();
            worst = worst.max((lhs - e * row[j]).norm() / norm);
        }
    }
    worst
}

pub fn mode_basis(p: &ModelParams, k: f64) -> Result<ModeBasis> {
    require_zero_mu(p)?;
    check_momentum(k)?;
    let theta = mode_angle(p, k);
    let raw = BandIndex::ALL.map(|b| raw_coefficients(theta, k, b));

    // {A, Ā} = Σ|u_i|²/Ω, so Ω is the squared coefficient norm
    let omega = raw.map(|u| u.iter().map(|z| z.norm_sqr()).sum::<f64>());
    if omega.iter().any(|w| !(w.is_finite() && *w > 1e-12)) {
        return Err(Error::ExceptionalPoint(format!("vanishing normalization at k = {k}")));
    }

    let energies = band_energies(p, k)?;
    let h = core_matrix(p, k)?;
    let scale = h.max_abs().max(1.0);
    let residual = left_eigen_residual(&h, &energies, &raw);
    if residual > 1e-9 * scale {
        return Err(Error::ExceptionalPoint(format!(
            "mode coefficients do not diagonalize h_k at k = {k} (residual {residual:.2e})"
        )));
    }

    let mut coeffs_a = raw;
    let mut coeffs_abar = raw;
    for (bi, w) in omega.iter().enumerate() {
        let inv = 1.0 / w.sqrt();
        for i in 0..4 {
            coeffs_a[bi][i] = raw[bi][i] * inv;
            coeffs_abar[bi][i] = raw[bi][i].conj() * inv;
        }
    }
    Ok(ModeBasis {
        k,
        theta,
        omega,
        coeffs_a,
        coeffs_abar,
    })
}

fn psi(i: usize) -> Op {
    if i < 2 {
        Op::Annihilate(i)
    } else {
        Op::Create(i)
    }
}

fn psi_dag(i: usize) -> Op {
    if i < 2 {
        Op::Create(i)
    } else {
        Op::Annihilate(i)
    }
}

impl ModeBasis {
    /// `A_ρσ` as a 16×16 matrix on the pair space.
    pub fn annihilator(&self, b: BandIndex) -> ComplexMatrix {
        let terms: Vec<Term> = (0..4)
            .map(|i| Term::new(self.coeffs_a[b.index()][i], vec![psi(i)]))
            .collect();
        pair_space().operator(&terms).expect("pair modes")
    }

    /// `Ā_ρσ` as a 16×16 matrix on the pair space.
    pub fn creator(&self, b: BandIndex) -> ComplexMatrix {
        let terms: Vec<Term> = (0..4)
            .map(|i| Term::new(self.coeffs_abar[b.index()][i], vec![psi_dag(i)]))
            .collect();
        pair_space().operator(&terms).expect("pair modes")
    }

    /// Largest deviation of `{A, Ā} = δ`, `{A, A} = 0`, `{Ā, Ā} = 0` from exactness.
    pub fn canonical_defect(&self) -> f64 {
        let a: Vec<ComplexMatrix> = BandIndex::ALL.iter().map(|&b| self.annihilator(b)).collect();
        let abar: Vec<ComplexMatrix> = BandIndex::ALL.iter().map(|&b| self.creator(b)).collect();
        let id = ComplexMatrix::identity(16);
        let mut worst = 0.0f64;
        for x in 0..4 {
            for y in 0..4 {
                let mut ac = a[x].anticommutator(&abar[y]);
                if x == y {
                    ac = &ac - &id;
                }
                worst = worst.max(ac.max_abs());
                worst = worst.max(a[x].anticommutator(&a[y]).max_abs());
                worst = worst.max(abar[x].anticommutator(&abar[y]).max_abs());
            }
        }
        worst
    }

    /// `Σ_ρσ ε_ρσ Ā_ρσ A_ρσ` on the pair space.
    pub fn diagonal_form(&self, energies: &[Complex64; 4]) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(16, 16);
        for &b in &BandIndex::ALL {
            let term = &self.creator(b) * &self.annihilator(b);
            out.add_scaled(energies[b.index()], &term);
        }
        out
    }

    /// The common kernel of the four `A_ρσ`, normalized and phase-fixed.
    pub fn vacuum_state(&self) -> Result<FockVector> {
        let mut stacked = Vec::with_capacity(64 * 16);
        for &b in &BandIndex::ALL {
            stacked.extend_from_slice(self.annihilator(b).as_slice());
        }
        let m = ComplexMatrix::from_row_major(64, 16, stacked)?;
        let kernel = null_space(&m, 1e-10)?;
        if kernel.len() != 1 {
            return Err(Error::ExceptionalPoint(format!(
                "vacuum kernel has dimension {} at k = {}",
                kernel.len(),
                self.k
            )));
        }
        let mut v = kernel.into_iter().next().expect("one vector");
        fix_phase(&mut v);
        FockVector::new(pair_space(), v)
    }

    /// `Ā_{b1} Ā_{b2} |Vac⟩`, normalized and phase-fixed.
    pub fn pair_state(&self, b1: BandIndex, b2: BandIndex) -> Result<FockVector> {
        let vac = self.vacuum_state()?;
        let v = self.creator(b1).apply(&self.creator(b2).apply(&vac.amplitudes));
        let mut v = crate::numerics::normalized(&v).ok_or_else(|| {
            Error::ExceptionalPoint(format!("pair state vanishes at k = {}", self.k))
        })?;
        fix_phase(&mut v);
        FockVector::new(pair_space(), v)
    }
}

/// One momentum sector: core matrix, analytic modes and the four energies.
#[derive(Clone, Debug)]
pub struct KBlock {
    pub k: f64,
    pub core: ComplexMatrix,
    pub basis: ModeBasis,
    pub energies: [Complex64; 4],
}

pub fn k_block(p: &ModelParams, k: f64) -> Result<KBlock> {
    Ok(KBlock {
        k,
        core: core_matrix(p, k)?,
        basis: mode_basis(p, k)?,
        energies: band_energies(p, k)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::pair_hamiltonian;
    use crate::numerics::{eigenvalues, multiset_distance, vec_norm};
    use std::f64::consts::PI;

    fn p(a: f64, b: f64) -> ModelParams {
        ModelParams::new(1.0, a, b, 0.0, 8).unwrap()
    }

    #[test]
    fn balanced_energies_are_real() {
        for k in [0.3, 1.2, 2.8] {
            for e in band_energies(&p(0.7, 0.7), k).unwrap() {
                assert_eq!(e.im, 0.0);
            }
        }
    }

    #[test]
    fn quarter_turn_value() {
        let e = quasiparticle_energy(&p(1.5, 0.5), PI / 2.0, BandIndex::new(-1, 1).unwrap()).unwrap();
        let want = Complex64::new(-2.0, 0.5f64.sqrt());
        assert!((e - want).norm() < 1e-12);
        let ev = eigenvalues(&core_matrix(&p(1.5, 0.5), PI / 2.0).unwrap()).unwrap();
        assert!(ev.iter().any(|z| (z - want).norm() < 1e-12));
    }

    #[test]
    fn rejects_nonzero_mu() {
        let q = p(1.0, 1.0).with_mu(0.1);
        assert_eq!(
            quasiparticle_energy(&q, 1.0, BandIndex::ALL[0]),
            Err(Error::NonzeroMu(0.1))
        );
        assert!(mode_basis(&q, 1.0).is_err());
    }

    #[test]
    fn band_index_layout() {
        for (i, b) in BandIndex::ALL.iter().enumerate() {
            assert_eq!(b.index(), i);
        }
        assert!(BandIndex::new(0, 1).is_err());
    }

    #[test]
    fn theta_vanishes_on_critical_line() {
        for k in [0.1, 1.0, 3.0] {
            assert_eq!(mode_angle(&p(1.2, 0.8), k), 0.0);
        }
    }

    #[test]
    fn canonical_relations() {
        let b = mode_basis(&p(2.0, 0.5), PI / 3.0).unwrap();
        assert!(b.canonical_defect() < 1e-12);
        for w in b.omega {
            assert!((w - 8.0).abs() < 1e-12);
        }
    }

    #[test]
    fn diagonal_form_rebuilds_pair_hamiltonian() {
        for (a, bb, k) in [(2.0, 0.5, PI / 3.0), (1.5, 0.5, 2.0), (-0.4, 1.3, 0.7)] {
            let q = p(a, bb);
            let mb = mode_basis(&q, k).unwrap();
            let e = band_energies(&q, k).unwrap();
            let h = pair_hamiltonian(&q, k).unwrap();
            assert!((&mb.diagonal_form(&e) - &h).max_abs() < 1e-10);
        }
    }

    #[test]
    fn vacuum_is_annihilated() {
        for (a, bb) in [(0.0, 0.0), (2.0, 0.5), (1.0, 1.0)] {
            let mb = mode_basis(&p(a, bb), 1.1).unwrap();
            let v = mb.vacuum_state().unwrap();
            assert!((v.norm() - 1.0).abs() < 1e-12);
            let total: f64 = BandIndex::ALL
                .iter()
                .map(|&b| vec_norm(&mb.annihilator(b).apply(&v.amplitudes)))
                .sum();
            assert!(total < 1e-11);
        }
    }

    #[test]
    fn negative_hopping_still_diagonalizes() {
        let q = ModelParams::new(-0.8, 0.3, 1.4, 0.0, 8).unwrap();
        for k in [0.4, 1.6, 2.9] {
            let e = band_energies(&q, k).unwrap();
            let ev = eigenvalues(&core_matrix(&q, k).unwrap()).unwrap();
            assert!(multiset_distance(&e, &ev) < 1e-12);
            assert!(mode_basis(&q, k).is_ok());
        }
    }
}
