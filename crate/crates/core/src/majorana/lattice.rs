//! The single-particle Majorana ladder `h_D` and its translation-invariant spectrum.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::numerics::{eigenvalues, elliptic_e, ComplexMatrix};

/// `h_D` over `φ† = (−ia₁, b₁, −ia₂, b₂, …)`; site `l` sublattice A sits at
/// index `2(l−1)`, sublattice B at `2(l−1)+1`.
#[derive(Clone, Debug)]
pub struct MajoranaLattice {
    pub params: ModelParams,
    pub lambda: f64,
    pub kappa_plus: f64,
    pub kappa_minus: f64,
    pub matrix: ComplexMatrix,
}

pub(crate) fn require_zero_mu(p: &ModelParams) -> Result<()> {
    if p.mu != 0.0 {
        Err(Error::NonzeroMu(p.mu))
    } else {
        Ok(())
    }
}

pub fn index_a(l: usize, sites: usize) -> usize {
    2 * ((l - 1) % sites)
}

pub fn index_b(l: usize, sites: usize) -> usize {
    2 * ((l - 1) % sites) + 1
}

pub fn build_majorana(p: &ModelParams, lambda: f64) -> Result<MajoranaLattice> {
    p.validate()?;
    require_zero_mu(p)?;
    if !lambda.is_finite() {
        return Err(Error::InvalidParameter("lambda must be finite".into()));
    }
    let sites = p.sites();
    let dim = 2 * sites;
    let a = |l: usize| index_a(l, sites);
    let b = |l: usize| index_b(l, sites);
    let kp = (2.0 * p.j + p.pair_sum()) / 4.0;
    let km = (2.0 * p.j - p.pair_sum()) / 4.0;
    let d = Complex64::new(p.imbalance() / 8.0, 0.0);
    let half = |x: f64| Complex64::new(0.5 * x, 0.0);

    // intra-sublattice (Δa−Δb)/8 terms, then minus their H.c.
    let mut t = ComplexMatrix::zeros(dim, dim);
    for j in 1..=p.n {
        t[(a(2 * j), a(2 * j + 1))] += d;
        t[(b(2 * j + 1), b(2 * j))] += d;
        t[(a(2 * j), a(2 * j - 1))] += d;
        t[(b(2 * j - 1), b(2 * j))] += d;
    }
    let mut h = &t - &t.adjoint();

    let mut k = ComplexMatrix::zeros(dim, dim);
    for l in 1..=sites {
        k[(b(l), a(l + 1))] += half(kp);
        k[(b(l + 1), a(l))] += half(km);
    }
    h = &h + &(&k + &k.adjoint());

    // impurity on the bond (1, 2N)
    let mut imp = ComplexMatrix::zeros(dim, dim);
    let (first, last) = (1, sites);
    imp[(b(last), a(first))] += half(kp);
    imp[(a(first), b(last))] += half(kp);
    imp[(b(first), a(last))] += half(km);
    imp[(a(last), b(first))] += half(km);
    let mut td = ComplexMatrix::zeros(dim, dim);
    td[(a(last), a(first))] += d;
    td[(b(first), b(last))] += d;
    imp = &imp + &(&td - &td.adjoint());
    h.add_scaled(Complex64::new(-lambda, 0.0), &imp);

    Ok(MajoranaLattice {
        params: *p,
        lambda,
        kappa_plus: kp,
        kappa_minus: km,
        matrix: h,
    })
}

/// Closed-form `E_K = ±¼√((2J)² cos²K + (Δa+Δb)² sin²K) ± i((Δa−Δb)/4) cos K`
/// for `K = mπ/N`, both signs independent: `4N` values.
pub fn ladder_spectrum(p: &ModelParams) -> Result<Vec<Complex64>> {
    p.validate()?;
    require_zero_mu(p)?;
    let mut out = Vec::with_capacity(4 * p.n);
    for m in 0..p.n {
        let kk = m as f64 * PI / p.n as f64;
        let (s, c) = kk.sin_cos();
        let re = 0.25 * ((2.0 * p.j * c).powi(2) + (p.pair_sum() * s).powi(2)).sqrt();
        let im = 0.25 * p.imbalance() * c;
        for rho in [1.0, -1.0] {
            for sigma in [1.0, -1.0] {
                out.push(Complex64::new(rho * re, sigma * im));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LadderEnergy {
    /// `−(N/π)·max(2J, Δa+Δb)·E(e)`.
    pub closed_form: f64,
    /// Sum of the real parts of the closed-form `E_K` with negative real part.
    pub numeric_sum: f64,
    /// Eccentricity `e = √(1 − (min/max)²)`.
    pub eccentricity: f64,
}

impl LadderEnergy {
    pub fn relative_gap(&self) -> f64 {
        ((self.numeric_sum - self.closed_form) / self.closed_form).abs()
    }
}

/// Half-filled sum over a list of ladder levels: every value with negative
/// real part. Levels on the imaginary axis contribute nothing either way.
pub fn half_filled_sum(levels: &[Complex64]) -> f64 {
    levels.iter().filter(|z| z.re < 0.0).map(|z| z.re).sum()
}

pub fn ladder_ground_energy(p: &ModelParams) -> Result<LadderEnergy> {
    let levels = ladder_spectrum(p)?;
    let (w, hgt) = ((2.0 * p.j).abs(), p.pair_sum().abs());
    let (lo, hi) = if w < hgt { (w, hgt) } else { (hgt, w) };
    let eccentricity = if hi == 0.0 { 0.0 } else { (1.0 - (lo / hi).powi(2)).max(0.0).sqrt() };
    let closed_form = -(p.n as f64 / PI) * hi * elliptic_e(eccentricity)?;
    Ok(LadderEnergy {
        closed_form,
        numeric_sum: half_filled_sum(&levels),
        eccentricity,
    })
}

/// Half-filled sum from a dense diagonalization of `h_D(λ = 0)`.
pub fn ladder_ground_energy_dense(p: &ModelParams) -> Result<f64> {
    let lattice = build_majorana(p, 0.0)?;
    Ok(half_filled_sum(&eigenvalues(&lattice.matrix)?))
}
