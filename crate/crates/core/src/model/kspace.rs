//! Momentum-space blocks of the periodic chain.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::fock::{FockSpace, Op, Term};
use super::params::ModelParams;
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;

pub const PAIR_LABELS: [&str; 4] = ["alpha_k", "beta_k", "alpha_-k", "beta_-k"];
pub const BOUNDARY_LABELS: [&str; 4] = ["alpha_0", "beta_0", "alpha_pi", "beta_pi"];

fn cis(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, x)
}

fn gamma(k: f64) -> Complex64 {
    Complex64::new(1.0, 0.0) + cis(k)
}

pub(crate) fn check_momentum(k: f64) -> Result<()> {
    if k.is_finite() && k > 0.0 && k < PI {
        Ok(())
    } else {
        Err(Error::MomentumOutOfRange(k))
    }
}

/// The 4×4 matrix `h_k` with `H_k = ψ†_k h_k ψ_k`, `ψ_k = (α_k, β_k, α†_{−k}, β†_{−k})ᵀ`.
pub fn core_matrix(p: &ModelParams, k: f64) -> Result<ComplexMatrix> {
    check_momentum(k)?;
    let (j, a, b, mu) = (p.j, p.delta_a, p.delta_b, p.mu);
    let z = Complex64::new(0.0, 0.0);
    let m = Complex64::new(-2.0 * mu, 0.0);
    let hop = j * gamma(-k);
    let hop_c = j * gamma(k);
    Ok(ComplexMatrix::from_rows(&[
        [m, hop, z, b - a * cis(-k)],
        [hop_c, m, a * cis(k) - b, z],
        [z, b * cis(-k) - a, -m, -hop],
        [a - b * cis(k), z, -hop_c, -m],
    ]))
}

/// `(Γ₁, Γ₂, Γ₃)` with `h_k = JΓ₁ + ((Δa+Δb)/2)Γ₂ + ((Δa−Δb)/2)Γ₃` at `μ = 0`.
pub fn gamma_matrices(k: f64) -> [ComplexMatrix; 3] {
    let z = Complex64::new(0.0, 0.0);
    let (gk, gmk) = (gamma(k), gamma(-k));
    let (gpm, gpp) = (gamma(PI - k), gamma(PI + k));
    let g1 = ComplexMatrix::from_rows(&[
        [z, gmk, z, z],
        [gk, z, z, z],
        [z, z, z, -gmk],
        [z, z, -gk, z],
    ]);
    let g2 = ComplexMatrix::from_rows(&[
        [z, z, z, gpm],
        [z, z, -gpp, z],
        [z, -gpm, z, z],
        [gpp, z, z, z],
    ]);
    let g3 = ComplexMatrix::from_rows(&[
        [z, z, z, -gmk],
        [z, z, gk, z],
        [z, -gmk, z, z],
        [gk, z, z, z],
    ]);
    [g1, g2, g3]
}

/// `∂h_k/∂Δa`, independent of every parameter.
pub fn core_matrix_delta_a_derivative(k: f64) -> ComplexMatrix {
    let [_, g2, g3] = gamma_matrices(k);
    (&g2 + &g3).scale_real(0.5)
}

pub fn pair_space() -> FockSpace {
    FockSpace::new(PAIR_LABELS).expect("four modes")
}

pub fn boundary_space() -> FockSpace {
    FockSpace::new(BOUNDARY_LABELS).expect("four modes")
}

/// Operator string `ψ†_i h_ij ψ_j` expressed through the four pair modes.
pub(crate) fn bilinear_terms(h: &ComplexMatrix) -> Vec<Term> {
    let psi = |j: usize| if j < 2 { Op::Annihilate(j) } else { Op::Create(j) };
    let psi_dag = |i: usize| if i < 2 { Op::Create(i) } else { Op::Annihilate(i) };
    let mut terms = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let c = h[(i, j)];
            if c != Complex64::new(0.0, 0.0) {
                terms.push(Term::new(c, vec![psi_dag(i), psi(j)]));
            }
        }
    }
    terms
}

/// Many-body `ψ†_k h_k ψ_k` on the 16-dim space of `(α_k, β_k, α_{−k}, β_{−k})`.
pub fn pair_hamiltonian(p: &ModelParams, k: f64) -> Result<ComplexMatrix> {
    let h = core_matrix(p, k)?;
    pair_space().operator(&bilinear_terms(&h))
}

fn h0_terms(p: &ModelParams, a: usize, b: usize) -> Vec<Term> {
    let (j, mu) = (p.j, p.mu);
    let d = p.delta_b - p.delta_a;
    vec![
        Term::real(2.0 * j, vec![Op::Create(a), Op::Annihilate(b)]),
        Term::real(2.0 * j, vec![Op::Create(b), Op::Annihilate(a)]),
        Term::real(2.0 * mu, vec![Op::Annihilate(a), Op::Create(a)]),
        Term::real(-2.0 * mu, vec![Op::Create(b), Op::Annihilate(b)]),
        Term::real(d, vec![Op::Create(a), Op::Create(b)]),
        Term::real(d, vec![Op::Annihilate(a), Op::Annihilate(b)]),
    ]
}

fn hpi_terms(p: &ModelParams, a: usize, b: usize) -> Vec<Term> {
    let mu = p.mu;
    let s = p.delta_a + p.delta_b;
    vec![
        Term::real(2.0 * mu, vec![Op::Annihilate(a), Op::Create(a)]),
        Term::real(-2.0 * mu, vec![Op::Create(b), Op::Annihilate(b)]),
        Term::real(s, vec![Op::Create(a), Op::Create(b)]),
        Term::real(s, vec![Op::Annihilate(b), Op::Annihilate(a)]),
    ]
}

/// `(H₀, H_π)` as 4×4 matrices on `(α₀, β₀)` and `(α_π, β_π)`.
pub fn boundary_blocks(p: &ModelParams) -> (ComplexMatrix, ComplexMatrix) {
    let two = FockSpace::new(["alpha", "beta"]).expect("two modes");
    let h0 = two.operator(&h0_terms(p, 0, 1)).expect("valid modes");
    let hpi = two.operator(&hpi_terms(p, 0, 1)).expect("valid modes");
    (h0, hpi)
}

/// `H₀ + H_π` on the 16-dim space of `(α₀, β₀, α_π, β_π)`.
pub fn boundary_hamiltonian(p: &ModelParams) -> ComplexMatrix {
    let mut terms = h0_terms(p, 0, 1);
    terms.extend(hpi_terms(p, 2, 3));
    boundary_space().operator(&terms).expect("valid modes")
}

/// Labels of the `2N` momentum modes in global order: the boundary modes
/// `(α₀, β₀, α_π, β_π)`, then `(α_k, β_k, α_{−k}, β_{−k})` for each pair
/// momentum in ascending order.
pub fn kspace_labels(n: usize) -> Result<Vec<String>> {
    let grid = super::grid::momentum_grid(n)?;
    let mut labels: Vec<String> = BOUNDARY_LABELS.iter().map(|s| s.to_string()).collect();
    for m in 1..=grid.pairs.len() {
        for l in ["alpha", "beta"] {
            labels.push(format!("{l}_k{m}"));
        }
        for l in ["alpha", "beta"] {
            labels.push(format!("{l}_-k{m}"));
        }
    }
    Ok(labels)
}

/// Creation-operator expansion of every momentum mode in real-space sites.
///
/// Row `m` holds the coefficients of `c†_l` (0-based site `l`) in the
/// creator of global momentum mode `m`, with `α†_k = N^{−1/2} Σ_j e^{ikj} c†_{2j−1}`
/// and `β†_k = N^{−1/2} Σ_j e^{ikj} c†_{2j}`.
pub fn fourier_creators(n: usize) -> Result<Vec<Vec<Complex64>>> {
    let grid = super::grid::momentum_grid(n)?;
    let norm = 1.0 / (n as f64).sqrt();
    let row = |k: f64, sub: usize| -> Vec<Complex64> {
        let mut r = vec![Complex64::new(0.0, 0.0); 2 * n];
        for j in 1..=n {
            r[2 * (j - 1) + sub] = Complex64::from_polar(norm, k * j as f64);
        }
        r
    };
    let mut rows = vec![row(0.0, 0), row(0.0, 1), row(PI, 0), row(PI, 1)];
    for &k in &grid.pairs {
        rows.push(row(k, 0));
        rows.push(row(k, 1));
        rows.push(row(-k, 0));
        rows.push(row(-k, 1));
    }
    Ok(rows)
}
