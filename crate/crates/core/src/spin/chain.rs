//! The Jordan–Wigner image of the chain on the critical fixed line.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::pauli::{check_sites, pauli_apply, pauli_matrix, z_string, Pauli, PauliString};
use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::numerics::{vec_norm, ComplexMatrix};

use Pauli::{X, Y};

#[derive(Clone, Debug)]
pub struct SpinOperator {
    pub site_count: usize,
    pub matrix: ComplexMatrix,
}

impl SpinOperator {
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.matrix.apply(v)
    }
}

fn with_string(sites: usize, coeff: f64, mut ends: Vec<(usize, Pauli)>) -> PauliString {
    ends.extend(z_string(2, sites - 1));
    PauliString::new(coeff, ends)
}

/// `H₀ = −Σ_{l<2N} σˣ_l σˣ_{l+1} − (Π_{i=2}^{2N−1} σᶻ_i) σʸ_1 σʸ_{2N}`.
pub fn spin_h0_terms(sites: usize) -> Vec<PauliString> {
    let mut t: Vec<PauliString> = (1..sites)
        .map(|l| PauliString::new(-1.0, vec![(l, X), (l + 1, X)]))
        .collect();
    t.push(with_string(sites, -1.0, vec![(1, Y), (sites, Y)]));
    t
}

/// The imbalance operator `ℋ` multiplying `i(Δa−Δb)/4`.
pub fn spin_calh_terms(sites: usize) -> Vec<PauliString> {
    let n = sites / 2;
    let mut t = Vec::new();
    for j in 1..=n {
        t.push(PauliString::new(1.0, vec![(2 * j - 1, X), (2 * j, Y)]));
        t.push(PauliString::new(1.0, vec![(2 * j - 1, Y), (2 * j, X)]));
    }
    for j in 1..n {
        t.push(PauliString::new(-1.0, vec![(2 * j, Y), (2 * j + 1, X)]));
        t.push(PauliString::new(-1.0, vec![(2 * j, X), (2 * j + 1, Y)]));
    }
    t.push(with_string(sites, 1.0, vec![(1, Y), (sites, X)]));
    t.push(with_string(sites, 1.0, vec![(sites, Y), (1, X)]));
    t
}

pub fn build_spin_h0(sites: usize) -> Result<SpinOperator> {
    check_sites(sites)?;
    Ok(SpinOperator {
        site_count: sites,
        matrix: pauli_matrix(sites, &spin_h0_terms(sites))?,
    })
}

pub fn build_spin_calh(sites: usize) -> Result<SpinOperator> {
    check_sites(sites)?;
    Ok(SpinOperator {
        site_count: sites,
        matrix: pauli_matrix(sites, &spin_calh_terms(sites))?,
    })
}

/// `H = J·H₀ + i((Δa−Δb)/4)·ℋ`, valid only for `Δa+Δb = 2J`, `μ = 0`.
pub fn spin_hamiltonian(p: &ModelParams) -> Result<SpinOperator> {
    p.validate()?;
    if p.mu != 0.0 {
        return Err(Error::NonzeroMu(p.mu));
    }
    if (p.pair_sum() - 2.0 * p.j).abs() > 1e-12 * p.j.abs().max(1.0) {
        return Err(Error::InvalidParameter(format!(
            "spin picture needs delta_a + delta_b = 2J (got {} vs {})",
            p.pair_sum(),
            2.0 * p.j
        )));
    }
    spin_fixed_line_operator(p.sites(), p.j, p.imbalance())
}

/// `J·H₀ + i(imbalance/4)·ℋ` for any even site count, including odd `N`.
pub fn spin_fixed_line_operator(sites: usize, j: f64, imbalance: f64) -> Result<SpinOperator> {
    let h0 = build_spin_h0(sites)?;
    let calh = build_spin_calh(sites)?;
    let mut m = h0.matrix.scale_real(j);
    m.add_scaled(Complex64::new(0.0, imbalance / 4.0), &calh.matrix);
    Ok(SpinOperator {
        site_count: sites,
        matrix: m,
    })
}

/// `|GHZ^±⟩ = (|→…→⟩ ± |←…←⟩)/√2` in the σˣ product basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GhzPair {
    pub plus: Vec<Complex64>,
    pub minus: Vec<Complex64>,
}

/// `|→…→⟩` (`all_right = true`) or `|←…←⟩`.
pub fn x_polarized(sites: usize, all_right: bool) -> Vec<Complex64> {
    let dim = 1usize << sites;
    let a = 1.0 / (dim as f64).sqrt();
    (0..dim)
        .map(|s| {
            // ⟨s|←⟩ per site is ±1/√2 with − on σᶻ = −1
            let down = sites as u32 - (s as u32).count_ones();
            let sign = if all_right || down % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::new(sign * a, 0.0)
        })
        .collect()
}

pub fn ghz_pair(sites: usize) -> Result<GhzPair> {
    check_sites(sites)?;
    let r = x_polarized(sites, true);
    let l = x_polarized(sites, false);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    Ok(GhzPair {
        plus: r.iter().zip(&l).map(|(a, b)| (a + b) * h).collect(),
        minus: r.iter().zip(&l).map(|(a, b)| (a - b) * h).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl IdentityCheck {
    fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            residual,
            tolerance,
            passed: residual <= tolerance,
        }
    }
}

fn eigen_residual(hv: &[Complex64], v: &[Complex64], e: Complex64) -> f64 {
    hv.iter().zip(v).map(|(a, b)| (a - e * b).norm_sqr()).sum::<f64>().sqrt()
}

/// Every printed spin identity at one chain length: the `H₀` GHZ levels,
/// hermiticity of `H₀` and `ℋ`, `ℋ|GHZ⁻⟩ = 0`, bulk cancellation for each
/// interior site, and `H|GHZ⁻⟩ = −2NJ|GHZ⁻⟩` for each imbalance.
pub fn spin_identity_report(sites: usize, j: f64, imbalances: &[f64]) -> Result<Vec<IdentityCheck>> {
    check_sites(sites)?;
    let ghz = ghz_pair(sites)?;
    let h0 = spin_h0_terms(sites);
    let calh = spin_calh_terms(sites);
    let mut out = Vec::new();

    let h0m = pauli_matrix(sites, &h0)?;
    let chm = pauli_matrix(sites, &calh)?;
    out.push(IdentityCheck::new("H0 hermitian", h0m.hermiticity_defect(), 0.0));
    out.push(IdentityCheck::new("calH hermitian", chm.hermiticity_defect(), 0.0));

    let l = sites as f64;
    for (tag, v, e) in [("+", &ghz.plus, -l + 2.0), ("-", &ghz.minus, -l)] {
        let hv = pauli_apply(sites, &h0, v)?;
        out.push(IdentityCheck::new(
            format!("H0 GHZ{tag} eigenvalue {e}"),
            eigen_residual(&hv, v, Complex64::new(e, 0.0)),
            1e-12,
        ));
    }
    let r = vec_norm(&pauli_apply(sites, &calh, &ghz.minus)?);
    out.push(IdentityCheck::new("calH GHZ- = 0", r, 1e-12));

    for site in 2..sites {
        let cancel = [
            PauliString::new(1.0, vec![(site, Y), (site - 1, X)]),
            PauliString::new(-1.0, vec![(site, Y), (site + 1, X)]),
        ];
        let worst = vec_norm(&pauli_apply(sites, &cancel, &ghz.plus)?)
            .max(vec_norm(&pauli_apply(sites, &cancel, &ghz.minus)?));
        out.push(IdentityCheck::new(format!("bulk cancellation l={site}"), worst, 1e-12));
    }

    for &d in imbalances {
        let h = spin_fixed_line_operator(sites, j, d)?;
        let hv = h.apply(&ghz.minus);
        let e = Complex64::new(-l * j, 0.0);
        out.push(IdentityCheck::new(
            format!("H GHZ- = -2NJ at imbalance {d}"),
            eigen_residual(&hv, &ghz.minus, e),
            1e-11,
        ));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeisenbergReport {
    pub sites: usize,
    /// `‖V|→…→⟩‖` for the added term `V`.
    pub annihilation_right: f64,
    /// `‖V|←…←⟩‖`.
    pub annihilation_left: f64,
    /// Eigenvalue of the isotropic ring on `|→…→⟩`.
    pub ring_eigenvalue: f64,
    /// Eigen-residual of the ring plus added term at the same eigenvalue.
    pub combined_residual: f64,
}

/// Isotropic ring `Σ_l σ⃗_l·σ⃗_{l+1}` with site `2N+1 ≡ 1`.
pub fn heisenberg_ring_terms(sites: usize) -> Vec<PauliString> {
    let next = |l: usize| if l == sites { 1 } else { l + 1 };
    let mut t = Vec::new();
    for l in 1..=sites {
        for p in [Pauli::X, Pauli::Y, Pauli::Z] {
            t.push(PauliString::new(1.0, vec![(l, p), (next(l), p)]));
        }
    }
    t
}

/// `i Σ_j (σˣ_{2j−1} σʸ_{2j} − σʸ_{2j} σˣ_{2j+1})` with site `2N+1 ≡ 1`.
pub fn heisenberg_added_terms(sites: usize) -> Vec<PauliString> {
    let next = |l: usize| if l > sites { 1 } else { l };
    let i = Complex64::i();
    let mut t = Vec::new();
    for j in 1..=sites / 2 {
        t.push(PauliString {
            coeff: i,
            factors: vec![(2 * j - 1, X), (2 * j, Y)],
        });
        t.push(PauliString {
            coeff: -i,
            factors: vec![(2 * j, Y), (next(2 * j + 1), X)],
        });
    }
    t
}

pub fn heisenberg_ring_check(sites: usize) -> Result<HeisenbergReport> {
    check_sites(sites)?;
    let ring = heisenberg_ring_terms(sites);
    let added = heisenberg_added_terms(sites);
    let right = x_polarized(sites, true);
    let left = x_polarized(sites, false);
    let annihilation_right = vec_norm(&pauli_apply(sites, &added, &right)?);
    let annihilation_left = vec_norm(&pauli_apply(sites, &added, &left)?);
    let hv = pauli_apply(sites, &ring, &right)?;
    let e: Complex64 = right.iter().zip(&hv).map(|(a, b)| a.conj() * b).sum();
    let mut combined = ring.clone();
    combined.extend(added);
    let cv = pauli_apply(sites, &combined, &right)?;
    Ok(HeisenbergReport {
        sites,
        annihilation_right,
        annihilation_left,
        ring_eigenvalue: e.re,
        combined_residual: eigen_residual(&cv, &right, e),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{fock_spectrum, Boundary};
    use crate::numerics::{eigenvalues, multiset_distance};

    #[test]
    fn ghz_states_are_orthonormal() {
        let g = ghz_pair(6).unwrap();
        assert!((vec_norm(&g.plus) - 1.0).abs() < 1e-14);
        assert!((vec_norm(&g.minus) - 1.0).abs() < 1e-14);
        let o: Complex64 = g.plus.iter().zip(&g.minus).map(|(a, b)| a.conj() * b).sum();
        assert!(o.norm() < 1e-15);
    }

    #[test]
    fn x_polarized_is_sigma_x_eigenstate() {
        let v = x_polarized(4, false);
        for l in 1..=4 {
            let xv = pauli_apply(4, &[PauliString::new(1.0, vec![(l, X)])], &v).unwrap();
            assert!(eigen_residual(&xv, &v, Complex64::new(-1.0, 0.0)) < 1e-15);
        }
    }

    #[test]
    fn all_identities_hold() {
        for sites in [4, 6, 8] {
            for c in spin_identity_report(sites, 1.0, &[0.5, 1.0, 2.0]).unwrap() {
                assert!(c.passed, "{sites} sites: {} residual {}", c.name, c.residual);
            }
        }
    }

    #[test]
    fn h0_ground_value() {
        for sites in [4, 6, 8] {
            let e = eigenvalues(&build_spin_h0(sites).unwrap().matrix).unwrap();
            assert!((e[0].re + sites as f64).abs() < 1e-10);
        }
    }

    #[test]
    fn matches_fermion_spectrum() {
        for d in [0.0, 1.0] {
            let p = ModelParams::on_fixed_line(1.0, 2.0, d, 2).unwrap();
            let s = eigenvalues(&spin_hamiltonian(&p).unwrap().matrix).unwrap();
            let f = fock_spectrum(&p, Boundary::Periodic).unwrap();
            assert!(multiset_distance(&s, &f) < 1e-9);
        }
    }

    #[test]
    fn ghz_minus_energy_is_the_fermion_ground_energy() {
        let p = ModelParams::on_fixed_line(1.3, 2.6, 0.7, 4).unwrap();
        let g = crate::spectral::ground_energy(&p).unwrap();
        let h = spin_hamiltonian(&p).unwrap();
        let v = ghz_pair(8).unwrap().minus;
        assert!(eigen_residual(&h.apply(&v), &v, Complex64::new(g, 0.0)) < 1e-10);
    }

    #[test]
    fn off_line_rejected() {
        let p = ModelParams::new(1.0, 1.5, 1.0, 0.0, 2).unwrap();
        assert!(spin_hamiltonian(&p).is_err());
        let p = ModelParams::new(1.0, 1.5, 0.5, 0.1, 2).unwrap();
        assert!(spin_hamiltonian(&p).is_err());
    }

    #[test]
    fn heisenberg_term_vanishes() {
        let r = heisenberg_ring_check(6).unwrap();
        assert!(r.annihilation_right < 1e-14);
        assert!(r.annihilation_left < 1e-14);
        assert!((r.ring_eigenvalue - 6.0).abs() < 1e-12);
        assert!(r.combined_residual < 1e-12);
    }
}
