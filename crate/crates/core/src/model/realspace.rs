//! Brute-force many-body matrices of the real-space chain.

use serde::{Deserialize, Serialize};

use super::fock::{FockSpace, Op, Term, MAX_FOCK_MODES};
use super::params::ModelParams;
use crate::error::{Error, Result};
use crate::numerics::{cmp_complex, eigenvalues, ComplexMatrix, Complex64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    /// `c_{2N+1} = c_1`
    Periodic,
    /// `c_{2N+1} = 0`
    Open,
}

/// Operator strings of the chain Hamiltonian, sites indexed from 0.
pub fn chain_terms(p: &ModelParams, boundary: Boundary) -> Vec<Term> {
    let sites = p.sites();
    // 1-based site l → 0-based mode, folding l = 2N+1 by the boundary rule
    let site = |l: usize| -> Option<usize> {
        if l <= sites {
            Some(l - 1)
        } else {
            match boundary {
                Boundary::Periodic => Some(0),
                Boundary::Open => None,
            }
        }
    };
    let mut terms = Vec::new();
    for l in 1..=sites {
        if let Some(r) = site(l + 1) {
            terms.push(Term::real(p.j, vec![Op::Create(l - 1), Op::Annihilate(r)]));
            terms.push(Term::real(p.j, vec![Op::Create(r), Op::Annihilate(l - 1)]));
        }
        if p.mu != 0.0 {
            terms.push(Term::real(p.mu, vec![]));
            terms.push(Term::real(-2.0 * p.mu, vec![Op::Create(l - 1), Op::Annihilate(l - 1)]));
        }
    }
    for j in 1..=p.n {
        let (s1, s2) = (2 * j - 2, 2 * j - 1);
        if let Some(s3) = site(2 * j + 1) {
            terms.push(Term::real(p.delta_a, vec![Op::Create(s2), Op::Create(s3)]));
            terms.push(Term::real(p.delta_b, vec![Op::Annihilate(s3), Op::Annihilate(s2)]));
        }
        terms.push(Term::real(p.delta_a, vec![Op::Annihilate(s2), Op::Annihilate(s1)]));
        terms.push(Term::real(p.delta_b, vec![Op::Create(s1), Op::Create(s2)]));
    }
    terms
}

fn chain_space(p: &ModelParams) -> Result<FockSpace> {
    if p.sites() > MAX_FOCK_MODES {
        return Err(Error::FockTooLarge {
            modes: p.sites(),
            limit: MAX_FOCK_MODES,
        });
    }
    FockSpace::chain(p.sites())
}

/// Dense `2^{2N} × 2^{2N}` Hamiltonian in the real-space occupation basis.
pub fn fock_hamiltonian(p: &ModelParams, boundary: Boundary) -> Result<ComplexMatrix> {
    p.validate()?;
    chain_space(p)?.operator(&chain_terms(p, boundary))
}

/// All eigenvalues of [`fock_hamiltonian`], diagonalizing the even and odd
/// parity sectors separately. Sorted by (real, imaginary).
pub fn fock_spectrum(p: &ModelParams, boundary: Boundary) -> Result<Vec<Complex64>> {
    let space = chain_space(p)?;
    let h = fock_hamiltonian(p, boundary)?;
    let (even, odd) = space.parity_sectors();
    let mut values = eigenvalues(&h.submatrix(&even))?;
    values.extend(eigenvalues(&h.submatrix(&odd))?);
    values.sort_by(cmp_complex);
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn min_re(v: &[Complex64]) -> f64 {
        v.iter().map(|z| z.re).fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn hermitian_when_balanced() {
        for b in [Boundary::Periodic, Boundary::Open] {
            let p = ModelParams::new(0.7, 0.9, 0.9, -0.4, 2).unwrap();
            assert!(fock_hamiltonian(&p, b).unwrap().hermiticity_defect() < 1e-15);
        }
    }

    #[test]
    fn non_hermitian_when_imbalanced() {
        let p = ModelParams::new(1.0, 1.5, 0.5, 0.0, 2).unwrap();
        assert!(fock_hamiltonian(&p, Boundary::Periodic).unwrap().hermiticity_defect() > 0.1);
    }

    #[test]
    fn free_ring_ground_energy() {
        // fill every negative level of 2J cos(2πq/L)
        for n in [2usize, 4] {
            let sites = 2 * n;
            let p = ModelParams::new(1.0, 0.0, 0.0, 0.0, n).unwrap();
            let filled: f64 = (0..sites)
                .map(|q| 2.0 * (2.0 * PI * q as f64 / sites as f64).cos())
                .filter(|e| *e < 0.0)
                .sum();
            let e = fock_spectrum(&p, Boundary::Periodic).unwrap();
            assert!((min_re(&e) - filled).abs() < 1e-10, "N={n}: {} vs {filled}", min_re(&e));
        }
    }

    #[test]
    fn open_chain_drops_wrap_terms() {
        let p = ModelParams::new(1.0, 0.0, 0.0, 0.0, 2).unwrap();
        let e = fock_spectrum(&p, Boundary::Open).unwrap();
        // open 4-site chain: single-particle levels 2cos(qπ/5)
        let filled: f64 = (1..=4)
            .map(|q| 2.0 * (q as f64 * PI / 5.0).cos())
            .filter(|e| *e < 0.0)
            .sum();
        assert!((min_re(&e) - filled).abs() < 1e-10);
    }

    #[test]
    fn mu_shift_counts_every_site() {
        // J = Δ = 0: H = μ Σ(1 − 2n), spectrum from 2Nμ down to −2Nμ
        let p = ModelParams::new(0.0, 0.0, 0.0, 0.5, 2).unwrap();
        let e = fock_spectrum(&p, Boundary::Periodic).unwrap();
        assert!((e[0].re + 2.0).abs() < 1e-14);
        assert!((e[15].re - 2.0).abs() < 1e-14);
    }

    #[test]
    fn size_guard() {
        let p = ModelParams::new(1.0, 1.0, 1.0, 0.0, 8).unwrap();
        assert!(matches!(
            fock_hamiltonian(&p, Boundary::Periodic),
            Err(Error::FockTooLarge { .. })
        ));
    }
}
