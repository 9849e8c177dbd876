//! Dense Pauli-string operators on a spin-½ chain.
//!
//! Bit `l−1` of a basis index is site `l`; a set bit means `σᶻ = +1`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;

/// Largest chain handled by the dense spin builders.
pub const MAX_SPIN_SITES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// `coeff · Π σ^{p}_{l}` over distinct 1-based sites.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliString {
    pub coeff: Complex64,
    pub factors: Vec<(usize, Pauli)>,
}

impl PauliString {
    pub fn new(coeff: f64, factors: Vec<(usize, Pauli)>) -> Self {
        Self {
            coeff: Complex64::new(coeff, 0.0),
            factors,
        }
    }

    fn act(&self, state: usize) -> (Complex64, usize) {
        let i = Complex64::i();
        let mut c = self.coeff;
        let mut s = state;
        for &(site, p) in self.factors.iter().rev() {
            let bit = 1usize << (site - 1);
            let up = s & bit != 0;
            match p {
                Pauli::X => s ^= bit,
                Pauli::Y => {
                    c *= if up { i } else { -i };
                    s ^= bit;
                }
                Pauli::Z => {
                    if !up {
                        c = -c;
                    }
                }
            }
        }
        (c, s)
    }
}

/// `Π_{i=from}^{to} σᶻ_i` as factors (empty when `from > to`).
pub fn z_string(from: usize, to: usize) -> Vec<(usize, Pauli)> {
    (from..=to).map(|l| (l, Pauli::Z)).collect()
}

pub(crate) fn check_sites(sites: usize) -> Result<()> {
    if sites < 2 || sites % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "site count must be even and at least 2 (got {sites})"
        )));
    }
    if sites > MAX_SPIN_SITES {
        return Err(Error::FockTooLarge {
            modes: sites,
            limit: MAX_SPIN_SITES,
        });
    }
    Ok(())
}

fn check_strings(sites: usize, terms: &[PauliString]) -> Result<()> {
    for t in terms {
        for &(l, _) in &t.factors {
            if l == 0 || l > sites {
                return Err(Error::DimensionMismatch(format!(
                    "site {l} outside a chain of {sites}"
                )));
            }
        }
    }
    Ok(())
}

pub fn pauli_matrix(sites: usize, terms: &[PauliString]) -> Result<ComplexMatrix> {
    if sites > MAX_SPIN_SITES {
        return Err(Error::FockTooLarge {
            modes: sites,
            limit: MAX_SPIN_SITES,
        });
    }
    check_strings(sites, terms)?;
    let dim = 1usize << sites;
    let mut m = ComplexMatrix::zeros(dim, dim);
    for s in 0..dim {
        for t in terms {
            let (c, out) = t.act(s);
            m[(out, s)] += c;
        }
    }
    Ok(m)
}

pub fn pauli_apply(sites: usize, terms: &[PauliString], v: &[Complex64]) -> Result<Vec<Complex64>> {
    if v.len() != 1usize << sites {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} on {sites} spins",
            v.len()
        )));
    }
    check_strings(sites, terms)?;
    let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
    for (s, &a) in v.iter().enumerate() {
        for t in terms {
            let (c, o) = t.act(s);
            out[o] += c * a;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(p: Pauli) -> ComplexMatrix {
        pauli_matrix(1, &[PauliString::new(1.0, vec![(1, p)])]).unwrap()
    }

    #[test]
    fn single_site_algebra() {
        let (x, y, z) = (single(Pauli::X), single(Pauli::Y), single(Pauli::Z));
        let i = Complex64::i();
        // σx σy = i σz
        assert!((&(&x * &y) - &z.scale(i)).max_abs() < 1e-15);
        for m in [&x, &y, &z] {
            assert!((&(m * m) - &ComplexMatrix::identity(2)).max_abs() < 1e-15);
            assert_eq!(m.hermiticity_defect(), 0.0);
        }
        // the set bit is σᶻ = +1
        assert_eq!(z[(1, 1)], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn apply_matches_matrix() {
        let terms = [
            PauliString::new(0.5, vec![(1, Pauli::X), (3, Pauli::Y)]),
            PauliString::new(-1.0, vec![(2, Pauli::Z), (3, Pauli::X)]),
        ];
        let m = pauli_matrix(3, &terms).unwrap();
        let v: Vec<Complex64> = (0..8).map(|k| Complex64::new(k as f64, 0.3)).collect();
        let a = m.apply(&v);
        let b = pauli_apply(3, &terms, &v).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-14);
        }
    }

    #[test]
    fn guards() {
        assert!(check_sites(7).is_err());
        assert!(check_sites(14).is_err());
        assert!(pauli_matrix(2, &[PauliString::new(1.0, vec![(3, Pauli::X)])]).is_err());
    }
}
