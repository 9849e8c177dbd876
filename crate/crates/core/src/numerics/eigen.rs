//! Two-sided eigensystems of dense complex matrices.
//!
//! Right eigenvectors come from faer's Schur-based solver. Left
//! eigenvectors are the rows of `V⁻¹`, so each left/right pair has unit
//! biorthogonal overlap `wᵢ† vⱼ = δᵢⱼ` by construction.

use std::cmp::Ordering;

use faer::linalg::solvers::DenseSolveCore;
use num_complex::Complex64;

use super::matrix::{vec_norm, ComplexMatrix};
use super::MAX_DENSE_DIM;
use crate::error::{Error, Result};

/// Reciprocal eigenvalue condition below which a matrix is treated as defective.
pub const DEFECTIVE_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// Eigenvalues sorted by (real part, imaginary part).
    pub values: Vec<Complex64>,
    /// Unit-norm right eigenvectors, one per column.
    pub right_vectors: ComplexMatrix,
    /// Left eigenvectors `wᵢ`, one per column, scaled so `wᵢ† vᵢ = 1`.
    pub left_vectors: ComplexMatrix,
    /// Set when the eigenvector basis is numerically singular.
    pub defective: bool,
    /// Largest eigenvalue condition number `‖wᵢ‖‖vᵢ‖ / |wᵢ†vᵢ|`.
    pub max_condition: f64,
}

impl EigenDecomposition {
    /// `V diag(f(λ)) V⁻¹`.
    pub fn reconstruct_with(&self, f: impl Fn(Complex64) -> Complex64) -> ComplexMatrix {
        let n = self.values.len();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &lam) in self.values.iter().enumerate() {
            let fl = f(lam);
            for i in 0..n {
                let vi = self.right_vectors[(i, k)] * fl;
                for j in 0..n {
                    out[(i, j)] += vi * self.left_vectors[(j, k)].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reconstruct_with(|z| z)
    }
}

fn check_input(m: &ComplexMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() > MAX_DENSE_DIM {
        return Err(Error::TooLarge(m.rows()));
    }
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// Total order used for deterministic eigenvalue listings.
pub fn cmp_complex(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Eigenvalues only, sorted by (real, imaginary).
pub fn eigenvalues(m: &ComplexMatrix) -> Result<Vec<Complex64>> {
    check_input(m)?;
    if m.rows() == 0 {
        return Ok(Vec::new());
    }
    let mut values = m.to_faer().eigenvalues().map_err(|_| Error::EigenFailure)?;
    values.sort_by(cmp_complex);
    Ok(values)
}

/// Full two-sided eigendecomposition.
pub fn eig_complex(m: &ComplexMatrix) -> Result<EigenDecomposition> {
    check_input(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok(EigenDecomposition {
            values: vec![],
            right_vectors: ComplexMatrix::zeros(0, 0),
            left_vectors: ComplexMatrix::zeros(0, 0),
            defective: false,
            max_condition: 1.0,
        });
    }
    let evd = m.to_faer().eigen().map_err(|_| Error::EigenFailure)?;
    let s = evd.S();
    let u = evd.U();

    let mut order: Vec<usize> = (0..n).collect();
    let raw: Vec<Complex64> = (0..n).map(|i| s[i]).collect();
    order.sort_by(|&a, &b| cmp_complex(&raw[a], &raw[b]));

    let values: Vec<Complex64> = order.iter().map(|&i| raw[i]).collect();
    let mut columns: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&j| (0..n).map(|i| u[(i, j)]).collect())
        .collect();
    for col in &mut columns {
        let norm = vec_norm(col);
        if norm > 0.0 {
            col.iter_mut().for_each(|z| *z /= norm);
        }
    }
    let right = ComplexMatrix::from_columns(&columns)?;

    let inv = right.to_faer().partial_piv_lu().inverse();
    let inv = ComplexMatrix::from_faer(inv.as_ref());
    // w_i = conj(row i of V^{-1})
    let left = ComplexMatrix::from_fn(n, n, |i, k| inv[(k, i)].conj());

    let mut max_condition = 1.0f64;
    let mut finite = inv.is_finite();
    for k in 0..n {
        let wk: Vec<Complex64> = left.column(k);
        let cond = vec_norm(&wk);
        if !cond.is_finite() {
            finite = false;
        }
        max_condition = max_condition.max(cond);
    }
    let defective = !finite || 1.0 / max_condition < DEFECTIVE_TOL;

    Ok(EigenDecomposition {
        values,
        right_vectors: right,
        left_vectors: left,
        defective,
        max_condition,
    })
}

/// Singular values in descending order.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut sv = m.to_faer().singular_values().map_err(|_| Error::EigenFailure)?;
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

/// Orthonormal basis of the numerical kernel `{x : M x ≈ 0}`, using the
/// absolute singular-value cutoff `tol`.
pub fn null_space(m: &ComplexMatrix, tol: f64) -> Result<Vec<Vec<Complex64>>> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = m.cols();
    let svd = m.to_faer().svd().map_err(|_| Error::EigenFailure)?;
    let s = svd.S();
    let v = svd.V();
    let rank_limit = m.rows().min(n);
    let mut basis = Vec::new();
    for j in 0..n {
        let sigma = if j < rank_limit { s[j].re } else { 0.0 };
        if sigma <= tol {
            basis.push((0..n).map(|i| v[(i, j)]).collect());
        }
    }
    Ok(basis)
}

/// Largest distance between paired elements after greedily matching each
/// element of `a` to its nearest unused element of `b`. Returns infinity
/// when the lengths differ.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut a_sorted = a.to_vec();
    a_sorted.sort_by(cmp_complex);
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for x in &a_sorted {
        let mut best = None;
        let mut best_d = f64::INFINITY;
        for (j, y) in b.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = (x - y).norm();
            if d < best_d {
                best_d = d;
                best = Some(j);
            }
        }
        if let Some(j) = best {
            used[j] = true;
            worst = worst.max(best_d);
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_has_unit_eigenvalues() {
        let e = eig_complex(&ComplexMatrix::identity(4)).unwrap();
        for v in &e.values {
            assert!((v - c(1.0, 0.0)).norm() < 1e-14);
        }
        assert!(!e.defective);
    }

    #[test]
    fn diagonal_values() {
        let m = ComplexMatrix::from_diag(&[c(2.0, 0.0), c(-1.0, 3.0)]);
        let e = eig_complex(&m).unwrap();
        assert!((e.values[0] - c(-1.0, 3.0)).norm() < 1e-14);
        assert!((e.values[1] - c(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn jordan_block_is_flagged_defective() {
        let m = ComplexMatrix::from_rows(&[[c(1.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        let e = eig_complex(&m).unwrap();
        assert!(e.defective, "max condition {}", e.max_condition);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            eig_complex(&ComplexMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = c(f64::NAN, 0.0);
        assert_eq!(eig_complex(&m).unwrap_err(), Error::NonFinite);
    }

    #[test]
    fn null_space_of_rank_one() {
        let m = ComplexMatrix::from_rows(&[[c(1.0, 0.0), c(1.0, 0.0)], [c(2.0, 0.0), c(2.0, 0.0)]]);
        let ns = null_space(&m, 1e-12).unwrap();
        assert_eq!(ns.len(), 1);
        let r = m.apply(&ns[0]);
        assert!(vec_norm(&r) < 1e-14);
    }

    #[test]
    fn multiset_distance_is_order_free() {
        let a = [c(1.0, 0.0), c(0.0, 1.0), c(0.0, 1.0)];
        let b = [c(0.0, 1.0), c(1.0, 1e-12), c(0.0, 1.0)];
        assert!(multiset_distance(&a, &b) < 2e-12);
        assert!(multiset_distance(&a, &b[..2]).is_infinite());
    }
}
