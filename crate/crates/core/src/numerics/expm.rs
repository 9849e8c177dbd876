//! Matrix exponential.
//!
//! Well-conditioned diagonalizable inputs go through the eigendecomposition
//! `V e^Λ V⁻¹`. Everything else (defective or nearly defective matrices, as
//! met at exceptional points) uses scaling and squaring with the degree-13
//! Padé approximant of Higham (2005).

use faer::linalg::solvers::DenseSolveCore;
use num_complex::Complex64;

use super::eigen::eig_complex;
use super::matrix::ComplexMatrix;
use super::MAX_DENSE_DIM;
use crate::error::{Error, Result};

/// Inputs with a 1-norm above this are rejected.
pub const EXPM_NORM_LIMIT: f64 = 1e5;

/// Largest eigenvalue condition number accepted by the spectral route.
pub const EIGEN_ROUTE_MAX_CONDITION: f64 = 1e3;

const THETA_13: f64 = 5.371_920_351_148_152;

const PADE_13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

fn check(m: &ComplexMatrix) -> Result<f64> {
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
    let norm = m.norm_1();
    if norm > EXPM_NORM_LIMIT {
        return Err(Error::ExpOverflow {
            norm,
            limit: EXPM_NORM_LIMIT,
        });
    }
    Ok(norm)
}

fn finite_or_overflow(out: ComplexMatrix, norm: f64) -> Result<ComplexMatrix> {
    if out.is_finite() {
        Ok(out)
    } else {
        Err(Error::ExpOverflow {
            norm,
            limit: EXPM_NORM_LIMIT,
        })
    }
}

/// Matrix exponential `e^M`.
pub fn expm(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let norm = check(m)?;
    if m.rows() == 0 {
        return Ok(ComplexMatrix::zeros(0, 0));
    }
    if let Ok(evd) = eig_complex(m) {
        if !evd.defective && evd.max_condition <= EIGEN_ROUTE_MAX_CONDITION {
            return finite_or_overflow(evd.reconstruct_with(|z| z.exp()), norm);
        }
    }
    finite_or_overflow(pade_scaling_squaring(m, norm), norm)
}

/// Scaling-and-squaring exponential, bypassing the spectral route.
pub fn expm_pade(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let norm = check(m)?;
    if m.rows() == 0 {
        return Ok(ComplexMatrix::zeros(0, 0));
    }
    finite_or_overflow(pade_scaling_squaring(m, norm), norm)
}

fn pade_scaling_squaring(m: &ComplexMatrix, norm: f64) -> ComplexMatrix {
    let n = m.rows();
    let squarings = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil() as i32
    } else {
        0
    };
    let a = m.scale_real(0.5f64.powi(squarings));
    let id = ComplexMatrix::identity(n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let b = |i: usize| Complex64::new(PADE_13[i], 0.0);

    let mut inner_u = a6.scale(b(13));
    inner_u.add_scaled(b(11), &a4);
    inner_u.add_scaled(b(9), &a2);
    let mut u = &a6 * &inner_u;
    u.add_scaled(b(7), &a6);
    u.add_scaled(b(5), &a4);
    u.add_scaled(b(3), &a2);
    u.add_scaled(b(1), &id);
    let u = &a * &u;

    let mut inner_v = a6.scale(b(12));
    inner_v.add_scaled(b(10), &a4);
    inner_v.add_scaled(b(8), &a2);
    let mut v = &a6 * &inner_v;
    v.add_scaled(b(6), &a6);
    v.add_scaled(b(4), &a4);
    v.add_scaled(b(2), &a2);
    v.add_scaled(b(0), &id);

    let denom = &v - &u;
    let numer = &v + &u;
    let inv = denom.to_faer().partial_piv_lu().inverse();
    let mut r = &ComplexMatrix::from_faer(inv.as_ref()) * &numer;
    for _ in 0..squarings {
        r = &r * &r;
    }
    r
}
