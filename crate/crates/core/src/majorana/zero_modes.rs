//! Resonant impurity strengths and the closed-form zero modes of `h_D`.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::lattice::{build_majorana, index_a, index_b, require_zero_mu};
use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::numerics::vec_norm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `λ₊ = 1 − γ^{−N}`
    Plus,
    /// `λ₋ = 1 − γ^{N}`
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResonanceData {
    pub gamma: f64,
    pub beta: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
}

impl ResonanceData {
    pub fn lambda(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Plus => self.lambda_plus,
            Branch::Minus => self.lambda_minus,
        }
    }
}

/// `sgn(γ)^e · |γ|^(e − shift)` evaluated through logarithms.
fn scaled_power(gamma: f64, e: i64, shift: i64) -> f64 {
    if gamma == 0.0 {
        return if e == 0 { 1.0 } else { 0.0 };
    }
    let sign = if gamma < 0.0 && e.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
    sign * ((e - shift) as f64 * gamma.abs().ln()).exp()
}

pub fn resonance(p: &ModelParams) -> Result<ResonanceData> {
    p.validate()?;
    require_zero_mu(p)?;
    let (j, a, b) = (p.j, p.delta_a, p.delta_b);
    let denom = 2.0 * (j * j - a * b);
    if denom.abs() < 1e-14 * (j * j + a.abs() * b.abs()).max(1e-300) {
        return Err(Error::SingularResonance(format!(
            "J^2 = delta_a * delta_b ({} vs {})",
            j * j,
            a * b
        )));
    }
    let root = ((a - b).powi(2) + 4.0 * j * j).sqrt();
    let gamma = ((a + b).abs() * root - 2.0 * j * j - a * a - b * b) / denom;
    let beta = if a == b {
        0.0
    } else {
        ((4.0 * j * j + (b - a).powi(2)).sqrt() - 2.0 * j) / (b - a)
    };
    let n = p.n as i64;
    let lambda_minus = 1.0 - scaled_power(gamma, n, 0);
    let lambda_plus = if gamma == 0.0 {
        f64::NEG_INFINITY
    } else {
        1.0 - scaled_power(gamma, -n, 0)
    };
    Ok(ResonanceData {
        gamma,
        beta,
        lambda_plus,
        lambda_minus,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroModePair {
    pub branch: Branch,
    pub lambda: f64,
    pub resonance: ResonanceData,
    pub psi_l: Vec<Complex64>,
    pub psi_r: Vec<Complex64>,
}

/// Both zero modes at `λ = λ_branch`, each scaled so its largest geometric
/// weight is one.
pub fn zero_modes(p: &ModelParams, branch: Branch) -> Result<ZeroModePair> {
    let res = resonance(p)?;
    let lambda = res.lambda(branch);
    if !lambda.is_finite() {
        return Err(Error::SingularResonance(format!(
            "lambda for {branch:?} branch is not finite (gamma = {})",
            res.gamma
        )));
    }
    let (n, sites) = (p.n, p.sites());
    let (g, beta) = (res.gamma, res.beta);
    let grows = g.abs() > 1.0;
    // weights γ^{j−1} (left) and γ^{N−j} (right), j = 1..N
    let left_shift = if grows { n as i64 - 1 } else { 0 };
    let right_shift = if grows { 0 } else { n as i64 - 1 };
    let zero = Complex64::new(0.0, 0.0);
    let mut psi_l = vec![zero; 2 * sites];
    let mut psi_r = vec![zero; 2 * sites];
    let c = |x: f64| Complex64::new(x, 0.0);
    for j in 1..=n {
        let wl = scaled_power(g, j as i64 - 1, left_shift);
        let wr = scaled_power(g, n as i64 - j as i64, n as i64 - 1 - right_shift);
        let (odd, even) = (2 * j - 1, 2 * j);
        match branch {
            Branch::Minus => {
                psi_l[index_a(odd, sites)] += c(wl);
                psi_l[index_b(odd, sites)] += c(beta * wl);
                psi_r[index_b(even, sites)] += c(wr);
                psi_r[index_a(even, sites)] += c(beta * wr);
            }
            Branch::Plus => {
                psi_r[index_b(odd, sites)] += c(wr);
                psi_r[index_a(odd, sites)] += c(-beta * wr);
                psi_l[index_a(even, sites)] += c(wl);
                psi_l[index_b(even, sites)] += c(-beta * wl);
            }
        }
    }
    Ok(ZeroModePair {
        branch,
        lambda,
        resonance: res,
        psi_l,
        psi_r,
    })
}

/// `(‖h_D ψ_L‖/‖ψ_L‖, ‖h_D ψ_R‖/‖ψ_R‖)` with `h_D` built at the pair's `λ`.
pub fn zero_mode_residuals(p: &ModelParams, pair: &ZeroModePair) -> Result<(f64, f64)> {
    let h = build_majorana(p, pair.lambda)?.matrix;
    let rel = |v: &[Complex64]| vec_norm(&h.apply(v)) / vec_norm(v);
    Ok((rel(&pair.psi_l), rel(&pair.psi_r)))
}

/// `ψ_E = ψ_R/(√2‖ψ_R‖) + ψ_L/(√2‖ψ_L‖)`.
pub fn edge_state(pair: &ZeroModePair) -> Result<Vec<Complex64>> {
    let (nl, nr) = (vec_norm(&pair.psi_l), vec_norm(&pair.psi_r));
    if nl == 0.0 || nr == 0.0 {
        return Err(Error::InvalidParameter("zero-norm mode in edge state".into()));
    }
    let s = std::f64::consts::SQRT_2;
    Ok(pair
        .psi_r
        .iter()
        .zip(&pair.psi_l)
        .map(|(r, l)| r / (s * nr) + l / (s * nl))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sublattice {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow {
    /// 1-based chain site.
    pub site: usize,
    pub sublattice: Sublattice,
    pub re: f64,
    pub im: f64,
    pub abs: f64,
}

/// One row per ladder component, in basis order.
pub fn profile(psi: &[Complex64]) -> Vec<ProfileRow> {
    psi.iter()
        .enumerate()
        .map(|(i, z)| ProfileRow {
            site: i / 2 + 1,
            sublattice: if i % 2 == 0 { Sublattice::A } else { Sublattice::B },
            re: z.re,
            im: z.im,
            abs: z.norm(),
        })
        .collect()
}

/// Plain-text table `site,sublattice,re,im,abs`.
pub fn profile_table(psi: &[Complex64]) -> String {
    let mut out = String::from("site,sublattice,re,im,abs\n");
    for r in profile(psi) {
        let tag = match r.sublattice {
            Sublattice::A => "A",
            Sublattice::B => "B",
        };
        let _ = writeln!(out, "{},{},{:.16e},{:.16e},{:.16e}", r.site, tag, r.re, r.im, r.abs);
    }
    out
}

/// Least-squares slope of `ln|ψ(l, sub)|` against the cell index `⌈l/2⌉`,
/// over the nonzero components of one sublattice.
pub fn fit_cell_slope(psi: &[Complex64], sub: Sublattice) -> Result<f64> {
    let offset = match sub {
        Sublattice::A => 0,
        Sublattice::B => 1,
    };
    let max = psi.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let pts: Vec<(f64, f64)> = psi
        .iter()
        .enumerate()
        .filter(|(i, z)| i % 2 == offset && z.norm() > 1e-300 && z.norm() > 1e-14 * max)
        .map(|(i, z)| {
            let site = i / 2 + 1;
            (site.div_ceil(2) as f64, z.norm().ln())
        })
        .collect();
    if pts.len() < 2 {
        return Err(Error::EmptySeries);
    }
    let n = pts.len() as f64;
    let (mx, my) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x / n, b + y / n));
    let (sxy, sxx) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| {
        (a + (x - mx) * (y - my), b + (x - mx) * (x - mx))
    });
    if sxx == 0.0 {
        return Err(Error::EmptySeries);
    }
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, n: usize) -> ModelParams {
        ModelParams::new(1.0, a, b, 0.0, n).unwrap()
    }

    fn residual(q: &ModelParams, pair: &ZeroModePair) -> (f64, f64) {
        zero_mode_residuals(q, pair).unwrap()
    }

    #[test]
    fn gamma_and_beta_values() {
        let r = resonance(&p(2.0, 0.0, 4)).unwrap();
        assert!((r.gamma - (2.0 * 2f64.sqrt() - 3.0)).abs() < 1e-15);
        assert!((r.beta - (1.0 - 2f64.sqrt())).abs() < 1e-15);
        assert!((r.lambda_minus - (1.0 - r.gamma.powi(4))).abs() < 1e-15);
        assert!((r.lambda_minus - 0.9991334).abs() < 1e-6);
        let r = resonance(&p(0.5, 0.5, 4)).unwrap();
        assert!((r.gamma + 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.beta, 0.0);
    }

    #[test]
    fn singular_denominator() {
        assert!(matches!(resonance(&p(1.0, 1.0, 4)), Err(Error::SingularResonance(_))));
    }

    #[test]
    fn residuals_vanish() {
        for (a, b) in [(2.0, 0.0), (1.5, 0.5), (0.5, 0.5), (0.3, 1.2)] {
            for n in [4, 8, 16] {
                for br in [Branch::Minus, Branch::Plus] {
                    let q = p(a, b, n);
                    let (rl, rr) = residual(&q, &zero_modes(&q, br).unwrap());
                    assert!(rl < 1e-10 && rr < 1e-10, "{a} {b} {n} {br:?}: {rl} {rr}");
                }
            }
        }
    }

    #[test]
    fn hermitian_limit_single_sublattice() {
        let z = zero_modes(&p(0.5, 0.5, 8), Branch::Minus).unwrap();
        for (i, v) in z.psi_l.iter().enumerate() {
            if i % 2 == 1 {
                assert_eq!(v.norm(), 0.0);
            }
        }
        let a: Vec<f64> = (1..=8).map(|j| z.psi_l[index_a(2 * j - 1, 16)].re).collect();
        for w in a.windows(2) {
            assert!((w[1] / w[0] + 1.0 / 3.0).abs() < 1e-14);
        }
    }

    #[test]
    fn slope_matches_log_gamma() {
        let q = p(2.0, 0.0, 8);
        let z = zero_modes(&q, Branch::Minus).unwrap();
        let s = fit_cell_slope(&z.psi_l, Sublattice::A).unwrap();
        assert!((s - (3.0 - 2.0 * 2f64.sqrt()).ln()).abs() < 1e-10);
    }

    #[test]
    fn edge_state_norm_and_profile() {
        let z = zero_modes(&p(2.0, 0.0, 8), Branch::Plus).unwrap();
        let e = edge_state(&z).unwrap();
        assert!(vec_norm(&e) <= 2f64.sqrt() + 1e-14);
        assert_eq!(profile(&e).len(), 32);
        assert_eq!(profile_table(&e).lines().count(), 33);
    }

    #[test]
    fn large_n_stays_finite() {
        let z = zero_modes(&p(2.0, 0.0, 64), Branch::Plus).unwrap();
        assert!(z.psi_l.iter().chain(&z.psi_r).all(|v| v.re.is_finite()));
        assert!(z.lambda.is_finite());
    }
}
