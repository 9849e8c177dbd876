use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use serde_json::{json, Value};

use super::config::{CommandName, RunConfig};
use crate::dynamics::{evolve_driven, evolve_quench, fock_quench_fidelity, scan_quench, DriveSpec, Normalization, TimeGrid};
use crate::error::{Error, Result};
use crate::majorana::{
    build_majorana, edge_state, resonance, Branch, fit_cell_slope, ladder_ground_energy, ladder_spectrum, profile_table,
    zero_mode_residuals, zero_modes, Sublattice,
};
use crate::model::{core_matrix, fock_hamiltonian, fock_spectrum, momentum_grid, Boundary, ModelParams};
use crate::numerics::{eigenvalues, multiset_distance};
use crate::spectral::{band_energies, ground_energy, ground_state, mode_basis, BandIndex};
use crate::spin::{heisenberg_ring_check, spin_fixed_line_operator, spin_identity_report, IdentityCheck};

/// What a command produced.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub files: Vec<PathBuf>,
    pub summary: String,
    /// Set when a verification command found a failing check.
    pub failed: bool,
}

struct Writer<'a> {
    cfg: &'a RunConfig,
    files: Vec<PathBuf>,
}

impl<'a> Writer<'a> {
    fn new(cfg: &'a RunConfig) -> Result<Self> {
        fs::create_dir_all(&cfg.out_dir)?;
        Ok(Self { cfg, files: Vec::new() })
    }

    fn text(&mut self, name: &str, body: &str) -> Result<()> {
        let path = self.cfg.out_dir.join(name);
        fs::write(&path, body)?;
        self.files.push(path);
        Ok(())
    }

    fn sidecar(&mut self, results: Value) -> Result<()> {
        let meta = json!({
            "command": self.cfg.command.as_str(),
            "version": env!("CARGO_PKG_VERSION"),
            "config": self.cfg,
            "results": results,
        });
        let body = serde_json::to_string_pretty(&meta).map_err(|e| Error::Io(e.to_string()))? + "\n";
        self.text(&format!("{}.json", self.cfg.command.as_str()), &body)
    }

    fn finish(self, summary: String, failed: bool) -> Outcome {
        Outcome {
            files: self.files,
            summary,
            failed,
        }
    }
}

fn e16(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    match cfg.command {
        CommandName::Spectrum => spectrum(cfg),
        CommandName::GroundState => ground(cfg),
        CommandName::FixedLineDrive => drive(cfg),
        CommandName::QuenchScan => scan(cfg),
        CommandName::ZeroModes => modes(cfg),
        CommandName::LadderEnergy => ladder(cfg),
        CommandName::SpinCheck => spin(cfg),
        CommandName::HeisenbergCheck => heisenberg(cfg),
        CommandName::OracleVerify => oracles(cfg),
    }
}

fn spectrum(cfg: &RunConfig) -> Result<Outcome> {
    let p = cfg.params()?;
    let mut w = Writer::new(cfg)?;
    let mut csv = String::from("k,rho,sigma,re,im\n");
    let mut worst = 0.0f64;
    for &k in &momentum_grid(p.n)?.pairs {
        let e = band_energies(&p, k)?;
        for b in BandIndex::ALL {
            let z = e[b.index()];
            let _ = writeln!(csv, "{},{},{},{},{}", e16(k), b.rho, b.sigma, e16(z.re), e16(z.im));
        }
        worst = worst.max(multiset_distance(&e, &eigenvalues(&core_matrix(&p, k)?)?));
    }
    w.text("spectrum.csv", &csv)?;
    w.sidecar(json!({ "max_deviation_from_dense": worst }))?;
    Ok(w.finish(format!("spectrum: closed form vs dense max deviation {}", e16(worst)), false))
}

fn ground(cfg: &RunConfig) -> Result<Outcome> {
    let p = cfg.params()?;
    let g = ground_state(&p)?;
    let mut w = Writer::new(cfg)?;
    let mut csv = String::from("block,kind,k,index,re,im\n");
    let blocks = g.blocks();
    for (b, v) in blocks.iter().enumerate() {
        let (kind, k) = if b == 0 { ("boundary", 0.0) } else { ("pair", g.pair_vectors[b - 1].0) };
        for (i, z) in v.amplitudes.iter().enumerate() {
            let _ = writeln!(csv, "{b},{kind},{},{i},{},{}", e16(k), e16(z.re), e16(z.im));
        }
    }
    w.text("ground-state.csv", &csv)?;
    w.sidecar(json!({
        "energy_re": g.energy.re,
        "energy_im": g.energy.im,
        "pair_sum": p.pair_sum(),
        "imbalance": p.imbalance(),
        "blocks": blocks.len(),
    }))?;
    Ok(w.finish(format!("ground energy {}", e16(g.energy.re)), false))
}

fn drive(cfg: &RunConfig) -> Result<Outcome> {
    let base = ModelParams::new(cfg.j, 1.0, 1.0, 0.0, cfg.n)?;
    let spec = DriveSpec::oscillating(cfg.zeta, cfg.dt, cfg.horizon)?;
    let run = evolve_driven(&base, &spec, cfg.normalization.into())?;
    let mut w = Writer::new(cfg)?;
    w.text("fixed-line-drive.csv", &run.series.to_csv())?;
    w.sidecar(json!({
        "max_deviation_from_one": run.series.max_deviation_from_one(),
        "step_halving_error": run.step_halving_error,
        "converged": run.converged,
        "policy": run.series.policy,
    }))?;
    Ok(w.finish(
        format!(
            "fixed-line drive zeta {}: max |F - 1| {}, step halving {}",
            cfg.zeta,
            e16(run.series.max_deviation_from_one()),
            e16(run.step_halving_error)
        ),
        false,
    ))
}

fn scan(cfg: &RunConfig) -> Result<Outcome> {
    let family = cfg.quench_family()?;
    let r = scan_quench(&family, &cfg.time_grid()?, &cfg.values, cfg.threshold, cfg.normalization.into())?;
    let mut w = Writer::new(cfg)?;
    w.text("quench-scan.csv", &r.to_csv())?;
    w.sidecar(json!({
        "family": r.family,
        "parameter": family.parameter_name(),
        "parameters": r.parameters,
        "threshold": r.threshold,
        "policy": r.policy,
        "drop_times": r.drop_times,
        "failures": r.failures,
    }))?;
    let drops: Vec<String> = r
        .drop_times
        .iter()
        .map(|d| d.map_or_else(|| "none".to_string(), e16))
        .collect();
    let failed = r.failures.iter().any(Option::is_some);
    Ok(w.finish(format!("drop times: {}", drops.join(", ")), failed))
}

fn modes(cfg: &RunConfig) -> Result<Outcome> {
    let p = cfg.params()?;
    let pair = zero_modes(&p, cfg.branch.into())?;
    let (rl, rr) = zero_mode_residuals(&p, &pair)?;
    let slope = fit_cell_slope(&pair.psi_l, Sublattice::A).or_else(|_| fit_cell_slope(&pair.psi_l, Sublattice::B));
    let mut w = Writer::new(cfg)?;
    w.text("zero-modes-left.csv", &profile_table(&pair.psi_l))?;
    w.text("zero-modes-right.csv", &profile_table(&pair.psi_r))?;
    w.text("zero-modes-edge.csv", &profile_table(&edge_state(&pair)?))?;
    w.sidecar(json!({
        "resonance": pair.resonance,
        "lambda": pair.lambda,
        "residual_left": rl,
        "residual_right": rr,
        "left_cell_slope": slope.ok(),
        "log_abs_gamma": pair.resonance.gamma.abs().ln(),
    }))?;
    Ok(w.finish(
        format!("lambda {}: residuals {} {}", e16(pair.lambda), e16(rl), e16(rr)),
        false,
    ))
}

fn ladder(cfg: &RunConfig) -> Result<Outcome> {
    let p = cfg.params()?;
    let e = ladder_ground_energy(&p)?;
    let mut levels = ladder_spectrum(&p)?;
    levels.sort_by(crate::numerics::cmp_complex);
    let mut csv = String::from("index,re,im\n");
    for (i, z) in levels.iter().enumerate() {
        let _ = writeln!(csv, "{i},{},{}", e16(z.re), e16(z.im));
    }
    let mut w = Writer::new(cfg)?;
    w.text("ladder-energy.csv", &csv)?;
    w.sidecar(json!({
        "closed_form": e.closed_form,
        "numeric_sum": e.numeric_sum,
        "eccentricity": e.eccentricity,
        "relative_gap": e.relative_gap(),
    }))?;
    Ok(w.finish(
        format!("ladder energy {} vs closed form {}", e16(e.numeric_sum), e16(e.closed_form)),
        false,
    ))
}

fn checks_csv(rows: &[IdentityCheck]) -> String {
    let mut csv = String::from("check,residual,tolerance,passed\n");
    for c in rows {
        let _ = writeln!(csv, "{},{},{},{}", c.name, e16(c.residual), e16(c.tolerance), c.passed);
    }
    csv
}

fn checks_outcome(mut w: Writer<'_>, rows: &[IdentityCheck]) -> Result<Outcome> {
    let name = w.cfg.command.as_str();
    w.text(&format!("{name}.csv"), &checks_csv(rows))?;
    let failing: Vec<&str> = rows.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    w.sidecar(json!({ "checks": rows, "failing": failing }))?;
    let passed = rows.len() - failing.len();
    Ok(w.finish(format!("{passed}/{} checks passed", rows.len()), !failing.is_empty()))
}

fn spin(cfg: &RunConfig) -> Result<Outcome> {
    let mut imbalances = vec![0.5, 1.0, 2.0];
    let d = cfg.delta_a - cfg.delta_b;
    if !imbalances.contains(&d) {
        imbalances.push(d);
    }
    let rows = spin_identity_report(cfg.sites, cfg.j, &imbalances)?;
    checks_outcome(Writer::new(cfg)?, &rows)
}

fn heisenberg(cfg: &RunConfig) -> Result<Outcome> {
    let r = heisenberg_ring_check(cfg.sites)?;
    let rows = vec![
        check("added term on right-polarized state", r.annihilation_right, 1e-14),
        check("added term on left-polarized state", r.annihilation_left, 1e-14),
        check("ring eigenvalue unchanged", r.combined_residual, 1e-12),
    ];
    let mut w = Writer::new(cfg)?;
    w.text("heisenberg-check.csv", &checks_csv(&rows))?;
    let failing = rows.iter().any(|c| !c.passed);
    w.sidecar(json!({ "report": r, "checks": rows }))?;
    Ok(w.finish(
        format!("ring eigenvalue {}, annihilation {}", e16(r.ring_eigenvalue), e16(r.annihilation_right)),
        failing,
    ))
}

fn check(name: impl Into<String>, residual: f64, tolerance: f64) -> IdentityCheck {
    let name = name.into();
    IdentityCheck {
        passed: residual <= tolerance,
        name,
        residual,
        tolerance,
    }
}

/// Brute-force cross-checks at small sizes with the configured couplings.
pub fn oracle_checks(j: f64, delta_a: f64, delta_b: f64, mu: f64) -> Result<Vec<IdentityCheck>> {
    let mut rows = Vec::new();
    for n in [2usize, 4] {
        let p = ModelParams::new(j, delta_a, delta_b, 0.0, n)?;
        let g = ground_state(&p)?;
        let psi = g.to_real_space()?;
        let h = fock_hamiltonian(&p, Boundary::Periodic)?;
        let hv = h.apply(&psi.amplitudes);
        let e = ground_energy(&p)?;
        let r: f64 = hv
            .iter()
            .zip(&psi.amplitudes)
            .map(|(a, b)| (a - b * e).norm_sqr())
            .sum::<f64>()
            .sqrt();
        rows.push(check(format!("ground state eigenvector, N={n}"), r, 1e-10));
    }
    let p = ModelParams::new(j, delta_a, delta_b, 0.0, 16)?;
    let mut spec = 0.0f64;
    let mut canon = 0.0f64;
    for &k in &momentum_grid(p.n)?.pairs {
        spec = spec.max(multiset_distance(&band_energies(&p, k)?, &eigenvalues(&core_matrix(&p, k)?)?));
        canon = canon.max(mode_basis(&p, k)?.canonical_defect());
    }
    rows.push(check("closed-form bands vs dense, N=16", spec, 1e-10));
    rows.push(check("canonical mode algebra, N=16", canon, 1e-12));

    let fl = ModelParams::on_fixed_line(j, 2.0 * j, delta_a - delta_b, 4)?;
    let s = eigenvalues(&spin_fixed_line_operator(8, fl.j, fl.imbalance())?.matrix)?;
    let f = fock_spectrum(&fl, Boundary::Periodic)?;
    rows.push(check("spin vs fermion spectrum, 2N=8", multiset_distance(&s, &f), 1e-9));

    let pre = ModelParams::new(j, delta_a, delta_b, 0.0, 2)?;
    let pos = pre.with_mu(if mu == 0.0 { 0.05 } else { mu });
    let times = TimeGrid::new(10.0, 200)?.times();
    let a = evolve_quench(&pre, &pos, &times, Normalization::Normalized)?;
    let b = fock_quench_fidelity(&pre, &pos, &times, Normalization::Normalized)?;
    let d = a.values.iter().zip(&b.values).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    rows.push(check("block vs full-chain quench fidelity, N=2", d, 1e-9));

    let lp = ModelParams::new(j, delta_a, delta_b, 0.0, 8)?;
    let dense = eigenvalues(&build_majorana(&lp, 0.0)?.matrix)?;
    rows.push(check(
        "ladder spectrum vs dense, N=8",
        multiset_distance(&ladder_spectrum(&lp)?, &dense),
        1e-9,
    ));
    if let Ok(res) = resonance(&lp) {
        for branch in [Branch::Minus, Branch::Plus] {
            if res.lambda(branch).is_finite() {
                let pair = zero_modes(&lp, branch)?;
                let (rl, rr) = zero_mode_residuals(&lp, &pair)?;
                rows.push(check(format!("zero modes {branch:?}, N=8"), rl.max(rr), 1e-10));
            }
        }
    }
    Ok(rows)
}

fn oracles(cfg: &RunConfig) -> Result<Outcome> {
    let rows = oracle_checks(cfg.j, cfg.delta_a, cfg.delta_b, cfg.mu)?;
    checks_outcome(Writer::new(cfg)?, &rows)
}
