//! Fidelity under time-dependent pairings, on and off the fixed line.

use nhkitaev::dynamics::{evolve_driven, DriveSpec, Normalization};
use nhkitaev::model::ModelParams;

fn main() -> nhkitaev::Result<()> {
    let base = ModelParams::new(1.0, 1.0, 1.0, 0.0, 8)?;
    for zeta in [0.0, 0.5, 1.0] {
        let run = evolve_driven(&base, &DriveSpec::oscillating(zeta, 1e-2, 2.0)?, Normalization::Normalized)?;
        println!(
            "zeta {zeta}: max |F - 1| = {:.2e}, min F = {:.6}, halving error {:.1e}",
            run.series.max_deviation_from_one(),
            run.series.min_value(),
            run.step_halving_error
        );
    }
    Ok(())
}
