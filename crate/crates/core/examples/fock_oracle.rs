//! Brute-force Fock-space checks of the momentum-block results on small chains.

use nhkitaev::dynamics::{evolve_quench, fock_quench_fidelity, Normalization, TimeGrid};
use nhkitaev::model::{fock_spectrum, Boundary, ModelParams};
use nhkitaev::spectral::ground_energy;

fn main() -> nhkitaev::Result<()> {
    for n in [2, 4] {
        let p = ModelParams::new(1.0, 1.5, 0.5, 0.0, n)?;
        let lowest = fock_spectrum(&p, Boundary::Periodic)?.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        println!("N = {n}: block energy {:.12}, Fock minimum {lowest:.12}", ground_energy(&p)?);

        let t = TimeGrid::new(10.0, 50)?.times();
        let a = evolve_quench(&p, &p.with_mu(0.1), &t, Normalization::Normalized)?;
        let b = fock_quench_fidelity(&p, &p.with_mu(0.1), &t, Normalization::Normalized)?;
        let worst = a.values.iter().zip(&b.values).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        println!("       quench fidelity max difference {worst:.1e}");
    }
    Ok(())
}
