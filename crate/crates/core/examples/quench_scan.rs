//! Quench from mu = 0 to small mu across pairing ratios, reporting when fidelity halves.

use nhkitaev::dynamics::{scan_quench, Normalization, QuenchFamily, TimeGrid};

fn main() -> nhkitaev::Result<()> {
    let family = QuenchFamily::Ratio { j: 1.0, sum: 3.0, mu: 0.01, n: 16 };
    let ratios = [1.0, 1.5, 2.0, 3.0];
    let scan = scan_quench(&family, &TimeGrid::new(30.0, 300)?, &ratios, 0.5, Normalization::Normalized)?;
    for (x, t) in ratios.iter().zip(&scan.drop_times) {
        match t {
            Some(t) => println!("ratio {x}: drop at t = {t:.3}"),
            None => println!("ratio {x}: no drop"),
        }
    }
    Ok(())
}
