//! Biorthogonal mode operators and their canonical anticommutators.

use nhkitaev::model::{momentum_grid, ModelParams};
use nhkitaev::spectral::mode_basis;

fn main() -> nhkitaev::Result<()> {
    let p = ModelParams::new(1.0, 2.0, -0.5, 0.0, 16)?;
    for &k in &momentum_grid(p.n)?.pairs {
        println!("k = {k:.4}  canonical defect {:.2e}", mode_basis(&p, k)?.canonical_defect());
    }
    Ok(())
}
