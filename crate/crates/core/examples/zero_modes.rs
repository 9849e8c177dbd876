//! Majorana zero modes at the resonant coupling, with residuals and decay slope.

use nhkitaev::majorana::{
    edge_state, fit_cell_slope, profile_table, zero_mode_residuals, zero_modes, Branch, Sublattice,
};
use nhkitaev::model::ModelParams;

fn main() -> nhkitaev::Result<()> {
    let p = ModelParams::new(1.0, 2.0, 0.0, 0.0, 8)?;
    let z = zero_modes(&p, Branch::Minus)?;
    let (l, r) = zero_mode_residuals(&p, &z)?;
    println!("lambda = {:.7}, gamma = {:.6}", z.lambda, z.resonance.gamma);
    println!("residuals {l:.1e} {r:.1e}");
    println!("cell slope {:.6}", fit_cell_slope(&z.psi_l, Sublattice::A)?);
    print!("{}", profile_table(&edge_state(&z)?));
    Ok(())
}
