//! Ladder ground energy: finite sum, dense diagonalisation and the elliptic closed form.

use nhkitaev::majorana::{ladder_ground_energy, ladder_ground_energy_dense};
use nhkitaev::model::ModelParams;

fn main() -> nhkitaev::Result<()> {
    for n in [4, 8, 16, 32] {
        let p = ModelParams::new(1.0, 2.0, 1.0, 0.0, n)?;
        let e = ladder_ground_energy(&p)?;
        let dense = if n <= 16 { format!("{:.12}", ladder_ground_energy_dense(&p)?) } else { "-".into() };
        println!(
            "N = {n:>3}: sum {:.12}  closed {:.12}  dense {dense}  gap {:.1e}",
            e.numeric_sum,
            e.closed_form,
            e.relative_gap()
        );
    }
    Ok(())
}
