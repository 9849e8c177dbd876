//! Ground-state energy and block overlaps as the imbalance moves along a line of constant sum.

use nhkitaev::model::ModelParams;
use nhkitaev::spectral::{ground_energy, ground_state};

fn main() -> nhkitaev::Result<()> {
    let reference = ground_state(&ModelParams::on_fixed_line(1.0, 3.0, 0.0, 8)?)?;
    for d in [0.0, 0.5, 1.0, 2.0, 4.0] {
        let p = ModelParams::on_fixed_line(1.0, 3.0, d, 8)?;
        let worst = ground_state(&p)?
            .block_overlaps(&reference)?
            .into_iter()
            .map(|o| (o - 1.0).abs())
            .fold(0.0, f64::max);
        println!("imbalance {d:>4}: E = {:.12}, max |overlap - 1| = {worst:.1e}", ground_energy(&p)?);
    }
    Ok(())
}
