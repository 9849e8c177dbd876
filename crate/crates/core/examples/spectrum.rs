//! Quasiparticle bands on the momentum grid, checked against the dense core matrix.

use nhkitaev::model::{core_matrix, momentum_grid, ModelParams};
use nhkitaev::numerics::{eigenvalues, multiset_distance};
use nhkitaev::spectral::band_energies;

fn main() -> nhkitaev::Result<()> {
    let p = ModelParams::new(1.0, 1.5, 0.5, 0.0, 8)?;
    println!("k,re_e1,im_e1,re_e2,im_e2,dense_distance");
    for &k in &momentum_grid(p.n)?.pairs {
        let e = band_energies(&p, k)?;
        let d = multiset_distance(&e, &eigenvalues(&core_matrix(&p, k)?)?);
        println!("{k:.6},{:.9},{:.9},{:.9},{:.9},{d:.1e}", e[0].re, e[0].im, e[1].re, e[1].im);
    }
    Ok(())
}
