use nhkitaev::model::{core_matrix, momentum_grid, pair_hamiltonian, ModelParams};
use nhkitaev::numerics::{eigenvalues, multiset_distance};
use nhkitaev::spectral::{band_energies, k_block, mode_basis, BandIndex};
use nhkitaev::Error;

#[test]
fn closed_form_matches_dense_on_a_large_grid() {
    for (a, b) in [(1.5, 0.5), (2.0, 0.0), (0.2, 1.7), (-0.4, 0.9)] {
        let p = ModelParams::new(1.0, a, b, 0.0, 64).unwrap();
        for &k in &momentum_grid(64).unwrap().pairs {
            let d = multiset_distance(&band_energies(&p, k).unwrap(), &eigenvalues(&core_matrix(&p, k).unwrap()).unwrap());
            assert!(d < 1e-10, "{a} {b} {k}: {d}");
        }
    }
}

#[test]
fn many_body_block_is_diagonal_in_the_modes() {
    let p = ModelParams::new(1.0, 1.8, 0.3, 0.0, 8).unwrap();
    for &k in &momentum_grid(8).unwrap().pairs {
        let blk = k_block(&p, k).unwrap();
        let h = pair_hamiltonian(&p, k).unwrap();
        let d = &h - &blk.basis.diagonal_form(&blk.energies);
        assert!(d.max_abs() < 1e-12);
    }
}

#[test]
fn lower_pair_is_the_lowest_block_level() {
    let p = ModelParams::new(1.0, 1.2, 0.4, 0.0, 8).unwrap();
    for &k in &momentum_grid(8).unwrap().pairs {
        let e = band_energies(&p, k).unwrap();
        let low = e[BandIndex::ALL[2].index()].re + e[BandIndex::ALL[3].index()].re;
        let block = eigenvalues(&pair_hamiltonian(&p, k).unwrap()).unwrap();
        assert!((block[0].re - low).abs() < 1e-10);
    }
}

#[test]
fn nonzero_mu_has_no_closed_form() {
    let p = ModelParams::new(1.0, 1.0, 0.5, 0.2, 8).unwrap();
    assert!(matches!(band_energies(&p, 1.0), Err(Error::NonzeroMu(_))));
    assert!(core_matrix(&p, 1.0).is_ok());
}

#[test]
fn canonical_relations_hold() {
    let p = ModelParams::new(0.8, 2.1, -0.6, 0.0, 8).unwrap();
    for k in [0.2, 1.1, 2.9] {
        assert!(mode_basis(&p, k).unwrap().canonical_defect() < 1e-12);
    }
}
