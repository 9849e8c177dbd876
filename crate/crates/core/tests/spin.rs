use nhkitaev::model::{fock_spectrum, Boundary, ModelParams};
use nhkitaev::numerics::{eigenvalues, inner, multiset_distance, vec_norm};
use nhkitaev::spectral::ground_energy;
use nhkitaev::spin::{
    build_spin_calh, build_spin_h0, ghz_pair, heisenberg_ring_check, spin_hamiltonian, spin_identity_report,
};

#[test]
fn identities_at_every_size() {
    for sites in [4, 6, 8, 10] {
        for c in spin_identity_report(sites, 1.0, &[0.5, 1.0, 2.0]).unwrap() {
            assert!(c.passed, "{sites}: {} {}", c.name, c.residual);
        }
    }
}

#[test]
fn ghz_levels_at_eight_sites() {
    let h = build_spin_h0(8).unwrap();
    let g = ghz_pair(8).unwrap();
    assert!((inner(&g.plus, &h.apply(&g.plus)).re + 6.0).abs() < 1e-12);
    assert!((inner(&g.minus, &h.apply(&g.minus)).re + 8.0).abs() < 1e-12);
    assert!(vec_norm(&build_spin_calh(8).unwrap().apply(&g.minus)) < 1e-12);
}

#[test]
fn spin_and_fermion_spectra_agree() {
    for (n, d) in [(2, 0.0), (2, 1.3), (4, 0.0), (4, 1.0)] {
        let p = ModelParams::on_fixed_line(1.0, 2.0, d, n).unwrap();
        let s = eigenvalues(&spin_hamiltonian(&p).unwrap().matrix).unwrap();
        let f = fock_spectrum(&p, Boundary::Periodic).unwrap();
        assert!(multiset_distance(&s, &f) < 1e-9);
    }
}

#[test]
fn ghz_minus_energy_matches_fermion_ground_energy() {
    for d in [0.5, 1.0, 2.0] {
        let p = ModelParams::on_fixed_line(1.0, 2.0, d, 4).unwrap();
        let g = ghz_pair(8).unwrap().minus;
        let e = inner(&g, &spin_hamiltonian(&p).unwrap().apply(&g));
        assert!((e.re - ground_energy(&p).unwrap()).abs() < 1e-11 && e.im.abs() < 1e-11);
    }
}

#[test]
fn heisenberg_term_leaves_ferromagnet_alone() {
    for sites in [4, 6, 8] {
        let r = heisenberg_ring_check(sites).unwrap();
        assert!(r.annihilation_right <= 1e-14 && r.annihilation_left <= 1e-14);
        assert!((r.ring_eigenvalue - sites as f64).abs() < 1e-12);
    }
}

#[test]
fn size_guard() {
    assert!(build_spin_h0(14).is_err());
    assert!(build_spin_h0(5).is_err());
}
