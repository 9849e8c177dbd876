use nhkitaev::majorana::{
    build_majorana, edge_state, fit_cell_slope, ladder_ground_energy, ladder_ground_energy_dense,
    ladder_spectrum, profile_table, resonance, zero_mode_residuals, zero_modes, Branch, Sublattice,
};
use nhkitaev::model::ModelParams;
use nhkitaev::numerics::{eigenvalues, multiset_distance};

fn p(a: f64, b: f64, n: usize) -> ModelParams {
    ModelParams::new(1.0, a, b, 0.0, n).unwrap()
}

#[test]
fn zero_modes_are_annihilated() {
    for (a, b) in [(2.0, 0.0), (1.5, 0.5), (0.5, 0.5)] {
        for n in [4, 8, 16] {
            for br in [Branch::Minus, Branch::Plus] {
                let q = p(a, b, n);
                let (l, r) = zero_mode_residuals(&q, &zero_modes(&q, br).unwrap()).unwrap();
                assert!(l <= 1e-10 && r <= 1e-10);
            }
        }
    }
}

#[test]
fn resonance_value() {
    let r = resonance(&p(2.0, 0.0, 4)).unwrap();
    assert!((r.lambda_minus - 0.9991334).abs() < 1e-6);
}

#[test]
fn left_mode_decays_at_the_rate_gamma() {
    for (a, b) in [(2.0, 0.0), (1.5, 0.5)] {
        let q = p(a, b, 8);
        let z = zero_modes(&q, Branch::Minus).unwrap();
        let s = fit_cell_slope(&z.psi_l, Sublattice::A).unwrap();
        assert!((s - z.resonance.gamma.abs().ln()).abs() < 1e-6);
    }
}

#[test]
fn edge_state_table_has_one_row_per_component() {
    let z = zero_modes(&p(2.0, 0.0, 8), Branch::Minus).unwrap();
    let t = profile_table(&edge_state(&z).unwrap());
    let rows: Vec<&str> = t.lines().collect();
    assert_eq!(rows[0], "site,sublattice,re,im,abs");
    assert_eq!(rows.len(), 1 + 32);
    assert!(rows[1].starts_with("1,A,"));
    assert!(rows[2].starts_with("1,B,"));
}

#[test]
fn ladder_spectrum_matches_dense() {
    for (a, b) in [(1.5, 0.5), (2.0, 1.0), (0.3, -0.8)] {
        let q = p(a, b, 8);
        let dense = eigenvalues(&build_majorana(&q, 0.0).unwrap().matrix).unwrap();
        assert!(multiset_distance(&ladder_spectrum(&q).unwrap(), &dense) < 1e-9);
    }
}

#[test]
fn ladder_energy_converges_to_the_elliptic_form() {
    let q = p(2.0, 1.0, 64);
    let e = ladder_ground_energy(&q).unwrap();
    assert!(e.relative_gap() < 1e-10);
    assert!((ladder_ground_energy_dense(&q).unwrap() - e.numeric_sum).abs() < 1e-9);
    let exact = ladder_ground_energy(&p(1.5, 0.5, 128)).unwrap();
    assert!((exact.numeric_sum + 128.0).abs() < 1e-9);
    assert!((exact.closed_form + 128.0).abs() < 1e-12);
}
