use nhkitaev::dynamics::{
    detect_drop, evolve_driven, evolve_quench, fock_quench_fidelity, scan_quench, DriveSpec,
    Normalization, QuenchFamily, TimeGrid,
};
use nhkitaev::model::ModelParams;

fn base(n: usize) -> ModelParams {
    ModelParams::new(1.0, 1.0, 1.0, 0.0, n).unwrap()
}

#[test]
fn fixed_line_drive_is_exact() {
    let d = DriveSpec::oscillating(0.0, 1e-3, 2.0).unwrap();
    let r = evolve_driven(&base(8), &d, Normalization::Normalized).unwrap();
    assert!(r.series.max_deviation_from_one() < 1e-6);
    assert!(r.step_halving_error <= 1e-8 && r.converged);
    assert_eq!(r.series.values[0], 1.0);
}

#[test]
fn phase_offset_moves_off_the_line() {
    let d = DriveSpec::oscillating(1.0, 1e-2, 2.0).unwrap();
    let r = evolve_driven(&base(8), &d, Normalization::Normalized).unwrap();
    assert!(r.series.min_value() < 0.9);
}

#[test]
fn quench_matches_full_chain() {
    for n in [2, 4] {
        let pre = ModelParams::new(1.0, 1.5, 0.5, 0.0, n).unwrap();
        let pos = pre.with_mu(0.05);
        let t = TimeGrid::new(10.0, 100).unwrap().times();
        let a = evolve_quench(&pre, &pos, &t, Normalization::Normalized).unwrap();
        let b = fock_quench_fidelity(&pre, &pos, &t, Normalization::Normalized).unwrap();
        for (x, y) in a.values.iter().zip(&b.values) {
            assert!((x - y).abs() < 1e-9);
        }
    }
}

#[test]
fn drop_times_shrink() {
    let grid = TimeGrid::new(30.0, 300).unwrap();
    let drop = |mu: f64, ratio: f64| {
        let r = scan_quench(
            &QuenchFamily::Ratio { j: 1.0, sum: 3.0, mu, n: 16 },
            &grid,
            &[ratio],
            0.5,
            Normalization::Normalized,
        )
        .unwrap();
        r.drop_times[0].expect("fidelity drops")
    };
    assert!(drop(0.01, 2.0) < drop(0.001, 2.0));
    assert!(drop(0.01, 3.0) < drop(0.01, 2.0));
}

#[test]
fn hermitian_quench_never_drops() {
    let r = scan_quench(
        &QuenchFamily::Ratio { j: 1.0, sum: 3.0, mu: 0.01, n: 16 },
        &TimeGrid::new(30.0, 300).unwrap(),
        &[1.0],
        0.5,
        Normalization::Normalized,
    )
    .unwrap();
    assert_eq!(r.drop_times[0], None);
}

#[test]
fn zero_mu_column_is_flat() {
    let r = scan_quench(
        &QuenchFamily::Mu { j: 1.0, delta_a: 2.0, delta_b: 1.0, n: 16 },
        &TimeGrid::new(50.0, 100).unwrap(),
        &[0.0, 0.01],
        0.5,
        Normalization::Normalized,
    )
    .unwrap();
    assert!(r.column(0).iter().all(|v| (v - 1.0).abs() < 1e-8));
    let s = evolve_quench(
        &ModelParams::new(1.0, 2.0, 1.0, 0.0, 16).unwrap(),
        &ModelParams::new(1.0, 2.0, 1.0, 0.01, 16).unwrap(),
        &r.times,
        Normalization::Normalized,
    )
    .unwrap();
    assert!(detect_drop(&s, 0.5).unwrap().is_some());
}

#[test]
fn raw_policy_records_growth() {
    let pre = ModelParams::new(1.0, 1.5, 0.5, 0.0, 8).unwrap();
    let t = TimeGrid::new(5.0, 50).unwrap().times();
    let n = evolve_quench(&pre, &pre.with_mu(0.05), &t, Normalization::Normalized).unwrap();
    let r = evolve_quench(&pre, &pre.with_mu(0.05), &t, Normalization::Raw).unwrap();
    assert_eq!(n.raw, r.values);
    for i in 0..t.len() {
        let expect = n.values[i] * (2.0 * n.log_norm[i]).exp();
        assert!((r.values[i] - expect).abs() <= 1e-12 * expect.max(1.0));
    }
}
