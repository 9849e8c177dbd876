use nhkitaev::model::{chain_terms, fock_spectrum, Boundary, FockSpace, ModelParams};
use nhkitaev::numerics::vec_norm;
use nhkitaev::spectral::{ground_energy, ground_state};

fn line(j: f64, sum: f64, n: usize) -> Vec<ModelParams> {
    [0.0, 0.5, 1.0, 2.0, -1.3]
        .iter()
        .map(|&d| ModelParams::on_fixed_line(j, sum, d, n).unwrap())
        .collect()
}

#[test]
fn energy_depends_only_on_the_sum() {
    for sum in [-2.0, -1.0, 0.5, 2.0, 3.0] {
        let e: Vec<f64> = line(1.0, sum, 8).iter().map(|p| ground_energy(p).unwrap()).collect();
        for x in &e[1..] {
            assert!((x - e[0]).abs() < 1e-12, "sum {sum}: {e:?}");
        }
    }
}

#[test]
fn critical_line_energy() {
    for p in line(1.0, 2.0, 8) {
        assert!((ground_energy(&p).unwrap() + 16.0).abs() < 1e-12);
    }
    for p in line(0.7, 1.4, 6) {
        assert!((ground_energy(&p).unwrap() + 2.0 * 6.0 * 0.7).abs() < 1e-12);
    }
}

#[test]
fn state_is_unchanged_along_the_line() {
    for sum in [1.0, 2.0, 3.0] {
        let states: Vec<_> = line(1.0, sum, 8).iter().map(|p| ground_state(p).unwrap()).collect();
        for s in &states[1..] {
            for o in states[0].block_overlaps(s).unwrap() {
                assert!((o - 1.0).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn real_space_ground_state_is_an_eigenvector() {
    for n in [2usize, 4] {
        for p in line(1.0, 3.0, n).into_iter().chain(line(1.0, 1.0, n)) {
            let g = ground_state(&p).unwrap();
            let psi = g.to_real_space().unwrap();
            assert!((psi.norm() - 1.0).abs() < 1e-12);
            let hv = FockSpace::chain(2 * n)
                .unwrap()
                .apply(&chain_terms(&p, Boundary::Periodic), &psi.amplitudes)
                .unwrap();
            let r: Vec<_> = hv.iter().zip(&psi.amplitudes).map(|(a, b)| a - b * g.energy).collect();
            assert!(vec_norm(&r) < 1e-10, "{p:?}: {}", vec_norm(&r));
        }
    }
}

#[test]
fn energy_is_in_the_full_spectrum() {
    for p in line(1.0, 2.5, 4) {
        let e = ground_energy(&p).unwrap();
        let spec = fock_spectrum(&p, Boundary::Periodic).unwrap();
        assert!(spec.iter().any(|z| (z.re - e).abs() < 1e-9 && z.im.abs() < 1e-9));
        let lowest = spec.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        assert!((lowest - e).abs() < 1e-9);
    }
}
