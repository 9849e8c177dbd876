//! Non-unitary time evolution and fidelity in the block representation.

mod drive;
mod quench;
mod series;

pub use drive::{evolve_driven, DriveSpec, DrivenRun, StrengthFn, DRIVE_CONVERGENCE_TOL};
pub use quench::{
    block_hamiltonians, evolve_quench, fock_quench_fidelity, scan_quench, QuenchFamily,
    ScanResult, COEFFICIENT_FLOOR, DEFAULT_DROP_THRESHOLD, SPECTRAL_ROUTE_MAX_CONDITION,
};
pub use series::{detect_drop, FidelitySeries, Normalization, TimeGrid};
