//! Spin-½ representation through the Jordan–Wigner map.

mod chain;
mod pauli;

pub use chain::{
    build_spin_calh, build_spin_h0, ghz_pair, heisenberg_added_terms, heisenberg_ring_check,
    heisenberg_ring_terms, spin_calh_terms, spin_fixed_line_operator, spin_h0_terms, spin_hamiltonian,
    spin_identity_report, x_polarized, GhzPair, HeisenbergReport, IdentityCheck, SpinOperator,
};
pub use pauli::{pauli_apply, pauli_matrix, z_string, Pauli, PauliString, MAX_SPIN_SITES};
