//! Parameters, momentum grid, k-space blocks and the real-space Fock oracle.

mod fock;
mod grid;
mod kspace;
mod params;
mod realspace;

pub use fock::{FockSpace, FockVector, Op, Term, MAX_FOCK_MODES};
pub use grid::{momentum_grid, MomentumGrid};
pub use kspace::{
    boundary_blocks, boundary_hamiltonian, boundary_space, core_matrix,
    core_matrix_delta_a_derivative, fourier_creators, gamma_matrices, kspace_labels, pair_hamiltonian, pair_space,
    BOUNDARY_LABELS, PAIR_LABELS,
};
pub(crate) use kspace::check_momentum;
pub use params::ModelParams;
pub use realspace::{chain_terms, fock_hamiltonian, fock_spectrum, Boundary};
