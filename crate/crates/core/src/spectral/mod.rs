//! Analytic diagonalization of the momentum sectors and the ground state.

mod ground;
mod modes;

pub use ground::{
    boundary_ground_energy, boundary_ground_state, ground_energy, ground_state,
    pair_ground_state, GroundState,
};
pub use modes::{
    band_energies, k_block, mode_angle, mode_basis, quasiparticle_energy, BandIndex, KBlock,
    ModeBasis,
};
