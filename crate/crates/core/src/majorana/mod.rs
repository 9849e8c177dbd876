//! Majorana ladder with an engineered impurity and its exact zero modes.

mod lattice;
mod zero_modes;

pub use lattice::{
    build_majorana, half_filled_sum, index_a, index_b, ladder_ground_energy,
    ladder_ground_energy_dense, ladder_spectrum, LadderEnergy, MajoranaLattice,
};
pub use zero_modes::{
    edge_state, fit_cell_slope, profile, profile_table, resonance, zero_mode_residuals, zero_modes,
    Branch,
    ProfileRow, ResonanceData, Sublattice, ZeroModePair,
};
