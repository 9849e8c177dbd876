//! Exact solution and numerical checks for a non-Hermitian Kitaev chain with
//! staggered imbalanced pair creation and annihilation.

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod majorana;
pub mod model;
pub mod numerics;
pub mod spectral;
pub mod spin;

pub use error::{Error, Result};
