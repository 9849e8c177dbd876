//! Dense complex linear algebra and special functions.

mod eigen;
mod elliptic;
mod expm;
mod matrix;

pub use eigen::{
    cmp_complex, eig_complex, eigenvalues, multiset_distance, null_space, singular_values,
    EigenDecomposition, DEFECTIVE_TOL,
};
pub use elliptic::elliptic_e;
pub use expm::{expm, expm_pade, EIGEN_ROUTE_MAX_CONDITION, EXPM_NORM_LIMIT};
pub use matrix::{fix_phase, inner, normalized, vec_norm, ComplexMatrix};

/// Largest dimension accepted by the dense kernels.
pub const MAX_DENSE_DIM: usize = 4096;

pub use num_complex::Complex64;

/// Shorthand for `Complex64::new`.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
