//! Small dense complex-matrix kernel for few-qubit states.

mod density;
mod eigen;
mod matrix;
mod state;

pub use density::{entropy_bits, DensityMatrix, ENTROPY_CLIP, NEGATIVITY_TOL};
pub use eigen::{hermitian_eigenvalues, HERMITIAN_TOL, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use matrix::{kron, ComplexMatrix};
pub use state::{Slot, StateVector};
pub(crate) use state::describe as state_layout;

pub use num_complex::Complex64;
