//! Superdense coding with a uniformly accelerated qubit.
//!
//! Alice's half of an EPR pair is expanded in Rindler modes, the message is
//! encoded on the region-I qubit, region II is traced out, and the resulting
//! two-qubit state is scored by success probability, dense-coding capacity,
//! logarithmic negativity and quantum discord. Every quantity with a closed
//! form is also computed numerically from the density matrix.

pub mod cli;
pub mod error;
pub mod measures;
pub mod protocol;
pub mod qmat;
pub mod rindler;

pub use error::{Error, Result};
pub use measures::{evaluate_point, evaluate_point_with, QuantityReport};
pub use protocol::{Message, ProtocolPoint};
pub use rindler::{BellIndex, ModeSplit};
