use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

pub const NORM_TOL: f64 = 1e-12;

/// Label of one qubit register. The first slot of a state is its most
/// significant bit: `|abc⟩` has index `4a + 2b + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    /// Alice's Minkowski-mode qubit.
    Alice,
    /// Bob's inertial qubit.
    Bob,
    /// Rindler region I particle mode.
    RegionI,
    /// Rindler region II anti-particle mode.
    RegionII,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::Alice => "A",
            Slot::Bob => "B",
            Slot::RegionI => "I",
            Slot::RegionII => "II",
        })
    }
}

pub(crate) fn describe(slots: &[Slot]) -> String {
    let names: Vec<String> = slots.iter().map(Slot::to_string).collect();
    format!("({})", names.join(","))
}

pub(crate) fn check_slots(slots: &[Slot], dim: usize) -> Result<()> {
    if slots.is_empty() || dim != 1 << slots.len() {
        return Err(Error::Dimension(format!(
            "{} slots need dimension {}, got {dim}",
            slots.len(),
            1usize << slots.len().min(usize::BITS as usize - 1)
        )));
    }
    for (k, s) in slots.iter().enumerate() {
        if slots[..k].contains(s) {
            return Err(Error::Dimension(format!("slot {s} appears twice")));
        }
    }
    Ok(())
}

/// Normalized pure state over an ordered list of qubit slots.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    slots: Vec<Slot>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>, slots: Vec<Slot>) -> Result<Self> {
        check_slots(&slots, amplitudes.len())?;
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { amplitudes, slots })
    }

    /// Scales `amplitudes` to unit norm first.
    pub fn normalized(amplitudes: Vec<Complex64>, slots: Vec<Slot>) -> Result<Self> {
        let n = norm(&amplitudes);
        if !n.is_finite() || n <= 0.0 {
            return Err(Error::NotNormalized { norm: n });
        }
        Self::new(amplitudes.into_iter().map(|z| z / n).collect(), slots)
    }

    /// Computational basis state; `bits[k]` is the value of `slots[k]`.
    pub fn basis(bits: &[u8], slots: Vec<Slot>) -> Result<Self> {
        if bits.len() != slots.len() || bits.iter().any(|&b| b > 1) {
            return Err(Error::Dimension(format!("bad basis label {bits:?}")));
        }
        let index = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << slots.len()];
        amps[index] = Complex64::new(1.0, 0.0);
        Self::new(amps, slots)
    }

    pub(crate) fn from_parts_unchecked(amplitudes: Vec<Complex64>, slots: Vec<Slot>) -> Self {
        debug_assert!(check_slots(&slots, amplitudes.len()).is_ok());
        Self { amplitudes, slots }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// Amplitude of the basis ket whose bits are listed in slot order.
    pub fn amplitude(&self, bits: &[u8]) -> Complex64 {
        assert_eq!(bits.len(), self.slots.len());
        let index = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        self.amplitudes[index]
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.dim(), other.dim());
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn slot_position(&self, slot: Slot) -> Result<usize> {
        self.slots
            .iter()
            .position(|&s| s == slot)
            .ok_or(Error::InvalidSlot(slot))
    }

    /// Applies a single-qubit operator to one slot.
    pub fn apply_single(&self, op: &ComplexMatrix, slot: Slot) -> Result<StateVector> {
        if op.rows() != 2 || op.cols() != 2 {
            return Err(Error::Dimension("single-qubit operator must be 2x2".into()));
        }
        let k = self.slot_position(slot)?;
        let shift = self.slots.len() - 1 - k;
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim()];
        for (idx, &amp) in self.amplitudes.iter().enumerate() {
            let bit = (idx >> shift) & 1;
            let base = idx & !(1 << shift);
            for new_bit in 0..2 {
                out[base | (new_bit << shift)] += op[(new_bit, bit)] * amp;
            }
        }
        Ok(Self::from_parts_unchecked(out, self.slots.clone()))
    }

    /// Applies an operator acting on the whole register.
    pub fn apply(&self, op: &ComplexMatrix) -> Result<StateVector> {
        if op.cols() != self.dim() || op.rows() != self.dim() {
            return Err(Error::Dimension(format!(
                "operator {}x{} on a state of dimension {}",
                op.rows(),
                op.cols(),
                self.dim()
            )));
        }
        let v = op.matmul(&ComplexMatrix::column(&self.amplitudes))?;
        Ok(Self::from_parts_unchecked(
            v.into_entries(),
            self.slots.clone(),
        ))
    }

    /// Permutes the slot order; `order` lists the new sequence of slots.
    pub fn reorder(&self, order: &[Slot]) -> Result<StateVector> {
        let n = self.slots.len();
        if order.len() != n {
            return Err(Error::SlotLayout {
                expected: describe(&self.slots),
                found: describe(order),
            });
        }
        let positions = order
            .iter()
            .map(|&s| self.slot_position(s))
            .collect::<Result<Vec<_>>>()?;
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim()];
        for (new_idx, slot) in out.iter_mut().enumerate() {
            let mut old_idx = 0;
            for (new_pos, &old_pos) in positions.iter().enumerate() {
                let bit = (new_idx >> (n - 1 - new_pos)) & 1;
                old_idx |= bit << (n - 1 - old_pos);
            }
            *slot = self.amplitudes[old_idx];
        }
        Ok(Self::from_parts_unchecked(out, order.to_vec()))
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
