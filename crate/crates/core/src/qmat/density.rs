use num_complex::Complex64;

use super::eigen::hermitian_eigenvalues;
use super::matrix::ComplexMatrix;
use super::state::{check_slots, describe, Slot, StateVector};
use crate::error::{Error, Result};

pub const DENSITY_HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues in `[-NEGATIVITY_TOL, 0)` are round-off; anything lower is a
/// genuinely non-positive matrix.
pub const NEGATIVITY_TOL: f64 = 1e-10;
/// Eigenvalues below this contribute nothing to the entropy.
pub const ENTROPY_CLIP: f64 = 1e-12;

/// Hermitian, unit-trace, positive semidefinite matrix over qubit slots.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    slots: Vec<Slot>,
}

impl DensityMatrix {
    /// Validates every density-matrix invariant.
    pub fn new(matrix: ComplexMatrix, slots: Vec<Slot>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension("density matrix must be square".into()));
        }
        check_slots(&slots, matrix.rows())?;
        let deviation = matrix.hermiticity_error();
        if deviation > DENSITY_HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace is {trace}, expected 1"
            )));
        }
        let eig = hermitian_eigenvalues(&matrix)?;
        if let Some(&low) = eig.last() {
            if low < -NEGATIVITY_TOL {
                return Err(Error::InvalidDensityMatrix(format!(
                    "eigenvalue {low:e} is negative"
                )));
            }
        }
        Ok(Self { matrix, slots })
    }

    /// `|ψ⟩⟨ψ|`
    pub fn from_pure(state: &StateVector) -> Self {
        Self {
            matrix: ComplexMatrix::outer(state.amplitudes()),
            slots: state.slots().to_vec(),
        }
    }

    /// `I/d` over the given slots.
    pub fn maximally_mixed(slots: Vec<Slot>) -> Self {
        let d = 1usize << slots.len();
        Self {
            matrix: ComplexMatrix::identity(d).scale(Complex64::new(1.0 / d as f64, 0.0)),
            slots,
        }
    }

    /// `ρ_a ⊗ ρ_b`
    pub fn tensor(&self, other: &DensityMatrix) -> Result<Self> {
        let mut slots = self.slots.clone();
        slots.extend_from_slice(&other.slots);
        check_slots(&slots, self.dim() * other.dim())?;
        Ok(Self {
            matrix: super::matrix::kron(&self.matrix, &other.matrix),
            slots,
        })
    }

    /// Convex combination `Σ w_k ρ_k`; the weights must sum to one.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let (_, first) = parts
            .first()
            .ok_or_else(|| Error::Dimension("empty mixture".into()))?;
        let mut acc = ComplexMatrix::zeros(first.dim(), first.dim());
        for (w, rho) in parts {
            if rho.slots != first.slots {
                return Err(Error::SlotLayout {
                    expected: describe(&first.slots),
                    found: describe(&rho.slots),
                });
            }
            acc = &acc + &rho.matrix.scale(Complex64::new(*w, 0.0));
        }
        Self::new(acc, first.slots.clone())
    }

    pub(crate) fn from_parts_unchecked(matrix: ComplexMatrix, slots: Vec<Slot>) -> Self {
        Self { matrix, slots }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn slot_position(&self, slot: Slot) -> Result<usize> {
        self.slots
            .iter()
            .position(|&s| s == slot)
            .ok_or(Error::InvalidSlot(slot))
    }

    /// Traces out `slot`, keeping the remaining slots in order.
    pub fn partial_trace(&self, slot: Slot) -> Result<DensityMatrix> {
        let n = self.slots.len();
        if n < 2 {
            return Err(Error::Dimension(
                "cannot trace out the only slot of a state".into(),
            ));
        }
        let k = self.slot_position(slot)?;
        let shift = n - 1 - k;
        let low_mask = (1usize << shift) - 1;
        let half = self.dim() / 2;
        // reduced index -> full index with bit `b` inserted at `shift`
        let expand = |idx: usize, b: usize| ((idx & !low_mask) << 1) | (b << shift) | (idx & low_mask);

        let mut out = ComplexMatrix::zeros(half, half);
        for i in 0..half {
            for j in 0..half {
                out[(i, j)] = self.matrix[(expand(i, 0), expand(j, 0))]
                    + self.matrix[(expand(i, 1), expand(j, 1))];
            }
        }
        let mut slots = self.slots.clone();
        slots.remove(k);
        Ok(Self::from_parts_unchecked(out, slots))
    }

    /// Keeps only `keep`, tracing out every other slot.
    pub fn reduce_to(&self, keep: &[Slot]) -> Result<DensityMatrix> {
        for &s in keep {
            self.slot_position(s)?;
        }
        let mut rho = self.clone();
        for &s in &self.slots {
            if !keep.contains(&s) {
                rho = rho.partial_trace(s)?;
            }
        }
        Ok(rho)
    }

    /// Partial transpose on `slot`. The result is Hermitian but need not be positive.
    pub fn partial_transpose(&self, slot: Slot) -> Result<ComplexMatrix> {
        let k = self.slot_position(slot)?;
        let bit = 1usize << (self.slots.len() - 1 - k);
        let d = self.dim();
        let mut out = ComplexMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                // swap the `slot` bits of the row and column index
                let (ti, tj) = ((i & !bit) | (j & bit), (j & !bit) | (i & bit));
                out[(ti, tj)] = self.matrix[(i, j)];
            }
        }
        Ok(out)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix).expect("density matrix is Hermitian")
    }

    /// Von Neumann entropy in bits.
    pub fn von_neumann_entropy(&self) -> f64 {
        entropy_bits(&self.eigenvalues())
    }

    /// `⟨ψ|ρ|ψ⟩`
    pub fn expectation(&self, state: &StateVector) -> Result<f64> {
        if state.slots() != self.slots.as_slice() {
            return Err(Error::SlotLayout {
                expected: describe(&self.slots),
                found: describe(state.slots()),
            });
        }
        let v = state.amplitudes();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..v.len() {
            for j in 0..v.len() {
                acc += v[i].conj() * self.matrix[(i, j)] * v[j];
            }
        }
        Ok(acc.re)
    }
}

/// Shannon entropy (bits) of a spectrum, with `0 log 0 = 0`.
pub fn entropy_bits(spectrum: &[f64]) -> f64 {
    spectrum
        .iter()
        .filter(|&&x| x > ENTROPY_CLIP)
        .map(|&x| -x * x.log2())
        .sum::<f64>()
        .max(0.0)
}
