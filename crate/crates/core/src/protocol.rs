//! Message encoding on the region-I qubit, loss of region II, and Bob's
//! Bell-basis readout.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qmat::{state_layout, ComplexMatrix, DensityMatrix, Slot, StateVector};
use crate::rindler::{bell_state_over, lift_alice_general, BellIndex, ModeSplit, RINDLER_SLOTS};

/// Slots of the state Bob holds once region II is traced out.
pub const SHARED_SLOTS: [Slot; 2] = [Slot::RegionI, Slot::Bob];

/// Two classical bits `ij`, sent by applying `Z^j X^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Message {
    pub i: bool,
    pub j: bool,
}

impl Message {
    pub const ALL: [Message; 4] = [
        Message::new(false, false),
        Message::new(false, true),
        Message::new(true, false),
        Message::new(true, true),
    ];

    pub const fn new(i: bool, j: bool) -> Self {
        Self { i, j }
    }

    pub fn from_bits(i: u8, j: u8) -> Result<Self> {
        match (i, j) {
            (0 | 1, 0 | 1) => Ok(Self::new(i == 1, j == 1)),
            _ => Err(Error::Dimension(format!(
                "message bits must be 0 or 1, got ({i}, {j})"
            ))),
        }
    }

    /// `Z^j X^i`
    pub fn operator(self) -> ComplexMatrix {
        let mut u = ComplexMatrix::identity(2);
        if self.i {
            u = &ComplexMatrix::pauli_x() * &u;
        }
        if self.j {
            u = &ComplexMatrix::pauli_z() * &u;
        }
        u
    }
}

impl fmt::Display for Message {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.i as u8, self.j as u8)
    }
}

impl FromStr for Message {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let idx: BellIndex = s.parse()?;
        Ok(Self::new(idx.alpha, idx.beta))
    }
}

/// Bell outcome that decodes `msg` when the pair started in `idx`:
/// `Z^j X^i` on Alice's side maps `φ_{αβ}` to `±φ_{α⊕i, β⊕j}`.
pub fn decoded_outcome(idx: BellIndex, msg: Message) -> BellIndex {
    BellIndex::new(idx.alpha ^ msg.i, idx.beta ^ msg.j)
}

/// One evaluation point of the protocol.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProtocolPoint {
    pub split: ModeSplit,
    pub idx: BellIndex,
    pub msg: Message,
}

impl ProtocolPoint {
    pub fn new(split: ModeSplit, idx: BellIndex, msg: Message) -> Self {
        Self { split, idx, msg }
    }

    /// Shared EPR pair `φ_00`, message `00`.
    pub fn standard(split: ModeSplit) -> Self {
        Self::new(split, BellIndex::default(), Message::default())
    }

    /// Lifted and encoded three-slot state over `(I, II, B)`.
    pub fn encoded_state(&self) -> StateVector {
        let lifted = lift_alice_general(self.idx, &self.split);
        encode(&lifted, self.msg).expect("lifted state has a region-I slot")
    }

    /// `ρ^{I,B}` after region II is traced out.
    pub fn shared_state(&self) -> DensityMatrix {
        reduced_state(&self.encoded_state()).expect("encoded state is over (I, II, B)")
    }

    pub fn expected_outcome(&self) -> BellIndex {
        decoded_outcome(self.idx, self.msg)
    }
}

/// Applies `Z^j X^i` to the region-I slot of a lifted state.
pub fn encode(state: &StateVector, msg: Message) -> Result<StateVector> {
    check_layout(state.slots(), &RINDLER_SLOTS)?;
    state.apply_single(&msg.operator(), Slot::RegionI)
}

/// Traces region II out of a normalized `(I, II, B)` state.
pub fn reduced_state(state: &StateVector) -> Result<DensityMatrix> {
    check_layout(state.slots(), &RINDLER_SLOTS)?;
    let norm = state.norm();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NotNormalized { norm });
    }
    DensityMatrix::from_pure(state).partial_trace(Slot::RegionII)
}

fn check_layout(found: &[Slot], expected: &[Slot]) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::SlotLayout {
            expected: state_layout(expected),
            found: state_layout(found),
        })
    }
}

/// Outcome probabilities of a Bell-basis measurement, indexed by outcome label.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BellProbabilities([f64; 4]);

impl BellProbabilities {
    pub fn get(&self, outcome: BellIndex) -> f64 {
        self.0[outcome.ordinal()]
    }

    pub fn as_array(&self) -> [f64; 4] {
        self.0
    }

    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Outcome with the largest probability (lowest label on ties).
    pub fn most_likely(&self) -> BellIndex {
        let mut best = BellIndex::ALL[0];
        for b in BellIndex::ALL {
            if self.get(b) > self.get(best) {
                best = b;
            }
        }
        best
    }
}

/// `p(ab) = ⟨φ_ab|ρ|φ_ab⟩` with the first slot of `rho` in Alice's role.
pub fn bell_probabilities(rho: &DensityMatrix) -> Result<BellProbabilities> {
    if rho.slots().len() != 2 {
        return Err(Error::Dimension(format!(
            "Bell measurement needs two qubits, got {}",
            rho.slots().len()
        )));
    }
    let mut p = [0.0; 4];
    for outcome in BellIndex::ALL {
        let phi = bell_state_over(outcome, rho.slots().to_vec());
        p[outcome.ordinal()] = rho.expectation(&phi)?.clamp(0.0, 1.0);
    }
    Ok(BellProbabilities(p))
}

/// `¼ (q_r + cos r)²`
pub fn success_probability_closed(split: &ModeSplit) -> f64 {
    0.25 * (split.q_r() + split.r().cos()).powi(2)
}
