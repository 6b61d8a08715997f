//! EPR resources and the Rindler-mode lift of Alice's qubit.
//!
//! The Minkowski modes of the accelerated qubit map onto region I/II modes as
//!
//! ```text
//! |0⟩_A -> cos r |0⟩_I |0⟩_II + sin r |1⟩_I |1⟩_II
//! |1⟩_A -> q_l |0⟩_I |1⟩_II + q_r |1⟩_I |0⟩_II
//! ```
//!
//! with `q_l² + q_r² = 1`. The single-mode approximation is `q_l = 0`.
//! Lifted states are ordered `(I, II, B)`.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qmat::{kron, ComplexMatrix, Slot, StateVector};

/// Largest acceleration parameter considered.
pub const R_MAX: f64 = FRAC_PI_4;
/// Inputs this far outside a bound are snapped onto it (decimal round-off).
pub const DOMAIN_SLACK: f64 = 1e-9;

pub const MINKOWSKI_SLOTS: [Slot; 2] = [Slot::Alice, Slot::Bob];
pub const RINDLER_SLOTS: [Slot; 3] = [Slot::RegionI, Slot::RegionII, Slot::Bob];

pub(crate) fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<f64> {
    let err = Error::OutOfDomain {
        name,
        value,
        min,
        max,
    };
    if !value.is_finite() || value < min - DOMAIN_SLACK || value > max + DOMAIN_SLACK {
        return Err(err);
    }
    Ok(value.clamp(min, max))
}

fn parse_bits(s: &str) -> Option<(bool, bool)> {
    match s.trim() {
        "00" => Some((false, false)),
        "01" => Some((false, true)),
        "10" => Some((true, false)),
        "11" => Some((true, true)),
        _ => None,
    }
}

/// Label `(α, β)` of the EPR state `(|0⟩|α⟩ + (-1)^β |1⟩|ᾱ⟩)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct BellIndex {
    pub alpha: bool,
    pub beta: bool,
}

impl BellIndex {
    pub const ALL: [BellIndex; 4] = [
        BellIndex::new(false, false),
        BellIndex::new(false, true),
        BellIndex::new(true, false),
        BellIndex::new(true, true),
    ];

    pub const fn new(alpha: bool, beta: bool) -> Self {
        Self { alpha, beta }
    }

    pub fn from_bits(alpha: u8, beta: u8) -> Result<Self> {
        match (alpha, beta) {
            (0 | 1, 0 | 1) => Ok(Self::new(alpha == 1, beta == 1)),
            _ => Err(Error::Dimension(format!(
                "Bell index bits must be 0 or 1, got ({alpha}, {beta})"
            ))),
        }
    }

    /// Position in [`BellIndex::ALL`], i.e. `2α + β`.
    pub fn ordinal(self) -> usize {
        (self.alpha as usize) << 1 | self.beta as usize
    }
}

impl fmt::Display for BellIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.alpha as u8, self.beta as u8)
    }
}

impl FromStr for BellIndex {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_bits(s)
            .map(|(a, b)| Self::new(a, b))
            .ok_or_else(|| format!("expected two bits such as 01, got {s:?}"))
    }
}

/// Acceleration parameter `r` together with the left/right mode weights.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeSplit {
    r: f64,
    q_l: f64,
}

impl ModeSplit {
    /// `r ∈ [0, π/4]` in radians and real `q_l ∈ [0, 1]`; `q_r` is the
    /// non-negative root of `1 - q_l²`.
    pub fn new(r: f64, q_l: f64) -> Result<Self> {
        let r = check_range("r", r, 0.0, R_MAX)?;
        let q_l = check_range("q_l", q_l, 0.0, 1.0)?;
        Ok(Self { r, q_l })
    }

    /// Single-mode approximation (`q_l = 0`, `q_r = 1`).
    pub fn single_mode(r: f64) -> Result<Self> {
        Self::new(r, 0.0)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn q_l(&self) -> f64 {
        self.q_l
    }

    pub fn q_r(&self) -> f64 {
        (1.0 - self.q_l * self.q_l).max(0.0).sqrt()
    }

    /// The 4x2 isometry taking Alice's Minkowski qubit to the `(I, II)` pair.
    pub fn isometry(&self) -> ComplexMatrix {
        let (s, c) = self.r.sin_cos();
        ComplexMatrix::from_real_rows(&[
            &[c, 0.0],
            &[0.0, self.q_l],
            &[0.0, self.q_r()],
            &[s, 0.0],
        ])
        .expect("finite weights")
    }
}

/// The EPR state labelled by `idx`, over slots `(A, B)`.
pub fn bell_state(idx: BellIndex) -> StateVector {
    bell_state_over(idx, MINKOWSKI_SLOTS.to_vec())
}

/// The same EPR amplitudes on an arbitrary pair of slots; the first slot
/// plays Alice's role.
pub(crate) fn bell_state_over(idx: BellIndex, slots: Vec<Slot>) -> StateVector {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![Complex64::new(0.0, 0.0); 4];
    let alpha = idx.alpha as usize;
    let sign = if idx.beta { -1.0 } else { 1.0 };
    amps[alpha] = Complex64::new(h, 0.0); // |0 α⟩
    amps[2 | (1 - alpha)] = Complex64::new(sign * h, 0.0); // |1 ᾱ⟩
    StateVector::from_parts_unchecked(amps, slots)
}

/// Replaces Alice's Minkowski qubit with its Rindler-mode expansion.
pub fn lift_alice(state: &StateVector, split: &ModeSplit) -> Result<StateVector> {
    if state.slots() != MINKOWSKI_SLOTS {
        return Err(Error::SlotLayout {
            expected: "(A,B)".into(),
            found: crate::qmat::state_layout(state.slots()),
        });
    }
    let lift = kron(&split.isometry(), &ComplexMatrix::identity(2));
    let out = lift.matmul(&ComplexMatrix::column(state.amplitudes()))?;
    Ok(StateVector::from_parts_unchecked(
        out.into_entries(),
        RINDLER_SLOTS.to_vec(),
    ))
}

/// `lift_alice(bell_state(idx), split)`.
pub fn lift_alice_general(idx: BellIndex, split: &ModeSplit) -> StateVector {
    lift_alice(&bell_state(idx), split).expect("Bell states live on (A, B)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2 as H;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn assert_amplitudes(state: &StateVector, expected: &[(&[u8], f64)]) {
        let mut want = vec![c(0.0); state.dim()];
        for (bits, amp) in expected {
            let idx = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
            want[idx] = c(*amp);
        }
        for (k, (g, w)) in state.amplitudes().iter().zip(&want).enumerate() {
            assert!((g - w).norm() < 1e-14, "basis {k:03b}: got {g}, want {w}");
        }
    }

    #[test]
    fn bell_states() {
        let idx = |a, b| BellIndex::from_bits(a, b).unwrap();
        assert_amplitudes(&bell_state(idx(0, 0)), &[(&[0, 0], H), (&[1, 1], H)]);
        assert_amplitudes(&bell_state(idx(0, 1)), &[(&[0, 0], H), (&[1, 1], -H)]);
        assert_amplitudes(&bell_state(idx(1, 0)), &[(&[0, 1], H), (&[1, 0], H)]);
        assert_amplitudes(&bell_state(idx(1, 1)), &[(&[0, 1], H), (&[1, 0], -H)]);
        assert!(BellIndex::from_bits(2, 0).is_err());
        assert_eq!("10".parse::<BellIndex>().unwrap(), idx(1, 0));
        assert!("1".parse::<BellIndex>().is_err());
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn mode_split_domain() {
        assert!(ModeSplit::new(-0.1, 0.0).is_err());
        assert!(ModeSplit::new(0.8, 0.0).is_err());
        assert!(ModeSplit::new(0.1, 1.01).is_err());
        assert!(ModeSplit::new(f64::NAN, 0.0).is_err());
        // ten-digit decimal renderings of π/4 and 1 are accepted and snapped
        let s = ModeSplit::new(0.785_398_163_4, 1.000_000_000_1).unwrap();
        assert_eq!(s.r(), R_MAX);
        assert_eq!(s.q_l(), 1.0);
        assert_eq!(s.q_r(), 0.0);
        let s = ModeSplit::new(0.3, 0.6).unwrap();
        assert!((s.q_r() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn zero_acceleration_is_identity_embedding() {
        let split = ModeSplit::new(0.0, 0.0).unwrap();
        let lifted = lift_alice_general(BellIndex::default(), &split);
        assert_eq!(lifted.slots(), RINDLER_SLOTS);
        assert_amplitudes(&lifted, &[(&[0, 0, 0], H), (&[1, 0, 1], H)]);

        let lifted = lift_alice_general(BellIndex::new(true, false), &split);
        assert_amplitudes(&lifted, &[(&[0, 0, 1], H), (&[1, 0, 0], H)]);
    }

    #[test]
    fn single_mode_lift() {
        let r: f64 = 0.37;
        let split = ModeSplit::single_mode(r).unwrap();
        let lifted = lift_alice(&bell_state(BellIndex::default()), &split).unwrap();
        assert_amplitudes(
            &lifted,
            &[
                (&[0, 0, 0], r.cos() * H),
                (&[1, 1, 0], r.sin() * H),
                (&[1, 0, 1], H),
            ],
        );
    }

    #[test]
    fn beyond_single_mode_lift() {
        let (r, q_l): (f64, f64) = (0.61, 0.45);
        let split = ModeSplit::new(r, q_l).unwrap();
        let q_r = split.q_r();
        let lifted = lift_alice_general(BellIndex::default(), &split);
        assert_amplitudes(
            &lifted,
            &[
                (&[0, 0, 0], r.cos() * H),
                (&[1, 1, 0], r.sin() * H),
                (&[0, 1, 1], q_l * H),
                (&[1, 0, 1], q_r * H),
            ],
        );
        // β = 1 flips the sign of the |1⟩_A branch
        let lifted = lift_alice_general(BellIndex::new(false, true), &split);
        assert_amplitudes(
            &lifted,
            &[
                (&[0, 0, 0], r.cos() * H),
                (&[1, 1, 0], r.sin() * H),
                (&[0, 1, 1], -q_l * H),
                (&[1, 0, 1], -q_r * H),
            ],
        );
    }

    #[test]
    fn lift_requires_minkowski_layout() {
        let split = ModeSplit::new(0.1, 0.1).unwrap();
        let wrong = StateVector::basis(&[0, 0], vec![Slot::Bob, Slot::Alice]).unwrap();
        assert!(matches!(
            lift_alice(&wrong, &split),
            Err(Error::SlotLayout { .. })
        ));
    }
}
