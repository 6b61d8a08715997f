//! Classical correlation and quantum discord with projective measurements on
//! the second qubit.
//!
//! A rank-one von Neumann measurement on a qubit is fixed by a Bloch
//! direction `n(θ, φ)`; its two projectors are `(I ± n·σ)/2`. The locally
//! accessible information `S(ρ_A) - S(A|{Π_k})` is maximized by a coarse
//! scan over `(θ, φ)` followed by a compass pattern search around the best
//! cell.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qmat::{entropy_bits, hermitian_eigenvalues, ComplexMatrix, DensityMatrix};
use crate::rindler::check_range;

pub const THETA_STEPS: usize = 91;
pub const PHI_STEPS: usize = 180;
pub const REFINE_SHRINK: f64 = 0.5;
pub const REFINE_MIN_STEP: f64 = 1e-7;
const REFINE_MAX_ITER: usize = 100_000;
/// Outcomes rarer than this are dropped from the conditional entropy.
pub const OUTCOME_CUTOFF: f64 = 1e-14;
/// Negative discord down to this is optimizer round-off and reads as zero.
pub const DISCORD_CLAMP: f64 = 1e-9;

/// Bloch-sphere angles of the `+` projector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementAngles {
    theta: f64,
    phi: f64,
}

impl MeasurementAngles {
    /// `theta ∈ [0, π]`, `phi ∈ [0, 2π)`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        let theta = check_range("theta", theta, 0.0, PI)?;
        if !phi.is_finite() || !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::OutOfDomain {
                name: "phi",
                value: phi,
                min: 0.0,
                max: 2.0 * PI,
            });
        }
        Ok(Self { theta, phi })
    }

    /// Clamps `theta` into `[0, π]` and wraps `phi` into `[0, 2π)`.
    fn normalized(theta: f64, phi: f64) -> Self {
        let mut phi = phi.rem_euclid(2.0 * PI);
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        Self {
            theta: theta.clamp(0.0, PI),
            phi,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn direction(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// `(I + n·σ)/2` and `(I - n·σ)/2` as 2x2 row-major arrays.
    fn projectors(&self) -> [[Complex64; 4]; 2] {
        let [x, y, z] = self.direction();
        let proj = |s: f64| {
            [
                Complex64::new(0.5 * (1.0 + s * z), 0.0),
                Complex64::new(0.5 * s * x, -0.5 * s * y),
                Complex64::new(0.5 * s * x, 0.5 * s * y),
                Complex64::new(0.5 * (1.0 - s * z), 0.0),
            ]
        };
        [proj(1.0), proj(-1.0)]
    }
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.slots().len() == 2 {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "bipartite measure needs two qubits, got {}",
            rho.slots().len()
        )))
    }
}

/// Entries of a 4x4 two-qubit matrix, for the measurement hot loop.
struct TwoQubit([[Complex64; 4]; 4]);

impl TwoQubit {
    fn new(rho: &DensityMatrix) -> Self {
        let m = rho.matrix();
        let mut e = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = m[(i, j)];
            }
        }
        Self(e)
    }

    /// `S(A | {Π_k})` for a projective measurement on the second qubit.
    fn conditional_entropy(&self, angles: &MeasurementAngles) -> f64 {
        let rho = &self.0;
        let mut total = 0.0;
        for proj in angles.projectors() {
            // Tr_B[(I ⊗ Π) ρ (I ⊗ Π)] = Tr_B[(I ⊗ Π) ρ]
            let mut block = [Complex64::new(0.0, 0.0); 4];
            for a in 0..2 {
                for b in 0..2 {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for c in 0..2 {
                        for d in 0..2 {
                            acc += proj[c * 2 + d] * rho[a * 2 + d][b * 2 + c];
                        }
                    }
                    block[a * 2 + b] = acc;
                }
            }
            let p = block[0].re + block[3].re;
            if p < OUTCOME_CUTOFF {
                continue;
            }
            // Hermitize away the last-bit asymmetry of the contraction
            let off = 0.5 * (block[1] + block[2].conj());
            let conditional = ComplexMatrix::new(
                2,
                2,
                vec![
                    Complex64::new(block[0].re / p, 0.0),
                    off / p,
                    off.conj() / p,
                    Complex64::new(block[3].re / p, 0.0),
                ],
            )
            .expect("finite block");
            let spectrum = hermitian_eigenvalues(&conditional).expect("Hermitian by construction");
            total += p * entropy_bits(&spectrum);
        }
        total
    }
}

/// `Σ_k p_k S(ρ_{A|k})` for the measurement on the second slot of `rho`.
pub fn conditional_entropy(rho: &DensityMatrix, angles: &MeasurementAngles) -> Result<f64> {
    require_two_qubits(rho)?;
    Ok(TwoQubit::new(rho).conditional_entropy(angles))
}

/// Result of the measurement search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicalCorrelation {
    /// `max J(A:B)` in bits.
    pub value: f64,
    /// Maximizing measurement.
    pub angles: MeasurementAngles,
}

/// Maximum locally accessible information over measurements on the second slot.
pub fn classical_correlation(rho: &DensityMatrix) -> Result<ClassicalCorrelation> {
    require_two_qubits(rho)?;
    let s_a = rho.partial_trace(rho.slots()[1])?.von_neumann_entropy();
    let state = TwoQubit::new(rho);
    let objective = |angles: &MeasurementAngles| s_a - state.conditional_entropy(angles);

    let theta_step = PI / (THETA_STEPS - 1) as f64;
    let phi_step = 2.0 * PI / PHI_STEPS as f64;

    // coarse scan; strict `>` keeps the lexicographically first (θ, φ) on ties
    let mut best = MeasurementAngles::normalized(0.0, 0.0);
    let mut best_value = f64::NEG_INFINITY;
    for t in 0..THETA_STEPS {
        for p in 0..PHI_STEPS {
            let angles = MeasurementAngles::normalized(t as f64 * theta_step, p as f64 * phi_step);
            let v = objective(&angles);
            if v > best_value {
                best_value = v;
                best = angles;
            }
        }
    }

    // compass search: move to the best improving neighbour, else halve the step
    let mut step = theta_step.max(phi_step);
    let mut iterations = 0;
    while step >= REFINE_MIN_STEP && iterations < REFINE_MAX_ITER {
        iterations += 1;
        let (t, p) = (best.theta, best.phi);
        let mut moved = false;
        let mut candidate = best;
        let mut candidate_value = best_value;
        for (dt, dp) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
            let angles = MeasurementAngles::normalized(t + dt, p + dp);
            let v = objective(&angles);
            if v > candidate_value {
                candidate_value = v;
                candidate = angles;
                moved = true;
            }
        }
        if moved {
            best = candidate;
            best_value = candidate_value;
        } else {
            step *= REFINE_SHRINK;
        }
    }

    Ok(ClassicalCorrelation {
        value: best_value,
        angles: best,
    })
}

/// Mutual information, classical correlation and their difference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Discord {
    pub discord: f64,
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub angles: MeasurementAngles,
}

/// `I(A:B) = S(ρ_A) + S(ρ_B) - S(ρ_AB)` in bits.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let (first, second) = (rho.slots()[0], rho.slots()[1]);
    let s_a = rho.partial_trace(second)?.von_neumann_entropy();
    let s_b = rho.partial_trace(first)?.von_neumann_entropy();
    Ok(s_a + s_b - rho.von_neumann_entropy())
}

/// Quantum discord with measurement on the second slot, in bits.
pub fn quantum_discord(rho: &DensityMatrix) -> Result<Discord> {
    let mutual = mutual_information(rho)?;
    let classical = classical_correlation(rho)?;
    let mut discord = mutual - classical.value;
    if discord < 0.0 {
        if discord < -DISCORD_CLAMP {
            return Err(Error::NegativeDiscord(discord));
        }
        discord = 0.0;
    }
    Ok(Discord {
        discord,
        mutual_information: mutual,
        classical_correlation: classical.value,
        angles: classical.angles,
    })
}
