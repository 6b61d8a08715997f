//! Figures of merit for the shared state: success probability, dense-coding
//! capacity, logarithmic negativity and quantum discord.

mod discord;

pub use discord::{
    classical_correlation, conditional_entropy, mutual_information, quantum_discord,
    ClassicalCorrelation, Discord, MeasurementAngles, DISCORD_CLAMP, OUTCOME_CUTOFF, PHI_STEPS,
    REFINE_MIN_STEP, REFINE_SHRINK, THETA_STEPS,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::protocol::{bell_probabilities, success_probability_closed, ProtocolPoint};
use crate::qmat::{entropy_bits, hermitian_eigenvalues, DensityMatrix};
use crate::rindler::ModeSplit;

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.slots().len() == 2 {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "expected a two-qubit state, got {} slots",
            rho.slots().len()
        )))
    }
}

/// `log₂ d + S(ρ_B) - S(ρ_AB)` with `d = 2`; `B` is the second slot.
pub fn sdc_capacity(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let s_b = rho.partial_trace(rho.slots()[0])?.von_neumann_entropy();
    Ok(1.0 + s_b - rho.von_neumann_entropy())
}

/// `log₂ Σ |λ(ρ^{T_B})|`, transposing the second slot.
pub fn log_negativity(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let pt = rho.partial_transpose(rho.slots()[1])?;
    let trace_norm: f64 = hermitian_eigenvalues(&pt)?.iter().map(|x| x.abs()).sum();
    Ok(trace_norm.log2().max(0.0))
}

/// Eigenvalues `(3 - 2q_l² + cos 2r)/4` and `(1 + 2q_l² - cos 2r)/4` of the
/// shared state.
fn shared_spectrum(split: &ModeSplit) -> [f64; 2] {
    let c2r = (2.0 * split.r()).cos();
    let q2 = split.q_l() * split.q_l();
    [(3.0 - 2.0 * q2 + c2r) / 4.0, (1.0 + 2.0 * q2 - c2r) / 4.0]
}

pub fn capacity_closed_form(split: &ModeSplit) -> f64 {
    2.0 - entropy_bits(&shared_spectrum(split))
}

/// `log₂(1 + |cos²r - q_l²|)`
pub fn negativity_closed_form(split: &ModeSplit) -> f64 {
    let c = split.r().cos();
    (1.0 + (c * c - split.q_l() * split.q_l()).abs()).log2()
}

/// `S(ρ_I) + S(ρ_B) - S(ρ_IB)` from the closed-form spectra, with `S(ρ_B) = 1`.
pub fn mutual_information_closed_form(split: &ModeSplit) -> f64 {
    let (s, c) = split.r().sin_cos();
    let q2 = split.q_l() * split.q_l();
    let marginal = [(q2 + c * c) / 2.0, (1.0 - q2 + s * s) / 2.0];
    entropy_bits(&marginal) + 1.0 - entropy_bits(&shared_spectrum(split))
}

/// Discord fields of a [`QuantityReport`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiscordSummary {
    pub discord_bits: f64,
    pub classical_corr_bits: f64,
    pub theta: f64,
    pub phi: f64,
}

/// The four figures of merit at one protocol point, numeric and closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantityReport {
    pub r: f64,
    pub q_l: f64,
    pub p_success: f64,
    pub p_success_closed: f64,
    pub capacity_bits: f64,
    pub capacity_closed: f64,
    pub negativity_bits: f64,
    pub negativity_closed: f64,
    pub mutual_info_bits: f64,
    pub mutual_info_closed: f64,
    /// `None` when discord was skipped.
    pub discord: Option<DiscordSummary>,
}

impl QuantityReport {
    pub fn discord_bits(&self) -> Option<f64> {
        self.discord.map(|d| d.discord_bits)
    }
}

/// Runs lift, encoding and region-II trace, then every measure, including discord.
pub fn evaluate_point(pt: &ProtocolPoint) -> Result<QuantityReport> {
    evaluate_point_with(pt, true)
}

pub fn evaluate_point_with(pt: &ProtocolPoint, include_discord: bool) -> Result<QuantityReport> {
    let rho = pt.shared_state();
    let probabilities = bell_probabilities(&rho)?;
    let discord = if include_discord {
        let d = quantum_discord(&rho)?;
        Some(DiscordSummary {
            discord_bits: d.discord,
            classical_corr_bits: d.classical_correlation,
            theta: d.angles.theta(),
            phi: d.angles.phi(),
        })
    } else {
        None
    };
    Ok(QuantityReport {
        r: pt.split.r(),
        q_l: pt.split.q_l(),
        p_success: probabilities.get(pt.expected_outcome()),
        p_success_closed: success_probability_closed(&pt.split),
        capacity_bits: sdc_capacity(&rho)?,
        capacity_closed: capacity_closed_form(&pt.split),
        negativity_bits: log_negativity(&rho)?,
        negativity_closed: negativity_closed_form(&pt.split),
        mutual_info_bits: mutual_information(&rho)?,
        mutual_info_closed: mutual_information_closed_form(&pt.split),
        discord,
    })
}
