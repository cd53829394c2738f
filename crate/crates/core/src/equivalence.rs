//! The phase-transform condition `φ = 2τ + π = γ₁ - γ₂ = -β` and the global
//! phases it predicts between the four variant iterations.
//!
//! Relative to Long's iteration `G_long`, the variants satisfy
//!
//! * `G_long = G_lidf`
//! * `G_long = e^{-i(γ₂+η₂)} · G_licm` (requires `γ₁ - γ₂ = η₁ - η₂`)
//! * `G_long = -e^{-iβ} · G_lipc`
//!
//! With `η = γ` the LiCM factor is `e^{-2iγ₂}`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{AlgorithmKind, PhaseParams, SubspaceGeometry};
use crate::numerics::{global_phase_align, normalize_angle, UnitPhase};
use crate::operators::iteration_matrix;
use crate::subspace::run;

/// Angular tolerance when checking that parameters satisfy the condition.
pub const CONDITION_TOL: f64 = 1e-9;

fn same_angle(x: f64, y: f64) -> bool {
    normalize_angle(x - y).abs() <= CONDITION_TOL
}

/// The common value `φ` that `params` encodes under the condition.
pub fn common_phase(params: &PhaseParams) -> Result<f64> {
    params.validate()?;
    match *params {
        PhaseParams::Original => Err(Error::UnsupportedKind(AlgorithmKind::Original)),
        PhaseParams::Long { phi, diffusion_phi } => match diffusion_phi {
            Some(d) if !same_angle(d, phi) => Err(Error::ConditionViolated(format!(
                "long oracle phase {phi} differs from diffusion phase {d}"
            ))),
            _ => Ok(phi),
        },
        PhaseParams::LiDf { tau } => Ok(2.0 * tau + PI),
        PhaseParams::LiCm {
            gamma1,
            gamma2,
            eta1,
            eta2,
        } => {
            if same_angle(gamma1 - gamma2, eta1 - eta2) {
                Ok(gamma1 - gamma2)
            } else {
                Err(Error::ConditionViolated(format!(
                    "licm requires gamma1 - gamma2 = eta1 - eta2, got {} and {}",
                    gamma1 - gamma2,
                    eta1 - eta2
                )))
            }
        }
        PhaseParams::LiPc { beta } => Ok(-beta),
    }
}

/// Maps parameters of one variant onto another through the common phase.
///
/// LiCM targets receive the representative `(φ, 0, φ, 0)`.
pub fn transform_phases(from: &PhaseParams, to_kind: AlgorithmKind) -> Result<PhaseParams> {
    let phi = common_phase(from)?;
    Ok(match to_kind {
        AlgorithmKind::Original => return Err(Error::UnsupportedKind(AlgorithmKind::Original)),
        AlgorithmKind::Long => PhaseParams::long(phi),
        AlgorithmKind::LiDf => PhaseParams::lidf((phi - PI) / 2.0),
        AlgorithmKind::LiCm => PhaseParams::licm(phi, 0.0, phi, 0.0),
        AlgorithmKind::LiPc => PhaseParams::lipc(-phi),
    })
}

/// `χ` with `G_long = e^{iχ}·G(params)`.
fn phase_from_long(params: &PhaseParams) -> Result<f64> {
    common_phase(params)?;
    Ok(match *params {
        PhaseParams::LiCm { gamma2, eta2, .. } => -(gamma2 + eta2),
        PhaseParams::LiPc { beta } => PI - beta,
        _ => 0.0,
    })
}

/// `χ` with `G(from) = e^{iχ}·G(to)`, for parameters that share a common phase.
pub fn predicted_global_phase(from: &PhaseParams, to: &PhaseParams) -> Result<UnitPhase> {
    let (phi_from, phi_to) = (common_phase(from)?, common_phase(to)?);
    if !same_angle(phi_from, phi_to) {
        return Err(Error::ConditionViolated(format!(
            "{from} encodes phase {phi_from} but {to} encodes {phi_to}"
        )));
    }
    Ok(UnitPhase::new(phase_from_long(to)? - phase_from_long(from)?))
}

/// Outcome of aligning one iteration matrix against another.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceReport {
    pub source: PhaseParams,
    pub target: PhaseParams,
    pub predicted_phase: UnitPhase,
    pub measured_phase: Option<UnitPhase>,
    /// Largest entrywise `|G_source - e^{iχ}·G_target|`, using the measured
    /// phase when alignment succeeded and the predicted one otherwise.
    pub max_entry_deviation: f64,
    pub holds: bool,
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let measured = self
            .measured_phase
            .map_or_else(|| "none".to_string(), |p| p.to_string());
        write!(
            f,
            "{} vs {}: predicted={} measured={} max_dev={:.3e} {}",
            self.source.kind(),
            self.target.kind(),
            self.predicted_phase,
            measured,
            self.max_entry_deviation,
            if self.holds { "HOLD" } else { "FAIL" }
        )
    }
}

/// Aligns `G(source)` with `G(target)` and compares against `predicted`.
pub fn compare(
    source: &PhaseParams,
    target: &PhaseParams,
    predicted: UnitPhase,
    g: &SubspaceGeometry,
    tol: f64,
) -> EquivalenceReport {
    let a = iteration_matrix(source, g).m;
    let b = iteration_matrix(target, g).m;
    let measured = global_phase_align(&a, &b, tol);
    let used = measured.unwrap_or(predicted);
    let max_entry_deviation = a.max_abs_diff(&b.scale(used.to_complex()));
    let holds = measured.is_some_and(|m| max_entry_deviation <= tol && m.distance(predicted) <= tol);
    EquivalenceReport {
        source: *source,
        target: *target,
        predicted_phase: predicted,
        measured_phase: measured,
        max_entry_deviation,
        holds,
    }
}

/// Long's parameters mapped onto LiDF, LiCM and LiPC, each with the phase
/// relating `G_long` to it.
pub fn matched_targets(phi: f64) -> Vec<(PhaseParams, UnitPhase)> {
    let long = PhaseParams::long(phi);
    [AlgorithmKind::LiDf, AlgorithmKind::LiCm, AlgorithmKind::LiPc]
        .into_iter()
        .map(|kind| {
            let target = transform_phases(&long, kind).expect("long is always transformable");
            let chi = predicted_global_phase(&long, &target).expect("transformed parameters satisfy the condition");
            (target, chi)
        })
        .collect()
}

/// Checks Long at phase `phi` against each of the other three variants.
pub fn verify_proposition1(phi: f64, g: &SubspaceGeometry, tol: f64) -> Vec<EquivalenceReport> {
    let long = PhaseParams::long(phi);
    matched_targets(phi)
        .into_iter()
        .map(|(target, chi)| compare(&long, &target, chi, g, tol))
        .collect()
}

/// Success probability after `k` iterations for each variant at matched phases.
pub fn matched_probabilities(phi: f64, g: &SubspaceGeometry, k: usize) -> Vec<(AlgorithmKind, f64)> {
    let long = PhaseParams::long(phi);
    AlgorithmKind::VARIANTS
        .into_iter()
        .map(|kind| {
            let params = transform_phases(&long, kind).expect("long is always transformable");
            (kind, run(&iteration_matrix(&params, g), k).success_probability())
        })
        .collect()
}
