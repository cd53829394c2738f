//! Search problem data model: database, targets, subspace angle, and the
//! per-algorithm phase parameters.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported qubit count for an explicit database.
pub const MAX_QUBITS: u32 = 24;

/// A database of `N = 2^n` items with a non-empty set of target indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpace {
    n: u32,
    targets: Vec<usize>,
}

impl SearchSpace {
    /// Builds a search space; targets are sorted and deduplicated.
    pub fn new(n: u32, targets: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let size = 1usize << n;
        let mut targets: Vec<usize> = targets.into_iter().collect();
        targets.sort_unstable();
        targets.dedup();
        if targets.is_empty() {
            return Err(Error::NoTargets);
        }
        if let Some(&index) = targets.last().filter(|&&i| i >= size) {
            return Err(Error::TargetOutOfRange { index, size });
        }
        Ok(SearchSpace { n, targets })
    }

    pub fn qubits(&self) -> u32 {
        self.n
    }

    /// Database size `N`.
    pub fn size(&self) -> usize {
        1usize << self.n
    }

    /// Number of targets `M`.
    pub fn target_count(&self) -> usize {
        self.targets.len()
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn is_target(&self, index: usize) -> bool {
        self.targets.binary_search(&index).is_ok()
    }

    /// Membership mask of length `N`.
    pub fn target_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.size()];
        for &t in &self.targets {
            mask[t] = true;
        }
        mask
    }

    /// `M / N`.
    pub fn proportion(&self) -> f64 {
        self.target_count() as f64 / self.size() as f64
    }

    pub fn geometry(&self) -> SubspaceGeometry {
        geometry_of(self)
    }
}

/// Convenience wrapper around [`SearchSpace::new`].
pub fn make_search_space(n: u32, targets: impl IntoIterator<Item = usize>) -> Result<SearchSpace> {
    SearchSpace::new(n, targets)
}

/// The angle `θ` with `sin θ = √λ`, where `λ = M/N`.
///
/// `m = sin²θ` is the same number as `λ`; both accessors exist because the
/// single-iteration formulas are written in `m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SubspaceGeometry {
    theta: f64,
    lambda: f64,
}

impl SubspaceGeometry {
    pub fn from_lambda(lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda <= 1.0) {
            return Err(Error::Proportion(lambda));
        }
        Ok(SubspaceGeometry {
            theta: lambda.sqrt().asin(),
            lambda,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn m(&self) -> f64 {
        self.lambda
    }

    pub fn sin_theta(&self) -> f64 {
        self.lambda.sqrt()
    }

    pub fn cos_theta(&self) -> f64 {
        (1.0 - self.lambda).sqrt()
    }
}

pub fn geometry_of(space: &SearchSpace) -> SubspaceGeometry {
    SubspaceGeometry::from_lambda(space.proportion()).expect("a search space has at least one target")
}

pub fn geometry_from_lambda(lambda: f64) -> Result<SubspaceGeometry> {
    SubspaceGeometry::from_lambda(lambda)
}

/// The original iteration and its four phase-generalized variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmKind {
    Original,
    /// Phase-matched oracle and diffusion, `φ`.
    Long,
    /// `2cosτ·e^{iτ}` factors, `τ`.
    LiDf,
    /// Four-phase form, `γ₁, γ₂, η₁, η₂`.
    LiCm,
    /// `β` on the diffusion, `-β` on the oracle.
    LiPc,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 5] = [
        AlgorithmKind::Original,
        AlgorithmKind::Long,
        AlgorithmKind::LiDf,
        AlgorithmKind::LiCm,
        AlgorithmKind::LiPc,
    ];

    /// The four phase-parameterized variants.
    pub const VARIANTS: [AlgorithmKind; 4] = [
        AlgorithmKind::Long,
        AlgorithmKind::LiDf,
        AlgorithmKind::LiCm,
        AlgorithmKind::LiPc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmKind::Original => "original",
            AlgorithmKind::Long => "long",
            AlgorithmKind::LiDf => "lidf",
            AlgorithmKind::LiCm => "licm",
            AlgorithmKind::LiPc => "lipc",
        }
    }
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        AlgorithmKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown algorithm '{s}' (expected original, long, lidf, licm or lipc)"))
    }
}

/// Phase parameters, tagged by algorithm. All angles in radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PhaseParams {
    Original,
    /// Oracle phase `phi`; the diffusion phase defaults to `phi` when
    /// `diffusion_phi` is `None` (the phase-matched case).
    Long {
        phi: f64,
        diffusion_phi: Option<f64>,
    },
    LiDf {
        tau: f64,
    },
    /// `gamma1, gamma2` enter the diffusion; `eta1, eta2` the oracle.
    LiCm {
        gamma1: f64,
        gamma2: f64,
        eta1: f64,
        eta2: f64,
    },
    LiPc {
        beta: f64,
    },
}

impl PhaseParams {
    pub fn long(phi: f64) -> Self {
        PhaseParams::Long {
            phi,
            diffusion_phi: None,
        }
    }

    pub fn long_two_phase(oracle_phi: f64, diffusion_phi: f64) -> Self {
        PhaseParams::Long {
            phi: oracle_phi,
            diffusion_phi: Some(diffusion_phi),
        }
    }

    pub fn lidf(tau: f64) -> Self {
        PhaseParams::LiDf { tau }
    }

    pub fn licm(gamma1: f64, gamma2: f64, eta1: f64, eta2: f64) -> Self {
        PhaseParams::LiCm {
            gamma1,
            gamma2,
            eta1,
            eta2,
        }
    }

    /// LiCM with the oracle phases equal to the diffusion phases.
    pub fn licm_tied(gamma1: f64, gamma2: f64) -> Self {
        Self::licm(gamma1, gamma2, gamma1, gamma2)
    }

    pub fn lipc(beta: f64) -> Self {
        PhaseParams::LiPc { beta }
    }

    /// Builds parameters from a single phase axis value, as used by sweeps:
    /// Long gets `φ = ϕ = phase`, LiDF `τ`, LiCM `γ₁ = η₁ = phase` with
    /// `γ₂ = η₂ = 0`, LiPC `β`. Original ignores the phase.
    pub fn from_scalar(kind: AlgorithmKind, phase: f64) -> Self {
        match kind {
            AlgorithmKind::Original => PhaseParams::Original,
            AlgorithmKind::Long => Self::long(phase),
            AlgorithmKind::LiDf => Self::lidf(phase),
            AlgorithmKind::LiCm => Self::licm(phase, 0.0, phase, 0.0),
            AlgorithmKind::LiPc => Self::lipc(phase),
        }
    }

    pub fn kind(&self) -> AlgorithmKind {
        match self {
            PhaseParams::Original => AlgorithmKind::Original,
            PhaseParams::Long { .. } => AlgorithmKind::Long,
            PhaseParams::LiDf { .. } => AlgorithmKind::LiDf,
            PhaseParams::LiCm { .. } => AlgorithmKind::LiCm,
            PhaseParams::LiPc { .. } => AlgorithmKind::LiPc,
        }
    }

    pub fn angles(&self) -> Vec<f64> {
        match *self {
            PhaseParams::Original => vec![],
            PhaseParams::Long { phi, diffusion_phi } => {
                let mut v = vec![phi];
                v.extend(diffusion_phi);
                v
            }
            PhaseParams::LiDf { tau } => vec![tau],
            PhaseParams::LiCm {
                gamma1,
                gamma2,
                eta1,
                eta2,
            } => vec![gamma1, gamma2, eta1, eta2],
            PhaseParams::LiPc { beta } => vec![beta],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.angles().iter().all(|a| a.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonFinitePhase)
        }
    }
}

impl fmt::Display for PhaseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PhaseParams::Original => write!(f, "original"),
            PhaseParams::Long {
                phi,
                diffusion_phi: None,
            } => write!(f, "long(phi={phi:.6})"),
            PhaseParams::Long {
                phi,
                diffusion_phi: Some(d),
            } => {
                write!(f, "long(phi={phi:.6}, diffusion_phi={d:.6})")
            }
            PhaseParams::LiDf { tau } => write!(f, "lidf(tau={tau:.6})"),
            PhaseParams::LiCm {
                gamma1,
                gamma2,
                eta1,
                eta2,
            } => write!(
                f,
                "licm(gamma1={gamma1:.6}, gamma2={gamma2:.6}, eta1={eta1:.6}, eta2={eta2:.6})"
            ),
            PhaseParams::LiPc { beta } => write!(f, "lipc(beta={beta:.6})"),
        }
    }
}
