//! Seeded random comparison of the statevector engine against the subspace engine.

use std::f64::consts::PI;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{AlgorithmKind, PhaseParams, SearchSpace};
use crate::operators::iteration_matrix;
use crate::statevector::run_full;
use crate::subspace::run;

/// Identifies the pseudo-random generator behind [`crosscheck`].
pub const GENERATOR: &str = "ChaCha8Rng (rand_chacha 0.3), seed_from_u64";

/// Largest iteration count drawn for a case.
pub const MAX_CASE_ITERATIONS: usize = 25;

/// Largest qubit count accepted by [`crosscheck`].
pub const MAX_CROSSCHECK_QUBITS: u32 = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct Case {
    pub space: SearchSpace,
    pub params: PhaseParams,
    pub k: usize,
}

fn angle<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(-PI..PI)
}

/// Random parameters of the given kind; Long is two-phase half of the time.
pub fn random_params<R: Rng>(rng: &mut R, kind: AlgorithmKind) -> PhaseParams {
    match kind {
        AlgorithmKind::Original => PhaseParams::Original,
        AlgorithmKind::Long => {
            let phi = angle(rng);
            if rng.gen_bool(0.5) {
                PhaseParams::long_two_phase(phi, angle(rng))
            } else {
                PhaseParams::long(phi)
            }
        }
        AlgorithmKind::LiDf => PhaseParams::lidf(angle(rng)),
        AlgorithmKind::LiCm => PhaseParams::licm(angle(rng), angle(rng), angle(rng), angle(rng)),
        AlgorithmKind::LiPc => PhaseParams::lipc(angle(rng)),
    }
}

/// Uniform target count in `1..=N`, uniformly chosen targets, uniform kind,
/// uniform phases in `[-π, π)` and `k` in `0..=25`.
pub fn random_case<R: Rng>(rng: &mut R, n: u32) -> Result<Case> {
    let size = 1usize << n;
    let m = rng.gen_range(1..=size);
    let targets = sample(rng, size, m).into_vec();
    let space = SearchSpace::new(n, targets)?;
    let kind = AlgorithmKind::ALL[rng.gen_range(0..AlgorithmKind::ALL.len())];
    let params = random_params(rng, kind);
    let k = rng.gen_range(0..=MAX_CASE_ITERATIONS);
    Ok(Case { space, params, k })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaseOutcome {
    pub statevector_probability: f64,
    pub subspace_probability: f64,
    /// Norm of the full state outside `span{|α⟩, |β⟩}`.
    pub residual: f64,
    /// Largest amplitude difference between the projected full state and the
    /// subspace state.
    pub amplitude_deviation: f64,
    pub norm_deviation: f64,
}

impl CaseOutcome {
    pub fn probability_deviation(&self) -> f64 {
        (self.statevector_probability - self.subspace_probability).abs()
    }
}

pub fn evaluate(case: &Case) -> CaseOutcome {
    let full = run_full(&case.space, &case.params, case.k);
    let reduced = run(&iteration_matrix(&case.params, &case.space.geometry()), case.k);
    let (projected, residual) = full.project_to_subspace();
    let amplitude_deviation = [projected.a - reduced.a, projected.b - reduced.b]
        .iter()
        .map(|d| d.norm())
        .fold(0.0, f64::max);
    CaseOutcome {
        statevector_probability: full.target_probability(),
        subspace_probability: reduced.success_probability(),
        residual,
        amplitude_deviation,
        norm_deviation: (full.norm_sqr() - 1.0).abs(),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CrosscheckSummary {
    pub cases: usize,
    pub max_probability_deviation: f64,
    pub max_residual: f64,
    pub max_amplitude_deviation: f64,
}

impl CrosscheckSummary {
    fn absorb(&mut self, o: &CaseOutcome) {
        self.cases += 1;
        self.max_probability_deviation = self.max_probability_deviation.max(o.probability_deviation());
        self.max_residual = self.max_residual.max(o.residual);
        self.max_amplitude_deviation = self.max_amplitude_deviation.max(o.amplitude_deviation);
    }
}

/// Runs `samples` random cases on `n` qubits from a seeded generator.
pub fn crosscheck(n: u32, seed: u64, samples: usize) -> Result<CrosscheckSummary> {
    if n == 0 || n > MAX_CROSSCHECK_QUBITS {
        return Err(Error::QubitCount(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = CrosscheckSummary::default();
    for _ in 0..samples {
        let case = random_case(&mut rng, n)?;
        summary.absorb(&evaluate(&case));
    }
    Ok(summary)
}
