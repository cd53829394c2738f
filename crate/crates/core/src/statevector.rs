//! Full `N`-amplitude simulation of the same iterations, used as an independent
//! check on the two-dimensional engine.
//!
//! Operators are never materialized. Every oracle has the form
//! `x·I + y·|t⟩⟨t|` and every diffusion the form `c·|s⟩⟨s| + d·I`, so each
//! application is a single O(N) pass.

use num_complex::Complex64;

use crate::model::{PhaseParams, SearchSpace};
use crate::numerics::{cis, ComplexScalar};
use crate::subspace::SubspaceState;

const ONE: ComplexScalar = Complex64::new(1.0, 0.0);

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<ComplexScalar>,
    space: SearchSpace,
}

impl StateVector {
    /// `|s⟩ = N^{-1/2} Σ|x⟩`.
    pub fn uniform(space: &SearchSpace) -> Self {
        let n = space.size();
        let amp = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        StateVector {
            amplitudes: vec![amp; n],
            space: space.clone(),
        }
    }

    pub fn amplitudes(&self) -> &[ComplexScalar] {
        &self.amplitudes
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Applies `x·I + y·|t⟩⟨t|` in place.
    fn apply_target_affine(&mut self, x: ComplexScalar, y: ComplexScalar) {
        let mask = self.space.target_mask();
        for (amp, &is_target) in self.amplitudes.iter_mut().zip(&mask) {
            *amp = if is_target { (x + y) * *amp } else { x * *amp };
        }
    }

    /// Applies `c·|s⟩⟨s| + d·I` in place.
    fn apply_uniform_affine(&mut self, c: ComplexScalar, d: ComplexScalar) {
        let inv_sqrt_n = 1.0 / (self.amplitudes.len() as f64).sqrt();
        let overlap: ComplexScalar = self.amplitudes.iter().sum::<ComplexScalar>() * inv_sqrt_n;
        let shift = c * overlap * inv_sqrt_n;
        for amp in &mut self.amplitudes {
            *amp = shift + d * *amp;
        }
    }

    pub fn apply_oracle(mut self, params: &PhaseParams) -> Self {
        let (x, y) = match *params {
            PhaseParams::Original => (ONE, Complex64::new(-2.0, 0.0)),
            PhaseParams::Long { phi, .. } => (ONE, -(ONE - cis(phi))),
            PhaseParams::LiDf { tau } => (ONE, -(cis(tau) * (2.0 * tau.cos()))),
            PhaseParams::LiCm { eta1, eta2, .. } => (-cis(eta2), -(cis(eta1) - cis(eta2))),
            PhaseParams::LiPc { beta } => (ONE, -(ONE - cis(-beta))),
        };
        self.apply_target_affine(x, y);
        self
    }

    pub fn apply_diffusion(mut self, params: &PhaseParams) -> Self {
        let (c, d) = match *params {
            PhaseParams::Original => (Complex64::new(2.0, 0.0), -ONE),
            PhaseParams::Long { phi, diffusion_phi } => (ONE - cis(diffusion_phi.unwrap_or(phi)), -ONE),
            PhaseParams::LiDf { tau } => (cis(tau) * (2.0 * tau.cos()), -ONE),
            PhaseParams::LiCm { gamma1, gamma2, .. } => (cis(gamma1) - cis(gamma2), cis(gamma2)),
            PhaseParams::LiPc { beta } => (ONE - cis(beta), cis(beta)),
        };
        self.apply_uniform_affine(c, d);
        self
    }

    /// Probability of measuring any target index, clamped to `[0, 1]`.
    pub fn target_probability(&self) -> f64 {
        self.space
            .targets()
            .iter()
            .map(|&t| self.amplitudes[t].norm_sqr())
            .sum::<f64>()
            .clamp(0.0, 1.0)
    }

    /// Components along `|α⟩` and `|β⟩`, and the norm of what lies outside
    /// their span.
    pub fn project_to_subspace(&self) -> (SubspaceState, f64) {
        let mask = self.space.target_mask();
        let m = self.space.target_count();
        let rest = self.space.size() - m;

        let (mut sum_t, mut sum_r) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for (amp, &is_target) in self.amplitudes.iter().zip(&mask) {
            if is_target {
                sum_t += amp;
            } else {
                sum_r += amp;
            }
        }
        // uniform amplitude of the projection onto each half
        let mean_t = sum_t / m as f64;
        let mean_r = if rest > 0 {
            sum_r / rest as f64
        } else {
            Complex64::new(0.0, 0.0)
        };

        let residual_sqr: f64 = self
            .amplitudes
            .iter()
            .zip(&mask)
            .map(|(amp, &is_target)| (amp - if is_target { mean_t } else { mean_r }).norm_sqr())
            .sum();

        let a = mean_t * (m as f64).sqrt();
        let b = mean_r * (rest as f64).sqrt();
        (SubspaceState::new(a, b), residual_sqr.sqrt())
    }
}

pub fn uniform_state(space: &SearchSpace) -> StateVector {
    StateVector::uniform(space)
}

pub fn apply_oracle(v: StateVector, params: &PhaseParams) -> StateVector {
    v.apply_oracle(params)
}

pub fn apply_diffusion(v: StateVector, params: &PhaseParams) -> StateVector {
    v.apply_diffusion(params)
}

/// `k` rounds of oracle then diffusion, from the uniform superposition.
pub fn run_full(space: &SearchSpace, params: &PhaseParams, k: usize) -> StateVector {
    (0..k).fold(StateVector::uniform(space), |v, _| {
        v.apply_oracle(params).apply_diffusion(params)
    })
}

pub fn target_probability(v: &StateVector) -> f64 {
    v.target_probability()
}

pub fn project_to_subspace(v: &StateVector) -> (SubspaceState, f64) {
    v.project_to_subspace()
}
