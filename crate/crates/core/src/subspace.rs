//! Two-amplitude engine: iterate a 2×2 iteration matrix on `sinθ|α⟩ + cosθ|β⟩`.

use num_complex::Complex64;

use crate::model::SubspaceGeometry;
use crate::numerics::{ComplexScalar, Mat2C, Pair};
use crate::operators::IterationMatrix;

/// Amplitudes on `|α⟩` (targets) and `|β⟩` (non-targets).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SubspaceState {
    pub a: ComplexScalar,
    pub b: ComplexScalar,
}

impl SubspaceState {
    pub fn new(a: ComplexScalar, b: ComplexScalar) -> Self {
        SubspaceState { a, b }
    }

    pub fn pair(&self) -> Pair {
        [self.a, self.b]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn success_probability(&self) -> f64 {
        success_probability(self)
    }

    fn step(self, m: &Mat2C) -> Self {
        let [a, b] = m.apply(self.pair());
        SubspaceState { a, b }
    }
}

pub fn initial_state(g: &SubspaceGeometry) -> SubspaceState {
    SubspaceState::new(Complex64::new(g.sin_theta(), 0.0), Complex64::new(g.cos_theta(), 0.0))
}

/// Applies `m` to `state` `k` times.
pub fn evolve(m: &Mat2C, state: SubspaceState, k: usize) -> SubspaceState {
    (0..k).fold(state, |s, _| s.step(m))
}

/// State after `k` iterations from the uniform superposition.
pub fn run(it: &IterationMatrix, k: usize) -> SubspaceState {
    evolve(&it.m, initial_state(&it.geometry), k)
}

/// Every intermediate state `k = 0..=k_max`.
pub fn trajectory(it: &IterationMatrix, k_max: usize) -> Vec<SubspaceState> {
    std::iter::successors(Some(initial_state(&it.geometry)), |s| Some(s.step(&it.m)))
        .take(k_max + 1)
        .collect()
}

/// `|a|²`, clamped to `[0, 1]`.
pub fn success_probability(s: &SubspaceState) -> f64 {
    s.a.norm_sqr().clamp(0.0, 1.0)
}
