//! Closed-form probabilities and `(λ, phase)` probability surfaces.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::equivalence::transform_phases;
use crate::error::{Error, Result};
use crate::model::{geometry_from_lambda, AlgorithmKind, PhaseParams};
use crate::numerics::{cis, ComplexScalar};
use crate::operators::iteration_matrix;
use crate::subspace::run;

fn check_unit_interval(x: f64) -> Result<()> {
    if x > 0.0 && x <= 1.0 {
        Ok(())
    } else {
        Err(Error::Proportion(x))
    }
}

/// `sin²((2k+1)·arcsin√λ)`: success probability of the original iteration.
pub fn closed_form_probability(lambda: f64, k: usize) -> Result<f64> {
    check_unit_interval(lambda)?;
    let theta = lambda.sqrt().asin();
    Ok(((2 * k + 1) as f64 * theta).sin().powi(2))
}

/// `⌊π·√(1/λ) / 4⌋`.
pub fn optimal_iterations(lambda: f64) -> Result<usize> {
    check_unit_interval(lambda)?;
    Ok((PI * (1.0 / lambda).sqrt() / 4.0).floor() as usize)
}

/// Target amplitude after one phase-matched Long iteration:
/// `√m·[1 - 2e^{iφ} - (1 - e^{iφ})²·m]`.
pub fn single_iteration_amplitude_long(m: f64, phi: f64) -> Result<ComplexScalar> {
    check_unit_interval(m)?;
    let one = Complex64::new(1.0, 0.0);
    let e = cis(phi);
    Ok((one - 2.0 * e - (one - e).powi(2) * m) * m.sqrt())
}

fn cubic(m: f64) -> f64 {
    ((4.0 * m - 8.0) * m + 5.0) * m
}

/// `4m³ - 8m² + 5m`, the one-iteration success probability at `φ = π/2`.
pub fn single_iteration_probability(m: f64) -> Result<f64> {
    check_unit_interval(m)?;
    Ok(cubic(m))
}

/// Critical points of the cubic: roots of `12m² - 16m + 5`.
pub const CUBIC_CRITICAL_POINTS: [f64; 2] = [0.5, 5.0 / 6.0];

/// Minimum of `4m³ - 8m² + 5m` over `[m_min, 1]`.
pub fn probability_floor(m_min: f64) -> Result<f64> {
    check_unit_interval(m_min)?;
    Ok(CUBIC_CRITICAL_POINTS
        .into_iter()
        .filter(|&m| m > m_min && m < 1.0)
        .chain([m_min, 1.0])
        .map(cubic)
        .fold(f64::INFINITY, f64::min))
}

/// `steps` evenly spaced values from `min` to `max` inclusive; a single step
/// yields `min`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearAxis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl LinearAxis {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        let axis = LinearAxis { min, max, steps };
        axis.validate()?;
        Ok(axis)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite()) {
            return Err(Error::Grid("axis bounds must be finite".into()));
        }
        if self.min > self.max {
            return Err(Error::Grid(format!("min {} exceeds max {}", self.min, self.max)));
        }
        if self.steps == 0 {
            return Err(Error::Grid("axis needs at least one step".into()));
        }
        Ok(())
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.steps == 1 {
            self.min
        } else if i + 1 == self.steps {
            self.max
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64
        }
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|i| self.value(i))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepGrid {
    pub lambda: LinearAxis,
    pub phase: LinearAxis,
    pub k: usize,
    pub kind: AlgorithmKind,
}

impl SweepGrid {
    /// 101×101 over `λ ∈ [0.01, 1]`, `phase ∈ [0, 2π]`.
    pub fn figure_default(kind: AlgorithmKind, k: usize) -> Self {
        SweepGrid {
            lambda: LinearAxis {
                min: 0.01,
                max: 1.0,
                steps: 101,
            },
            phase: LinearAxis {
                min: 0.0,
                max: 2.0 * PI,
                steps: 101,
            },
            k,
            kind,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.lambda.validate()?;
        self.phase.validate()?;
        check_unit_interval(self.lambda.min)?;
        check_unit_interval(self.lambda.max)
    }

    pub fn len(&self) -> usize {
        self.lambda.steps * self.phase.steps
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub lambda: f64,
    pub phase: f64,
    pub k: usize,
    pub probability: f64,
}

/// Rows ordered λ-major, then phase.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub kind: AlgorithmKind,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn probabilities(&self) -> impl Iterator<Item = f64> + '_ {
        self.rows.iter().map(|r| r.probability)
    }

    /// Largest absolute probability difference between two sweeps on the same grid.
    pub fn max_deviation(&self, other: &SweepResult) -> f64 {
        assert_eq!(self.rows.len(), other.rows.len(), "sweeps cover different grids");
        self.probabilities()
            .zip(other.probabilities())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Parameters for one cell. With `matched_from_long` the phase axis is Long's
/// `φ` and the kind receives the transformed parameters; otherwise the phase
/// feeds the kind directly (see [`PhaseParams::from_scalar`]).
pub fn cell_params(kind: AlgorithmKind, phase: f64, matched_from_long: bool) -> PhaseParams {
    if matched_from_long && kind != AlgorithmKind::Original {
        transform_phases(&PhaseParams::long(phase), kind).expect("long is always transformable")
    } else {
        PhaseParams::from_scalar(kind, phase)
    }
}

/// Success probability after `grid.k` iterations at every grid cell.
pub fn sweep(grid: &SweepGrid, matched_from_long: bool) -> Result<SweepResult> {
    grid.validate()?;
    let mut rows = Vec::with_capacity(grid.len());
    for lambda in grid.lambda.values() {
        let g = geometry_from_lambda(lambda)?;
        for phase in grid.phase.values() {
            let params = cell_params(grid.kind, phase, matched_from_long);
            let probability = run(&iteration_matrix(&params, &g), grid.k).success_probability();
            rows.push(SweepRow {
                lambda,
                phase,
                k: grid.k,
                probability,
            });
        }
    }
    Ok(SweepResult { kind: grid.kind, rows })
}

/// One point of the original-algorithm curve at the optimal iteration count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub lambda: f64,
    pub k: usize,
    pub probability: f64,
}

/// Number of points on the original-algorithm curve.
pub const CURVE_POINTS: usize = 200;

/// Original-algorithm success probability at `k = optimal_iterations(λ)` for
/// `λ = i/200, i = 1..=200`.
pub fn optimal_curve() -> Vec<CurvePoint> {
    (1..=CURVE_POINTS)
        .map(|i| {
            let lambda = i as f64 / CURVE_POINTS as f64;
            let k = optimal_iterations(lambda).expect("grid lies in (0, 1]");
            let probability = closed_form_probability(lambda, k).expect("grid lies in (0, 1]");
            CurvePoint { lambda, k, probability }
        })
        .collect()
}

/// Iteration count of the phase surfaces.
pub const SURFACE_ITERATIONS: usize = 5;

/// Phase-matched `k = 5` surface for one variant, phase axis in Long's `φ`.
pub fn matched_surface(kind: AlgorithmKind) -> SweepResult {
    sweep(&SweepGrid::figure_default(kind, SURFACE_ITERATIONS), true).expect("default grid is valid")
}
