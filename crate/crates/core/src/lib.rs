//! Numerical laboratory for the original Grover iteration and four
//! phase-generalized variants.
//!
//! Under the phase-transform condition `φ = 2τ + π = γ₁ - γ₂ = -β` the
//! variants' iteration operators coincide up to a global phase, so their
//! success probabilities agree for every iteration count. This crate builds the
//! operators in the two-dimensional `{|α⟩, |β⟩}` plane, cross-checks them
//! against a full statevector simulation, verifies the predicted phases, and
//! tabulates the probability curves and surfaces.
//!
//! ```
//! use grover_phases::{geometry_from_lambda, iteration_matrix, run, PhaseParams};
//!
//! let g = geometry_from_lambda(0.25).unwrap();
//! let state = run(&iteration_matrix(&PhaseParams::Original, &g), 1);
//! assert!((state.success_probability() - 1.0).abs() < 1e-12);
//! ```

pub mod analysis;
pub mod cli;
pub mod crosscheck;
pub mod csv;
pub mod equivalence;
pub mod error;
pub mod model;
pub mod numerics;
pub mod operators;
pub mod statevector;
pub mod subspace;

pub use analysis::{
    closed_form_probability, optimal_iterations, probability_floor, single_iteration_amplitude_long,
    single_iteration_probability, sweep, LinearAxis, SweepGrid, SweepResult, SweepRow,
};
pub use equivalence::{predicted_global_phase, transform_phases, verify_proposition1, EquivalenceReport};
pub use error::{Error, Result};
pub use model::{
    geometry_from_lambda, geometry_of, make_search_space, AlgorithmKind, PhaseParams, SearchSpace, SubspaceGeometry,
};
pub use numerics::{global_phase_align, is_unitary, ComplexScalar, Mat2C, UnitPhase};
pub use operators::{iteration_matrix, subspace_diffusion, subspace_oracle, IterationMatrix};
pub use statevector::{run_full, StateVector};
pub use subspace::{initial_state, run, success_probability, SubspaceState};
