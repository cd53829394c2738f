// The four phase variants differ only by a global phase once their phases
// satisfy φ = 2τ + π = γ₁ - γ₂ = -β.
//
// cargo run --example phase_equivalence

use std::error::Error;
use std::f64::consts::PI;

use grover_phases::equivalence::matched_probabilities;
use grover_phases::{geometry_from_lambda, transform_phases, verify_proposition1, AlgorithmKind, PhaseParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let long = PhaseParams::long(0.7);
    for kind in [AlgorithmKind::LiDf, AlgorithmKind::LiCm, AlgorithmKind::LiPc] {
        println!("{long} -> {}", transform_phases(&long, kind)?);
    }
    println!();

    for (phi, lambda) in [(0.7, 0.2), (PI / 2.0, 1.0 / 3.0), (PI, 0.25), (-2.4, 0.9)] {
        let g = geometry_from_lambda(lambda)?;
        println!("phi = {phi:.4}, lambda = {lambda:.4}");
        for report in verify_proposition1(phi, &g, 1e-10) {
            println!("  {report}");
            assert!(report.holds);
        }
        let probs: Vec<String> = matched_probabilities(phi, &g, 5)
            .into_iter()
            .map(|(kind, p)| format!("{kind}={p:.10}"))
            .collect();
        println!("  after 5 iterations: {}", probs.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
