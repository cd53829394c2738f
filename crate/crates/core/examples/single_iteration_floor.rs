// With the phase set to π/2, one iteration succeeds with probability
// 4m³ - 8m² + 5m, which never drops below 25/27 once m ≥ 1/3. The same
// curve appears for every variant at matched phases.
//
// cargo run --example single_iteration_floor

use std::error::Error;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use grover_phases::{
    geometry_from_lambda, iteration_matrix, probability_floor, run, single_iteration_probability, PhaseParams,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let variants = [
        PhaseParams::long(FRAC_PI_2),
        PhaseParams::lidf(-FRAC_PI_4),
        PhaseParams::licm_tied(FRAC_PI_2, 0.0),
        PhaseParams::lipc(-FRAC_PI_2),
    ];
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "m", "cubic", "long", "lidf", "licm", "lipc"
    );
    for i in 0..=12 {
        let m = 1.0 / 3.0 + (2.0 / 3.0) * i as f64 / 12.0;
        let g = geometry_from_lambda(m)?;
        let cubic = single_iteration_probability(m)?;
        let cells: Vec<String> = variants
            .iter()
            .map(|p| format!("{:>12.9}", run(&iteration_matrix(p, &g), 1).success_probability()))
            .collect();
        println!("{m:>6.4} {cubic:>12.9} {}", cells.join(" "));
    }
    let floor = probability_floor(1.0 / 3.0)?;
    println!("minimum over [1/3, 1]: {floor:.12} (25/27 = {:.12})", 25.0 / 27.0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
