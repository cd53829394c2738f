// The original iteration as a rotation by 2θ in the target/non-target plane,
// checked against the closed form sin²((2k+1)θ) and the optimal iteration count.
//
// cargo run --example original_grover

use std::error::Error;

use grover_phases::{
    closed_form_probability, geometry_from_lambda, iteration_matrix, make_search_space, optimal_iterations, run,
    run_full, PhaseParams,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>8} {:>4} {:>14} {:>14}",
        "lambda", "k", "subspace P", "closed form P"
    );
    for lambda in [1.0 / 1024.0, 1.0 / 64.0, 0.147, 0.25, 0.4, 0.5, 0.75] {
        let k = optimal_iterations(lambda)?;
        let g = geometry_from_lambda(lambda)?;
        let p = run(&iteration_matrix(&PhaseParams::Original, &g), k).success_probability();
        let closed = closed_form_probability(lambda, k)?;
        println!("{lambda:>8.5} {k:>4} {p:>14.10} {closed:>14.10}");
        assert!((p - closed).abs() < 1e-10);
    }

    // the same search on an explicit 8-qubit database with 3 marked items
    let space = make_search_space(8, [17, 99, 200])?;
    let k = optimal_iterations(space.proportion())?;
    let full = run_full(&space, &PhaseParams::Original, k);
    println!(
        "N = {}, M = {}: {k} iterations find a target with probability {:.6}",
        space.size(),
        space.target_count(),
        full.target_probability()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
