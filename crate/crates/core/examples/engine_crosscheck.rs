// The two-amplitude engine against a full statevector simulation: random
// databases, random variants and phases, up to 25 iterations.
//
// cargo run --release --example engine_crosscheck

use std::error::Error;

use grover_phases::crosscheck::{crosscheck, GENERATOR};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("generator: {GENERATOR}");
    println!(
        "{:>3} {:>6} {:>14} {:>14} {:>14}",
        "n", "cases", "max dP", "max residual", "max d(amp)"
    );
    for n in 1..=12 {
        let s = crosscheck(n, 42, 50)?;
        println!(
            "{n:>3} {:>6} {:>14.3e} {:>14.3e} {:>14.3e}",
            s.cases, s.max_probability_deviation, s.max_residual, s.max_amplitude_deviation
        );
        assert!(s.max_probability_deviation < 1e-10 && s.max_residual < 1e-10);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
