//! Acceptance criteria. Each criterion prints one `PASS`/`FAIL` line; the test
//! fails if any criterion fails.
//!
//! Expected values come from closed forms evaluated here, independently of the
//! matrix construction in the library.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::time::Instant;

use grover_phases::analysis::{matched_surface, probability_floor, CUBIC_CRITICAL_POINTS};
use grover_phases::crosscheck::{crosscheck, MAX_CASE_ITERATIONS};
use grover_phases::numerics::normalize_angle;
use grover_phases::subspace::{evolve, initial_state};
use grover_phases::{
    closed_form_probability, geometry_from_lambda, global_phase_align, iteration_matrix, optimal_iterations, run,
    AlgorithmKind, PhaseParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, ok: String, fail: String) -> Outcome {
    if cond {
        Ok(ok)
    } else {
        Err(fail)
    }
}

fn cubic(m: f64) -> f64 {
    4.0 * m.powi(3) - 8.0 * m.powi(2) + 5.0 * m
}

/// 1. Original-algorithm spot values at the optimal iteration count.
fn criterion_1() -> Outcome {
    let at = |lambda: f64| closed_form_probability(lambda, optimal_iterations(lambda).unwrap()).unwrap();
    let p_half = at(0.5);
    let p_147 = at(0.147);
    // independent evaluation: θ = arcsin√λ, k = ⌊π/(4 sinθ)⌋
    let reference = |lambda: f64| {
        let theta = lambda.sqrt().asin();
        let k = (PI / (4.0 * lambda.sqrt())).floor();
        ((2.0 * k + 1.0) * theta).sin().powi(2)
    };
    check(
        (p_half - 0.5).abs() <= 1e-12 && (0.845..=0.858).contains(&p_147) && (p_147 - reference(0.147)).abs() <= 1e-12,
        format!("P(0.5) = {p_half:.15}, P(0.147) = {p_147:.6}"),
        format!("P(0.5) = {p_half}, P(0.147) = {p_147}"),
    )
}

/// 2. Random matched tuples align with the predicted global phases.
fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let tol = 1e-10;
    let (mut worst_dev, mut worst_phase) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let phi = rng.gen_range(-PI..PI);
        let lambda = rng.gen_range(1e-3..=1.0);
        let (g2, e2) = (rng.gen_range(-PI..PI), rng.gen_range(-PI..PI));
        let beta = -phi;
        let g = geometry_from_lambda(lambda).unwrap();
        let long = iteration_matrix(&PhaseParams::long(phi), &g).m;
        let variants = [
            (PhaseParams::lidf((phi - PI) / 2.0), 0.0),
            (PhaseParams::licm(phi + g2, g2, phi + e2, e2), -(g2 + e2)),
            (PhaseParams::lipc(beta), PI - beta),
        ];
        for (params, predicted) in variants {
            let other = iteration_matrix(&params, &g).m;
            let Some(chi) = global_phase_align(&long, &other, tol) else {
                return Err(format!("no alignment for {params} at phi={phi}, lambda={lambda}"));
            };
            worst_dev = worst_dev.max(long.max_abs_diff(&other.scale(chi.to_complex())));
            worst_phase = worst_phase.max(normalize_angle(chi.angle() - predicted).abs());
        }
    }
    check(
        worst_dev < tol && worst_phase <= tol,
        format!("3000 alignments, max deviation {worst_dev:.2e}, max phase error {worst_phase:.2e}"),
        format!("max deviation {worst_dev:.2e}, max phase error {worst_phase:.2e}"),
    )
}

/// 3. One-iteration floor of 25/27 for m ≥ 1/3.
fn criterion_3() -> Outcome {
    let floor = 25.0 / 27.0;
    let analytic = probability_floor(1.0 / 3.0).unwrap();
    let attained = [1.0 / 3.0, CUBIC_CRITICAL_POINTS[1]]
        .iter()
        .all(|&m| (cubic(m) - floor).abs() <= 1e-12);
    let steps = 100_000;
    let grid_min = (0..=steps)
        .map(|i| cubic(1.0 / 3.0 + (2.0 / 3.0) * i as f64 / steps as f64))
        .fold(f64::INFINITY, f64::min);
    // exact rational check: 4/27 - 8/9 + 5/3 = 200/216 = 25/27
    let rational = 4 * 216 / 27 - 8 * 216 / 9 + 5 * 216 / 3;
    check(
        (analytic - floor).abs() <= 1e-12 && attained && grid_min >= floor - 1e-9 && rational == 200,
        format!("floor {analytic:.15}, grid minimum {grid_min:.15}"),
        format!("floor {analytic}, attained {attained}, grid minimum {grid_min}"),
    )
}

/// 4. All four variants at matched phases reproduce 4m³ - 8m² + 5m after one step.
fn criterion_4() -> Outcome {
    let variants = [
        PhaseParams::long(FRAC_PI_2),
        PhaseParams::lidf(-FRAC_PI_4),
        PhaseParams::licm_tied(FRAC_PI_2 + 0.37, 0.37),
        PhaseParams::licm(FRAC_PI_2, 0.0, FRAC_PI_2 - 1.2, -1.2),
        PhaseParams::lipc(-FRAC_PI_2),
    ];
    let mut worst = 0.0f64;
    for i in 1..=1000 {
        let m = i as f64 / 1000.0;
        let g = geometry_from_lambda(m).unwrap();
        for p in &variants {
            let prob = run(&iteration_matrix(p, &g), 1).success_probability();
            worst = worst.max((prob - cubic(m)).abs());
        }
    }
    check(
        worst <= 1e-10,
        format!("max |P - cubic| = {worst:.2e} over 1000 m values"),
        format!("max |P - cubic| = {worst:.2e}"),
    )
}

/// 5. The four k = 5 matched surfaces coincide.
fn criterion_5() -> Outcome {
    let surfaces: Vec<_> = AlgorithmKind::VARIANTS.into_iter().map(matched_surface).collect();
    if surfaces.iter().any(|s| s.rows.len() != 101 * 101) {
        return Err("surface is not 101×101".into());
    }
    let mut worst = 0.0f64;
    for (i, a) in surfaces.iter().enumerate() {
        for b in &surfaces[i + 1..] {
            worst = worst.max(a.max_deviation(b));
        }
    }
    check(
        worst < 1e-10,
        format!("max pairwise deviation {worst:.2e}"),
        format!("max pairwise deviation {worst:.2e}"),
    )
}

/// 6. Statevector and subspace engines agree on random cases.
fn criterion_6() -> Outcome {
    let (mut dev, mut residual, mut cases) = (0.0f64, 0.0f64, 0);
    for n in 1..=10 {
        let s = crosscheck(n, 0xC0FFEE + u64::from(n), 100).map_err(|e| e.to_string())?;
        dev = dev.max(s.max_probability_deviation);
        residual = residual.max(s.max_residual);
        cases += s.cases;
    }
    check(
        dev < 1e-10 && residual < 1e-10 && cases == 1000,
        format!("{cases} cases (k ≤ {MAX_CASE_ITERATIONS}), max deviation {dev:.2e}, max residual {residual:.2e}"),
        format!("max deviation {dev:.2e}, max residual {residual:.2e}, cases {cases}"),
    )
}

/// 7. Every variant reduces to the original iteration.
fn criterion_7() -> Outcome {
    let mut exact = 0.0f64;
    let mut phased = 0.0f64;
    for i in 1..=100 {
        let g = geometry_from_lambda(i as f64 / 100.0).unwrap();
        let (s, c) = (g.sin_theta(), g.cos_theta());
        // rotation by 2θ, written out directly
        let rotation = grover_phases::Mat2C::from_real(c * c - s * s, 2.0 * s * c, -2.0 * s * c, c * c - s * s);
        let original = iteration_matrix(&PhaseParams::Original, &g).m;
        exact = exact.max(original.max_abs_diff(&rotation));
        for p in [PhaseParams::long(PI), PhaseParams::lidf(0.0)] {
            exact = exact.max(iteration_matrix(&p, &g).m.max_abs_diff(&original));
        }
        for p in [PhaseParams::licm_tied(PI + 0.8, 0.8), PhaseParams::lipc(-PI)] {
            let m = iteration_matrix(&p, &g).m;
            match global_phase_align(&original, &m, 1e-10) {
                Some(chi) => phased = phased.max(original.max_abs_diff(&m.scale(chi.to_complex()))),
                None => {
                    return Err(format!(
                        "{p} is not phase-equivalent to the original at λ = {}",
                        g.lambda()
                    ))
                }
            }
        }
    }
    check(
        exact <= 1e-12 && phased <= 1e-10,
        format!("exact reductions {exact:.2e}, phase reductions {phased:.2e}"),
        format!("exact reductions {exact:.2e}, phase reductions {phased:.2e}"),
    )
}

/// 8. Unitarity and norm preservation.
fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst_norm = 0.0f64;
    for _ in 0..200 {
        let kind = AlgorithmKind::ALL[rng.gen_range(0..5)];
        let mut angle = || rng.gen_range(-PI..PI);
        let p = match kind {
            AlgorithmKind::Original => PhaseParams::Original,
            AlgorithmKind::Long => PhaseParams::long_two_phase(angle(), angle()),
            AlgorithmKind::LiDf => PhaseParams::lidf(angle()),
            AlgorithmKind::LiCm => PhaseParams::licm(angle(), angle(), angle(), angle()),
            AlgorithmKind::LiPc => PhaseParams::lipc(angle()),
        };
        let g = geometry_from_lambda(rng.gen_range(1e-4..=1.0)).unwrap();
        let it = iteration_matrix(&p, &g);
        if !it.m.is_unitary(1e-10) {
            return Err(format!("{p} is not unitary at λ = {}", g.lambda()));
        }
        let mut state = initial_state(&g);
        for _ in 0..1000 {
            state = evolve(&it.m, state, 1);
            worst_norm = worst_norm.max((state.norm_sqr() - 1.0).abs());
        }
    }
    check(
        worst_norm <= 1e-9,
        format!("200 matrices unitary, max norm drift {worst_norm:.2e} over 1000 steps"),
        format!("max norm drift {worst_norm:.2e}"),
    )
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("1 original spot values", criterion_1),
        ("2 randomized global-phase equivalence", criterion_2),
        ("3 single-iteration 25/27 floor", criterion_3),
        ("4 single-iteration cubic across variants", criterion_4),
        ("5 matched k=5 surfaces identical", criterion_5),
        ("6 statevector vs subspace engine", criterion_6),
        ("7 reductions to the original iteration", criterion_7),
        ("8 unitarity and normalization", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        match outcome {
            Ok(msg) => println!("PASS  criterion {name}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                println!("FAIL  criterion {name}: {msg} ({elapsed:.2?})");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
