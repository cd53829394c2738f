use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_grover-phases"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn read_table(path: &Path) -> (String, Vec<Vec<f64>>) {
    let text = std::fs::read_to_string(path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    let header = lines.next().unwrap().to_string();
    let rows = lines
        .map(|l| l.split(',').map(|c| c.parse::<f64>().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn figure_one_curve() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let o = run(&["figure", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = read_table(&path);
    assert_eq!(header, "lambda,k,probability");
    assert_eq!(rows.len(), 200);
    let half = rows.iter().find(|r| r[0] == 0.5).expect("row at lambda = 0.5");
    assert_eq!(half[1], 1.0);
    assert!((half[2] - 0.5).abs() <= 1e-9);
}

#[test]
fn surfaces_are_identical_across_variants() {
    let dir = tempdir().unwrap();
    let mut tables = Vec::new();
    for index in 2..=5 {
        let path = dir.path().join(format!("fig{index}.csv"));
        let o = run(&["figure", &index.to_string(), "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let (header, rows) = read_table(&path);
        assert_eq!(header, "lambda,phi,k,probability");
        assert_eq!(rows.len(), 101 * 101);
        assert!(rows.iter().all(|r| r[2] == 5.0 && (0.0..=1.0).contains(&r[3])));
        tables.push(rows);
    }
    for other in &tables[1..] {
        for (a, b) in tables[0].iter().zip(other) {
            assert_eq!(&a[..3], &b[..3]);
            assert!((a[3] - b[3]).abs() <= 1e-10);
        }
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = run(&["figure", "3", "--out", "-"]);
    let b = run(&["figure", "3", "--out", "-"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let first_row = stdout(&a).lines().nth(1).unwrap().to_string();
    assert_eq!(first_row, "0.01,0,5,0.01");
}

#[test]
fn figure_errors() {
    let o = run(&["figure", "7", "--out", "-"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["figure", "1", "--out", "/nonexistent-dir/x/fig.csv"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot write"));
}

#[test]
fn sweep_command() {
    let o = run(&[
        "sweep",
        "--kind",
        "lipc",
        "--k",
        "1",
        "--lambda",
        "0.25:1:4",
        "--phase",
        "-pi/2:pi/2:3",
        "--out",
        "-",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda,phi,k,probability");
    assert_eq!(lines.len(), 1 + 12);
    // λ = 0.5, β = -π/2: one iteration finds a target with certainty
    let row: Vec<f64> = lines[4].split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(row[0], 0.5);
    assert!((row[1] + std::f64::consts::FRAC_PI_2).abs() < 1e-11);
    assert!((row[3] - 1.0).abs() < 1e-11);

    let bad = run(&[
        "sweep", "--kind", "lipc", "--k", "1", "--lambda", "0:1:4", "--phase", "0:1:2", "--out", "-",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let bad = run(&[
        "sweep", "--kind", "grover", "--k", "1", "--lambda", "0.1:1:4", "--phase", "0:1:2", "--out", "-",
    ]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn check_equivalence_holds() {
    let o = run(&[
        "check-equivalence",
        "--phi",
        "pi/2",
        "--lambda",
        "0.333333333333",
        "--k",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(
        text.lines()
            .filter(|l| l.contains(" vs ") && l.ends_with("HOLD"))
            .count(),
        3
    );
    assert!(text.trim_end().ends_with("ALL HOLD"));

    let o = run(&["check-equivalence", "--phi", "pi", "--lambda", "0.25", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_equivalence_detects_broken_mapping() {
    let o = run(&[
        "check-equivalence",
        "--phi",
        "1.0",
        "--lambda",
        "0.3",
        "--k",
        "2",
        "--perturb",
        "0.1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("lidf: predicted="));
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("long vs lidf") && l.ends_with("FAIL")));
}

#[test]
fn check_equivalence_usage() {
    assert_eq!(
        run(&["check-equivalence", "--phi", "1", "--lambda", "1.5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["check-equivalence", "--lambda", "0.5"]).status.code(), Some(1));
    assert_eq!(
        run(&["check-equivalence", "--phi", "-0.7", "--lambda", "0.5"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn crosscheck_command() {
    let o = run(&[
        "crosscheck",
        "--n",
        "8",
        "--seed",
        "42",
        "--samples",
        "100",
        "--tol",
        "1e-10",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("ChaCha8Rng"));
    assert!(stdout(&o).trim_end().ends_with("PASS"));

    for seed in ["0", "5", "123456789"] {
        assert_eq!(
            run(&["crosscheck", "--n", "1", "--seed", seed, "--samples", "50"])
                .status
                .code(),
            Some(0)
        );
    }

    let o = run(&["crosscheck", "--n", "4", "--seed", "1", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 cases"));

    // an impossible tolerance is reported as a verification failure
    let o = run(&[
        "crosscheck",
        "--n",
        "6",
        "--seed",
        "3",
        "--samples",
        "20",
        "--tol",
        "1e-300",
    ]);
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(
        run(&["crosscheck", "--n", "0", "--seed", "1", "--samples", "1"])
            .status
            .code(),
        Some(1)
    );
}
