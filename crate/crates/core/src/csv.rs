//! Deterministic CSV emission: header row, comma separators, `\n` line endings
//! and numbers rendered with a fixed count of significant digits.

use std::io::{self, Write};

use crate::analysis::{CurvePoint, SweepResult};

/// Default significant digits for floating-point cells.
pub const DEFAULT_PRECISION: usize = 12;

/// Formats `x` with `digits` significant digits in the style of C's `%g`:
/// fixed notation for moderate exponents, scientific otherwise, trailing
/// zeros removed. Independent of locale.
pub fn format_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent format always has 'e'");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim_fraction(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_curve<W: Write + ?Sized>(out: &mut W, points: &[CurvePoint], digits: usize) -> io::Result<()> {
    writeln!(out, "lambda,k,probability")?;
    for p in points {
        writeln!(
            out,
            "{},{},{}",
            format_sig(p.lambda, digits),
            p.k,
            format_sig(p.probability, digits)
        )?;
    }
    Ok(())
}

pub fn write_sweep<W: Write + ?Sized>(out: &mut W, result: &SweepResult, digits: usize) -> io::Result<()> {
    writeln!(out, "lambda,phi,k,probability")?;
    for r in &result.rows {
        writeln!(
            out,
            "{},{},{},{}",
            format_sig(r.lambda, digits),
            format_sig(r.phase, digits),
            r.k,
            format_sig(r.probability, digits)
        )?;
    }
    Ok(())
}
