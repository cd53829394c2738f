//! Fixed-shape complex arithmetic: scalars, 2-vectors, 2×2 matrices and
//! global-phase alignment.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

/// Complex scalar used for every amplitude and matrix entry.
pub type ComplexScalar = Complex64;

/// Amplitude pair in a two-dimensional basis.
pub type Pair = [ComplexScalar; 2];

/// Tolerance for unitarity checks.
pub const UNITARY_TOL: f64 = 1e-12;

/// Tolerance for global-phase equivalence claims.
pub const EQUIVALENCE_TOL: f64 = 1e-10;

const ZERO: ComplexScalar = Complex64::new(0.0, 0.0);
const ONE: ComplexScalar = Complex64::new(1.0, 0.0);

/// `e^{i·angle}`.
#[inline]
pub fn cis(angle: f64) -> ComplexScalar {
    Complex64::from_polar(1.0, angle)
}

/// 2×2 complex matrix stored row-major: `[[m00, m01], [m10, m11]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2C(pub [[ComplexScalar; 2]; 2]);

impl Mat2C {
    pub const IDENTITY: Mat2C = Mat2C([[ONE, ZERO], [ZERO, ONE]]);

    pub const fn new(m00: ComplexScalar, m01: ComplexScalar, m10: ComplexScalar, m11: ComplexScalar) -> Self {
        Mat2C([[m00, m01], [m10, m11]])
    }

    pub fn from_real(m00: f64, m01: f64, m10: f64, m11: f64) -> Self {
        Self::new(m00.into(), m01.into(), m10.into(), m11.into())
    }

    pub fn diag(d0: ComplexScalar, d1: ComplexScalar) -> Self {
        Self::new(d0, ZERO, ZERO, d1)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> ComplexScalar {
        self.0[row][col]
    }

    pub fn entries(&self) -> impl Iterator<Item = ComplexScalar> + '_ {
        self.0.iter().flat_map(|row| row.iter().copied())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let [[a, b], [c, d]] = self.0;
        Self::new(a.conj(), c.conj(), b.conj(), d.conj())
    }

    pub fn scale(&self, factor: ComplexScalar) -> Self {
        let [[a, b], [c, d]] = self.0;
        Self::new(a * factor, b * factor, c * factor, d * factor)
    }

    pub fn add(&self, other: &Mat2C) -> Self {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = other.0;
        Self::new(a + e, b + f, c + g, d + h)
    }

    pub fn det(&self) -> ComplexScalar {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat2C) -> f64 {
        self.entries()
            .zip(other.entries())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.entries().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Matrix product `self · rhs`.
    pub fn mul_mat(&self, rhs: &Mat2C) -> Mat2C {
        let a = &self.0;
        let b = &rhs.0;
        Mat2C([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: Pair) -> Pair {
        let a = &self.0;
        [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
    }

    /// True iff every entry of `self · self†` is within `tol` of the identity.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.mul_mat(&self.adjoint()).max_abs_diff(&Mat2C::IDENTITY) <= tol
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;

    fn mul(self, rhs: Mat2C) -> Mat2C {
        self.mul_mat(&rhs)
    }
}

impl Mul<Pair> for Mat2C {
    type Output = Pair;

    fn mul(self, rhs: Pair) -> Pair {
        self.apply(rhs)
    }
}

impl fmt::Display for Mat2C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.0;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// Free-function form of [`Mat2C::mul_mat`].
pub fn mat2_mul(a: &Mat2C, b: &Mat2C) -> Mat2C {
    a.mul_mat(b)
}

/// Free-function form of [`Mat2C::apply`].
pub fn mat2_apply(m: &Mat2C, v: Pair) -> Pair {
    m.apply(v)
}

/// Free-function form of [`Mat2C::is_unitary`].
pub fn is_unitary(m: &Mat2C, tol: f64) -> bool {
    m.is_unitary(tol)
}

/// Euclidean norm of an amplitude pair.
pub fn pair_norm(v: &Pair) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

/// Maps any real angle into `(-π, π]`.
pub fn normalize_angle(angle: f64) -> f64 {
    // `+ 0.0` folds -0.0 into 0.0
    let r = angle.rem_euclid(2.0 * PI) + 0.0;
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// A phase angle normalized to `(-π, π]`; represents the unit scalar `e^{i·angle}`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct UnitPhase(f64);

impl UnitPhase {
    pub const ZERO: UnitPhase = UnitPhase(0.0);

    pub fn new(angle: f64) -> Self {
        UnitPhase(normalize_angle(angle))
    }

    /// Phase of a nonzero complex number.
    pub fn of(z: ComplexScalar) -> Self {
        Self::new(z.arg())
    }

    pub fn angle(self) -> f64 {
        self.0
    }

    pub fn to_complex(self) -> ComplexScalar {
        cis(self.0)
    }

    /// Angular distance on the circle, in `[0, π]`.
    pub fn distance(self, other: UnitPhase) -> f64 {
        normalize_angle(self.0 - other.0).abs()
    }

    pub fn negate(self) -> Self {
        Self::new(-self.0)
    }
}

impl fmt::Display for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12}", self.0)
    }
}

/// Finds `χ` with `a ≈ e^{iχ}·b` entrywise within `tol`.
///
/// The candidate ratio is taken at the largest-magnitude entry of `b`; it must
/// itself have unit modulus within `tol`. Returns `None` when `b` is zero or no
/// such phase exists at this tolerance.
pub fn global_phase_align(a: &Mat2C, b: &Mat2C, tol: f64) -> Option<UnitPhase> {
    let (pivot_a, pivot_b) = a
        .entries()
        .zip(b.entries())
        .max_by(|(_, x), (_, y)| x.norm_sqr().total_cmp(&y.norm_sqr()))?;
    if pivot_b.norm() == 0.0 {
        return None;
    }
    let ratio = pivot_a / pivot_b;
    if (ratio.norm() - 1.0).abs() > tol {
        return None;
    }
    let phase = UnitPhase::of(ratio);
    let deviation = a.max_abs_diff(&b.scale(phase.to_complex()));
    (deviation <= tol).then_some(phase)
}
