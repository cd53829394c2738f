//! Oracle, diffusion and one-iteration matrices restricted to the invariant
//! plane spanned by `|α⟩` (uniform over targets) and `|β⟩` (uniform over
//! non-targets). Basis order is `(|α⟩, |β⟩)`: the target amplitude comes first.
//!
//! Both the target projector `|t⟩⟨t|` and `|s⟩⟨s|` map that plane into itself,
//! so every operator of the form `x·I + y·|t⟩⟨t|` or `x·I + y·|s⟩⟨s|` has an
//! exact 2×2 restriction. In the plane `|t⟩⟨t| = diag(1, 0)` and
//! `|s⟩⟨s| = [[sin²θ, sinθcosθ], [sinθcosθ, cos²θ]]`.

use num_complex::Complex64;

use crate::model::{AlgorithmKind, PhaseParams, SubspaceGeometry};
use crate::numerics::{cis, ComplexScalar, Mat2C};

const ONE: ComplexScalar = Complex64::new(1.0, 0.0);

/// `|s⟩⟨s|` in the `(|α⟩, |β⟩)` basis.
pub fn uniform_projector(g: &SubspaceGeometry) -> Mat2C {
    let (s, c) = (g.sin_theta(), g.cos_theta());
    Mat2C::from_real(s * s, s * c, s * c, c * c)
}

/// The oracle `I_t` restricted to the plane. It is diagonal: the first entry
/// multiplies the target component and the second the non-target component.
pub fn subspace_oracle(params: &PhaseParams) -> Mat2C {
    match *params {
        PhaseParams::Original => Mat2C::from_real(-1.0, 0.0, 0.0, 1.0),
        // I - (1 - e^{iφ})|t⟩⟨t|
        PhaseParams::Long { phi, .. } => Mat2C::diag(cis(phi), ONE),
        // I - 2cosτ·e^{iτ}|t⟩⟨t|
        PhaseParams::LiDf { tau } => Mat2C::diag(ONE - cis(tau) * (2.0 * tau.cos()), ONE),
        // -e^{iη₂}I - (e^{iη₁} - e^{iη₂})|t⟩⟨t|
        PhaseParams::LiCm { eta1, eta2, .. } => Mat2C::diag(-cis(eta1), -cis(eta2)),
        // I - (1 - e^{-iβ})|t⟩⟨t|
        PhaseParams::LiPc { beta } => Mat2C::diag(cis(-beta), ONE),
    }
}

/// Coefficients `(c, d)` of a diffusion operator `c·|s⟩⟨s| + d·I`.
fn diffusion_coefficients(params: &PhaseParams) -> (ComplexScalar, ComplexScalar) {
    match *params {
        PhaseParams::Original => (2.0.into(), (-1.0).into()),
        PhaseParams::Long { phi, diffusion_phi } => (ONE - cis(diffusion_phi.unwrap_or(phi)), (-1.0).into()),
        PhaseParams::LiDf { tau } => (cis(tau) * (2.0 * tau.cos()), (-1.0).into()),
        PhaseParams::LiCm { gamma1, gamma2, .. } => (cis(gamma1) - cis(gamma2), cis(gamma2)),
        PhaseParams::LiPc { beta } => (ONE - cis(beta), cis(beta)),
    }
}

/// The diffusion `I_s` restricted to the plane.
pub fn subspace_diffusion(params: &PhaseParams, g: &SubspaceGeometry) -> Mat2C {
    let (c, d) = diffusion_coefficients(params);
    uniform_projector(g).scale(c).add(&Mat2C::IDENTITY.scale(d))
}

/// One Grover-type iteration `G = I_s · I_t` in the `(|α⟩, |β⟩)` basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IterationMatrix {
    pub m: Mat2C,
    pub params: PhaseParams,
    pub geometry: SubspaceGeometry,
}

impl IterationMatrix {
    pub fn new(params: PhaseParams, geometry: SubspaceGeometry) -> Self {
        iteration_matrix(&params, &geometry)
    }

    pub fn kind(&self) -> AlgorithmKind {
        self.params.kind()
    }
}

pub fn iteration_matrix(params: &PhaseParams, g: &SubspaceGeometry) -> IterationMatrix {
    let m = subspace_diffusion(params, g).mul_mat(&subspace_oracle(params));
    IterationMatrix {
        m,
        params: *params,
        geometry: *g,
    }
}

/// Closed form of the phase-matched Long iteration:
///
/// ```text
/// [ -e^{iφ}(sin²θ·e^{iφ} + cos²θ)     sinθcosθ(1 - e^{iφ})   ]
/// [ sinθcosθ·e^{iφ}(1 - e^{iφ})       -(cos²θ·e^{iφ} + sin²θ) ]
/// ```
///
/// Only valid with equal oracle and diffusion phases; for unequal phases the
/// product `I_s(ϕ)·I_t(φ)` does not have this shape.
pub fn long_closed_form(phi: f64, g: &SubspaceGeometry) -> Mat2C {
    let (s, c) = (g.sin_theta(), g.cos_theta());
    let (s2, c2, sc) = (s * s, c * c, s * c);
    let e = cis(phi);
    Mat2C::new(-e * (e * s2 + c2), (ONE - e) * sc, e * (ONE - e) * sc, -(e * c2 + s2))
}
