//! Non-Kolmogorov turbulence statistics: generalized power spectrum, wave
//! structure function, spatial coherence radius, and the quadratic-
//! approximation mutual coherence function.
//!
//! The production path uses the closed forms throughout; the spectral
//! double integral behind the structure function lives only in the test
//! suite as an oracle. The amplitude product A(α)·C̃_n²(α) is evaluated
//! analytically (the A(α) factors cancel), which keeps the spectrum
//! finite on the α = 3 boundary of the weak-fluctuation sweep range.

use crate::beam::BeamParams;
use crate::error::{Error, Result};
use crate::numerics::gamma_fn;
use std::f64::consts::PI;

/// Generalized turbulence description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurbulenceParams {
    /// Generalized spectral index α in [3, 4); α = 11/3 is Kolmogorov.
    pub spectral_index: f64,
    /// Refractive-index structure constant C_n², m^{-2/3}.
    pub structure_constant: f64,
    /// Inner scale L_i, meters.
    pub inner_scale: f64,
    /// Outer scale L_o, meters.
    pub outer_scale: f64,
}

impl TurbulenceParams {
    pub fn new(spectral_index: f64, structure_constant: f64) -> Result<Self> {
        let t = TurbulenceParams {
            spectral_index,
            structure_constant,
            inner_scale: 0.01,
            outer_scale: 50.0,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        // The lower boundary is admitted so the weak-fluctuation sweep can
        // start exactly at 3.0, where the closed forms stay finite.
        if !(self.spectral_index >= 3.0 && self.spectral_index < 4.0) {
            return Err(Error::ValidationError(format!(
                "3 < alpha < 4 (got {})",
                self.spectral_index
            )));
        }
        if !(self.structure_constant >= 0.0) {
            return Err(Error::ValidationError("C_n^2 >= 0".into()));
        }
        if !(self.inner_scale > 0.0 && self.inner_scale < self.outer_scale) {
            return Err(Error::ValidationError("0 < L_i < L_o".into()));
        }
        Ok(())
    }
}

/// Beam parameters seen at the receiver plane.
#[derive(Debug, Clone, Copy)]
pub struct BeamReceiverParams {
    /// Complementary parameter Θ̄ = -z / R_l(z).
    pub complementary: f64,
    /// Diffraction parameter Λ = 2z / (k ω_l²(z)).
    pub diffraction: f64,
}

impl BeamReceiverParams {
    pub fn from_beam(beam: &BeamParams, z: f64) -> Self {
        let d = beam.derived(z);
        let complementary = if d.curvature.is_infinite() {
            0.0
        } else {
            -z / d.curvature
        };
        let diffraction = 2.0 * z / (beam.wavenumber() * d.waist_at_z * d.waist_at_z);
        BeamReceiverParams {
            complementary,
            diffraction,
        }
    }
}

/// Spatial coherence radius, with an explicit flag for the zero-turbulence
/// limit where it diverges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoherenceRadius {
    Finite(f64),
    Infinite,
}

impl CoherenceRadius {
    pub fn is_infinite(&self) -> bool {
        matches!(self, CoherenceRadius::Infinite)
    }

    /// |ρ₀| in meters; infinite coherence reports f64::INFINITY.
    pub fn radius(&self) -> f64 {
        match self {
            CoherenceRadius::Finite(r) => *r,
            CoherenceRadius::Infinite => f64::INFINITY,
        }
    }
}

/// Spectrum amplitude A(α) = Γ(α-1) cos(απ/2) / (4π²).
pub fn spectrum_amplitude(alpha: f64) -> Result<f64> {
    Ok(gamma_fn(alpha - 1.0)? * (alpha * PI / 2.0).cos() / (4.0 * PI * PI))
}

/// The product A(α)·C̃_n²(α), with the A(α) factors cancelled analytically:
/// -Γ(α) (k/z)^{α/2 - 11/6} C_n² / (8π² Γ(1-α/2) Γ(α/2)² sin(πα/4)).
pub fn spectral_strength(turb: &TurbulenceParams, k: f64, z: f64) -> Result<f64> {
    turb.validate()?;
    if !(z > 0.0) {
        return Err(Error::DomainError("propagation distance z > 0".into()));
    }
    let a = turb.spectral_index;
    let numerator = -gamma_fn(a)? * (k / z).powf(a / 2.0 - 11.0 / 6.0) * turb.structure_constant;
    let denominator = 8.0
        * PI
        * PI
        * gamma_fn(1.0 - 0.5 * a)?
        * gamma_fn(0.5 * a)?.powi(2)
        * (0.25 * PI * a).sin();
    Ok(numerator / denominator)
}

/// Inner-scale cutoff wavenumber κ_m = c(α)/L_i with
/// c(α) = [ (2π/3) Γ((5-α)/2) A(α) ]^{1/(α-5)}. At the α = 3 boundary
/// A(α) vanishes and the cutoff recedes to infinity.
pub fn inner_scale_cutoff(turb: &TurbulenceParams) -> Result<f64> {
    let a = turb.spectral_index;
    let amp = spectrum_amplitude(a)?;
    if amp <= 0.0 {
        return Ok(f64::INFINITY);
    }
    let base = 2.0 * PI / 3.0 * gamma_fn((5.0 - a) / 2.0)? * amp;
    Ok(base.powf(1.0 / (a - 5.0)) / turb.inner_scale)
}

/// Power spectral density Φ_n(κ, α) of the refractive-index fluctuation.
pub fn spectrum(turb: &TurbulenceParams, kappa: f64, k: f64, z: f64) -> Result<f64> {
    if kappa < 0.0 {
        return Err(Error::DomainError("kappa >= 0".into()));
    }
    let strength = spectral_strength(turb, k, z)?;
    let kappa_m = inner_scale_cutoff(turb)?;
    let kappa_0 = 2.0 * PI / turb.outer_scale;
    let cutoff = if kappa_m.is_infinite() {
        1.0
    } else {
        (-kappa * kappa / (kappa_m * kappa_m)).exp()
    };
    Ok(strength * cutoff / (kappa * kappa + kappa_0 * kappa_0).powf(turb.spectral_index / 2.0))
}

/// The ρ-independent factor X of the closed-form structure function,
/// D(ρ, z) = 2^{3-α} X ρ^{α-2} and ρ₀ = 2 X^{1/(2-α)}.
fn structure_prefactor(turb: &TurbulenceParams, brp: &BeamReceiverParams, k: f64, z: f64) -> Result<f64> {
    let a = turb.spectral_index;
    let strength = spectral_strength(turb, k, z)?;
    let tb = brp.complementary;
    // ((1-Θ̄)^{α-1} - 1) / (Θ̄ (α-1)) -> -1 - (α-2)Θ̄/2 ... as Θ̄ -> 0.
    let beam_factor = if tb.abs() < 1e-9 {
        -1.0 + 0.5 * (a - 2.0) * tb
    } else {
        ((1.0 - tb).powf(a - 1.0) - 1.0) / (tb * (a - 1.0))
    };
    let gamma_ratio = gamma_fn(-0.5 * a)? / gamma_fn(0.5 * a)?;
    let x = -PI * PI * a * k * k * z * strength * beam_factor * gamma_ratio;
    if turb.structure_constant > 0.0 && !(x > 0.0) {
        // The fractional power 1/(2-α) of a negative base would be complex;
        // surface it instead of silently mis-rooting.
        return Err(Error::DomainError(format!(
            "structure-function prefactor is non-positive ({x}) at alpha = {a}; \
             coherence radius undefined"
        )));
    }
    Ok(x)
}

/// Wave structure function D(ρ, z) in closed form; D ∝ ρ^{α-2}.
pub fn structure_function(
    turb: &TurbulenceParams,
    brp: &BeamReceiverParams,
    rho: f64,
    k: f64,
    z: f64,
) -> Result<f64> {
    if rho < 0.0 {
        return Err(Error::DomainError("rho >= 0".into()));
    }
    if rho == 0.0 {
        return Ok(0.0);
    }
    let a = turb.spectral_index;
    let x = structure_prefactor(turb, brp, k, z)?;
    Ok(2f64.powf(3.0 - a) * x * rho.powf(a - 2.0))
}

/// Spatial coherence radius ρ₀; infinite when C_n² = 0.
pub fn coherence_radius(
    turb: &TurbulenceParams,
    brp: &BeamReceiverParams,
    k: f64,
    z: f64,
) -> Result<CoherenceRadius> {
    if turb.structure_constant == 0.0 {
        turb.validate()?;
        return Ok(CoherenceRadius::Infinite);
    }
    let a = turb.spectral_index;
    let x = structure_prefactor(turb, brp, k, z)?;
    Ok(CoherenceRadius::Finite(2.0 * x.powf(1.0 / (2.0 - a))))
}

/// Normalized mutual coherence exp(2r² (cos Δφ - 1) / |ρ₀|²) between two
/// points on the radius-r circle separated by Δφ in azimuth.
pub fn mutual_coherence(rho0: &CoherenceRadius, r: f64, delta_phi: f64) -> f64 {
    match rho0 {
        CoherenceRadius::Infinite => 1.0,
        CoherenceRadius::Finite(p) => {
            (2.0 * r * r * (delta_phi.cos() - 1.0) / (p * p)).exp()
        }
    }
}
