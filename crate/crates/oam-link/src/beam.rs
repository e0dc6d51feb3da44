//! Laguerre-Gaussian beam fields for aligned and misaligned geometries,
//! and the equal-radius waist-matching solver.
//!
//! The misaligned fields expand the beam in the receiver frame as
//! bilateral Bessel series: modified Bessel I_m terms for lateral
//! displacement and ordinary J_n terms for angular deflection. All
//! modified-Bessel evaluation stays in the exponentially scaled form,
//! with the cancelling exponentials folded together analytically.

use crate::error::{Error, Result};
use crate::numerics::{
    bessel_i_scaled_array, bessel_j_array, bilateral_sum, laguerre, ln_gamma, SeriesConfig,
};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Physical identity of one LG mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamParams {
    /// Wavelength λ in meters.
    pub wavelength: f64,
    /// Waist ω_l of this mode at z = 0, meters.
    pub waist: f64,
    /// Signed OAM state l.
    pub oam_state: i32,
    /// Radial index p; fixed to 0 for this system.
    pub radial_index: u32,
    /// Complex normalization constant a.
    pub amplitude: Complex64,
}

impl BeamParams {
    pub fn new(wavelength: f64, waist: f64, oam_state: i32) -> Result<Self> {
        let params = BeamParams {
            wavelength,
            waist,
            oam_state,
            radial_index: 0,
            amplitude: Complex64::new(1.0, 0.0),
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.wavelength > 0.0) {
            return Err(Error::ValidationError("wavelength > 0".into()));
        }
        if !(self.waist > 0.0) {
            return Err(Error::ValidationError("waist > 0".into()));
        }
        Ok(())
    }

    /// Same beam family with a different OAM state.
    pub fn with_state(&self, l: i32) -> Self {
        BeamParams {
            oam_state: l,
            ..*self
        }
    }

    /// Same beam family with a different waist.
    pub fn with_waist(&self, waist: f64) -> Self {
        BeamParams { waist, ..*self }
    }

    /// Wavenumber k = 2π/λ.
    pub fn wavenumber(&self) -> f64 {
        2.0 * PI / self.wavelength
    }

    /// Rayleigh distance z_R = πω²/λ.
    pub fn rayleigh(&self) -> f64 {
        PI * self.waist * self.waist / self.wavelength
    }

    /// Propagation-dependent beam quantities at distance z.
    pub fn derived(&self, z: f64) -> BeamDerived {
        let zr = self.rayleigh();
        let ratio = z / zr;
        let waist_at_z = self.waist * (1.0 + ratio * ratio).sqrt();
        let curvature = if z == 0.0 {
            f64::INFINITY
        } else {
            let t = PI * self.waist * self.waist / (self.wavelength * z);
            z * (1.0 + t * t)
        };
        BeamDerived {
            waist_at_z,
            rayleigh: zr,
            gouy: (z / zr).atan(),
            curvature,
        }
    }
}

/// Diffraction quantities of a beam at one propagation distance.
#[derive(Debug, Clone, Copy)]
pub struct BeamDerived {
    /// ω_l(z), meters.
    pub waist_at_z: f64,
    /// z_R, meters.
    pub rayleigh: f64,
    /// Gouy phase ζ(z) = arctan(z/z_R), radians.
    pub gouy: f64,
    /// Wavefront curvature radius R_l(z), meters (infinite at z = 0).
    pub curvature: f64,
}

/// Geometric error between the transmit and receive arrays.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MisalignmentParams {
    /// Lateral displacement δ >= 0, meters.
    pub displacement: f64,
    /// Displacement azimuth θ, radians.
    pub displacement_azimuth: f64,
    /// Deflection angle γ in [0, π/2), radians.
    pub deflection: f64,
    /// Deflection azimuth η, radians.
    pub deflection_azimuth: f64,
}

impl MisalignmentParams {
    pub fn new(displacement: f64, displacement_azimuth: f64, deflection: f64, deflection_azimuth: f64) -> Result<Self> {
        let mis = MisalignmentParams {
            displacement,
            displacement_azimuth,
            deflection,
            deflection_azimuth,
        };
        mis.validate()?;
        Ok(mis)
    }

    pub const ALIGNED: MisalignmentParams = MisalignmentParams {
        displacement: 0.0,
        displacement_azimuth: 0.0,
        deflection: 0.0,
        deflection_azimuth: 0.0,
    };

    pub fn validate(&self) -> Result<()> {
        if !(self.displacement >= 0.0) {
            return Err(Error::ValidationError("displacement >= 0".into()));
        }
        if !(self.deflection >= 0.0 && self.deflection < PI / 2.0) {
            return Err(Error::ValidationError("0 <= deflection < pi/2".into()));
        }
        Ok(())
    }

    pub fn is_aligned(&self) -> bool {
        self.displacement == 0.0 && self.deflection == 0.0
    }

    /// Transverse tilt wavenumber ς = k sin γ.
    ///
    /// The source analysis only states that ς is related to γ; the small
    /// angle transverse wavenumber k sin γ ≈ kγ is adopted here and noted
    /// as an interpretation.
    pub fn tilt_wavenumber(&self, wavenumber: f64) -> f64 {
        wavenumber * self.deflection.sin()
    }
}

/// Cylindrical evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylPoint {
    /// Radius r >= 0, meters.
    pub r: f64,
    /// Azimuth φ, radians.
    pub phi: f64,
    /// Propagation distance z >= 0, meters.
    pub z: f64,
}

impl CylPoint {
    pub fn new(r: f64, phi: f64, z: f64) -> Self {
        debug_assert!(r >= 0.0);
        CylPoint { r, phi, z }
    }
}

/// Misaligned field value together with the series truncation flag.
#[derive(Debug, Clone, Copy)]
pub struct FieldValue {
    pub value: Complex64,
    /// True when a bilateral series hit its order cap before converging.
    pub truncated: bool,
}

/// Normalization a sqrt(p! / (π (p+|l|)!)).
fn norm_factor(params: &BeamParams) -> Complex64 {
    let p = params.radial_index as f64;
    let al = params.oam_state.unsigned_abs() as f64;
    let ln_ratio = ln_gamma(p + 1.0) - ln_gamma(p + al + 1.0);
    params.amplitude * (0.5 * (ln_ratio - PI.ln())).exp()
}

/// Aligned LG field u_LG^{p,l}(r, φ, z).
///
/// With p = 0 the generalized Laguerre factor is identically 1.
pub fn lg_field(params: &BeamParams, pt: &CylPoint) -> Complex64 {
    let d = params.derived(pt.z);
    let w = d.waist_at_z;
    let al = params.oam_state.unsigned_abs();
    let rho = pt.r / w;
    let radial_arg = 2.0 * rho * rho;

    let amplitude = norm_factor(params) / w
        * (std::f64::consts::SQRT_2 * rho).powi(al as i32)
        * (-rho * rho).exp()
        * laguerre(params.radial_index, al as f64, radial_arg);

    let gouy_order = (al + 2 * params.radial_index + 1) as f64;
    let curvature_phase = if d.curvature.is_infinite() {
        0.0
    } else {
        -PI * pt.r * pt.r / (params.wavelength * d.curvature)
    };
    let phase = gouy_order * d.gouy + curvature_phase - params.oam_state as f64 * pt.phi;

    amplitude * Complex64::from_polar(1.0, phase)
}

/// Radius of maximum intensity r_max(z) = sqrt(|l|/2) ω_l(z).
pub fn r_max(params: &BeamParams, z: f64) -> f64 {
    let w = params.derived(z).waist_at_z;
    (params.oam_state.unsigned_abs() as f64 / 2.0).sqrt() * w
}

/// Ring radius as a function of the z = 0 waist, used by the waist solver.
fn ring_radius_sq(l: i32, waist0: f64, c: f64) -> f64 {
    // r_max² = (|l|/2)(ω² + (zλ/π)²/ω²), with c = (zλ/π)².
    let x = waist0 * waist0;
    0.5 * l.unsigned_abs() as f64 * (x + c / x)
}

/// Solve for the waist ω_{l'} that gives state `target_state` the same
/// maximum-intensity radius at distance z as the reference beam.
///
/// The equal-radius condition reduces to A x² - B x + C = 0 in x = ω_{l'}²
/// with A = |l'|π², B = |l|(π²ω⁴ + z²λ²)/ω², C = |l'|z²λ². (The printed
/// coefficient set with A ∝ |l| fails the z = 0 limit ω_{l'} = ω√(|l|/|l'|)
/// and is not used.) The root branch continuous with the z = 0 closed form
/// is selected and polished against the ring-radius residual.
///
/// Errs with [`Error::NoRoot`] when the target state cannot reach the
/// reference ring at this distance: state l' at distance z cannot focus
/// below the diffraction-limited ring sqrt(|l'| z λ / π).
pub fn match_waist(reference: &BeamParams, target_state: i32, z: f64) -> Result<f64> {
    if reference.oam_state == 0 || target_state == 0 {
        return Err(Error::DomainError(
            "waist matching requires nonzero OAM states".into(),
        ));
    }
    if z < 0.0 {
        return Err(Error::DomainError("z >= 0".into()));
    }
    let l = reference.oam_state.unsigned_abs() as f64;
    let lp = target_state.unsigned_abs() as f64;
    let w2 = reference.waist * reference.waist;
    let c = {
        let t = z * reference.wavelength / PI;
        t * t
    };
    let target_sq = ring_radius_sq(reference.oam_state, reference.waist, c);
    let closed_form_z0 = w2 * l / lp;

    if z == 0.0 {
        return Ok(closed_form_z0.sqrt());
    }

    // Quadratic in x = ω'²: lp x² - (l (w2² + c) / w2 ... ) x + lp c = 0,
    // written as x² - (B/A) x + c = 0 since C/A = c exactly.
    let b_over_a = l * (w2 * w2 + c) / (lp * w2);
    let disc = b_over_a * b_over_a - 4.0 * c;
    if disc < 0.0 {
        return Err(Error::NoRoot {
            from: reference.oam_state,
            to: target_state,
            z,
        });
    }
    let sq = disc.sqrt();
    let x_hi = 0.5 * (b_over_a + sq);
    let x_lo = c / x_hi;

    // Branch continuous with the z = 0 closed form: the root nearest to it
    // on a log scale (handles the identity case l' = l exactly).
    let pick = |x: f64| (x / closed_form_z0).ln().abs();
    let mut x = if pick(x_hi) <= pick(x_lo) { x_hi } else { x_lo };

    // Polish on the residual g(x) = (lp/2)(x + c/x) - target², a few Newton
    // steps; the quadratic root is already exact up to rounding.
    for _ in 0..4 {
        let g = 0.5 * lp * (x + c / x) - target_sq;
        let dg = 0.5 * lp * (1.0 - c / (x * x));
        if dg.abs() < 1e-300 {
            break;
        }
        let step = g / dg;
        if !step.is_finite() {
            break;
        }
        x -= step;
        if x <= 0.0 {
            x = (x + step).max(f64::MIN_POSITIVE);
            break;
        }
    }

    let waist = x.sqrt();
    let achieved = ring_radius_sq(target_state, waist, c);
    let residual = ((achieved.sqrt() - target_sq.sqrt()) / target_sq.sqrt()).abs();
    if !(residual < 1e-9) {
        return Err(Error::NoRoot {
            from: reference.oam_state,
            to: target_state,
            z,
        });
    }
    Ok(waist)
}

fn reject_negative_state(params: &BeamParams) -> Result<()> {
    if params.oam_state < 0 {
        Err(Error::UnsupportedState(params.oam_state))
    } else {
        Ok(())
    }
}

/// Shared prefactor of the misaligned expansions:
/// u_LG(r,φ,z)/ω(z) · (r e^{iφ} - δ e^{iθ})^l.
fn misaligned_prefactor(params: &BeamParams, pt: &CylPoint, delta: f64, theta: f64) -> Complex64 {
    let w = params.derived(pt.z).waist_at_z;
    let base = Complex64::from_polar(pt.r, pt.phi) - Complex64::from_polar(delta, theta);
    lg_field(params, pt) / w * base.powu(params.oam_state as u32)
}

/// Laterally displaced LG field, the pure-displacement expansion.
///
/// Defined for l >= 0; the printed complex power (r e^{iφ} - δ e^{iθ})^l
/// is a reciprocal power for negative l and is rejected.
pub fn lg_field_displaced(
    params: &BeamParams,
    mis: &MisalignmentParams,
    pt: &CylPoint,
    series: &SeriesConfig,
) -> Result<FieldValue> {
    reject_negative_state(params)?;
    let w = params.derived(pt.z).waist_at_z;
    let delta = mis.displacement;
    let theta = mis.displacement_azimuth;
    let y = 2.0 * pt.r * delta / (w * w);

    // e^{-(r²+δ²)/ω²} Σ I_m(y) e^{im(φ-θ)} evaluated scaled:
    // e^{-(r-δ)²/ω²} Σ [e^{-y} I_m(y)] e^{im(φ-θ)}.
    let scaled = bessel_i_scaled_array(series.max_order, y);
    let chi = pt.phi - theta;
    let sum = bilateral_sum(
        |m| {
            let idx = m.unsigned_abs() as usize;
            Complex64::from_polar(1.0, m as f64 * chi) * scaled[idx]
        },
        series,
    );
    let envelope = (-((pt.r - delta) * (pt.r - delta)) / (w * w)).exp();
    Ok(FieldValue {
        value: misaligned_prefactor(params, pt, delta, theta) * envelope * sum.value,
        truncated: sum.truncated,
    })
}

/// Angularly deflected LG field, the pure-tilt expansion with
/// transverse wavenumber ς = k sin γ.
pub fn lg_field_tilted(
    params: &BeamParams,
    mis: &MisalignmentParams,
    pt: &CylPoint,
    series: &SeriesConfig,
) -> Result<FieldValue> {
    reject_negative_state(params)?;
    let w = params.derived(pt.z).waist_at_z;
    let sigma = mis.tilt_wavenumber(params.wavenumber());
    let arg = sigma * pt.r;

    let j = bessel_j_array(series.max_order, arg);
    let psi = pt.phi - mis.deflection_azimuth + PI / 2.0;
    let sum = bilateral_sum(
        |n| {
            let idx = n.unsigned_abs() as usize;
            let v = if n < 0 && n % 2 != 0 { -j[idx] } else { j[idx] };
            Complex64::from_polar(1.0, n as f64 * psi) * v
        },
        series,
    );
    let envelope = (-(pt.r * pt.r) / (w * w)).exp();
    Ok(FieldValue {
        value: misaligned_prefactor(params, pt, 0.0, 0.0) * envelope * sum.value,
        truncated: sum.truncated,
    })
}

/// Combined displacement plus deflection expansion; the double bilateral
/// sum factorizes into the product of the I and J series.
pub fn lg_field_displaced_tilted(
    params: &BeamParams,
    mis: &MisalignmentParams,
    pt: &CylPoint,
    series: &SeriesConfig,
) -> Result<FieldValue> {
    reject_negative_state(params)?;
    let w = params.derived(pt.z).waist_at_z;
    let delta = mis.displacement;
    let theta = mis.displacement_azimuth;

    let y = 2.0 * pt.r * delta / (w * w);
    let scaled = bessel_i_scaled_array(series.max_order, y);
    let chi = pt.phi - theta;
    let i_sum = bilateral_sum(
        |m| {
            let idx = m.unsigned_abs() as usize;
            Complex64::from_polar(1.0, m as f64 * chi) * scaled[idx]
        },
        series,
    );

    let sigma = mis.tilt_wavenumber(params.wavenumber());
    let j = bessel_j_array(series.max_order, sigma * pt.r);
    let psi = pt.phi - mis.deflection_azimuth + PI / 2.0;
    let j_sum = bilateral_sum(
        |n| {
            let idx = n.unsigned_abs() as usize;
            let v = if n < 0 && n % 2 != 0 { -j[idx] } else { j[idx] };
            Complex64::from_polar(1.0, n as f64 * psi) * v
        },
        series,
    );

    let envelope = (-((pt.r - delta) * (pt.r - delta)) / (w * w)).exp();
    Ok(FieldValue {
        value: misaligned_prefactor(params, pt, delta, theta)
            * envelope
            * i_sum.value
            * j_sum.value,
        truncated: i_sum.truncated || j_sum.truncated,
    })
}
