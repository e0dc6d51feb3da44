//! Numeric substrate: special functions, adaptive quadrature, and
//! truncated bilateral series evaluation.
//!
//! Everything here is a pure function of its arguments and safe to call
//! concurrently.

pub mod bessel;
pub mod erf;
pub mod gamma;
pub mod quadrature;
pub mod series;

pub use bessel::{bessel_i_scaled, bessel_i_scaled_array, bessel_j, bessel_j_array};
pub use erf::{erfc, q_function};
pub use gamma::{factorial, gamma_fn, ln_gamma};
pub use quadrature::{integrate_1d, QuadResult, QuadratureConfig};
pub use series::{bilateral_sum, BilateralSum, SeriesConfig};

/// Generalized Laguerre polynomial L_p^a(x) by the standard three-term
/// recurrence. The radial index is fixed to p = 0 in this system, where
/// the value is identically 1; higher p is supported for completeness.
pub fn laguerre(p: u32, a: f64, x: f64) -> f64 {
    match p {
        0 => 1.0,
        _ => {
            let mut lm1 = 1.0; // L_0
            let mut l = 1.0 + a - x; // L_1
            for k in 1..p {
                let kf = k as f64;
                let next = ((2.0 * kf + 1.0 + a - x) * l - (kf + a) * lm1) / (kf + 1.0);
                lm1 = l;
                l = next;
            }
            l
        }
    }
}
