//! Truncated bilateral series Σ_{m=-M..M} term(m) for the Bessel-series
//! field expansions.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Truncation control for bilateral sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Relative tolerance on the last added symmetric pair.
    pub term_tol: f64,
    /// Hard cap M on the truncation order.
    pub max_order: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            term_tol: 1e-10,
            max_order: 60,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.term_tol > 0.0) {
            return Err(Error::ValidationError("term_tol > 0".into()));
        }
        if self.max_order < 1 {
            return Err(Error::ValidationError("max_order >= 1".into()));
        }
        Ok(())
    }
}

/// Result of a bilateral sum: the value, the order actually used, and
/// whether the cap was hit before the pair criterion was met.
#[derive(Debug, Clone, Copy)]
pub struct BilateralSum {
    pub value: Complex64,
    pub order_used: usize,
    /// Set when `max_order` was reached before convergence.
    pub truncated: bool,
}

/// Σ_{m=-M..M} term(m), where M is the smallest order at which the
/// magnitude of the last added pair term(M) + term(-M) drops below
/// term_tol * |partial sum|, capped at cfg.max_order.
pub fn bilateral_sum<F: Fn(i32) -> Complex64>(term: F, cfg: &SeriesConfig) -> BilateralSum {
    let mut value = term(0);
    for m in 1..=cfg.max_order as i32 {
        let pair = term(m) + term(-m);
        value += pair;
        let scale = value.norm().max(f64::MIN_POSITIVE);
        if pair.norm() < cfg.term_tol * scale {
            return BilateralSum {
                value,
                order_used: m as usize,
                truncated: false,
            };
        }
    }
    BilateralSum {
        value,
        order_used: cfg.max_order,
        truncated: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::bessel::bessel_i_scaled;
    use approx::assert_abs_diff_eq;

    #[test]
    fn scaled_bessel_identity_sums_to_one() {
        let cfg = SeriesConfig::default();
        let s = bilateral_sum(
            |m| Complex64::new(bessel_i_scaled(m, 2.0), 0.0),
            &cfg,
        );
        assert!(!s.truncated);
        assert_abs_diff_eq!(s.value.re, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(s.value.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn single_term_series() {
        let s = bilateral_sum(
            |m| {
                if m == 0 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::ZERO
                }
            },
            &SeriesConfig::default(),
        );
        assert_eq!(s.value, Complex64::new(1.0, 0.0));
        assert!(!s.truncated);
        assert_eq!(s.order_used, 1);
    }

    #[test]
    fn gaussian_terms_match_direct_sum_oracle() {
        // Oracle: direct sum to M = 50.
        let mut oracle = 0.0;
        for m in -50..=50_i32 {
            oracle += (-(m as f64) * (m as f64)).exp();
        }
        let s = bilateral_sum(
            |m| Complex64::new((-(m as f64) * (m as f64)).exp(), 0.0),
            &SeriesConfig::default(),
        );
        assert_abs_diff_eq!(s.value.re, oracle, epsilon = 1e-12);
    }

    #[test]
    fn cap_sets_truncated_flag() {
        let cfg = SeriesConfig {
            term_tol: 1e-30,
            max_order: 5,
        };
        let s = bilateral_sum(|m| Complex64::new(1.0 / (1.0 + (m * m) as f64), 0.0), &cfg);
        assert!(s.truncated);
        assert_eq!(s.order_used, 5);
    }
}
