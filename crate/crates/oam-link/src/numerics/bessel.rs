//! Integer-order Bessel functions J_n and exponentially scaled modified
//! Bessel functions e^{-x} I_n(x).
//!
//! Both families are generated with Miller's downward recurrence and
//! normalized with the exact sum identities
//!
//! ```text
//! J_0(x) + 2 Σ_{k>=1} J_{2k}(x) = 1
//! I_0(x) + 2 Σ_{k>=1} I_k(x)  = e^x
//! ```
//!
//! One downward pass yields the whole order array, which the field
//! expansions consume directly. The modified family is only ever exposed
//! in scaled form e^{-x} I_n(x); the unscaled value overflows long before
//! the products it appears in do.

/// Starting order for the downward recurrence: comfortably above both the
/// requested order and the turning point near n ~ x.
fn miller_start(n_max: usize, x: f64) -> usize {
    let turning = x.abs().ceil() as usize;
    let base = n_max.max(turning);
    let pad = 18 + (2.5 * (base as f64).sqrt()) as usize;
    let start = base + pad;
    start + (start & 1) // even
}

const RESCALE_THRESHOLD: f64 = 1e250;

/// J_0(x) .. J_{n_max}(x) in one pass.
pub fn bessel_j_array(n_max: usize, x: f64) -> Vec<f64> {
    let ax = x.abs();
    if ax == 0.0 {
        let mut out = vec![0.0; n_max + 1];
        out[0] = 1.0;
        return out;
    }
    let start = miller_start(n_max, ax);
    let mut out = vec![0.0; n_max + 1];
    let mut jp = 0.0_f64; // J_{k+1}
    let mut j = 1e-300_f64; // J_k (arbitrary seed)
    let mut norm = 0.0_f64; // J_0 + 2 J_2 + 2 J_4 + ...
    for k in (0..=start).rev() {
        let jm = (2.0 * (k as f64 + 1.0) / ax) * j - jp;
        jp = j;
        j = jm;
        // k is now the order held in `j`.
        if k % 2 == 0 {
            norm += if k == 0 { j } else { 2.0 * j };
        }
        if k <= n_max {
            out[k] = j;
        }
        if j.abs() > RESCALE_THRESHOLD {
            let s = 1.0 / RESCALE_THRESHOLD;
            j *= s;
            jp *= s;
            norm *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
        }
    }
    for v in out.iter_mut() {
        *v /= norm;
    }
    if x < 0.0 {
        for (k, v) in out.iter_mut().enumerate() {
            if k % 2 == 1 {
                *v = -*v;
            }
        }
    }
    out
}

/// Bessel function of the first kind J_n(x) for integer order.
///
/// Total over all finite inputs; J_{-n}(x) = (-1)^n J_n(x).
pub fn bessel_j(order: i32, x: f64) -> f64 {
    let n = order.unsigned_abs() as usize;
    let v = bessel_j_array(n, x)[n];
    if order < 0 && order % 2 != 0 {
        -v
    } else {
        v
    }
}

/// e^{-x} I_0(x) .. e^{-x} I_{n_max}(x) for x >= 0 in one pass.
pub fn bessel_i_scaled_array(n_max: usize, x: f64) -> Vec<f64> {
    assert!(x >= 0.0, "scaled modified Bessel requires x >= 0");
    if x == 0.0 {
        let mut out = vec![0.0; n_max + 1];
        out[0] = 1.0;
        return out;
    }
    let start = miller_start(n_max, x);
    let mut out = vec![0.0; n_max + 1];
    let mut ip = 0.0_f64; // I_{k+1}
    let mut i = 1e-300_f64; // I_k
    let mut norm = 0.0_f64; // I_0 + 2 Σ I_k
    for k in (0..=start).rev() {
        let im = ip + (2.0 * (k as f64 + 1.0) / x) * i;
        ip = i;
        i = im;
        norm += if k == 0 { i } else { 2.0 * i };
        if k <= n_max {
            out[k] = i;
        }
        if i > RESCALE_THRESHOLD {
            let s = 1.0 / RESCALE_THRESHOLD;
            i *= s;
            ip *= s;
            norm *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
        }
    }
    // Dividing by Σ I_k = e^x bakes the e^{-x} scaling into the result.
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

/// Exponentially scaled modified Bessel function e^{-x} I_n(x), x >= 0.
///
/// Lies in [0, 1] and is symmetric in the sign of the order.
pub fn bessel_i_scaled(order: i32, x: f64) -> f64 {
    let n = order.unsigned_abs() as usize;
    bessel_i_scaled_array(n, x)[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    /// Power-series oracle: J_n(x) = Σ_m (-1)^m (x/2)^{n+2m} / (m! (n+m)!),
    /// accurate to ~1e-13 for |x| <= 8.
    fn bessel_j_series(n: u32, x: f64) -> f64 {
        let half = x / 2.0;
        let mut term = half.powi(n as i32) / crate::numerics::gamma::factorial(n);
        let mut sum = term;
        for m in 1..200 {
            term *= -(half * half) / (m as f64 * (m as f64 + n as f64));
            sum += term;
            if term.abs() < 1e-18 * sum.abs().max(1e-30) {
                break;
            }
        }
        sum
    }

    #[test]
    fn j_at_zero() {
        assert_eq!(bessel_j(0, 0.0), 1.0);
        assert_eq!(bessel_j(1, 0.0), 0.0);
        assert_eq!(bessel_j(7, 0.0), 0.0);
    }

    #[test]
    fn j_matches_power_series_oracle() {
        // Includes the spec case (2, 1.5).
        for &(n, x) in &[
            (0_u32, 0.5),
            (0, 2.404_825_557_695_773), // first zero of J_0
            (1, 3.5),
            (2, 1.5),
            (5, 7.9),
            (10, 4.0),
        ] {
            let oracle = bessel_j_series(n, x);
            assert_abs_diff_eq!(bessel_j(n as i32, x), oracle, epsilon = 1e-12);
        }
    }

    #[test]
    fn j_large_argument_reference_values() {
        // Frozen from mpmath besselj at 50 digits.
        assert_relative_eq!(
            bessel_j(0, 100.0),
            0.019_985_850_304_223_122,
            max_relative = 1e-11
        );
        assert_relative_eq!(
            bessel_j(5, 300.0),
            -0.033_193_628_349_427_063,
            max_relative = 1e-10
        );
    }

    #[test]
    fn j_negative_order_and_argument_parity() {
        for &(n, x) in &[(1, 2.3), (2, 5.1), (3, 0.7)] {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert_relative_eq!(bessel_j(-n, x), sign * bessel_j(n, x), max_relative = 1e-13);
            assert_relative_eq!(
                bessel_j(n, -x),
                sign * bessel_j(n, x),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn i_scaled_at_zero() {
        assert_eq!(bessel_i_scaled(0, 0.0), 1.0);
        assert_eq!(bessel_i_scaled(3, 0.0), 0.0);
    }

    #[test]
    fn i_scaled_bounds_and_symmetry() {
        for &x in &[0.0, 1e-8, 0.3, 2.0, 5.0, 47.0, 1.3e4] {
            for m in 0..12 {
                let v = bessel_i_scaled(m, x);
                assert!((0.0..=1.0).contains(&v), "I_{m}({x}) scaled = {v}");
                assert_eq!(v, bessel_i_scaled(-m, x));
            }
        }
    }

    #[test]
    fn i_scaled_sum_identity() {
        // Σ_{m=-M..M} e^{-x} I_m(x) -> 1, monotonically from below.
        for &x in &[0.5, 5.0, 42.0] {
            let arr = bessel_i_scaled_array(60, x);
            let mut partial = arr[0];
            let mut prev = partial;
            for m in 1..=60 {
                partial += 2.0 * arr[m];
                assert!(partial >= prev - 1e-15);
                assert!(partial <= 1.0 + 1e-12);
                prev = partial;
            }
            assert_abs_diff_eq!(partial, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn i_scaled_reference_values() {
        // Frozen from mpmath besseli(n, x) * exp(-x).
        assert_relative_eq!(
            bessel_i_scaled(0, 1.0),
            0.465_759_607_593_640_36,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            bessel_i_scaled(2, 10.0),
            0.103_580_800_886_537_5,
            max_relative = 1e-12
        );
    }
}
