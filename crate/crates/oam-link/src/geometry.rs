//! Antenna array layout and per-link geometry.
//!
//! Transmit antennas sit on a uniform linear array along x with spacing
//! d_T; receive antennas occupy the plane z = d_TR, nominally offset by
//! the maximum-intensity ring radius along y. Misalignment moves every
//! receiver in-plane by the lateral displacement plus the deflection
//! walk-off d_TR tan γ.

use crate::beam::MisalignmentParams;
use crate::error::{Error, Result};
use std::f64::consts::FRAC_PI_2;

/// Uniform linear array description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayGeometry {
    /// Number of antennas N on each side.
    pub num_antennas: usize,
    /// Spacing d_T between adjacent antennas, meters.
    pub spacing: f64,
    /// Distance d_TR between the transmit and receive planes, meters.
    pub link_distance: f64,
}

impl ArrayGeometry {
    pub fn new(num_antennas: usize, spacing: f64, link_distance: f64) -> Result<Self> {
        let g = ArrayGeometry {
            num_antennas,
            spacing,
            link_distance,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.num_antennas < 1 {
            return Err(Error::ValidationError("num_antennas >= 1".into()));
        }
        if !(self.spacing > 0.0) {
            return Err(Error::ValidationError("spacing > 0".into()));
        }
        if !(self.link_distance > 0.0) {
            return Err(Error::ValidationError("link_distance > 0".into()));
        }
        Ok(())
    }

    fn check_index(&self, idx: usize) -> Result<()> {
        if idx < 1 || idx > self.num_antennas {
            Err(Error::IndexOutOfRange {
                index: idx,
                n: self.num_antennas,
            })
        } else {
            Ok(())
        }
    }
}

/// Azimuth, in-plane radial distance, and Euclidean distance of one
/// transmitter-receiver link. Indices are 1-based, mirroring Tx_1..Tx_N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkGeometry {
    /// Azimuth φ_ji of Rx_j seen from Tx_i, radians.
    pub azimuth: f64,
    /// Radial distance r_ji in the transverse plane, meters.
    pub radial: f64,
    /// Euclidean distance d_ji, meters.
    pub distance: f64,
}

/// Aligned link geometry: the receiver ring offset is `rmax` and the
/// in-array offset is |i - j| d_T.
pub fn aligned_link(geom: &ArrayGeometry, i: usize, j: usize, rmax: f64) -> Result<LinkGeometry> {
    geom.check_index(i)?;
    geom.check_index(j)?;
    let lateral = (i as f64 - j as f64).abs() * geom.spacing;
    let azimuth = if j > i {
        (rmax / lateral).atan()
    } else if j == i {
        FRAC_PI_2
    } else {
        std::f64::consts::PI - (rmax / lateral).atan()
    };
    let radial = (lateral * lateral + rmax * rmax).sqrt();
    let distance = (geom.link_distance * geom.link_distance + radial * radial).sqrt();
    Ok(LinkGeometry {
        azimuth,
        radial,
        distance,
    })
}

/// Misaligned link geometry: every receiver is moved in the plane
/// z = d_TR by (δ cos θ + d_TR tan γ cos η, δ sin θ + d_TR tan γ sin η).
///
/// The azimuth follows the printed three-case form, whose j = i case has a
/// vanishing denominator in the aligned limit; that case returns π/2.
pub fn misaligned_link(
    geom: &ArrayGeometry,
    i: usize,
    j: usize,
    rmax: f64,
    mis: &MisalignmentParams,
) -> Result<LinkGeometry> {
    geom.check_index(i)?;
    geom.check_index(j)?;
    let walk = geom.link_distance * mis.deflection.tan();
    let off_x = mis.displacement * mis.displacement_azimuth.cos()
        + walk * mis.deflection_azimuth.cos();
    let off_y = mis.displacement * mis.displacement_azimuth.sin()
        + walk * mis.deflection_azimuth.sin();

    let lateral = (i as f64 - j as f64).abs() * geom.spacing;
    let num = off_y + rmax;
    let azimuth = if j > i {
        (num / (off_x + lateral)).atan()
    } else if j == i {
        if off_x == 0.0 {
            FRAC_PI_2
        } else {
            (num / off_x).atan()
        }
    } else {
        std::f64::consts::PI - (num / (off_x + lateral)).atan()
    };

    let dx = lateral + off_x;
    let dy = rmax + off_y;
    let radial = (dx * dx + dy * dy).sqrt();
    let distance = (geom.link_distance * geom.link_distance + radial * radial).sqrt();
    Ok(LinkGeometry {
        azimuth,
        radial,
        distance,
    })
}
