//! Link-level simulator for OAM-based MIMO wireless transmission.
//!
//! Models Laguerre-Gaussian beam propagation between uniform linear
//! antenna arrays with lateral displacement and angular deflection,
//! non-Kolmogorov atmospheric turbulence, OAM mode purity, MMSE
//! equalization, SINR, capacity, error probability, and exhaustive
//! optimization of the OAM state interval.
//!
//! Module map:
//! - [`numerics`]: special functions, adaptive quadrature, bilateral series
//! - [`beam`]: LG fields, maximum-intensity radius, waist matching
//! - [`geometry`]: array layout, aligned and misaligned link geometry
//! - [`turbulence`]: non-Kolmogorov spectrum, structure function, coherence
//! - [`purity`]: spiral-spectrum power weights T_l(l_j, z)
//! - [`channel`]: per-state complex channel gains and matrices
//! - [`link`]: received-signal model, MMSE, SINR, capacity, error probability
//! - [`optimizer`]: exhaustive OAM state-interval search
//! - [`scenario`]: configuration, defaults, TOML loading
//! - [`sweep`]: figure-reproduction sweeps and CSV emission

pub mod beam;
pub mod channel;
pub mod error;
pub mod geometry;
pub mod link;
pub mod numerics;
pub mod optimizer;
pub mod purity;
pub mod scenario;
pub mod sweep;
pub mod turbulence;

pub use error::{Error, Result};
