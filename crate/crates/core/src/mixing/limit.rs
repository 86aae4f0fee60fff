//! Diffusive-scaling limit of the classical mixing curve: the wrapped
//! normal density on the unit torus and `d_inf(t)`, compared against
//! `d_N(t N^2)`.

use crate::quad::adaptive_simpson;
use crate::sum::pairwise_map;
use crate::walk::{WalkModel, WalkSpec};
use crate::{CycleSize, Error, Result};

/// Density of `sqrt(t) Z mod 1` at `x` in `[0, 1)`, `Z` standard normal:
/// `f_t(x) = sum_m (2 pi t)^(-1/2) exp(-(x + m)^2 / (2t))`, truncated at
/// `|m| <= ceil(8 sqrt(t)) + 3` (the omitted tail is below 1e-12 for every
/// t; a 6 sigma window is not enough at that accuracy).
pub fn wrapped_normal_density(x: f64, t: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::InvalidParameter(format!(
            "x must be in [0, 1), got {x}"
        )));
    }
    if t <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "t must be positive, got {t}"
        )));
    }
    let m_max = (8.0 * t.sqrt()).ceil() as i64 + 3;
    let norm = 1.0 / (std::f64::consts::TAU * t).sqrt();
    let terms = (2 * m_max + 1) as usize;
    Ok(pairwise_map(0, terms, &|i| {
        let m = i as i64 - m_max;
        let u = x + m as f64;
        norm * (-u * u / (2.0 * t)).exp()
    }))
}

/// `d_inf(t) = (1/2) int_0^1 |f_t(x) - 1| dx`, by adaptive quadrature to
/// 1e-8.
pub fn d_infinity(t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "t must be positive, got {t}"
        )));
    }
    let f = |x: f64| {
        let x = if x >= 1.0 { 0.0 } else { x };
        (wrapped_normal_density(x, t).expect("validated") - 1.0).abs()
    };
    Ok(0.5 * adaptive_simpson(f, 0.0, 1.0, 1e-8).max(0.0))
}

/// The diffusive-scaling pair for the continuous-time classical walk:
/// `(d_N(t N^2), d_inf(t))`. No convergence is asserted; the gap is the
/// caller's to report.
pub fn scaling_comparison(n: CycleSize, t: f64) -> Result<(f64, f64)> {
    if t <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "t must be positive, got {t}"
        )));
    }
    let spec = WalkSpec::new(WalkModel::CtClassical, n);
    let scaled_time = t * n.as_f64() * n.as_f64();
    let count = n.get();
    let mut total = 0.0;
    for site in 0..count {
        total += spec.deviation_at(site, scaled_time)?.abs();
    }
    Ok((0.5 * total, d_infinity(t)?))
}
