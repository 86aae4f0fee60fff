//! Mixing statistics: time-averaged distributions, temporal standard
//! deviations, total-variation / instantaneous-uniform-mixing analysis, and
//! the diffusive-scaling comparison.
//!
//! Each quantity is computed by closed form where one exists, by the exact
//! resonance (zero-frequency) engine, and by finite-horizon quadrature; the
//! routes cross-validate each other and every report records which route
//! produced it.

mod average;
mod iump;
mod limit;
mod resonance;
mod sigma;
mod tv;

pub use average::{
    pbar_resonance, pbar_uniform, quadrature_time_average, AverageReport,
};
pub use iump::{d_ct_quantum, d_curve, iump_scan, MixingReport, RefinedMinimum};
pub use limit::{d_infinity, scaling_comparison, wrapped_normal_density};
pub use resonance::{
    resonance_mean, resonance_second_moment, resonance_sigma, resonance_terms, ResonanceTerm,
    RESONANCE_TOL,
};
pub use sigma::{
    quadrature_sigma, second_moment_closed, sigma_asymptote, sigma_ct_closed, sigma_dt_closed,
    SigmaReport, SiteClass, TimeAxis,
};
pub use tv::tv_distance;

use serde::{Deserialize, Serialize};

/// Which computation produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Closed,
    Resonance,
    Quadrature,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Route::Closed => "closed",
            Route::Resonance => "resonance",
            Route::Quadrature => "quadrature",
        })
    }
}

/// Closed-form time-averaged distribution of the continuous-time quantum
/// walk.
pub fn pbar_closed_form(n: crate::CycleSize) -> AverageReport {
    average::pbar_closed_form_impl(n)
}
