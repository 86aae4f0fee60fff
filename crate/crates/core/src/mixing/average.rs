//! Time-averaged distributions: exact closed forms, the resonance route, and
//! finite-horizon quadrature.

use super::{resonance::resonance_mean, Route};
use crate::quad::composite_simpson;
use crate::sum::pairwise_sum;
use crate::walk::{
    ct_classical_probability_at, ct_quantum_probability_at, dt_classical_probability_at,
    dt_coined_step, CoinedState, WalkModel, WalkSpec,
};
use crate::{CycleSize, Error, Result};
use serde::Serialize;

/// Simpson step for the continuous-time Cesaro integrals; at most 0.05 so
/// the fastest oscillation (2 rad per unit time) is sampled 60+ times per
/// period.
pub(crate) const QUADRATURE_STEP: f64 = 0.05;

/// A time-averaged distribution with the route that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct AverageReport {
    pub n: usize,
    pub pbar: Vec<f64>,
    pub route: Route,
    /// Quadrature horizon, when the route is finite-horizon.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub horizon: Option<f64>,
}

impl AverageReport {
    fn checked(self) -> Result<Self> {
        let total = pairwise_sum(&self.pbar);
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::NormalizationDefect {
                context: "time-averaged distribution",
                defect: (total - 1.0).abs(),
                tol: 1e-10,
            });
        }
        Ok(self)
    }
}

/// Closed-form time average of the continuous-time quantum walk.
///
/// Odd `N`: one peak `1/N + (N-1)/N^2` at the origin and `1/N - 1/N^2`
/// elsewhere. Even `N`: peaks `1/N + (N-2)/N^2` at 0 and `N/2`, and
/// `1/N - 2/N^2` elsewhere.
pub(crate) fn pbar_closed_form_impl(n: CycleSize) -> AverageReport {
    let count = n.get();
    let nn = n.as_f64();
    let pbar = if count % 2 == 1 {
        let mut v = vec![1.0 / nn - 1.0 / (nn * nn); count];
        v[0] = 1.0 / nn + (nn - 1.0) / (nn * nn);
        v
    } else {
        let mut v = vec![1.0 / nn - 2.0 / (nn * nn); count];
        v[0] = 1.0 / nn + (nn - 2.0) / (nn * nn);
        v[count / 2] = v[0];
        v
    };
    AverageReport {
        n: count,
        pbar,
        route: Route::Closed,
        horizon: None,
    }
}

/// Time average of the continuous-time quantum walk via the resonance
/// engine: `pbar[n] = 1/N + 2 R_N(n) / N^2`.
pub fn pbar_resonance(n: CycleSize) -> Result<AverageReport> {
    let nn = n.as_f64();
    let mut pbar = Vec::with_capacity(n.get());
    for site in 0..n.get() {
        pbar.push(1.0 / nn + 2.0 * resonance_mean(n, site)? / (nn * nn));
    }
    AverageReport {
        n: n.get(),
        pbar,
        route: Route::Resonance,
        horizon: None,
    }
    .checked()
}

/// The uniform time average of the classical walks (both time axes) and of
/// the coined Hadamard walk on odd cycles and on `C_4`.
pub fn pbar_uniform(n: CycleSize) -> AverageReport {
    AverageReport {
        n: n.get(),
        pbar: vec![1.0 / n.as_f64(); n.get()],
        route: Route::Closed,
        horizon: None,
    }
}

/// Finite-horizon Cesaro average of `P(site, t)`.
///
/// Continuous models: `(1/T) int_0^T P dt` by composite Simpson with step
/// <= 0.05. Discrete models: the plain average over steps `0 .. T-1`.
pub fn quadrature_time_average(spec: &WalkSpec, site: usize, horizon: f64) -> Result<f64> {
    spec.n.vertex(site)?;
    if horizon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "horizon must be positive, got {horizon}"
        )));
    }
    match &spec.model {
        WalkModel::CtQuantum => {
            let n = spec.n;
            let s = rotated_site(spec, site);
            let integral = composite_simpson(
                |t| ct_quantum_probability_at(n, s, t).expect("validated inputs"),
                0.0,
                horizon,
                QUADRATURE_STEP,
            );
            Ok(integral / horizon)
        }
        WalkModel::CtClassical => {
            let n = spec.n;
            let s = rotated_site(spec, site);
            let integral = composite_simpson(
                |t| ct_classical_probability_at(n, s, t).expect("validated inputs"),
                0.0,
                horizon,
                QUADRATURE_STEP,
            );
            Ok(integral / horizon)
        }
        WalkModel::DtClassical => {
            let steps = integral_steps(horizon)?;
            let s = rotated_site(spec, site);
            let values: Vec<f64> = (0..steps)
                .map(|t| dt_classical_probability_at(spec.n, s, t).expect("validated"))
                .collect();
            Ok(pairwise_sum(&values) / steps as f64)
        }
        WalkModel::DtQuantum { coin, initial_coin } => {
            let steps = integral_steps(horizon)?;
            let s = rotated_site(spec, site);
            let mut state = CoinedState::localized(spec.n, 0, *initial_coin)?;
            let mut values = Vec::with_capacity(steps as usize);
            for _ in 0..steps {
                let chi = state.components()[s];
                values.push(chi[0].norm_sqr() + chi[1].norm_sqr());
                state = dt_coined_step(&state, coin);
            }
            Ok(pairwise_sum(&values) / steps as f64)
        }
    }
}

pub(crate) fn rotated_site(spec: &WalkSpec, site: usize) -> usize {
    (site + spec.n.get() - spec.start()) % spec.n.get()
}

pub(crate) fn integral_steps(horizon: f64) -> Result<u64> {
    if horizon < 1.0 || horizon.fract() != 0.0 {
        return Err(Error::InvalidParameter(format!(
            "discrete horizon must be a positive integer step count, got {horizon}"
        )));
    }
    Ok(horizon as u64)
}
