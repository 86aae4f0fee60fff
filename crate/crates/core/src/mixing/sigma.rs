//! Temporal standard deviations `sigma_N(n)`: closed forms, the resonance
//! route, and finite-horizon quadrature.

use super::average::{integral_steps, rotated_site, QUADRATURE_STEP};
use super::Route;
use crate::quad::composite_simpson;
use crate::sum::{pairwise_map, pairwise_sum};
use crate::walk::{
    ct_classical_probability_at, ct_quantum_probability_at, dt_classical_probability_at,
    dt_coined_step, CoinedState, WalkModel, WalkSpec,
};
use crate::{phase_grid, CycleSize, Error, Result};
use serde::Serialize;

/// Per-site temporal standard deviations with their provenance.
///
/// The route tag matters: quadrature estimates carry finite-horizon error
/// and must never be regression-compared against exact values at exact
/// tolerances.
#[derive(Debug, Clone, Serialize)]
pub struct SigmaReport {
    pub n: usize,
    pub sigma: Vec<f64>,
    pub model: String,
    pub route: Route,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub horizon: Option<f64>,
}

/// Time axis selector for [`sigma_asymptote`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeAxis {
    Continuous,
    Discrete,
}

/// Site class for [`sigma_asymptote`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiteClass {
    Origin,
    NonOrigin,
}

fn require_odd(n: CycleSize) -> Result<()> {
    if n.get() % 2 == 0 {
        return Err(Error::ClosedFormUnavailable {
            requirement: "odd N",
            n: n.get(),
        });
    }
    Ok(())
}

/// Exact limit of `(1/T) int_0^T R_N(n, t)^2 dt` for odd `N`:
/// `(N-1)(5N-9)/4` at the origin and `(N^2-5N+9)/4` elsewhere.
pub fn second_moment_closed(n: CycleSize, site: usize) -> Result<f64> {
    require_odd(n)?;
    let site = n.vertex(site)?;
    let nn = n.as_f64();
    Ok(if site == 0 {
        0.25 * (nn - 1.0) * (5.0 * nn - 9.0)
    } else {
        0.25 * (nn * nn - 5.0 * nn + 9.0)
    })
}

/// Closed-form sigma of the continuous-time quantum walk for odd `N`:
/// `sigma_N(0) = 2 sqrt(N^2 - 3N + 2) / N^2`,
/// `sigma_N(n) = sqrt(N^2 - 5N + 8) / N^2` for `n >= 1`.
pub fn sigma_ct_closed(n: CycleSize, site: usize) -> Result<f64> {
    require_odd(n)?;
    let site = n.vertex(site)?;
    let nn = n.as_f64();
    Ok(if site == 0 {
        2.0 * (nn * nn - 3.0 * nn + 2.0).sqrt() / (nn * nn)
    } else {
        (nn * nn - 5.0 * nn + 8.0).sqrt() / (nn * nn)
    })
}

/// Closed-form sigma of the coined Hadamard walk for odd `N`, via the five
/// spectral sums over `theta_j = xi_{2j} = 4 pi j / N`:
///
/// `sigma^2 = (1/N^4) [ 2 (S_+^2 + S_-^2) + 11 S_0^2 + 10 S_0 S_1 + 3 S_1^2
///            - S_2 ] - 2 / N^3`.
pub fn sigma_dt_closed(n: CycleSize, site: usize) -> Result<f64> {
    require_odd(n)?;
    let site = n.vertex(site)?;
    let count = n.get();
    let nn = n.as_f64();
    let grid = phase_grid(n);
    // theta_j = 2 * xi_j mod 2pi; cos(theta_j) = cos(2 xi_j)
    let theta: Vec<f64> = grid.xi().iter().map(|&x| 2.0 * x).collect();
    let s = site as f64;

    let s0 = pairwise_map(0, count, &|j| 1.0 / (3.0 + theta[j].cos()));
    let s1 = pairwise_map(0, count, &|j| {
        let c = theta[j].cos();
        c / (3.0 + c)
    });
    let s_plus = pairwise_map(0, count, &|j| {
        (((s - 1.0) * theta[j]).cos() + (s * theta[j]).cos()) / (3.0 + theta[j].cos())
    });
    let s_minus = pairwise_map(0, count, &|j| {
        (((s - 1.0) * theta[j]).cos() - (s * theta[j]).cos()) / (3.0 + theta[j].cos())
    });
    // S_2 starts at j = 1
    let s2 = pairwise_map(1, count, &|j| {
        let c = theta[j].cos();
        let num = 7.0 + (2.0 * theta[j]).cos() + 8.0 * c * ((s - 0.5) * theta[j]).cos().powi(2);
        num / (3.0 + c).powi(2)
    });

    let n4 = nn.powi(4);
    let variance = (2.0 * (s_plus * s_plus + s_minus * s_minus)
        + 11.0 * s0 * s0
        + 10.0 * s0 * s1
        + 3.0 * s1 * s1
        - s2)
        / n4
        - 2.0 / nn.powi(3);
    if variance < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "negative sigma^2 = {variance:.3e} for N={count}, site {site}"
        )));
    }
    Ok(variance.sqrt())
}

/// Leading large-`N` coefficient of `N * sigma_N`: 2 at the origin and 1
/// elsewhere for the continuous-time walk, `sqrt(13 - 8 sqrt(2))` at the
/// origin for the coined walk (no published value off the origin).
pub fn sigma_asymptote(axis: TimeAxis, site: SiteClass) -> Result<f64> {
    match (axis, site) {
        (TimeAxis::Continuous, SiteClass::Origin) => Ok(2.0),
        (TimeAxis::Continuous, SiteClass::NonOrigin) => Ok(1.0),
        (TimeAxis::Discrete, SiteClass::Origin) => Ok((13.0 - 8.0 * 2.0f64.sqrt()).sqrt()),
        (TimeAxis::Discrete, SiteClass::NonOrigin) => Err(Error::ClosedFormUnavailable {
            requirement: "a published discrete-time non-origin coefficient",
            n: 0,
        }),
    }
}

/// Finite-horizon estimate of `sigma_N(site)` around a supplied mean
/// `pbar`.
///
/// The average of `(P - pbar)^2` runs over the window `[T/2, T]` (steps
/// `T/2 .. T` for the discrete models): the limit being estimated is
/// unchanged, and discarding the burn-in keeps the decaying transient of the
/// mixing chains from contaminating it.
pub fn quadrature_sigma(spec: &WalkSpec, site: usize, horizon: f64, pbar: f64) -> Result<f64> {
    spec.n.vertex(site)?;
    if horizon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "horizon must be positive, got {horizon}"
        )));
    }
    let mean_square = match &spec.model {
        WalkModel::CtQuantum => {
            let n = spec.n;
            let s = rotated_site(spec, site);
            let lo = horizon / 2.0;
            composite_simpson(
                |t| {
                    let d = ct_quantum_probability_at(n, s, t).expect("validated") - pbar;
                    d * d
                },
                lo,
                horizon,
                QUADRATURE_STEP,
            ) / (horizon - lo)
        }
        WalkModel::CtClassical => {
            let n = spec.n;
            let s = rotated_site(spec, site);
            let lo = horizon / 2.0;
            composite_simpson(
                |t| {
                    let d = ct_classical_probability_at(n, s, t).expect("validated") - pbar;
                    d * d
                },
                lo,
                horizon,
                QUADRATURE_STEP,
            ) / (horizon - lo)
        }
        WalkModel::DtClassical => {
            let steps = integral_steps(horizon)?;
            let lo = steps / 2;
            let s = rotated_site(spec, site);
            let values: Vec<f64> = (lo..steps)
                .map(|t| {
                    let d = dt_classical_probability_at(spec.n, s, t).expect("validated") - pbar;
                    d * d
                })
                .collect();
            pairwise_sum(&values) / (steps - lo) as f64
        }
        WalkModel::DtQuantum { coin, initial_coin } => {
            let steps = integral_steps(horizon)?;
            let lo = steps / 2;
            let s = rotated_site(spec, site);
            let mut state = CoinedState::localized(spec.n, 0, *initial_coin)?;
            let mut values = Vec::with_capacity((steps - lo) as usize);
            for t in 0..steps {
                if t >= lo {
                    let chi = state.components()[s];
                    let d = chi[0].norm_sqr() + chi[1].norm_sqr() - pbar;
                    values.push(d * d);
                }
                state = dt_coined_step(&state, coin);
            }
            pairwise_sum(&values) / (steps - lo) as f64
        }
    };
    Ok(mean_square.max(0.0).sqrt())
}
