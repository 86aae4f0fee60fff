//! Classical random walks on the cycle, in continuous and discrete time.
//!
//! Both are spectral sums over the phase grid; the deviation forms
//! (`P - 1/N` computed without adding the stationary value) keep the
//! far-tail of the mixing curves free of cancellation noise.

use super::ProbabilityDistribution;
use crate::sum::pairwise_map;
use crate::{phase_grid, CycleSize, Error, PhaseGrid, Result};

fn check_time(t: f64) -> Result<()> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    Ok(())
}

/// Spectral weight of mode `j` at time `t`: `exp(t (cos xi_j - 1))`.
fn ct_weight(cos_xi: f64, t: f64) -> f64 {
    (t * (cos_xi - 1.0)).exp()
}

/// Spectral weight of mode `j` after `t` steps: `cos(xi_j)^t`.
fn dt_weight(cos_xi: f64, t: u64) -> f64 {
    if t <= i32::MAX as u64 {
        cos_xi.powi(t as i32)
    } else {
        // |cos| < 1 has underflowed long before this; only +-1 matter.
        if cos_xi == 1.0 {
            1.0
        } else if cos_xi == -1.0 {
            if t % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        } else {
            cos_xi.abs().powf(t as f64) * if cos_xi < 0.0 && t % 2 == 1 { -1.0 } else { 1.0 }
        }
    }
}

fn deviation(grid: &PhaseGrid, site: usize, weight: impl Fn(f64) -> f64) -> f64 {
    let count = grid.len();
    let s = site as f64;
    pairwise_map(1, count, &|j| {
        (grid.xi()[j] * s).cos() * weight(grid.cos_xi()[j])
    }) / count as f64
}

fn distribution_from_deviation(
    n: CycleSize,
    t: f64,
    dev: impl Fn(usize) -> f64,
) -> Result<ProbabilityDistribution> {
    let uniform = 1.0 / n.as_f64();
    let p = (0..n.get()).map(|site| uniform + dev(site)).collect();
    ProbabilityDistribution::from_raw(p, t, "classical spectral sum")
}

/// Continuous-time classical walk:
/// `P_N(n,t) = (1/N) sum_j cos(xi_j n) exp(t (cos xi_j - 1))`.
pub fn ct_classical_distribution(n: CycleSize, t: f64) -> Result<ProbabilityDistribution> {
    check_time(t)?;
    let grid = phase_grid(n);
    distribution_from_deviation(n, t, |site| deviation(&grid, site, |c| ct_weight(c, t)))
}

/// `P_N(site, t) - 1/N` for the continuous-time classical walk.
pub fn ct_classical_deviation_at(n: CycleSize, site: usize, t: f64) -> Result<f64> {
    check_time(t)?;
    let site = n.vertex(site)?;
    let grid = phase_grid(n);
    Ok(deviation(&grid, site, |c| ct_weight(c, t)))
}

/// `P_N(site, t)` for the continuous-time classical walk.
pub fn ct_classical_probability_at(n: CycleSize, site: usize, t: f64) -> Result<f64> {
    Ok(1.0 / n.as_f64() + ct_classical_deviation_at(n, site, t)?)
}

/// Discrete-time classical walk:
/// `P_N(n,t) = (1/N) sum_j cos(xi_j n) cos(xi_j)^t`.
pub fn dt_classical_distribution(n: CycleSize, t: u64) -> Result<ProbabilityDistribution> {
    let grid = phase_grid(n);
    distribution_from_deviation(n, t as f64, |site| {
        deviation(&grid, site, |c| dt_weight(c, t))
    })
}

/// `P_N(site, t) - 1/N` for the discrete-time classical walk.
pub fn dt_classical_deviation_at(n: CycleSize, site: usize, t: u64) -> Result<f64> {
    let site = n.vertex(site)?;
    let grid = phase_grid(n);
    Ok(deviation(&grid, site, |c| dt_weight(c, t)))
}

/// `P_N(site, t)` for the discrete-time classical walk.
pub fn dt_classical_probability_at(n: CycleSize, site: usize, t: u64) -> Result<f64> {
    Ok(1.0 / n.as_f64() + dt_classical_deviation_at(n, site, t)?)
}
