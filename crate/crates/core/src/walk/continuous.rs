//! Continuous-time quantum walk: spectral amplitudes, probabilities, and the
//! oscillation decomposition `P_N(n,t) = 1/N + 2 R_N(n,t) / N^2`.

use super::{AmplitudeVector, ProbabilityDistribution};
use crate::sum::pairwise_map;
use crate::{par, phase_grid, CycleSize, Error, Result};
use num_complex::Complex64;

/// Below this size the per-site work is too small to pay for forking.
const PAR_SITE_THRESHOLD: usize = 64;

fn check_time(t: f64) -> Result<()> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    Ok(())
}

/// Amplitude at a single vertex:
/// `Psi_N(n, t) = (1/N) sum_j exp(-i (t cos(xi_j) - n xi_j))`.
pub fn ct_quantum_amplitude_at(n: CycleSize, site: usize, t: f64) -> Result<Complex64> {
    check_time(t)?;
    let site = n.vertex(site)?;
    let grid = phase_grid(n);
    Ok(amplitude_site(grid.xi(), grid.cos_xi(), site, t))
}

fn amplitude_site(xi: &[f64], cos_xi: &[f64], site: usize, t: f64) -> Complex64 {
    let count = xi.len();
    let s = site as f64;
    let total = pairwise_map(0, count, &|j| {
        let (sin, cos) = (s * xi[j] - t * cos_xi[j]).sin_cos();
        Complex64::new(cos, sin)
    });
    total / count as f64
}

/// Full amplitude vector at time `t`, unit norm within 1e-12.
pub fn ct_quantum_amplitude(n: CycleSize, t: f64) -> Result<AmplitudeVector> {
    check_time(t)?;
    let grid = phase_grid(n);
    let count = n.get();
    let psi = if count >= PAR_SITE_THRESHOLD {
        par::map_indexed(count, |site| {
            amplitude_site(grid.xi(), grid.cos_xi(), site, t)
        })
    } else {
        par::map_indexed_seq(count, |site| {
            amplitude_site(grid.xi(), grid.cos_xi(), site, t)
        })
    };
    AmplitudeVector::new(psi, t)
}

/// Distribution `p[n] = |Psi_N(n, t)|^2`.
pub fn ct_quantum_distribution(n: CycleSize, t: f64) -> Result<ProbabilityDistribution> {
    ct_quantum_amplitude(n, t)?.to_distribution()
}

/// `|Psi_N(site, t)|^2` without building the full vector.
pub fn ct_quantum_probability_at(n: CycleSize, site: usize, t: f64) -> Result<f64> {
    Ok(ct_quantum_amplitude_at(n, site, t)?.norm_sqr())
}

/// The oscillating part
/// `R_N(n,t) = sum_{0 <= j < k < N} cos(t (cos xi_j - cos xi_k) - n (xi_j - xi_k))`.
pub fn r_oscillation(n: CycleSize, site: usize, t: f64) -> Result<f64> {
    check_time(t)?;
    let site = n.vertex(site)?;
    let grid = phase_grid(n);
    let xi = grid.xi();
    let cos_xi = grid.cos_xi();
    let count = n.get();
    let s = site as f64;
    Ok(pairwise_map(0, count - 1, &|j| {
        pairwise_map(j + 1, count, &|k| {
            (t * (cos_xi[j] - cos_xi[k]) - s * (xi[j] - xi[k])).cos()
        })
    }))
}

/// `P(site, t) - 1/N = 2 R_N(site, t) / N^2`, free of the cancellation that
/// forming `|Psi|^2 - 1/N` would incur.
pub fn ct_quantum_deviation_at(n: CycleSize, site: usize, t: f64) -> Result<f64> {
    let nn = n.as_f64();
    Ok(2.0 * r_oscillation(n, site, t)? / (nn * nn))
}

/// Closed forms of `R_N(n, t)` for `N = 3, 4, 6`, transcribed term by term;
/// regression oracle for [`r_oscillation`].
pub fn r_reference_closed(n: CycleSize, site: usize, t: f64) -> Result<f64> {
    let site = n.vertex(site)?;
    match (n.get(), site) {
        (3, 0) => Ok(2.0 * (1.5 * t).cos() + 1.0),
        (3, _) => Ok(-(1.5 * t).cos() - 0.5),
        (4, 0) => Ok((2.0 * t).cos() + 4.0 * t.cos() + 1.0),
        (4, 1) | (4, 3) => Ok(-(2.0 * t).cos() - 1.0),
        (4, 2) => Ok((2.0 * t).cos() - 4.0 * t.cos() + 1.0),
        (6, 0) => Ok((2.0 * t).cos() + 4.0 * (1.5 * t).cos() + 4.0 * t.cos()
            + 4.0 * (0.5 * t).cos()
            + 2.0),
        (6, 1) | (6, 5) => Ok(-(2.0 * t).cos() - 2.0 * (1.5 * t).cos() - t.cos()
            + 2.0 * (0.5 * t).cos()
            - 1.0),
        (6, 2) | (6, 4) => Ok((2.0 * t).cos() - 2.0 * (1.5 * t).cos() + t.cos()
            - 2.0 * (0.5 * t).cos()
            - 1.0),
        (6, 3) => Ok(-(2.0 * t).cos() + 4.0 * (1.5 * t).cos() - 4.0 * t.cos()
            - 4.0 * (0.5 * t).cos()
            + 2.0),
        _ => Err(Error::ClosedFormUnavailable {
            requirement: "N in {3, 4, 6}",
            n: n.get(),
        }),
    }
}
