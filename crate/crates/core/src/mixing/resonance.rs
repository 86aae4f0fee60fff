//! Exact time averages of the oscillating part `R_N(n, t)` and of its
//! square, by resonance matching.
//!
//! `R_N(n, t)` is a finite sum of cosines `cos(omega t - phi)` over vertex
//! pairs, hence almost periodic: its exact long-time average keeps only the
//! zero-frequency terms, and the average of `R^2` keeps the pair products
//! whose sum or difference frequency vanishes. Matching groups frequencies
//! within [`RESONANCE_TOL`]; genuine nonzero gaps on `C_N` scale like
//! `1/N^2`, far above it, and the engine verifies that margin before
//! trusting a match.

use crate::sum::pairwise_map;
use crate::{phase_grid, CycleSize, Error, Result};
use num_complex::Complex64;

/// Frequencies closer than this are declared resonant (equal).
pub const RESONANCE_TOL: f64 = 1e-9;
/// Required separation of genuine nonzero frequency combinations, as a
/// multiple of [`RESONANCE_TOL`].
const GAP_FACTOR: f64 = 100.0;

/// One cosine summand of `R_N(n, t)`: `weight * cos(frequency * t - phase)`.
#[derive(Debug, Clone, Copy)]
pub struct ResonanceTerm {
    /// `cos(xi_j) - cos(xi_k)`; always in `[-2, 2]`.
    pub frequency: f64,
    /// `n (xi_j - xi_k)`.
    pub phase: f64,
    /// 1 for every `(j, k)` pair.
    pub weight: f64,
}

/// All `N (N - 1) / 2` terms of `R_N(site, t)`, pairs `0 <= j < k < N`.
pub fn resonance_terms(n: CycleSize, site: usize) -> Result<Vec<ResonanceTerm>> {
    let site = n.vertex(site)?;
    let grid = phase_grid(n);
    let xi = grid.xi();
    let cos_xi = grid.cos_xi();
    let s = site as f64;
    let count = n.get();
    let mut terms = Vec::with_capacity(count * (count - 1) / 2);
    for j in 0..count - 1 {
        for k in j + 1..count {
            terms.push(ResonanceTerm {
                frequency: cos_xi[j] - cos_xi[k],
                phase: s * (xi[j] - xi[k]),
                weight: 1.0,
            });
        }
    }
    Ok(terms)
}

/// Terms grouped by equal frequency, each with its phasor sum
/// `Z = sum w exp(i phi)`.
struct FrequencyGroups {
    /// Group centers, strictly increasing with gaps > 100 * tol.
    omega: Vec<f64>,
    /// Phasor sum per group.
    z: Vec<Complex64>,
}

impl FrequencyGroups {
    fn build(terms: &[ResonanceTerm]) -> Result<Self> {
        let mut order: Vec<usize> = (0..terms.len()).collect();
        order.sort_by(|&a, &b| terms[a].frequency.total_cmp(&terms[b].frequency));

        let mut omega = Vec::new();
        let mut z: Vec<Complex64> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for &idx in &order {
            let term = &terms[idx];
            match omega.last() {
                Some(&last) if term.frequency - last <= RESONANCE_TOL => {
                    members.last_mut().unwrap().push(idx);
                }
                _ => {
                    // guard: a new group must be far from the previous one
                    if let Some(&last) = omega.last() {
                        let gap = term.frequency - last;
                        if gap <= GAP_FACTOR * RESONANCE_TOL {
                            return Err(Error::ResonanceGapTooSmall {
                                gap,
                                tol: RESONANCE_TOL,
                            });
                        }
                    }
                    omega.push(term.frequency);
                    members.push(vec![idx]);
                }
            }
        }
        for group in &members {
            let sum = pairwise_map(0, group.len(), &|i| {
                let term = &terms[group[i]];
                let (sin, cos) = term.phase.sin_cos();
                Complex64::new(cos, sin) * term.weight
            });
            z.push(sum);
        }
        Ok(FrequencyGroups { omega, z })
    }

    /// Index of the group matching frequency `target`, if any; errors when a
    /// candidate sits in the ambiguous band between tol and 100 * tol.
    fn find(&self, target: f64) -> Result<Option<usize>> {
        let pos = self
            .omega
            .partition_point(|&w| w < target)
            .min(self.omega.len().saturating_sub(1));
        let mut best = pos;
        let mut best_gap = (self.omega[pos] - target).abs();
        if pos > 0 {
            let gap = (self.omega[pos - 1] - target).abs();
            if gap < best_gap {
                best = pos - 1;
                best_gap = gap;
            }
        }
        if pos + 1 < self.omega.len() {
            let gap = (self.omega[pos + 1] - target).abs();
            if gap < best_gap {
                best = pos + 1;
                best_gap = gap;
            }
        }
        if best_gap <= RESONANCE_TOL {
            Ok(Some(best))
        } else if best_gap <= GAP_FACTOR * RESONANCE_TOL {
            Err(Error::ResonanceGapTooSmall {
                gap: best_gap,
                tol: RESONANCE_TOL,
            })
        } else {
            Ok(None)
        }
    }
}

/// Exact time average `R_N(site) = lim (1/T) int R_N(site, t) dt`: only the
/// zero-frequency terms survive, each contributing `cos(phase)`.
pub fn resonance_mean(n: CycleSize, site: usize) -> Result<f64> {
    let terms = resonance_terms(n, site)?;
    let groups = FrequencyGroups::build(&terms)?;
    Ok(match groups.find(0.0)? {
        Some(g) => groups.z[g].re,
        None => 0.0,
    })
}

/// Exact limit of `(1/T) int R_N(site, t)^2 dt`.
///
/// Expanding the product of two cosine sums, the surviving contributions are
/// `(1/2) cos(phi_p - phi_q)` over ordered pairs with `omega_p = omega_q`
/// and `(1/2) cos(phi_p + phi_q)` over ordered pairs with
/// `omega_p = -omega_q`; terms with both frequencies zero are covered by the
/// two conditions jointly. In grouped form:
/// `<R^2> = (1/2) [ sum_G |Z_G|^2 + Re sum_{G, G': w_G = -w_G'} Z_G Z_G' ]`.
pub fn resonance_second_moment(n: CycleSize, site: usize) -> Result<f64> {
    let terms = resonance_terms(n, site)?;
    let groups = FrequencyGroups::build(&terms)?;
    let diag = pairwise_map(0, groups.z.len(), &|g| groups.z[g].norm_sqr());
    let mut mirrored = 0.0;
    for g in 0..groups.omega.len() {
        if let Some(h) = groups.find(-groups.omega[g])? {
            mirrored += (groups.z[g] * groups.z[h]).re;
        }
    }
    Ok(0.5 * (diag + mirrored))
}

/// Exact temporal standard deviation of the continuous-time quantum walk,
/// `sigma_N(site) = (2 / N^2) sqrt(<R^2> - R_N(site)^2)`; valid for every
/// `N >= 3`, odd or even.
pub fn resonance_sigma(n: CycleSize, site: usize) -> Result<f64> {
    let mean = resonance_mean(n, site)?;
    let second = resonance_second_moment(n, site)?;
    let variance = (second - mean * mean).max(0.0);
    let nn = n.as_f64();
    Ok(2.0 * variance.sqrt() / (nn * nn))
}
