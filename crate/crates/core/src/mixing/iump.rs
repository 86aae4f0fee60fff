//! Instantaneous-uniform-mixing detection: scan `d_N(t)`, refine every local
//! minimum, and report the ones that reach (numerical) zero.

use crate::sum::pairwise_map;
use crate::walk::WalkSpec;
use crate::{par, CycleSize, Error, Result};
use serde::Serialize;

/// Scan grid step for `d_N(t)`.
const GRID_STEP: f64 = 0.01;
/// Golden-section refinement runs until the bracket is this narrow.
const BRACKET_WIDTH: f64 = 1e-10;
/// Past this size the per-site oscillation sum is slower than the amplitude
/// route.
const R_FORM_MAX_N: usize = 32;

/// One refined local minimum of `d_N(t)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RefinedMinimum {
    pub t: f64,
    pub d: f64,
}

/// Result of an IUMP scan.
#[derive(Debug, Clone, Serialize)]
pub struct MixingReport {
    pub n: usize,
    pub t_grid: Vec<f64>,
    pub d_values: Vec<f64>,
    /// All refined interior local minima, in time order.
    pub minima: Vec<RefinedMinimum>,
    /// The refined minima with `d < eps`.
    pub iump_times: Vec<RefinedMinimum>,
    pub iump_found: bool,
    pub eps: f64,
    /// Smallest refined value seen (falls back to the grid when no interior
    /// minimum exists).
    pub global_min: RefinedMinimum,
}

/// `d_N(t)` for the continuous-time quantum walk.
///
/// For small cycles it is evaluated through the oscillating part,
/// `d = (1/N^2) sum_n |R_N(n, t)|`, which reaches the true zeros of the
/// mixing times without cancellation; larger cycles use the amplitude
/// vector.
pub fn d_ct_quantum(n: CycleSize, t: f64) -> Result<f64> {
    let count = n.get();
    if count <= R_FORM_MAX_N {
        let total = pairwise_map(0, count, &|site| {
            crate::walk::r_oscillation(n, site, t)
                .expect("validated inputs")
                .abs()
        });
        Ok(total / (count as f64 * count as f64))
    } else {
        let dist = crate::walk::ct_quantum_distribution(n, t)?;
        let uniform = 1.0 / n.as_f64();
        Ok(0.5 * pairwise_map(0, count, &|site| (dist.probabilities()[site] - uniform).abs()))
    }
}

/// Distance-to-uniform curve for any walk model over an explicit time grid
/// (step counts for the discrete models). Grid points evaluate in parallel.
pub fn d_curve(spec: &WalkSpec, grid: &[f64]) -> Result<Vec<f64>> {
    let n = spec.n;
    let values = par::map_indexed(grid.len(), |i| d_point(spec, n, grid[i]));
    values.into_iter().collect()
}

fn d_point(spec: &WalkSpec, n: CycleSize, t: f64) -> Result<f64> {
    match &spec.model {
        crate::walk::WalkModel::CtQuantum => d_ct_quantum(n, t),
        _ => {
            let count = n.get();
            let mut total = 0.0;
            // deviation_at is cancellation-free for all but the coined walk
            for site in 0..count {
                total += spec.deviation_at(site, t)?.abs();
            }
            Ok(0.5 * total)
        }
    }
}

/// Golden-section minimization of `f` on `[a, b]` down to [`BRACKET_WIDTH`].
fn golden_section<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> RefinedMinimum {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > BRACKET_WIDTH {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    RefinedMinimum { t, d: f(t) }
}

/// Scan `d_N(t)` for the continuous-time quantum walk on a 0.01-step grid
/// over `[0, t_max]`, refine each interior local minimum by golden section,
/// and report the minima that fall below `eps`.
pub fn iump_scan(n: CycleSize, t_max: f64, eps: f64) -> Result<MixingReport> {
    if t_max <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "t_max must be positive, got {t_max}"
        )));
    }
    if eps <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "eps must be positive, got {eps}"
        )));
    }
    let points = (t_max / GRID_STEP).ceil() as usize + 1;
    let t_grid: Vec<f64> = (0..points)
        .map(|i| (i as f64 * GRID_STEP).min(t_max))
        .collect();
    let d_values: Vec<f64> = par::map_indexed(points, |i| {
        d_ct_quantum(n, t_grid[i]).expect("validated inputs")
    });

    // interior local minima: strictly below the left neighbour, not above
    // the right one (ties extend plateaus to the right)
    let mut brackets = Vec::new();
    for i in 1..points - 1 {
        if d_values[i] < d_values[i - 1] && d_values[i] <= d_values[i + 1] {
            brackets.push((t_grid[i - 1], t_grid[i + 1]));
        }
    }
    let minima: Vec<RefinedMinimum> = par::map_indexed(brackets.len(), |i| {
        let (a, b) = brackets[i];
        golden_section(&|t| d_ct_quantum(n, t).expect("validated inputs"), a, b)
    });

    let iump_times: Vec<RefinedMinimum> =
        minima.iter().copied().filter(|m| m.d < eps).collect();
    let global_min = minima
        .iter()
        .copied()
        .chain(
            t_grid
                .iter()
                .zip(&d_values)
                .map(|(&t, &d)| RefinedMinimum { t, d }),
        )
        .min_by(|x, y| x.d.total_cmp(&y.d))
        .expect("nonempty grid");

    Ok(MixingReport {
        n: n.get(),
        t_grid,
        d_values,
        iump_found: !iump_times.is_empty(),
        iump_times,
        minima,
        eps,
        global_min,
    })
}
