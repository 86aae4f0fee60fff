//! Quadrature rules shared by the time-averaging routines.

use crate::par;
use crate::sum::pairwise_sum;

fn simpson_grid(a: f64, b: f64, max_step: f64) -> (usize, f64) {
    assert!(b > a, "empty integration interval");
    assert!(max_step > 0.0, "step must be positive");
    let mut intervals = ((b - a) / max_step).ceil() as usize;
    intervals = intervals.max(2);
    if intervals % 2 == 1 {
        intervals += 1;
    }
    (intervals, (b - a) / intervals as f64)
}

fn simpson_term<F>(f: &F, a: f64, b: f64, h: f64, intervals: usize, i: usize) -> f64
where
    F: Fn(f64) -> f64,
{
    let t = if i == intervals { b } else { a + h * i as f64 };
    let w = if i == 0 || i == intervals {
        1.0
    } else if i % 2 == 1 {
        4.0
    } else {
        2.0
    };
    w * f(t)
}

/// Composite Simpson rule over `[a, b]` with step at most `max_step`.
///
/// Sample evaluation is data-parallel; the weighted reduction runs in fixed
/// pairwise order, so the value matches [`composite_simpson_seq`] bit for
/// bit.
pub fn composite_simpson<F>(f: F, a: f64, b: f64, max_step: f64) -> f64
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    let (intervals, h) = simpson_grid(a, b, max_step);
    let weighted = par::map_indexed(intervals + 1, |i| simpson_term(&f, a, b, h, intervals, i));
    pairwise_sum(&weighted) * h / 3.0
}

/// Sequential twin of [`composite_simpson`], kept for benchmark comparison.
pub fn composite_simpson_seq<F>(f: F, a: f64, b: f64, max_step: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    let (intervals, h) = simpson_grid(a, b, max_step);
    let weighted =
        par::map_indexed_seq(intervals + 1, |i| simpson_term(&f, a, b, h, intervals, i));
    pairwise_sum(&weighted) * h / 3.0
}

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adaptive_step(&f, a, b, fa, fm, fb, whole, tol, 40)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64
where
    F: Fn(f64) -> f64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
}
