//! Pairwise (tree) reductions.
//!
//! Every spectral sum, quadrature and norm in this crate reduces in the same
//! fixed tree order: accuracy stays near machine level for sums of 10^4+
//! terms, and the result does not depend on thread count.

use num_complex::Complex64;

const LEAF: usize = 32;

/// Pairwise sum of `f(i)` over `lo..hi` without materializing the terms.
pub fn pairwise_map<T, F>(lo: usize, hi: usize, f: &F) -> T
where
    T: std::ops::Add<Output = T> + Default + Copy,
    F: Fn(usize) -> T,
{
    debug_assert!(lo <= hi);
    if hi - lo <= LEAF {
        let mut acc = T::default();
        for i in lo..hi {
            acc = acc + f(i);
        }
        acc
    } else {
        let mid = lo + (hi - lo) / 2;
        pairwise_map(lo, mid, f) + pairwise_map(mid, hi, f)
    }
}

/// Pairwise sum of a real slice.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    pairwise_map(0, values.len(), &|i| values[i])
}

/// Pairwise sum of a complex slice.
pub fn pairwise_sum_complex(values: &[Complex64]) -> Complex64 {
    pairwise_map(0, values.len(), &|i| values[i])
}
