//! Indexed map with a data-parallel implementation behind the `parallel`
//! feature and a sequential fallback without it.
//!
//! Results are collected in index order and reduced sequentially by the
//! caller, so numeric output is identical across both implementations and
//! any rayon thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Evaluate `f(0), .., f(len - 1)` and collect the results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

/// Evaluate `f(0), .., f(len - 1)` and collect the results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).map(f).collect()
}

/// Sequential twin of [`map_indexed`], kept available unconditionally so
/// benchmarks can compare both paths in one build.
pub fn map_indexed_seq<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}
