//! Cycle-graph domain types.

use crate::{Error, Result};
use serde::Serialize;
use std::f64::consts::TAU;

/// Number of vertices of the cycle `C_N`; at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CycleSize(usize);

impl CycleSize {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooSmall(n));
        }
        Ok(CycleSize(n))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64
    }

    /// Validate a vertex label.
    pub fn vertex(self, vertex: usize) -> Result<usize> {
        if vertex >= self.0 {
            return Err(Error::VertexOutOfRange { vertex, n: self.0 });
        }
        Ok(vertex)
    }
}

impl std::fmt::Display for CycleSize {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// The spectral phase grid `xi_j = 2 pi j / N`, with cached cosines.
///
/// `cos(xi_j)` are the eigenvalues of `A / 2` for the cycle adjacency
/// operator `A`; every spectral sum in the crate runs over this grid.
#[derive(Debug, Clone)]
pub struct PhaseGrid {
    xi: Vec<f64>,
    cos_xi: Vec<f64>,
}

impl PhaseGrid {
    pub fn new(n: CycleSize) -> Self {
        let count = n.get();
        let xi: Vec<f64> = (0..count)
            .map(|j| TAU * j as f64 / count as f64)
            .collect();
        let cos_xi = xi.iter().map(|&x| x.cos()).collect();
        PhaseGrid { xi, cos_xi }
    }

    pub fn len(&self) -> usize {
        self.xi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xi.is_empty()
    }

    /// Angles `xi_j`, strictly increasing from 0, all below `2 pi`.
    pub fn xi(&self) -> &[f64] {
        &self.xi
    }

    /// Cached `cos(xi_j)`.
    pub fn cos_xi(&self) -> &[f64] {
        &self.cos_xi
    }
}

/// Build the phase grid for `C_N`.
pub fn phase_grid(n: CycleSize) -> PhaseGrid {
    PhaseGrid::new(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rejects_small_cycles() {
        assert!(CycleSize::new(0).is_err());
        assert!(CycleSize::new(2).is_err());
        assert!(CycleSize::new(3).is_ok());
    }

    #[test]
    fn grid_values_for_n4() {
        let grid = phase_grid(CycleSize::new(4).unwrap());
        let expect = [0.0, PI / 2.0, PI, 3.0 * PI / 2.0];
        for (got, want) in grid.xi().iter().zip(expect) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn grid_spot_values() {
        let g3 = phase_grid(CycleSize::new(3).unwrap());
        assert!((g3.xi()[1] - 2.0 * PI / 3.0).abs() < 1e-15);
        let g6 = phase_grid(CycleSize::new(6).unwrap());
        assert!((g6.xi()[3] - PI).abs() < 1e-15);
    }

    #[test]
    fn grid_is_strictly_increasing_below_tau() {
        for n in [3usize, 5, 17, 101] {
            let grid = phase_grid(CycleSize::new(n).unwrap());
            assert_eq!(grid.xi()[0], 0.0);
            for w in grid.xi().windows(2) {
                assert!(w[0] < w[1]);
            }
            assert!(*grid.xi().last().unwrap() < TAU);
        }
    }
}
