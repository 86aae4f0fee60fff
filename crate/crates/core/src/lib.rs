//! Random walks on the cycle graph `C_N` and their mixing behaviour.
//!
//! Four walk models are implemented, all started from a point mass at
//! vertex 0:
//!
//! * continuous-time quantum walk driven by `U(t) = exp(-i t A / 2)`,
//! * continuous-time classical walk (exponential holding times),
//! * discrete-time classical walk (symmetric nearest-neighbour steps),
//! * discrete-time coined quantum walk (2x2 coin and conditional shift).
//!
//! On top of the snapshot formulas in [`walk`], the crate provides a
//! Bessel-expansion route to the quantum amplitudes ([`bessel`]) that serves
//! as an independent numerical oracle, and the mixing statistics of
//! [`mixing`]: time-averaged distributions, temporal standard deviations,
//! instantaneous-uniform-mixing detection, and the diffusive-scaling
//! comparison against the wrapped normal density.
//!
//! Grid scans and quadratures are data-parallel (rayon) when the default
//! `parallel` feature is enabled; every reduction runs in a fixed pairwise
//! order, so results are identical with and without the feature and for any
//! thread count.

pub mod bessel;
pub mod cycle;
mod error;
pub mod mixing;
pub mod par;
pub mod quad;
pub mod sum;
pub mod walk;

pub use cycle::{phase_grid, CycleSize, PhaseGrid};
pub use error::{Error, Result};
pub use walk::{
    AmplitudeVector, CoinMatrix, CoinedState, ProbabilityDistribution, WalkModel, WalkSpec,
};
