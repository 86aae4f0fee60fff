//! Discrete-time coined quantum walk: a 2x2 coin acts on the internal
//! degree of freedom, then component 0 shifts one vertex left and component
//! 1 one vertex right.

use super::{ProbabilityDistribution, NORM_TOL};
use crate::sum::pairwise_map;
use crate::{CycleSize, Error, Result};
use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

/// A unitary 2x2 coin operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinMatrix {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl CoinMatrix {
    /// Validate unitarity (orthonormal columns) within 1e-12.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let col0 = a.norm_sqr() + c.norm_sqr();
        let col1 = b.norm_sqr() + d.norm_sqr();
        let cross = (a.conj() * b + c.conj() * d).norm();
        let defect = (col0 - 1.0).abs().max((col1 - 1.0).abs()).max(cross);
        if defect > NORM_TOL {
            return Err(Error::NonUnitaryCoin { defect });
        }
        Ok(CoinMatrix { a, b, c, d })
    }

    /// The Hadamard coin `a = b = c = -d = 1/sqrt(2)`.
    pub fn hadamard() -> Self {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        CoinMatrix {
            a: h,
            b: h,
            c: h,
            d: -h,
        }
    }

    /// Identity coin; combined with the shift it moves component 0 left and
    /// component 1 right without mixing.
    pub fn identity() -> Self {
        CoinMatrix {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    fn apply(&self, chi: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.a * chi[0] + self.b * chi[1],
            self.c * chi[0] + self.d * chi[1],
        ]
    }
}

/// Position x coin state of the coined walk.
#[derive(Debug, Clone)]
pub struct CoinedState {
    chi: Vec<[Complex64; 2]>,
    step: u64,
}

impl CoinedState {
    /// Point mass at `vertex` with the given (unit norm) coin state.
    pub fn localized(n: CycleSize, vertex: usize, coin_state: [Complex64; 2]) -> Result<Self> {
        let vertex = n.vertex(vertex)?;
        let norm = coin_state[0].norm_sqr() + coin_state[1].norm_sqr();
        let defect = (norm - 1.0).abs();
        if defect > NORM_TOL {
            return Err(Error::NonUnitCoinState { defect });
        }
        let mut chi = vec![[Complex64::new(0.0, 0.0); 2]; n.get()];
        chi[vertex] = coin_state;
        Ok(CoinedState { chi, step: 0 })
    }

    pub fn components(&self) -> &[[Complex64; 2]] {
        &self.chi
    }

    pub fn step_count(&self) -> u64 {
        self.step
    }

    pub fn squared_norm(&self) -> f64 {
        pairwise_map(0, self.chi.len(), &|v| {
            self.chi[v][0].norm_sqr() + self.chi[v][1].norm_sqr()
        })
    }

    /// Marginal over the coin register.
    pub fn distribution(&self) -> Result<ProbabilityDistribution> {
        let p = self
            .chi
            .iter()
            .map(|c| c[0].norm_sqr() + c[1].norm_sqr())
            .collect();
        ProbabilityDistribution::from_raw(p, self.step as f64, "coined marginal")
    }
}

/// One step: coin on every site, then shift component 0 to `n - 1` and
/// component 1 to `n + 1` (mod N).
pub fn dt_coined_step(state: &CoinedState, coin: &CoinMatrix) -> CoinedState {
    let count = state.chi.len();
    let mut next = vec![[Complex64::new(0.0, 0.0); 2]; count];
    for (v, &chi) in state.chi.iter().enumerate() {
        let flipped = coin.apply(chi);
        next[(v + count - 1) % count][0] = flipped[0];
        next[(v + 1) % count][1] = flipped[1];
    }
    CoinedState {
        chi: next,
        step: state.step + 1,
    }
}

/// Distribution after `steps` coined steps from a point mass at vertex 0.
pub fn dt_coined_distribution(
    n: CycleSize,
    steps: u64,
    coin: &CoinMatrix,
    initial_coin: &[Complex64; 2],
) -> Result<ProbabilityDistribution> {
    let mut state = CoinedState::localized(n, 0, *initial_coin)?;
    for _ in 0..steps {
        state = dt_coined_step(&state, coin);
    }
    state.distribution()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: usize) -> CycleSize {
        CycleSize::new(v).unwrap()
    }

    fn comp0() -> [Complex64; 2] {
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
    }

    /// Dense 2N x 2N one-step unitary applied repeatedly; basis index
    /// `2 * vertex + component`. Built directly from the shift convention,
    /// independent of the sparse stepping code.
    fn dense_power_oracle(
        count: usize,
        steps: u64,
        coin: &CoinMatrix,
        initial: &[Complex64; 2],
    ) -> Vec<f64> {
        let dim = 2 * count;
        let mut u = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
        for m in 0..count {
            let left = (m + count - 1) % count;
            let right = (m + 1) % count;
            u[2 * left][2 * m] = coin.a;
            u[2 * left][2 * m + 1] = coin.b;
            u[2 * right + 1][2 * m] = coin.c;
            u[2 * right + 1][2 * m + 1] = coin.d;
        }
        let mut v = vec![Complex64::new(0.0, 0.0); dim];
        v[0] = initial[0];
        v[1] = initial[1];
        for _ in 0..steps {
            let mut next = vec![Complex64::new(0.0, 0.0); dim];
            for (row, row_entries) in u.iter().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for (col, entry) in row_entries.iter().enumerate() {
                    acc += entry * v[col];
                }
                next[row] = acc;
            }
            v = next;
        }
        (0..count)
            .map(|m| v[2 * m].norm_sqr() + v[2 * m + 1].norm_sqr())
            .collect()
    }

    #[test]
    fn rejects_non_unitary_coin() {
        let err = CoinMatrix::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonUnitaryCoin { .. }));
    }

    #[test]
    fn identity_coin_is_a_pure_left_shift_for_component_0() {
        let state = CoinedState::localized(n(6), 0, comp0()).unwrap();
        let next = dt_coined_step(&state, &CoinMatrix::identity());
        assert!((next.components()[5][0].re - 1.0).abs() < 1e-15);
        assert!((next.squared_norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hadamard_preserves_norm() {
        let coin = CoinMatrix::hadamard();
        let mut state = CoinedState::localized(n(7), 3, comp0()).unwrap();
        for _ in 0..100 {
            state = dt_coined_step(&state, &coin);
        }
        assert!((state.squared_norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn first_hadamard_step_splits_evenly() {
        let d = dt_coined_distribution(n(5), 1, &CoinMatrix::hadamard(), &comp0()).unwrap();
        let expect = [0.0, 0.5, 0.0, 0.0, 0.5];
        for (got, want) in d.probabilities().iter().zip(expect) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn two_steps_match_dense_unitary_power() {
        let coin = CoinMatrix::hadamard();
        let d = dt_coined_distribution(n(4), 2, &coin, &comp0()).unwrap();
        let oracle = dense_power_oracle(4, 2, &coin, &comp0());
        for (got, want) in d.probabilities().iter().zip(&oracle) {
            assert!((got - want).abs() < 1e-13);
        }
    }

    #[test]
    fn fifty_steps_match_dense_unitary_power() {
        let coin = CoinMatrix::hadamard();
        let d = dt_coined_distribution(n(9), 50, &coin, &comp0()).unwrap();
        let oracle = dense_power_oracle(9, 50, &coin, &comp0());
        for (got, want) in d.probabilities().iter().zip(&oracle) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn zero_steps_is_the_initial_point_mass() {
        let d = dt_coined_distribution(n(5), 0, &CoinMatrix::hadamard(), &comp0()).unwrap();
        assert_eq!(d.probabilities()[0], 1.0);
    }

    #[test]
    fn norm_drift_over_ten_thousand_steps() {
        let coin = CoinMatrix::hadamard();
        let mut state = CoinedState::localized(n(16), 0, comp0()).unwrap();
        for _ in 0..10_000 {
            state = dt_coined_step(&state, &coin);
        }
        assert!((state.squared_norm() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn default_initial_coin_is_asymmetric_from_step_three() {
        // The Hadamard walk from coin state (1, 0) picks a direction; by
        // step 3 the distribution is no longer mirror symmetric.
        let d = dt_coined_distribution(n(9), 3, &CoinMatrix::hadamard(), &comp0()).unwrap();
        let p = d.probabilities();
        assert!((p[1] - p[8]).abs() > 1e-3);
    }

    #[test]
    fn symmetric_initial_coin_stays_mirror_symmetric() {
        let sym = [
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(0.0, FRAC_1_SQRT_2),
        ];
        let d = dt_coined_distribution(n(9), 25, &CoinMatrix::hadamard(), &sym).unwrap();
        let p = d.probabilities();
        for s in 1..9 {
            assert!((p[s] - p[9 - s]).abs() < 1e-12);
        }
    }
}
