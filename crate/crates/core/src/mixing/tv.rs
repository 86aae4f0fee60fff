//! Total variation distance between distributions on `C_N`.

use crate::sum::pairwise_map;
use crate::{Error, Result};

/// `||P - Q|| = (1/2) sum_n |P(n) - Q(n)|`; equals the maximum probability
/// gap over vertex subsets.
pub fn tv_distance(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(0.5 * pairwise_map(0, p.len(), &|i| (p[i] - q[i]).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force subset maximization of |P(A) - Q(A)| over all 2^N
    /// subsets; the definitional oracle, viable for N <= 10.
    fn subset_oracle(p: &[f64], q: &[f64]) -> f64 {
        let n = p.len();
        let mut best = 0.0f64;
        for mask in 0u32..(1 << n) {
            let mut gap = 0.0;
            for (i, (&pi, &qi)) in p.iter().zip(q).enumerate() {
                if mask & (1 << i) != 0 {
                    gap += pi - qi;
                }
            }
            best = best.max(gap.abs());
        }
        best
    }

    /// Deterministic pseudo-random distribution for the oracle comparison.
    fn synth_distribution(n: usize, seed: u64) -> Vec<f64> {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        let mut v: Vec<f64> = (0..n)
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % 1000) as f64 + 1.0
            })
            .collect();
        let total: f64 = v.iter().sum();
        for x in v.iter_mut() {
            *x /= total;
        }
        v
    }

    #[test]
    fn identical_distributions_have_zero_distance() {
        let p = vec![0.25; 4];
        assert_eq!(tv_distance(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn point_mass_versus_uniform() {
        for n in [3usize, 5, 10] {
            let mut delta = vec![0.0; n];
            delta[0] = 1.0;
            let uniform = vec![1.0 / n as f64; n];
            let d = tv_distance(&delta, &uniform).unwrap();
            assert!((d - (1.0 - 1.0 / n as f64)).abs() < 1e-15);
        }
    }

    #[test]
    fn matches_subset_maximization() {
        for n in 3..=10 {
            for seed in 0..5u64 {
                let p = synth_distribution(n, seed * 2 + 1);
                let q = synth_distribution(n, seed * 2 + 2);
                let fast = tv_distance(&p, &q).unwrap();
                let brute = subset_oracle(&p, &q);
                assert!((fast - brute).abs() < 1e-13, "n={n} seed={seed}");
                assert!((0.0..=1.0).contains(&fast));
            }
        }
    }

    #[test]
    fn rejects_length_mismatch() {
        assert!(tv_distance(&[0.5, 0.5], &[1.0]).is_err());
    }
}
