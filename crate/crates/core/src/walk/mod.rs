//! The four walk models on `C_N` and their state/distribution snapshots.

mod classical;
mod coined;
mod continuous;

pub use classical::{
    ct_classical_deviation_at, ct_classical_distribution, ct_classical_probability_at,
    dt_classical_deviation_at, dt_classical_distribution, dt_classical_probability_at,
};
pub use coined::{dt_coined_distribution, dt_coined_step, CoinMatrix, CoinedState};
pub use continuous::{
    ct_quantum_amplitude, ct_quantum_amplitude_at, ct_quantum_deviation_at,
    ct_quantum_distribution, ct_quantum_probability_at, r_oscillation, r_reference_closed,
};

use crate::sum::{pairwise_map, pairwise_sum};
use crate::{CycleSize, Error, Result};
use num_complex::Complex64;

/// Entries in `(-NEG_FLOOR, 0)` are treated as round-off and clamped to 0.
pub const NEG_FLOOR: f64 = 1e-14;
/// Tolerance on `sum(p) = 1` and on state norms.
pub const NORM_TOL: f64 = 1e-12;
/// Beyond this defect the distribution is rejected instead of renormalized.
const NORM_HARD_LIMIT: f64 = 1e-9;

/// A probability distribution over the vertices of `C_N` at one instant.
///
/// `t` is continuous time or an integer step count depending on the model
/// that produced the snapshot.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ProbabilityDistribution {
    p: Vec<f64>,
    t: f64,
    renormalized: bool,
}

impl ProbabilityDistribution {
    /// Validate raw probabilities: clamp round-off negatives, check the
    /// total, and renormalize (raising the diagnostics flag) only when the
    /// defect exceeds [`NORM_TOL`].
    pub fn from_raw(mut p: Vec<f64>, t: f64, context: &'static str) -> Result<Self> {
        for (index, value) in p.iter_mut().enumerate() {
            if *value < 0.0 {
                if *value <= -NEG_FLOOR {
                    return Err(Error::NegativeProbability {
                        index,
                        value: *value,
                    });
                }
                *value = 0.0;
            }
        }
        let total = pairwise_sum(&p);
        let defect = (total - 1.0).abs();
        let mut renormalized = false;
        if defect > NORM_TOL {
            if defect > NORM_HARD_LIMIT {
                return Err(Error::NormalizationDefect {
                    context,
                    defect,
                    tol: NORM_HARD_LIMIT,
                });
            }
            for value in p.iter_mut() {
                *value /= total;
            }
            renormalized = true;
        }
        Ok(ProbabilityDistribution { p, t, renormalized })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.p
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// True when round-off forced a renormalization; diagnostic only.
    pub fn renormalized(&self) -> bool {
        self.renormalized
    }
}

/// Complex amplitude vector `Psi_N(t)` of the continuous-time quantum walk.
#[derive(Debug, Clone)]
pub struct AmplitudeVector {
    psi: Vec<Complex64>,
    t: f64,
}

impl AmplitudeVector {
    pub fn new(psi: Vec<Complex64>, t: f64) -> Result<Self> {
        let norm = pairwise_map(0, psi.len(), &|i| psi[i].norm_sqr());
        let defect = (norm - 1.0).abs();
        if defect > NORM_TOL {
            return Err(Error::NormalizationDefect {
                context: "amplitude vector",
                defect,
                tol: NORM_TOL,
            });
        }
        Ok(AmplitudeVector { psi, t })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.psi
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    pub fn len(&self) -> usize {
        self.psi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi.is_empty()
    }

    /// Born-rule distribution `p[n] = |psi[n]|^2`.
    pub fn to_distribution(&self) -> Result<ProbabilityDistribution> {
        let p = self.psi.iter().map(|a| a.norm_sqr()).collect();
        ProbabilityDistribution::from_raw(p, self.t, "born rule")
    }
}

/// Which of the four walk models to run, plus its parameters.
#[derive(Debug, Clone)]
pub enum WalkModel {
    CtQuantum,
    CtClassical,
    DtQuantum {
        coin: CoinMatrix,
        initial_coin: [Complex64; 2],
    },
    DtClassical,
}

impl WalkModel {
    /// Coined walk with the Hadamard coin and initial coin state (1, 0).
    pub fn hadamard() -> Self {
        WalkModel::DtQuantum {
            coin: CoinMatrix::hadamard(),
            initial_coin: [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        }
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self, WalkModel::DtQuantum { .. } | WalkModel::DtClassical)
    }

    pub fn name(&self) -> &'static str {
        match self {
            WalkModel::CtQuantum => "ct-quantum",
            WalkModel::CtClassical => "ct-classical",
            WalkModel::DtQuantum { .. } => "dt-quantum",
            WalkModel::DtClassical => "dt-classical",
        }
    }
}

/// A walk model bound to a cycle size and a start vertex.
///
/// All closed formulas are for a start at vertex 0; a nonzero start is
/// handled by cyclic relabeling of the output.
#[derive(Debug, Clone)]
pub struct WalkSpec {
    pub model: WalkModel,
    pub n: CycleSize,
    start: usize,
}

impl WalkSpec {
    pub fn new(model: WalkModel, n: CycleSize) -> Self {
        WalkSpec { model, n, start: 0 }
    }

    pub fn with_start(mut self, start: usize) -> Result<Self> {
        self.n.vertex(start)?;
        self.start = start;
        Ok(self)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Distribution snapshot. `t` is continuous time for the ct models and
    /// must be a nonnegative integer step count for the dt models.
    pub fn distribution(&self, t: f64) -> Result<ProbabilityDistribution> {
        let mut dist = match &self.model {
            WalkModel::CtQuantum => ct_quantum_distribution(self.n, t)?,
            WalkModel::CtClassical => ct_classical_distribution(self.n, t)?,
            WalkModel::DtClassical => dt_classical_distribution(self.n, self.steps_from(t)?)?,
            WalkModel::DtQuantum { coin, initial_coin } => {
                dt_coined_distribution(self.n, self.steps_from(t)?, coin, initial_coin)?
            }
        };
        if self.start != 0 {
            let n = self.n.get();
            let rotated: Vec<f64> = (0..n)
                .map(|v| dist.p[(v + n - self.start) % n])
                .collect();
            dist.p = rotated;
        }
        Ok(dist)
    }

    /// `P(site, t) - 1/N`, evaluated without forming `P` where a
    /// cancellation-free expression exists (all models except the coined
    /// walk).
    pub fn deviation_at(&self, site: usize, t: f64) -> Result<f64> {
        let site = self.n.vertex(site)?;
        let site0 = (site + self.n.get() - self.start) % self.n.get();
        match &self.model {
            WalkModel::CtQuantum => ct_quantum_deviation_at(self.n, site0, t),
            WalkModel::CtClassical => ct_classical_deviation_at(self.n, site0, t),
            WalkModel::DtClassical => {
                dt_classical_deviation_at(self.n, site0, self.steps_from(t)?)
            }
            WalkModel::DtQuantum { coin, initial_coin } => {
                let dist = dt_coined_distribution(self.n, self.steps_from(t)?, coin, initial_coin)?;
                Ok(dist.probabilities()[site0] - 1.0 / self.n.as_f64())
            }
        }
    }

    fn steps_from(&self, t: f64) -> Result<u64> {
        if t < 0.0 {
            return Err(Error::NegativeTime(t));
        }
        if t.fract() != 0.0 || t > u64::MAX as f64 {
            return Err(Error::InvalidParameter(format!(
                "discrete-time model needs an integer step count, got t={t}"
            )));
        }
        Ok(t as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamps_round_off_negatives() {
        let d =
            ProbabilityDistribution::from_raw(vec![0.5, -5e-15, 0.5], 1.0, "test").unwrap();
        assert_eq!(d.probabilities()[1], 0.0);
        assert!(!d.renormalized());
    }

    #[test]
    fn rejects_genuinely_negative_entries() {
        let err = ProbabilityDistribution::from_raw(vec![0.5, -1e-13, 0.5], 1.0, "test")
            .unwrap_err();
        assert!(matches!(err, Error::NegativeProbability { index: 1, .. }));
    }

    #[test]
    fn renormalizes_small_defects_and_flags() {
        let d = ProbabilityDistribution::from_raw(vec![0.5, 0.5 + 3e-11], 0.0, "test").unwrap();
        assert!(d.renormalized());
        assert!((d.probabilities().iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_gross_defects() {
        let err =
            ProbabilityDistribution::from_raw(vec![0.5, 0.6], 0.0, "test").unwrap_err();
        assert!(matches!(err, Error::NormalizationDefect { .. }));
    }

    #[test]
    fn start_vertex_relabels_cyclically() {
        let n = CycleSize::new(5).unwrap();
        let spec = WalkSpec::new(WalkModel::CtClassical, n)
            .with_start(2)
            .unwrap();
        let d = spec.distribution(0.0).unwrap();
        assert_eq!(d.probabilities()[2], 1.0);
        let dev = spec.deviation_at(2, 0.0).unwrap();
        assert!((dev - (1.0 - 0.2)).abs() < 1e-15);
    }

    #[test]
    fn discrete_models_reject_fractional_time() {
        let n = CycleSize::new(5).unwrap();
        let spec = WalkSpec::new(WalkModel::DtClassical, n);
        assert!(spec.distribution(1.5).is_err());
        assert!(spec.distribution(3.0).is_ok());
    }
}
