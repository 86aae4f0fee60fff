//! Integer-order Bessel functions `J_k(t)` and the Bessel-expansion route to
//! the cycle amplitudes.
//!
//! The table is filled by Miller's downward recurrence, normalized with the
//! even-order identity `J_0 + 2 J_2 + 2 J_4 + .. = 1`, which keeps every
//! order accurate at once — exactly what the wrapped (mod N) sums need. The
//! wrapped amplitude
//!
//! `Psi_N(n, t) = sum_{k = n (mod N)} (-i)^k J_k(t)`
//!
//! is an independent cross-check of the spectral formula in
//! [`crate::walk::ct_quantum_amplitude`].

use crate::sum::{pairwise_map, pairwise_sum};
use crate::{CycleSize, Error, Result};
use num_complex::Complex64;

/// Truncation order for the infinite wrapped sums:
/// `ceil(t) + max(20, ceil(10 (t+1)^(1/3)))`. Beyond `t` plus a few Airy
/// widths, `J_k(t)` decays super-exponentially.
pub fn truncation_order(t: f64) -> usize {
    let airy = (10.0 * (t + 1.0).cbrt()).ceil() as usize;
    t.ceil() as usize + airy.max(20)
}

/// Values `J_0(t) .. J_K(t)` for a fixed argument `t >= 0`.
#[derive(Debug, Clone)]
pub struct BesselTable {
    t: f64,
    values: Vec<f64>,
}

impl BesselTable {
    /// Fill the table up to order `k_max >= 1`.
    pub fn new(t: f64, k_max: usize) -> Result<Self> {
        if t < 0.0 {
            return Err(Error::NegativeTime(t));
        }
        if k_max < 1 {
            return Err(Error::InvalidParameter(
                "Bessel table needs k_max >= 1".into(),
            ));
        }
        Ok(BesselTable {
            t,
            values: miller(t, k_max),
        })
    }

    /// Table sized by [`truncation_order`] for the argument.
    pub fn auto(t: f64) -> Result<Self> {
        let k = truncation_order(t);
        Self::new(t, k)
    }

    pub fn argument(&self) -> f64 {
        self.t
    }

    /// Largest tabulated order.
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    /// `J_k(t)` for `0 <= k <= order`; panics beyond the table.
    pub fn j(&self, k: usize) -> f64 {
        self.values[k]
    }

    /// `J_k(t)` for any integer order, using `J_{-k} = (-1)^k J_k`; orders
    /// beyond the table truncate to 0.
    pub fn j_signed(&self, k: i64) -> f64 {
        let a = k.unsigned_abs() as usize;
        if a >= self.values.len() {
            return 0.0;
        }
        let v = self.values[a];
        if k < 0 && a % 2 == 1 {
            -v
        } else {
            v
        }
    }
}

/// Miller's downward recurrence with even-order-sum normalization.
///
/// Starts at twice the needed order, rescaling on the way down so the
/// unnormalized iterates never overflow.
fn miller(t: f64, k_max: usize) -> Vec<f64> {
    if t == 0.0 {
        let mut v = vec![0.0; k_max + 1];
        v[0] = 1.0;
        return v;
    }
    let start = 2 * k_max.max(truncation_order(t));
    let mut all = vec![0.0f64; start + 2];
    all[start + 1] = 0.0;
    all[start] = 1e-300;
    for k in (1..=start).rev() {
        let next = (2.0 * k as f64 / t) * all[k] - all[k + 1];
        all[k - 1] = next;
        if next.abs() > 1e250 {
            for v in all[k - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    // J_0 + 2 (J_2 + J_4 + ...) = 1
    let evens = pairwise_map(1, start / 2 + 1, &|m| all[2 * m]);
    let lambda = all[0] + 2.0 * evens;
    all.truncate(k_max + 1);
    for v in all.iter_mut() {
        *v /= lambda;
    }
    all
}

/// `J_nu(z)` for any integer order and real argument, via the parity
/// identities `J_{-nu}(z) = (-1)^nu J_nu(z)` and `J_nu(-z) = (-1)^nu J_nu(z)`.
pub fn bessel_j(nu: i64, z: f64) -> Result<f64> {
    let (z, arg_flip) = if z < 0.0 { (-z, nu % 2 != 0) } else { (z, false) };
    let order = nu.unsigned_abs() as usize;
    let table = BesselTable::new(z, order.max(truncation_order(z)))?;
    let v = table.j_signed(nu);
    Ok(if arg_flip { -v } else { v })
}

/// Squared-Bessel distribution of the line walk, `P(n, t) = J_n(a t)^2` on
/// the window `|n| <= m`.
#[derive(Debug, Clone)]
pub struct LineDistribution {
    p: Vec<f64>,
    window: i64,
    a: f64,
    t: f64,
    mass: f64,
}

impl LineDistribution {
    /// Probability at integer site `n`; zero outside the window.
    pub fn probability(&self, n: i64) -> f64 {
        if n.abs() > self.window {
            return 0.0;
        }
        self.p[(n + self.window) as usize]
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn coin_parameter(&self) -> f64 {
        self.a
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    /// Total probability captured by the window; at most 1.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Whether the window captured the distribution to 1e-10.
    pub fn window_sufficient(&self) -> bool {
        self.mass >= 1.0 - 1e-10
    }

    pub fn sites(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let w = self.window;
        self.p.iter().enumerate().map(move |(i, &p)| (i as i64 - w, p))
    }
}

/// Line-walk distribution `P(n, t) = J_n(a t)^2` for coin parameter
/// `a` in `(0, 1]`.
pub fn line_walk_distribution(t: f64, a: f64, window: usize) -> Result<LineDistribution> {
    if !(0.0..=1.0).contains(&a) || a == 0.0 {
        return Err(Error::InvalidParameter(format!(
            "coin parameter must be in (0, 1], got {a}"
        )));
    }
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let arg = a * t;
    let table = BesselTable::new(arg, window.max(truncation_order(arg)))?;
    let w = window as i64;
    let p: Vec<f64> = (-w..=w).map(|n| table.j_signed(n).powi(2)).collect();
    let mass = pairwise_sum(&p);
    Ok(LineDistribution {
        p,
        window: w,
        a,
        t,
        mass,
    })
}

/// Orders `k = site (mod N)` inside `|k| <= k_max`.
fn wrapped_orders(count: usize, site: usize, k_max: usize) -> impl Iterator<Item = i64> {
    let count = count as i64;
    let site = site as i64;
    let k_max = k_max as i64;
    // smallest and largest j with |j * N + site| <= k_max
    let lo = -(k_max + site).div_euclid(count);
    let hi = (k_max - site).div_euclid(count);
    (lo..=hi).map(move |j| j * count + site)
}

/// `(-i)^k` for any integer `k`.
fn minus_i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// Bessel-expansion amplitude `sum_{k = site (mod N)} (-i)^k J_k(t)`.
pub fn wrapped_amplitude(n: CycleSize, site: usize, t: f64) -> Result<Complex64> {
    let site = n.vertex(site)?;
    let table = BesselTable::auto(t)?;
    let terms: Vec<Complex64> = wrapped_orders(n.get(), site, table.order())
        .map(|k| minus_i_pow(k) * table.j_signed(k))
        .collect();
    Ok(pairwise_map(0, terms.len(), &|i| terms[i]))
}

/// Bessel-expansion probability, the double sum
/// `sum_{j,k} cos(pi (j - k) N / 2) J_{jN + site}(t) J_{kN + site}(t)`.
pub fn wrapped_probability(n: CycleSize, site: usize, t: f64) -> Result<f64> {
    let site = n.vertex(site)?;
    let table = BesselTable::auto(t)?;
    let orders: Vec<i64> = wrapped_orders(n.get(), site, table.order()).collect();
    let count = n.get() as i64;
    let m = orders.len();
    Ok(pairwise_map(0, m * m, &|idx| {
        let kj = orders[idx / m];
        let kk = orders[idx % m];
        // (j - k) recovered in units of N
        let diff = (kj - kk) / count;
        match (diff * count).rem_euclid(4) {
            0 => table.j_signed(kj) * table.j_signed(kk),
            2 => -table.j_signed(kj) * table.j_signed(kk),
            _ => 0.0,
        }
    }))
}

/// The cross-term identity: summed over all residues, the off-diagonal part
/// of [`wrapped_probability`] vanishes. Returns the triple sum, which must
/// be 0 up to truncation.
pub fn cross_term_sum(n: CycleSize, t: f64) -> Result<f64> {
    let table = BesselTable::auto(t)?;
    let count = n.get() as i64;
    let per_site: Vec<f64> = (0..n.get())
        .map(|site| {
            let orders: Vec<i64> = wrapped_orders(n.get(), site, table.order()).collect();
            let m = orders.len();
            pairwise_map(0, m * m, &|idx| {
                let kj = orders[idx / m];
                let kk = orders[idx % m];
                if kj == kk {
                    return 0.0;
                }
                let diff = (kj - kk) / count;
                match (diff * count).rem_euclid(4) {
                    0 => table.j_signed(kj) * table.j_signed(kk),
                    2 => -table.j_signed(kj) * table.j_signed(kk),
                    _ => 0.0,
                }
            })
        })
        .collect();
    Ok(pairwise_sum(&per_site))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Ascending power series `J_k(t) = sum_m (-1)^m (t/2)^{2m+k} / (m! (m+k)!)`,
    /// 30 terms; independent of the recurrence route. Good to ~1e-12 for
    /// t <= 10.
    fn series_oracle(k: usize, t: f64) -> f64 {
        series_at(k, t)
    }

    #[test]
    fn zero_argument_table() {
        let table = BesselTable::new(0.0, 10).unwrap();
        assert_eq!(table.j(0), 1.0);
        for k in 1..=10 {
            assert_eq!(table.j(k), 0.0);
        }
    }

    #[test]
    fn j0_at_one_matches_series() {
        let table = BesselTable::new(1.0, 20).unwrap();
        assert!((table.j(0) - 0.7651976866).abs() < 1e-10);
        assert!((table.j(0) - series_oracle(0, 1.0)).abs() < 1e-13);
    }

    #[test]
    fn table_matches_series_across_orders() {
        for &t in &[0.3, 1.0, 2.5, 5.0, 10.0] {
            let table = BesselTable::auto(t).unwrap();
            for k in 0..=15 {
                let want = series_oracle(k, t);
                let got = table.j(k);
                let scale = want.abs().max(1.0);
                assert!(
                    (got - want).abs() / scale < 1e-12,
                    "t={t} k={k}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn tiny_argument_survives_rescaling() {
        let table = BesselTable::new(0.1, 40).unwrap();
        assert!((table.j(0) - series_oracle(0, 0.1)).abs() < 1e-14);
        assert!((table.j(4) - series_oracle(4, 0.1)).abs() < 1e-14);
        // J_40(0.1) = (0.05)^40 / 40! ~ 1.1e-100
        assert!(table.j(40).abs() < 1e-99);
        assert!(table.j(40) > 0.0);
    }

    #[test]
    fn squared_sum_is_one() {
        let table = BesselTable::new(10.0, 40).unwrap();
        let total: f64 = table.j(0).powi(2)
            + 2.0 * (1..=40).map(|k| table.j(k).powi(2)).sum::<f64>();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn recurrence_residual_is_tiny() {
        for &t in &[0.5, 1.0, 5.0, 20.0] {
            let table = BesselTable::auto(t).unwrap();
            for k in 1..table.order() {
                let r = table.j(k - 1) + table.j(k + 1) - (2.0 * k as f64 / t) * table.j(k);
                assert!(r.abs() <= 1e-11, "t={t} k={k}: residual {r:.3e}");
            }
        }
    }

    /// The power series evaluates at a negative argument directly, so it is
    /// an independent witness for the parity route `(-1)^nu J_nu(z)`.
    fn series_at(k: usize, z: f64) -> f64 {
        let half = z / 2.0;
        let mut term = 1.0f64;
        for m in 1..=k {
            term *= half / m as f64;
        }
        let mut acc = term;
        for m in 1..30 {
            term *= -(half * half) / (m as f64 * (m + k) as f64);
            acc += term;
        }
        acc
    }

    #[test]
    fn parity_in_argument_matches_series() {
        for nu in [0i64, 1, 2, 5] {
            let via_parity = bessel_j(nu, -3.0).unwrap();
            let direct = series_at(nu as usize, -3.0);
            assert!(
                (via_parity - direct).abs() < 1e-11,
                "nu={nu}: {via_parity} vs {direct}"
            );
        }
    }

    #[test]
    fn negative_order_parity() {
        let t = 4.2;
        let table = BesselTable::auto(t).unwrap();
        assert_eq!(table.j_signed(-3), -table.j(3));
        assert_eq!(table.j_signed(-4), table.j(4));
    }

    #[test]
    fn rejects_negative_argument_and_zero_order() {
        assert!(BesselTable::new(-1.0, 5).is_err());
        assert!(BesselTable::new(1.0, 0).is_err());
    }

    #[test]
    fn line_walk_at_time_zero_is_point_mass() {
        let d = line_walk_distribution(0.0, std::f64::consts::FRAC_1_SQRT_2, 10).unwrap();
        assert_eq!(d.probability(0), 1.0);
        assert_eq!(d.probability(3), 0.0);
    }

    #[test]
    fn line_walk_mass_is_one_inside_a_wide_window() {
        let d = line_walk_distribution(5.0, 1.0, 40).unwrap();
        assert!((d.mass() - 1.0).abs() < 1e-10);
        assert!(d.window_sufficient());
    }

    #[test]
    fn hadamard_line_walk_is_squared_bessel_at_scaled_argument() {
        let a = std::f64::consts::FRAC_1_SQRT_2;
        let d = line_walk_distribution(5.0, a, 40).unwrap();
        let table = BesselTable::new(5.0 * a, 40).unwrap();
        for n in -10i64..=10 {
            assert!((d.probability(n) - table.j_signed(n).powi(2)).abs() < 1e-14);
        }
    }

    #[test]
    fn line_walk_rejects_bad_coin_parameter() {
        assert!(line_walk_distribution(1.0, 0.0, 10).is_err());
        assert!(line_walk_distribution(1.0, 1.5, 10).is_err());
    }

    #[test]
    fn wrapped_amplitude_at_origin_time_zero() {
        let a = wrapped_amplitude(CycleSize::new(5).unwrap(), 0, 0.0).unwrap();
        assert!((a - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn wrapped_orders_cover_the_window() {
        let orders: Vec<i64> = wrapped_orders(5, 2, 12).collect();
        assert_eq!(orders, vec![-8, -3, 2, 7, 12]);
    }

    #[test]
    fn wrapped_probability_is_squared_amplitude() {
        let n = CycleSize::new(7).unwrap();
        for &t in &[0.5, 3.0, 12.0] {
            for site in 0..7 {
                let amp = wrapped_amplitude(n, site, t).unwrap();
                let p = wrapped_probability(n, site, t).unwrap();
                assert!((p - amp.norm_sqr()).abs() < 1e-12, "t={t} site={site}");
            }
        }
    }

    #[test]
    fn cross_terms_vanish() {
        assert!(cross_term_sum(CycleSize::new(5).unwrap(), 0.0).unwrap().abs() < 1e-15);
        assert!(cross_term_sum(CycleSize::new(4).unwrap(), 6.0).unwrap().abs() < 1e-10);
        assert!(cross_term_sum(CycleSize::new(7).unwrap(), 25.0).unwrap().abs() < 1e-9);
    }

    #[test]
    fn wrapped_normalization_over_residues() {
        let table = BesselTable::auto(9.0).unwrap();
        for count in [3usize, 8] {
            let mut total = 0.0;
            for site in 0..count {
                for k in wrapped_orders(count, site, table.order()) {
                    total += table.j_signed(k).powi(2);
                }
            }
            assert!((total - 1.0).abs() < 1e-11, "N={count}");
        }
    }
}
