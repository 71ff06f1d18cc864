//! Finite-support points of the simplex and the split-merge step.
//!
//! A [`MassPartition`] is a sorted vector of positive masses summing to one.
//! The split-merge step picks a size-biased sample (with replacement) of two
//! parts: two distinct parts are merged, a doubly-picked part is split
//! uniformly. Each step changes the support by at most one, so states reached
//! from a finite-support start stay exactly representable.

use rand::Rng;

use crate::error::{CoreError, Result};

/// Post-condition tolerance on `|sum - 1|` after construction.
pub const MASS_TOL: f64 = 1e-12;
/// Accepted deviation of an input vector's sum from 1.
pub const INPUT_SUM_TOL: f64 = 1e-9;
/// Parts below this threshold are dropped (numerically degenerate splits).
pub const PART_FLOOR: f64 = 1e-15;

/// A point of the simplex with finite support: positive masses sorted
/// non-increasing, renormalized to unit sum on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct MassPartition {
    parts: Vec<f64>,
}

/// Summary observables of a chain state.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainStatistics {
    /// Σ xᵢ² — the transposition probability of the associated measure on S₂.
    pub sum_squares: f64,
    /// The k largest parts, non-increasing.
    pub top_k: Vec<f64>,
    /// Number of parts strictly above the threshold passed to `statistics`.
    pub parts_above: usize,
}

impl MassPartition {
    /// The one-part state (1.0).
    pub fn point_mass() -> Self {
        Self { parts: vec![1.0] }
    }

    /// Sorts a mass vector non-increasing, drops zero (and sub-floor) parts
    /// and renormalizes. Errors on negative entries or a sum deviating from 1
    /// by more than [`INPUT_SUM_TOL`].
    pub fn reorder(v: &[f64]) -> Result<Self> {
        if let Some(bad) = v.iter().find(|&&m| m < 0.0 || !m.is_finite()) {
            return Err(CoreError::InvalidInput(format!(
                "mass entries must be finite and non-negative, got {bad}"
            )));
        }
        let sum: f64 = v.iter().sum();
        if (sum - 1.0).abs() > INPUT_SUM_TOL {
            return Err(CoreError::InvalidInput(format!(
                "mass vector sums to {sum}, expected 1 within {INPUT_SUM_TOL:e}"
            )));
        }
        Self::from_unnormalized(v.to_vec())
    }

    /// Sorts, drops sub-floor parts and renormalizes a vector of non-negative
    /// masses with arbitrary positive sum. Used internally where unit sum is
    /// restored by construction (stick residual discard, cycle fractions).
    pub fn from_unnormalized(mut parts: Vec<f64>) -> Result<Self> {
        let sum: f64 = parts.iter().sum();
        if !sum.is_finite() || sum <= 0.0 {
            return Err(CoreError::InvalidInput(
                "mass vector must have positive finite total mass".into(),
            ));
        }
        parts.retain(|&m| m / sum >= PART_FLOOR);
        if parts.is_empty() {
            return Err(CoreError::InvalidInput(
                "all parts fell below the representable floor".into(),
            ));
        }
        // Stable sort: ties keep input order, which makes runs reproducible.
        parts.sort_by(|a, b| b.partial_cmp(a).expect("masses are finite"));
        let sum: f64 = parts.iter().sum();
        for p in &mut parts {
            *p /= sum;
        }
        let out = Self { parts };
        debug_assert!(out.check_invariants());
        Ok(out)
    }

    pub fn parts(&self) -> &[f64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.parts.iter().sum()
    }

    pub fn sum_squares(&self) -> f64 {
        self.parts.iter().map(|p| p * p).sum()
    }

    /// Largest part.
    pub fn largest(&self) -> f64 {
        self.parts[0]
    }

    pub fn num_parts_above(&self, eps: f64) -> usize {
        self.parts.iter().filter(|&&p| p > eps).count()
    }

    fn check_invariants(&self) -> bool {
        !self.parts.is_empty()
            && self.parts.iter().all(|&p| p > 0.0)
            && self.parts.windows(2).all(|w| w[0] >= w[1])
            && (self.sum() - 1.0).abs() <= MASS_TOL
    }

    /// Index `i` drawn with probability `parts[i]` (one size-biased pick).
    pub fn size_biased_index<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.gen::<f64>() * self.sum();
        let mut acc = 0.0;
        for (i, &p) in self.parts.iter().enumerate() {
            acc += p;
            if u < acc {
                return i;
            }
        }
        self.parts.len() - 1
    }

    /// One split-merge step: two independent size-biased picks; distinct
    /// parts merge, a doubly-picked part splits at a uniform point.
    pub fn apply_t<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        let i = self.size_biased_index(rng);
        let j = self.size_biased_index(rng);
        let mut next = Vec::with_capacity(self.parts.len() + 1);
        if i != j {
            for (k, &p) in self.parts.iter().enumerate() {
                if k != i && k != j {
                    next.push(p);
                }
            }
            next.push(self.parts[i] + self.parts[j]);
        } else {
            let t = rng.gen_range(0.0..self.parts[i]);
            for (k, &p) in self.parts.iter().enumerate() {
                if k != i {
                    next.push(p);
                }
            }
            next.push(t);
            next.push(self.parts[i] - t);
        }
        Self::from_unnormalized(next).expect("split-merge preserves positive mass")
    }

    /// One half step of the averaged chain: identity with probability 1/2,
    /// otherwise one split-merge step.
    pub fn apply_half_step<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        if rng.gen_bool(0.5) {
            self.clone()
        } else {
            self.apply_t(rng)
        }
    }

    /// State after `q` half steps.
    pub fn trajectory<R: Rng + ?Sized>(&self, q: u32, rng: &mut R) -> Self {
        let mut state = self.clone();
        for _ in 0..q {
            state = state.apply_half_step(rng);
        }
        state
    }

    /// Observables: Σ xᵢ², the `k` largest parts and the count of parts
    /// above `eps`.
    pub fn statistics(&self, k: usize, eps: f64) -> ChainStatistics {
        ChainStatistics {
            sum_squares: self.sum_squares(),
            top_k: self.parts.iter().take(k).copied().collect(),
            parts_above: self.num_parts_above(eps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;

    fn assert_close(actual: f64, expected: f64, tol: f64) {
        assert!(
            (actual - expected).abs() <= tol,
            "expected {expected} ± {tol}, got {actual}"
        );
    }

    #[test]
    fn reorder_sorts_and_drops_zeros() {
        let x = MassPartition::reorder(&[0.2, 0.5, 0.3]).unwrap();
        assert_eq!(x.parts(), &[0.5, 0.3, 0.2]);

        let x = MassPartition::reorder(&[1.0, 0.0]).unwrap();
        assert_eq!(x.parts(), &[1.0]);

        let x = MassPartition::reorder(&[0.25, 0.25, 0.5]).unwrap();
        assert_eq!(x.parts(), &[0.5, 0.25, 0.25]);
    }

    #[test]
    fn reorder_rejects_bad_input() {
        assert!(MassPartition::reorder(&[0.5, -0.1, 0.6]).is_err());
        assert!(MassPartition::reorder(&[0.4, 0.4]).is_err());
        assert!(MassPartition::reorder(&[0.5, 0.5 + 1e-6]).is_err());
        // Within the input tolerance: accepted and renormalized.
        let x = MassPartition::reorder(&[0.5, 0.5 + 1e-10]).unwrap();
        assert_close(x.sum(), 1.0, MASS_TOL);
    }

    #[test]
    fn size_biased_single_atom() {
        let x = MassPartition::point_mass();
        let mut rng = stream_rng(1, 0);
        for _ in 0..100 {
            assert_eq!(x.size_biased_index(&mut rng), 0);
        }
    }

    #[test]
    fn size_biased_frequencies_match_masses() {
        // Per-category binomial 3σ check over 1e5 draws.
        for (seed, masses) in [(11u64, vec![0.5, 0.5]), (12, vec![0.7, 0.2, 0.1])] {
            let x = MassPartition::reorder(&masses).unwrap();
            let mut rng = stream_rng(seed, 0);
            let n = 100_000usize;
            let mut counts = vec![0usize; x.len()];
            for _ in 0..n {
                counts[x.size_biased_index(&mut rng)] += 1;
            }
            for (i, &p) in x.parts().iter().enumerate() {
                let freq = counts[i] as f64 / n as f64;
                let sigma = (p * (1.0 - p) / n as f64).sqrt();
                assert_close(freq, p, 3.0 * sigma);
            }
        }
    }

    #[test]
    fn apply_t_from_point_mass_always_splits() {
        // Independent oracle for E[Σxᵢ²] after one split of (1.0):
        // ∫₀¹ (t² + (1-t)²) dt by Simpson quadrature, expected 2/3.
        let f = |t: f64| t * t + (1.0 - t) * (1.0 - t);
        let n = 1000;
        let h = 1.0 / n as f64;
        let mut integral = f(0.0) + f(1.0);
        for i in 1..n {
            integral += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        integral *= h / 3.0;
        assert_close(integral, 2.0 / 3.0, 1e-12);

        let x = MassPartition::point_mass();
        let mut rng = stream_rng(2, 0);
        let n = 100_000;
        let mut mean = 0.0;
        let mut mean_sq = 0.0;
        for _ in 0..n {
            let y = x.apply_t(&mut rng);
            assert!(y.len() <= 2);
            assert!(y.largest() >= 0.5 - MASS_TOL);
            let s = y.sum_squares();
            mean += s;
            mean_sq += s * s;
        }
        mean /= n as f64;
        mean_sq /= n as f64;
        let stderr = ((mean_sq - mean * mean) / n as f64).sqrt();
        assert_close(mean, integral, 3.0 * stderr);
    }

    #[test]
    fn apply_t_merge_probability() {
        // From (a, 1-a) the one-part outcome has probability 2a(1-a).
        for (seed, a) in [(3u64, 0.5), (4, 0.3)] {
            let x = MassPartition::reorder(&[a, 1.0 - a]).unwrap();
            let mut rng = stream_rng(seed, 0);
            let n = 100_000;
            let mut merges = 0usize;
            for _ in 0..n {
                let y = x.apply_t(&mut rng);
                if y.len() == 1 {
                    assert_eq!(y.parts(), &[1.0]);
                    merges += 1;
                }
            }
            let p = 2.0 * a * (1.0 - a);
            let freq = merges as f64 / n as f64;
            let sigma = (p * (1.0 - p) / n as f64).sqrt();
            assert_close(freq, p, 3.0 * sigma);
        }
    }

    #[test]
    fn half_step_keeps_state_or_steps() {
        let x = MassPartition::point_mass();
        let mut rng = stream_rng(5, 0);
        let n = 100_000;
        let mut unchanged = 0usize;
        let mut mean = 0.0;
        let mut mean_sq = 0.0;
        for _ in 0..n {
            let y = x.apply_half_step(&mut rng);
            if y.len() == 1 {
                assert_eq!(y.parts(), &[1.0]);
                unchanged += 1;
            }
            let s = y.sum_squares();
            mean += s;
            mean_sq += s * s;
        }
        // Identity branch has probability 1/2 (splits land at t∈{0,1} with
        // probability zero).
        let freq = unchanged as f64 / n as f64;
        assert_close(freq, 0.5, 3.0 * (0.25f64 / n as f64).sqrt());
        // E[Σxᵢ²] = (1 + 2/3)/2 = 5/6 after one half step from (1.0).
        mean /= n as f64;
        mean_sq /= n as f64;
        let stderr = ((mean_sq - mean * mean) / n as f64).sqrt();
        assert_close(mean, 5.0 / 6.0, 3.0 * stderr);
    }

    #[test]
    fn trajectory_part_count_bound_and_conservation() {
        let x0 = MassPartition::reorder(&[0.5, 0.3, 0.2]).unwrap();
        assert_eq!(x0.trajectory(0, &mut stream_rng(6, 0)).parts(), x0.parts());
        for r in 0..200u64 {
            let mut rng = stream_rng(6, r);
            let q = (r % 17) as u32;
            let y = x0.trajectory(q, &mut rng);
            assert!(y.len() <= x0.len() + q as usize);
            assert!((y.sum() - 1.0).abs() <= MASS_TOL);
            assert!(y.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn statistics_values() {
        let x = MassPartition::point_mass();
        assert_eq!(x.statistics(3, 0.1).sum_squares, 1.0);

        let x = MassPartition::reorder(&[0.5, 0.5]).unwrap();
        assert_close(x.statistics(3, 0.1).sum_squares, 0.5, 1e-15);

        let x = MassPartition::reorder(&[0.5, 0.3, 0.2]).unwrap();
        let stats = x.statistics(2, 0.25);
        assert_close(stats.sum_squares, 0.38, 1e-15);
        assert_eq!(stats.top_k, vec![0.5, 0.3]);
        assert_eq!(stats.parts_above, 2);
    }
}
