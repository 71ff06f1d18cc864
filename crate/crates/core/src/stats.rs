//! Statistical test helpers used by the verification experiments: two-sample
//! Kolmogorov–Smirnov, chi-square homogeneity over binned counts, and basic
//! moment summaries.

use std::collections::BTreeMap;

/// Sample mean and standard error of the mean.
pub fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    (mean, (var / n).sqrt())
}

#[derive(Debug, Clone)]
pub struct KsTest {
    pub statistic: f64,
    pub p_value: f64,
    pub n: usize,
    pub m: usize,
}

impl KsTest {
    pub fn rejects_at(&self, alpha: f64) -> bool {
        self.p_value < alpha
    }
}

/// Two-sample Kolmogorov–Smirnov test. The p-value uses the asymptotic
/// Kolmogorov distribution with the Stephens small-sample correction.
pub fn ks_two_sample(xs: &[f64], ys: &[f64]) -> KsTest {
    assert!(!xs.is_empty() && !ys.is_empty());
    let mut xs: Vec<f64> = xs.to_vec();
    let mut ys: Vec<f64> = ys.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let (n, m) = (xs.len(), ys.len());
    let mut i = 0usize;
    let mut j = 0usize;
    let mut d = 0.0f64;
    while i < n && j < m {
        let t = xs[i].min(ys[j]);
        while i < n && xs[i] <= t {
            i += 1;
        }
        while j < m && ys[j] <= t {
            j += 1;
        }
        let diff = (i as f64 / n as f64 - j as f64 / m as f64).abs();
        if diff > d {
            d = diff;
        }
    }

    let ne = (n as f64 * m as f64) / (n as f64 + m as f64);
    let lambda = (ne.sqrt() + 0.12 + 0.11 / ne.sqrt()) * d;
    KsTest {
        statistic: d,
        p_value: kolmogorov_q(lambda),
        n,
        m,
    }
}

/// Tail probability Q(λ) = 2 Σ_{j≥1} (−1)^{j−1} exp(−2 j² λ²) of the
/// Kolmogorov distribution.
pub fn kolmogorov_q(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for j in 1..=100 {
        let term = (-2.0 * (j as f64) * (j as f64) * lambda * lambda).exp();
        sum += sign * term;
        sign = -sign;
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

#[derive(Debug, Clone)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub df: usize,
    pub p_value: f64,
}

impl ChiSquareTest {
    pub fn rejects_at(&self, alpha: f64) -> bool {
        self.p_value < alpha
    }
}

/// Two-sample chi-square test of homogeneity over binned counts. Bins with
/// zero pooled count are dropped; df = (non-empty bins − 1).
pub fn chi_square_homogeneity<K: Ord + Clone>(
    counts_a: &BTreeMap<K, u64>,
    counts_b: &BTreeMap<K, u64>,
) -> ChiSquareTest {
    let total_a: u64 = counts_a.values().sum();
    let total_b: u64 = counts_b.values().sum();
    assert!(total_a > 0 && total_b > 0);
    let mut keys: Vec<K> = counts_a.keys().chain(counts_b.keys()).cloned().collect();
    keys.sort();
    keys.dedup();

    let mut statistic = 0.0;
    let mut bins = 0usize;
    for k in &keys {
        let a = *counts_a.get(k).unwrap_or(&0) as f64;
        let b = *counts_b.get(k).unwrap_or(&0) as f64;
        let pooled = a + b;
        if pooled == 0.0 {
            continue;
        }
        bins += 1;
        let ea = pooled * total_a as f64 / (total_a + total_b) as f64;
        let eb = pooled * total_b as f64 / (total_a + total_b) as f64;
        statistic += (a - ea) * (a - ea) / ea + (b - eb) * (b - eb) / eb;
    }
    let df = bins.saturating_sub(1);
    let p_value = if df == 0 {
        1.0
    } else {
        regularized_gamma_q(df as f64 / 2.0, statistic / 2.0)
    };
    ChiSquareTest {
        statistic,
        df,
        p_value,
    }
}

/// One-sample chi-square goodness of fit against exact category
/// probabilities. Zero-probability categories must have zero observed
/// count; they carry no degrees of freedom.
pub fn chi_square_goodness_of_fit(observed: &[u64], probabilities: &[f64]) -> ChiSquareTest {
    assert_eq!(observed.len(), probabilities.len());
    let total: u64 = observed.iter().sum();
    assert!(total > 0);
    let mut statistic = 0.0;
    let mut bins = 0usize;
    for (&count, &p) in observed.iter().zip(probabilities) {
        if p == 0.0 {
            if count > 0 {
                statistic = f64::INFINITY;
            }
            continue;
        }
        bins += 1;
        let expected = total as f64 * p;
        statistic += (count as f64 - expected) * (count as f64 - expected) / expected;
    }
    let df = bins.saturating_sub(1);
    let p_value = if statistic.is_infinite() {
        0.0
    } else if df == 0 {
        1.0
    } else {
        regularized_gamma_q(df as f64 / 2.0, statistic / 2.0)
    };
    ChiSquareTest {
        statistic,
        df,
        p_value,
    }
}

/// Histogram counts of `xs` over `bins` equal cells of `[lo, hi)`.
pub fn histogram(xs: &[f64], bins: usize, lo: f64, hi: f64) -> Vec<u64> {
    assert!(bins > 0 && hi > lo);
    let mut counts = vec![0u64; bins];
    let w = (hi - lo) / bins as f64;
    for &x in xs {
        if x >= lo && x < hi {
            let b = ((x - lo) / w) as usize;
            counts[b.min(bins - 1)] += 1;
        } else if x == hi {
            counts[bins - 1] += 1;
        }
    }
    counts
}

/// Regularized upper incomplete gamma Q(a, x) = Γ(a, x)/Γ(a), computed by
/// series for x < a + 1 and by Lentz's continued fraction otherwise.
pub fn regularized_gamma_q(a: f64, x: f64) -> f64 {
    assert!(a > 0.0 && x >= 0.0);
    if x == 0.0 {
        return 1.0;
    }
    if x < a + 1.0 {
        1.0 - lower_gamma_series(a, x)
    } else {
        upper_gamma_cf(a, x)
    }
}

fn lower_gamma_series(a: f64, x: f64) -> f64 {
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut ap = a;
    for _ in 0..500 {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * 1e-16 {
            break;
        }
    }
    sum * (-x + a * x.ln() - ln_gamma(a)).exp()
}

fn upper_gamma_cf(a: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (-x + a * x.ln() - ln_gamma(a)).exp()
}

/// Lanczos ln Γ for positive arguments.
pub fn ln_gamma(x: f64) -> f64 {
    const COEF: [f64; 6] = [
        76.18009172947146,
        -86.50532032941677,
        24.01409824083091,
        -1.231739572450155,
        0.1208650973866179e-2,
        -0.5395239384953e-5,
    ];
    assert!(x > 0.0);
    let mut y = x;
    let tmp = x + 5.5;
    let tmp = tmp - (x + 0.5) * tmp.ln();
    let mut ser = 1.000000000190015;
    for c in COEF {
        y += 1.0;
        ser += c / y;
    }
    -tmp + (2.5066282746310005 * ser / x).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ks_identical_samples_have_zero_distance() {
        let xs = vec![1.0, 2.0, 3.0, 4.0];
        let ys = vec![2.0, 1.0, 4.0, 3.0];
        let t = ks_two_sample(&xs, &ys);
        assert!(t.statistic.abs() < 1e-12);
        assert!(!t.rejects_at(0.01));
    }

    #[test]
    fn ks_known_small_sample_distances() {
        let t = ks_two_sample(&[1.0, 1.0, 4.0, 4.0], &[1.0, 1.0, 1.0, 4.0]);
        assert!((t.statistic - 0.25).abs() < 1e-12);

        let xs = [0.42, 0.24, 0.86, 0.85, 0.82, 0.82, 0.25, 0.78, 0.13, 0.27];
        let ys = [0.24, 0.27, 0.87, 0.29, 0.57, 0.44, 0.5, 0.00, 0.56, 0.03];
        let t = ks_two_sample(&xs, &ys);
        assert!((t.statistic - 0.4).abs() < 1e-12);
    }

    #[test]
    fn ks_separates_shifted_samples() {
        let xs: Vec<f64> = (0..2000).map(|i| i as f64 / 2000.0).collect();
        let ys: Vec<f64> = (0..2000).map(|i| i as f64 / 2000.0 + 0.2).collect();
        assert!(ks_two_sample(&xs, &ys).rejects_at(0.01));
    }

    #[test]
    fn gamma_q_agrees_with_exact_df2() {
        // Chi-square with 2 degrees of freedom: Q(x) = exp(-x/2).
        for x in [0.1, 1.0, 2.0, 5.0, 10.0] {
            let q = regularized_gamma_q(1.0, x / 2.0);
            assert!((q - (-x / 2.0f64).exp()).abs() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn ln_gamma_matches_factorials() {
        let mut fact = 1.0f64;
        for n in 1..10 {
            assert!((ln_gamma(n as f64) - fact.ln()).abs() < 1e-10);
            fact *= n as f64;
        }
    }

    #[test]
    fn chi_square_detects_bias_and_accepts_identity() {
        let mut a = BTreeMap::new();
        let mut b = BTreeMap::new();
        a.insert(0u32, 5000u64);
        a.insert(1, 5000);
        b.insert(0, 5000);
        b.insert(1, 5000);
        let t = chi_square_homogeneity(&a, &b);
        assert!(t.statistic.abs() < 1e-12);
        assert!(!t.rejects_at(0.01));

        b.insert(0, 6000);
        b.insert(1, 4000);
        assert!(chi_square_homogeneity(&a, &b).rejects_at(0.01));
    }

    #[test]
    fn goodness_of_fit_detects_bias_and_zero_probability_violations() {
        let fair = chi_square_goodness_of_fit(&[5020, 4980], &[0.5, 0.5]);
        assert!(!fair.rejects_at(0.01));
        let biased = chi_square_goodness_of_fit(&[6000, 4000], &[0.5, 0.5]);
        assert!(biased.rejects_at(0.01));
        let impossible = chi_square_goodness_of_fit(&[9999, 1], &[1.0, 0.0]);
        assert_eq!(impossible.p_value, 0.0);
        let degenerate = chi_square_goodness_of_fit(&[9999, 0], &[1.0, 0.0]);
        assert_eq!(degenerate.p_value, 1.0);
    }

    #[test]
    fn chi_square_degenerate_single_bin_passes() {
        let mut a = BTreeMap::new();
        let mut b = BTreeMap::new();
        a.insert(0u32, 1000u64);
        b.insert(0, 1000);
        let t = chi_square_homogeneity(&a, &b);
        assert_eq!(t.df, 0);
        assert_eq!(t.p_value, 1.0);
    }

    #[test]
    fn histogram_bins_cover_range() {
        let counts = histogram(&[0.0, 0.1, 0.5, 0.999, 1.0], 10, 0.0, 1.0);
        assert_eq!(counts.iter().sum::<u64>(), 5);
        assert_eq!(counts[0], 1);
        assert_eq!(counts[1], 1);
        assert_eq!(counts[5], 1);
        assert_eq!(counts[9], 2);
    }
}
