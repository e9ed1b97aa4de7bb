//! Order statistics and summation helpers for benchmark summaries.

use alloc::vec::Vec;

use crate::metrics::EvalRecord;

const PAIRWISE_BLOCK: usize = 32;

/// Pairwise (cascade) summation of `f(0) + .. + f(len - 1)`.
///
/// The association order depends only on `len`, so the result is the same no
/// matter how the terms were produced.
pub fn pairwise_sum_indexed<F: Fn(usize) -> f64>(len: usize, f: F) -> f64 {
    fn go<F: Fn(usize) -> f64>(lo: usize, hi: usize, f: &F) -> f64 {
        if hi - lo <= PAIRWISE_BLOCK {
            let mut acc = 0.0;
            for i in lo..hi {
                acc += f(i);
            }
            return acc;
        }
        let mid = lo + (hi - lo) / 2;
        go(lo, mid, f) + go(mid, hi, f)
    }
    go(0, len, &f)
}

pub fn pairwise_sum_by<T, F: Fn(&T) -> f64>(items: &[T], f: F) -> f64 {
    pairwise_sum_indexed(items.len(), |i| f(&items[i]))
}

pub fn pairwise_sum(values: &[f64]) -> f64 {
    pairwise_sum_indexed(values.len(), |i| values[i])
}

/// Quantile `q` in `[0, 1]` of ascending `sorted` values by linear
/// interpolation between order statistics (Hyndman-Fan type 7):
/// `h = (N - 1) q`, `x[floor h] + (h - floor h)(x[floor h + 1] - x[floor h])`.
///
/// Infinite values take part like any other; interpolating towards `+inf`
/// yields `+inf` unless the fractional weight is zero. Returns `NaN` for an
/// empty slice.
pub fn percentile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let h = (sorted.len() - 1) as f64 * q.clamp(0.0, 1.0);
    let lo = libm::floor(h) as usize;
    let frac = h - lo as f64;
    let a = sorted[lo];
    if frac == 0.0 || lo + 1 >= sorted.len() {
        return a;
    }
    let b = sorted[lo + 1];
    if a == b {
        return a;
    }
    a + frac * (b - a)
}

/// Sorts by `f64::total_cmp` (NaN last).
pub fn sorted(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    v
}

/// Percentile summary of the records of one problem size.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub n: usize,
    pub median_sts: f64,
    pub q1_sts: f64,
    pub q3_sts: f64,
    pub p01_sts: f64,
    pub p99_sts: f64,
    /// Records with STS outside `[p01, p99]`.
    pub outlier_count: usize,
    pub median_ar_expect: f64,
    pub mean_p_alpha: f64,
}

impl SummaryRow {
    pub fn from_records(n: usize, records: &[EvalRecord]) -> Self {
        let sts: Vec<f64> = records.iter().map(|r| r.sts).collect();
        let sts = sorted(&sts);
        let ar: Vec<f64> = records.iter().map(|r| r.ar_expect).collect();
        let ar = sorted(&ar);
        let p01 = percentile(&sts, 0.01);
        let p99 = percentile(&sts, 0.99);
        let outlier_count = sts.iter().filter(|&&s| s < p01 || s > p99).count();
        let mean_p_alpha = if records.is_empty() {
            f64::NAN
        } else {
            pairwise_sum_by(records, |r| r.p_alpha) / records.len() as f64
        };
        Self {
            n,
            median_sts: percentile(&sts, 0.5),
            q1_sts: percentile(&sts, 0.25),
            q3_sts: percentile(&sts, 0.75),
            p01_sts: p01,
            p99_sts: p99,
            outlier_count,
            median_ar_expect: percentile(&ar, 0.5),
            mean_p_alpha,
        }
    }
}

/// Least-squares fit of `ln y = a + b x` over points with finite positive `y`.
/// Returns `(a, b)`, or `None` with fewer than two usable points.
pub fn log_linear_fit(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    let usable: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| x.is_finite() && y.is_finite() && *y > 0.0)
        .map(|&(x, y)| (x, libm::log(y)))
        .collect();
    if usable.len() < 2 {
        return None;
    }
    let m = usable.len() as f64;
    let mx = usable.iter().map(|p| p.0).sum::<f64>() / m;
    let my = usable.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = usable.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = usable.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let b = sxy / sxx;
    Some((my - b * mx, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type7_matches_hand_values() {
        let v = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(percentile(&v, 0.5), 2.5);
        assert_eq!(percentile(&v, 0.25), 1.75);
        assert_eq!(percentile(&v, 0.0), 1.0);
        assert_eq!(percentile(&v, 1.0), 4.0);
        assert!(percentile(&[], 0.5).is_nan());
    }

    #[test]
    fn infinity_participates() {
        let v = [1.0, 2.0, f64::INFINITY];
        assert_eq!(percentile(&v, 0.5), 2.0);
        assert_eq!(percentile(&v, 0.75), f64::INFINITY);
        assert_eq!(
            percentile(&[f64::INFINITY, f64::INFINITY], 0.3),
            f64::INFINITY
        );
    }

    #[test]
    fn pairwise_matches_naive_on_small_input() {
        let v: Vec<f64> = (1..=100).map(|i| i as f64).collect();
        assert_eq!(pairwise_sum(&v), 5050.0);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }

    #[test]
    fn exponential_fit() {
        let pts: Vec<(f64, f64)> = (5..10)
            .map(|n| (n as f64, 3.0 * libm::exp(0.4 * n as f64)))
            .collect();
        let (a, b) = log_linear_fit(&pts).unwrap();
        assert!((b - 0.4).abs() < 1e-12);
        assert!((a - libm::log(3.0)).abs() < 1e-12);
        assert!(log_linear_fit(&pts[..1]).is_none());
    }
}
