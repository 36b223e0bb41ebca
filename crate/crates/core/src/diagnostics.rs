//! Moments of a census histogram and its distance to a matched normal law.
//!
//! Raw sums are accumulated in exact integer arithmetic. Higher central
//! moments use sums shifted by the integer part of the mean so the final
//! floating-point step does not cancel large terms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::histogram::Histogram;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionDiagnostics {
    pub total: u64,
    pub mean: f64,
    /// Population variance.
    pub variance: f64,
    /// `None` when the variance is zero.
    pub skewness: Option<f64>,
    pub excess_kurtosis: Option<f64>,
    /// Total-variation distance to the normal with the same mean and
    /// variance, discretized on `0..=max_k`. 1 for a degenerate histogram.
    pub fit_distance: f64,
}

impl DistributionDiagnostics {
    pub fn standard_deviation(&self) -> f64 {
        self.variance.sqrt()
    }
}

pub fn diagnostics(h: &Histogram) -> Result<DistributionDiagnostics> {
    if h.is_empty() {
        return Err(Error::EmptyHistogram);
    }
    let n: u128 = h.total();
    let s1: u128 = h.iter().map(|(k, c)| c as u128 * k as u128).sum();
    let s2: u128 = h.iter().map(|(k, c)| c as u128 * (k as u128).pow(2)).sum();

    let mean = s1 as f64 / n as f64;
    // n·Σck² − (Σck)² = n²·variance, exactly
    let spread = n * s2 - s1 * s1;
    let variance = spread as f64 / (n as f64 * n as f64);
    let total = u64::try_from(n).expect("histogram mass fits in 64 bits");

    if spread == 0 {
        return Ok(DistributionDiagnostics {
            total,
            mean,
            variance: 0.0,
            skewness: None,
            excess_kurtosis: None,
            fit_distance: 1.0,
        });
    }

    let shift = (s1 / n) as i128;
    let shifted = |r: u32| -> f64 {
        let sum: i128 = h.iter().map(|(k, c)| c as i128 * (k as i128 - shift).pow(r)).sum();
        sum as f64 / n as f64
    };
    let (t2, t3, t4) = (shifted(2), shifted(3), shifted(4));
    let d = shifted(1);
    let m3 = t3 - 3.0 * d * t2 + 2.0 * d.powi(3);
    let m4 = t4 - 4.0 * d * t3 + 6.0 * d * d * t2 - 3.0 * d.powi(4);

    Ok(DistributionDiagnostics {
        total,
        mean,
        variance,
        skewness: Some(m3 / variance.powf(1.5)),
        excess_kurtosis: Some(m4 / (variance * variance) - 3.0),
        fit_distance: normal_fit_distance(h, mean, variance),
    })
}

fn normal_fit_distance(h: &Histogram, mean: f64, variance: f64) -> f64 {
    let dense = h.dense();
    let density: Vec<f64> =
        (0..dense.len()).map(|k| (-(k as f64 - mean).powi(2) / (2.0 * variance)).exp()).collect();
    let z: f64 = density.iter().sum();
    let n = h.total() as f64;
    0.5 * dense.iter().zip(&density).map(|(&c, &q)| (c as f64 / n - q / z).abs()).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_mass() {
        let d = diagnostics(&Histogram::from_bins(1, [(0, 1), (2, 1)])).unwrap();
        assert_eq!(d.total, 2);
        assert_eq!(d.mean, 1.0);
        assert_eq!(d.variance, 1.0);
        assert_eq!(d.skewness, Some(0.0));
        assert_eq!(d.excess_kurtosis, Some(-2.0));
    }

    #[test]
    fn degenerate() {
        let d = diagnostics(&Histogram::from_bins(1, [(5, 100)])).unwrap();
        assert_eq!(d.variance, 0.0);
        assert_eq!(d.fit_distance, 1.0);
        assert_eq!(d.skewness, None);
        assert_eq!(d.excess_kurtosis, None);
        assert_eq!(d.mean, 5.0);
    }

    #[test]
    fn empty_rejected() {
        assert!(matches!(diagnostics(&Histogram::new(3)), Err(Error::EmptyHistogram)));
    }

    #[test]
    fn doubling_keeps_normalized_moments() {
        let h = Histogram::from_bins(8, [(0, 16), (1, 24), (2, 52), (3, 76), (4, 116), (5, 156), (9, 40)]);
        let a = diagnostics(&h).unwrap();
        let b = diagnostics(&h.merge(&h).unwrap()).unwrap();
        assert_eq!(b.total, 2 * a.total);
        assert!((a.mean - b.mean).abs() < 1e-12);
        assert!((a.variance - b.variance).abs() < 1e-12);
        assert!((a.skewness.unwrap() - b.skewness.unwrap()).abs() < 1e-12);
        assert!((a.fit_distance - b.fit_distance).abs() < 1e-12);
    }

    #[test]
    fn skew_sign() {
        let right = diagnostics(&Histogram::from_bins(1, [(0, 10), (1, 5), (6, 1)])).unwrap();
        assert!(right.skewness.unwrap() > 0.0);
        let left = diagnostics(&Histogram::from_bins(1, [(0, 1), (5, 5), (6, 10)])).unwrap();
        assert!(left.skewness.unwrap() < 0.0);
    }

    #[test]
    fn symmetric_bell_fits_well() {
        // binomial(10, 1/2) scaled
        let binom = [1u64, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1];
        let h = Histogram::from_bins(1, binom.iter().enumerate().map(|(k, &c)| (k as u32, c)));
        let d = diagnostics(&h).unwrap();
        assert_eq!(d.mean, 5.0);
        assert_eq!(d.variance, 2.5);
        assert!(d.skewness.unwrap().abs() < 1e-12);
        assert!(d.fit_distance < 0.02, "{}", d.fit_distance);
    }
}
