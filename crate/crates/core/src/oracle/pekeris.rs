use serde::Serialize;

use crate::error::{Error, Result};
use crate::radial::pekeris_deviation;

/// First λr at which the relative error reaches `threshold`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossing {
    pub threshold: f64,
    pub lambda_r: Option<f64>,
}

/// Relative error |RHS(x) − 1/x²|·x² of the Pekeris-type replacement.
#[derive(Debug, Clone, Serialize)]
pub struct PekerisScan {
    /// (λr, relative error) samples on (0, λr_max].
    pub curve: Vec<(f64, f64)>,
    pub max_error: f64,
    pub max_at: f64,
    /// 1 %, 5 % and 10 % crossings, refined by bisection.
    pub crossings: Vec<Crossing>,
    /// Whether the sampled error never decreases.
    pub monotone: bool,
}

fn relative_error(x: f64) -> f64 {
    pekeris_deviation(x).abs() * x * x
}

pub fn pekeris_error_scan(lambda_r_max: f64, samples: usize) -> Result<PekerisScan> {
    if samples < 2 {
        return Err(Error::Invalid("pekeris scan needs at least 2 samples".into()));
    }
    if !(lambda_r_max > 0.0) {
        return Err(Error::Invalid("pekeris scan needs lambda_r_max > 0".into()));
    }
    let curve: Vec<(f64, f64)> = (1..=samples)
        .map(|i| {
            let x = lambda_r_max * i as f64 / samples as f64;
            (x, relative_error(x))
        })
        .collect();
    let (max_at, max_error) = curve
        .iter()
        .copied()
        .fold((0.0, 0.0), |acc, p| if p.1 > acc.1 { p } else { acc });
    let monotone = curve.windows(2).all(|w| w[1].1 >= w[0].1);
    let crossings = [0.01, 0.05, 0.10]
        .iter()
        .map(|&threshold| {
            let lambda_r = curve
                .iter()
                .position(|p| p.1 >= threshold)
                .map(|i| {
                    let mut hi = curve[i].0;
                    let mut lo = if i == 0 { 0.0 } else { curve[i - 1].0 };
                    for _ in 0..60 {
                        let mid = 0.5 * (lo + hi);
                        if relative_error(mid) >= threshold {
                            hi = mid;
                        } else {
                            lo = mid;
                        }
                    }
                    hi
                });
            Crossing {
                threshold,
                lambda_r,
            }
        })
        .collect();
    Ok(PekerisScan {
        curve,
        max_error,
        max_at,
        crossings,
        monotone,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_value_and_small_x() {
        assert!((relative_error(0.5) - 0.0138).abs() < 5e-5);
        assert!(relative_error(1e-4) < 1e-15);
        assert!(relative_error(1e-2) < 1e-8);
    }

    #[test]
    fn scan_reports_crossings() {
        let s = pekeris_error_scan(2.0, 400).unwrap();
        assert_eq!(s.curve.len(), 400);
        let c1 = s.crossings[0].lambda_r.unwrap();
        assert!((relative_error(c1) - 0.01).abs() < 1e-9);
        assert!(c1 > 0.4 && c1 < 0.5);
        assert!(s.crossings.iter().all(|c| c.lambda_r.is_some()));
        assert!(pekeris_error_scan(1.0, 1).is_err());
    }
}
