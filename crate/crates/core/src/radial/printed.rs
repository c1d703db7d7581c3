//! The radial results in the form they are usually quoted: the (−) branch
//! spectrum built from c₁ = 16k − 8 − 16Ẽ with the k ≤ 0 root, the
//! admissibility predicates on c₁, c₂, and the Γ(2a+m−n) normalization sum.
//!
//! None of these describe the bound states of the approximated equation (see
//! the module docs of [`super`]); they are kept so the validation report can
//! show the discrepancy next to the oracle numbers.

use serde::Serialize;

use super::{scales, sqrt_radicand, PotentialParams};
use crate::error::{Error, Result};
use crate::geometry::centrifugal_gamma;
use crate::specfun::{gen_binomial, hyp3f2_terminating, log_gamma};

/// Ẽ = −¼q² − ¼q S_A − ½ − ⅛ S_B (S_A + 2q), q = 2n+1 (the (−) branch).
pub fn energy_reduced(n: u32, a_t: f64, b_t: f64) -> Result<f64> {
    let sa = sqrt_radicand("A~", a_t)?;
    let sb = sqrt_radicand("B~", b_t)?;
    let q = f64::from(2 * n + 1);
    let inner = sa * sa + 4.0 * q * q + 4.0 * q * sa;
    Ok(-0.25 * q * q - 0.25 * q * sa - 0.5 - 0.125 * (sb * sb * inner).sqrt())
}

pub fn energy_physical(n: u32, l: u32, dim: u32, p: &PotentialParams) -> Result<f64> {
    let g = centrifugal_gamma(dim, l);
    let red = super::ReducedRadialParams::reduce(p, g, 0.0);
    let e_t = energy_reduced(n, red.a_t, red.b_t)?;
    let (s, hl2) = scales(p);
    Ok(e_t * s - g * hl2 / 3.0)
}

/// The k ≤ 0 root, 4k = −q² − q S_A.
pub fn k_nonpositive(n: u32, a_t: f64) -> Result<f64> {
    Ok(super::nu_k_roots(n, a_t)?.1)
}

/// Relative residual of [8 + 16Ẽ − 16k]² = 4(1 + 16B̃)(1 + 16Ã − 16k).
pub fn eigen_condition_residual(k: f64, a_t: f64, b_t: f64, e_t: f64) -> f64 {
    let lhs = (8.0 + 16.0 * e_t - 16.0 * k).powi(2);
    let rhs = 4.0 * (1.0 + 16.0 * b_t) * (1.0 + 16.0 * a_t - 16.0 * k);
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrintedConstants {
    pub c1: f64,
    pub c2: f64,
    pub c6: f64,
    pub c7: f64,
    pub k: f64,
    /// c₁ < 4√c₂
    pub first_predicate: bool,
    /// 2c₂ + c₁ < −12√c₂
    pub second_predicate: bool,
}

impl PrintedConstants {
    pub fn jacobi(&self) -> (f64, f64) {
        (-self.c6 - self.c7, -self.c7)
    }
}

/// c₁ = 16k − 8 − 16Ẽ, c₂ = 1 + 16Ã − 16k, 2c₆ = 8 + √c₂, 4c₇ = c₁/√c₂ with
/// the k ≤ 0 root and the (−) branch energy.
pub fn constants(n: u32, a_t: f64, b_t: f64) -> Result<PrintedConstants> {
    let k = k_nonpositive(n, a_t)?;
    let e_t = energy_reduced(n, a_t, b_t)?;
    let c1 = 16.0 * k - 8.0 - 16.0 * e_t;
    let c2 = 1.0 + 16.0 * a_t - 16.0 * k;
    let s = c2.sqrt();
    Ok(PrintedConstants {
        c1,
        c2,
        c6: (8.0 + s) / 2.0,
        c7: c1 / (4.0 * s),
        k,
        first_predicate: c1 < 4.0 * s,
        second_predicate: 2.0 * c2 + c1 < -12.0 * s,
    })
}

/// Λ_n = 1/(λ 2^{n+½}) Σ_m C(n+a, m) C(n+b, n−m) 2^{2a+2m−n+b}
///       Γ(2a+m−n) Γ(b+m+1) Γ(n+a+1) / (Γ(n+1) Γ(2a+2m−n+b+1) Γ(a+1))
///       ₃F₂(−n, n+a+b+1, 2a+m−n; a+1, 2a+2m−n+b+1; 1).
///
/// Returns a pole error when any Γ argument is a nonpositive integer.
pub fn normalization_sum(n: u32, a: f64, b: f64, lambda: f64) -> Result<f64> {
    let nf = f64::from(n);
    let mut sum = 0.0;
    for m in 0..=n {
        let mf = f64::from(m);
        let g1 = log_gamma(2.0 * a + mf - nf)
            .map_err(|_| Error::Pole(format!("Gamma(2a+m-n) at m = {m}, 2a+m-n = {}", 2.0 * a + mf - nf)))?;
        let g2 = log_gamma(b + mf + 1.0)?;
        let g3 = log_gamma(nf + a + 1.0)?;
        let g4 = log_gamma(nf + 1.0)?;
        let g5 = log_gamma(2.0 * a + 2.0 * mf - nf + b + 1.0)?;
        let g6 = log_gamma(a + 1.0)?;
        let ln = (2.0 * a + 2.0 * mf - nf + b) * std::f64::consts::LN_2 + g1.ln_abs + g2.ln_abs + g3.ln_abs
            - g4.ln_abs
            - g5.ln_abs
            - g6.ln_abs;
        let sign = g1.sign * g2.sign * g3.sign * g5.sign * g6.sign;
        let f = hyp3f2_terminating(
            n,
            nf + a + b + 1.0,
            2.0 * a + mf - nf,
            a + 1.0,
            2.0 * a + 2.0 * mf - nf + b + 1.0,
        )?;
        sum += gen_binomial(nf + a, m) * gen_binomial(nf + b, n - m) * sign * ln.exp() * f;
    }
    Ok(sum / (lambda * 2f64.powf(nf + 0.5)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_examples() {
        assert!((energy_reduced(0, 0.0, 0.0).unwrap() + 1.375).abs() < 1e-15);
        assert!((energy_reduced(0, 3.0 / 16.0, 0.0).unwrap() + 1.75).abs() < 1e-15);
        let e = energy_physical(0, 0, 3, &PotentialParams::default()).unwrap();
        assert!((e + 2.75).abs() < 1e-15);
        let es: Vec<f64> = (0..4).map(|n| energy_reduced(n, 1.0, 6.0).unwrap()).collect();
        assert!(es.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn quoted_c2_example() {
        // c₂ = 1 + 16Ã − 16k at Ã = 0, k = −1/2
        let c = constants(0, 0.0, 0.0).unwrap();
        assert_eq!(c.k, -0.5);
        assert_eq!(c.c2, 9.0);
    }

    #[test]
    fn quoted_condition_holds_for_quoted_energy() {
        for n in 0..4 {
            let (a_t, b_t) = (20.0, 6.0);
            let k = k_nonpositive(n, a_t).unwrap();
            let e = energy_reduced(n, a_t, b_t).unwrap();
            assert!(eigen_condition_residual(k, a_t, b_t, e) < 1e-12);
        }
    }

    #[test]
    fn quoted_energy_is_below_the_potential() {
        let p = PotentialParams {
            a: 10.0,
            b: 3.0,
            lambda: 0.5,
            ..Default::default()
        };
        assert!(energy_physical(0, 0, 3, &p).unwrap() < 3.0);
    }

    #[test]
    fn pole_detection() {
        // 2a + m − n = 0 at n = 1, m = 0, a = 1/2
        assert!(matches!(normalization_sum(1, 0.5, 1.0, 1.0), Err(Error::Pole(_))));
        assert!(normalization_sum(0, 1.3, 2.0, 1.0).is_ok());
    }
}
