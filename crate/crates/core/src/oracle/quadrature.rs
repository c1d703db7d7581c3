//! Numerical integration.
//!
//! [`quadrature`] is a tanh-sinh (double-exponential) rule: the trapezoid rule
//! applied after the substitution x = c + h·tanh(π/2·sinh t). It never samples
//! the endpoints, copes with algebraic endpoint singularities, and estimates
//! its error from the difference between successive step halvings.
//!
//! The grid rules ([`trapezoid_weights`], [`simpson_weights`]) are for data
//! already sampled on a uniform [`Grid`].

use super::Grid;

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// |I_k − I_{k−1}| between the last two levels.
    pub error: f64,
    pub converged: bool,
    pub evaluations: usize,
}

const T_MAX: f64 = 6.0;
const DEFAULT_REL_TOL: f64 = 1e-12;

/// ∫_a^b f(x) dx using at most about `n` integrand evaluations.
pub fn quadrature<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> QuadResult {
    quadrature_endpoints(|x, _, _| f(x), a, b, n, DEFAULT_REL_TOL)
}

/// Like [`quadrature`] but the integrand also receives x − a and b − x,
/// computed without cancellation, so factors such as (1 − y)^α stay accurate
/// right next to the endpoints.
pub fn quadrature_endpoints<F>(f: F, a: f64, b: f64, n: usize, rel_tol: f64) -> QuadResult
where
    F: Fn(f64, f64, f64) -> f64,
{
    if a == b {
        return QuadResult {
            value: 0.0,
            error: 0.0,
            converged: true,
            evaluations: 0,
        };
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let half = 0.5 * (hi - lo);
    let half_pi = std::f64::consts::FRAC_PI_2;

    let node = |t: f64| -> f64 {
        let u = half_pi * t.sinh();
        let w = half_pi * t.cosh() / (u.cosh() * u.cosh());
        if w == 0.0 || !w.is_finite() {
            return 0.0;
        }
        // x − lo = half·(1 + tanh u) = 2·half/(1 + e^{−2u}); symmetric for hi − x.
        let from_lo = 2.0 * half / (1.0 + (-2.0 * u).exp());
        let to_hi = 2.0 * half / (1.0 + (2.0 * u).exp());
        if from_lo <= 0.0 || to_hi <= 0.0 {
            return 0.0;
        }
        let x = if u < 0.0 { lo + from_lo } else { hi - to_hi };
        let x = x.min(hi).max(lo);
        let v = f(x, from_lo, to_hi);
        if v.is_finite() {
            half * w * v
        } else {
            0.0
        }
    };

    // Level 0: unit step.
    let mut step = 1.0;
    let mut evaluations = 0usize;
    let mut sum = node(0.0);
    evaluations += 1;
    let mut j = 1;
    while (j as f64) * step <= T_MAX {
        let t = j as f64 * step;
        sum += node(t) + node(-t);
        evaluations += 2;
        j += 1;
    }
    let mut estimate = sum * step;
    let mut error = f64::INFINITY;
    let mut converged = false;
    let mut level = 0;
    loop {
        let nodes_next = (2.0 * T_MAX / (step / 2.0)) as usize + 1;
        if evaluations + nodes_next / 2 > n.max(64) && level >= 3 {
            break;
        }
        step /= 2.0;
        level += 1;
        let mut k = 1;
        while (k as f64) * step <= T_MAX {
            let t = k as f64 * step;
            sum += node(t) + node(-t);
            evaluations += 2;
            k += 2;
        }
        let next = sum * step;
        error = (next - estimate).abs();
        estimate = next;
        if level >= 3 && error <= rel_tol * estimate.abs().max(f64::MIN_POSITIVE) {
            converged = true;
            break;
        }
        if level >= 3 && error == 0.0 {
            converged = true;
            break;
        }
    }
    QuadResult {
        value: sign * estimate,
        error,
        converged,
        evaluations,
    }
}

/// Trapezoid weights on a uniform grid.
pub fn trapezoid_weights(grid: &Grid) -> Vec<f64> {
    let n = grid.n_points;
    let mut w = vec![grid.spacing; n];
    w[0] *= 0.5;
    w[n - 1] *= 0.5;
    w
}

/// Composite Simpson weights; an even point count closes with the 3/8 rule
/// on the last three intervals.
pub fn simpson_weights(grid: &Grid) -> Vec<f64> {
    let n = grid.n_points;
    let h = grid.spacing;
    let mut w = vec![0.0; n];
    let simpson_end = if n % 2 == 1 { n - 1 } else { n - 4 };
    for i in (0..simpson_end).step_by(2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    if n.is_multiple_of(2) {
        let s = simpson_end;
        w[s] += 3.0 * h / 8.0;
        w[s + 1] += 9.0 * h / 8.0;
        w[s + 2] += 9.0 * h / 8.0;
        w[s + 3] += 3.0 * h / 8.0;
    }
    w
}

/// Σ wᵢ fᵢ gᵢ.
pub fn weighted_dot(weights: &[f64], f: &[f64], g: &[f64]) -> f64 {
    weights
        .iter()
        .zip(f)
        .zip(g)
        .map(|((w, a), b)| w * a * b)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{jacobi_eval, JacobiIndex};
    use std::f64::consts::PI;

    #[test]
    fn sine_integral() {
        let q = quadrature(f64::sin, 0.0, PI, 4000);
        assert!(q.converged);
        assert!((q.value - 2.0).abs() < 1e-10);
    }

    #[test]
    fn legendre_orthogonality() {
        let leg = JacobiIndex::new(0.0, 0.0);
        let q = quadrature(|y| jacobi_eval(2, leg, y) * jacobi_eval(3, leg, y), -1.0, 1.0, 4000);
        assert!(q.value.abs() < 1e-10);
    }

    #[test]
    fn endpoint_singularity() {
        // ∫₀¹ x^{-0.9} dx = 10
        let q = quadrature_endpoints(|_, from_lo, _| from_lo.powf(-0.9), 0.0, 1.0, 20_000, 1e-12);
        assert!((q.value - 10.0).abs() < 1e-9, "{:?}", q);
        // ∫₋₁¹ (1−y)^{-1/2} dy = 2√2
        let q = quadrature_endpoints(|_, _, to_hi| to_hi.powf(-0.5), -1.0, 1.0, 20_000, 1e-12);
        assert!((q.value - 2.0 * 2f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let q = quadrature(|x| x * x, 1.0, 0.0, 2000);
        assert!((q.value + 1.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn nonconvergence_is_flagged() {
        // Oscillation far beyond the resolution of a tiny budget.
        let q = quadrature_endpoints(|x, _, _| (500.0 * x).sin().abs(), 0.0, 10.0, 64, 1e-14);
        assert!(!q.converged);
    }

    #[test]
    fn grid_rules_integrate_polynomials() {
        for n in [11, 12] {
            let g = Grid::uniform(0.0, 2.0, n).unwrap();
            let pts = g.points();
            let cubic: Vec<f64> = pts.iter().map(|x| x * x * x).collect();
            let ones = vec![1.0; n];
            let s = weighted_dot(&simpson_weights(&g), &cubic, &ones);
            assert!((s - 4.0).abs() < 1e-12, "n = {n}: {s}");
            let t = weighted_dot(&trapezoid_weights(&g), &ones, &ones);
            assert!((t - 2.0).abs() < 1e-14);
        }
    }
}
