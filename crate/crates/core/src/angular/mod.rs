//! Angular sectors.
//!
//! The intermediate angles θ_j (2 ≤ j ≤ D−2) carry Gegenbauer-type
//! solutions. The polar-most angle θ_{D−1} carries the ring term; with
//! y = cos θ_{D−1} and L = l(l+D−2) its equation is
//!
//! ```text
//! (1−y²) H'' − (D−1) y H' + [L − Λ/(1−y²) + U(y)] H = 0,
//! U(y) = (γ′y² + ζ′y + κ′)/(1−y²).
//! ```
//!
//! Nikiforov–Uvarov gives σ̃ = η₂y² + η₁y + η₀ and
//!
//! ```text
//! H = (1−y)^{−(u₁+u₂)/2} (1+y)^{(u₂−u₁)/2} P_n^{(u₀−u₂, u₀+u₂)}(y),
//! u₁ = (D−3−2u₀)/2,  u₂ = η₁/(2u₀),
//! ```
//!
//! where u₀ solves both the k quadratic and the constraint 4k − 4η₀ = η₁²/u₀².
//! Eliminating k, L drops out of the constraint:
//!
//! ```text
//! u₀⁴ − W u₀² + ζ′²/4 = 0,  W = (D−3)²/4 + Λ − γ′ − κ′,
//! l = −(D−2)/2 + √((u₀ + n + ½)² + γ′).
//! ```

pub mod special;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::quadrature_endpoints;
use crate::radial::PotentialParams;
use crate::specfun::{jacobi_derivative, jacobi_eval, JacobiIndex};

/// Ring couplings in the form they enter the θ_{D−1} equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RingParams {
    pub gamma_p: f64,
    pub zeta_p: f64,
    pub kappa_p: f64,
}

impl RingParams {
    pub fn new(gamma_p: f64, zeta_p: f64, kappa_p: f64) -> Self {
        Self {
            gamma_p,
            zeta_p,
            kappa_p,
        }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    /// From the physical γ, ζ, κ: the ring term is a potential energy, so it
    /// enters the equation above with the factor −2μ/ħ².
    pub fn from_physical(p: &PotentialParams) -> Self {
        let f = -2.0 * p.mu / (p.hbar * p.hbar);
        Self::new(f * p.gamma, f * p.zeta, f * p.kappa)
    }

    pub fn is_finite(&self) -> bool {
        self.gamma_p.is_finite() && self.zeta_p.is_finite() && self.kappa_p.is_finite()
    }
}

/// Coefficients of σ̃(y) = η₂y² + η₁y + η₀.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Etas {
    pub eta0: f64,
    pub eta1: f64,
    pub eta2: f64,
}

fn require_dim(dim: u32) -> Result<f64> {
    if dim < 3 {
        return Err(Error::Invalid(format!("the ring sector needs D >= 3, got {dim}")));
    }
    Ok(f64::from(dim))
}

fn casimir(l: f64, d: f64) -> f64 {
    l * (l + d - 2.0)
}

/// η₂ = γ′ − L, η₁ = ζ′, η₀ = κ′ + L − Λ.
pub fn eta_params(ring: &RingParams, dim: u32, l: f64, lam: f64) -> Etas {
    let big_l = casimir(l, f64::from(dim));
    Etas {
        eta0: ring.kappa_p + big_l - lam,
        eta1: ring.zeta_p,
        eta2: ring.gamma_p - big_l,
    }
}

/// (u₀, u₁, u₂) for a given k: u₀ = √(((D−3)/2)² − η₂ − k).
pub fn u_params(etas: &Etas, k: f64, dim: u32) -> Result<(f64, f64, f64)> {
    let d = f64::from(dim);
    let rad = ((d - 3.0) / 2.0).powi(2) - etas.eta2 - k;
    if rad < 0.0 {
        return Err(Error::Domain(format!("u0 radicand {rad} is negative")));
    }
    let u0 = rad.sqrt();
    let u2 = if etas.eta1 == 0.0 {
        0.0
    } else if u0 == 0.0 {
        return Err(Error::Domain("u0 = 0 with eta1 != 0 (u2 singular)".into()));
    } else {
        etas.eta1 / (2.0 * u0)
    };
    Ok((u0, (d - 3.0 - 2.0 * u0) / 2.0, u2))
}

/// Roots of [k − n² − n + (D−3)/2]² = (2n+1)²[((D−3)/2)² − η₂ − k], as (+, −).
pub fn k_quadratic_roots(n: u32, dim: u32, eta2: f64) -> Result<(f64, f64)> {
    let d = f64::from(dim);
    let disc = (d - 2.0).powi(2) - 4.0 * eta2;
    if disc < 0.0 {
        return Err(Error::Domain(format!("(D-2)^2 - 4 eta2 = {disc} is negative")));
    }
    let nf = f64::from(n);
    let base = 2.0 - d - 2.0 * nf - 2.0 * nf * nf;
    let s = (2.0 * nf + 1.0) * disc.sqrt();
    Ok(((base + s) / 2.0, (base - s) / 2.0))
}

/// Residual of the quadratic for k (as used by [`k_quadratic_roots`]).
pub fn k_quadratic_residual(n: u32, dim: u32, eta2: f64, k: f64) -> f64 {
    let d = f64::from(dim);
    let nf = f64::from(n);
    let lhs = (k - nf * nf - nf + (d - 3.0) / 2.0).powi(2);
    let rhs = (2.0 * nf + 1.0).powi(2) * (((d - 3.0) / 2.0).powi(2) - eta2 - k);
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0)
}

/// Roots of 4(k − η₀)(((D−3)/2)² − η₂ − k) = η₁², as (+, −):
///
/// ```text
/// 8k = (D−3)² + 4η₀ − 4η₂ ± √(((D−3)² + 4η₀ − 4η₂)² − 16(η₁² + η₀((D−3)² − 4η₂)))
/// ```
pub fn k_constraint_roots(etas: &Etas, dim: u32) -> Result<(f64, f64)> {
    let d = f64::from(dim);
    let x = (d - 3.0).powi(2) + 4.0 * etas.eta0 - 4.0 * etas.eta2;
    let rad = x * x - 16.0 * (etas.eta1.powi(2) + etas.eta0 * ((d - 3.0).powi(2) - 4.0 * etas.eta2));
    if rad < 0.0 {
        return Err(Error::Domain(format!("constraint radicand {rad} is negative")));
    }
    Ok(((x + rad.sqrt()) / 8.0, (x - rad.sqrt()) / 8.0))
}

/// Relative residual of 4k − 4η₀ = η₁²/u₀².
pub fn constraint_residual(etas: &Etas, k: f64, u0: f64) -> f64 {
    let lhs = 4.0 * k - 4.0 * etas.eta0;
    let rhs = if etas.eta1 == 0.0 { 0.0 } else { etas.eta1.powi(2) / (u0 * u0) };
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0)
}

/// Signed residuals of the two quantization conditions obtained by
/// equating the quadratic and constraint roots for k:
///
/// ```text
/// res9  = (2n+1)² + ((D−1)² + 4η₀ − 4η₂ − 2)/2
/// res10 = (2n+1)²((D−2)² − 4η₂) − ((D−3)² + 4η₀ − 4η₂)²/16 + η₁² + η₀((D−3)² − 4η₂)
/// ```
///
/// They are reported, not enforced: true eigenpairs do not make them vanish
/// in general.
pub fn consistency_residuals(n: u32, dim: u32, etas: &Etas) -> (f64, f64) {
    let d = f64::from(dim);
    let q2 = (2.0 * f64::from(n) + 1.0).powi(2);
    let res9 = q2 + ((d - 1.0).powi(2) + 4.0 * etas.eta0 - 4.0 * etas.eta2 - 2.0) / 2.0;
    let x = (d - 3.0).powi(2) + 4.0 * etas.eta0 - 4.0 * etas.eta2;
    let res10 = q2 * ((d - 2.0).powi(2) - 4.0 * etas.eta2) - x * x / 16.0
        + etas.eta1.powi(2)
        + etas.eta0 * ((d - 3.0).powi(2) - 4.0 * etas.eta2);
    (res9, res10)
}

/// A solution of the θ_{D−1} equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngularSolution {
    pub dim: u32,
    pub n: u32,
    /// l = l_{D−1}; real when the ring term is present.
    pub l: f64,
    pub lam: f64,
    pub etas: Etas,
    pub k: f64,
    pub u0: f64,
    pub u1: f64,
    pub u2: f64,
}

impl AngularSolution {
    /// (u₀ − u₂, u₀ + u₂).
    pub fn jacobi(&self) -> JacobiIndex {
        JacobiIndex::new(self.u0 - self.u2, self.u0 + self.u2)
    }

    pub fn is_admissible(&self) -> bool {
        self.jacobi().is_admissible()
    }

    /// L = l(l+D−2).
    pub fn casimir(&self) -> f64 {
        casimir(self.l, f64::from(self.dim))
    }

    /// Slope of τ(y) = −2(1+u₀)y + η₁/u₀.
    pub fn tau_slope(&self) -> f64 {
        -2.0 * (1.0 + self.u0)
    }

    /// Largest absolute field difference to `other`.
    pub fn max_field_difference(&self, other: &Self) -> f64 {
        let a = self.fields();
        let b = other.fields();
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    fn fields(&self) -> [f64; 11] {
        let j = self.jacobi();
        [
            self.l,
            self.lam,
            self.etas.eta0,
            self.etas.eta1,
            self.etas.eta2,
            self.k,
            self.u0,
            self.u1,
            self.u2,
            j.alpha,
            j.beta,
        ]
    }
}

fn assemble(dim: u32, n: u32, l: f64, lam: f64, etas: Etas, k: f64) -> Result<AngularSolution> {
    let (u0, u1, u2) = u_params(&etas, k, dim)?;
    Ok(AngularSolution {
        dim,
        n,
        l,
        lam,
        etas,
        k,
        u0,
        u1,
        u2,
    })
}

/// Among candidate k values keep the admissible ones (u₀ ± u₂ > −1) and
/// prefer the largest u₀.
pub(crate) fn pick(candidates: &[Result<AngularSolution>]) -> Result<AngularSolution> {
    candidates
        .iter()
        .filter_map(|c| c.as_ref().ok())
        .filter(|s| s.is_admissible())
        .copied()
        .max_by(|a, b| a.u0.total_cmp(&b.u0))
        .ok_or_else(|| Error::Inadmissible("no k root gives u0 +- u2 > -1".into()))
}

/// Solution at a given (possibly unquantized) l: η's from l, k from the
/// constraint roots, u's from k.
pub fn general_solution(ring: &RingParams, dim: u32, l: f64, lam: f64, n: u32) -> Result<AngularSolution> {
    require_dim(dim)?;
    let etas = eta_params(ring, dim, l, lam);
    let (kp, km) = k_constraint_roots(&etas, dim)?;
    pick(&[
        assemble(dim, n, l, lam, etas, kp),
        assemble(dim, n, l, lam, etas, km),
    ])
}

/// The u₀ at which a real l exists: larger root of u₀⁴ − W u₀² + ζ′²/4 = 0.
pub fn quantized_u0(ring: &RingParams, dim: u32, lam: f64) -> Result<f64> {
    let d = require_dim(dim)?;
    let w = (d - 3.0).powi(2) / 4.0 + lam - ring.gamma_p - ring.kappa_p;
    let disc = w * w - ring.zeta_p.powi(2);
    if w < 0.0 || disc < 0.0 {
        return Err(Error::Inadmissible(format!(
            "no real u0: W = {w}, W^2 - zeta'^2 = {disc}"
        )));
    }
    Ok(((w + disc.sqrt()) / 2.0).sqrt())
}

/// Level n of the θ_{D−1} equation: l from the closed form, then
/// [`general_solution`] at that l. The quadratic root for k is checked
/// against the constraint root it must coincide with.
pub fn solve(ring: &RingParams, dim: u32, lam: f64, n: u32) -> Result<AngularSolution> {
    let d = require_dim(dim)?;
    let u0 = quantized_u0(ring, dim, lam)?;
    let rad = (u0 + f64::from(n) + 0.5).powi(2) + ring.gamma_p;
    if rad < 0.0 {
        return Err(Error::Inadmissible(format!("level {n}: l would be complex")));
    }
    let l = -(d - 2.0) / 2.0 + rad.sqrt();
    finish_quantized(ring, dim, lam, n, l)
}

fn finish_quantized(ring: &RingParams, dim: u32, lam: f64, n: u32, l: f64) -> Result<AngularSolution> {
    let sol = general_solution(ring, dim, l, lam, n)?;
    let (k7, _) = k_quadratic_roots(n, dim, sol.etas.eta2)?;
    let mismatch = (k7 - sol.k).abs() / sol.k.abs().max(1.0);
    if mismatch > 1e-8 {
        return Err(Error::Constraint {
            name: "quadratic and constraint roots for k".into(),
            residual: mismatch,
        });
    }
    Ok(sol)
}

/// u₀ implied by the (+) quadratic root and the τ relation
/// (2n+1)u₀ = k − n² − n + (D−3)/2, signed.
fn u0_from_quadratic(ring: &RingParams, dim: u32, lam: f64, n: u32, l: f64) -> Option<f64> {
    let etas = eta_params(ring, dim, l, lam);
    let (k, _) = k_quadratic_roots(n, dim, etas.eta2).ok()?;
    let nf = f64::from(n);
    Some((k - nf * nf - nf + (f64::from(dim) - 3.0) / 2.0) / (2.0 * nf + 1.0))
}

/// Level n by scanning l over [0, l_max] for a sign change of
/// u₀(quadratic, l) − u₀(constraint) and refining by bisection.
pub fn quantize(ring: &RingParams, dim: u32, lam: f64, n: u32, l_max: f64) -> Result<AngularSolution> {
    let d = require_dim(dim)?;
    let target = quantized_u0(ring, dim, lam)?;
    let g = |l: f64| u0_from_quadratic(ring, dim, lam, n, l).map(|u| u - target);
    // Below l = −(D−2)/2 the Casimir is not monotone; start at its minimum.
    let lo_l = -(d - 2.0) / 2.0;
    let steps = 400;
    let dl = (l_max - lo_l) / f64::from(steps);
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..=steps {
        let l = lo_l + f64::from(i) * dl;
        let Some(v) = g(l) else {
            prev = None;
            continue;
        };
        if v == 0.0 {
            return finish_quantized(ring, dim, lam, n, l);
        }
        if let Some((pl, pv)) = prev {
            if pv.signum() != v.signum() {
                let (mut a, mut b, mut fa) = (pl, l, pv);
                for _ in 0..200 {
                    let m = 0.5 * (a + b);
                    if m <= a || m >= b {
                        break;
                    }
                    match g(m) {
                        Some(fm) if fm.signum() == fa.signum() => {
                            a = m;
                            fa = fm;
                        }
                        Some(_) => b = m,
                        None => break,
                    }
                }
                return finish_quantized(ring, dim, lam, n, 0.5 * (a + b));
            }
        }
        prev = Some((l, v));
    }
    Err(Error::NoConvergence(format!("no l in [0, {l_max}] for level {n}")))
}

/// Unnormalized intermediate-angle solution
/// (sin θ)^{l_{j−1}} P_{l_j − l_{j−1}}^{(c,c)}(cos θ), c = l_{j−1} + (j−2)/2.
pub fn intermediate_angular(j: u32, l_j: u32, l_jm1: u32, theta: f64) -> Result<f64> {
    if l_j < l_jm1 {
        return Err(Error::Invalid(format!("l_j = {l_j} < l_(j-1) = {l_jm1}")));
    }
    if j < 2 {
        return Err(Error::Invalid(format!("intermediate angles start at j = 2, got {j}")));
    }
    let c = f64::from(l_jm1) + (f64::from(j) - 2.0) / 2.0;
    Ok(theta.sin().powi(l_jm1 as i32) * jacobi_eval(l_j - l_jm1, JacobiIndex::new(c, c), theta.cos()))
}

/// Sign convention of the (1−y) exponent in φ(y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhiBranch {
    /// (1−y)^{−(u₁+u₂)/2} (1+y)^{(u₂−u₁)/2}
    Negative,
    /// (1−y)^{(u₁+u₂)/2} (1+y)^{(u₂−u₁)/2}
    Positive,
}

impl PhiBranch {
    fn exponents(self, sol: &AngularSolution) -> (f64, f64) {
        let e_minus = (sol.u1 + sol.u2) / 2.0;
        let e_plus = (sol.u2 - sol.u1) / 2.0;
        match self {
            PhiBranch::Negative => (-e_minus, e_plus),
            PhiBranch::Positive => (e_minus, e_plus),
        }
    }

    /// ∫ H² (sinθ)^{D−2} dθ converges at both poles.
    pub fn is_integrable(self, sol: &AngularSolution) -> bool {
        let (e1, e2) = self.exponents(sol);
        let w = (f64::from(sol.dim) - 3.0) / 2.0;
        2.0 * e1 + w > -1.0 && 2.0 * e2 + w > -1.0
    }

    /// Max over interior sample points of the relative residual of the
    /// θ_{D−1} equation, with analytic derivatives.
    pub fn equation_residual(self, sol: &AngularSolution, ring: &RingParams) -> f64 {
        let (e1, e2) = self.exponents(sol);
        let idx = sol.jacobi();
        let d = f64::from(sol.dim);
        let big_l = sol.casimir();
        (1..40)
            .map(|i| {
                let y = -1.0 + 2.0 * f64::from(i) / 40.0;
                let s = 1.0 - y * y;
                let f1 = -e1 / (1.0 - y) + e2 / (1.0 + y);
                let f2 = f1 * f1 - e1 / (1.0 - y).powi(2) - e2 / (1.0 + y).powi(2);
                let p0 = jacobi_eval(sol.n, idx, y);
                let p1 = jacobi_derivative(sol.n, idx, y, 1);
                let p2 = jacobi_derivative(sol.n, idx, y, 2);
                let u = (ring.gamma_p * y * y + ring.zeta_p * y + ring.kappa_p) / s;
                let pot = big_l - sol.lam / s + u;
                let terms = [
                    s * f2 * p0,
                    s * 2.0 * f1 * p1,
                    s * p2,
                    -(d - 1.0) * y * f1 * p0,
                    -(d - 1.0) * y * p1,
                    pot * p0,
                ];
                let total: f64 = terms.iter().sum();
                let scale: f64 = terms.iter().map(|t| t.abs()).sum::<f64>().max(1e-300);
                total.abs() / scale
            })
            .fold(0.0, f64::max)
    }

    fn eval(self, sol: &AngularSolution, theta: f64) -> f64 {
        let (e1, e2) = self.exponents(sol);
        let y = theta.cos();
        // 1 ∓ cosθ = 2 sin²(θ/2), 2 cos²(θ/2), without cancellation
        let one_minus = 2.0 * (theta / 2.0).sin().powi(2);
        let one_plus = 2.0 * (theta / 2.0).cos().powi(2);
        one_minus.powf(e1) * one_plus.powf(e2) * jacobi_eval(sol.n, sol.jacobi(), y)
    }
}

/// A normalized ring-sector eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RingWavefunction {
    pub solution: AngularSolution,
    pub branch: PhiBranch,
    /// Both branches were square-integrable; the equation residual decided.
    pub tie_broken_by_residual: bool,
    pub normalization: f64,
}

impl RingWavefunction {
    pub fn new(sol: &AngularSolution, ring: &RingParams) -> Result<Self> {
        let branches: Vec<PhiBranch> = [PhiBranch::Negative, PhiBranch::Positive]
            .into_iter()
            .filter(|b| b.is_integrable(sol))
            .collect();
        let (branch, tie) = match branches.as_slice() {
            [] => {
                return Err(Error::Inadmissible(
                    "neither sign of the phi exponent is square-integrable".into(),
                ))
            }
            [only] => (*only, false),
            _ => {
                let neg = PhiBranch::Negative.equation_residual(sol, ring);
                let pos = PhiBranch::Positive.equation_residual(sol, ring);
                (if pos < neg { PhiBranch::Positive } else { PhiBranch::Negative }, true)
            }
        };
        let (e1, e2) = branch.exponents(sol);
        let w = (f64::from(sol.dim) - 3.0) / 2.0;
        let idx = sol.jacobi();
        let q = quadrature_endpoints(
            |y, from_lo, to_hi| {
                let p = jacobi_eval(sol.n, idx, y);
                to_hi.powf(2.0 * e1 + w) * from_lo.powf(2.0 * e2 + w) * p * p
            },
            -1.0,
            1.0,
            200_000,
            1e-13,
        );
        if !(q.value > 0.0 && q.value.is_finite()) {
            return Err(Error::NoConvergence("ring normalization integral".into()));
        }
        Ok(Self {
            solution: *sol,
            branch,
            tie_broken_by_residual: tie,
            normalization: 1.0 / q.value.sqrt(),
        })
    }

    pub fn eval(&self, theta: f64) -> f64 {
        self.normalization * self.branch.eval(&self.solution, theta)
    }
}

/// Normalized H_n(θ) of `sol`.
pub fn ring_wavefunction(sol: &AngularSolution, ring: &RingParams, theta: f64) -> Result<f64> {
    Ok(RingWavefunction::new(sol, ring)?.eval(theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn eta_examples() {
        let e = eta_params(&RingParams::zero(), 3, 1.0, 0.0);
        assert_eq!((e.eta2, e.eta1, e.eta0), (-2.0, 0.0, 2.0));
        let e = eta_params(&RingParams::new(0.0, 0.0, 1.0), 5, 0.0, 3.0);
        assert_eq!((e.eta0, e.eta1, e.eta2), (-2.0, 0.0, 0.0));
    }

    #[test]
    fn u_examples() {
        let etas = Etas {
            eta0: 0.0,
            eta1: 0.0,
            eta2: -2.0,
        };
        let (u0, u1, u2) = u_params(&etas, -2.0, 3).unwrap();
        assert_eq!((u0, u1, u2), (2.0, -2.0, 0.0));
        assert!(u_params(&etas, 5.0, 3).is_err());
        let singular = Etas { eta1: 1.0, ..etas };
        assert!(u_params(&singular, 2.0, 3).is_err());
    }

    #[test]
    fn k_root_examples() {
        assert_eq!(k_quadratic_roots(0, 3, -2.0).unwrap(), (1.0, -2.0));
        assert_eq!(k_quadratic_roots(0, 3, 0.0).unwrap(), (0.0, -1.0));
        for (n, d, e2) in [(0, 3, -2.0), (2, 5, 1.3), (3, 4, -7.5)] {
            let (a, b) = k_quadratic_roots(n, d, e2).unwrap();
            assert!(k_quadratic_residual(n, d, e2, a) < 1e-12);
            assert!(k_quadratic_residual(n, d, e2, b) < 1e-12);
        }
        let etas = Etas {
            eta0: 0.0,
            eta1: 0.0,
            eta2: -1.0,
        };
        let (kp, km) = k_constraint_roots(&etas, 3).unwrap();
        assert_eq!(km, 0.0);
        assert!(kp > 0.0);
        let e = Etas {
            eta0: -0.4,
            eta1: 0.7,
            eta2: -3.0,
        };
        let flipped = Etas { eta1: -0.7, ..e };
        assert_eq!(k_constraint_roots(&e, 4).unwrap(), k_constraint_roots(&flipped, 4).unwrap());
    }

    #[test]
    fn residual_example() {
        let etas = Etas {
            eta0: 2.0 - 9.0,
            eta1: 0.0,
            eta2: -2.0,
        };
        assert_eq!(consistency_residuals(1, 3, &etas).0, 0.0);
    }

    #[test]
    fn free_levels_are_integer() {
        for dim in 3..=6 {
            for m in 0..3u32 {
                let lam = f64::from(m) * (f64::from(m) + f64::from(dim) - 3.0);
                for n in 0..3 {
                    let s = solve(&RingParams::zero(), dim, lam, n).unwrap();
                    assert!((s.l - f64::from(m + n)).abs() < 1e-12, "D={dim} m={m} n={n}: {}", s.l);
                    assert!((s.u0 - f64::from(m) - (f64::from(dim) - 3.0) / 2.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn scan_matches_closed_form() {
        let ring = RingParams::new(0.3, 0.5, -0.2);
        for n in 0..3 {
            let a = solve(&ring, 3, 1.0, n).unwrap();
            let b = quantize(&ring, 3, 1.0, n, 20.0).unwrap();
            assert!((a.l - b.l).abs() < 1e-10);
            assert!(constraint_residual(&a.etas, a.k, a.u0) < 1e-12);
        }
    }

    #[test]
    fn legendre_wavefunction() {
        let s = solve(&RingParams::zero(), 3, 0.0, 1).unwrap();
        let h = RingWavefunction::new(&s, &RingParams::zero()).unwrap();
        // normalized P₁ under sinθ dθ is √(3/2) cosθ
        for th in [0.1, 0.9, 2.0, 3.0] {
            assert!((h.eval(th) - 1.5f64.sqrt() * th.cos()).abs() < 1e-10);
        }
        assert!(h.branch == PhiBranch::Negative || h.tie_broken_by_residual);
    }

    #[test]
    fn parity_with_symmetric_indices() {
        let ring = RingParams::new(0.4, 0.0, 0.3);
        let s = solve(&ring, 4, 3.0, 2).unwrap();
        let h = RingWavefunction::new(&s, &ring).unwrap();
        for th in [0.2, 0.7, 1.3] {
            assert!((h.eval(th) - h.eval(PI - th)).abs() < 1e-10);
        }
    }

    #[test]
    fn intermediate_examples() {
        let th = 0.8;
        assert!((intermediate_angular(2, 0, 0, th).unwrap() - 1.0).abs() < 1e-15);
        assert!((intermediate_angular(2, 1, 0, th).unwrap() - th.cos()).abs() < 1e-15);
        assert!((intermediate_angular(3, 2, 2, th).unwrap() - th.sin().powi(2)).abs() < 1e-15);
        assert!(intermediate_angular(2, 0, 1, th).is_err());
    }

    #[test]
    fn from_physical_sign() {
        let p = PotentialParams {
            gamma: 1.0,
            zeta: 2.0,
            kappa: 3.0,
            mu: 2.0,
            ..Default::default()
        };
        let r = RingParams::from_physical(&p);
        assert_eq!((r.gamma_p, r.zeta_p, r.kappa_p), (-4.0, -8.0, -12.0));
    }
}
