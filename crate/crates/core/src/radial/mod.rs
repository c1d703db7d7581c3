//! Radial sector: the Pekeris-type replacement of the centrifugal term,
//! reduced parameters, the closed-form spectrum and wavefunctions,
//! normalization, Gram–Schmidt and the small-λ oscillator limit.
//!
//! With s = tanh²(λr) the approximated radial equation reads
//!
//! ```text
//! g'' + 4λ² [Ẽ − Ã tanh²(λr) − B̃ coth²(λr)] g = 0
//! ```
//!
//! and, writing S_A = √(1+16Ã), S_B = √(1+16B̃), q = 2n+1, its bound states are
//!
//! ```text
//! Ẽ_n = Ã + B̃ − ¼ (½(S_A − S_B) − q)²
//! g_n = Ω_n tanh^{b+½}(λr) sech^{a}(λr) P_n^{(a,b)}(2tanh²(λr) − 1),
//! a = ½(S_A − S_B) − q,  b = ½ S_B,
//! ```
//!
//! bound iff a > 0. The literature form of these results, which differs, is
//! kept in [`printed`] for comparison.

pub mod printed;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::centrifugal_gamma;
use crate::oracle::quadrature_endpoints;
use crate::specfun::{gen_binomial, jacobi_eval, jacobi_moment, JacobiIndex};

/// Physical inputs of V(r, θ) plus the units μ and ħ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PotentialParams {
    pub a: f64,
    pub b: f64,
    pub lambda: f64,
    pub gamma: f64,
    pub zeta: f64,
    pub kappa: f64,
    pub mu: f64,
    pub hbar: f64,
}

impl Default for PotentialParams {
    /// Natural units μ = ħ = 1, λ = 1, no potential.
    fn default() -> Self {
        Self {
            a: 0.0,
            b: 0.0,
            lambda: 1.0,
            gamma: 0.0,
            zeta: 0.0,
            kappa: 0.0,
            mu: 1.0,
            hbar: 1.0,
        }
    }
}

impl PotentialParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("lambda", self.lambda), ("mu", self.mu), ("hbar", self.hbar)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Invalid(format!("{name} must be positive and finite, got {v}")));
            }
        }
        for (name, v) in [
            ("A", self.a),
            ("B", self.b),
            ("gamma", self.gamma),
            ("zeta", self.zeta),
            ("kappa", self.kappa),
        ] {
            if !v.is_finite() {
                return Err(Error::Invalid(format!("{name} must be finite")));
            }
        }
        Ok(())
    }

    /// ħ²/2μ.
    pub fn kinetic(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mu)
    }

    /// The radial potential A tanh²(λr) + B coth²(λr).
    pub fn radial_potential(&self, r: f64) -> f64 {
        let t = (self.lambda * r).tanh();
        self.a * t * t + self.b / (t * t)
    }

    /// Exact centrifugal term γ_D ħ²/(2μ r²).
    pub fn centrifugal(&self, gamma_d: f64, r: f64) -> f64 {
        gamma_d * self.kinetic() / (r * r)
    }

    /// Its Pekeris-type replacement γ_D ħ²λ²/(2μ) · RHS(λr).
    pub fn centrifugal_approx(&self, gamma_d: f64, r: f64) -> f64 {
        gamma_d * self.kinetic() * self.lambda * self.lambda * pekeris_rhs(self.lambda * r)
    }
}

/// −2/3 − tanh²(x)/3 + coth²(x), the replacement for 1/x².
pub fn pekeris_rhs(x: f64) -> f64 {
    let t = x.tanh();
    -2.0 / 3.0 - t * t / 3.0 + 1.0 / (t * t)
}

/// pekeris_rhs(x) − 1/x², using its Taylor series near 0 where the direct
/// difference cancels.
pub fn pekeris_deviation(x: f64) -> f64 {
    if x.abs() < 0.1 {
        let x2 = x * x;
        const C: [f64; 6] = [
            -4.0 / 15.0,
            40.0 / 189.0,
            -28.0 / 225.0,
            136.0 / 2079.0,
            -1_885_048.0 / 58_046_625.0,
            208.0 / 13_365.0,
        ];
        C.iter().rev().fold(0.0, |acc, c| acc * x2 + c) * x2
    } else {
        pekeris_rhs(x) - 1.0 / (x * x)
    }
}

/// Dimensionless Ã, B̃, Ẽ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReducedRadialParams {
    pub a_t: f64,
    pub b_t: f64,
    pub e_t: f64,
}

impl ReducedRadialParams {
    /// 4λ²Ã = (2μ/ħ²)(A − γ_D ħ²λ²/6μ), 4λ²B̃ = (2μ/ħ²)(B + γ_D ħ²λ²/2μ),
    /// 4λ²Ẽ = (2μ/ħ²)(E + γ_D ħ²λ²/3μ).
    pub fn reduce(p: &PotentialParams, gamma_d: f64, energy: f64) -> Self {
        let (s, hl2) = scales(p);
        Self {
            a_t: (p.a - gamma_d * hl2 / 6.0) / s,
            b_t: (p.b + gamma_d * hl2 / 2.0) / s,
            e_t: (energy + gamma_d * hl2 / 3.0) / s,
        }
    }

    /// Inverse of [`reduce`](Self::reduce): (A, B, E).
    pub fn to_physical(&self, p: &PotentialParams, gamma_d: f64) -> (f64, f64, f64) {
        let (s, hl2) = scales(p);
        (
            self.a_t * s + gamma_d * hl2 / 6.0,
            self.b_t * s - gamma_d * hl2 / 2.0,
            self.e_t * s - gamma_d * hl2 / 3.0,
        )
    }
}

/// (ħ²·4λ²/2μ, ħ²λ²/μ)
pub(crate) fn scales(p: &PotentialParams) -> (f64, f64) {
    let hl2 = p.hbar * p.hbar * p.lambda * p.lambda / p.mu;
    (2.0 * hl2, hl2)
}

pub(crate) fn sqrt_radicand(name: &str, x: f64) -> Result<f64> {
    let r = 1.0 + 16.0 * x;
    if r < 0.0 || !r.is_finite() {
        return Err(Error::Domain(format!("1 + 16·{name} = {r} is negative")));
    }
    Ok(r.sqrt())
}

/// Roots of 4k = −(2n+1)² ± (2n+1)√(1+16Ã), returned as (+, −).
pub fn nu_k_roots(n: u32, a_t: f64) -> Result<(f64, f64)> {
    let s = sqrt_radicand("A~", a_t)?;
    let q = f64::from(2 * n + 1);
    Ok(((-q * q + q * s) / 4.0, (-q * q - q * s) / 4.0))
}

/// The root of [`nu_k_roots`] consistent with a decreasing τ:
/// √c₂ = 4k/(2n+1) − (2n+1) must be nonnegative, which singles out the (+)
/// root and requires √(1+16Ã) ≥ 2(2n+1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KSelection {
    pub k: f64,
    pub roots: (f64, f64),
    pub sqrt_c2: f64,
    /// The k ≤ 0 condition quoted alongside the literature formula.
    pub k_nonpositive: bool,
}

pub fn select_k(n: u32, a_t: f64) -> Result<KSelection> {
    let roots = nu_k_roots(n, a_t)?;
    let q = f64::from(2 * n + 1);
    let k = roots.0;
    Ok(KSelection {
        k,
        roots,
        sqrt_c2: 4.0 * k / q - q,
        k_nonpositive: k <= 0.0,
    })
}

/// Ẽ_n = Ã + B̃ − ¼(½(S_A − S_B) − (2n+1))².
pub fn energy_reduced(n: u32, a_t: f64, b_t: f64) -> Result<f64> {
    let sa = sqrt_radicand("A~", a_t)?;
    let sb = sqrt_radicand("B~", b_t)?;
    let q = f64::from(2 * n + 1);
    let a = 0.5 * (sa - sb) - q;
    Ok(a_t + b_t - 0.25 * a * a)
}

/// Jacobi indices (a, b) of level n.
pub fn jacobi_indices(n: u32, a_t: f64, b_t: f64) -> Result<JacobiIndex> {
    let sa = sqrt_radicand("A~", a_t)?;
    let sb = sqrt_radicand("B~", b_t)?;
    Ok(JacobiIndex::new(0.5 * (sa - sb) - f64::from(2 * n + 1), 0.5 * sb))
}

/// E for a centrifugal strength γ_D (real l allowed through γ_D).
pub fn energy_for_gamma(n: u32, gamma_d: f64, p: &PotentialParams) -> Result<f64> {
    let red = ReducedRadialParams::reduce(p, gamma_d, 0.0);
    let e_t = energy_reduced(n, red.a_t, red.b_t)?;
    Ok(ReducedRadialParams { e_t, ..red }.to_physical(p, gamma_d).2)
}

/// E_{nl}^D in physical units.
pub fn energy_physical(n: u32, l: u32, dim: u32, p: &PotentialParams) -> Result<f64> {
    energy_for_gamma(n, centrifugal_gamma(dim, l), p)
}

/// Which bound-state conditions hold, individually.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundWindow {
    pub gamma_d: f64,
    pub a_t: f64,
    pub b_t: f64,
    /// A ≥ (λ²ħ²/2μ)(γ_D/3 − 1/4), i.e. Ã ≥ −1/16.
    pub a_condition: bool,
    pub a_threshold: f64,
    /// B ≥ −(λ²ħ²/2μ)(γ_D + 1/4), i.e. B̃ ≥ −1/16.
    pub b_condition: bool,
    pub b_threshold: f64,
    /// B̃ > 35/16.
    pub b_tilde_condition: bool,
    /// `b_condition` holds but `b_tilde_condition` does not.
    pub inconsistent: bool,
    /// Largest n with a > 0, if any level is bound.
    pub max_bound_n: Option<u32>,
}

impl BoundWindow {
    /// Names of the failing conditions, for tagging output rows.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.a_condition {
            out.push("A-condition");
        }
        if !self.b_condition {
            out.push("B-condition");
        }
        if !self.b_tilde_condition {
            out.push("B~>35/16");
        }
        if self.max_bound_n.is_none() {
            out.push("no-bound-level");
        }
        out
    }
}

pub fn bound_state_window(p: &PotentialParams, dim: u32, l: u32) -> BoundWindow {
    bound_state_window_gamma(p, centrifugal_gamma(dim, l))
}

pub fn bound_state_window_gamma(p: &PotentialParams, gamma_d: f64) -> BoundWindow {
    let red = ReducedRadialParams::reduce(p, gamma_d, 0.0);
    let unit = p.lambda * p.lambda * p.kinetic();
    let a_threshold = unit * (gamma_d / 3.0 - 0.25);
    let b_threshold = -unit * (gamma_d + 0.25);
    let a_condition = p.a >= a_threshold;
    let b_condition = p.b >= b_threshold;
    let b_tilde_condition = red.b_t > 35.0 / 16.0;
    let max_bound_n = if a_condition && b_condition {
        let sa = (1.0 + 16.0 * red.a_t).sqrt();
        let sb = (1.0 + 16.0 * red.b_t).sqrt();
        // a_n = ½(S_A − S_B) − (2n+1) > 0
        let top = (0.5 * (sa - sb) - 1.0) / 2.0;
        if top > 0.0 {
            let n = top.ceil() - 1.0;
            Some(n.min(f64::from(u32::MAX)) as u32)
        } else {
            None
        }
    } else {
        None
    };
    BoundWindow {
        gamma_d,
        a_t: red.a_t,
        b_t: red.b_t,
        a_condition,
        a_threshold,
        b_condition,
        b_threshold,
        b_tilde_condition,
        inconsistent: b_condition && !b_tilde_condition,
        max_bound_n,
    }
}

/// The Nikiforov–Uvarov constants of level n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NUConstants {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub c7: f64,
    pub k: f64,
}

impl NUConstants {
    /// (a, b) = (−c₆ − c₇, −c₇).
    pub fn jacobi(&self) -> JacobiIndex {
        JacobiIndex::new(-self.c6 - self.c7, -self.c7)
    }

    /// |c₁² − c₂c₃| / max(1, c₁²).
    pub fn constraint_residual(&self) -> f64 {
        (self.c1 * self.c1 - self.c2 * self.c3).abs() / (self.c1 * self.c1).max(1.0)
    }
}

/// Constants for level n with Ẽ = [`energy_reduced`] and k from [`select_k`]:
///
/// ```text
/// c₁ = 16k − 2 − 16Ẽ,  c₂ = 1 + 16Ã − 16k,  c₃ = 4(1 + 16B̃),
/// 4c₄ = 1 + √c₂,  8c₅ = 2 − c₁/√c₂,  4c₇ = c₁/√c₂,  c₆ = −½√c₂ − 2c₇.
/// ```
///
/// Fails with a constraint error if c₁² ≠ c₂c₃ beyond 1e-9 relative, and with
/// a domain error if c₂ = 0.
pub fn nu_constants(n: u32, red: &ReducedRadialParams) -> Result<NUConstants> {
    let sel = select_k(n, red.a_t)?;
    let k = sel.k;
    let c1 = 16.0 * k - 2.0 - 16.0 * red.e_t;
    let c2 = 1.0 + 16.0 * red.a_t - 16.0 * k;
    let c3 = 4.0 * (1.0 + 16.0 * red.b_t);
    if sel.sqrt_c2 < 0.0 {
        return Err(Error::Inadmissible(format!(
            "level {n}: sqrt(1+16A~) < 2(2n+1), tau would not decrease"
        )));
    }
    let s = c2.max(0.0).sqrt();
    if s == 0.0 {
        return Err(Error::Domain(format!("level {n}: c2 = 0")));
    }
    let c7 = c1 / (4.0 * s);
    let out = NUConstants {
        c1,
        c2,
        c3,
        c4: (1.0 + s) / 4.0,
        c5: (2.0 - c1 / s) / 8.0,
        c6: -0.5 * s - 2.0 * c7,
        c7,
        k,
    };
    let residual = out.constraint_residual();
    if residual > 1e-9 {
        return Err(Error::Constraint {
            name: "c1^2 = c2 c3".into(),
            residual,
        });
    }
    Ok(out)
}

/// Relative residual of (16k − 2 − 16Ẽ)² = 4(1 + 16B̃)(1 + 16Ã − 16k).
pub fn eigen_condition_residual(k: f64, red: &ReducedRadialParams) -> f64 {
    let lhs = (16.0 * k - 2.0 - 16.0 * red.e_t).powi(2);
    let rhs = 4.0 * (1.0 + 16.0 * red.b_t) * (1.0 + 16.0 * red.a_t - 16.0 * k);
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0)
}

/// A bound radial level with its normalization.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialEigenstate {
    pub n: u32,
    pub gamma_d: f64,
    pub lambda: f64,
    pub energy: f64,
    pub reduced: ReducedRadialParams,
    pub constants: NUConstants,
    pub jacobi_a: f64,
    pub jacobi_b: f64,
    /// Ω_n from quadrature (authoritative).
    pub omega: f64,
    /// Ω_n from the closed-form normalization sum, when it evaluates.
    pub omega_series: Option<f64>,
}

impl RadialEigenstate {
    /// Level n of the (D, l) sector.
    pub fn new(n: u32, l: u32, dim: u32, p: &PotentialParams) -> Result<Self> {
        Self::with_gamma(n, centrifugal_gamma(dim, l), p)
    }

    pub fn with_gamma(n: u32, gamma_d: f64, p: &PotentialParams) -> Result<Self> {
        p.validate()?;
        let window = bound_state_window_gamma(p, gamma_d);
        if !window.a_condition {
            return Err(Error::Inadmissible("A-condition (A~ >= -1/16) violated".into()));
        }
        if !window.b_condition {
            return Err(Error::Inadmissible("B-condition (B~ >= -1/16) violated".into()));
        }
        let mut reduced = ReducedRadialParams::reduce(p, gamma_d, 0.0);
        reduced.e_t = energy_reduced(n, reduced.a_t, reduced.b_t)?;
        let idx = jacobi_indices(n, reduced.a_t, reduced.b_t)?;
        if !(idx.alpha > 0.0) {
            return Err(Error::Inadmissible(format!(
                "level {n}: jacobi index a = {:.6} must be > 0 for a normalizable state",
                idx.alpha
            )));
        }
        let constants = nu_constants(n, &reduced)?;
        let norm = normalization_quadrature(n, idx, p.lambda)?;
        let omega_series = normalization_sum(n, idx.alpha, idx.beta, p.lambda)
            .ok()
            .filter(|v| *v > 0.0 && v.is_finite())
            .map(|v| 1.0 / v.sqrt());
        Ok(Self {
            n,
            gamma_d,
            lambda: p.lambda,
            energy: reduced.to_physical(p, gamma_d).2,
            reduced,
            constants,
            jacobi_a: idx.alpha,
            jacobi_b: idx.beta,
            omega: 1.0 / norm.sqrt(),
            omega_series,
        })
    }

    pub fn jacobi(&self) -> JacobiIndex {
        JacobiIndex::new(self.jacobi_a, self.jacobi_b)
    }

    /// Normalized g_n(r).
    pub fn wavefunction(&self, r: f64) -> f64 {
        self.omega * unnormalized(self.n, self.jacobi(), self.lambda, r)
    }

    pub fn sample(&self, rs: &[f64]) -> Vec<f64> {
        rs.iter().map(|&r| self.wavefunction(r)).collect()
    }
}

/// Normalized g_n(r) of `state`; 0 at r = 0.
pub fn radial_wavefunction(state: &RadialEigenstate, r: f64) -> f64 {
    state.wavefunction(r)
}

/// tanh^{b+½}(λr) sech^{a}(λr) P_n^{(a,b)}(2tanh² − 1).
fn unnormalized(n: u32, idx: JacobiIndex, lambda: f64, r: f64) -> f64 {
    let x = lambda * r;
    if x <= 0.0 {
        return 0.0;
    }
    let t = x.tanh();
    // ln sech x = ln 2 − x − ln(1 + e^{−2x})
    let ln_sech = std::f64::consts::LN_2 - x - (-2.0 * x).exp().ln_1p();
    let env = ((idx.beta + 0.5) * t.ln() + idx.alpha * ln_sech).exp();
    env * jacobi_eval(n, idx, 2.0 * t * t - 1.0)
}

/// ∫₀^∞ [unnormalized g_n]² dr, by quadrature in t = tanh(λr):
/// (1/λ) ∫₀¹ t^{2b+1} (1 − t²)^{a−1} P_n²(2t² − 1) dt.
pub fn normalization_quadrature(n: u32, idx: JacobiIndex, lambda: f64) -> Result<f64> {
    let q = quadrature_endpoints(
        |t, from_lo, to_hi| {
            let one_minus_t2 = to_hi * (1.0 + t);
            let p = jacobi_eval(n, idx, 2.0 * t * t - 1.0);
            from_lo.powf(2.0 * idx.beta + 1.0) * one_minus_t2.powf(idx.alpha - 1.0) * p * p
        },
        0.0,
        1.0,
        200_000,
        1e-13,
    );
    if !q.converged && q.error > 1e-9 * q.value.abs() {
        return Err(Error::NoConvergence(format!(
            "normalization quadrature for level {n} (error {:.3e})",
            q.error
        )));
    }
    Ok(q.value / lambda)
}

/// Λ_n = Ω_n⁻² from the finite sum: expanding one P_n by
/// P_n = 2⁻ⁿ Σ_m (−1)^{n−m} C(n+a, m) C(n+b, n−m) (1−y)^{n−m} (1+y)^m
/// and integrating term by term with [`jacobi_moment`],
///
/// ```text
/// Λ_n = 2^{−a−b−n}/(2λ) Σ_m (−1)^{n−m} C(n+a, m) C(n+b, n−m)
///       ∫₋₁¹ (1−y)^{a−1+n−m} (1+y)^{b+m} P_n^{(a,b)} dy.
/// ```
///
/// Requires a > 0 so every moment converges.
pub fn normalization_sum(n: u32, a: f64, b: f64, lambda: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("normalization sum needs a > 0, got {a}")));
    }
    let idx = JacobiIndex::new(a, b);
    let nf = f64::from(n);
    let mut sum = 0.0;
    for m in 0..=n {
        let mf = f64::from(m);
        let sign = if (n - m).is_multiple_of(2) { 1.0 } else { -1.0 };
        let coef = gen_binomial(nf + a, m) * gen_binomial(nf + b, n - m);
        if coef == 0.0 {
            continue;
        }
        sum += sign * coef * jacobi_moment(n, idx, a - 1.0 + nf - mf, b + mf)?;
    }
    Ok(sum * 2f64.powf(-a - b - nf) / (2.0 * lambda))
}

/// Orthonormalize sampled functions under Σ wᵢ fᵢ gᵢ (modified Gram–Schmidt
/// with one reorthogonalization pass).
///
/// Output i is a combination of inputs 0..=i. An input whose residual norm
/// drops below 1e-12 of its own norm is reported as rank deficient.
pub fn gram_schmidt(states: &[Vec<f64>], weights: &[f64]) -> Result<Vec<Vec<f64>>> {
    let dot = |f: &[f64], g: &[f64]| -> f64 {
        weights.iter().zip(f).zip(g).map(|((w, a), b)| w * a * b).sum()
    };
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(states.len());
    for (index, s) in states.iter().enumerate() {
        if s.len() != weights.len() {
            return Err(Error::DimensionMismatch {
                expected: weights.len(),
                got: s.len(),
            });
        }
        let original = dot(s, s).sqrt();
        let mut v = s.clone();
        for _ in 0..2 {
            for e in &out {
                let c = dot(&v, e);
                v.iter_mut().zip(e).for_each(|(x, y)| *x -= c * y);
            }
        }
        let norm = dot(&v, &v).sqrt();
        if !(norm > 1e-12 * original) || original == 0.0 {
            return Err(Error::RankDeficient { index });
        }
        v.iter_mut().for_each(|x| *x /= norm);
        out.push(v);
    }
    Ok(out)
}

/// Matrix of Σ wᵢ fᵢ gᵢ over all pairs.
pub fn gram_matrix(states: &[Vec<f64>], weights: &[f64]) -> Vec<Vec<f64>> {
    states
        .iter()
        .map(|f| {
            states
                .iter()
                .map(|g| weights.iter().zip(f).zip(g).map(|((w, a), b)| w * a * b).sum())
                .collect()
        })
        .collect()
}

/// Parameters that turn the Pöschl–Teller form into ½mω²r² + ħ²α/(2mr²) as
/// λ → 0, and the constant the energies pick up on the way.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitingMap {
    pub a: f64,
    pub b: f64,
    /// E_PT ≈ E_osc + shift, shift = 2B/3.
    pub shift: f64,
}

/// A = mω²/(2λ²) − ħ²αλ²/(30m), B = ħ²αλ²/(2m).
pub fn limiting_case_map(omega: f64, alpha: f64, lambda: f64, m: f64, hbar: f64) -> Result<LimitingMap> {
    if !(lambda > 0.0) || !(m > 0.0) {
        return Err(Error::Invalid("limiting map needs lambda > 0 and m > 0".into()));
    }
    let h2 = hbar * hbar;
    let l2 = lambda * lambda;
    let b = h2 * alpha * l2 / (2.0 * m);
    Ok(LimitingMap {
        a: m * omega * omega / (2.0 * l2) - h2 * alpha * l2 / (30.0 * m),
        b,
        shift: 2.0 * b / 3.0,
    })
}
