//! Classical special functions: Jacobi polynomials, log-gamma, real-argument
//! binomials and the terminating ₃F₂ at unit argument.

use serde::Serialize;

use crate::error::{Error, Result};

/// Jacobi parameter pair (α, β) for P_n^{(α,β)}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobiIndex {
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiIndex {
    pub fn new(alpha: f64, beta: f64) -> Self {
        Self { alpha, beta }
    }

    /// α > −1 and β > −1, required for orthogonality and normalization.
    pub fn is_admissible(&self) -> bool {
        self.alpha > -1.0 && self.beta > -1.0
    }

    fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "Jacobi index ({}, {}) needs alpha > -1 and beta > -1",
                self.alpha, self.beta
            )))
        }
    }
}

/// P_n^{(α,β)}(y) by the three-term recurrence in n.
///
/// Falls back to the explicit binomial sum when a recurrence coefficient
/// vanishes (α + β a small negative integer).
pub fn jacobi_eval(n: u32, idx: JacobiIndex, y: f64) -> f64 {
    let (a, b) = (idx.alpha, idx.beta);
    if n == 0 {
        return 1.0;
    }
    let p1 = (a + 1.0) + (a + b + 2.0) * (y - 1.0) / 2.0;
    if n == 1 {
        return p1;
    }
    let mut prev = 1.0;
    let mut cur = p1;
    for k in 2..=n {
        let k = f64::from(k);
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        if c1 == 0.0 {
            return jacobi_sum_identity(n, idx, y);
        }
        let c2 = (s - 1.0) * (a * a - b * b);
        let c3 = (s - 2.0) * (s - 1.0) * s;
        let c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = ((c2 + c3 * y) * cur - c4 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// P_n^{(a,b)}(y) = 2⁻ⁿ Σ_m C(n+a, m) C(n+b, n−m) (y−1)^{n−m} (y+1)^m.
///
/// Independent of the recurrence; used as a cross-check and as the fallback
/// for degenerate parameter pairs.
pub fn jacobi_sum_identity(n: u32, idx: JacobiIndex, y: f64) -> f64 {
    let nf = f64::from(n);
    let mut sum = 0.0;
    for m in 0..=n {
        let c = gen_binomial(nf + idx.alpha, m) * gen_binomial(nf + idx.beta, n - m);
        sum += c * (y - 1.0).powi((n - m) as i32) * (y + 1.0).powi(m as i32);
    }
    sum / 2f64.powi(n as i32)
}

/// k-th derivative of P_n^{(α,β)} via
/// dᵏ/dyᵏ P_n^{(α,β)} = (n+α+β+1)_k / 2ᵏ · P_{n−k}^{(α+k, β+k)}.
pub fn jacobi_derivative(n: u32, idx: JacobiIndex, y: f64, order: u32) -> f64 {
    if order > n {
        return 0.0;
    }
    let nf = f64::from(n);
    let scale = pochhammer(nf + idx.alpha + idx.beta + 1.0, order) / 2f64.powi(order as i32);
    let shifted = JacobiIndex::new(idx.alpha + f64::from(order), idx.beta + f64::from(order));
    scale * jacobi_eval(n - order, shifted, y)
}

/// Natural log of |Γ(x)| with the sign of Γ(x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGamma {
    pub ln_abs: f64,
    pub sign: f64,
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// sin(πx) with argument reduction so large |x| keeps full accuracy.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).floor();
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    (std::f64::consts::PI * r).sin()
}

/// ln|Γ(x)| (Lanczos, g = 7) with reflection below 1/2.
pub fn log_gamma(x: f64) -> Result<LogGamma> {
    if x.is_nan() || is_pole(x) {
        return Err(Error::Pole(format!("Gamma({x})")));
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let rest = log_gamma(1.0 - x)?;
        return Ok(LogGamma {
            ln_abs: std::f64::consts::PI.ln() - s.abs().ln() - rest.ln_abs,
            sign: s.signum(),
        });
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let ln_abs = 0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln();
    Ok(LogGamma { ln_abs, sign: 1.0 })
}

pub fn gamma(x: f64) -> Result<f64> {
    let lg = log_gamma(x)?;
    Ok(lg.sign * lg.ln_abs.exp())
}

/// Rising factorial (x)_k = x(x+1)…(x+k−1).
pub fn pochhammer(x: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (x + f64::from(i)))
}

/// Binomial coefficient with real upper argument,
/// top·(top−1)…(top−k+1)/k!.
pub fn gen_binomial(top: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (top - f64::from(i)) / f64::from(i + 1);
    }
    acc
}

/// ₃F₂(−n, p2, p3; q1, q2; 1) as the exact finite sum of n+1 terms.
///
/// Each term is built from the previous one by its ratio. The parameter pairs
/// are put in a canonical order first, so swapping p2↔p3 or q1↔q2 returns a
/// bit-identical value.
pub fn hyp3f2_terminating(n: u32, p2: f64, p3: f64, q1: f64, q2: f64) -> Result<f64> {
    let (p2, p3) = if p2.total_cmp(&p3).is_le() { (p2, p3) } else { (p3, p2) };
    let (q1, q2) = if q1.total_cmp(&q2).is_le() { (q1, q2) } else { (q2, q1) };
    let nf = f64::from(n);
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..n {
        let jf = f64::from(j);
        let num = (jf - nf) * (p2 + jf) * (p3 + jf);
        if num == 0.0 {
            break;
        }
        let den = (q1 + jf) * (q2 + jf) * (jf + 1.0);
        if den == 0.0 {
            return Err(Error::Pole(format!(
                "3F2 denominator vanishes at term {} (q1 = {q1}, q2 = {q2})",
                j + 1
            )));
        }
        term *= num / den;
        sum += term;
    }
    Ok(sum)
}

/// Self-overlap ∫₋₁¹ (1−y)^α (1+y)^β [P_n^{(α,β)}]² dy
/// = 2^{α+β+1}/(2n+α+β+1) · Γ(n+α+1)Γ(n+β+1) / (Γ(n+α+β+1) n!).
pub fn jacobi_norm(n: u32, idx: JacobiIndex) -> Result<f64> {
    idx.require_admissible()?;
    let (a, b) = (idx.alpha, idx.beta);
    let nf = f64::from(n);
    let pow = (a + b + 1.0) * std::f64::consts::LN_2;
    if n == 0 {
        // (2n+α+β+1)Γ(n+α+β+1) collapses to Γ(α+β+2); avoids the α+β = −1 pole.
        let ln = pow + log_gamma(a + 1.0)?.ln_abs + log_gamma(b + 1.0)?.ln_abs
            - log_gamma(a + b + 2.0)?.ln_abs;
        return Ok(ln.exp());
    }
    let ln = pow - (2.0 * nf + a + b + 1.0).ln()
        + log_gamma(nf + a + 1.0)?.ln_abs
        + log_gamma(nf + b + 1.0)?.ln_abs
        - log_gamma(nf + a + b + 1.0)?.ln_abs
        - log_gamma(nf + 1.0)?.ln_abs;
    Ok(ln.exp())
}

/// ∫₋₁¹ (1−y)^c (1+y)^d P_n^{(a,b)}(y) dy in closed form:
///
/// 2^{c+d+1} Γ(c+1)Γ(d+1)Γ(n+a+1) / (Γ(n+1)Γ(c+d+2)Γ(a+1))
///   · ₃F₂(−n, n+a+b+1, c+1; a+1, c+d+2; 1).
///
/// Only valid for c, d > −1 (the integral diverges otherwise).
pub fn jacobi_moment(n: u32, idx: JacobiIndex, c: f64, d: f64) -> Result<f64> {
    if !(c > -1.0 && d > -1.0) {
        return Err(Error::Domain(format!(
            "moment exponents need c > -1 and d > -1, got c = {c}, d = {d}"
        )));
    }
    let nf = f64::from(n);
    let (a, b) = (idx.alpha, idx.beta);
    let beta_part = ((c + d + 1.0) * std::f64::consts::LN_2 + log_gamma(c + 1.0)?.ln_abs
        + log_gamma(d + 1.0)?.ln_abs
        - log_gamma(c + d + 2.0)?.ln_abs)
        .exp();
    let lead = pochhammer(a + 1.0, n) / pochhammer(1.0, n);
    let f = hyp3f2_terminating(n, nf + a + b + 1.0, c + 1.0, a + 1.0, c + d + 2.0)?;
    Ok(beta_part * lead * f)
}
