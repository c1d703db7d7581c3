//! Symmetric tridiagonal eigenproblems: Sturm-sequence bisection for the
//! eigenvalues, inverse iteration for the vectors.

use crate::error::{Error, Result};
use crate::exec::Execution;

/// Iteration caps for the tridiagonal eigensolver.
#[derive(Debug, Clone, Copy)]
pub struct EigenOptions {
    pub bisection_steps: u32,
    pub inverse_steps: u32,
    pub execution: Execution,
}

impl Default for EigenOptions {
    fn default() -> Self {
        Self {
            bisection_steps: 100,
            inverse_steps: 20,
            execution: Execution::default(),
        }
    }
}

/// Number of eigenvalues strictly below `x` (count of negative LDLᵀ pivots).
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let coupling = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] / q };
        q = diag[i] - x - coupling;
        if q == 0.0 {
            q = -f64::EPSILON * (diag[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
pub fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo, hi)
}

/// The k-th smallest eigenvalue (0-based) by bisection.
pub fn kth_eigenvalue(diag: &[f64], off: &[f64], k: usize, steps: u32) -> f64 {
    let (mut lo, mut hi) = gershgorin(diag, off);
    let pad = f64::EPSILON * lo.abs().max(hi.abs()).max(1.0);
    lo -= pad;
    hi += pad;
    for _ in 0..steps {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diag, off, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solve (T − shift·I) x = rhs by Gaussian elimination with partial pivoting.
fn shifted_solve(diag: &[f64], off: &[f64], shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let tiny = f64::EPSILON * gershgorin(diag, off).1.abs().max(1.0);
    // Rows of the factored matrix: main, first and second super-diagonal.
    let mut d: Vec<f64> = diag.iter().map(|v| v - shift).collect();
    let mut du: Vec<f64> = off.to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let dl = off;
    let mut b = rhs.to_vec();
    for i in 0..n.saturating_sub(1) {
        if d[i].abs() >= dl[i].abs() {
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let f = dl[i] / d[i];
            d[i + 1] -= f * du[i];
            b[i + 1] -= f * b[i];
        } else {
            // Swap rows i and i+1.
            let f = d[i] / dl[i];
            d[i] = dl[i];
            let tmp = d[i + 1];
            d[i + 1] = du[i] - f * tmp;
            du[i] = tmp;
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] *= -f;
            }
            b.swap(i, i + 1);
            b[i + 1] -= f * b[i];
        }
    }
    if n > 0 && d[n - 1] == 0.0 {
        d[n - 1] = tiny;
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = b[i];
        if i + 1 < n {
            s -= du[i] * x[i + 1];
        }
        if i + 2 < n {
            s -= du2[i] * x[i + 2];
        }
        x[i] = s / d[i];
    }
    x
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// ‖T v − λ v‖₂ for a unit vector v.
pub fn residual_norm(diag: &[f64], off: &[f64], lambda: f64, v: &[f64]) -> f64 {
    let n = diag.len();
    let mut acc = 0.0;
    for i in 0..n {
        let mut tv = diag[i] * v[i];
        if i > 0 {
            tv += off[i - 1] * v[i - 1];
        }
        if i + 1 < n {
            tv += off[i] * v[i + 1];
        }
        let r = tv - lambda * v[i];
        acc += r * r;
    }
    acc.sqrt()
}

/// Unit eigenvector for an (accurate) eigenvalue by inverse iteration.
pub fn inverse_iteration(diag: &[f64], off: &[f64], lambda: f64, steps: u32) -> Vec<f64> {
    let n = diag.len();
    let scale = gershgorin(diag, off).1.abs().max(lambda.abs()).max(1.0);
    let shift = lambda + 4.0 * f64::EPSILON * scale;
    // Deterministic, non-symmetric start so no eigenvector is orthogonal to it.
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i % 7) as f64)).collect();
    let nv = norm(&v);
    v.iter_mut().for_each(|x| *x /= nv);
    let mut best = f64::INFINITY;
    for _ in 0..steps.max(1) {
        let mut w = shifted_solve(diag, off, shift, &v);
        let nw = norm(&w);
        if !(nw.is_finite() && nw > 0.0) {
            break;
        }
        w.iter_mut().for_each(|x| *x /= nw);
        let r = residual_norm(diag, off, lambda, &w);
        if r >= best {
            break;
        }
        best = r;
        v = w;
        if r <= 1e-14 * scale {
            break;
        }
    }
    v
}

/// (eigenvalues, unit eigenvectors, residual norms).
pub type Eigenpairs = (Vec<f64>, Vec<Vec<f64>>, Vec<f64>);

/// Lowest `count` eigenpairs.
pub fn lowest_eigenpairs(diag: &[f64], off: &[f64], count: usize, opts: &EigenOptions) -> Result<Eigenpairs> {
    if off.len() + 1 != diag.len() {
        return Err(Error::Invalid("off-diagonal length must be n - 1".into()));
    }
    if count > diag.len() {
        return Err(Error::Invalid(format!(
            "asked for {count} eigenpairs of a {}x{} matrix",
            diag.len(),
            diag.len()
        )));
    }
    let values = opts
        .execution
        .map_range(count, |k| kth_eigenvalue(diag, off, k, opts.bisection_steps));
    let vectors = opts
        .execution
        .map(&values, |&lam| inverse_iteration(diag, off, lam, opts.inverse_steps));
    let residuals: Vec<f64> = values
        .iter()
        .zip(&vectors)
        .map(|(&lam, v)| residual_norm(diag, off, lam, v))
        .collect();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NoConvergence("non-finite eigenvalue".into()));
    }
    Ok((values, vectors, residuals))
}
