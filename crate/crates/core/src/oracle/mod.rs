//! Independent numerical verification: finite-difference eigensolvers for the
//! radial and angular boundary-value problems, quadrature, and approximation
//! error scans.
//!
//! Nothing here uses the closed-form machinery it is meant to check.

mod pekeris;
pub mod quadrature;
pub mod tridiag;

use serde::Serialize;

use crate::angular::RingParams;
use crate::error::{Error, Result};

pub use pekeris::{pekeris_error_scan, Crossing, PekerisScan};
pub use quadrature::{quadrature, quadrature_endpoints, QuadResult};
pub use tridiag::EigenOptions;

/// λ·r_max used when no override is given.
pub const DEFAULT_RMAX_FACTOR: f64 = 20.0;
/// Grid size used when no override is given.
pub const DEFAULT_GRID_POINTS: usize = 4000;

/// Uniform grid including both end points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
    pub spacing: f64,
}

impl Grid {
    pub fn uniform(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if n_points < 3 {
            return Err(Error::Invalid(format!("grid needs >= 3 points, got {n_points}")));
        }
        if !(x_max > x_min) {
            return Err(Error::Invalid(format!("empty grid [{x_min}, {x_max}]")));
        }
        Ok(Self {
            x_min,
            x_max,
            n_points,
            spacing: (x_max - x_min) / (n_points - 1) as f64,
        })
    }

    /// Radial default: (0, r_max_factor/λ] with `n_points` points.
    pub fn radial(lambda: f64, rmax_factor: f64, n_points: usize) -> Result<Self> {
        Self::uniform(0.0, rmax_factor / lambda, n_points)
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.x_max
        } else {
            self.x_min + i as f64 * self.spacing
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }

    /// Same interval with the spacing halved.
    pub fn halved(&self) -> Self {
        Self {
            n_points: 2 * self.n_points - 1,
            spacing: self.spacing / 2.0,
            ..self.clone()
        }
    }
}

/// Eigenpairs computed by a finite-difference solve.
#[derive(Debug, Clone, Serialize)]
pub struct NumericSpectrum {
    pub eigenvalues: Vec<f64>,
    /// One sampled function per eigenvalue, on `grid`, normalized under the
    /// measure of its problem.
    pub eigenvectors: Vec<Vec<f64>>,
    pub grid: Grid,
    /// ‖T v − λ v‖ of the symmetric matrix problem.
    pub residual_norms: Vec<f64>,
    pub warnings: Vec<String>,
}

fn orient(v: &mut [f64]) {
    let peak = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-3 * peak) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// Lowest `count` levels of −(ħ²/2μ) g'' + V(r) g = E g with g = 0 at both
/// grid ends (3-point Laplacian). `kinetic` is ħ²/2μ.
///
/// Eigenvectors are sampled on the full grid (zero end values) and normalized
/// to ∫ g² dr = 1.
pub fn radial_solve<V>(potential: V, grid: &Grid, count: usize, kinetic: f64) -> Result<NumericSpectrum>
where
    V: Fn(f64) -> f64 + Sync,
{
    radial_solve_with(potential, grid, count, kinetic, &EigenOptions::default())
}

pub fn radial_solve_with<V>(
    potential: V,
    grid: &Grid,
    count: usize,
    kinetic: f64,
    opts: &EigenOptions,
) -> Result<NumericSpectrum>
where
    V: Fn(f64) -> f64 + Sync,
{
    let h = grid.spacing;
    let interior: Vec<f64> = (1..grid.n_points - 1).map(|i| grid.point(i)).collect();
    let mut diag = Vec::with_capacity(interior.len());
    for &r in &interior {
        let v = potential(r);
        if !v.is_finite() {
            return Err(Error::Domain(format!("potential is not finite at r = {r}")));
        }
        diag.push(2.0 * kinetic / (h * h) + v);
    }
    let off = vec![-kinetic / (h * h); interior.len().saturating_sub(1)];
    let (values, vectors, residuals) = tridiag::lowest_eigenpairs(&diag, &off, count, opts)?;
    let scale = 1.0 / h.sqrt();
    let eigenvectors = vectors
        .into_iter()
        .map(|v| {
            let mut full = Vec::with_capacity(grid.n_points);
            full.push(0.0);
            full.extend(v.iter().map(|x| x * scale));
            full.push(0.0);
            orient(&mut full);
            full
        })
        .collect();
    finish(values, eigenvectors, grid.clone(), residuals)
}

fn finish(
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<f64>>,
    grid: Grid,
    residual_norms: Vec<f64>,
) -> Result<NumericSpectrum> {
    let mut warnings = Vec::new();
    if eigenvalues.windows(2).any(|w| !(w[0] < w[1])) {
        warnings.push("eigenvalues not strictly increasing (degenerate or unresolved levels)".into());
    }
    let scale = eigenvalues.iter().fold(1.0f64, |m, e| m.max(e.abs()));
    if residual_norms.iter().any(|r| *r > 1e-8 * scale) {
        warnings.push("eigenvector residual above 1e-8 relative".into());
    }
    Ok(NumericSpectrum {
        eigenvalues,
        eigenvectors,
        grid,
        residual_norms,
        warnings,
    })
}

/// Lowest `count` eigenvalues L = l(l+D−2) of the θ_{D−1} equation
///
/// ```text
/// −(sinθ)^{−p} d/dθ[(sinθ)^p dH/dθ] + [Λ − U(cosθ)(1 − cos²θ)]/sin²θ · H = L H,  p = D − 2,
/// ```
///
/// with U(y) = (γ′y² + ζ′y + κ′)/(1 − y²).
///
/// Near θ = 0 the potential is c₀/θ² with c₀ = Λ − γ′ − ζ′ − κ′, so H goes
/// like θ^{s₀} with s₀ the larger root of s(s − 1) + p s = c₀ (likewise s_π
/// at θ = π with c_π = Λ − γ′ + ζ′ − κ′). Writing H = w F with
/// w = sin(θ/2)^{s₀} cos(θ/2)^{s_π} cancels both inverse-square terms exactly:
///
/// ```text
/// −(ρ)^{−1} d/dθ[ρ dF/dθ] + V F = L F,  ρ = (sinθ)^p w²,
/// V = (c₀ + c_π)/4 + γ′ + (s₀ + s_π)(p + 1)/4 + s₀ s_π/2,
/// ```
///
/// so F is smooth and the scheme keeps second order even when the exponents
/// are fractional. A negative indicial discriminant (an attractive pole
/// stronger than the critical inverse square) is a domain error.
///
/// `faces` spans [0, π]; unknowns sit at the cell centres between faces and
/// the flux vanishes at both poles. The ρ^{1/2} similarity transform makes
/// the matrix symmetric tridiagonal. Eigenvectors H are sampled at the cell
/// centres and normalized to ∫ H² (sinθ)^{D−2} dθ = 1.
pub fn angular_solve(
    ring: &RingParams,
    dim: u32,
    lam: f64,
    faces: &Grid,
    count: usize,
) -> Result<NumericSpectrum> {
    angular_solve_with(ring, dim, lam, faces, count, &EigenOptions::default())
}

pub fn angular_solve_with(
    ring: &RingParams,
    dim: u32,
    lam: f64,
    faces: &Grid,
    count: usize,
    opts: &EigenOptions,
) -> Result<NumericSpectrum> {
    if dim < 2 {
        return Err(Error::Invalid(format!("dimension must be >= 2, got {dim}")));
    }
    let p = f64::from(dim) - 2.0;
    let exponent = |c: f64, side: &str| -> Result<f64> {
        let disc = (p - 1.0).powi(2) + 4.0 * c;
        if disc < 0.0 {
            return Err(Error::Domain(format!(
                "pole at theta = {side}: indicial discriminant {disc} < 0"
            )));
        }
        Ok((1.0 - p + disc.sqrt()) / 2.0)
    };
    let c0 = lam - ring.gamma_p - ring.zeta_p - ring.kappa_p;
    let cpi = lam - ring.gamma_p + ring.zeta_p - ring.kappa_p;
    let (s0, spi) = (exponent(c0, "0")?, exponent(cpi, "pi")?);
    let shift = (c0 + cpi) / 4.0 + ring.gamma_p + (s0 + spi) * (p + 1.0) / 4.0 + s0 * spi / 2.0;
    let w = |t: f64| (0.5 * t).sin().powf(s0) * (0.5 * t).cos().powf(spi);
    let rho = |t: f64| t.sin().powf(p) * w(t).powi(2);

    let h = faces.spacing;
    let cells = faces.n_points - 1;
    let centres: Vec<f64> = (0..cells).map(|i| faces.x_min + (i as f64 + 0.5) * h).collect();
    let mass: Vec<f64> = centres.iter().map(|&t| rho(t)).collect();
    let flux: Vec<f64> = (1..cells).map(|i| rho(faces.point(i))).collect();
    let diag: Vec<f64> = (0..cells)
        .map(|i| {
            let left = if i > 0 { flux[i - 1] } else { 0.0 };
            let right = if i + 1 < cells { flux[i] } else { 0.0 };
            (left + right) / (h * h * mass[i]) + shift
        })
        .collect();
    let off: Vec<f64> = (0..cells - 1)
        .map(|i| -flux[i] / (h * h * (mass[i] * mass[i + 1]).sqrt()))
        .collect();
    let (values, vectors, residuals) = tridiag::lowest_eigenpairs(&diag, &off, count, opts)?;
    let eigenvectors = vectors
        .into_iter()
        .map(|u| {
            let mut hv: Vec<f64> = u
                .iter()
                .zip(&mass)
                .zip(&centres)
                .map(|((ui, m), &t)| ui * w(t) / (m * h).sqrt())
                .collect();
            orient(&mut hv);
            hv
        })
        .collect();
    let grid = Grid::uniform(centres[0], centres[cells - 1], cells)?;
    finish(values, eigenvectors, grid, residuals)
}

/// A solve repeated at h, h/2 and h/4. The extrapolated value uses the
/// observed convergence order p = log₂((E_h − E_{h/2})/(E_{h/2} − E_{h/4})),
/// E ≈ E_{h/4} + (E_{h/4} − E_{h/2})/(2^p − 1); near a pole the eigenfunction
/// goes like a fractional power and p drops below 2. When the differences are
/// not monotone (round-off level) the second-order estimate is used.
#[derive(Debug, Clone, Serialize)]
pub struct Refined {
    pub coarse: NumericSpectrum,
    pub fine: NumericSpectrum,
    pub finest: NumericSpectrum,
    /// Observed order per level (NaN where the fallback was used).
    pub orders: Vec<f64>,
    pub extrapolated: Vec<f64>,
    pub warnings: Vec<String>,
}

fn extrapolate(c: f64, f: f64, ff: f64) -> (f64, f64) {
    let (d1, d2) = (f - c, ff - f);
    let ratio = d1 / d2;
    if d2 != 0.0 && ratio.is_finite() && ratio > 1.2 && ratio < 64.0 {
        (ff + d2 / (ratio - 1.0), ratio.log2())
    } else {
        ((4.0 * ff - f) / 3.0, f64::NAN)
    }
}

/// Solve on `grid` and two successive halvings; warn when the last halving
/// moves an eigenvalue by more than 10×`tolerance` (relative).
pub fn refine<S>(solve: S, grid: &Grid, tolerance: f64) -> Result<Refined>
where
    S: Fn(&Grid) -> Result<NumericSpectrum>,
{
    let half = grid.halved();
    let coarse = solve(grid)?;
    let fine = solve(&half)?;
    let finest = solve(&half.halved())?;
    let mut warnings = Vec::new();
    let mut orders = Vec::new();
    let mut extrapolated = Vec::new();
    for (k, ((c, f), ff)) in coarse
        .eigenvalues
        .iter()
        .zip(&fine.eigenvalues)
        .zip(&finest.eigenvalues)
        .enumerate()
    {
        let shift = (ff - f).abs() / ff.abs().max(1e-300);
        if shift > 10.0 * tolerance {
            warnings.push(format!(
                "grid too coarse: level {k} moved by {shift:.3e} (relative) on halving"
            ));
        }
        let (e, p) = extrapolate(*c, *f, *ff);
        extrapolated.push(e);
        orders.push(p);
    }
    Ok(Refined {
        coarse,
        fine,
        finest,
        orders,
        extrapolated,
        warnings,
    })
}

/// Sign changes of a sampled function, ignoring samples below `floor`
/// times the peak magnitude.
pub fn count_nodes(values: &[f64], floor: f64) -> usize {
    let peak = values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut last = 0.0f64;
    let mut nodes = 0;
    for &v in values {
        if v.abs() <= floor * peak {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            nodes += 1;
        }
        last = v;
    }
    nodes
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn grid_invariants() {
        let g = Grid::uniform(0.0, 1.0, 11).unwrap();
        assert!((g.spacing - 0.1).abs() < 1e-15);
        assert_eq!(g.point(10), 1.0);
        assert!(Grid::uniform(0.0, 1.0, 2).is_err());
        assert!(Grid::uniform(1.0, 1.0, 5).is_err());
        let h = g.halved();
        assert_eq!(h.n_points, 21);
        assert!((h.point(2) - g.point(1)).abs() < 1e-15);
    }

    #[test]
    fn infinite_well() {
        let g = Grid::uniform(0.0, 1.0, 4000).unwrap();
        let s = radial_solve(|_| 0.0, &g, 3, 0.5).unwrap();
        for (k, e) in s.eigenvalues.iter().enumerate() {
            let n = (k + 1) as f64;
            let exact = n * n * PI * PI / 2.0;
            assert!(((e - exact) / exact).abs() < 1e-4);
        }
        for (k, v) in s.eigenvectors.iter().enumerate() {
            assert_eq!(count_nodes(v, 1e-9), k);
        }
    }

    #[test]
    fn harmonic_oscillator() {
        let g = Grid::uniform(-12.0, 12.0, 4000).unwrap();
        let s = radial_solve(|x| 0.5 * x * x, &g, 4, 0.5).unwrap();
        for (k, e) in s.eigenvalues.iter().enumerate() {
            assert!((e - (k as f64 + 0.5)).abs() < 5e-5, "{k}: {e}");
        }
        let r = refine(|g| radial_solve(|x| 0.5 * x * x, g, 4, 0.5), &g, 1e-6).unwrap();
        for (k, e) in r.extrapolated.iter().enumerate() {
            assert!((e - (k as f64 + 0.5)).abs() < 1e-6, "{k}: {e}");
        }
    }

    #[test]
    fn eigenvectors_are_normalized() {
        let g = Grid::uniform(-10.0, 10.0, 2001).unwrap();
        let s = radial_solve(|x| 0.5 * x * x, &g, 3, 0.5).unwrap();
        for v in &s.eigenvectors {
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>() * g.spacing;
            assert!((norm - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn non_finite_potential_rejected() {
        let g = Grid::uniform(-1.0, 1.0, 5).unwrap();
        assert!(radial_solve(|x| 1.0 / x, &g, 1, 0.5).is_err());
    }

    #[test]
    fn free_angular_spectrum() {
        let faces = Grid::uniform(0.0, PI, 4001).unwrap();
        for dim in [3u32, 4] {
            let s = angular_solve(&RingParams::zero(), dim, 0.0, &faces, 3).unwrap();
            for (l, e) in s.eigenvalues.iter().enumerate() {
                let lf = l as f64;
                let exact = lf * (lf + f64::from(dim) - 2.0);
                assert!((e - exact).abs() < 1e-5, "D = {dim}, l = {l}: {e}");
            }
        }
    }

    #[test]
    fn node_counting() {
        assert_eq!(count_nodes(&[0.0, 1.0, 2.0, -1.0, 0.0, 3.0], 1e-6), 2);
        assert_eq!(count_nodes(&[1.0, 1e-12, -1e-12, 1.0], 1e-6), 0);
    }
}
