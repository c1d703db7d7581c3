//! Hyperspherical coordinates and the separation constants of the
//! D-dimensional problem.
//!
//! Angles are ordered θ₁ … θ_{D−1}: θ₁ is azimuthal on [0, 2π], every other
//! angle lies in [0, π], and θ_{D−1} is the polar-most angle that carries the
//! ring-shaped term.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun;

/// Quantum numbers of a separated state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuantumNumbers {
    pub dim: u32,
    /// l = l_{D−1}
    pub l: u32,
    /// l₁ ≤ … ≤ l_{D−2}, with l₁ = |m|.
    pub ladder: Vec<u32>,
    /// Radial node count.
    pub n_r: u32,
}

impl QuantumNumbers {
    pub fn new(dim: u32, l: u32, ladder: Vec<u32>, n_r: u32) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Invalid(format!("dimension must be >= 2, got {dim}")));
        }
        let expected = dim.saturating_sub(2) as usize;
        if ladder.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: ladder.len(),
            });
        }
        if ladder.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid("angular ladder must be nondecreasing".into()));
        }
        if ladder.last().is_some_and(|&top| top > l) {
            return Err(Error::Invalid(format!("l_(D-2) exceeds l = {l}")));
        }
        Ok(Self {
            dim,
            l,
            ladder,
            n_r,
        })
    }

    /// |m| = l₁ (zero when D = 2 has no ladder and m is carried by l).
    pub fn m(&self) -> u32 {
        self.ladder.first().copied().unwrap_or(self.l)
    }

    /// Λ_{D−2}, the separation constant entering the θ_{D−1} equation.
    pub fn lambda_top(&self) -> f64 {
        match self.ladder.last() {
            Some(&top) => angular_separation_constant(top, self.dim as i32 - 2),
            None => 0.0,
        }
    }
}

/// γ_D = ((D + 2l − 2)² − 1)/4.
pub fn centrifugal_gamma(dim: u32, l: u32) -> f64 {
    let k = f64::from(dim) + 2.0 * f64::from(l) - 2.0;
    (k * k - 1.0) / 4.0
}

/// Real-l version of [`centrifugal_gamma`], for angular sectors where the
/// ring term makes l non-integer.
pub fn centrifugal_gamma_real(dim: u32, l: f64) -> f64 {
    let k = f64::from(dim) + 2.0 * l - 2.0;
    (k * k - 1.0) / 4.0
}

/// Λ_j = l_j (l_j + j − 1).
pub fn angular_separation_constant(l_j: u32, j: i32) -> f64 {
    let l = f64::from(l_j);
    l * (l + f64::from(j) - 1.0)
}

/// Map (r, θ₁ … θ_{D−1}) to Cartesian (x₁ … x_D).
pub fn to_cartesian(r: f64, angles: &[f64], dim: usize) -> Result<Vec<f64>> {
    if dim < 2 || angles.len() + 1 != dim {
        return Err(Error::DimensionMismatch {
            expected: dim.saturating_sub(1),
            got: angles.len(),
        });
    }
    // tail[j] = Π_{k ≥ j} sin θ_k, in 0-based angle indexing
    let mut tail = vec![1.0; dim];
    for j in (0..dim - 1).rev() {
        tail[j] = tail[j + 1] * angles[j].sin();
    }
    let mut x = Vec::with_capacity(dim);
    x.push(r * angles[0].cos() * tail[1]);
    x.push(r * angles[0].sin() * tail[1]);
    for j in 2..dim {
        x.push(r * angles[j - 1].cos() * tail[j]);
    }
    Ok(x)
}

/// Angular factor of the volume element, Π_{j=1}^{D−1} (sin θ_j)^{j−1}.
pub fn volume_weight(angles: &[f64], dim: usize) -> Result<f64> {
    if angles.len() + 1 != dim {
        return Err(Error::DimensionMismatch {
            expected: dim.saturating_sub(1),
            got: angles.len(),
        });
    }
    Ok(angles
        .iter()
        .enumerate()
        .map(|(j, th)| th.sin().powi(j as i32))
        .product())
}

/// Surface area of the unit (D−1)-sphere, 2π^{D/2}/Γ(D/2).
pub fn sphere_area(dim: u32) -> f64 {
    let half = f64::from(dim) / 2.0;
    let lg = specfun::log_gamma(half).expect("D/2 > 0");
    2.0 * std::f64::consts::PI.powf(half) / lg.ln_abs.exp()
}
