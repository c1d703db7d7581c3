//! Closed forms for the four ring-term patterns:
//!
//! 1. γ′ = ζ′ = 0 (pure κ′ csc²θ)
//! 2. γ′ = ±ζ′
//! 3. ζ′ = 0 (γ′ = −κ′ removes the ring term and leaves a pseudo-centrifugal κ/r²)
//! 4. γ′ = 0, κ′ = ±ζ′
//!
//! Each builds the solution from its own reduced expressions for η's, k and
//! u₀, and must agree with [`general_solution`](super::general_solution).
//! The commonly quoted forms differ from these in three places;
//! [`printed_variant`] evaluates those for comparison.

use serde::Serialize;

use super::{pick, require_dim, AngularSolution, Etas, RingParams};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Case {
    One,
    /// `upper`: γ′ = +ζ′.
    Two { upper: bool },
    Three,
    /// `upper`: κ′ = +ζ′.
    Four { upper: bool },
}

impl Case {
    pub fn all() -> [Case; 6] {
        [
            Case::One,
            Case::Two { upper: true },
            Case::Two { upper: false },
            Case::Three,
            Case::Four { upper: true },
            Case::Four { upper: false },
        ]
    }

    pub fn number(self) -> u32 {
        match self {
            Case::One => 1,
            Case::Two { .. } => 2,
            Case::Three => 3,
            Case::Four { .. } => 4,
        }
    }

    fn sign(self) -> f64 {
        match self {
            Case::Two { upper: false } | Case::Four { upper: false } => -1.0,
            _ => 1.0,
        }
    }

    /// Whether `ring` has this pattern (to 1e-12).
    pub fn matches(self, ring: &RingParams) -> bool {
        let eq = |a: f64, b: f64| (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()));
        match self {
            Case::One => eq(ring.gamma_p, 0.0) && eq(ring.zeta_p, 0.0),
            Case::Two { .. } => eq(ring.gamma_p, self.sign() * ring.zeta_p),
            Case::Three => eq(ring.zeta_p, 0.0),
            Case::Four { .. } => eq(ring.gamma_p, 0.0) && eq(ring.kappa_p, self.sign() * ring.zeta_p),
        }
    }

    /// A ring with this pattern built from free parameters (s, t).
    pub fn ring(self, s: f64, t: f64) -> RingParams {
        match self {
            Case::One => RingParams::new(0.0, 0.0, t),
            Case::Two { .. } => RingParams::new(self.sign() * s, s, t),
            Case::Three => RingParams::new(s, 0.0, t),
            Case::Four { .. } => RingParams::new(0.0, s, self.sign() * s),
        }
    }
}

/// Case-specific reduced forms: (η₀, η₁, η₂) and the term entering
/// u₀ = √((D−3)²/4 + shift − k).
fn reduced(case: Case, ring: &RingParams, big_l: f64, lam: f64) -> (Etas, f64) {
    let z = ring.zeta_p;
    match case {
        Case::One => (
            Etas {
                eta0: ring.kappa_p + big_l - lam,
                eta1: 0.0,
                eta2: -big_l,
            },
            big_l,
        ),
        Case::Two { .. } => {
            let s = case.sign();
            (
                Etas {
                    eta0: ring.kappa_p + big_l - lam,
                    eta1: z,
                    eta2: s * z - big_l,
                },
                -s * z + big_l,
            )
        }
        Case::Three => (
            Etas {
                eta0: ring.kappa_p + big_l - lam,
                eta1: 0.0,
                eta2: ring.gamma_p - big_l,
            },
            -ring.gamma_p + big_l,
        ),
        Case::Four { .. } => (
            Etas {
                eta0: case.sign() * z + big_l - lam,
                eta1: z,
                eta2: -big_l,
            },
            big_l,
        ),
    }
}

/// Case-specific k roots:
/// 8k = (D−3)² + 4η₀ + 4·shift ± √(((D−3)² + 4η₀ + 4·shift)² − 16(η₁² + η₀((D−3)² + 4·shift))),
/// with shift = −η₂ written out per case.
fn k_roots(etas: &Etas, shift: f64, d: f64) -> Result<(f64, f64)> {
    let base = (d - 3.0).powi(2) + 4.0 * shift;
    let x = base + 4.0 * etas.eta0;
    let rad = x * x - 16.0 * (etas.eta1.powi(2) + etas.eta0 * base);
    if rad < 0.0 {
        return Err(Error::Domain(format!("k radicand {rad} is negative")));
    }
    Ok(((x + rad.sqrt()) / 8.0, (x - rad.sqrt()) / 8.0))
}

fn build(dim: u32, n: u32, l: f64, lam: f64, etas: Etas, shift: f64, k: f64) -> Result<AngularSolution> {
    let d = f64::from(dim);
    let rad = (d - 3.0).powi(2) / 4.0 + shift - k;
    if rad < 0.0 {
        return Err(Error::Domain(format!("u0 radicand {rad} is negative")));
    }
    let u0 = rad.sqrt();
    let u2 = if etas.eta1 == 0.0 {
        0.0
    } else if u0 == 0.0 {
        return Err(Error::Domain("u0 = 0 with eta1 != 0".into()));
    } else {
        etas.eta1 / (2.0 * u0)
    };
    Ok(AngularSolution {
        dim,
        n,
        l,
        lam,
        etas,
        k,
        u0,
        u1: (d - 3.0 - 2.0 * u0) / 2.0,
        u2,
    })
}

/// Solution at (l, Λ, n) from the reduced forms of `case`.
pub fn specialize(case: Case, ring: &RingParams, dim: u32, l: f64, lam: f64, n: u32) -> Result<AngularSolution> {
    let d = require_dim(dim)?;
    if !case.matches(ring) {
        return Err(Error::PatternMismatch(format!(
            "ring ({}, {}, {}) is not case {}",
            ring.gamma_p,
            ring.zeta_p,
            ring.kappa_p,
            case.number()
        )));
    }
    let big_l = l * (l + d - 2.0);
    let (etas, shift) = reduced(case, ring, big_l, lam);
    let (kp, km) = k_roots(&etas, shift, d)?;
    pick(&[
        build(dim, n, l, lam, etas, shift, kp),
        build(dim, n, l, lam, etas, shift, km),
    ])
}

/// True when γ′ = −κ′ in case 3: the angular ring term vanishes and κ′ only
/// shifts the Casimir, L → L − κ′ (a pseudo-centrifugal κ/r² term).
pub fn is_pseudo_centrifugal(ring: &RingParams) -> bool {
    ring.zeta_p == 0.0 && (ring.gamma_p + ring.kappa_p).abs() <= 1e-12 * (1.0 + ring.kappa_p.abs())
}

/// The commonly quoted form of a case, evaluated next to the consistent one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrintedVariant {
    pub case: u32,
    /// What differs, in words.
    pub note: &'static str,
    /// u₀ of the quoted form with the consistent k, if real.
    pub u0_printed: Option<f64>,
    pub u0: f64,
    /// η₁ of the quoted form.
    pub eta1_printed: f64,
    pub eta1: f64,
    /// Whether the quoted form reproduces the consistent solution to 1e-9.
    pub agrees: bool,
}

pub fn printed_variant(case: Case, ring: &RingParams, dim: u32, l: f64, lam: f64, n: u32) -> Result<PrintedVariant> {
    let sol = specialize(case, ring, dim, l, lam, n)?;
    let d = f64::from(dim);
    let big_l = l * (l + d - 2.0);
    let base = (d - 3.0).powi(2) / 4.0;
    let z = ring.zeta_p;
    let (note, rad, eta1_printed) = match case {
        Case::One => ("as quoted", base + big_l - sol.k, 0.0),
        Case::Two { upper: true } => ("as quoted", base - (z - big_l) - sol.k, z),
        Case::Two { upper: false } => (
            "quoted u0 radicand has +(zeta' - L); consistent form is +zeta' + L",
            base + (z - big_l) - sol.k,
            z,
        ),
        Case::Three => (
            "quoted u0 radicand has +k; consistent form is -k",
            base - ring.gamma_p + big_l + sol.k,
            0.0,
        ),
        Case::Four { upper } => (
            if upper {
                "as quoted"
            } else {
                "quoted eta1 = -zeta'; the zeta' cot csc term fixes eta1 = +zeta'"
            },
            base + big_l - sol.k,
            case.sign() * z,
        ),
    };
    let u0_printed = (rad >= 0.0).then(|| rad.sqrt());
    let agrees = u0_printed.is_some_and(|u| (u - sol.u0).abs() <= 1e-9)
        && (eta1_printed - sol.etas.eta1).abs() <= 1e-9;
    Ok(PrintedVariant {
        case: case.number(),
        note,
        u0_printed,
        u0: sol.u0,
        eta1_printed,
        eta1: sol.etas.eta1,
        agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::general_solution;

    #[test]
    fn case_one_without_kappa_is_free() {
        let ring = Case::One.ring(0.0, 0.0);
        let s = specialize(Case::One, &ring, 3, 2.0, 0.0, 0).unwrap();
        let g = general_solution(&RingParams::zero(), 3, 2.0, 0.0, 0).unwrap();
        assert!(s.max_field_difference(&g) < 1e-12);
    }

    #[test]
    fn case_two_upper_matches_general() {
        let ring = Case::Two { upper: true }.ring(-0.5, -0.8);
        let g = crate::angular::solve(&ring, 3, 0.0, 0).unwrap();
        let s = specialize(Case::Two { upper: true }, &ring, 3, g.l, 0.0, 0).unwrap();
        assert!(s.max_field_difference(&g) < 1e-9);
    }

    #[test]
    fn pattern_mismatch() {
        let ring = RingParams::new(0.3, 0.2, 0.1);
        for case in Case::all() {
            assert!(matches!(
                specialize(case, &ring, 3, 1.0, 0.0, 0),
                Err(Error::PatternMismatch(_))
            ));
        }
    }

    #[test]
    fn pseudo_centrifugal_limit() {
        let ring = Case::Three.ring(-0.7, 0.7);
        assert!(is_pseudo_centrifugal(&ring));
        let s = specialize(Case::Three, &ring, 3, 1.0, 0.0, 0).unwrap();
        assert_eq!(s.etas.eta1, 0.0);
    }

    #[test]
    fn quoted_case_three_disagrees() {
        let ring = Case::Three.ring(0.3, 0.5);
        let v = printed_variant(Case::Three, &ring, 3, 1.0, 0.0, 0).unwrap();
        assert!(!v.agrees);
        let v = printed_variant(Case::One, &Case::One.ring(0.0, 0.4), 4, 1.0, 0.0, 0).unwrap();
        assert!(v.agrees);
    }
}
