use nuspectra::angular::special::{specialize, Case};
use nuspectra::angular::{self, quantize, solve, RingParams, RingWavefunction};
use nuspectra::oracle::{self, quadrature, Grid};
use nuspectra::Error;
use proptest::prelude::*;

fn faces(cells: usize) -> Grid {
    Grid::uniform(0.0, std::f64::consts::PI, cells + 1).unwrap()
}

#[test]
fn free_levels_are_integers() {
    for dim in 3..=7 {
        for n in 0..4 {
            let s = solve(&RingParams::zero(), dim, 0.0, n).unwrap();
            assert!((s.l - f64::from(n)).abs() < 1e-10, "D={dim}, n={n}: {}", s.l);
        }
    }
}

#[test]
fn ring_levels_match_oracle() {
    let ring = RingParams::new(-0.4, 0.3, 0.6);
    let r = oracle::refine(|g| oracle::angular_solve(&ring, 4, 2.0, g, 3), &faces(2000), 1e-6).unwrap();
    for n in 0..3 {
        let s = solve(&ring, 4, 2.0, n).unwrap();
        assert!((s.casimir() - r.extrapolated[n as usize]).abs() < 1e-6);
    }
}

#[test]
fn scan_agrees_with_closed_form() {
    let ring = RingParams::new(0.2, -0.5, -0.3);
    for n in 0..3 {
        let a = solve(&ring, 5, 3.0, n).unwrap();
        let b = quantize(&ring, 5, 3.0, n, 20.0).unwrap();
        assert!((a.l - b.l).abs() < 1e-8);
    }
}

#[test]
fn attractive_pole_beyond_critical_is_rejected() {
    let ring = RingParams::new(0.0, 0.0, 5.0);
    assert!(solve(&ring, 3, 0.0, 0).is_err());
    assert!(matches!(
        oracle::angular_solve(&ring, 3, 0.0, &faces(100), 1),
        Err(Error::Domain(_))
    ));
}

#[test]
fn ring_wavefunction_is_normalized() {
    let ring = RingParams::new(-0.4, 0.3, 0.6);
    let s = solve(&ring, 4, 2.0, 1).unwrap();
    let h = RingWavefunction::new(&s, &ring).unwrap();
    let q = quadrature(|t| h.eval(t).powi(2) * t.sin().powi(2), 0.0, std::f64::consts::PI, 200_000);
    assert!((q.value - 1.0).abs() < 1e-9);
}

#[test]
fn case_mismatch_is_reported() {
    let ring = RingParams::new(0.1, 0.2, 0.3);
    assert!(matches!(
        specialize(Case::One, &ring, 3, 1.0, 0.0, 0),
        Err(Error::PatternMismatch(_))
    ));
}

proptest! {
    #[test]
    fn special_cases_agree_with_general(
        which in 0usize..6,
        s in -1.0f64..1.0,
        t in -1.0f64..1.0,
        dim in 3u32..7,
        n in 0u32..4,
    ) {
        let case = Case::all()[which];
        let ring = case.ring(s, t);
        if let Ok(general) = solve(&ring, dim, 0.0, n) {
            let special = specialize(case, &ring, dim, general.l, 0.0, n).unwrap();
            prop_assert!(special.max_field_difference(&general) < 1e-9);
        }
    }

    #[test]
    fn constraint_holds(g in -1.0f64..1.0, z in -1.0f64..1.0, k in -1.0f64..1.0, dim in 3u32..7, n in 0u32..4) {
        let ring = RingParams::new(g, z, k);
        if let Ok(s) = solve(&ring, dim, 0.0, n) {
            prop_assert!(angular::constraint_residual(&s.etas, s.k, s.u0) < 1e-9);
            prop_assert!(s.tau_slope() < 0.0);
            prop_assert!(s.is_admissible());
        }
    }
}
