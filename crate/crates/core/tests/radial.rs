use nuspectra::batch;
use nuspectra::geometry::centrifugal_gamma;
use nuspectra::oracle::{quadrature, Grid};
use nuspectra::radial::{
    self, bound_state_window, eigen_condition_residual, energy_physical, energy_reduced, limiting_case_map,
    normalization_quadrature, normalization_sum, nu_constants, PotentialParams, RadialEigenstate, ReducedRadialParams,
};
use nuspectra::Error;
use proptest::prelude::*;

fn reference() -> PotentialParams {
    PotentialParams {
        a: 10.0,
        b: 3.0,
        lambda: 0.5,
        ..Default::default()
    }
}

#[test]
fn reference_levels() {
    let p = reference();
    assert!((energy_physical(0, 0, 3, &p).unwrap() - 11.8495).abs() < 1e-4);
    assert!((energy_physical(1, 0, 3, &p).unwrap() - 12.8664).abs() < 1e-4);
    assert!(matches!(RadialEigenstate::new(2, 0, 3, &p), Err(Error::Inadmissible(_))));
    assert_eq!(bound_state_window(&p, 3, 0).max_bound_n, Some(1));
}

#[test]
fn levels_match_oracle_of_approximated_equation() {
    let p = PotentialParams {
        a: 40.0,
        b: 2.0,
        lambda: 0.7,
        mu: 1.3,
        hbar: 0.9,
        ..Default::default()
    };
    let g = centrifugal_gamma(4, 1);
    let grid = Grid::radial(p.lambda, 20.0, 4000).unwrap();
    let top = radial::bound_state_window_gamma(&p, g).max_bound_n.unwrap();
    let fd = batch::numeric_levels(&p, g, top as usize + 1, &grid, Default::default()).unwrap();
    for n in 0..=top {
        let e = RadialEigenstate::with_gamma(n, g, &p).unwrap().energy;
        assert!(((e - fd[n as usize]) / fd[n as usize]).abs() < 1e-4, "n={n}: {e} vs {}", fd[n as usize]);
    }
}

#[test]
fn wavefunction_is_normalized_by_independent_quadrature() {
    let p = reference();
    for n in 0..2 {
        let s = RadialEigenstate::new(n, 0, 3, &p).unwrap();
        let q = quadrature(|r| s.wavefunction(r).powi(2), 0.0, 40.0, 200_000);
        assert!((q.value - 1.0).abs() < 1e-8, "n={n}: {}", q.value);
    }
}

#[test]
fn normalization_series_matches_quadrature() {
    for (a, b) in [(2.5, 1.2), (0.7, 3.1), (4.0, 0.5)] {
        for n in 0..5 {
            let idx = nuspectra::specfun::JacobiIndex::new(a, b);
            let q = normalization_quadrature(n, idx, 0.8).unwrap();
            let s = normalization_sum(n, a, b, 0.8).unwrap();
            assert!(((s - q) / q).abs() < 1e-9, "n={n}, a={a}, b={b}: {s} vs {q}");
        }
    }
}

#[test]
fn gram_schmidt_rejects_dependent_input() {
    let w = vec![1.0; 4];
    let v = vec![vec![1.0, 2.0, 0.0, 1.0], vec![2.0, 4.0, 0.0, 2.0]];
    assert!(matches!(radial::gram_schmidt(&v, &w), Err(Error::RankDeficient { index: 1 })));
}

#[test]
fn limiting_map_shift() {
    let m = limiting_case_map(1.0, 2.0, 0.1, 1.0, 1.0).unwrap();
    assert!((m.shift - 2.0 * m.b / 3.0).abs() < 1e-15);
    assert!((m.b - 0.01).abs() < 1e-15);
}

#[test]
fn invalid_params() {
    let p = PotentialParams {
        lambda: 0.0,
        ..reference()
    };
    assert!(matches!(p.validate(), Err(Error::Invalid(_))));
}

proptest! {
    #[test]
    fn eigen_condition_holds_on_bound_levels(
        a_t in 0.5f64..200.0,
        b_t in -0.06f64..20.0,
        n in 0u32..6,
    ) {
        let red = ReducedRadialParams { a_t, b_t, e_t: 0.0 };
        if let (Ok(e_t), Ok(idx)) = (energy_reduced(n, a_t, b_t), radial::jacobi_indices(n, a_t, b_t)) {
            if idx.alpha > 0.0 {
                let red = ReducedRadialParams { e_t, ..red };
                let c = nu_constants(n, &red).unwrap();
                prop_assert!(eigen_condition_residual(c.k, &red) < 1e-9);
                let j = c.jacobi();
                prop_assert!((j.alpha - idx.alpha).abs() < 1e-9 * idx.alpha.max(1.0));
                prop_assert!((j.beta - idx.beta).abs() < 1e-9 * idx.beta.abs().max(1.0));
            }
        }
    }

    #[test]
    fn energies_increase_with_n_while_bound(a in 5.0f64..100.0, b in 0.0f64..10.0, lambda in 0.2f64..2.0) {
        let p = PotentialParams { a, b, lambda, ..Default::default() };
        if let Some(top) = bound_state_window(&p, 3, 0).max_bound_n {
            let es: Vec<f64> = (0..=top).map(|n| energy_physical(n, 0, 3, &p).unwrap()).collect();
            prop_assert!(es.windows(2).all(|w| w[1] > w[0]));
            // bound levels sit below the continuum threshold A + B
            prop_assert!(es.iter().all(|&e| e < a + b));
        }
    }

    #[test]
    fn reduction_round_trip(a in -5.0f64..50.0, b in -1.0f64..10.0, e in -10.0f64..50.0, gamma_d in -0.25f64..20.0) {
        let p = PotentialParams { a, b, lambda: 0.6, mu: 1.7, hbar: 0.8, ..Default::default() };
        let red = ReducedRadialParams::reduce(&p, gamma_d, e);
        let (a2, b2, e2) = red.to_physical(&p, gamma_d);
        prop_assert!((a2 - a).abs() < 1e-10 && (b2 - b).abs() < 1e-10 && (e2 - e).abs() < 1e-10);
    }
}
