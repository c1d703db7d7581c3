use std::f64::consts::PI;

use nuspectra::oracle::tridiag::{kth_eigenvalue, lowest_eigenpairs, sturm_count};
use nuspectra::oracle::{
    count_nodes, pekeris_error_scan, quadrature, quadrature_endpoints, radial_solve, EigenOptions, Grid,
};
use nuspectra::Execution;

#[test]
fn infinite_well() {
    let g = Grid::uniform(0.0, 1.0, 2001).unwrap();
    let s = radial_solve(|_| 0.0, &g, 4, 0.5).unwrap();
    for (k, e) in s.eigenvalues.iter().enumerate() {
        let exact = ((k + 1) as f64 * PI).powi(2) / 2.0;
        assert!(((e - exact) / exact).abs() < 1e-5);
        assert_eq!(count_nodes(&s.eigenvectors[k], 1e-9), k);
    }
}

#[test]
fn coulomb_s_levels() {
    // −½g'' − g/r = E g: E_n = −1/(2(n+1)²)
    let g = Grid::uniform(0.0, 80.0, 8001).unwrap();
    let s = radial_solve(|r| -1.0 / r, &g, 3, 0.5).unwrap();
    for (k, e) in s.eigenvalues.iter().enumerate() {
        let exact = -0.5 / ((k + 1) as f64).powi(2);
        assert!((e - exact).abs() < 2e-3 * exact.abs(), "{k}: {e}");
    }
}

#[test]
fn tridiagonal_known_spectrum() {
    // 2 on the diagonal, −1 off: 2 − 2cos(kπ/(n+1))
    let n = 50;
    let d = vec![2.0; n];
    let o = vec![-1.0; n - 1];
    assert_eq!(sturm_count(&d, &o, 0.0), 0);
    assert_eq!(sturm_count(&d, &o, 4.0), n);
    for k in 0..5 {
        let exact = 2.0 - 2.0 * ((k + 1) as f64 * PI / (n + 1) as f64).cos();
        assert!((kth_eigenvalue(&d, &o, k, 100) - exact).abs() < 1e-13);
    }
    let seq = EigenOptions {
        execution: Execution::Sequential,
        ..Default::default()
    };
    let par = EigenOptions {
        execution: Execution::Parallel,
        ..Default::default()
    };
    let a = lowest_eigenpairs(&d, &o, 5, &seq).unwrap();
    let b = lowest_eigenpairs(&d, &o, 5, &par).unwrap();
    assert_eq!(a.0, b.0);
}

#[test]
fn quadrature_with_endpoint_singularities() {
    let q = quadrature(|x| x.sqrt(), 0.0, 1.0, 10_000);
    assert!((q.value - 2.0 / 3.0).abs() < 1e-12);
    // ∫₋₁¹ (1−y)^{−0.9} dy = 2^{0.1}/0.1
    let q = quadrature_endpoints(|_, _, to_hi| to_hi.powf(-0.9), -1.0, 1.0, 100_000, 1e-14);
    assert!((q.value - 2f64.powf(0.1) / 0.1).abs() < 1e-9);
}

#[test]
fn pekeris_scan_reports_crossings() {
    let s = pekeris_error_scan(2.0, 400).unwrap();
    assert!(s.monotone);
    let one = s.crossings.iter().find(|c| (c.threshold - 0.01).abs() < 1e-12).unwrap();
    let x = one.lambda_r.unwrap();
    assert!(x > 0.4 && x < 0.5);
}

#[test]
fn grid_validation() {
    assert!(Grid::uniform(1.0, 0.0, 10).is_err());
    assert!(Grid::uniform(0.0, 1.0, 2).is_err());
    assert!(Grid::radial(0.5, 20.0, 4000).is_ok());
}
