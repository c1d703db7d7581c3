use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

use nuspectra::specfun::{
    gamma, gen_binomial, hyp3f2_terminating, jacobi_derivative, jacobi_eval, jacobi_moment, jacobi_norm,
    jacobi_sum_identity, log_gamma, pochhammer, JacobiIndex,
};
use nuspectra::Error;

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact ₃F₂(−n, p2, p3; q1, q2; 1) in rational arithmetic.
fn hyp3f2_exact(n: u32, p2: &BigRational, p3: &BigRational, q1: &BigRational, q2: &BigRational) -> BigRational {
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for j in 0..n {
        let jr = rat(i64::from(j), 1);
        let num = (&jr - rat(i64::from(n), 1)) * (p2 + &jr) * (p3 + &jr);
        let den = (q1 + &jr) * (q2 + &jr) * (&jr + BigRational::one());
        term = term * num / den;
        sum += &term;
    }
    sum
}

#[test]
fn hyp3f2_matches_rational_arithmetic() {
    let cases = [
        (4u32, (3, 2), (-7, 3), (5, 4), (9, 2)),
        (6, (1, 3), (11, 5), (2, 1), (7, 3)),
        (9, (-5, 2), (13, 7), (1, 6), (17, 4)),
        (12, (3, 1), (1, 2), (5, 3), (2, 5)),
    ];
    for (n, p2, p3, q1, q2) in cases {
        let f = |r: (i64, i64)| (rat(r.0, r.1), r.0 as f64 / r.1 as f64);
        let (p2r, p2f) = f(p2);
        let (p3r, p3f) = f(p3);
        let (q1r, q1f) = f(q1);
        let (q2r, q2f) = f(q2);
        let exact = hyp3f2_exact(n, &p2r, &p3r, &q1r, &q2r).to_f64().unwrap();
        let got = hyp3f2_terminating(n, p2f, p3f, q1f, q2f).unwrap();
        assert!((got - exact).abs() <= 1e-12 * exact.abs().max(1.0), "n={n}: {got} vs {exact}");
    }
}

#[test]
fn hyp3f2_terminates_early_on_zero_numerator() {
    // p2 = −1 kills every term past j = 1
    let exact = hyp3f2_exact(5, &rat(-1, 1), &rat(3, 1), &rat(2, 1), &rat(4, 1));
    assert!(exact != BigRational::zero());
    let got = hyp3f2_terminating(5, -1.0, 3.0, 2.0, 4.0).unwrap();
    assert!((got - exact.to_f64().unwrap()).abs() < 1e-15);
}

#[test]
fn hyp3f2_pole_is_reported() {
    assert!(matches!(hyp3f2_terminating(3, 1.0, 1.0, -1.0, 2.0), Err(Error::Pole(_))));
}

#[test]
fn gamma_known_values() {
    assert!((gamma(0.5).unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-14);
    assert!((gamma(6.0).unwrap() - 120.0).abs() < 1e-11);
    assert!((gamma(-0.5).unwrap() + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13);
    assert!(matches!(log_gamma(-2.0), Err(Error::Pole(_))));
    assert!(matches!(log_gamma(0.0), Err(Error::Pole(_))));
}

#[test]
fn legendre_and_chebyshev_special_cases() {
    let leg = JacobiIndex::new(0.0, 0.0);
    let y: f64 = 0.3;
    assert!((jacobi_eval(2, leg, y) - 0.5 * (3.0 * y * y - 1.0)).abs() < 1e-15);
    assert!((jacobi_eval(3, leg, y) - 0.5 * (5.0 * y.powi(3) - 3.0 * y)).abs() < 1e-15);
    assert!((jacobi_norm(3, leg).unwrap() - 2.0 / 7.0).abs() < 1e-14);
}

#[test]
fn moment_rejects_divergent_exponents() {
    let idx = JacobiIndex::new(0.5, 0.5);
    assert!(matches!(jacobi_moment(2, idx, -1.0, 0.0), Err(Error::Domain(_))));
}

proptest! {
    #[test]
    fn sum_identity_agrees_with_recurrence(
        n in 0u32..=8,
        a in -0.9f64..5.0,
        b in -0.9f64..5.0,
        y in -0.999f64..0.999,
    ) {
        let idx = JacobiIndex::new(a, b);
        let r = jacobi_eval(n, idx, y);
        prop_assert!((jacobi_sum_identity(n, idx, y) - r).abs() <= 1e-10 * r.abs().max(1.0));
    }

    #[test]
    fn reflection_symmetry(n in 0u32..=10, a in -0.9f64..4.0, b in -0.9f64..4.0, y in -1.0f64..1.0) {
        // P_n^{(a,b)}(−y) = (−1)^n P_n^{(b,a)}(y)
        let lhs = jacobi_eval(n, JacobiIndex::new(a, b), -y);
        let rhs = if n % 2 == 0 { 1.0 } else { -1.0 } * jacobi_eval(n, JacobiIndex::new(b, a), y);
        prop_assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0));
    }

    #[test]
    fn derivative_shifts_indices(n in 1u32..=8, a in -0.9f64..4.0, b in -0.9f64..4.0, y in -0.99f64..0.99) {
        // d/dy P_n^{(a,b)} = (n+a+b+1)/2 · P_{n−1}^{(a+1,b+1)}
        let idx = JacobiIndex::new(a, b);
        let d = jacobi_derivative(n, idx, y, 1);
        let expect = 0.5 * (f64::from(n) + a + b + 1.0) * jacobi_eval(n - 1, JacobiIndex::new(a + 1.0, b + 1.0), y);
        prop_assert!((d - expect).abs() <= 1e-10 * expect.abs().max(1.0));
    }

    #[test]
    fn endpoint_value(n in 0u32..=10, a in -0.9f64..5.0, b in -0.9f64..5.0) {
        // P_n^{(a,b)}(1) = (a+1)_n / n! = C(n+a, n)
        let idx = JacobiIndex::new(a, b);
        let expect = pochhammer(a + 1.0, n) / pochhammer(1.0, n);
        prop_assert!((jacobi_eval(n, idx, 1.0) - expect).abs() <= 1e-11 * expect.abs().max(1.0));
        prop_assert!((gen_binomial(f64::from(n) + a, n) - expect).abs() <= 1e-11 * expect.abs().max(1.0));
    }

    #[test]
    fn hyp3f2_swap_is_bit_identical(
        n in 0u32..=8,
        p2 in -4.0f64..4.0,
        p3 in -4.0f64..4.0,
        q1 in 0.1f64..5.0,
        q2 in 0.1f64..5.0,
    ) {
        let a = hyp3f2_terminating(n, p2, p3, q1, q2).unwrap();
        let b = hyp3f2_terminating(n, p3, p2, q2, q1).unwrap();
        prop_assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn gamma_recurrence(x in 0.05f64..30.0) {
        let lhs = log_gamma(x + 1.0).unwrap().ln_abs;
        let rhs = log_gamma(x).unwrap().ln_abs + x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }
}
