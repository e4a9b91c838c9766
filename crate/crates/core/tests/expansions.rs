use proptest::prelude::*;
use pvi::expansions::{
    an_boundary_series, circle_gap_series, cn_ab, jimbo_tau_expansion, jue_gap_series,
    s_hat_from_s, CircleGroup,
};
use pvi::fredholm_jacobi::{circle_gap, fredholm_det, JacobiWeightParams};
use pvi::monodromy::ThetaSet;
use pvi::toeplitz::{eval_an_at, Center, EnsembleParameters};
use pvi::{c64, C64};

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn real_theta(t: [f64; 4]) -> ThetaSet {
    ThetaSet::new(c64(t[0], 0.0), c64(t[1], 0.0), c64(t[2], 0.0), c64(t[3], 0.0))
}

// frozen values below are 40-digit mpmath evaluations of the printed formulas

#[test]
fn cn_frozen_value() {
    let c = cn_ab(3, c64(0.5, 0.0), c64(0.5, 0.0)).unwrap();
    assert!(rel(c, c64(35.650707252584555212, 0.0)) < 1e-13);
}

#[test]
fn s_hat_frozen_value() {
    let th = real_theta([0.3, 0.7, 0.4, 0.6]);
    let sh = s_hat_from_s(Center::Zero, &th, c64(0.45, 0.0), c64(2.0, 1.0)).unwrap();
    assert!(rel(sh, c64(4.1973579485461153557, 2.0986789742730576779)) < 1e-13);
    assert_eq!(s_hat_from_s(Center::Zero, &th, c64(0.45, 0.0), c64(0.0, 0.0)).unwrap(), c64(0.0, 0.0));
}

#[test]
fn tau_expansion_frozen_terms() {
    let th = real_theta([0.4; 4]);
    let tau = jimbo_tau_expansion(Center::Zero, &th, c64(0.5, 0.0), c64(1.0, 0.0), c64(1.0, 0.0)).unwrap();
    let close = |a: C64, b: f64| (a - c64(b, 0.0)).norm() < 1e-15;
    assert!(close(tau.prefactor_exponent, -0.0175));
    assert!(close(tau.k1, 0.03125));
    assert!(close(tau.k_plus, -0.0025));
    assert!(close(tau.k_minus, -0.4225));
    assert!(tau.within_proven_strip);
}

#[test]
fn printed_first_order_coefficients() {
    let p = EnsembleParameters::new(2, c64(0.3, 0.0), c64(0.25, 0.0), c64(0.1, 0.0), c64(0.4, 0.0)).unwrap();
    let (n, mu, om, omb, w1) = (2.0, p.mu, p.omega(), p.omega_bar(), p.omega1);
    let s1 = an_boundary_series(Center::One, &p).unwrap();
    let want = n * mu * (omb - om) / (2.0 * mu + 2.0 * w1);
    assert!((s1.analytic_coeffs[0] - want).norm() < 1e-15);
    let zero_jump = p.with_xi_star(c64(0.0, 0.0));
    assert_eq!(an_boundary_series(Center::Zero, &zero_jump).unwrap().nonanalytic_coeff, c64(0.0, 0.0));
}

#[test]
fn jue_series_against_fredholm() {
    let params = JacobiWeightParams::new(2, 0.5, 0.5).unwrap();
    let u = 0.01;
    let f = fredholm_det(&params, 1.0 - u, c64(1.0, 0.0), 40).unwrap().value();
    let s = jue_gap_series(2, 0.5, 0.5, 1.0, u).unwrap();
    assert!((s.value - f).norm() < 1e-5);
    assert_eq!(jue_gap_series(3, 0.5, 0.5, 0.0, u).unwrap().value, c64(1.0, 0.0));
}

#[test]
fn orthogonal_plus_against_fredholm() {
    let (x, xi) = (0.1, 0.5);
    let det = circle_gap(CircleGroup::OrthogonalPlus, 2, x, c64(xi, 0.0)).unwrap();
    let s = circle_gap_series(CircleGroup::OrthogonalPlus, 2, xi, x);
    assert!((s.value - det).norm() < 1e-8);
    assert_eq!(circle_gap_series(CircleGroup::OrthogonalMinus, 2, xi, 0.0).value, c64(1.0, 0.0));
}

#[test]
fn center_one_error_slope() {
    // the first omitted order is (1 - t)^2
    let p = EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4).unwrap();
    let s = an_boundary_series(Center::One, &p).unwrap();
    let err = |u: f64| {
        let t = c64(1.0 - u, 0.0);
        rel(s.eval(t).value, eval_an_at(Center::One, &p, t).unwrap())
    };
    let slope = (err(1e-3) / err(1e-4)).log10();
    assert!((slope - 2.0).abs() < 0.2, "slope {slope}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // at a = -b = 1/2 the Jacobi series is the O-(2N+1) series in u = sin^2(x/2)
    #[test]
    fn jacobi_and_circle_series_agree(n in 1usize..5, xi in 0.1f64..1.0, x in 0.01f64..0.1) {
        let u = (x / 2.0).sin().powi(2);
        let j = jue_gap_series(n, 0.5, -0.5, xi, u).unwrap().value;
        let c = circle_gap_series(CircleGroup::OrthogonalMinus, n, xi, x).value;
        let det = circle_gap(CircleGroup::OrthogonalMinus, n, x, c64(xi, 0.0)).unwrap();
        prop_assert!((j - det).norm() < 1e-3 * x && (c - det).norm() < 1e-3 * x);
    }

    #[test]
    fn center_one_error_shrinks(mu in 0.1f64..0.4, w1 in 0.1f64..0.4, w2 in -0.2f64..0.2, xs in 0.1f64..0.9) {
        let p = EnsembleParameters::real(2, mu, w1, w2, xs).unwrap();
        let s = an_boundary_series(Center::One, &p).unwrap();
        let err = |u: f64| {
            let t = c64(1.0 - u, 0.0);
            rel(s.eval(t).value, eval_an_at(Center::One, &p, t).unwrap())
        };
        let (e3, e4) = (err(1e-3), err(1e-4));
        prop_assert!(e3 < 1e-3 && e4 < e3 / 10.0, "{e3:e} {e4:e}");
    }
}
