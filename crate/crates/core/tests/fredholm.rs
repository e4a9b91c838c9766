use proptest::prelude::*;
use pvi::expansions::CircleGroup;
use pvi::fredholm_jacobi::{
    cd_kernel, circle_gap, default_order, fredholm_det, gram_matrix, jacobi_gap, monic_jacobi,
    JacobiWeightParams,
};
use pvi::quadrature::integrate;
use pvi::{c64, Error, C64};

/// `int_lo^1 f(x) dx` after `x = sin^2 phi`, which tames the endpoint powers.
fn integrate_unit(f: impl Fn(f64) -> f64, lo: f64) -> f64 {
    let phi0 = lo.sqrt().asin();
    let g = |phi: f64| {
        let (s, c) = phi.sin_cos();
        c64(f(s * s) * 2.0 * s * c, 0.0)
    };
    integrate(g, phi0, std::f64::consts::FRAC_PI_2, 1e-13).unwrap().0.re
}

#[test]
fn second_degree_polynomial() {
    let p = JacobiWeightParams::new(3, 1.0, 2.0).unwrap();
    // monic p2 for x (1-x)^2: orthogonal to 1 and x
    for k in 0..2 {
        let m = integrate_unit(|x| p.weight(x) * monic_jacobi(2, &p, x) * x.powi(k), 0.0);
        assert!(m.abs() < 1e-13, "moment {k}: {m}");
    }
    // monic: second difference with unit step is 2
    let d2 = monic_jacobi(2, &p, 2.0) - 2.0 * monic_jacobi(2, &p, 1.0) + monic_jacobi(2, &p, 0.0);
    assert!((d2 - 2.0).abs() < 1e-13);
}

#[test]
fn orthogonality_and_norms() {
    let p = JacobiWeightParams::new(5, 0.5, 1.5).unwrap();
    let h = p.norms();
    for j in 0..5 {
        for k in 0..=j {
            let v = integrate_unit(|x| p.weight(x) * monic_jacobi(j, &p, x) * monic_jacobi(k, &p, x), 0.0);
            let want = if j == k { h[j] } else { 0.0 };
            assert!((v - want).abs() < 1e-12 * h[0], "({j},{k}): {v} vs {want}");
        }
    }
}

#[test]
fn kernel_trace_counts_particles() {
    for (n, a, b) in [(1, 0.0, 0.0), (4, 0.5, 1.5), (6, 2.0, 0.5)] {
        let p = JacobiWeightParams::new(n, a, b).unwrap();
        let tr = integrate_unit(|x| cd_kernel(&p, x, x), 0.0);
        assert!((tr - n as f64).abs() < 1e-10, "N = {n}: {tr}");
    }
}

#[test]
fn kernel_reproduces_itself() {
    let p = JacobiWeightParams::new(3, 0.5, 0.5).unwrap();
    let (x, y) = (0.3, 0.7);
    let v = integrate_unit(|z| cd_kernel(&p, x, z) * cd_kernel(&p, z, y), 0.0);
    assert!((v - cd_kernel(&p, x, y)).abs() < 1e-11);
}

#[test]
fn no_weight_means_no_change() {
    let e = jacobi_gap(4, 0.5, 1.5, c64(0.0, 0.0), 0.3).unwrap();
    assert_eq!(e, c64(1.0, 0.0));
    assert_eq!(circle_gap(CircleGroup::OrthogonalPlus, 3, 0.0, c64(1.0, 0.0)).unwrap(), c64(1.0, 0.0));
}

#[test]
fn single_uniform_particle() {
    let t = 1e-4;
    let e = jacobi_gap(1, 0.0, 0.0, c64(1.0, 0.0), t).unwrap();
    assert!((e - t).norm() < 1e-8);
}

#[test]
fn two_uniform_particles_closed_form() {
    // orthonormal 1 and sqrt(3)(2x - 1) on (0, 1)
    let t = 0.35;
    let g00 = 1.0 - t;
    let g01 = 3f64.sqrt() * t * (1.0 - t);
    let g11 = (1.0 - (2.0 * t - 1.0).powi(3)) / 2.0;
    let xi = c64(0.6, 0.2);
    let want = (1.0 - xi * g00) * (1.0 - xi * g11) - xi * xi * g01 * g01;
    let got = jacobi_gap(2, 0.0, 0.0, xi, t).unwrap();
    assert!((got - want).norm() < 1e-13);
    let g = gram_matrix(&JacobiWeightParams::new(2, 0.0, 0.0).unwrap(), t).unwrap();
    assert!((g[(0, 1)] - g01).abs() < 1e-14 && (g[(1, 1)] - g11).abs() < 1e-14);
}

#[test]
fn derivative_at_zero_is_minus_trace() {
    let (n, a, b, t) = (4, 0.5, 1.5, 0.4);
    let p = JacobiWeightParams::new(n, a, b).unwrap();
    let tr = integrate_unit(|x| cd_kernel(&p, x, x), t);
    let h = 1e-5;
    let d = (jacobi_gap(n, a, b, c64(h, 0.0), t).unwrap() - jacobi_gap(n, a, b, c64(-h, 0.0), t).unwrap()) / (2.0 * h);
    assert!((d.re + tr).abs() < 1e-8 && d.im.abs() < 1e-12);
}

#[test]
fn rejects_bad_input() {
    let p = JacobiWeightParams::new(2, 0.5, 0.5).unwrap();
    for t in [0.0, 1.0, -0.2, f64::NAN] {
        assert!(matches!(fredholm_det(&p, t, c64(1.0, 0.0), 40), Err(Error::Range(_))));
    }
    assert!(matches!(fredholm_det(&p, 0.5, c64(1.0, 0.0), 11), Err(Error::Range(_))));
    assert!(jacobi_gap(0, 0.0, 0.0, c64(1.0, 0.0), 0.5).is_err());
    assert!(jacobi_gap(2, -1.5, 0.0, c64(1.0, 0.0), 0.5).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn routes_agree(
        n in 1usize..7,
        a in -0.9f64..3.0,
        b in -0.9f64..3.0,
        t in 0.05f64..0.95,
        xr in -1.0f64..1.0,
        xi_im in -1.0f64..1.0,
    ) {
        let p = JacobiWeightParams::new(n, a, b).unwrap();
        let v = fredholm_det(&p, t, c64(xr, xi_im), default_order(n));
        prop_assert!(v.is_ok(), "{:?}", v);
    }

    #[test]
    fn polynomial_of_degree_n_in_xi(n in 1usize..6, a in -0.5f64..2.0, b in -0.5f64..2.0, t in 0.1f64..0.9) {
        let e = |x: f64| jacobi_gap(n, a, b, c64(x, 0.0), t).unwrap();
        // (N+1)-th forward difference on a grid inside |xi| <= 1
        let node = |k: usize| -1.0 + 2.0 * k as f64 / (n + 1) as f64;
        let mut diff: Vec<C64> = (0..=n + 1).map(|k| e(node(k))).collect();
        for _ in 0..=n {
            diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        }
        let scale = (0..=n + 1).map(|k| e(node(k)).norm()).fold(1.0, f64::max);
        prop_assert!(diff[0].norm() < 1e-11 * scale, "{}", diff[0]);
    }

    #[test]
    fn gap_is_a_probability(n in 1usize..6, a in -0.5f64..2.0, b in -0.5f64..2.0, t in 0.05f64..0.95) {
        let e = jacobi_gap(n, a, b, c64(1.0, 0.0), t).unwrap();
        prop_assert!(e.re > -1e-12 && e.re < 1.0 && e.im == 0.0);
        let e2 = jacobi_gap(n, a, b, c64(1.0, 0.0), (t + 1.0) / 2.0).unwrap();
        prop_assert!(e2.re >= e.re - 1e-12);
    }
}
