use proptest::prelude::*;
use pvi::linalg::{det2, inv2, mat2, trace2};
use pvi::monodromy::{
    build_monodromy, connection_residual, connection_sides, invariants_from_matrices,
    manifold_gradient, manifold_value, sigma01_tilde, sse_case_data, sse_case_matrices,
    trig_identity_residuals, Invariants, MonodromyData, SseCase, Sign, ThetaSet,
};
use pvi::specfun::{cos_pi, exp_i_pi, sin_pi};
use pvi::toeplitz::EnsembleParameters;
use pvi::{c64, C64};

fn random_c(lo: f64, hi: f64, im: f64) -> impl Strategy<Value = C64> {
    (lo..hi, -im..im).prop_map(|(a, b)| c64(a, b))
}

fn theta_strategy() -> impl Strategy<Value = ThetaSet> {
    prop::array::uniform4(random_c(0.1, 0.9, 0.3)).prop_map(|t| ThetaSet::new(t[0], t[1], t[2], t[3]))
}

fn measured_data(theta: &ThetaSet, sigma: C64, s: C64, r: C64) -> MonodromyData {
    let q = build_monodromy(theta, sigma, s, r).unwrap();
    let inv = invariants_from_matrices(&q);
    let acos = |p: C64| (p / 2.0).acos() / std::f64::consts::PI;
    MonodromyData {
        sigma0t: sigma,
        sigma_t1: acos(inv.pt1),
        sigma01: acos(inv.p01),
        s0t: s,
        s_t1: c64(0.0, 0.0),
        s01: c64(0.0, 0.0),
        r,
    }
}

fn reference() -> EnsembleParameters {
    EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4).unwrap()
}

#[test]
fn identity_matrices_have_trivial_traces() {
    let id = mat2(c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0));
    let q = pvi::monodromy::MonodromyQuadruple { m0: id, mt: id, m1: id, minf: id, c: None };
    let inv = invariants_from_matrices(&q);
    for p in [inv.p0, inv.pt, inv.p1, inv.pinf, inv.p0t, inv.pt1, inv.p01] {
        assert_eq!(p, c64(2.0, 0.0));
    }
}

#[test]
fn case_structure() {
    let p = reference();
    let n = p.n as f64;
    let a = sse_case_matrices(SseCase::A, &p, c64(1.0, 0.0)).unwrap();
    for m in [a.m0, a.mt, a.m1] {
        assert!(m[(0, 1)].norm() < 1e-12);
    }
    let e = exp_i_pi(n + 2.0 * p.mu);
    assert!((a.m1[(0, 0)] - e).norm() < 1e-12 && (a.m1[(1, 1)] - 1.0 / e).norm() < 1e-12);
    let c = sse_case_matrices(SseCase::C, &p, c64(1.0, 0.0)).unwrap();
    for m in [c.m0, c.mt, c.m1] {
        assert!(m[(1, 0)].norm() < 1e-12);
    }
    let b = sse_case_matrices(SseCase::B, &p, c64(1.0, 0.0)).unwrap();
    assert!(b.mt[(0, 1)].norm() < 1e-12 && b.mt[(1, 0)].norm() < 1e-12);
    assert!((b.mt[(0, 0)] - b.mt[(1, 1)]).norm() < 1e-12);
}

#[test]
fn case_data_shared_entries() {
    let p = reference();
    let (_, a) = sse_case_data(SseCase::A, &p).unwrap();
    for case in [SseCase::B, SseCase::C] {
        let (_, d) = sse_case_data(case, &p).unwrap();
        assert_eq!(d.s01, a.s01);
        assert_eq!(d.sigma0t, a.sigma0t);
    }
    let want = p.n as f64 - p.mu + p.omega_bar();
    assert!((a.sigma0t - want).norm() < 1e-15);
}

#[test]
fn case_a_connection_sides_vanish_separately() {
    let (th, d) = sse_case_data(SseCase::A, &reference()).unwrap();
    let (l, r) = connection_sides(&th, &d, Sign::Plus);
    assert!(l.norm() < 1e-12 && r.norm() < 1e-12);
}

#[test]
fn case_data_are_singular_points_of_the_cubic() {
    for case in [SseCase::A, SseCase::B, SseCase::C] {
        let q = sse_case_matrices(case, &reference(), c64(1.0, 0.0)).unwrap();
        assert!(q.cyclic_defect().iter().all(|z| z.norm() < 1e-10));
        let inv = invariants_from_matrices(&q);
        assert!(manifold_value(&inv).norm() < 1e-10);
        assert!(manifold_gradient(&inv).iter().all(|g| g.norm() < 1e-10));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn trig_identities(theta in theta_strategy(), sigma in random_c(-1.0, 1.0, 0.5)) {
        for r in trig_identity_residuals(&theta, sigma) {
            prop_assert!(r.norm() < 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn built_quadruples(
        theta in theta_strategy(),
        sigma in random_c(0.1, 0.9, 0.3),
        s in random_c(0.5, 2.0, 0.5),
        r in random_c(0.5, 2.0, 0.5),
    ) {
        let q = build_monodromy(&theta, sigma, s, r).unwrap();
        prop_assert!(q.cyclic_defect().iter().all(|z| z.norm() < 1e-12));
        for (m, th) in [(q.m0, theta.theta0), (q.mt, theta.theta_t), (q.m1, theta.theta1), (q.minf, theta.theta_inf)] {
            prop_assert!((det2(&m) - 1.0).norm() < 1e-12);
            prop_assert!((trace2(&m) - 2.0 * cos_pi(th)).norm() < 1e-12);
        }
        prop_assert!(q.minf[(0, 1)] == c64(0.0, 0.0) && q.minf[(1, 0)] == c64(0.0, 0.0));

        let c = q.c.unwrap();
        let delta = c * q.mt * q.m0 * inv2(&c).unwrap();
        let e = exp_i_pi(sigma);
        prop_assert!((delta[(0, 0)] - e).norm() < 1e-12 && (delta[(1, 1)] - 1.0 / e).norm() < 1e-12);
        prop_assert!(delta[(0, 1)].norm() < 1e-12 && delta[(1, 0)].norm() < 1e-12);
        prop_assert!((det2(&c) + sin_pi(theta.theta_inf) * sin_pi(sigma)).norm() < 1e-12);

        let inv = invariants_from_matrices(&q);
        prop_assert!(manifold_value(&inv).norm() < 1e-10);
        prop_assert!((inv.p0t - 2.0 * cos_pi(sigma)).norm() < 1e-10);

        let d = measured_data(&theta, sigma, s, r);
        prop_assert!(connection_residual(&theta, &d, Sign::Plus).norm() < 1e-10);
        prop_assert!(connection_residual(&theta, &d, Sign::Minus).norm() < 1e-10);
        let doubled = MonodromyData { s0t: 2.0 * s, ..d };
        prop_assert!(connection_residual(&theta, &doubled, Sign::Plus).norm() > 1e-6);

        // the free scale enters through s / r
        let q2 = build_monodromy(&theta, sigma, 2.0 * s, 2.0 * r).unwrap();
        let inv2_ = invariants_from_matrices(&q2);
        for (a, b) in [(inv.pt1, inv2_.pt1), (inv.p01, inv2_.p01), (inv.p0t, inv2_.p0t)] {
            prop_assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn gradient_matches_differences(p in prop::array::uniform7(random_c(-2.0, 2.0, 1.0))) {
        let inv = Invariants { p0: p[0], pt: p[1], p1: p[2], pinf: p[3], p0t: p[4], pt1: p[5], p01: p[6] };
        let g = manifold_gradient(&inv);
        let h = 1e-6;
        let bump = |k: usize, d: f64| {
            let mut b = inv;
            match k {
                0 => b.p0t += d,
                1 => b.pt1 += d,
                _ => b.p01 += d,
            }
            manifold_value(&b)
        };
        for (k, gk) in g.iter().enumerate() {
            let fd = (bump(k, h) - bump(k, -h)) / (2.0 * h);
            prop_assert!((fd - gk).norm() < 1e-6 * (1.0 + gk.norm()));
        }
        let want0 = inv.pt1 * inv.p01 + 2.0 * inv.p0t - inv.p0 * inv.pt - inv.p1 * inv.pinf;
        prop_assert!((g[0] - want0).norm() < 1e-12 * (1.0 + want0.norm()));
    }

    #[test]
    fn tilde_sigma_is_even(theta in theta_strategy(), s in prop::array::uniform3(random_c(0.1, 0.9, 0.2))) {
        let d = MonodromyData {
            sigma0t: s[0], sigma_t1: s[1], sigma01: s[2],
            s0t: c64(1.0, 0.0), s_t1: c64(1.0, 0.0), s01: c64(1.0, 0.0), r: c64(1.0, 0.0),
        };
        let flipped = MonodromyData { sigma01: -s[2], ..d };
        let (a, b) = (sigma01_tilde(&d, &theta), sigma01_tilde(&flipped, &theta));
        prop_assert!((cos_pi(a) - cos_pi(b)).norm() < 1e-12);
    }
}
