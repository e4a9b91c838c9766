use proptest::prelude::*;
use pvi::specfun::{e2, elementary_symmetric, gamma, hyp2f1, is_near_integer, sin_pi};
use pvi::{c64, C64};

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

// 40-digit mpmath evaluations
#[test]
fn gamma_frozen_value() {
    let g = gamma(c64(0.3, 0.4)).unwrap();
    assert!(rel(g, c64(0.91156152780458593093, -1.3671933575854186188)) < 1e-13);
}

#[test]
fn hyp2f1_frozen_value() {
    // direct Gauss series summed at 40 digits
    let f = hyp2f1(c64(-0.6, 0.0), c64(0.3, -0.2), c64(1.4, 0.1), c64(0.25, 0.0)).unwrap();
    assert!(rel(f, c64(0.96879720589551770875, 0.024477569357860510525)) < 1e-13);
}

#[test]
fn symmetric_functions() {
    let v: Vec<C64> = [-1.0, -2.0, 3.0, 4.0].iter().map(|&x| c64(x, 0.0)).collect();
    assert_eq!(e2(&v), c64(-7.0, 0.0));
    assert_eq!(elementary_symmetric(0, &v[..2]).unwrap(), c64(1.0, 0.0));
    assert!(elementary_symmetric(5, &v).is_err());
    assert!(is_near_integer(c64(2.0, 1e-9), 1e-8));
}

fn generic_z() -> impl Strategy<Value = C64> {
    (-6.0f64..6.0, -6.0f64..6.0)
        .prop_map(|(re, im)| c64(re, im))
        .prop_filter("away from poles", |z| !is_near_integer(*z, 0.05))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_recurrence(z in generic_z()) {
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-11);
    }

    #[test]
    fn gamma_reflection(z in generic_z()) {
        let v = gamma(z).unwrap() * gamma(1.0 - z).unwrap() * sin_pi(z) / std::f64::consts::PI;
        prop_assert!((v - 1.0).norm() < 1e-11);
    }

    #[test]
    fn hyp2f1_contiguous(
        a in (-2.0f64..2.0, -1.0f64..1.0),
        b in (-2.0f64..2.0, -1.0f64..1.0),
        c in (0.3f64..3.0, -1.0f64..1.0),
        z in (0.0f64..0.5, 0.0f64..std::f64::consts::TAU),
    ) {
        let (a, b, c) = (c64(a.0, a.1), c64(b.0, b.1), c64(c.0, c.1));
        let z = C64::from_polar(z.0, z.1);
        let f = |a: C64, c: C64| hyp2f1(a, b, c, z).unwrap();
        let r = c * (1.0 - z) * f(a, c) - c * f(a - 1.0, c) + (c - b) * z * f(a, c + 1.0);
        let scale = (c * f(a, c)).norm().max(1.0);
        prop_assert!(r.norm() / scale < 1e-10);
    }
}
