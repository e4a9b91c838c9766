//! Gap probability generating functions: the Jacobi ensemble through its
//! Fredholm determinant (two routes), and the circular groups.

use pvi::expansions::{circle_gap_series, jue_gap_series, CircleGroup};
use pvi::fredholm_jacobi::{circle_gap, default_order, fredholm_det, JacobiWeightParams};
use pvi::{c64, Result};

fn main() -> Result<()> {
    let (n, a, b, xi) = (3, 0.5, 1.5, 0.7);
    let params = JacobiWeightParams::new(n, a, b)?;
    println!("Jacobi N = {n}, a = {a}, b = {b}, xi = {xi}");
    for t in [0.05, 0.3, 0.6, 0.9, 0.97] {
        let v = fredholm_det(&params, t, c64(xi, 0.0), default_order(n))?;
        let series = match jue_gap_series(n, a, b, xi, 1.0 - t) {
            Ok(s) => format!("{:.10e}", s.value.re),
            Err(_) => "-".into(),
        };
        println!("  t = {t:<5} E = {:.14e}  routes differ {:.1e}  series {series}",
            v.value().re, v.discrepancy());
    }
    // xi = 1 gives the probability of no eigenvalue at all in (t, 1)
    let empty = fredholm_det(&params, 0.5, c64(1.0, 0.0), default_order(n))?;
    println!("  P(no eigenvalue in (0.5, 1)) = {:.12e}", empty.value().re);

    for (group, name) in [
        (CircleGroup::Unitary, "U(3)"),
        (CircleGroup::OrthogonalPlus, "O+(7)"),
        (CircleGroup::OrthogonalMinus, "O-(7)"),
    ] {
        for x in [0.1, 0.3] {
            let g = circle_gap(group, 3, x, c64(1.0, 0.0))?;
            let s = circle_gap_series(group, 3, 1.0, x);
            println!("{name}: x = {x}: determinant {:.12e}, series {:.12e}", g.re, s.value.re);
        }
    }
    Ok(())
}
