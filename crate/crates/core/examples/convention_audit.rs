//! Decide the sign convention linking sigma to a gap probability by testing
//! all candidate conventions against the sigma form on Fredholm data.

use pvi::fredholm_jacobi::jacobi_gap;
use pvi::sigma_pvi::{convention_audit, v_from_jacobi};
use pvi::{c64, C64};

fn main() {
    let (n, a, b, xi) = (2, 0.5, 1.5, 0.7);
    let e = |x: C64| jacobi_gap(n, a, b, c64(xi, 0.0), x.re).unwrap_or(c64(f64::NAN, 0.0));
    let window: Vec<C64> = (0..5).map(|k| c64(0.2 + 0.15 * k as f64, 0.0)).collect();
    let rep = convention_audit(e, &v_from_jacobi(n, a, b), &window);
    for entry in rep.entries.iter().take(6) {
        println!("{:.3e}  {}", entry.max_residual, entry.label);
    }
    println!("... {} conventions in total", rep.entries.len());
    println!("unique winner: {}", rep.is_unique(1e-4, 1e-1));
}
