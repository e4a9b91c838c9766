//! Compare the truncated boundary series of A_N(t) with the determinant as
//! t approaches each singular point.

use pvi::expansions::{an_boundary_series, an_infinity_series_matching_determinant};
use pvi::toeplitz::{eval_an_at, Center, EnsembleParameters};
use pvi::{c64, Result};

fn main() -> Result<()> {
    let p = EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4)?;
    let cases = [
        (Center::Zero, [1e-2, 1e-3, 1e-4]),
        (Center::One, [1.0 - 1e-2, 1.0 - 1e-3, 1.0 - 1e-4]),
        (Center::Infinity, [1e2, 1e3, 1e4]),
    ];
    for (center, ts) in cases {
        let s = an_boundary_series(center, &p)?;
        println!("center {}: prefactor exponent {:.6}, non-analytic exponent {:.6}",
            center.name(), s.prefactor_exponent, s.nonanalytic_exponent);
        for t in ts {
            let t = c64(t, 0.0);
            let det = eval_an_at(center, &p, t)?;
            let ser = s.eval(t);
            println!("  t = {:<10} rel diff {:.3e}  (estimate {:.1e})",
                t.re, (ser.value - det).norm() / det.norm(), ser.error_estimate / det.norm());
        }
    }
    let flipped = an_infinity_series_matching_determinant(&p)?;
    for t in [1e3, 1e4] {
        let t = c64(t, 0.0);
        let det = eval_an_at(Center::Infinity, &p, t)?;
        println!("infinity, flipped sign, t = {}: rel diff {:.3e}", t.re,
            (flipped.eval(t).value - det).norm() / det.norm());
    }
    Ok(())
}
