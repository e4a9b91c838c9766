//! Short-distance tau-function coefficients from monodromy data, mapped onto
//! the boundary behaviour of A_N(t).

use pvi::expansions::{an_boundary_series, an_from_tau_prefactor, jimbo_tau_expansion_from_s};
use pvi::monodromy::{sse_case_data, SseCase};
use pvi::sigma_pvi::v_from_jue;
use pvi::toeplitz::{Center, EnsembleParameters};
use pvi::{c64, Result};

fn main() -> Result<()> {
    let p = EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4)?;
    let v = v_from_jue(&p);
    let (theta, d) = sse_case_data(SseCase::A, &p)?;
    for (center, sigma, s) in [
        (Center::Zero, d.sigma0t, d.s0t),
        (Center::One, d.sigma_t1, d.s_t1),
        (Center::Infinity, d.sigma01, d.s01),
    ] {
        let tau = jimbo_tau_expansion_from_s(center, &theta, sigma, s, c64(1.0, 0.0))?;
        let from_tau = an_from_tau_prefactor(&p, &theta, &v, &tau)?;
        let direct = an_boundary_series(center, &p)?;
        println!("center {}:", center.name());
        println!("  k+ = {:.6e} (zero: {}), k- = {:.6e} (zero: {})",
            tau.k_plus, tau.plus_suppressed, tau.k_minus, tau.minus_suppressed);
        println!("  first coefficient {:.10e} vs {:.10e}",
            from_tau.analytic_coeffs[0], direct.analytic_coeffs[0]);
        println!("  non-analytic      {:.10e} vs {:.10e}",
            from_tau.nonanalytic_coeff, direct.nonanalytic_coeff);
    }
    Ok(())
}
