//! Integrate the sigma form of Painleve VI from Toeplitz seed data and check
//! it against the determinant further along the interval.

use pvi::crosscheck::sse_sigma_from_toeplitz;
use pvi::sigma_pvi::{integrate_sigma_report, v_from_jue};
use pvi::toeplitz::EnsembleParameters;
use pvi::{c64, Result};

fn main() -> Result<()> {
    let p = EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4)?;
    let v = v_from_jue(&p);
    println!("parameters v = {:?}", v.as_array());
    let seed = sse_sigma_from_toeplitz(&p, 0.05)?;
    println!("seed at t = 0.05: sigma = {:.10e}", seed.sigma);
    for target in [0.15, 0.3, 0.45] {
        let r = integrate_sigma_report(&v, &seed, c64(target, 0.0), 1e-12)?;
        let direct = sse_sigma_from_toeplitz(&p, target)?;
        println!(
            "t = {target}: ODE {:.10e}, determinant {:.10e}, rel {:.1e}, {} steps, residual {:.1e}",
            r.state.sigma,
            direct.sigma,
            (r.state.sigma - direct.sigma).norm() / direct.sigma.norm(),
            r.stats.accepted,
            r.final_residual
        );
    }
    // the straight path to the other side would pass through the singular point
    match integrate_sigma_report(&v, &seed, c64(2.0, 0.0), 1e-12) {
        Ok(_) => println!("unexpected: crossed t = 1"),
        Err(e) => println!("t = 2 refused: {e}"),
    }
    Ok(())
}
