//! Evaluate the spectrum singularity average A_N(t) from its Toeplitz
//! determinant, using each expansion center where it converges.

use pvi::toeplitz::{eval_an, eval_an_at, Center, EnsembleParameters};
use pvi::{c64, Result};

fn main() -> Result<()> {
    let p = EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4)?;
    println!("{:>8}  {:>6}  A_N(t)", "t", "center");
    for t in [0.05, 0.2, 0.35, 0.65, 0.8, 0.95, 3.0, 10.0] {
        let t = c64(t, 0.0);
        let center = Center::auto(t)?;
        println!("{:>8.3}  {:>6}  {:.12e}", t.re, center.name(), eval_an(&p, t)?);
    }
    // the 0 and 1 forms overlap in the middle of the interval
    let t = c64(0.5, 0.0);
    let a0 = eval_an_at(Center::Zero, &p, t)?;
    let a1 = eval_an_at(Center::One, &p, t)?;
    println!("t = 0.5 from center 0: {a0:.12e}");
    println!("t = 0.5 from center 1: {a1:.12e}  (|diff| {:.1e})", (a0 - a1).norm());
    Ok(())
}
