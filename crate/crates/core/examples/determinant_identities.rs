//! Closed-form evaluations of gamma-ratio determinants and the Morris integral.

use pvi::toeplitz::{
    gamma_ratio_determinant, gamma_ratio_determinant_general, morris_integral,
    morris_integral_quadrature,
};
use pvi::{c64, Result};

fn main() -> Result<()> {
    for n in 1..=5 {
        let (direct, product) = gamma_ratio_determinant(c64(1.3, 0.2), c64(2.1, -0.4), n)?;
        println!("n = {n}: direct {direct:.12e}, product {product:.12e}");
    }
    let z = [c64(1.2, 0.1), c64(2.5, -0.3), c64(3.7, 0.2)];
    let (direct, product) = gamma_ratio_determinant_general(&z, c64(0.8, 0.1))?;
    println!("general: direct {direct:.12e}, product {product:.12e}");

    let (a, b) = (c64(0.6, 0.15), c64(0.35, 0.0));
    for n in [1, 2] {
        let closed = morris_integral(n, a, b)?;
        let quad = morris_integral_quadrature(n, a, b, 1e-10)?;
        println!("Morris N = {n}: closed {closed:.12e}, quadrature {quad:.12e}");
    }
    Ok(())
}
