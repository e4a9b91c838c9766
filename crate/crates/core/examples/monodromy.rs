//! Monodromy data of the three cases: explicit matrices, trace coordinates,
//! the cubic relation between them and the connection relation.

use pvi::linalg::det2;
use pvi::monodromy::{
    connection_residual, invariants_from_matrices, manifold_value, sse_case_data,
    sse_case_matrices, SseCase, Sign,
};
use pvi::specfun::cos_pi;
use pvi::toeplitz::EnsembleParameters;
use pvi::{c64, Result};

fn main() -> Result<()> {
    let p = EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4)?;
    for case in [SseCase::A, SseCase::B, SseCase::C] {
        let (theta, data) = sse_case_data(case, &p)?;
        let q = sse_case_matrices(case, &p, c64(1.0, 0.0))?;
        let inv = invariants_from_matrices(&q);
        let cyc = q.cyclic_defect().iter().map(|z| z.norm()).fold(0.0, f64::max);
        let dets = [q.m0, q.mt, q.m1, q.minf]
            .iter()
            .map(|m| (det2(m) - 1.0).norm())
            .fold(0.0, f64::max);
        println!("case {case:?}: exponents {:?}", theta.as_array());
        println!("  sigma_0t = {:.6}, s_0t = {:.6}", data.sigma0t, data.s0t);
        println!("  cyclic defect {cyc:.1e}, max |det - 1| {dets:.1e}");
        println!(
            "  trace p_0t - 2 cos(pi sigma_0t) = {:.1e}",
            (inv.p0t - 2.0 * cos_pi(data.sigma0t)).norm()
        );
        println!("  cubic relation {:.1e}", manifold_value(&inv).norm());
        println!(
            "  connection relation {:.1e} / {:.1e}",
            connection_residual(&theta, &data, Sign::Plus).norm(),
            connection_residual(&theta, &data, Sign::Minus).norm()
        );
    }
    Ok(())
}
