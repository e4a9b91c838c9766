//! The Hamiltonian system behind the sigma form: integrate (q, p) and watch
//! the auxiliary Hamiltonian satisfy the sigma equation along the flow.

use pvi::ode::OdeOptions;
use pvi::sigma_pvi::{
    aux_hamiltonian, aux_hamiltonian_derivative, integrate_hamiltonian, scaled_hamiltonian,
    HamiltonianState, PVIParameters,
};
use pvi::{c64, Result};

fn main() -> Result<()> {
    let v = PVIParameters::real([1.0, 2.0, 3.0, 4.0]);
    let start = HamiltonianState { t: c64(0.3, 0.0), q: c64(0.5, 0.0), p: c64(0.2, 0.0) };
    println!("greek parameters {:?}", v.greek());
    println!("H at the start: {:.12e}", scaled_hamiltonian(&v, &start));
    println!("h at the start: {:.12e}", aux_hamiltonian(&v, &start)?);
    let opts = OdeOptions { rtol: 1e-12, atol: 1e-12, ..OdeOptions::default() };
    let mut state = start;
    for t in [0.35, 0.4, 0.45] {
        state = integrate_hamiltonian(&v, &state, c64(t, 0.0), &opts)?;
        println!(
            "t = {t}: q = {:.10e}, p = {:.10e}, h = {:.10e}, dh/dt = {:.10e}",
            state.q,
            state.p,
            aux_hamiltonian(&v, &state)?,
            aux_hamiltonian_derivative(&v, &state)
        );
    }
    Ok(())
}
