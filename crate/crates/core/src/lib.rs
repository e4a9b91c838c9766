//! Numerics for the sigma form of Painleve VI and the random matrix averages tied to it.
//!
//! Three independent routes to the same quantities live here:
//! Toeplitz determinants with hypergeometric symbol coefficients ([`toeplitz`]),
//! integration of the sigma-form ODE from boundary series ([`sigma_pvi`], [`expansions`]),
//! and Fredholm determinants of the Jacobi kernel ([`fredholm_jacobi`]).
//! [`monodromy`] holds the explicit monodromy parameterisation and the
//! three monodromy cases of the spectrum singularity average.

pub mod crosscheck;
pub mod error;
pub mod expansions;
pub mod fredholm_jacobi;
pub mod linalg;
pub mod monodromy;
pub mod ode;
pub mod quadrature;
pub mod report;
pub mod sigma_pvi;
pub mod specfun;
pub mod toeplitz;
#[cfg(feature = "xprec")]
pub mod xprec;

pub use error::{Error, Result};
pub use specfun::{c64, C64};
