//! Small dense complex linear algebra on top of nalgebra.

use nalgebra::{DMatrix, Matrix2};

use crate::error::{Error, Result};
use crate::specfun::C64;

pub type Mat2 = Matrix2<C64>;

/// Determinant by partial-pivot LU; a pivot below `n * eps * max|a_ij|` is an error.
pub fn det_checked(a: &DMatrix<C64>) -> Result<C64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "determinant of a non-square matrix");
    if n == 0 {
        return Ok(C64::new(1.0, 0.0));
    }
    if a.iter().any(|z| !z.is_finite()) {
        return Err(Error::NonFinite("matrix entries"));
    }
    let scale = a.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let lu = a.clone().lu();
    let u = lu.u();
    let floor = (n as f64) * f64::EPSILON * scale;
    for k in 0..n {
        let p = u[(k, k)].norm();
        if p <= floor || p < f64::MIN_POSITIVE {
            return Err(Error::SingularMatrix { step: k, pivot: p });
        }
    }
    Ok(lu.determinant())
}

/// Determinant by partial-pivot LU without any singularity check.
pub fn det(a: &DMatrix<C64>) -> C64 {
    if a.nrows() == 0 {
        return C64::new(1.0, 0.0);
    }
    a.clone().lu().determinant()
}

pub fn mat2(a: C64, b: C64, c: C64, d: C64) -> Mat2 {
    Matrix2::new(a, b, c, d)
}

pub fn det2(m: &Mat2) -> C64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

pub fn trace2(m: &Mat2) -> C64 {
    m[(0, 0)] + m[(1, 1)]
}

/// Inverse of a 2x2 matrix; `None` if the determinant is zero or not finite.
pub fn inv2(m: &Mat2) -> Option<Mat2> {
    let d = det2(m);
    if d.norm() == 0.0 || !d.is_finite() {
        return None;
    }
    Some(mat2(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)]) / d)
}

/// Largest entry modulus.
pub fn max_abs2(m: &Mat2) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
