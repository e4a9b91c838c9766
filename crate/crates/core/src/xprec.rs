//! Double-double complex arithmetic for oracle evaluations whose f64 form
//! loses too many digits to cancellation.

use std::ops::{Add, Div, Mul, Neg, Sub};
use twofloat::TwoFloat;

use crate::C64;

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DdComplex {
    pub re: TwoFloat,
    pub im: TwoFloat,
}

impl DdComplex {
    pub fn new(re: TwoFloat, im: TwoFloat) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::from(C64::new(0.0, 0.0))
    }

    pub fn one() -> Self {
        Self::from(C64::new(1.0, 0.0))
    }

    pub fn norm_sqr(self) -> TwoFloat {
        self.re * self.re + self.im * self.im
    }

    /// Magnitude rounded to f64, good enough for pivoting.
    pub fn abs_f64(self) -> f64 {
        f64::from(self.norm_sqr()).sqrt()
    }

    pub fn to_c64(self) -> C64 {
        C64::new(f64::from(self.re), f64::from(self.im))
    }
}

impl From<C64> for DdComplex {
    fn from(z: C64) -> Self {
        Self::new(TwoFloat::from(z.re), TwoFloat::from(z.im))
    }
}

impl From<f64> for DdComplex {
    fn from(x: f64) -> Self {
        Self::from(C64::new(x, 0.0))
    }
}

impl Add for DdComplex {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for DdComplex {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for DdComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for DdComplex {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Div for DdComplex {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let d = o.norm_sqr();
        Self::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
}

/// Determinant by Gaussian elimination with partial pivoting. `m` is row-major.
pub fn dd_det(mut m: Vec<Vec<DdComplex>>) -> DdComplex {
    let n = m.len();
    let mut det = DdComplex::one();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| m[i][col].abs_f64().total_cmp(&m[j][col].abs_f64()))
            .unwrap_or(col);
        if m[piv][col].abs_f64() == 0.0 {
            return DdComplex::zero();
        }
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col];
        det = det * p;
        for r in col + 1..n {
            let f = m[r][col] / p;
            for c in col..n {
                let v = m[col][c];
                m[r][c] = m[r][c] - f * v;
            }
        }
    }
    det
}

/// Rising product `prod_{i<count} (x + step * i)` in double-double.
pub fn dd_product(x: C64, step: f64, count: usize) -> DdComplex {
    let x = DdComplex::from(x);
    (0..count).fold(DdComplex::one(), |acc, i| {
        acc * (x + DdComplex::from(step * i as f64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_of_small_matrices() {
        let c = |re: f64, im: f64| DdComplex::from(C64::new(re, im));
        let m = vec![vec![c(1.0, 1.0), c(2.0, 0.0)], vec![c(3.0, 0.0), c(4.0, -1.0)]];
        // (1+i)(4-i) - 6 = 5 + 3i - 6
        let d = dd_det(m).to_c64();
        assert!((d - C64::new(-1.0, 3.0)).norm() < 1e-15);
        let p = dd_product(C64::new(2.0, 0.0), 1.0, 3).to_c64();
        assert_eq!(p, C64::new(24.0, 0.0));
    }

    #[test]
    fn keeps_digits_lost_in_f64() {
        let big = DdComplex::from(1e16);
        let x = (big + DdComplex::one()) - big;
        assert_eq!(x.to_c64(), C64::new(1.0, 0.0));
    }
}
