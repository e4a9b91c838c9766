//! Jacobi ensemble gap probabilities as Fredholm determinants of the
//! Christoffel-Darboux kernel for the weight `x^a (1-x)^b` on `(0, 1)`.
//!
//! Two routes are always computed: a Nystrom discretisation and the exact
//! rank-`N` Gram determinant, whose entries come from a separate quadrature.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansions::CircleGroup;
use crate::linalg::det_checked;
use crate::quadrature::{gauss_jacobi, gauss_legendre, jacobi_recurrence, ln_gamma_real};
use crate::specfun::{c64, C64};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiWeightParams {
    pub a: f64,
    pub b: f64,
    pub n: usize,
}

impl JacobiWeightParams {
    pub fn new(n: usize, a: f64, b: f64) -> Result<Self> {
        if n == 0 || !(a > -1.0) || !(b > -1.0) {
            return Err(Error::Range(format!("need N >= 1, a, b > -1 (got {n}, {a}, {b})")));
        }
        Ok(Self { a, b, n })
    }

    /// Recurrence coefficients `(alpha_j, beta_j)` for `j < count` of the monic
    /// orthogonal polynomials on `(0, 1)`.
    pub fn recurrence(&self, count: usize) -> (Vec<f64>, Vec<f64>) {
        // x = (1 - y)/2 maps the [-1, 1] family with (alpha, beta) = (a, b)
        let (ay, by) = jacobi_recurrence(count, self.a, self.b);
        let al = ay.iter().map(|v| (1.0 - v) / 2.0).collect();
        let be = by.iter().map(|v| v / 4.0).collect();
        (al, be)
    }

    /// Squared norms `h_j = (p_j, p_j)` for `j <= n`.
    pub fn norms(&self) -> Vec<f64> {
        let (_, be) = self.recurrence(self.n + 1);
        let mut h = Vec::with_capacity(self.n + 1);
        h.push(beta_fn(self.a + 1.0, self.b + 1.0));
        for j in 1..=self.n {
            h.push(h[j - 1] * be[j]);
        }
        h
    }

    pub fn weight(&self, x: f64) -> f64 {
        x.powf(self.a) * (1.0 - x).powf(self.b)
    }
}

fn beta_fn(p: f64, q: f64) -> f64 {
    (ln_gamma_real(p) + ln_gamma_real(q) - ln_gamma_real(p + q)).exp()
}

/// Values and first derivatives of `p_0 .. p_{count-1}` at `x`.
fn monic_values(params: &JacobiWeightParams, count: usize, x: f64) -> (Vec<f64>, Vec<f64>) {
    let (al, be) = params.recurrence(count.max(1));
    let mut p = vec![0.0; count];
    let mut d = vec![0.0; count];
    if count == 0 {
        return (p, d);
    }
    p[0] = 1.0;
    if count > 1 {
        p[1] = x - al[0];
        d[1] = 1.0;
    }
    for j in 1..count.saturating_sub(1) {
        p[j + 1] = (x - al[j]) * p[j] - be[j] * p[j - 1];
        d[j + 1] = p[j] + (x - al[j]) * d[j] - be[j] * d[j - 1];
    }
    (p, d)
}

/// Monic orthogonal polynomial of degree `j` for the weight `x^a (1-x)^b`.
pub fn monic_jacobi(j: usize, params: &JacobiWeightParams, x: f64) -> f64 {
    monic_values(params, j + 1, x).0[j]
}

/// `p_N(x) p_{N-1}(y) - p_{N-1}(x) p_N(y)`.
pub fn cd_numerator(params: &JacobiWeightParams, x: f64, y: f64) -> f64 {
    let n = params.n;
    let (px, _) = monic_values(params, n + 1, x);
    let (py, _) = monic_values(params, n + 1, y);
    px[n] * py[n - 1] - px[n - 1] * py[n]
}

/// Polynomial part of the kernel, `sum_{j<N} p_j(x) p_j(y) / h_j`, through the
/// Christoffel-Darboux form and its confluent limit on the diagonal.
fn cd_polynomial(params: &JacobiWeightParams, hn1: f64, x: f64, y: f64) -> f64 {
    let n = params.n;
    if x == y {
        let (p, d) = monic_values(params, n + 1, x);
        return (d[n] * p[n - 1] - d[n - 1] * p[n]) / hn1;
    }
    cd_numerator(params, x, y) / ((x - y) * hn1)
}

/// The symmetric kernel `sqrt(w(x) w(y)) sum_{j<N} p_j(x) p_j(y) / h_j`.
pub fn cd_kernel(params: &JacobiWeightParams, x: f64, y: f64) -> f64 {
    let hn1 = params.norms()[params.n - 1];
    (params.weight(x) * params.weight(y)).sqrt() * cd_polynomial(params, hn1, x, y)
}

/// Quadrature on `(t, 1)` for integrands `w(x) f(x)` with smooth `f`.
#[derive(Debug, Clone)]
pub struct KernelDiscretization {
    pub interval: (f64, f64),
    pub nodes: Vec<f64>,
    /// Weights including the factor `w(x)`.
    pub weights: Vec<f64>,
    pub order: usize,
}

/// Gauss-Jacobi on the panel touching 1 (absorbing `(1-x)^b`), plus
/// geometrically graded Gauss-Legendre panels when `t` is close to 0.
pub fn discretize(params: &JacobiWeightParams, t: f64, m: usize) -> KernelDiscretization {
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    let split = if t < 0.25 { 0.5 } else { t };
    let gj = gauss_jacobi(m, params.b, 0.0);
    let half = (1.0 - split) / 2.0;
    let scale = half.powf(params.b + 1.0);
    for (y, g) in gj.nodes.iter().zip(&gj.weights) {
        let x = split + half * (1.0 + y);
        nodes.push(x);
        weights.push(scale * g * x.powf(params.a));
    }
    if split > t {
        let gl = gauss_legendre(m);
        let mut hi = split;
        while hi > t {
            let lo = if hi / 4.0 > t * 1.5 { hi / 4.0 } else { t };
            let (c, h) = ((hi + lo) / 2.0, (hi - lo) / 2.0);
            for (y, g) in gl.nodes.iter().zip(&gl.weights) {
                let x = c + h * y;
                nodes.push(x);
                weights.push(h * g * params.weight(x));
            }
            hi = lo;
        }
    }
    KernelDiscretization {
        interval: (t, 1.0),
        nodes,
        weights,
        order: m,
    }
}

/// Both determinant routes and their difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FredholmValue {
    pub nystrom: C64,
    pub gram: C64,
}

impl FredholmValue {
    pub fn value(&self) -> C64 {
        self.gram
    }

    pub fn discrepancy(&self) -> f64 {
        (self.nystrom - self.gram).norm()
    }
}

/// Absolute disagreement allowed between the two routes.
pub const ROUTE_TOLERANCE: f64 = 1e-9;

/// Nystrom matrix `diag(sqrt q) K diag(sqrt q)` on the discretisation.
pub fn nystrom_matrix(params: &JacobiWeightParams, disc: &KernelDiscretization) -> DMatrix<f64> {
    let hn1 = params.norms()[params.n - 1];
    let k = disc.nodes.len();
    DMatrix::from_fn(k, k, |i, j| {
        (disc.weights[i] * disc.weights[j]).sqrt()
            * cd_polynomial(params, hn1, disc.nodes[i], disc.nodes[j])
    })
}

fn nystrom_det(params: &JacobiWeightParams, t: f64, xi: C64, m: usize) -> Result<C64> {
    let disc = discretize(params, t, m);
    let k = nystrom_matrix(params, &disc);
    let dim = k.nrows();
    let a = DMatrix::from_fn(dim, dim, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        c64(id, 0.0) - xi * k[(i, j)]
    });
    det_checked(&a)
}

/// `G_{jk} = int_t^1 w p_j p_k / sqrt(h_j h_k)`.
///
/// Integrates over the shorter of `(0, t)` and `(t, 1)` with a Gauss-Jacobi
/// rule that absorbs the endpoint power there; the remaining factor is
/// analytic well beyond the panel, so the rule converges geometrically. Over
/// `(0, t)` the result is `I` minus the integral.
pub fn gram_matrix(params: &JacobiWeightParams, t: f64) -> Result<DMatrix<f64>> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::Range(format!("t = {t} outside (0, 1)")));
    }
    let n = params.n;
    let h = params.norms();
    let m = 2 * n + 40;
    let (lower, len) = if t < 0.5 { (true, t) } else { (false, 1.0 - t) };
    let half = len / 2.0;
    let rule = if lower {
        gauss_jacobi(m, 0.0, params.a)
    } else {
        gauss_jacobi(m, params.b, 0.0)
    };
    let mut g = DMatrix::<f64>::zeros(n, n);
    for (y, wy) in rule.nodes.iter().zip(&rule.weights) {
        let (x, q) = if lower {
            let x = half * (1.0 + y);
            (x, wy * half.powf(params.a + 1.0) * (1.0 - x).powf(params.b))
        } else {
            let x = 1.0 - half * (1.0 - y);
            (x, wy * half.powf(params.b + 1.0) * x.powf(params.a))
        };
        let (p, _) = monic_values(params, n, x);
        let phi: Vec<f64> = p.iter().zip(&h).map(|(pj, hj)| pj / hj.sqrt()).collect();
        for j in 0..n {
            for k in 0..=j {
                g[(j, k)] += q * phi[j] * phi[k];
            }
        }
    }
    for j in 0..n {
        for k in 0..j {
            g[(k, j)] = g[(j, k)];
        }
    }
    if lower {
        g = DMatrix::identity(n, n) - g;
    }
    Ok(g)
}

fn gram_det(params: &JacobiWeightParams, t: f64, xi: C64) -> Result<C64> {
    let g = gram_matrix(params, t)?;
    let n = params.n;
    let a = DMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        c64(id, 0.0) - xi * g[(i, j)]
    });
    det_checked(&a)
}

/// Gap generating function `E(t) = det(1 - xi K)` on `(t, 1)`.
///
/// Fails with `OrderTooLow` when the Nystrom and Gram routes differ by more
/// than [`ROUTE_TOLERANCE`].
pub fn fredholm_det(params: &JacobiWeightParams, t: f64, xi: C64, m: usize) -> Result<FredholmValue> {
    let v = fredholm_det_unchecked(params, t, xi, m)?;
    if v.discrepancy() > ROUTE_TOLERANCE {
        return Err(Error::OrderTooLow(v.discrepancy()));
    }
    Ok(v)
}

/// As [`fredholm_det`] without the agreement check.
pub fn fredholm_det_unchecked(
    params: &JacobiWeightParams,
    t: f64,
    xi: C64,
    m: usize,
) -> Result<FredholmValue> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::Range(format!("t = {t} outside (0, 1)")));
    }
    if m < 2 * params.n + 8 {
        return Err(Error::Range(format!("order {m} below 2N + 8")));
    }
    Ok(FredholmValue {
        nystrom: nystrom_det(params, t, xi, m)?,
        gram: gram_det(params, t, xi)?,
    })
}

/// Default quadrature order used by the convenience wrappers.
pub fn default_order(n: usize) -> usize {
    2 * n + 24
}

/// `E(t)` from the Gram route, with the Nystrom check at the default order.
pub fn jacobi_gap(n: usize, a: f64, b: f64, xi: C64, t: f64) -> Result<C64> {
    let p = JacobiWeightParams::new(n, a, b)?;
    Ok(fredholm_det(&p, t, xi, default_order(n))?.value())
}

/// Circle ensemble gap generating functions. `x` is half the arc length for
/// `U(N)` and the arc angle for the orthogonal groups.
pub fn circle_gap(group: CircleGroup, n: usize, x: f64, xi: C64) -> Result<C64> {
    if x == 0.0 {
        return Ok(c64(1.0, 0.0));
    }
    let (a, b) = match group {
        CircleGroup::Unitary => return crate::toeplitz::unitary_arc_gap(n, xi, x),
        CircleGroup::OrthogonalMinus => (0.5, -0.5),
        CircleGroup::OrthogonalPlus => (-0.5, 0.5),
    };
    let c = (x / 2.0).cos();
    jacobi_gap(n, a, b, xi, c * c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_polynomials() {
        let p = JacobiWeightParams::new(3, 0.7, 1.3).unwrap();
        for x in [0.1, 0.5, 0.9] {
            assert_eq!(monic_jacobi(0, &p, x), 1.0);
            let want = x - (p.a + 1.0) / (p.a + p.b + 2.0);
            assert!((monic_jacobi(1, &p, x) - want).abs() < 1e-15);
        }
    }

    #[test]
    fn uniform_kernel_diagonal() {
        let p = JacobiWeightParams::new(1, 0.0, 0.0).unwrap();
        assert!((cd_kernel(&p, 0.3, 0.3) - 1.0).abs() < 1e-14);
        assert!((cd_kernel(&p, 0.3, 0.8) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(JacobiWeightParams::new(0, 0.0, 0.0).is_err());
        assert!(JacobiWeightParams::new(2, -1.0, 0.0).is_err());
        let p = JacobiWeightParams::new(2, 0.5, 0.5).unwrap();
        assert!(matches!(fredholm_det(&p, 0.5, c64(1.0, 0.0), 4), Err(Error::Range(_))));
    }
}
