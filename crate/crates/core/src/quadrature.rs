//! Gauss rules from the Golub-Welsch eigenproblem and adaptive Gauss-Kronrod integration.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::specfun::C64;

/// Nodes and weights of a Gauss rule.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma_real(a) + ln_gamma_real(b) - ln_gamma_real(a + b)
}

pub(crate) fn ln_gamma_real(x: f64) -> f64 {
    crate::specfun::gamma(C64::new(x, 0.0))
        .map(|g| g.norm().ln())
        .unwrap_or(f64::INFINITY)
}

/// Monic three-term recurrence `p_{k+1} = (x - a_k) p_k - b_k p_{k-1}` for the
/// Jacobi weight `(1-x)^alpha (1+x)^beta` on `[-1, 1]`.
pub fn jacobi_recurrence(m: usize, alpha: f64, beta: f64) -> (Vec<f64>, Vec<f64>) {
    let ab = alpha + beta;
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for k in 0..m {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        let ak = if k == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / (s * (s + 2.0))
        };
        a.push(ak);
        let bk = match k {
            0 => 0.0,
            1 => 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab)),
            _ => {
                4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab)
                    / (s * s * (s + 1.0) * (s - 1.0))
            }
        };
        b.push(bk);
    }
    (a, b)
}

/// Gauss-Jacobi rule with `m` nodes for `(1-x)^alpha (1+x)^beta` on `[-1, 1]`.
pub fn gauss_jacobi(m: usize, alpha: f64, beta: f64) -> GaussRule {
    assert!(m > 0 && alpha > -1.0 && beta > -1.0);
    let (a, b) = jacobi_recurrence(m, alpha, beta);
    let mut jm = DMatrix::<f64>::zeros(m, m);
    for k in 0..m {
        jm[(k, k)] = a[k];
        if k + 1 < m {
            let off = b[k + 1].sqrt();
            jm[(k, k + 1)] = off;
            jm[(k + 1, k)] = off;
        }
    }
    let mu0 = ((alpha + beta + 1.0) * 2f64.ln() + ln_beta(alpha + 1.0, beta + 1.0)).exp();
    let eig = SymmetricEigen::new(jm);
    let mut pairs: Vec<(f64, f64)> = (0..m)
        .map(|k| {
            let v0 = eig.eigenvectors[(0, k)];
            (eig.eigenvalues[k], mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    GaussRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    }
}

pub fn gauss_legendre(m: usize) -> GaussRule {
    gauss_jacobi(m, 0.0, 0.0)
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        k += s * WGK[j];
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    (k * h, ((k - g) * h).norm())
}

/// Adaptive 15-point Gauss-Kronrod integration of a complex integrand on `[a, b]`.
///
/// Endpoint singularities are fine as long as they are integrable;
/// interior ones should be passed as breakpoints to [`integrate_with_breaks`].
pub fn integrate<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, tol: f64) -> Result<(C64, f64)> {
    integrate_with_breaks(f, &[a, b], tol)
}

pub fn integrate_with_breaks<F: Fn(f64) -> C64>(
    f: F,
    points: &[f64],
    tol: f64,
) -> Result<(C64, f64)> {
    const MAX_INTERVALS: usize = 20_000;
    let mut pieces: Vec<(f64, f64, C64, f64)> = points
        .windows(2)
        .map(|w| {
            let (v, e) = gk15(&f, w[0], w[1]);
            (w[0], w[1], v, e)
        })
        .collect();
    loop {
        let total: C64 = pieces.iter().map(|p| p.2).sum();
        let err: f64 = pieces.iter().map(|p| p.3).sum();
        if !total.is_finite() {
            return Err(Error::NonFinite("quadrature"));
        }
        if err <= tol * total.norm().max(1.0) {
            return Ok((total, err));
        }
        if pieces.len() >= MAX_INTERVALS {
            return Err(Error::NoConvergence(pieces.len()));
        }
        let (idx, _) = pieces
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("non-empty");
        let (a, b, _, _) = pieces.swap_remove(idx);
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            // cannot split further; accept what we have
            let total: C64 = pieces.iter().map(|p| p.2).sum::<C64>() + gk15(&f, a, b).0;
            return Ok((total, err));
        }
        let (v1, e1) = gk15(&f, a, m);
        let (v2, e2) = gk15(&f, m, b);
        pieces.push((a, m, v1, e1));
        pieces.push((m, b, v2, e2));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_integrates_polynomials() {
        let r = gauss_legendre(6);
        let s: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| w * x.powi(10)).sum();
        assert!((s - 2.0 / 11.0).abs() < 1e-14);
    }

    #[test]
    fn jacobi_weight_mass() {
        let r = gauss_jacobi(5, 0.5, -0.3);
        let s: f64 = r.weights.iter().sum();
        // 2^(a+b+1) B(a+1, b+1)
        let want = ((0.5 - 0.3 + 1.0) * 2f64.ln() + ln_beta(1.5, 0.7)).exp();
        assert!((s - want).abs() < 1e-13);
    }

    #[test]
    fn kronrod_sqrt_endpoint() {
        let (v, _) = integrate(|x| C64::new(x.sqrt(), 0.0), 0.0, 1.0, 1e-12).unwrap();
        assert!((v.re - 2.0 / 3.0).abs() < 1e-11);
    }
}
