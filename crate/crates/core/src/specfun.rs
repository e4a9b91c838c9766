//! Complex gamma, Gauss hypergeometric series and small algebraic helpers.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Default distance below which a parameter combination counts as an integer.
pub const DEFAULT_GUARD: f64 = 1e-8;

const POLE_EPS: f64 = 1e-12;
const MAX_TERMS: usize = 50_000;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// True iff `z` lies within `eps` of an integer in the complex plane.
pub fn is_near_integer(z: C64, eps: f64) -> bool {
    let n = z.re.round();
    (z - n).norm() < eps
}

fn near_nonpositive_integer(z: C64, eps: f64) -> bool {
    z.re < 0.5 && is_near_integer(z, eps)
}

/// `sin(pi z)` with exact zeros at integers.
pub fn sin_pi(z: C64) -> C64 {
    let (s, c) = sin_cos_pi_real(z.re);
    let y = PI * z.im;
    c64(s * y.cosh(), c * y.sinh())
}

/// `cos(pi z)` with exact zeros at half integers.
pub fn cos_pi(z: C64) -> C64 {
    let (s, c) = sin_cos_pi_real(z.re);
    let y = PI * z.im;
    c64(c * y.cosh(), -s * y.sinh())
}

/// `exp(i pi z)`.
pub fn exp_i_pi(z: C64) -> C64 {
    let (s, c) = sin_cos_pi_real(z.re);
    c64(c, s) * (-PI * z.im).exp()
}

fn sin_cos_pi_real(x: f64) -> (f64, f64) {
    // reduce to [-1, 1] so integers and half integers come out exact
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 {
        return (0.0, 1.0);
    }
    if r.abs() == 1.0 {
        return (0.0, -1.0);
    }
    if r == 0.5 {
        return (1.0, 0.0);
    }
    if r == -0.5 {
        return (-1.0, 0.0);
    }
    let a = PI * r;
    (a.sin(), a.cos())
}

/// Principal power `z^a` with `arg z` in `(-pi, pi]`; `0^a` is 0 for `Re a > 0`.
pub fn cpow(z: C64, a: C64) -> C64 {
    if z == C64::new(0.0, 0.0) {
        if a == C64::new(0.0, 0.0) {
            return C64::new(1.0, 0.0);
        }
        return C64::new(0.0, 0.0);
    }
    (a * z.ln()).exp()
}

fn lanczos_ln_gamma(z: C64) -> C64 {
    let z = z - 1.0;
    let mut x = C64::new(LANCZOS_P[0], 0.0);
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        x += *p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// Complex gamma function.
pub fn gamma(z: C64) -> Result<C64> {
    if near_nonpositive_integer(z, POLE_EPS) {
        return Err(Error::Pole(z));
    }
    let g = if z.re < 0.5 {
        PI / (sin_pi(z) * lanczos_ln_gamma(1.0 - z).exp())
    } else {
        lanczos_ln_gamma(z).exp()
    };
    if g.is_finite() {
        Ok(g)
    } else {
        Err(Error::NonFinite("gamma"))
    }
}

/// Reciprocal gamma, an entire function; exactly zero at non-positive integers.
pub fn rgamma(z: C64) -> C64 {
    let n = z.re.round();
    if n <= 0.0 && (z - n).norm() <= 8.0 * f64::EPSILON * n.abs().max(1.0) {
        return C64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        sin_pi(z) * lanczos_ln_gamma(1.0 - z).exp() / PI
    } else {
        (-lanczos_ln_gamma(z)).exp()
    }
}

/// Pochhammer symbol `(a)_k`.
pub fn poch(a: C64, k: usize) -> C64 {
    (0..k).fold(C64::new(1.0, 0.0), |acc, j| acc * (a + j as f64))
}

/// Series domain controls for [`hyp2f1_in`].
#[derive(Debug, Clone, Copy)]
pub struct SeriesDomain {
    /// `|z| <= 1 - delta` is required for non-terminating series.
    pub delta: f64,
    pub guard: f64,
}

impl Default for SeriesDomain {
    fn default() -> Self {
        Self {
            delta: 0.05,
            guard: DEFAULT_GUARD,
        }
    }
}

/// Degree if `a` is a non-positive integer (to rounding).
fn terminating_degree(a: C64) -> Option<usize> {
    let n = a.re.round();
    if n <= 0.0 && (a - n).norm() <= 64.0 * f64::EPSILON * n.abs().max(1.0) {
        Some((-n) as usize)
    } else {
        None
    }
}

/// Gauss hypergeometric function by direct summation.
pub fn hyp2f1(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    hyp2f1_in(a, b, c, z, &SeriesDomain::default())
}

pub fn hyp2f1_in(a: C64, b: C64, c: C64, z: C64, dom: &SeriesDomain) -> Result<C64> {
    let degree = match (terminating_degree(a), terminating_degree(b)) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (m, n) => m.or(n),
    };
    if near_nonpositive_integer(c, dom.guard) {
        let k = (-c.re.round()) as usize;
        let safe = matches!(degree, Some(m) if m <= k);
        if !safe {
            return Err(Error::Degenerate(format!(
                "2F1 lower parameter {c} near a non-positive integer"
            )));
        }
    }
    if z == C64::new(0.0, 0.0) {
        return Ok(C64::new(1.0, 0.0));
    }
    if let Some(m) = degree {
        let mut term = C64::new(1.0, 0.0);
        let mut sum = term;
        for k in 0..m {
            let kf = k as f64;
            term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
            sum += term;
        }
        return Ok(sum);
    }
    if z.norm() > 1.0 - dom.delta {
        return Err(Error::ConvergenceDomain(format!(
            "|z| = {} exceeds {}",
            z.norm(),
            1.0 - dom.delta
        )));
    }
    sum_series(|k| {
        let kf = k as f64;
        (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z
    }, z.norm())
}

/// Sum `1 + t1 + t2 + ...` with `t_{k+1} = t_k * ratio(k)`.
fn sum_series(ratio: impl Fn(usize) -> C64, zabs: f64) -> Result<C64> {
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..MAX_TERMS {
        let r = ratio(k);
        term *= r;
        sum += term;
        let rho = r.norm().max(zabs);
        if rho < 1.0 && k > 2 {
            let tail = term.norm() * rho / (1.0 - rho);
            if tail <= 1e-17 * sum.norm() || term.norm() == 0.0 {
                return Ok(sum);
            }
        }
    }
    Err(Error::NoConvergence(MAX_TERMS))
}

/// `2F1(a, b; c; z) / Gamma(c)`, finite for every `c`.
pub fn hyp2f1_regularized(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    let dom = SeriesDomain::default();
    if !near_nonpositive_integer(c, POLE_EPS) {
        if near_nonpositive_integer(c, dom.guard) {
            return Err(Error::Degenerate(format!(
                "regularized 2F1 with c = {c} close to but not at a pole"
            )));
        }
        return Ok(hyp2f1_in(a, b, c, z, &dom)? * rgamma(c));
    }
    // c = -m: the first m + 1 terms vanish
    let m = (-c.re.round()) as usize;
    let lead = poch(a, m + 1) * poch(b, m + 1) / factorial(m + 1) * z.powu(m as u32 + 1);
    if lead == C64::new(0.0, 0.0) {
        return Ok(lead);
    }
    let shift = (m + 1) as f64;
    Ok(lead * hyp2f1_in(a + shift, b + shift, C64::new(shift + 1.0, 0.0), z, &dom)?)
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Elementary symmetric polynomial `e_p` of the given values.
pub fn elementary_symmetric(p: usize, values: &[C64]) -> Result<C64> {
    if p > values.len() {
        return Err(Error::Range(format!(
            "e_{p} of {} values",
            values.len()
        )));
    }
    let mut e = vec![C64::new(0.0, 0.0); p + 1];
    e[0] = C64::new(1.0, 0.0);
    for &x in values {
        for j in (1..=p).rev() {
            e[j] = e[j] + e[j - 1] * x;
        }
    }
    Ok(e[p])
}

/// `e_2` without the range check, for fixed-size call sites.
pub fn e2(values: &[C64]) -> C64 {
    let mut s = C64::new(0.0, 0.0);
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            s += values[i] * values[j];
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn gamma_at_one_and_half() {
        assert!(close(gamma(c64(1.0, 0.0)).unwrap(), c64(1.0, 0.0), 1e-15));
        assert!(close(gamma(c64(0.5, 0.0)).unwrap(), c64(PI.sqrt(), 0.0), 1e-14));
        assert!(close(gamma(c64(5.0, 0.0)).unwrap(), c64(24.0, 0.0), 1e-14));
    }

    #[test]
    fn gamma_poles() {
        assert!(matches!(gamma(c64(0.0, 0.0)), Err(Error::Pole(_))));
        assert!(matches!(gamma(c64(-3.0, 1e-13)), Err(Error::Pole(_))));
        assert_eq!(rgamma(c64(-4.0, 0.0)), c64(0.0, 0.0));
        assert_eq!(rgamma(c64(0.0, 0.0)), c64(0.0, 0.0));
    }

    #[test]
    fn trig_exact_zeros() {
        assert_eq!(sin_pi(c64(4.0, 0.0)), c64(0.0, 0.0));
        assert_eq!(cos_pi(c64(1.5, 0.0)).re, 0.0);
        assert_eq!(exp_i_pi(c64(1.0, 0.0)), c64(-1.0, 0.0));
    }

    #[test]
    fn hyp2f1_closed_forms() {
        let one = c64(1.0, 0.0);
        let v = hyp2f1(one, one, c64(2.0, 0.0), c64(0.5, 0.0)).unwrap();
        assert!(close(v, c64(2.0 * 2f64.ln(), 0.0), 1e-14));
        let a = c64(0.3, 0.2);
        let z = c64(0.0, 0.0);
        assert_eq!(hyp2f1(a, a, a, z).unwrap(), one);
        // (1 - z)^(-a)
        let z = c64(0.3, -0.4);
        let v = hyp2f1(a, c64(1.7, 0.0), c64(1.7, 0.0), z).unwrap();
        assert!(close(v, cpow(1.0 - z, -a), 1e-14));
    }

    #[test]
    fn hyp2f1_domain_and_guard() {
        let a = c64(0.3, 0.0);
        assert!(matches!(
            hyp2f1(a, a, c64(1.5, 0.0), c64(0.97, 0.0)),
            Err(Error::ConvergenceDomain(_))
        ));
        assert!(matches!(
            hyp2f1(a, a, c64(-2.0, 1e-10), c64(0.2, 0.0)),
            Err(Error::Degenerate(_))
        ));
        // terminating series ignore the domain restriction
        let v = hyp2f1(c64(-2.0, 0.0), a, c64(1.5, 0.0), c64(3.0, 0.0)).unwrap();
        let want = 1.0 - 2.0 * 0.3 / 1.5 * 3.0 + 0.3 * 1.3 / (1.5 * 2.5) * 9.0;
        assert!(close(v, c64(want, 0.0), 1e-14));
    }

    #[test]
    fn regularized_at_pole() {
        let a = c64(0.4, 0.1);
        let b = c64(-0.3, 0.2);
        let z = c64(0.2, 0.1);
        let at = hyp2f1_regularized(a, b, c64(-1.0, 0.0), z).unwrap();
        let eps = 1e-6;
        let near = hyp2f1(a, b, c64(-1.0 + eps, 0.0), z).unwrap() * rgamma(c64(-1.0 + eps, 0.0));
        assert!((at - near).norm() < 1e-5);
    }

    #[test]
    fn elementary_symmetric_values() {
        let v: Vec<C64> = [1.0, 2.0, 3.0].iter().map(|&x| c64(x, 0.0)).collect();
        assert_eq!(elementary_symmetric(2, &v).unwrap(), c64(11.0, 0.0));
        assert_eq!(elementary_symmetric(0, &v[..2]).unwrap(), c64(1.0, 0.0));
        let w: Vec<C64> = [-1.0, -2.0, 3.0, 4.0].iter().map(|&x| c64(x, 0.0)).collect();
        assert_eq!(elementary_symmetric(2, &w).unwrap(), c64(-7.0, 0.0));
        assert!(matches!(elementary_symmetric(5, &w), Err(Error::Range(_))));
        assert_eq!(e2(&w), c64(-7.0, 0.0));
    }

    #[test]
    fn near_integer() {
        assert!(is_near_integer(c64(3.000_000_000_1, 0.0), 1e-8));
        assert!(!is_near_integer(c64(0.5, 0.0), 1e-8));
        assert!(is_near_integer(c64(2.0, 1e-9), 1e-8));
    }
}
