//! The spectrum singularity average as a Toeplitz determinant, plus the
//! gamma-ratio determinant evaluations and the Morris integral.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det, det_checked};
use crate::quadrature::integrate;
use crate::specfun::{
    c64, cpow, exp_i_pi, gamma, hyp2f1, hyp2f1_regularized, is_near_integer, poch, rgamma, sin_pi,
    C64, DEFAULT_GUARD,
};

const I: C64 = C64::new(0.0, 1.0);

/// Inputs of the average: `N`, the exponents `mu`, `omega1`, `omega2` and the jump `xi_star`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleParameters {
    pub n: usize,
    pub mu: C64,
    pub omega1: C64,
    pub omega2: C64,
    pub xi_star: C64,
}

impl EnsembleParameters {
    pub fn new(n: usize, mu: C64, omega1: C64, omega2: C64, xi_star: C64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Range("N must be positive".into()));
        }
        if (2.0 * omega1).re <= -1.0 || (2.0 * mu).re <= -1.0 {
            return Err(Error::Degenerate(
                "need Re(2 omega1) > -1 and Re(2 mu) > -1".into(),
            ));
        }
        Ok(Self {
            n,
            mu,
            omega1,
            omega2,
            xi_star,
        })
    }

    /// Real-parameter shorthand used throughout tests and examples.
    pub fn real(n: usize, mu: f64, omega1: f64, omega2: f64, xi_star: f64) -> Result<Self> {
        Self::new(
            n,
            c64(mu, 0.0),
            c64(omega1, 0.0),
            c64(omega2, 0.0),
            c64(xi_star, 0.0),
        )
    }

    pub fn omega(&self) -> C64 {
        self.omega1 + I * self.omega2
    }

    pub fn omega_bar(&self) -> C64 {
        self.omega1 - I * self.omega2
    }

    pub fn with_xi_star(mut self, xi_star: C64) -> Self {
        self.xi_star = xi_star;
        self
    }
}

/// `xi* = 1 - (1 - xi) e^{-i pi mu}`.
pub fn xi_star_from_xi(xi: C64, mu: C64) -> C64 {
    1.0 - (1.0 - xi) * exp_i_pi(-mu)
}

/// Expansion center of a hypergeometric form of the symbol coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Center {
    Zero,
    One,
    Infinity,
}

impl Center {
    /// `|t| <= 0.4` picks 0, `|1 - t| <= 0.4` picks 1, `|t| >= 2.5` picks infinity.
    pub fn auto(t: C64) -> Result<Center> {
        if t.norm() <= 0.4 {
            Ok(Center::Zero)
        } else if (1.0 - t).norm() <= 0.4 {
            Ok(Center::One)
        } else if t.norm() >= 2.5 {
            Ok(Center::Infinity)
        } else {
            Err(Error::ConvergenceDomain(format!(
                "t = {t} is not near 0, 1 or infinity"
            )))
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Center::Zero => "0",
            Center::One => "1",
            Center::Infinity => "inf",
        }
    }
}

impl std::str::FromStr for Center {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" | "zero" => Ok(Center::Zero),
            "1" | "one" => Ok(Center::One),
            "inf" | "infinity" => Ok(Center::Infinity),
            _ => Err(Error::Range(format!("unknown center {s}"))),
        }
    }
}

/// One Fourier coefficient split as `w_n = t^s (a + z^e b)` with `z = 1 - t` at
/// center 1 and `z = t` otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolCoefficient {
    pub center: Center,
    pub index: i64,
    pub t: C64,
    /// `s` in `w_n = t^s (a + z^e b)`.
    pub prefactor_exponent: C64,
    pub analytic_part: C64,
    pub nonanalytic_part: C64,
    pub nonanalytic_exponent: C64,
}

impl SymbolCoefficient {
    fn local(&self) -> C64 {
        match self.center {
            Center::One => 1.0 - self.t,
            _ => self.t,
        }
    }

    /// `a + z^e b`.
    pub fn scaled(&self) -> C64 {
        if self.nonanalytic_part == C64::new(0.0, 0.0) {
            return self.analytic_part;
        }
        self.analytic_part + cpow(self.local(), self.nonanalytic_exponent) * self.nonanalytic_part
    }

    /// The coefficient `w_n` itself.
    pub fn value(&self) -> C64 {
        cpow(self.t, self.prefactor_exponent) * self.scaled()
    }
}

fn guard(z: C64, what: &str) -> Result<()> {
    if is_near_integer(z, DEFAULT_GUARD) {
        Err(Error::Degenerate(format!("{what} = {z} is an integer")))
    } else {
        Ok(())
    }
}

/// Fourier coefficient `w_n` of the weight in the hypergeometric form suited to `center`.
pub fn symbol_coefficient(
    center: Center,
    n: i64,
    p: &EnsembleParameters,
    t: C64,
) -> Result<SymbolCoefficient> {
    let nf = n as f64;
    let (mu, w1, om, omb, xs) = (p.mu, p.omega1, p.omega(), p.omega_bar(), p.xi_star);
    let zero = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    match center {
        Center::Zero => {
            let e = nf + mu - omb;
            let f = if xs == zero {
                zero
            } else {
                guard(e, "n + mu - conj(omega)")?;
                xs * exp_i_pi(-e) / (2.0 * I * sin_pi(e))
            };
            let a = (1.0 + f)
                * gamma(2.0 * w1 + 1.0)?
                * rgamma(1.0 + nf + mu + om)
                * hyp2f1_regularized(-2.0 * mu, -nf - mu - om, 1.0 - nf - mu + omb, t)?;
            let b = if f == zero {
                zero
            } else {
                -f * gamma(2.0 * mu + 1.0)?
                    * rgamma(1.0 - nf + mu + omb)
                    * hyp2f1_regularized(-2.0 * w1, nf - mu - omb, 1.0 + nf + mu - omb, t)?
            };
            Ok(SymbolCoefficient {
                center,
                index: n,
                t,
                prefactor_exponent: -mu,
                analytic_part: a,
                nonanalytic_part: b,
                nonanalytic_exponent: e,
            })
        }
        Center::One => {
            let s = 2.0 * mu + 2.0 * w1;
            guard(s, "2 mu + 2 omega1")?;
            let z = one - t;
            let a = gamma(s + 1.0)?
                * rgamma(1.0 + nf + mu + om)
                * rgamma(1.0 - nf + mu + omb)
                * hyp2f1(-2.0 * w1, nf - mu - omb, -s, z)?;
            let k = (xs * exp_i_pi(-(nf + mu - omb)) / (2.0 * I)
                + sin_pi(2.0 * mu) * sin_pi(nf + mu + om) / sin_pi(s))
                / PI;
            let b = k
                * gamma(1.0 + 2.0 * mu)?
                * gamma(1.0 + 2.0 * w1)?
                * hyp2f1_regularized(1.0 + 2.0 * mu, nf + 1.0 + mu + om, 2.0 + s, z)?;
            Ok(SymbolCoefficient {
                center,
                index: n,
                t,
                prefactor_exponent: nf - omb,
                analytic_part: a,
                nonanalytic_part: b,
                nonanalytic_exponent: 1.0 + s,
            })
        }
        Center::Infinity => {
            let e = nf - mu + om;
            guard(e, "n - mu + omega")?;
            let u = one / t;
            let a = exp_i_pi(-2.0 * mu) / sin_pi(e)
                * (sin_pi(nf + mu + om) + xs * exp_i_pi(-(nf + mu + om)) / (2.0 * I))
                * gamma(2.0 * w1 + 1.0)?
                * rgamma(1.0 - nf + mu + omb)
                * hyp2f1_regularized(-2.0 * mu, nf - mu - omb, 1.0 + e, u)?;
            let b = -exp_i_pi(-(nf + mu + om)) / sin_pi(e)
                * (sin_pi(2.0 * mu) + xs * exp_i_pi(-2.0 * mu) / (2.0 * I))
                * gamma(2.0 * mu + 1.0)?
                * rgamma(1.0 + nf + mu + om)
                * hyp2f1_regularized(-2.0 * w1, -nf - mu - om, 1.0 - nf + mu - om, u)?;
            Ok(SymbolCoefficient {
                center,
                index: n,
                t,
                prefactor_exponent: mu,
                analytic_part: a,
                nonanalytic_part: b,
                nonanalytic_exponent: e,
            })
        }
    }
}

/// `det[w_{j-k}]_{0 <= j,k < n}` by pivoted LU.
pub fn toeplitz_determinant<F>(coeff: F, n: usize) -> Result<C64>
where
    F: Fn(i64) -> Result<C64>,
{
    let mut cache = std::collections::HashMap::new();
    let mut m = DMatrix::<C64>::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            let d = j as i64 - k as i64;
            let v = match cache.get(&d) {
                Some(v) => *v,
                None => {
                    let v = coeff(d)?;
                    cache.insert(d, v);
                    v
                }
            };
            m[(j, k)] = v;
        }
    }
    det_checked(&m)
}

/// The average `A_N(t)` with the expansion center chosen from `t`.
pub fn eval_an(p: &EnsembleParameters, t: C64) -> Result<C64> {
    eval_an_at(Center::auto(t)?, p, t)
}

/// The average `A_N(t)` using the symbol form of the given center.
pub fn eval_an_at(center: Center, p: &EnsembleParameters, t: C64) -> Result<C64> {
    let n = p.n;
    // row/column scalings t^j, t^-k drop out of the determinant
    let d = toeplitz_determinant(|k| Ok(symbol_coefficient(center, k, p, t)?.scaled()), n)?;
    let nf = n as f64;
    let pref = match center {
        Center::Zero => cpow(t, -nf * p.mu),
        Center::One => cpow(t, -nf * p.omega_bar()),
        Center::Infinity => cpow(t, nf * p.mu),
    };
    Ok(pref * d)
}

/// Generating function of the number of `U(N)` eigenvalues on an arc of
/// length `2x`, from the closed-form Fourier coefficients of an indicator weight.
pub fn unitary_arc_gap(n: usize, xi: C64, x: f64) -> Result<C64> {
    let phi = 2.0 * x;
    toeplitz_determinant(
        |k| {
            if k == 0 {
                Ok(1.0 - xi * phi / (2.0 * PI))
            } else {
                let kf = k as f64;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let e = C64::from_polar(1.0, kf * phi) - 1.0;
                Ok(-xi * sign * e / (2.0 * PI * I * kf))
            }
        },
        n,
    )
}

/// Direct determinant and product formula of `det(Gamma(d+k-j)/Gamma(c+k-j))`.
pub fn gamma_ratio_determinant(c: C64, d: C64, n: usize) -> Result<(C64, C64)> {
    let mut m = DMatrix::<C64>::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            let s = k as f64 - j as f64;
            m[(j, k)] = gamma(d + s)? * rgamma(c + s);
        }
    }
    let direct = det(&m);
    let mut prod = C64::new(1.0, 0.0);
    let nf = n as f64;
    for j in 0..n {
        let jf = j as f64;
        prod *= crate::specfun::factorial(j)
            * gamma(1.0 + d - c)?
            * rgamma(1.0 + d - c - jf)
            * gamma(d - nf + 1.0 + jf)?
            * rgamma(c + jf);
    }
    Ok((direct, prod))
}

/// Direct determinant and product formula of `det(Gamma(z_k+b-j)/Gamma(z_k-j))`.
pub fn gamma_ratio_determinant_general(z: &[C64], b: C64) -> Result<(C64, C64)> {
    let n = z.len();
    let mut m = DMatrix::<C64>::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            let jf = j as f64;
            m[(j, k)] = gamma(z[k] + b - jf)? * rgamma(z[k] - jf);
        }
    }
    let direct = det(&m);
    let nf = n as f64;
    let mut prod = C64::new(1.0, 0.0);
    for k in 0..n {
        for j in 0..k {
            prod *= z[k] - z[j];
        }
    }
    for (j, &zj) in z.iter().enumerate() {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        prod *= sign * poch(-b, j) * gamma(zj + b - nf + 1.0)? * rgamma(zj);
    }
    Ok((direct, prod))
}

/// Direct side of the general identity with the gamma factors pulled out of
/// each column, leaving a polynomial matrix that is eliminated in
/// double-double. The f64 direct determinant loses digits when the `z_k` cluster.
#[cfg(feature = "xprec")]
pub fn gamma_ratio_determinant_general_dd(z: &[C64], b: C64) -> Result<C64> {
    use crate::xprec::{dd_det, dd_product};
    let n = z.len();
    let nf = n as f64;
    let mut scale = C64::new(1.0, 0.0);
    for &zk in z {
        scale *= gamma(zk + b - nf + 1.0)? * rgamma(zk);
    }
    let rows = (0..n)
        .map(|j| {
            z.iter()
                .map(|&zk| dd_product(zk + b - nf + 1.0, 1.0, n - 1 - j) * dd_product(zk - j as f64, 1.0, j))
                .collect()
        })
        .collect();
    Ok(scale * dd_det(rows).to_c64())
}

/// Closed-form Morris integral `prod_j Gamma(a+b+j+1) Gamma(j+2) / (Gamma(a+j+1) Gamma(b+j+1))`.
pub fn morris_integral(n: usize, a: C64, b: C64) -> Result<C64> {
    let mut prod = C64::new(1.0, 0.0);
    for j in 0..n {
        let jf = j as f64;
        prod *= gamma(a + b + jf + 1.0)?
            * gamma(c64(jf + 2.0, 0.0))?
            * rgamma(a + jf + 1.0)
            * rgamma(b + jf + 1.0);
    }
    Ok(prod)
}

/// The Morris integral by nested adaptive quadrature, for `N` of 1 or 2.
pub fn morris_integral_quadrature(n: usize, a: C64, b: C64, tol: f64) -> Result<C64> {
    let one_body = move |x: f64| -> C64 {
        let z = C64::from_polar(1.0, 2.0 * PI * x);
        (I * PI * x * (a - b)).exp() * cpow(c64((1.0 + z).norm(), 0.0), a + b)
    };
    match n {
        1 => Ok(integrate(one_body, -0.5, 0.5, tol)?.0),
        2 => {
            let outer = |x1: f64| -> C64 {
                let z1 = C64::from_polar(1.0, 2.0 * PI * x1);
                let inner = |x2: f64| {
                    let z2 = C64::from_polar(1.0, 2.0 * PI * x2);
                    one_body(x2) * (z1 - z2).norm_sqr()
                };
                let v = integrate(inner, -0.5, 0.5, tol * 0.1)
                    .map(|r| r.0)
                    .unwrap_or(C64::new(f64::NAN, 0.0));
                one_body(x1) * v
            };
            Ok(integrate(outer, -0.5, 0.5, tol)?.0)
        }
        _ => Err(Error::Range(format!(
            "quadrature Morris integral only for N <= 2, got {n}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn constant_weight_coefficients() {
        let p = EnsembleParameters::real(3, 0.0, 0.0, 0.0, 0.0).unwrap();
        for n in -3..=3 {
            let w = symbol_coefficient(Center::Zero, n, &p, c64(0.2, 0.0)).unwrap().value();
            let want = if n == 0 { 1.0 } else { 0.0 };
            assert!((w - c64(want, 0.0)).norm() < 1e-15, "n={n} w={w}");
        }
    }

    #[test]
    fn zero_xi_star_at_origin() {
        let p = EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.0).unwrap();
        let (om, omb) = (p.omega(), p.omega_bar());
        for n in -2..=2i64 {
            let nf = n as f64;
            let sc = symbol_coefficient(Center::Zero, n, &p, c64(0.0, 0.0)).unwrap();
            let want = gamma(2.0 * p.omega1 + 1.0).unwrap()
                * rgamma(1.0 + nf + p.mu + om)
                * rgamma(1.0 - nf - p.mu + omb);
            assert!(close(sc.analytic_part, want, 1e-14));
            assert_eq!(sc.nonanalytic_part, c64(0.0, 0.0));
        }
    }

    #[test]
    fn element_reference_values() {
        // frozen from a 30-digit evaluation of the same closed forms
        let p = EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4).unwrap();
        let t = c64(0.1, 0.0);
        let refs = [
            (-1, c64(0.655153730147381123559563185794, 0.451999925314937427667131482535)),
            (0, c64(0.984836188158862347160245192084, -0.159449846434560126416227727735)),
            (1, c64(0.0268449040085218200634936867679, -0.0260211463783421634598124761294)),
        ];
        for (n, want) in refs {
            let e = cpow(t, p.mu) * symbol_coefficient(Center::Zero, n, &p, t).unwrap().value();
            assert!(close(e, want, 1e-13), "n={n}: {e} vs {want}");
        }
    }

    #[test]
    fn single_particle_reduction() {
        let p = EnsembleParameters::real(1, 0.3, 0.25, 0.1, 0.4).unwrap();
        let t = c64(0.1, 0.0);
        let a = eval_an(&p, t).unwrap();
        let w0 = symbol_coefficient(Center::Zero, 0, &p, t).unwrap().value();
        assert!(close(a, w0, 1e-15));
    }

    #[test]
    fn center_selection() {
        assert_eq!(Center::auto(c64(0.1, 0.0)).unwrap(), Center::Zero);
        assert_eq!(Center::auto(c64(0.9, 0.1)).unwrap(), Center::One);
        assert_eq!(Center::auto(c64(-3.0, 0.0)).unwrap(), Center::Infinity);
        assert!(matches!(Center::auto(c64(0.5, 0.0)), Err(Error::ConvergenceDomain(_))));
    }

    #[test]
    fn degenerate_guards() {
        let p = EnsembleParameters::real(2, 0.25, 0.25, 0.0, 0.4).unwrap();
        // mu - conj(omega) = 0
        assert!(matches!(
            symbol_coefficient(Center::Zero, 0, &p, c64(0.1, 0.0)),
            Err(Error::Degenerate(_))
        ));
        assert!(EnsembleParameters::real(2, -0.6, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn arc_gap_trivia() {
        assert_eq!(unitary_arc_gap(3, c64(0.0, 0.0), 0.3).unwrap(), c64(1.0, 0.0));
        let one = unitary_arc_gap(1, c64(1.0, 0.0), 0.3).unwrap();
        assert!(close(one, c64(1.0 - 0.6 / (2.0 * PI), 0.0), 1e-15));
    }

    #[test]
    fn morris_small_cases() {
        let z = c64(0.0, 0.0);
        assert!(close(morris_integral(4, z, z).unwrap(), c64(24.0, 0.0), 1e-13));
        let (a, b) = (c64(0.7, 0.1), c64(0.2, 0.0));
        let m1 = morris_integral(1, a, b).unwrap();
        let want = gamma(a + b + 1.0).unwrap() / (gamma(a + 1.0).unwrap() * gamma(b + 1.0).unwrap());
        assert!(close(m1, want, 1e-14));
    }
}
