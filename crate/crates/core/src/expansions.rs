//! Boundary expansions: the average near `t = 0, 1, inf`, gap probability
//! series, and the tau-function expansions at the three fixed singularities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monodromy::ThetaSet;
use crate::sigma_pvi::PVIParameters;
use crate::specfun::{
    c64, cpow, e2, exp_i_pi, factorial, gamma, is_near_integer, rgamma, sin_pi, C64,
    DEFAULT_GUARD,
};
use crate::toeplitz::{Center, EnsembleParameters};

const I: C64 = C64::new(0.0, 1.0);

/// `A ~ constant * t^p * (1 + sum_k c_k z^k + d z^e)`, with `z = t`, `1 - t`, `1/t`
/// at centers 0, 1, inf.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundarySeries {
    pub center: Center,
    /// Exponent `p` of the `t^p` prefactor.
    pub prefactor_exponent: C64,
    pub constant: C64,
    /// Coefficients of `z, z^2, ...`.
    pub analytic_coeffs: Vec<C64>,
    pub nonanalytic_exponent: C64,
    pub nonanalytic_coeff: C64,
}

/// A truncated series value with a rough size of the first omitted term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: C64,
    pub error_estimate: f64,
}

/// Value and first three `t` derivatives of `log A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogJet {
    pub log_value: C64,
    pub d1: C64,
    pub d2: C64,
    pub d3: C64,
}

impl BoundarySeries {
    pub fn order(&self) -> usize {
        self.analytic_coeffs.len()
    }

    /// The local variable `z` and its first three `t` derivatives.
    fn local(&self, t: C64) -> [C64; 4] {
        let (one, zero) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
        match self.center {
            Center::Zero => [t, one, zero, zero],
            Center::One => [1.0 - t, -one, zero, zero],
            Center::Infinity => {
                let r = 1.0 / t;
                [r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r]
            }
        }
    }

    /// `z^e`; at infinity this is `t^{-e}` on the principal branch of `t`.
    fn local_power(&self, t: C64, e: C64) -> C64 {
        match self.center {
            Center::Zero => cpow(t, e),
            Center::One => cpow(1.0 - t, e),
            Center::Infinity => cpow(t, -e),
        }
    }

    /// The bracket `g = 1 + ...` and its first three `t` derivatives.
    fn bracket(&self, t: C64) -> [C64; 4] {
        let [z, d1, d2, d3] = self.local(t);
        // value and z-derivatives up to third order
        let mut g = [C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
        for (k, ck) in self.analytic_coeffs.iter().enumerate() {
            let m = (k + 1) as i32;
            let mf = m as f64;
            g[0] += ck * z.powi(m);
            g[1] += ck * mf * z.powi(m - 1);
            if m >= 2 {
                g[2] += ck * mf * (mf - 1.0) * z.powi(m - 2);
            }
            if m >= 3 {
                g[3] += ck * mf * (mf - 1.0) * (mf - 2.0) * z.powi(m - 3);
            }
        }
        if self.nonanalytic_coeff != C64::new(0.0, 0.0) {
            let e = self.nonanalytic_exponent;
            let term = self.nonanalytic_coeff * self.local_power(t, e);
            g[0] += term;
            g[1] += term * e / z;
            g[2] += term * e * (e - 1.0) / (z * z);
            g[3] += term * e * (e - 1.0) * (e - 2.0) / (z * z * z);
        }
        [
            g[0],
            g[1] * d1,
            g[2] * d1 * d1 + g[1] * d2,
            g[3] * d1 * d1 * d1 + 3.0 * g[2] * d1 * d2 + g[1] * d3,
        ]
    }

    /// Series value with an estimate of the neglected terms.
    pub fn eval(&self, t: C64) -> SeriesValue {
        let g = self.bracket(t)[0];
        let pref = self.constant * cpow(t, self.prefactor_exponent);
        let z = self.local(t)[0];
        let k = self.order();
        let last = self.analytic_coeffs.last().map(|c| c.norm()).unwrap_or(1.0);
        let nonan = if self.nonanalytic_coeff == C64::new(0.0, 0.0) {
            0.0
        } else {
            (self.nonanalytic_coeff * self.local_power(t, self.nonanalytic_exponent)).norm()
        };
        let rel = last.max(1.0) * z.norm().powi(k as i32 + 1) + nonan * (z.norm() + nonan);
        SeriesValue {
            value: pref * g,
            error_estimate: (pref * g).norm() * rel,
        }
    }

    /// `log A` and its `t` derivatives, by term-wise differentiation.
    pub fn log_jet(&self, t: C64) -> LogJet {
        let [g, g1, g2, g3] = self.bracket(t);
        let p = self.prefactor_exponent;
        let (l1, l2, l3) = (g1 / g, g2 / g, g3 / g);
        LogJet {
            log_value: self.constant.ln() + p * t.ln() + g.ln(),
            d1: p / t + l1,
            d2: -p / (t * t) + l2 - l1 * l1,
            d3: 2.0 * p / (t * t * t) + l3 - 3.0 * l2 * l1 + 2.0 * l1 * l1 * l1,
        }
    }
}

fn guard(z: C64, what: &str) -> Result<()> {
    if is_near_integer(z, DEFAULT_GUARD) {
        Err(Error::Degenerate(format!("{what} = {z} is an integer")))
    } else {
        Ok(())
    }
}

/// Leading behaviour of the average at one of `t = 0, 1, inf`, coefficient by coefficient.
pub fn an_boundary_series(center: Center, p: &EnsembleParameters) -> Result<BoundarySeries> {
    let n = p.n;
    let nf = n as f64;
    let (mu, w1, om, omb, xs) = (p.mu, p.omega1, p.omega(), p.omega_bar(), p.xi_star);
    let nc = c64(nf, 0.0);
    match center {
        Center::Zero => {
            let d = mu - omb;
            guard(d, "mu - conj(omega)")?;
            let f = xs * exp_i_pi(-d);
            let den = 2.0 * I * sin_pi(d);
            let mut constant = (1.0 + f / den).powu(n as u32);
            for k in 0..n {
                let kf = k as f64;
                constant *= factorial(k)
                    * gamma(2.0 * w1 + kf + 1.0)?
                    * rgamma(1.0 + kf + mu + om)
                    * rgamma(1.0 + kf - mu + omb);
            }
            let c1 = 2.0 * nf * mu * (mu + om) / (nf - mu + omb);
            let c2 = -f / (den + f)
                * gamma(1.0 + mu + om)?
                * gamma(1.0 + mu - omb)?
                * gamma(1.0 + 2.0 * mu)?
                * gamma(nf - mu + omb)?
                * rgamma(nc)
                * rgamma(nf + mu + omb)
                * rgamma(nf + 2.0 * w1)
                * rgamma(2.0 - nf + mu - omb).powu(2);
            Ok(BoundarySeries {
                center,
                prefactor_exponent: -nf * mu,
                constant,
                analytic_coeffs: vec![c1],
                nonanalytic_exponent: 1.0 - nf + mu - omb,
                nonanalytic_coeff: c2,
            })
        }
        Center::One => {
            let s = 2.0 * mu + 2.0 * w1;
            guard(s, "2 mu + 2 omega1")?;
            let mut constant = C64::new(1.0, 0.0);
            for k in 0..n {
                let kf = k as f64;
                constant *= factorial(k)
                    * gamma(s + kf + 1.0)?
                    * rgamma(1.0 + kf + mu + om)
                    * rgamma(1.0 + kf + mu + omb);
            }
            let c1 = nf * mu * (omb - om) / s;
            let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
            let c2 = sign / sin_pi(s)
                * (xs * exp_i_pi(-(mu - omb)) / (2.0 * I)
                    + sin_pi(2.0 * mu) * sin_pi(mu + om) / sin_pi(s))
                * gamma(1.0 + 2.0 * mu)?
                * gamma(1.0 + 2.0 * w1)?
                * gamma(1.0 + mu + om)?
                * gamma(1.0 + mu + omb)?
                * rgamma(s + 2.0).powu(2)
                * rgamma(s + 1.0)
                * rgamma(nc)
                * rgamma(-nf - s);
            Ok(BoundarySeries {
                center,
                prefactor_exponent: C64::new(0.0, 0.0),
                constant,
                analytic_coeffs: vec![c1],
                nonanalytic_exponent: 1.0 + s,
                nonanalytic_coeff: c2,
            })
        }
        Center::Infinity => {
            let d = mu - om;
            guard(d, "mu - omega")?;
            let base = -exp_i_pi(-2.0 * mu) / sin_pi(d)
                * (sin_pi(mu + om) + xs * exp_i_pi(-(mu + om)) / (2.0 * I));
            let mut constant = base.powu(n as u32);
            for k in 0..n {
                let kf = k as f64;
                constant *= factorial(k)
                    * gamma(2.0 * w1 + kf + 1.0)?
                    * rgamma(1.0 + kf + mu + omb)
                    * rgamma(1.0 + kf - mu + om);
            }
            let c1 = 2.0 * mu * nf * (mu + omb) / (nf - mu + om);
            let c2 = exp_i_pi(mu - om)
                * (2.0 * I * sin_pi(2.0 * mu) + xs * exp_i_pi(-2.0 * mu))
                / (2.0 * I * sin_pi(mu + om) + xs * exp_i_pi(-(mu + om)))
                * gamma(1.0 + 2.0 * mu)?
                * gamma(1.0 + mu + omb)?
                * gamma(1.0 + mu - om)?
                * gamma(nf - mu + om)?
                * rgamma(nc)
                * rgamma(nf + mu + om)
                * rgamma(nf + 2.0 * w1)
                * rgamma(2.0 - nf + mu - om).powu(2);
            Ok(BoundarySeries {
                center,
                prefactor_exponent: nf * mu,
                constant,
                analytic_coeffs: vec![c1],
                nonanalytic_exponent: 1.0 - nf + mu - om,
                nonanalytic_coeff: c2,
            })
        }
    }
}

/// The expansion at infinity with the sign of the non-analytic coefficient that
/// the Toeplitz determinant itself produces.
pub fn an_infinity_series_matching_determinant(p: &EnsembleParameters) -> Result<BoundarySeries> {
    let mut s = an_boundary_series(Center::Infinity, p)?;
    s.nonanalytic_coeff = -s.nonanalytic_coeff;
    Ok(s)
}

/// `Gamma(a+b+N+1) Gamma(b+N+1) / (Gamma(N) Gamma(a+N) Gamma(b+1) Gamma(b+2))`.
pub fn cn_ab(n: usize, a: C64, b: C64) -> Result<C64> {
    let nf = n as f64;
    Ok(gamma(a + b + nf + 1.0)?
        * gamma(b + nf + 1.0)?
        * rgamma(c64(nf, 0.0))
        * rgamma(a + nf)
        * rgamma(b + 1.0)
        * rgamma(b + 2.0))
}

/// Terms `(coefficient, power)` of the small-`u` gap series, after `1`.
fn jue_gap_terms(n: usize, a: f64, b: f64, xi: f64) -> Result<Vec<(f64, f64)>> {
    let bc = c64(b, 0.0);
    if b <= -1.0 + DEFAULT_GUARD || (b < 0.0 && is_near_integer(bc, DEFAULT_GUARD)) {
        return Err(Error::Degenerate(format!(
            "b = {b} collides the boundary exponents"
        )));
    }
    let nf = n as f64;
    let cn = cn_ab(n, c64(a, 0.0), bc)?.re;
    let k1 = (b + 1.0) * (2.0 * nf * nf + 2.0 * (a + b) * nf - 2.0 - 2.0 * b + a * b)
        / (b + 2.0).powi(2);
    let lead = xi * cn / (b + 1.0);
    let q = (nf - 1.0) * (nf + b + 1.0) * (nf + a - 1.0) * (nf + a + b + 1.0)
        / ((b + 2.0).powi(2) * (b * b + 4.0 * b + 3.0).powi(2));
    Ok(vec![
        (-lead, b + 1.0),
        (lead * k1, b + 2.0),
        (xi * xi * cn * cn * q, 2.0 * b + 4.0),
    ])
}

fn check_u(u: f64) -> Result<()> {
    if !(0.0..=0.1).contains(&u) {
        return Err(Error::TrustRegion(format!("u = {u} outside [0, 0.1]")));
    }
    Ok(())
}

/// Jacobi ensemble gap generating function for the interval `(1 - u, 1)`, small `u`.
pub fn jue_gap_series(n: usize, a: f64, b: f64, xi: f64, u: f64) -> Result<SeriesValue> {
    let terms = jue_gap_terms(n, a, b, xi)?;
    check_u(u)?;
    let value = 1.0 + terms.iter().map(|(c, p)| c * u.powf(*p)).sum::<f64>();
    // first omitted orders: u^2 relative to the lead, u relative to the square
    let err = (terms[1].0 * u.powf(terms[1].1)).abs() * terms[1].0.abs() / terms[0].0.abs().max(1e-300) * u
        + (terms[2].0 * u.powf(terms[2].1)).abs() * u;
    Ok(SeriesValue {
        value: c64(value, 0.0),
        error_estimate: err,
    })
}

/// `d^k/du^k log E` for `k = 1, 2, 3` from the truncated gap series.
pub fn jue_gap_log_jet(n: usize, a: f64, b: f64, xi: f64, u: f64) -> Result<[C64; 3]> {
    let terms = jue_gap_terms(n, a, b, xi)?;
    check_u(u)?;
    let mut d = [0.0; 4];
    d[0] = 1.0;
    for (c, p) in &terms {
        d[0] += c * u.powf(*p);
        d[1] += c * p * u.powf(p - 1.0);
        d[2] += c * p * (p - 1.0) * u.powf(p - 2.0);
        d[3] += c * p * (p - 1.0) * (p - 2.0) * u.powf(p - 3.0);
    }
    Ok(crate::sigma_pvi::log_jet_from_derivatives(
        c64(d[0], 0.0),
        [c64(d[1], 0.0), c64(d[2], 0.0), c64(d[3], 0.0)],
    ))
}

/// Circular ensemble groups with printed small-arc gap series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CircleGroup {
    Unitary,
    OrthogonalPlus,
    OrthogonalMinus,
}

impl std::str::FromStr for CircleGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "un" | "u" | "unitary" => Ok(CircleGroup::Unitary),
            "o-plus" | "o+" => Ok(CircleGroup::OrthogonalPlus),
            "o-minus" | "o-" => Ok(CircleGroup::OrthogonalMinus),
            _ => Err(Error::Range(format!("unknown group {s}"))),
        }
    }
}

/// Small-arc gap series, `U(N)` through degree 9 and `O(2N+1)^{+/-}` through degree 8.
pub fn circle_gap_series(group: CircleGroup, n: usize, xi: f64, x: f64) -> SeriesValue {
    let nf = n as f64;
    let n2 = nf * nf;
    let pi = std::f64::consts::PI;
    let terms: Vec<f64> = match group {
        CircleGroup::Unitary => {
            let c = xi * nf / pi;
            vec![
                1.0,
                -c * x,
                (n2 - 1.0) / 36.0 * c * c * x.powi(4),
                -(n2 - 1.0) * (2.0 * n2 - 3.0) / 1350.0 * c * c * x.powi(6),
                (n2 - 1.0) * (n2 - 2.0) * (3.0 * n2 - 5.0) / 52920.0 * c * c * x.powi(8),
                -(n2 - 4.0) * (n2 - 1.0).powi(2) / 291_600.0 * c.powi(3) * x.powi(9),
            ]
        }
        CircleGroup::OrthogonalMinus => {
            let c = 2.0 * nf * xi / pi;
            let n4 = n2 * n2;
            vec![
                1.0,
                -c * x,
                (4.0 * n2 - 1.0) / 36.0 * c * x.powi(3),
                -(48.0 * n4 - 40.0 * n2 + 7.0) / 3600.0 * c * x.powi(5),
                (4.0 * n4 - 5.0 * n2 + 1.0) / 2025.0 * c * c * x.powi(6),
                (192.0 * n4 * n2 - 336.0 * n4 + 196.0 * n2 - 31.0) / 211_680.0 * c * x.powi(7),
                -(48.0 * n4 * n2 - 112.0 * n4 + 77.0 * n2 - 13.0) / 198_450.0 * c * c * x.powi(8),
            ]
        }
        CircleGroup::OrthogonalPlus => {
            let c = 2.0 * nf * xi / pi;
            let n4 = n2 * n2;
            vec![
                1.0,
                -(4.0 * n2 - 1.0) / 36.0 * c * x.powi(3),
                (4.0 * n2 - 1.0) * (12.0 * n2 - 7.0) / 3600.0 * c * x.powi(5),
                -(4.0 * n2 - 1.0) * (48.0 * n4 - 72.0 * n2 + 31.0) / 211_680.0 * c * x.powi(7),
            ]
        }
    };
    let value: f64 = terms.iter().sum();
    let k = terms.len();
    let tail = terms[k - 1].abs().max(terms[k - 2].abs()) * x * x;
    SeriesValue {
        value: c64(value, 0.0),
        error_estimate: tail,
    }
}

/// The tau-function near a fixed singularity:
/// `tau ~ C z^p (1 + k1 z + k_plus z^{1+sigma} + k_minus z^{1-sigma})`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JimboTauExpansion {
    pub center: Center,
    pub sigma: C64,
    pub s_hat: Option<C64>,
    pub leading_constant: C64,
    pub prefactor_exponent: C64,
    pub k1: C64,
    pub k_plus: C64,
    pub k_minus: C64,
    pub plus_suppressed: bool,
    pub minus_suppressed: bool,
    /// False when `Re sigma` lies outside `(0, 1)` and the error term may swamp the printed ones.
    pub within_proven_strip: bool,
}

/// Thetas as seen from the chosen center: `(a, t, b, c)` play the roles of
/// `(theta_0, theta_t, theta_1, theta_inf)` at `t = 0`.
fn permuted(center: Center, th: &ThetaSet) -> [C64; 4] {
    match center {
        Center::Zero => [th.theta0, th.theta_t, th.theta1, th.theta_inf],
        Center::One => [th.theta1, th.theta_t, th.theta0, th.theta_inf],
        Center::Infinity => [th.theta_inf, th.theta_t, th.theta1, th.theta0],
    }
}

fn prefactor(center: Center, th: &ThetaSet, sigma: C64) -> C64 {
    let sq = |z: C64| z * z;
    match center {
        Center::Zero => (sq(sigma) - sq(th.theta0) - sq(th.theta_t)) / 4.0,
        Center::One => (sq(sigma) - sq(th.theta1) - sq(th.theta_t)) / 4.0,
        Center::Infinity => (sq(sigma) - sq(th.theta_inf) + sq(th.theta_t)) / 4.0,
    }
}

fn sigma_guard(sigma: C64) -> Result<()> {
    for k in [-1.0, 0.0, 1.0] {
        if (sigma - k).norm() < DEFAULT_GUARD {
            return Err(Error::Degenerate(format!("sigma = {sigma} at {k}")));
        }
    }
    Ok(())
}

fn k1_coefficient(a: C64, tt: C64, b: C64, c: C64, sigma: C64) -> C64 {
    let s2 = sigma * sigma;
    (a * a - tt * tt - s2) * (c * c - b * b - s2) / (8.0 * s2)
}

/// Tau expansion in the printed form, driven by `s_hat`.
pub fn jimbo_tau_expansion(
    center: Center,
    theta: &ThetaSet,
    sigma: C64,
    s_hat: C64,
    c: C64,
) -> Result<JimboTauExpansion> {
    sigma_guard(sigma)?;
    let [a, tt, b, cc] = permuted(center, theta);
    let s2 = sigma * sigma;
    let plus_poly = (a * a - (tt - sigma) * (tt - sigma)) * (cc * cc - (b - sigma) * (b - sigma));
    let minus_poly = (a * a - (tt + sigma) * (tt + sigma)) * (cc * cc - (b + sigma) * (b + sigma));
    let k_plus = -s_hat * plus_poly / (16.0 * s2 * (1.0 + sigma) * (1.0 + sigma));
    let k_minus = -minus_poly / (s_hat * 16.0 * s2 * (1.0 - sigma) * (1.0 - sigma));
    Ok(JimboTauExpansion {
        center,
        sigma,
        s_hat: Some(s_hat),
        leading_constant: c,
        prefactor_exponent: prefactor(center, theta, sigma),
        k1: k1_coefficient(a, tt, b, cc, sigma),
        k_plus,
        k_minus,
        plus_suppressed: k_plus == C64::new(0.0, 0.0),
        minus_suppressed: k_minus == C64::new(0.0, 0.0),
        within_proven_strip: sigma.re > 0.0 && sigma.re < 1.0,
    })
}

/// Tau expansion with `s_hat` eliminated in favour of `s`, written with reciprocal
/// gammas so that a branch whose polynomial factor vanishes comes out exactly 0
/// even where `s_hat` itself is singular.
pub fn jimbo_tau_expansion_from_s(
    center: Center,
    theta: &ThetaSet,
    sigma: C64,
    s: C64,
    c: C64,
) -> Result<JimboTauExpansion> {
    sigma_guard(sigma)?;
    let [a, tt, b, cc] = permuted(center, theta);
    let xs = [a + tt, -a + tt, cc + b, -cc + b];
    let s2 = sigma * sigma;
    let mut k_plus = -s * gamma(1.0 - sigma)?.powu(2)
        / (gamma(1.0 + sigma)?.powu(2) * s2 * (1.0 + sigma) * (1.0 + sigma));
    let mut k_minus = -gamma(1.0 + sigma)?.powu(2)
        / (s * gamma(1.0 - sigma)?.powu(2) * s2 * (1.0 - sigma) * (1.0 - sigma));
    for x in xs {
        k_plus *= rgamma((x - sigma) / 2.0);
        if k_plus != C64::new(0.0, 0.0) {
            k_plus *= gamma(1.0 + (x + sigma) / 2.0)?;
        }
        k_minus *= rgamma((x + sigma) / 2.0);
        if k_minus != C64::new(0.0, 0.0) {
            k_minus *= gamma(1.0 + (x - sigma) / 2.0)?;
        }
    }
    Ok(JimboTauExpansion {
        center,
        sigma,
        s_hat: s_hat_from_s(center, theta, sigma, s).ok(),
        leading_constant: c,
        prefactor_exponent: prefactor(center, theta, sigma),
        k1: k1_coefficient(a, tt, b, cc, sigma),
        k_plus,
        k_minus,
        plus_suppressed: k_plus == C64::new(0.0, 0.0),
        minus_suppressed: k_minus == C64::new(0.0, 0.0),
        within_proven_strip: sigma.re > 0.0 && sigma.re < 1.0,
    })
}

/// `s_hat` from `s` through the gamma ratio, thetas permuted for centers 1 and inf.
pub fn s_hat_from_s(center: Center, theta: &ThetaSet, sigma: C64, s: C64) -> Result<C64> {
    if s == C64::new(0.0, 0.0) {
        return Ok(s);
    }
    let [a, tt, b, cc] = permuted(center, theta);
    let mut r = s * gamma(1.0 - sigma)?.powu(2) * rgamma(1.0 + sigma).powu(2);
    for x in [a + tt, -a + tt, cc + b, -cc + b] {
        r *= gamma(1.0 + (x + sigma) / 2.0)? * rgamma(1.0 + (x - sigma) / 2.0);
    }
    Ok(r)
}

/// Exponents of the `t` and `1 - t` factors relating the tau-function to the average.
pub fn tau_to_an_exponents(p: &EnsembleParameters, theta: &ThetaSet, v: &PVIParameters) -> (C64, C64) {
    let sq = |z: C64| z * z;
    let vv = v.as_array();
    let e2v = e2(&vv);
    let e2p = e2(&[vv[0], vv[2], vv[3]]);
    let (t0, tt, t1, ti) = (theta.theta0, theta.theta_t, theta.theta1, theta.theta_inf);
    let alpha = (sq(t0) + sq(tt) - sq(t1) - sq(ti)) / 8.0 - e2v / 2.0 - p.mu * p.n as f64;
    let beta = (-sq(t0) + sq(tt) + sq(t1) - sq(ti)) / 8.0 - e2p + e2v / 2.0;
    (alpha, beta)
}

/// The average's boundary series obtained from a tau expansion by multiplying with
/// `t^alpha (1-t)^beta`. The overall constant stays 1.
pub fn an_from_tau_prefactor(
    p: &EnsembleParameters,
    theta: &ThetaSet,
    v: &PVIParameters,
    tau: &JimboTauExpansion,
) -> Result<BoundarySeries> {
    v.check_theta(theta)?;
    let (alpha, beta) = tau_to_an_exponents(p, theta, v);
    let (k1, prefactor_exponent) = match tau.center {
        Center::Zero => (tau.k1 - beta, alpha + tau.prefactor_exponent),
        Center::One => (tau.k1 - alpha, beta + tau.prefactor_exponent),
        Center::Infinity => (tau.k1 - beta, alpha + beta - tau.prefactor_exponent),
    };
    // keep the branch that survives; if both do, the one with the smaller real exponent
    let (coeff, exponent) = if tau.plus_suppressed {
        (tau.k_minus, 1.0 - tau.sigma)
    } else if tau.minus_suppressed {
        (tau.k_plus, 1.0 + tau.sigma)
    } else if (1.0 - tau.sigma).re <= (1.0 + tau.sigma).re {
        (tau.k_minus, 1.0 - tau.sigma)
    } else {
        (tau.k_plus, 1.0 + tau.sigma)
    };
    Ok(BoundarySeries {
        center: tau.center,
        prefactor_exponent,
        constant: C64::new(1.0, 0.0),
        analytic_coeffs: vec![k1],
        nonanalytic_exponent: exponent,
        nonanalytic_coeff: coeff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_order_one_coefficients() {
        let p = EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4).unwrap();
        let (mu, om, omb) = (p.mu, p.omega(), p.omega_bar());
        let s0 = an_boundary_series(Center::Zero, &p).unwrap();
        assert!((s0.analytic_coeffs[0] - 4.0 * mu * (mu + om) / (2.0 - mu + omb)).norm() < 1e-15);
        let s1 = an_boundary_series(Center::One, &p).unwrap();
        let want = 2.0 * mu * (omb - om) / (2.0 * mu + 2.0 * p.omega1);
        assert!((s1.analytic_coeffs[0] - want).norm() < 1e-15);
        let z = an_boundary_series(Center::Zero, &p.with_xi_star(c64(0.0, 0.0))).unwrap();
        assert_eq!(z.nonanalytic_coeff, c64(0.0, 0.0));
    }

    #[test]
    fn cn_trivia() {
        let z = c64(0.0, 0.0);
        assert!((cn_ab(1, z, z).unwrap() - 1.0).norm() < 1e-14);
        let one = c64(1.0, 0.0);
        assert!((cn_ab(2, one, one).unwrap() - 36.0).norm() < 1e-12);
    }

    #[test]
    fn jue_series_trivia() {
        assert_eq!(jue_gap_series(3, 0.5, 0.5, 0.0, 0.05).unwrap().value, c64(1.0, 0.0));
        // the xi^2 branch carries (N - 1)
        let one = jue_gap_series(1, 0.5, 0.5, 1.0, 0.01).unwrap().value;
        let lin = jue_gap_series(1, 0.5, 0.5, 0.0, 0.01).unwrap().value;
        let cn = cn_ab(1, c64(0.5, 0.0), c64(0.5, 0.0)).unwrap().re;
        let k1 = 1.5 * (2.0 + 2.0 - 2.0 - 1.0 + 0.25) / 6.25;
        let want = lin.re - cn / 1.5 * 0.01f64.powf(1.5) * (1.0 - k1 * 0.01);
        assert!((one.re - want).abs() < 1e-15);
        assert!(jue_gap_series(2, 0.5, -2.0, 1.0, 0.01).is_err());
    }

    #[test]
    fn circle_series_trivia() {
        assert_eq!(circle_gap_series(CircleGroup::OrthogonalMinus, 2, 0.5, 0.0).value, c64(1.0, 0.0));
        // x^4 coefficient of U(2) at xi = 1 is c^2 / 12
        let x = 1e-2;
        let c = 2.0 / std::f64::consts::PI;
        let v = circle_gap_series(CircleGroup::Unitary, 2, 1.0, x).value.re;
        let quartic = (v - 1.0 + c * x) / x.powi(4);
        assert!((quartic - c * c / 12.0).abs() < 1e-3);
    }

    #[test]
    fn jimbo_first_order_coefficient() {
        let th = ThetaSet::new(c64(0.3, 0.0), c64(0.7, 0.0), c64(0.4, 0.0), c64(0.6, 0.0));
        let sig = c64(0.45, 0.0);
        let e = jimbo_tau_expansion(Center::Zero, &th, sig, c64(1.0, 0.0), c64(1.0, 0.0)).unwrap();
        let s2 = sig * sig;
        let want = (0.09 - 0.49 - s2) * (0.36 - 0.16 - s2) / (8.0 * s2);
        assert!((e.k1 - want).norm() < 1e-15);
        assert!(jimbo_tau_expansion(Center::Zero, &th, c64(1.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0)).is_err());
    }

    #[test]
    fn gamma_and_printed_forms_agree() {
        let th = ThetaSet::new(c64(0.3, 0.1), c64(0.7, 0.0), c64(0.4, -0.2), c64(0.6, 0.0));
        let sig = c64(0.45, 0.05);
        let s = c64(2.0, 1.0);
        for center in [Center::Zero, Center::One, Center::Infinity] {
            let sh = s_hat_from_s(center, &th, sig, s).unwrap();
            let a = jimbo_tau_expansion(center, &th, sig, sh, c64(1.0, 0.0)).unwrap();
            let b = jimbo_tau_expansion_from_s(center, &th, sig, s, c64(1.0, 0.0)).unwrap();
            assert!((a.k_plus - b.k_plus).norm() < 1e-13 * a.k_plus.norm());
            assert!((a.k_minus - b.k_minus).norm() < 1e-13 * a.k_minus.norm());
        }
    }
}
