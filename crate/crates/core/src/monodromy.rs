//! Explicit monodromy matrices, their trace coordinates, the connection relation
//! and the three monodromy cases of the spectrum singularity average.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det2, inv2, mat2, trace2, Mat2};
use crate::specfun::{cos_pi, exp_i_pi, is_near_integer, sin_pi, C64, DEFAULT_GUARD};
use crate::toeplitz::EnsembleParameters;

const I: C64 = C64::new(0.0, 1.0);

/// Formal monodromy exponents at `0, t, 1, inf`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaSet {
    pub theta0: C64,
    pub theta_t: C64,
    pub theta1: C64,
    pub theta_inf: C64,
}

impl ThetaSet {
    pub fn new(theta0: C64, theta_t: C64, theta1: C64, theta_inf: C64) -> Self {
        Self {
            theta0,
            theta_t,
            theta1,
            theta_inf,
        }
    }

    pub fn as_array(&self) -> [C64; 4] {
        [self.theta0, self.theta_t, self.theta1, self.theta_inf]
    }

    /// Names of the exponents that are integers.
    pub fn integer_exponents(&self) -> Vec<&'static str> {
        let names = ["theta0", "thetaT", "theta1", "thetaInf"];
        self.as_array()
            .iter()
            .zip(names)
            .filter(|(z, _)| is_near_integer(**z, DEFAULT_GUARD))
            .map(|(_, n)| n)
            .collect()
    }
}

/// Local monodromy parameters at the three pairs of singular points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonodromyData {
    pub sigma0t: C64,
    pub sigma_t1: C64,
    pub sigma01: C64,
    pub s0t: C64,
    pub s_t1: C64,
    pub s01: C64,
    pub r: C64,
}

/// Monodromy matrices around `0, t, 1, inf`, with the connection matrix when known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonodromyQuadruple {
    pub m0: Mat2,
    pub mt: Mat2,
    pub m1: Mat2,
    pub minf: Mat2,
    pub c: Option<Mat2>,
}

impl MonodromyQuadruple {
    /// `M_inf M_1 M_t M_0 - I`.
    pub fn cyclic_defect(&self) -> Mat2 {
        self.minf * self.m1 * self.mt * self.m0 - Mat2::identity()
    }
}

/// Traces of the monodromy matrices and of their pairwise products.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Invariants {
    pub p0: C64,
    pub pt: C64,
    pub p1: C64,
    pub pinf: C64,
    pub p0t: C64,
    pub pt1: C64,
    pub p01: C64,
}

impl Invariants {
    /// `sigma` with `2 cos(pi sigma) = p` on the principal branch; the flag is
    /// false when `Re sigma` falls outside `[0, 1]`.
    pub fn sigma_from_trace(p: C64) -> (C64, bool) {
        let s = (p / 2.0).acos() / std::f64::consts::PI;
        (s, (0.0..=1.0).contains(&s.re))
    }

    pub fn sigmas(&self) -> [(C64, bool); 3] {
        [
            Self::sigma_from_trace(self.p0t),
            Self::sigma_from_trace(self.pt1),
            Self::sigma_from_trace(self.p01),
        ]
    }
}

/// `sin(pi x / 2)`.
pub fn half_sine(x: C64) -> C64 {
    sin_pi(x / 2.0)
}

fn nonzero(z: C64, what: &str) -> Result<()> {
    if z.norm() < DEFAULT_GUARD {
        Err(Error::Degenerate(format!("{what} vanishes")))
    } else {
        Ok(())
    }
}

/// Monodromy matrices from the exponents and the data `(sigma_0t, s_0t)` at `0, t`,
/// with `r` the free scaling of the connection matrix. `M_inf` is diagonal.
pub fn build_monodromy(theta: &ThetaSet, sigma: C64, s: C64, r: C64) -> Result<MonodromyQuadruple> {
    let sg = half_sine;
    let (t0, tt, t1, ti) = (theta.theta0, theta.theta_t, theta.theta1, theta.theta_inf);
    let sin_inf = sin_pi(ti);
    let sin_sig = sin_pi(sigma);
    nonzero(sin_inf, "sin(pi thetaInf)")?;
    nonzero(sin_sig, "sin(pi sigma)")?;
    nonzero(s, "s")?;
    nonzero(r, "r")?;
    let e_inf = exp_i_pi(ti);
    let e_sig = exp_i_pi(sigma);
    let (cs, c0, ct, c1) = (cos_pi(sigma), cos_pi(t0), cos_pi(tt), cos_pi(t1));

    let minf = mat2(e_inf, C64::new(0.0, 0.0), C64::new(0.0, 0.0), 1.0 / e_inf);
    let m1 = mat2(
        cs - c1 / e_inf,
        -2.0 * r / e_inf * sg(ti + t1 + sigma) * sg(ti + t1 - sigma),
        2.0 / r * e_inf * sg(ti - t1 + sigma) * sg(ti - t1 - sigma),
        -cs + e_inf * c1,
    ) / (I * sin_inf);
    let mt_conj = mat2(
        e_sig * ct - c0,
        -2.0 * s * e_sig * sg(t0 + tt - sigma) * sg(t0 - tt + sigma),
        2.0 / s / e_sig * sg(t0 + tt + sigma) * sg(t0 - tt - sigma),
        -ct / e_sig + c0,
    ) / (I * sin_sig);
    let m0_conj = mat2(
        e_sig * c0 - ct,
        2.0 * s * sg(t0 + tt - sigma) * sg(t0 - tt + sigma),
        -2.0 / s * sg(t0 - tt - sigma) * sg(t0 + tt + sigma),
        -c0 / e_sig + ct,
    ) / (I * sin_sig);
    let c = mat2(
        sg(ti - t1 - sigma),
        r * sg(ti + t1 + sigma),
        sg(ti - t1 + sigma) / r,
        sg(ti + t1 - sigma),
    );
    if det2(&c).norm() < 1e-300 {
        return Err(Error::NonInvertibleC);
    }
    let ci = inv2(&c).ok_or(Error::NonInvertibleC)?;
    Ok(MonodromyQuadruple {
        m0: ci * m0_conj * c,
        mt: ci * mt_conj * c,
        m1,
        minf,
        c: Some(c),
    })
}

pub fn invariants_from_matrices(q: &MonodromyQuadruple) -> Invariants {
    Invariants {
        p0: trace2(&q.m0),
        pt: trace2(&q.mt),
        p1: trace2(&q.m1),
        pinf: trace2(&q.minf),
        p0t: trace2(&(q.m0 * q.mt)),
        pt1: trace2(&(q.mt * q.m1)),
        p01: trace2(&(q.m0 * q.m1)),
    }
}

/// Which side of the connection relation to use: `s^{+1}` or `s^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Both sides of the connection relation linking `(sigma_0t, s_0t)` to the
/// traces at `(t,1)` and `(0,1)`. The effective parameter is `s_0t / r`.
pub fn connection_sides(theta: &ThetaSet, data: &MonodromyData, sign: Sign) -> (C64, C64) {
    let sg = half_sine;
    let (t0, tt, t1, ti) = (theta.theta0, theta.theta_t, theta.theta1, theta.theta_inf);
    let sigma = data.sigma0t;
    let e = match sign {
        Sign::Plus => 1.0,
        Sign::Minus => -1.0,
    };
    let s = data.s0t / data.r;
    let sp = if e > 0.0 { s } else { 1.0 / s };
    let lhs = 4.0
        * sp
        * sg(t0 + tt - e * sigma)
        * sg(t0 - tt + e * sigma)
        * sg(ti + t1 - e * sigma)
        * sg(ti - t1 + e * sigma);
    let (c0, ct, c1, ci) = (cos_pi(t0), cos_pi(tt), cos_pi(t1), cos_pi(ti));
    let is = I * sin_pi(sigma);
    let rhs = exp_i_pi(e * sigma) * (e * is * cos_pi(data.sigma_t1) - ct * ci - c0 * c1)
        + e * is * cos_pi(data.sigma01)
        + ct * c1
        + ci * c0;
    (lhs, rhs)
}

pub fn connection_residual(theta: &ThetaSet, data: &MonodromyData, sign: Sign) -> C64 {
    let (l, r) = connection_sides(theta, data, sign);
    l - r
}

pub fn manifold_value(inv: &Invariants) -> C64 {
    let Invariants {
        p0,
        pt,
        p1,
        pinf,
        p0t,
        pt1,
        p01,
    } = *inv;
    p0t * pt1 * p01 + p0t * p0t + pt1 * pt1 + p01 * p01
        - (p0 * pt + p1 * pinf) * p0t
        - (pt * p1 + p0 * pinf) * pt1
        - (p0 * p1 + pt * pinf) * p01
        + p0 * p0
        + pt * pt
        + p1 * p1
        + pinf * pinf
        + p0 * pt * p1 * pinf
        - 4.0
}

/// Partial derivatives of the manifold in `p_0t`, `p_t1`, `p_01`.
pub fn manifold_gradient(inv: &Invariants) -> [C64; 3] {
    let Invariants {
        p0,
        pt,
        p1,
        pinf,
        p0t,
        pt1,
        p01,
    } = *inv;
    [
        pt1 * p01 + 2.0 * p0t - p0 * pt - p1 * pinf,
        p0t * p01 + 2.0 * pt1 - pt * p1 - p0 * pinf,
        p0t * pt1 + 2.0 * p01 - p0 * p1 - pt * pinf,
    ]
}

/// `sigma~_01` from the cosine relation, principal branch.
pub fn sigma01_tilde(data: &MonodromyData, theta: &ThetaSet) -> C64 {
    let c = -cos_pi(data.sigma0t) - 2.0 * cos_pi(data.sigma01) * cos_pi(data.sigma_t1)
        + 2.0
            * (cos_pi(theta.theta0) * cos_pi(theta.theta_t)
                + cos_pi(theta.theta_inf) * cos_pi(theta.theta1));
    c.acos() / std::f64::consts::PI
}

/// Left minus right side of the ten product-to-sum identities for the half sines.
pub fn trig_identity_residuals(theta: &ThetaSet, sigma: C64) -> [C64; 10] {
    let sg = half_sine;
    let (t0, tt, t1, ti) = (theta.theta0, theta.theta_t, theta.theta1, theta.theta_inf);
    let (c0, ct, c1, ci, cs) = (cos_pi(t0), cos_pi(tt), cos_pi(t1), cos_pi(ti), cos_pi(sigma));
    let (s0, st, s1, si, ss) = (sin_pi(t0), sin_pi(tt), sin_pi(t1), sin_pi(ti), sin_pi(sigma));
    [
        2.0 * sg(ti - t1 + sigma) * sg(ti + t1 + sigma) - (c1 - ci * cs + si * ss),
        2.0 * sg(ti + t1 - sigma) * sg(ti - t1 - sigma) - (c1 - ci * cs - si * ss),
        2.0 * sg(ti - t1 + sigma) * sg(ti - t1 - sigma) - (cs - c1 * ci - s1 * si),
        2.0 * sg(ti + t1 + sigma) * sg(ti + t1 - sigma) - (cs - c1 * ci + s1 * si),
        2.0 * sg(ti - t1 + sigma) * sg(ti + t1 - sigma) - (-ci + c1 * cs + s1 * ss),
        2.0 * sg(ti + t1 + sigma) * sg(ti - t1 - sigma) - (-ci + c1 * cs - s1 * ss),
        2.0 * sg(t0 - tt + sigma) * sg(t0 + tt + sigma) - (ct - c0 * cs + s0 * ss),
        2.0 * sg(t0 + tt - sigma) * sg(t0 - tt - sigma) - (ct - c0 * cs - s0 * ss),
        2.0 * sg(t0 - tt + sigma) * sg(t0 + tt - sigma) - (-c0 + ct * cs + st * ss),
        2.0 * sg(t0 + tt + sigma) * sg(t0 - tt - sigma) - (-c0 + ct * cs - st * ss),
    ]
}

/// The three monodromy cases of the spectrum singularity average.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SseCase {
    A,
    B,
    C,
}

impl std::str::FromStr for SseCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(SseCase::A),
            "B" | "b" => Ok(SseCase::B),
            "C" | "c" => Ok(SseCase::C),
            _ => Err(Error::Range(format!("unknown case {s}"))),
        }
    }
}

fn sse_guards(p: &EnsembleParameters) -> Result<()> {
    let (mu, w1, om, omb) = (p.mu, p.omega1, p.omega(), p.omega_bar());
    for (z, what) in [
        (mu - omb, "mu - conj(omega)"),
        (mu - om, "mu - omega"),
        (2.0 * mu + 2.0 * w1, "2 mu + 2 omega1"),
        (2.0 * mu, "2 mu"),
        (2.0 * w1, "2 omega1"),
        (mu + om, "mu + omega"),
        (mu + omb, "mu + conj(omega)"),
    ] {
        if is_near_integer(z, DEFAULT_GUARD) {
            return Err(Error::Degenerate(format!("{what} = {z} is an integer")));
        }
    }
    Ok(())
}

/// Exponents and monodromy data of one of the three cases (with `r = 1`).
pub fn sse_case_data(case: SseCase, p: &EnsembleParameters) -> Result<(ThetaSet, MonodromyData)> {
    sse_guards(p)?;
    let n = p.n as f64;
    let (mu, w1, om, omb, xs) = (p.mu, p.omega1, p.omega(), p.omega_bar(), p.xi_star);
    let theta = match case {
        SseCase::A => ThetaSet::new(-mu - om, n + 2.0 * w1, n + 2.0 * mu, -mu - omb),
        SseCase::B => ThetaSet::new(mu - omb, C64::new(n, 0.0), n + 2.0 * mu + 2.0 * w1, mu - om),
        SseCase::C => ThetaSet::new(-2.0 * w1, n + mu + om, n + mu + omb, 2.0 * mu),
    };
    let d = mu - omb;
    let xe = xs * exp_i_pi(-d);
    let s0t = if xe == C64::new(0.0, 0.0) {
        C64::new(f64::INFINITY, 0.0)
    } else {
        1.0 + 2.0 * I * sin_pi(d) / xe
    };
    let sw = 2.0 * mu + 2.0 * w1;
    let s_t1 = match case {
        SseCase::A => 1.0 + xe / (2.0 * I) * sin_pi(sw) / (sin_pi(2.0 * mu) * sin_pi(mu + om)),
        SseCase::B | SseCase::C => {
            (sin_pi(2.0 * mu) * sin_pi(mu + om) / sin_pi(sw) + xe / (2.0 * I)) * sin_pi(sw)
                / (sin_pi(2.0 * w1) * sin_pi(mu + omb))
        }
    };
    let s01 = -(xs - 1.0 + exp_i_pi(2.0 * (mu + om))) / (xs - 1.0 + exp_i_pi(4.0 * mu));
    Ok((
        theta,
        MonodromyData {
            sigma0t: n - mu + omb,
            sigma_t1: sw,
            sigma01: n - mu + om,
            s0t,
            s_t1,
            s01,
            r: C64::new(1.0, 0.0),
        },
    ))
}

/// Explicit monodromy matrices of one case. `M_inf` is closed by the cyclic relation.
///
/// In case B the upper-right entry of `M_1` carries the sign that makes
/// `det M_1 = 1`; see README.md.
pub fn sse_case_matrices(case: SseCase, p: &EnsembleParameters, r: C64) -> Result<MonodromyQuadruple> {
    sse_guards(p)?;
    nonzero(r, "r")?;
    let nn = p.n as f64;
    let sgn = if p.n % 2 == 0 { 1.0 } else { -1.0 };
    let (mu, w1, om, omb) = (p.mu, p.omega1, p.omega(), p.omega_bar());
    let zero = C64::new(0.0, 0.0);
    let (m0, mt, m1) = match case {
        SseCase::A | SseCase::C => {
            let (_, data) = sse_case_data(case, p)?;
            let s0t = data.s0t;
            let sd = sin_pi(mu - omb);
            if case == SseCase::A {
                let m0e = 2.0 * I / sd
                    * (sin_pi(2.0 * w1) * sin_pi(mu + omb) / s0t
                        - sin_pi(2.0 * mu) * sin_pi(mu + om) / r);
                let mte = 2.0 * I * sgn * sin_pi(2.0 * w1) / sd
                    * (-sin_pi(mu + omb) / s0t * exp_i_pi(mu - omb) + sin_pi(2.0 * mu) / r);
                let m1e = -2.0 * I * sgn * sin_pi(2.0 * mu) / r * exp_i_pi(-(mu + omb));
                let a = exp_i_pi(-(mu + om));
                let b = exp_i_pi(nn + 2.0 * w1);
                let c = exp_i_pi(nn + 2.0 * mu);
                (
                    mat2(a, zero, m0e, 1.0 / a),
                    mat2(b, zero, mte, 1.0 / b),
                    mat2(c, zero, m1e, 1.0 / c),
                )
            } else {
                let m0e = 2.0 * I / sd
                    * (-sin_pi(2.0 * mu) * sin_pi(mu + om) * s0t
                        + sin_pi(2.0 * w1) * sin_pi(mu + omb) * r);
                let mte = 2.0 * I * sgn * sin_pi(mu + om) / sd
                    * (sin_pi(2.0 * mu) * exp_i_pi(-(mu - omb)) * s0t - sin_pi(mu + omb) * r);
                let m1e = 2.0 * I * sin_pi(mu + omb) * exp_i_pi(-(nn + 2.0 * mu)) * r;
                let a = exp_i_pi(2.0 * w1);
                let b = exp_i_pi(-(nn + mu + om));
                let c = exp_i_pi(-(nn + mu + omb));
                (
                    mat2(a, m0e, zero, 1.0 / a),
                    mat2(b, mte, zero, 1.0 / b),
                    mat2(c, m1e, zero, 1.0 / c),
                )
            }
        }
        SseCase::B => {
            let k = I / sin_pi(mu - om);
            let e = exp_i_pi(mu - om);
            let cd = cos_pi(mu - omb);
            let cw = cos_pi(2.0 * mu + 2.0 * w1);
            let m0 = mat2(
                cd / e - cw,
                2.0 * r * sin_pi(mu + omb) * sin_pi(2.0 * mu),
                -2.0 / r * sin_pi(mu + om) * sin_pi(2.0 * w1),
                -e * cd + cw,
            ) * k;
            let m1 = mat2(
                cw / e - cd,
                -2.0 * r / e * sin_pi(mu + omb) * sin_pi(2.0 * mu),
                2.0 / r * e * sin_pi(mu + om) * sin_pi(2.0 * w1),
                cd - e * cw,
            ) * (k * sgn);
            (m0, Mat2::identity() * C64::new(sgn, 0.0), m1)
        }
    };
    let prod = m1 * mt * m0;
    let minf = inv2(&prod).ok_or(Error::NonFinite("monodromy product"))?;
    Ok(MonodromyQuadruple {
        m0,
        mt,
        m1,
        minf,
        c: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::c64;

    #[test]
    fn half_sine_values() {
        assert_eq!(half_sine(c64(0.0, 0.0)), c64(0.0, 0.0));
        assert_eq!(half_sine(c64(1.0, 0.0)), c64(1.0, 0.0));
    }

    #[test]
    fn manifold_at_identity() {
        let two = c64(2.0, 0.0);
        let inv = Invariants {
            p0: two,
            pt: two,
            p1: two,
            pinf: two,
            p0t: two,
            pt1: two,
            p01: two,
        };
        assert_eq!(manifold_value(&inv), c64(0.0, 0.0));
        let mut bumped = inv;
        bumped.p0t += 0.1;
        assert!(manifold_value(&bumped).norm() > 0.0);
    }

    #[test]
    fn built_quadruple_closes() {
        let th = ThetaSet::new(c64(0.31, 0.1), c64(0.27, -0.05), c64(0.62, 0.0), c64(0.44, 0.2));
        let q = build_monodromy(&th, c64(0.37, 0.08), c64(1.3, -0.4), c64(1.0, 0.0)).unwrap();
        assert!(q.cyclic_defect().iter().all(|z| z.norm() < 1e-12));
        let inv = invariants_from_matrices(&q);
        assert!(manifold_value(&inv).norm() < 1e-10);
        assert!((inv.p0t - 2.0 * cos_pi(c64(0.37, 0.08))).norm() < 1e-12);
    }

    #[test]
    fn case_b_time_matrix_is_scalar() {
        let p = EnsembleParameters::real(3, 0.3, 0.25, 0.1, 0.4).unwrap();
        let q = sse_case_matrices(SseCase::B, &p, c64(1.0, 0.0)).unwrap();
        assert_eq!(q.mt, Mat2::identity() * c64(-1.0, 0.0));
    }
}
