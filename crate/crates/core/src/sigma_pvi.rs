//! The sigma form of Painleve VI: residuals, the Hamiltonian system, parameter
//! maps, ODE integration and the sign-convention audit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansions::BoundarySeries;
use crate::monodromy::ThetaSet;
use crate::ode::{integrate_segment, OdeOptions, OdeStats};
use crate::specfun::{e2, C64};
use crate::toeplitz::{Center, EnsembleParameters};

/// Parameter vector `(v1, v2, v3, v4)` of the sigma form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PVIParameters {
    pub v1: C64,
    pub v2: C64,
    pub v3: C64,
    pub v4: C64,
}

/// Coefficients `(alpha, beta, gamma, delta)` of the second-order form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Greek {
    pub alpha: C64,
    pub beta: C64,
    pub gamma: C64,
    pub delta: C64,
}

impl PVIParameters {
    pub fn new(v1: C64, v2: C64, v3: C64, v4: C64) -> Self {
        Self { v1, v2, v3, v4 }
    }

    pub fn real(v: [f64; 4]) -> Self {
        Self::new(
            C64::new(v[0], 0.0),
            C64::new(v[1], 0.0),
            C64::new(v[2], 0.0),
            C64::new(v[3], 0.0),
        )
    }

    pub fn as_array(&self) -> [C64; 4] {
        [self.v1, self.v2, self.v3, self.v4]
    }

    pub fn product(&self) -> C64 {
        self.v1 * self.v2 * self.v3 * self.v4
    }

    pub fn greek(&self) -> Greek {
        let h = 0.5;
        let w = 1.0 - self.v1 - self.v2;
        Greek {
            alpha: h * (self.v1 - self.v2) * (self.v1 - self.v2),
            beta: -h * (self.v3 + self.v4) * (self.v3 + self.v4),
            gamma: h * (self.v3 - self.v4) * (self.v3 - self.v4),
            delta: h * (1.0 - w * w),
        }
    }

    /// `v = ((th_t + th_inf)/2, (th_t - th_inf)/2, (th_0 + th_1)/2, (th_0 - th_1)/2)`.
    pub fn from_theta(th: &ThetaSet) -> Self {
        Self::new(
            (th.theta_t + th.theta_inf) / 2.0,
            (th.theta_t - th.theta_inf) / 2.0,
            (th.theta0 + th.theta1) / 2.0,
            (th.theta0 - th.theta1) / 2.0,
        )
    }

    /// Differences in the two quadratic/quartic identities tying `v` to a theta set.
    pub fn theta_identity_defects(&self, th: &ThetaSet) -> (C64, C64) {
        let sq = |z: C64| z * z;
        let v = self.as_array();
        let sum_v: C64 = v.iter().map(|&x| sq(x)).sum();
        let sum_t: C64 = th.as_array().iter().map(|&x| sq(x)).sum();
        let quad = sum_v - sum_t / 2.0;
        let quart = 16.0 * self.product()
            - (sq(th.theta0) - sq(th.theta1)) * (sq(th.theta_t) - sq(th.theta_inf));
        (quad, quart)
    }

    pub fn check_theta(&self, th: &ThetaSet) -> Result<()> {
        let (a, b) = self.theta_identity_defects(th);
        let scale = 1.0
            + th.as_array().iter().map(|z| z.norm_sqr()).sum::<f64>().powi(2);
        if a.norm() > 1e-10 * scale.sqrt() || b.norm() > 1e-10 * scale {
            return Err(Error::CaseMismatch(format!(
                "defects {:.3e}, {:.3e}",
                a.norm(),
                b.norm()
            )));
        }
        Ok(())
    }
}

/// Parameters for the spectrum singularity average.
pub fn v_from_jue(p: &EnsembleParameters) -> PVIParameters {
    let n = p.n as f64;
    let (mu, om, omb) = (p.mu, p.omega(), p.omega_bar());
    PVIParameters::new(
        (n + om - mu) / 2.0,
        omb + (n + om + mu) / 2.0,
        (n - om + mu) / 2.0,
        -mu - (n + om + mu) / 2.0,
    )
}

/// Parameters for the circular Jacobi average.
pub fn v_from_cyue(n: usize, a: C64) -> PVIParameters {
    PVIParameters::new(-a, C64::new(0.0, 0.0), n as f64 + a, a)
}

/// Parameters for the Jacobi ensemble gap probability.
pub fn v_from_jacobi(n: usize, a: f64, b: f64) -> PVIParameters {
    let n = n as f64;
    PVIParameters::real([n + (a + b) / 2.0, n + (a + b) / 2.0, (a + b) / 2.0, (a - b) / 2.0])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SigmaState {
    pub t: C64,
    pub sigma: C64,
    pub sigma_prime: C64,
    pub sigma_double_prime: C64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianState {
    pub t: C64,
    pub q: C64,
    pub p: C64,
}

fn sigma_terms(v: &PVIParameters, s: &SigmaState) -> [C64; 3] {
    let t = s.t;
    let (sg, s1, s2) = (s.sigma, s.sigma_prime, s.sigma_double_prime);
    let a = t * (t - 1.0) * s2;
    let b = s1 * (2.0 * sg - (2.0 * t - 1.0) * s1) + v.product();
    let prod: C64 = v.as_array().iter().map(|&x| s1 + x * x).product();
    [s1 * a * a, b * b, prod]
}

pub fn sigma_form_residual(v: &PVIParameters, s: &SigmaState) -> C64 {
    let [x, y, z] = sigma_terms(v, s);
    x + y - z
}

/// Residual divided by the size of its largest term.
pub fn sigma_form_relative_residual(v: &PVIParameters, s: &SigmaState) -> f64 {
    let [x, y, z] = sigma_terms(v, s);
    let scale = x.norm().max(y.norm()).max(z.norm()).max(1e-300);
    (x + y - z).norm() / scale
}

/// Residual of the theta-parameterised form for `zeta(t)`.
pub fn theta_form_residual(th: &ThetaSet, t: C64, z: C64, z1: C64, z2: C64) -> C64 {
    let sq = |w: C64| w * w;
    let (t0, tt, t1, ti) = (th.theta0, th.theta_t, th.theta1, th.theta_inf);
    let lhs = z1 * sq(t * (t - 1.0) * z2)
        + sq(2.0 * z1 * (t * z1 - z) - z1 * z1
            - (sq(tt) - sq(ti)) * (sq(t0) - sq(t1)) / 16.0);
    let rhs = (z1 + sq(tt + ti) / 4.0)
        * (z1 + sq(tt - ti) / 4.0)
        * (z1 + sq(t0 + t1) / 4.0)
        * (z1 + sq(t0 - t1) / 4.0);
    lhs - rhs
}

/// Residual of the form in the stereographic variable `s`.
pub fn sigma_form_i_residual(v: &PVIParameters, s: C64, h: C64, h1: C64, h2: C64) -> C64 {
    let i = C64::new(0.0, 1.0);
    let a = (1.0 + s * s) * h2;
    let b = h1 * (h - s * h1) - i * v.product();
    let prod: C64 = v.as_array().iter().map(|&x| h1 + x * x).product();
    h1 * a * a + 4.0 * b * b + 4.0 * prod
}

/// Residual of the circular Jacobi sigma form.
pub fn cyue_sigma_residual(n: usize, a: C64, s: C64, sg: C64, s1: C64, s2: C64) -> C64 {
    let n = n as f64;
    let q = 1.0 + s * s;
    q * q * s2 * s2 + 4.0 * q * s1 * s1 * s1 - 8.0 * s * sg * s1 * s1
        + 4.0 * sg * sg * (s1 - a * a)
        + 8.0 * a * a * s * sg * s1
        + 4.0 * (n * (n + 2.0 * a) - a * a * s * s) * s1 * s1
}

fn pole_guard(h: &HamiltonianState) -> Result<()> {
    for c in [0.0, 1.0] {
        if (h.t - c).norm() < 1e-12 {
            return Err(Error::Pole(h.t));
        }
    }
    Ok(())
}

fn ham_pieces(v: &PVIParameters, h: &HamiltonianState) -> (C64, C64, C64, C64, C64) {
    let (t, q) = (h.t, h.q);
    let (v1, v2, v3, v4) = (v.v1, v.v2, v.v3, v.v4);
    let pq = q * (q - 1.0) * (q - t);
    let dpq = 3.0 * q * q - 2.0 * (1.0 + t) * q + t;
    let l = (v3 + v4) * (q - 1.0) * (q - t) + (v3 - v4) * q * (q - t) - (v1 + v2) * q * (q - 1.0);
    let dl = (v3 + v4) * (2.0 * q - 1.0 - t) + (v3 - v4) * (2.0 * q - t) - (v1 + v2) * (2.0 * q - 1.0);
    let k = (v3 - v1) * (v3 - v2);
    (pq, dpq, l, dl, k)
}

/// `t(t-1) H`.
pub fn scaled_hamiltonian(v: &PVIParameters, h: &HamiltonianState) -> C64 {
    let (pq, _, l, _, k) = ham_pieces(v, h);
    pq * h.p * h.p - l * h.p + k * (h.q - h.t)
}

/// `(q', p')` from Hamilton's equations.
pub fn hamiltonian_rhs(v: &PVIParameters, h: &HamiltonianState) -> Result<(C64, C64)> {
    pole_guard(h)?;
    let (pq, dpq, l, dl, k) = ham_pieces(v, h);
    let tt = h.t * (h.t - 1.0);
    let dq = (2.0 * pq * h.p - l) / tt;
    let dp = -(dpq * h.p * h.p - dl * h.p + k) / tt;
    Ok((dq, dp))
}

/// The auxiliary Hamiltonian `t(t-1)H + e2[-v1,-v2,v3] t - e2[-v1,-v2,v3,v4]/2`.
pub fn aux_hamiltonian(v: &PVIParameters, h: &HamiltonianState) -> Result<C64> {
    pole_guard(h)?;
    let e3 = e2(&[-v.v1, -v.v2, v.v3]);
    let e4 = e2(&[-v.v1, -v.v2, v.v3, v.v4]);
    Ok(scaled_hamiltonian(v, h) + e3 * h.t - e4 / 2.0)
}

/// Total `t` derivative of the auxiliary Hamiltonian along the flow.
pub fn aux_hamiltonian_derivative(v: &PVIParameters, h: &HamiltonianState) -> C64 {
    let (q, p) = (h.q, h.p);
    let (v1, v2, v3, v4) = (v.v1, v.v2, v.v3, v.v4);
    -q * (q - 1.0) * p * p + ((v3 + v4) * (q - 1.0) + (v3 - v4) * q) * p - (v3 - v1) * (v3 - v2)
        + e2(&[-v1, -v2, v3])
}

/// Integrate Hamilton's equations along a straight path.
pub fn integrate_hamiltonian(
    v: &PVIParameters,
    start: &HamiltonianState,
    t_target: C64,
    opts: &OdeOptions,
) -> Result<HamiltonianState> {
    let (y, _) = integrate_segment(
        |t, y| {
            let (dq, dp) = hamiltonian_rhs(v, &HamiltonianState { t, q: y[0], p: y[1] })?;
            Ok(vec![dq, dp])
        },
        start.t,
        t_target,
        &[start.q, start.p],
        opts,
    )?;
    Ok(HamiltonianState {
        t: t_target,
        q: y[0],
        p: y[1],
    })
}

fn dist_to_segment(a: C64, b: C64, c: C64) -> f64 {
    let d = b - a;
    if d.norm() == 0.0 {
        return (c - a).norm();
    }
    let s = ((c - a) * d.conj()).re / d.norm_sqr();
    (a + d * s.clamp(0.0, 1.0) - c).norm()
}

/// Result of [`integrate_sigma_report`].
#[derive(Debug, Clone, Copy)]
pub struct SigmaIntegration {
    pub state: SigmaState,
    pub initial_residual: f64,
    pub final_residual: f64,
    pub stats: OdeStats,
}

/// The two roots for `sigma''` of the quadratic at fixed `(t, sigma, sigma')`.
pub fn sigma_double_prime_roots(v: &PVIParameters, t: C64, sg: C64, s1: C64) -> Result<[C64; 2]> {
    let b = s1 * (2.0 * sg - (2.0 * t - 1.0) * s1) + v.product();
    let prod: C64 = v.as_array().iter().map(|&x| s1 + x * x).product();
    let den = s1 * (t * (t - 1.0)).powu(2);
    if den.norm() == 0.0 {
        return Err(Error::BranchLoss(t));
    }
    let r = ((prod - b * b) / den).sqrt();
    Ok([r, -r])
}

/// `sigma'''` from the differentiated sigma form, regular where `sigma'' = 0`.
fn third_derivative(v: &PVIParameters, t: C64, sg: C64, s1: C64, s2: C64) -> Result<C64> {
    let tt = t * (t - 1.0);
    let b = s1 * (2.0 * sg - (2.0 * t - 1.0) * s1) + v.product();
    let f: Vec<C64> = v.as_array().iter().map(|&x| s1 + x * x).collect();
    let dprod = f[1] * f[2] * f[3] + f[0] * f[2] * f[3] + f[0] * f[1] * f[3] + f[0] * f[1] * f[2];
    let den = 2.0 * s1 * tt * tt;
    if den.norm() < 1e-300 {
        return Err(Error::BranchLoss(t));
    }
    let num = (tt * s2) * (tt * s2) + 2.0 * s1 * tt * (2.0 * t - 1.0) * s2
        + 4.0 * b * (sg - (2.0 * t - 1.0) * s1)
        - dprod;
    Ok(-num / den)
}

/// Straight-line paths may come no closer to 0 or 1 than 0.02, or than their
/// own endpoints when those are closer.
fn check_path(t0: C64, t1: C64) -> Result<()> {
    for c in [C64::new(0.0, 0.0), C64::new(1.0, 0.0)] {
        let ends = (t0 - c).norm().min((t1 - c).norm());
        if ends == 0.0 {
            return Err(Error::PathSingularity(format!("endpoint at {c}")));
        }
        let allowed = ends.min(0.02) * (1.0 - 1e-12);
        if dist_to_segment(t0, t1, c) < allowed {
            return Err(Error::PathSingularity(format!(
                "segment {t0} -> {t1} passes within {:.3e} of {c}",
                dist_to_segment(t0, t1, c)
            )));
        }
    }
    Ok(())
}

/// Integrate the sigma form from `initial` to `t_target`.
pub fn integrate_sigma(
    v: &PVIParameters,
    initial: &SigmaState,
    t_target: C64,
    tol: f64,
) -> Result<SigmaState> {
    Ok(integrate_sigma_report(v, initial, t_target, tol)?.state)
}

/// As [`integrate_sigma`], also returning residuals and step statistics.
///
/// The state carried is `(sigma, sigma', sigma'')` under the third-order
/// equation obtained by differentiating the sigma form, so the square-root
/// branch of `sigma''` is followed by continuity automatically.
pub fn integrate_sigma_report(
    v: &PVIParameters,
    initial: &SigmaState,
    t_target: C64,
    tol: f64,
) -> Result<SigmaIntegration> {
    let initial_residual = sigma_form_relative_residual(v, initial);
    if t_target == initial.t {
        return Ok(SigmaIntegration {
            state: *initial,
            initial_residual,
            final_residual: initial_residual,
            stats: OdeStats::default(),
        });
    }
    check_path(initial.t, t_target)?;
    let opts = OdeOptions {
        rtol: tol,
        atol: tol,
        ..OdeOptions::default()
    };
    let (y, stats) = integrate_segment(
        |t, y| Ok(vec![y[1], y[2], third_derivative(v, t, y[0], y[1], y[2])?]),
        initial.t,
        t_target,
        &[initial.sigma, initial.sigma_prime, initial.sigma_double_prime],
        &opts,
    )?;
    if y.iter().any(|z| !z.is_finite()) {
        return Err(Error::NonFinite("sigma integration"));
    }
    let state = SigmaState {
        t: t_target,
        sigma: y[0],
        sigma_prime: y[1],
        sigma_double_prime: y[2],
    };
    Ok(SigmaIntegration {
        state,
        initial_residual,
        final_residual: sigma_form_relative_residual(v, &state),
        stats,
    })
}

/// Replace `sigma''` by the nearer root of the quadratic.
pub fn project_onto_quadratic(v: &PVIParameters, s: &SigmaState) -> Result<SigmaState> {
    let [a, b] = sigma_double_prime_roots(v, s.t, s.sigma, s.sigma_prime)?;
    let pick = if (a - s.sigma_double_prime).norm() <= (b - s.sigma_double_prime).norm() {
        a
    } else {
        b
    };
    Ok(SigmaState {
        sigma_double_prime: pick,
        ..*s
    })
}

/// Affine part `c1 t + c0` of sigma in terms of `t(t-1) d/dt log A_N`.
pub fn an_affine_terms(v: &PVIParameters, p: &EnsembleParameters) -> (C64, C64) {
    let nmu = p.mu * p.n as f64;
    let c1 = e2(&[v.v1, v.v3, v.v4]) + nmu;
    let c0 = -e2(&v.as_array()) / 2.0 - nmu;
    (c1, c0)
}

/// Sigma from derivatives `l1, l2, l3` of some `log f(t)`:
/// `sigma = sign t(t-1) l1 + c1 t + c0`.
pub fn sigma_from_log_derivatives(t: C64, sign: f64, c1: C64, c0: C64, l: [C64; 3]) -> SigmaState {
    let tt = t * (t - 1.0);
    let dt = 2.0 * t - 1.0;
    SigmaState {
        t,
        sigma: sign * tt * l[0] + c1 * t + c0,
        sigma_prime: sign * (dt * l[0] + tt * l[1]) + c1,
        sigma_double_prime: sign * (2.0 * l[0] + 2.0 * dt * l[1] + tt * l[2]),
    }
}

/// Sigma state from a boundary series of the average.
pub fn sigma_from_an_series(
    series: &BoundarySeries,
    v: &PVIParameters,
    p: &EnsembleParameters,
    t0: C64,
) -> Result<SigmaState> {
    let z = match series.center {
        Center::Zero => t0,
        Center::One => 1.0 - t0,
        Center::Infinity => 1.0 / t0,
    };
    if z.norm() > 0.1 || z.norm() == 0.0 {
        return Err(Error::TrustRegion(format!(
            "local variable {z} outside (0, 0.1]"
        )));
    }
    let jet = series.log_jet(t0);
    let (c1, c0) = an_affine_terms(v, p);
    Ok(sigma_from_log_derivatives(t0, 1.0, c1, c0, [jet.d1, jet.d2, jet.d3]))
}

/// Jacobi gap sigma from derivatives of `log E(1 - t)` taken in `t`.
pub fn sigma_from_jue(v: &PVIParameters, t: C64, l: [C64; 3]) -> SigmaState {
    let v12 = v.v1 * v.v2;
    let v34 = v.v3 * v.v4;
    sigma_from_log_derivatives(t, 1.0, -v12, (v12 + v34) / 2.0, l)
}

/// One candidate convention relating `E` to sigma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Convention {
    /// Sign in front of `t(t-1) d/dt log E`.
    pub derivative_sign: i8,
    /// Whether `E` is evaluated at `1 - t` (else at `t`).
    pub reflected_argument: bool,
    /// Sign of the `v1 v2 t` term.
    pub slope_sign: i8,
    /// Sign of the constant offset.
    pub offset_sign: i8,
    /// Offset built from `v1 v2 + v3 v4` (else `-v1 v2 + v3 v4`).
    pub offset_sum: bool,
}

impl Convention {
    pub fn label(&self) -> String {
        let arg = if self.reflected_argument { "1-t" } else { "t" };
        let off = if self.offset_sum { "v1v2+v3v4" } else { "-v1v2+v3v4" };
        format!(
            "{}t(t-1)dlogE({arg}) {}v1v2 t {}({off})/2",
            sign_char(self.derivative_sign),
            sign_char(self.slope_sign),
            sign_char(self.offset_sign)
        )
    }

    pub fn all() -> Vec<Convention> {
        let mut out = Vec::with_capacity(32);
        for d in [1, -1] {
            for r in [true, false] {
                for s in [1, -1] {
                    for o in [1, -1] {
                        for sum in [false, true] {
                            out.push(Convention {
                                derivative_sign: d,
                                reflected_argument: r,
                                slope_sign: s,
                                offset_sign: o,
                                offset_sum: sum,
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

fn sign_char(s: i8) -> char {
    if s >= 0 {
        '+'
    } else {
        '-'
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditEntry {
    pub convention: Convention,
    pub label: String,
    pub max_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    /// Sorted by residual, best first.
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn winner(&self) -> &AuditEntry {
        &self.entries[0]
    }

    /// The winner is below `good` and every rival above `bad`.
    pub fn is_unique(&self, good: f64, bad: f64) -> bool {
        self.entries[0].max_residual < good && self.entries[1..].iter().all(|e| e.max_residual > bad)
    }
}

/// `f` and its first three derivatives at `x` from seven-point central differences.
pub fn derivatives_fd<F: Fn(C64) -> C64>(e: &F, x: C64, h: f64) -> [C64; 4] {
    let f: Vec<C64> = (-3..=3).map(|k| e(x + k as f64 * h)).collect();
    let d1 = (-f[0] + 9.0 * f[1] - 45.0 * f[2] + 45.0 * f[4] - 9.0 * f[5] + f[6]) / (60.0 * h);
    let d2 = (2.0 * f[0] - 27.0 * f[1] + 270.0 * f[2] - 490.0 * f[3] + 270.0 * f[4] - 27.0 * f[5]
        + 2.0 * f[6])
        / (180.0 * h * h);
    let d3 = (f[0] - 8.0 * f[1] + 13.0 * f[2] - 13.0 * f[4] + 8.0 * f[5] - f[6]) / (8.0 * h * h * h);
    [f[3], d1, d2, d3]
}

/// Derivatives 1..3 of `log E` at `x` from finite differences of `E`.
pub fn log_derivatives_fd<F: Fn(C64) -> C64>(e: &F, x: C64, h: f64) -> [C64; 3] {
    let [f, d1, d2, d3] = derivatives_fd(e, x, h);
    log_jet_from_derivatives(f, [d1, d2, d3])
}

/// Derivatives of `log f` from `f` and its first three derivatives.
pub fn log_jet_from_derivatives(f: C64, d: [C64; 3]) -> [C64; 3] {
    let (r1, r2, r3) = (d[0] / f, d[1] / f, d[2] / f);
    [r1, r2 - r1 * r1, r3 - 3.0 * r2 * r1 + 2.0 * r1 * r1 * r1]
}

/// Evaluate every candidate convention on samples of `E` and rank them by the
/// largest sigma-form residual over the window.
pub fn convention_audit<F: Fn(C64) -> C64>(
    e_values: F,
    v: &PVIParameters,
    window: &[C64],
) -> AuditReport {
    let h = 1e-3;
    let v12 = v.v1 * v.v2;
    let v34 = v.v3 * v.v4;
    let mut jets = Vec::with_capacity(window.len());
    for &t in window {
        let direct = log_derivatives_fd(&e_values, t, h);
        let refl = log_derivatives_fd(&e_values, 1.0 - t, h);
        // d/dt log E(1 - t): odd derivatives flip sign
        jets.push((t, direct, [-refl[0], refl[1], -refl[2]]));
    }
    let mut entries: Vec<AuditEntry> = Convention::all()
        .into_iter()
        .map(|c| {
            let slope = c.slope_sign as f64 * v12;
            let off_base = if c.offset_sum { v12 + v34 } else { -v12 + v34 };
            let off = c.offset_sign as f64 * off_base / 2.0;
            let max_residual = jets
                .iter()
                .map(|(t, d, r)| {
                    let l = if c.reflected_argument { *r } else { *d };
                    let s = sigma_from_log_derivatives(*t, c.derivative_sign as f64, slope, off, l);
                    sigma_form_relative_residual(v, &s)
                })
                .fold(0.0, f64::max);
            AuditEntry {
                convention: c,
                label: c.label(),
                max_residual,
            }
        })
        .collect();
    entries.sort_by(|a, b| a.max_residual.total_cmp(&b.max_residual));
    AuditReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::c64;

    #[test]
    fn parameter_maps() {
        let p = EnsembleParameters::real(3, 0.0, 0.0, 0.0, 0.0).unwrap();
        let v = v_from_jue(&p);
        let want = [1.5, 1.5, 1.5, -1.5];
        for (x, w) in v.as_array().iter().zip(want) {
            assert!((x - c64(w, 0.0)).norm() < 1e-15);
        }
        let c = v_from_cyue(2, c64(1.0, 0.0));
        assert_eq!(c, PVIParameters::real([-1.0, 0.0, 3.0, 1.0]));
        let g = v_from_cyue(4, c64(0.0, 0.0)).greek();
        assert_eq!(g.alpha, c64(0.0, 0.0));
        assert_eq!(g.beta, c64(-8.0, 0.0));
        assert_eq!(g.gamma, c64(8.0, 0.0));
        assert_eq!(g.delta, c64(0.0, 0.0));
    }

    #[test]
    fn trivial_residuals() {
        let z = c64(0.0, 0.0);
        let v = PVIParameters::new(z, z, z, z);
        let s = SigmaState {
            t: c64(0.3, 0.0),
            sigma: z,
            sigma_prime: z,
            sigma_double_prime: z,
        };
        assert_eq!(sigma_form_residual(&v, &s), z);
        assert_eq!(cyue_sigma_residual(2, z, c64(0.7, 0.0), z, z, z), z);
        assert_eq!(sigma_form_i_residual(&v, c64(0.4, 0.0), c64(1.3, 0.0), z, z), z);
    }

    #[test]
    fn hamiltonian_trivia() {
        let z = c64(0.0, 0.0);
        let v = PVIParameters::new(z, z, z, z);
        let h = HamiltonianState {
            t: c64(0.3, 0.0),
            q: c64(0.6, 0.1),
            p: z,
        };
        let (dq, dp) = hamiltonian_rhs(&v, &h).unwrap();
        assert_eq!((dq, dp), (z, z));
        let h2 = HamiltonianState { p: c64(0.2, 0.0), ..h };
        let want = h2.q * (h2.q - 1.0) * (h2.q - h2.t) * h2.p * h2.p;
        assert!((aux_hamiltonian(&v, &h2).unwrap() - want).norm() < 1e-16);
        assert!(matches!(
            hamiltonian_rhs(&v, &HamiltonianState { t: c64(1.0, 0.0), ..h }),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn path_rules() {
        assert!(check_path(c64(1e-3, 0.0), c64(0.3, 0.0)).is_ok());
        assert!(check_path(c64(0.3, -0.1), c64(0.3, 0.1)).is_ok());
        assert!(check_path(c64(-0.1, 0.005), c64(0.3, 0.005)).is_err());
    }

    #[test]
    fn trivial_integration() {
        let v = PVIParameters::real([0.3, 0.2, 0.5, 0.1]);
        let s = SigmaState {
            t: c64(0.3, 0.0),
            sigma: c64(0.1, 0.0),
            sigma_prime: c64(0.2, 0.0),
            sigma_double_prime: c64(0.3, 0.0),
        };
        assert_eq!(integrate_sigma(&v, &s, s.t, 1e-10).unwrap(), s);
    }
}
