//! The acceptance suite: every numbered criterion as a function returning a
//! measured value, its tolerance and a verdict. Shared by the CLI and the
//! `acceptance` test target.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansions::{
    an_boundary_series, an_infinity_series_matching_determinant, circle_gap_series,
    jimbo_tau_expansion_from_s, an_from_tau_prefactor, jue_gap_log_jet, jue_gap_series,
    BoundarySeries, CircleGroup,
};
use crate::fredholm_jacobi::{circle_gap, fredholm_det, jacobi_gap, JacobiWeightParams};
use crate::linalg::{det2, max_abs2, Mat2};
use crate::monodromy::{
    build_monodromy, connection_residual, invariants_from_matrices, manifold_gradient,
    manifold_value, sse_case_data, sse_case_matrices, MonodromyData, SseCase, Sign, ThetaSet,
};
use crate::sigma_pvi::{
    an_affine_terms, aux_hamiltonian, convention_audit, derivatives_fd, integrate_hamiltonian,
    integrate_sigma_report, log_derivatives_fd, project_onto_quadratic, sigma_form_relative_residual,
    sigma_from_an_series, sigma_from_jue, sigma_from_log_derivatives, v_from_jacobi, v_from_jue,
    HamiltonianState, PVIParameters, SigmaState,
};
use crate::ode::OdeOptions;
use crate::specfun::{c64, cos_pi, C64};
use crate::toeplitz::{
    eval_an_at, gamma_ratio_determinant, gamma_ratio_determinant_general,
    morris_integral, morris_integral_quadrature, unitary_arc_gap, Center, EnsembleParameters,
};
#[cfg(feature = "xprec")]
use crate::toeplitz::gamma_ratio_determinant_general_dd;

/// `Fast` trims the random draw counts; `Full` uses the pinned counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Fast,
    Full,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: String,
    pub title: String,
    pub measured: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub elapsed_ms: f64,
    pub budget_ms: f64,
    pub notes: Vec<String>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {}: measured {:.3e} (tol {:.1e}), {:.0} ms (budget {:.0} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.measured,
            self.tolerance,
            self.elapsed_ms,
            self.budget_ms
        )
    }
}

/// The criteria whose failure is understood and recorded; see the README.
pub const KNOWN_FAILURES: [&str; 4] = ["1a", "1c", "5a", "5b"];

/// Wall-clock budgets are only enforced in optimised builds.
fn budget_ok(elapsed_ms: f64, budget_ms: f64) -> bool {
    cfg!(debug_assertions) || elapsed_ms <= budget_ms
}

struct Builder {
    id: &'static str,
    title: &'static str,
    budget_ms: f64,
    start: Instant,
    notes: Vec<String>,
}

impl Builder {
    fn new(id: &'static str, title: &'static str, budget_ms: f64) -> Self {
        Self {
            id,
            title,
            budget_ms,
            start: Instant::now(),
            notes: Vec::new(),
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    /// Pass when `measured < tolerance` and the extra condition holds.
    fn finish(self, measured: f64, tolerance: f64, extra: bool) -> CriterionResult {
        let elapsed_ms = self.start.elapsed().as_secs_f64() * 1e3;
        CriterionResult {
            id: self.id.to_string(),
            title: self.title.to_string(),
            measured,
            tolerance,
            passed: measured < tolerance && extra && budget_ok(elapsed_ms, self.budget_ms),
            elapsed_ms,
            budget_ms: self.budget_ms,
            notes: self.notes,
        }
    }

    fn error(mut self, e: crate::Error) -> CriterionResult {
        self.note(format!("error: {e}"));
        self.finish(f64::INFINITY, 0.0, false)
    }
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

/// Parameters used by the boundary-series and ODE criteria.
pub fn reference_ensemble() -> EnsembleParameters {
    EnsembleParameters::real(2, 0.3, 0.25, 0.1, 0.4).expect("valid parameters")
}

fn series_vs_determinant(
    b: &mut Builder,
    series: &BoundarySeries,
    p: &EnsembleParameters,
    center: Center,
    ts: [C64; 2],
) -> Result<(f64, f64)> {
    let mut errs = [0.0; 2];
    for (k, t) in ts.iter().enumerate() {
        let det = eval_an_at(center, p, *t)?;
        let ser = series.eval(*t).value;
        errs[k] = rel(ser, det);
        b.note(format!("t = {t}: determinant {det:.12e}, series {ser:.12e}, rel {:.3e}", errs[k]));
    }
    Ok((errs[0], errs[1]))
}

fn criterion_1(center: Center) -> CriterionResult {
    let (id, title) = match center {
        Center::Zero => ("1a", "boundary series vs Toeplitz determinant at t = 0"),
        Center::One => ("1b", "boundary series vs Toeplitz determinant at t = 1"),
        Center::Infinity => ("1c", "boundary series vs Toeplitz determinant at t = inf"),
    };
    let mut b = Builder::new(id, title, 1000.0);
    let p = reference_ensemble();
    let ts = match center {
        Center::Zero => [c64(1e-3, 0.0), c64(1e-4, 0.0)],
        Center::One => [c64(1.0 - 1e-3, 0.0), c64(1.0 - 1e-4, 0.0)],
        Center::Infinity => [c64(1e3, 0.0), c64(1e4, 0.0)],
    };
    let run = |b: &mut Builder| -> Result<(f64, f64)> {
        let series = an_boundary_series(center, &p)?;
        let out = series_vs_determinant(b, &series, &p, center, ts)?;
        if center == Center::Infinity {
            let flipped = an_infinity_series_matching_determinant(&p)?;
            let (e3, e4) = series_vs_determinant(b, &flipped, &p, center, ts)?;
            b.note(format!("with the non-analytic sign flipped: rel {e3:.3e}, {e4:.3e}"));
        }
        Ok(out)
    };
    match run(&mut b) {
        Ok((e3, e4)) => {
            let ratio = e3 / e4;
            b.note(format!("error ratio {ratio:.2} (need >= 10)"));
            b.finish(e3, 1e-4, ratio >= 10.0)
        }
        Err(e) => b.error(e),
    }
}

fn criterion_2() -> CriterionResult {
    let mut b = Builder::new("2", "U(N) small-arc series vs Toeplitz route", 1000.0);
    let mut worst: f64 = 0.0;
    for n in [2, 3] {
        match unitary_arc_gap(n, c64(1.0, 0.0), 0.05) {
            Ok(v) => {
                let s = circle_gap_series(CircleGroup::Unitary, n, 1.0, 0.05).value;
                let d = (v - s).norm();
                b.note(format!("N = {n}: {:.15e} vs {:.15e}, |diff| {d:.3e}", v.re, s.re));
                worst = worst.max(d);
            }
            Err(e) => return b.error(e),
        }
    }
    b.finish(worst, 1e-9, true)
}

fn criterion_3() -> CriterionResult {
    let mut b = Builder::new("3", "Jacobi gap series vs Fredholm determinant", 2000.0);
    let run = |b: &mut Builder| -> Result<(f64, f64)> {
        let p = JacobiWeightParams::new(2, 0.5, 0.5)?;
        let u = 1e-2;
        let f = fredholm_det(&p, 1.0 - u, c64(1.0, 0.0), 2 * 2 + 16)?;
        let s = jue_gap_series(2, 0.5, 0.5, 1.0, u)?;
        b.note(format!(
            "Nystrom {:.15e}, Gram {:.15e}, series {:.15e}",
            f.nystrom.re, f.gram.re, s.value.re
        ));
        Ok((rel(s.value, f.gram), f.discrepancy()))
    };
    match run(&mut b) {
        Ok((r, routes)) => {
            b.note(format!("routes differ by {routes:.3e} (need < 1e-9)"));
            b.finish(r, 1e-5, routes < 1e-9)
        }
        Err(e) => b.error(e),
    }
}

fn criterion_4() -> CriterionResult {
    let mut b = Builder::new("4", "O(2N+1) series vs Fredholm route", 1000.0);
    let mut worst: f64 = 0.0;
    let mut within = true;
    for g in [CircleGroup::OrthogonalPlus, CircleGroup::OrthogonalMinus] {
        match circle_gap(g, 2, 0.1, c64(0.5, 0.0)) {
            Ok(v) => {
                let s = circle_gap_series(g, 2, 0.5, 0.1);
                let d = (v - s.value).norm();
                b.note(format!("{g:?}: |diff| {d:.3e}, next-term estimate {:.3e}", s.error_estimate));
                within &= d <= s.error_estimate;
                worst = worst.max(d.max(s.error_estimate));
            }
            Err(e) => return b.error(e),
        }
    }
    b.finish(worst, 1e-6, within)
}

/// Log derivatives of the Toeplitz route with one expansion center for the
/// whole stencil.
fn toeplitz_log_derivatives(p: &EnsembleParameters, t: f64) -> Result<[C64; 3]> {
    let center = if t <= 0.5 { Center::Zero } else { Center::One };
    eval_an_at(center, p, c64(t, 0.0))?;
    let f = |x: C64| eval_an_at(center, p, x).unwrap_or(c64(f64::NAN, 0.0));
    let l = log_derivatives_fd(&f, c64(t, 0.0), 1e-3);
    if l.iter().any(|z| !z.is_finite()) {
        return Err(Error::NonFinite("Toeplitz log derivatives"));
    }
    Ok(l)
}

/// `t(t-1) d/dt log A_N` from the Toeplitz route by finite differences.
fn toeplitz_log_part(p: &EnsembleParameters, t: f64) -> Result<C64> {
    let l = toeplitz_log_derivatives(p, t)?;
    Ok(c64(t * (t - 1.0), 0.0) * l[0])
}

/// Sigma state from Toeplitz data, with `sigma''` projected onto the quadratic.
pub fn sse_sigma_from_toeplitz(p: &EnsembleParameters, t: f64) -> Result<SigmaState> {
    let v = v_from_jue(p);
    let (c1, c0) = an_affine_terms(&v, p);
    let l = toeplitz_log_derivatives(p, t)?;
    project_onto_quadratic(&v, &sigma_from_log_derivatives(c64(t, 0.0), 1.0, c1, c0, l))
}

fn criterion_5a() -> CriterionResult {
    let mut b = Builder::new("5a", "ODE closure seeded from the t = 0 series (SSE)", 5000.0);
    let run = |b: &mut Builder| -> Result<f64> {
        let p = reference_ensemble();
        let v = v_from_jue(&p);
        let (c1, c0) = an_affine_terms(&v, &p);
        let target = 0.3;
        let want = toeplitz_log_part(&p, target)?;
        let series = an_boundary_series(Center::Zero, &p)?;
        let seed = sigma_from_an_series(&series, &v, &p, c64(1e-3, 0.0))?;
        b.note(format!("series seed residual {:.3e}", sigma_form_relative_residual(&v, &seed)));
        let seed = project_onto_quadratic(&v, &seed)?;
        let r = integrate_sigma_report(&v, &seed, c64(target, 0.0), 1e-12)?;
        let got = r.state.sigma - c1 * target - c0;
        let err = rel(got, want);
        b.note(format!("ODE {got:.10e} vs Toeplitz {want:.10e}"));
        let seed2 = sse_sigma_from_toeplitz(&p, 0.02)?;
        let r2 = integrate_sigma_report(&v, &seed2, c64(target, 0.0), 1e-12)?;
        let got2 = r2.state.sigma - c1 * target - c0;
        b.note(format!(
            "seeded from Toeplitz data at t = 0.02 instead: rel {:.3e}",
            rel(got2, want)
        ));
        Ok(err)
    };
    match run(&mut b) {
        Ok(e) => b.finish(e, 1e-5, true),
        Err(e) => b.error(e),
    }
}

/// `t(t-1) d/dt log E(1-t)` from the Fredholm route by finite differences.
fn jue_log_part(n: usize, a: f64, b: f64, xi: f64, t: f64) -> Result<C64> {
    jacobi_gap(n, a, b, c64(xi, 0.0), 1.0 - t)?;
    let e = |x: C64| jacobi_gap(n, a, b, c64(xi, 0.0), 1.0 - x.re).unwrap_or(c64(f64::NAN, 0.0));
    let l = log_derivatives_fd(&e, c64(t, 0.0), 1e-3);
    Ok(c64(t * (t - 1.0), 0.0) * l[0])
}

/// Integrate the Jacobi-gap sigma from the series seed at `t0` to `t1` and
/// return `t(t-1) d/dt log E(1-t)` there.
pub fn jue_ode_log_part(n: usize, a: f64, b: f64, xi: f64, t0: f64, t1: f64) -> Result<C64> {
    let v = v_from_jacobi(n, a, b);
    let l = jue_gap_log_jet(n, a, b, xi, t0)?;
    let seed = project_onto_quadratic(&v, &sigma_from_jue(&v, c64(t0, 0.0), l))?;
    let r = integrate_sigma_report(&v, &seed, c64(t1, 0.0), 1e-12)?;
    let affine = sigma_from_jue(&v, c64(t1, 0.0), [c64(0.0, 0.0); 3]).sigma;
    Ok(r.state.sigma - affine)
}

fn criterion_5b() -> CriterionResult {
    let mut b = Builder::new("5b", "ODE closure seeded from the Jacobi gap series", 5000.0);
    let run = |b: &mut Builder| -> Result<f64> {
        let (n, a, bb, xi) = (2, 0.5, 0.5, 1.0);
        let want = jue_log_part(n, a, bb, xi, 0.2)?;
        let got = jue_ode_log_part(n, a, bb, xi, 1e-3, 0.2)?;
        b.note(format!("ODE {got:.10e} vs Fredholm {want:.10e}"));
        for t0 in [3e-4, 1e-4] {
            let g = jue_ode_log_part(n, a, bb, xi, t0, 0.2)?;
            b.note(format!("seeded at t = {t0:.0e} instead: rel {:.3e}", rel(g, want)));
        }
        Ok(rel(got, want))
    };
    match run(&mut b) {
        Ok(e) => b.finish(e, 1e-5, true),
        Err(e) => b.error(e),
    }
}

/// Generic parameters and initial data used for the Hamiltonian bridge.
pub fn bridge_setup() -> (PVIParameters, HamiltonianState) {
    let v = PVIParameters::new(
        c64(0.31, 0.12),
        c64(-0.47, 0.05),
        c64(0.83, -0.21),
        c64(0.16, 0.3),
    );
    let h = HamiltonianState {
        t: c64(0.2, 0.0),
        q: c64(0.41, 0.13),
        p: c64(0.27, -0.18),
    };
    (v, h)
}

/// Largest relative sigma-form residual of the auxiliary Hamiltonian over
/// sample points, derivatives by finite differences with step `fd_step`.
pub fn hamiltonian_bridge_residual(samples: &[f64], fd_step: f64) -> Result<f64> {
    let (v, start) = bridge_setup();
    let opts = OdeOptions {
        rtol: 1e-13,
        atol: 1e-13,
        ..OdeOptions::default()
    };
    let mut worst: f64 = 0.0;
    for &t in samples {
        // walk the stencil points in order along one trajectory
        let mut state = start;
        let mut values = Vec::with_capacity(7);
        for k in -3..=3 {
            let tk = c64(t + k as f64 * fd_step, 0.0);
            state = integrate_hamiltonian(&v, &state, tk, &opts)?;
            values.push(aux_hamiltonian(&v, &state)?);
        }
        let lookup = |x: C64| {
            let k = ((x.re - t) / fd_step).round() as i64 + 3;
            values[k as usize]
        };
        let d = derivatives_fd(&lookup, c64(t, 0.0), fd_step);
        let s = SigmaState {
            t: c64(t, 0.0),
            sigma: d[0],
            sigma_prime: d[1],
            sigma_double_prime: d[2],
        };
        worst = worst.max(sigma_form_relative_residual(&v, &s));
    }
    Ok(worst)
}

fn criterion_6() -> CriterionResult {
    let mut b = Builder::new("6", "auxiliary Hamiltonian satisfies the sigma form", 2000.0);
    let samples = [0.3, 0.45, 0.6, 0.75];
    let mut best = f64::INFINITY;
    for h in [2e-2, 1e-2, 5e-3] {
        match hamiltonian_bridge_residual(&samples, h) {
            Ok(r) => {
                b.note(format!("difference step {h:.0e}: max residual {r:.3e}"));
                best = best.min(r);
            }
            Err(e) => return b.error(e),
        }
    }
    b.finish(best, 1e-6, true)
}

fn random_c(rng: &mut ChaCha8Rng, lo: f64, hi: f64, im: f64) -> C64 {
    c64(rng.gen_range(lo..hi), rng.gen_range(-im..im))
}

/// Worst defects over random quadruples: (cyclic, connection, manifold).
pub fn monodromy_draws(count: usize, seed: u64) -> Result<(f64, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut cyc, mut con, mut man): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut done = 0;
    while done < count {
        let th = ThetaSet::new(
            random_c(&mut rng, 0.05, 0.95, 0.3),
            random_c(&mut rng, 0.05, 0.95, 0.3),
            random_c(&mut rng, 0.05, 0.95, 0.3),
            random_c(&mut rng, 0.05, 0.95, 0.3),
        );
        let sigma = random_c(&mut rng, 0.05, 0.95, 0.3);
        let s = random_c(&mut rng, 0.3, 2.0, 0.5);
        let r = random_c(&mut rng, 0.5, 2.0, 0.5);
        let q = match build_monodromy(&th, sigma, s, r) {
            Ok(q) => q,
            Err(_) => continue,
        };
        done += 1;
        cyc = cyc.max(max_abs2(&q.cyclic_defect()));
        let inv = invariants_from_matrices(&q);
        man = man.max(manifold_value(&inv).norm());
        let sig = inv.sigmas();
        let data = MonodromyData {
            sigma0t: sigma,
            sigma_t1: sig[1].0,
            sigma01: sig[2].0,
            s0t: s,
            s_t1: c64(f64::NAN, 0.0),
            s01: c64(f64::NAN, 0.0),
            r,
        };
        for sg in [Sign::Plus, Sign::Minus] {
            con = con.max(connection_residual(&th, &data, sg).norm());
        }
    }
    Ok((cyc, con, man))
}

/// Largest deviation from the structural claims of the three cases.
fn case_structure(case: SseCase, m: &[Mat2; 3]) -> f64 {
    match case {
        SseCase::A => m.iter().map(|x| x[(0, 1)].norm()).fold(0.0, f64::max),
        SseCase::C => m.iter().map(|x| x[(1, 0)].norm()).fold(0.0, f64::max),
        SseCase::B => {
            let mt = m[1];
            mt[(0, 1)].norm().max(mt[(1, 0)].norm()).max((mt[(0, 0)] - mt[(1, 1)]).norm())
        }
    }
}

fn criterion_7(suite: Suite, seed: u64) -> CriterionResult {
    let mut b = Builder::new("7", "monodromy suite", 2000.0);
    let draws = match suite {
        Suite::Fast => 10,
        Suite::Full => 50,
    };
    let run = |b: &mut Builder| -> Result<bool> {
        let (cyc, con, man) = monodromy_draws(draws, seed)?;
        b.note(format!(
            "{draws} draws: cyclic {cyc:.2e} (< 1e-12), connection {con:.2e} (< 1e-10), manifold {man:.2e} (< 1e-10)"
        ));
        let mut ok = cyc < 1e-12 && con < 1e-10 && man < 1e-10;
        let p = reference_ensemble();
        let v = v_from_jue(&p);
        for case in [SseCase::A, SseCase::B, SseCase::C] {
            let (th, d) = sse_case_data(case, &p)?;
            let q = sse_case_matrices(case, &p, c64(1.3, 0.2))?;
            let structure = case_structure(case, &[q.m0, q.mt, q.m1]);
            let dets = [q.m0, q.mt, q.m1]
                .iter()
                .map(|m| (det2(m) - 1.0).norm())
                .fold(0.0, f64::max);
            let inv = invariants_from_matrices(&q);
            let grad = manifold_gradient(&inv).iter().map(|g| g.norm()).fold(0.0, f64::max);
            let traces = [
                (inv.p0t, d.sigma0t),
                (inv.pt1, d.sigma_t1),
                (inv.p01, d.sigma01),
            ]
            .iter()
            .map(|(p, s)| (p - 2.0 * cos_pi(*s)).norm())
            .fold(0.0, f64::max);
            let mut suppressed_exact = true;
            let mut coeff_err: f64 = 0.0;
            for (c, sigma, s) in [
                (Center::Zero, d.sigma0t, d.s0t),
                (Center::One, d.sigma_t1, d.s_t1),
                (Center::Infinity, d.sigma01, d.s01),
            ] {
                let tau = jimbo_tau_expansion_from_s(c, &th, sigma, s, c64(1.0, 0.0))?;
                suppressed_exact &= tau.plus_suppressed != tau.minus_suppressed;
                let an = an_from_tau_prefactor(&p, &th, &v, &tau)?;
                let printed = an_boundary_series(c, &p)?;
                let e = rel(an.nonanalytic_coeff, printed.nonanalytic_coeff)
                    .max(rel(an.analytic_coeffs[0], printed.analytic_coeffs[0]));
                coeff_err = coeff_err.max(e);
            }
            b.note(format!(
                "case {case:?}: structure {structure:.1e}, det-1 {dets:.1e}, gradient {grad:.1e}, traces {traces:.1e}, one branch exactly 0: {suppressed_exact}, surviving coefficient rel {coeff_err:.1e}"
            ));
            ok &= structure < 1e-12
                && dets < 1e-12
                && grad < 1e-10
                && traces < 1e-10
                && suppressed_exact
                && coeff_err < 1e-10;
        }
        Ok(ok)
    };
    match run(&mut b) {
        Ok(ok) => b.finish(if ok { 0.0 } else { 1.0 }, 0.5, ok),
        Err(e) => b.error(e),
    }
}

/// Worst relative discrepancy of the two gamma-ratio determinant identities.
pub fn gamma_ratio_draws(count: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let n = rng.gen_range(1..=6);
        let c = random_c(&mut rng, 0.3, 3.0, 0.5);
        let d = random_c(&mut rng, 0.3, 3.0, 0.5);
        let (direct, prod) = gamma_ratio_determinant(c, d, n)?;
        worst = worst.max(rel(direct, prod));
        let z: Vec<C64> = (0..n).map(|_| random_c(&mut rng, 1.0, 4.0, 0.5)).collect();
        let b = random_c(&mut rng, 0.2, 2.0, 0.5);
        let (direct, prod) = gamma_ratio_determinant_general(&z, b)?;
        #[cfg(feature = "xprec")]
        let direct = {
            let _ = direct;
            gamma_ratio_determinant_general_dd(&z, b)?
        };
        worst = worst.max(rel(direct, prod));
    }
    Ok(worst)
}

fn criterion_8(suite: Suite, seed: u64) -> CriterionResult {
    let mut b = Builder::new("8", "determinant identities", 5000.0);
    let draws = match suite {
        Suite::Fast => 20,
        Suite::Full => 100,
    };
    let run = |b: &mut Builder| -> Result<bool> {
        let g = gamma_ratio_draws(draws, seed)?;
        b.note(format!("{draws} draws: gamma-ratio identities rel {g:.2e} (< 1e-10)"));
        let (a, bb) = (c64(0.6, 0.15), c64(0.35, 0.0));
        let closed = morris_integral(2, a, bb)?;
        let quad = morris_integral_quadrature(2, a, bb, 1e-10)?;
        let m = rel(quad, closed);
        b.note(format!("Morris N = 2: closed {closed:.12e}, quadrature {quad:.12e}, rel {m:.2e} (< 1e-6)"));
        Ok(g < 1e-10 && m < 1e-6)
    };
    match run(&mut b) {
        Ok(ok) => b.finish(if ok { 0.0 } else { 1.0 }, 0.5, ok),
        Err(e) => b.error(e),
    }
}

fn criterion_9() -> CriterionResult {
    let mut b = Builder::new("9", "sign-convention audit on Fredholm data", 5000.0);
    let window: Vec<C64> = (0..5).map(|k| c64(0.2 + 0.15 * k as f64, 0.0)).collect();
    let audit = |a: f64, bb: f64| {
        let e = move |x: C64| jacobi_gap(2, a, bb, c64(0.7, 0.0), x.re).unwrap_or(c64(f64::NAN, 0.0));
        convention_audit(e, &v_from_jacobi(2, a, bb), &window)
    };
    let rep = audit(0.5, 1.5);
    let win = rep.winner();
    let runner_up = rep.entries[1].max_residual;
    b.note(format!("a = 0.5, b = 1.5: winner {} at {:.2e}, runner-up {runner_up:.2e}", win.label, win.max_residual));
    let sym = audit(0.5, 0.5);
    let ties = sym.entries.iter().filter(|e| e.max_residual < 1e-4).count();
    b.note(format!("a = b = 0.5: {ties} conventions below 1e-4 (symmetric weight and v4 = 0 make them coincide)"));
    b.finish(win.max_residual, 1e-4, runner_up > 1e-1)
}

/// Run every criterion in order.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<CriterionResult> {
    vec![
        criterion_1(Center::Zero),
        criterion_1(Center::One),
        criterion_1(Center::Infinity),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5a(),
        criterion_5b(),
        criterion_6(),
        criterion_7(suite, seed),
        criterion_8(suite, seed),
        criterion_9(),
    ]
}
