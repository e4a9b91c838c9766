//! Dormand-Prince 5(4) integration of complex ODE systems along straight paths.

use crate::error::{Error, Result};
use crate::specfun::C64;

#[derive(Debug, Clone, Copy)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
    /// First step as a fraction of the path; chosen automatically when `None`.
    pub first_step: Option<f64>,
}

impl Default for OdeOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            atol: 1e-10,
            max_steps: 200_000,
            first_step: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OdeStats {
    pub accepted: usize,
    pub rejected: usize,
    pub evaluations: usize,
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// fifth-order minus embedded fourth-order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn axpy(y: &[C64], terms: &[(f64, &[C64])], h: C64) -> Vec<C64> {
    let mut out = y.to_vec();
    for (c, k) in terms {
        for (o, ki) in out.iter_mut().zip(k.iter()) {
            *o += h * *c * *ki;
        }
    }
    out
}

/// Integrate `y' = f(t, y)` from `t0` to `t1` along the segment joining them.
pub fn integrate_segment<F>(
    mut f: F,
    t0: C64,
    t1: C64,
    y0: &[C64],
    opts: &OdeOptions,
) -> Result<(Vec<C64>, OdeStats)>
where
    F: FnMut(C64, &[C64]) -> Result<Vec<C64>>,
{
    let mut stats = OdeStats::default();
    let span = t1 - t0;
    if span.norm() == 0.0 {
        return Ok((y0.to_vec(), stats));
    }
    let mut s = 0.0_f64;
    let mut y = y0.to_vec();
    let mut k1 = f(t0, &y)?;
    stats.evaluations += 1;
    let mut h = opts.first_step.unwrap_or_else(|| {
        let ynorm = y.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-12);
        let fnorm = k1.iter().map(|z| z.norm()).fold(0.0, f64::max) * span.norm();
        (0.01 * ynorm / fnorm.max(1e-300)).min(0.01)
    });
    let mut err_prev = 1e-4_f64;
    let (alpha, beta, safety) = (0.7 / 5.0, 0.4 / 5.0, 0.9);
    while s < 1.0 {
        if stats.accepted + stats.rejected >= opts.max_steps {
            return Err(Error::NoConvergence(opts.max_steps));
        }
        if s + h > 1.0 {
            h = 1.0 - s;
        }
        if h < 1e-14 {
            return Err(Error::StepUnderflow(t0 + s * span));
        }
        let hc = span * h;
        let t = t0 + s * span;
        let k2 = f(t + C2 * hc, &axpy(&y, &[(A21, &k1)], hc))?;
        let k3 = f(t + C3 * hc, &axpy(&y, &[(A31, &k1), (A32, &k2)], hc))?;
        let k4 = f(t + C4 * hc, &axpy(&y, &[(A41, &k1), (A42, &k2), (A43, &k3)], hc))?;
        let k5 = f(
            t + C5 * hc,
            &axpy(&y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)], hc),
        )?;
        let k6 = f(
            t + hc,
            &axpy(&y, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)], hc),
        )?;
        let ynew = axpy(&y, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)], hc);
        let k7 = f(t + hc, &ynew)?;
        stats.evaluations += 6;
        let mut acc = 0.0;
        for i in 0..y.len() {
            let e = hc
                * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = opts.atol + opts.rtol * y[i].norm().max(ynew[i].norm());
            acc += (e.norm() / sc).powi(2);
        }
        let err = (acc / y.len() as f64).sqrt();
        if !err.is_finite() {
            stats.rejected += 1;
            h *= 0.2;
            continue;
        }
        if err <= 1.0 {
            s += h;
            y = ynew;
            k1 = k7;
            stats.accepted += 1;
            let fac = safety * err.max(1e-10).powf(-alpha) * err_prev.powf(beta);
            h *= fac.clamp(0.2, 5.0);
            err_prev = err.max(1e-4);
        } else {
            stats.rejected += 1;
            h *= (safety * err.powf(-alpha)).clamp(0.2, 1.0);
        }
    }
    Ok((y, stats))
}
