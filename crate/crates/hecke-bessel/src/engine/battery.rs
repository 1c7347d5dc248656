//! Invariant battery for the special functions.

use crate::error::Result;
use crate::specfun::{bessel_i, bessel_j, bessel_k, elliptic_k, gamma, hyp2f1, BesselArgs};
use serde::Serialize;
use std::f64::consts::PI;

/// One invariant checked over a parameter grid.
#[derive(Clone, Debug, Serialize)]
pub struct BatteryCheck {
    pub name: String,
    pub cases: usize,
    /// Largest observed error in the check's own measure.
    pub max_error: f64,
    pub tol: f64,
    pub pass: bool,
    pub error: Option<String>,
}

fn i(nu: f64, z: f64) -> Result<f64> {
    Ok(bessel_i(BesselArgs::new(nu, z)?)?.value)
}

fn k(nu: f64, z: f64) -> Result<f64> {
    Ok(bessel_k(BesselArgs::new(nu, z)?)?.value)
}

fn j(nu: f64, z: f64) -> Result<f64> {
    Ok(bessel_j(BesselArgs::new(nu, z)?)?.value)
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

/// Runs `errors` and compares the worst value with `tol`.
fn check(name: &str, tol: f64, errors: impl FnOnce() -> Result<Vec<f64>>) -> BatteryCheck {
    match errors() {
        Ok(errs) => {
            let max_error = errs.iter().cloned().fold(0.0, f64::max);
            let finite = errs.iter().all(|e| e.is_finite());
            BatteryCheck { name: name.into(), cases: errs.len(), max_error, tol, pass: finite && max_error <= tol, error: None }
        }
        Err(e) => BatteryCheck {
            name: name.into(),
            cases: 0,
            max_error: f64::NAN,
            tol,
            pass: false,
            error: Some(e.to_string()),
        },
    }
}

fn wronskian() -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for nu in linspace(-2.0, 13.0, 31) {
        for z in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 35.0, 50.0] {
            let w = i(nu, z)? * k(nu + 1.0, z)? + i(nu + 1.0, z)? * k(nu, z)?;
            out.push(rel(w, 1.0 / z));
        }
    }
    Ok(out)
}

fn k_symmetry() -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for nu in [0.3, 0.5, 1.0, 2.7, 7.2] {
        for z in [0.2, 2.0, 15.0] {
            out.push((k(-nu, z)? - k(nu, z)?).abs());
        }
    }
    Ok(out)
}

/// Central differences of z^ν F_ν(z) against sign·z^ν F_{ν−1}(z).
fn derivative(f: fn(f64, f64) -> Result<f64>, sign: f64, orders: &[f64], points: &[f64]) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for &nu in orders {
        for &z in points {
            let g = |x: f64| -> Result<f64> { Ok(x.powf(nu) * f(nu, x)?) };
            let h = 1e-5 * z;
            let fd = (g(z + h)? - g(z - h)?) / (2.0 * h);
            out.push(rel(fd, sign * z.powf(nu) * f(nu - 1.0, z)?));
        }
    }
    Ok(out)
}

fn half_integer_forms() -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for z in [0.1, 0.3, 1.0, 2.5, 7.0, 15.0, 30.0, 60.0, 100.0] {
        out.push(rel(i(0.5, z)?, (2.0 / (PI * z)).sqrt() * z.sinh()));
        out.push(rel(k(0.5, z)?, (PI / (2.0 * z)).sqrt() * (-z).exp()));
    }
    Ok(out)
}

/// Errors of z^ν K_ν(z) from its z → 0 limit must shrink monotonically until they reach the
/// rounding floor; reported as the final relative error, or infinity if the sequence grows.
fn small_argument_limit() -> Result<Vec<f64>> {
    const ROUNDING_FLOOR: f64 = 1e-13;
    let mut out = Vec::new();
    for nu in [0.3, 0.7, 1.5] {
        let target = 2f64.powf(nu - 1.0) * gamma(nu)?.value;
        let mut last = f64::INFINITY;
        let mut monotone = true;
        for e in 3..=10 {
            let z = 10f64.powi(-e);
            let err = rel(z.powf(nu) * k(nu, z)?, target);
            monotone &= err <= last || err < ROUNDING_FLOOR;
            last = err;
        }
        out.push(if monotone { last } else { f64::INFINITY });
    }
    Ok(out)
}

/// |value/leading term − 1| · z / 5 for z ≥ 30; J is measured against its envelope.
fn asymptotics() -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for nu in [0.0, 0.5, 1.3, 2.0] {
        for z in [30.0f64, 50.0, 100.0, 200.0, 400.0] {
            let lead_i = z.exp() / (2.0 * PI * z).sqrt();
            let lead_k = (PI / (2.0 * z)).sqrt() * (-z).exp();
            let amp = (2.0 / (PI * z)).sqrt();
            let lead_j = amp * (z - nu * PI / 2.0 - PI / 4.0).cos();
            out.push(rel(i(nu, z)?, lead_i) * z / 5.0);
            out.push(rel(k(nu, z)?, lead_k) * z / 5.0);
            out.push((j(nu, z)? - lead_j).abs() / amp * z / 5.0);
        }
    }
    Ok(out)
}

fn euler_transform() -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for a in [0.3, 1.2, 2.5] {
        for b in [-0.7, 0.4, 1.9] {
            for c in [1.5, 2.7, 4.1] {
                for x in [0.05, 0.3, 0.6, 0.9] {
                    let lhs = hyp2f1(a, b, c, x)?.value;
                    let rhs = (1.0 - x).powf(c - a - b) * hyp2f1(c - a, c - b, c, x)?.value;
                    out.push(rel(lhs, rhs));
                }
            }
        }
    }
    Ok(out)
}

fn elliptic_relation() -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for m in [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.97] {
        out.push(rel(2.0 / PI * elliptic_k(m)?.value, hyp2f1(0.5, 0.5, 1.0, m * m)?.value));
    }
    Ok(out)
}

/// Runs the full battery.
pub fn specfun_battery() -> Vec<BatteryCheck> {
    let orders = [1.0, 1.5, 2.5, 4.2];
    let points = [0.5, 1.0, 2.0, 5.0];
    vec![
        check("Wronskian I_v K_(v+1) + I_(v+1) K_v = 1/z", 1e-10, wronskian),
        check("K_(-v) = K_v", 0.0, k_symmetry),
        check("d/dz z^v J_v = z^v J_(v-1)", 1e-6, || derivative(j, 1.0, &orders, &points)),
        check("d/dz z^v I_v = z^v I_(v-1)", 1e-6, || derivative(i, 1.0, &orders, &points)),
        check("d/dz z^v K_v = -z^v K_(v-1)", 1e-6, || derivative(k, -1.0, &orders, &points)),
        check("half-integer closed forms of I and K", 1e-12, half_integer_forms),
        check("z^v K_v(z) -> 2^(v-1) Gamma(v)", 1e-3, small_argument_limit),
        check("large-z leading asymptotics within 5/z", 1.0, asymptotics),
        check("Euler transformation of 2F1", 1e-9, euler_transform),
        check("(2/pi) K(k) = 2F1(1/2, 1/2; 1; k^2)", 1e-12, elliptic_relation),
    ]
}
