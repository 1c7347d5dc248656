//! The four table integrals, each checked by quadrature against its closed form.

use super::{integrate_detailed, Decay, DecayingIntegrand, Envelope};
use crate::error::{domain, Error, Result};
use crate::report::{Comparison, SideValue, VerificationReport};
use crate::specfun::{
    bessel_i_scaled, bessel_j, bessel_k, bessel_k_scaled, gamma, hyp2f1, k_upper_bound, BesselArgs,
    ValueWithError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::str::FromStr;

const QUAD_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableIntegral {
    /// ∫₀^∞ K_ν(a√(t²+z²)) (t²+z²)^{−ν/2} t^{2μ+1} dt
    Watson1,
    /// ∫₀^∞ J_μ(bx) K_ν(a√(z²+x²)) (z²+x²)^{−ν/2} x^{μ+1} dx
    Hankel,
    /// ∫₀^∞ x^{μ+1} J_μ(ξx) I_ν(π(z−w)x) K_ν(π(z+w)x) dx
    KoshFock,
    /// ∫₀^∞ x^{−λ} K_ν(ax) I_ν(bx) dx
    Gr6576,
}

impl TableIntegral {
    pub const ALL: [TableIntegral; 4] = [Self::Watson1, Self::Hankel, Self::KoshFock, Self::Gr6576];

    pub fn id(&self) -> &'static str {
        match self {
            Self::Watson1 => "WATSON1",
            Self::Hankel => "HANKEL",
            Self::KoshFock => "KOSH-FOCK",
            Self::Gr6576 => "GR6576",
        }
    }
}

impl FromStr for TableIntegral {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown table integral {s}")))
    }
}

/// Parameters of the table integrals; each integral reads the subset it needs.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TableParams {
    pub a: f64,
    pub b: f64,
    pub z: f64,
    pub w: f64,
    pub xi: f64,
    pub mu: f64,
    pub nu: f64,
    pub lambda: f64,
}

impl TableParams {
    fn named(&self, id: TableIntegral) -> Vec<(String, f64)> {
        let keys: &[(&str, f64)] = match id {
            TableIntegral::Watson1 => &[("a", self.a), ("z", self.z), ("mu", self.mu), ("nu", self.nu)],
            TableIntegral::Hankel => &[
                ("a", self.a),
                ("b", self.b),
                ("z", self.z),
                ("mu", self.mu),
                ("nu", self.nu),
            ],
            TableIntegral::KoshFock => &[
                ("xi", self.xi),
                ("z", self.z),
                ("w", self.w),
                ("mu", self.mu),
                ("nu", self.nu),
            ],
            TableIntegral::Gr6576 => &[("lambda", self.lambda), ("nu", self.nu), ("a", self.a), ("b", self.b)],
        };
        keys.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        domain(format!("hypothesis violated: {what}"))
    }
}

fn k(nu: f64, z: f64) -> Result<ValueWithError> {
    bessel_k(BesselArgs::new(nu, z)?)
}

/// Point where the K-bound is valid and the envelope is sampled.
fn start_point(rate: f64, nu: f64) -> f64 {
    (8.0 / rate).max((nu.abs() + 1.0) / rate).max(1.0)
}

/// Evaluates both sides of a table integral.
pub fn verify_table_integral(id: TableIntegral, p: &TableParams, tol: f64) -> Result<VerificationReport> {
    let (lhs, rhs) = match id {
        TableIntegral::Watson1 => watson1(p)?,
        TableIntegral::Hankel => hankel(p)?,
        TableIntegral::KoshFock => kosh_fock(p)?,
        TableIntegral::Gr6576 => gr6576(p)?,
    };
    let mut l = SideValue::real(lhs.value);
    l.quad_err = lhs.value.abs_error;
    l.tail = lhs.tail;
    l.terms = lhs.panels;
    Ok(VerificationReport::from_sides(
        id.id(),
        p.named(id),
        l,
        SideValue::real(rhs),
        tol,
        Comparison::Absolute,
    ))
}

fn watson1(p: &TableParams) -> Result<(super::Integral, ValueWithError)> {
    let TableParams { a, z, mu, nu, .. } = *p;
    require(a > 0.0, "a > 0")?;
    require(mu > -1.0, "μ > −1")?;
    require(z > 0.0, "z > 0")?;
    let f = move |t: f64| {
        let s = t * t + z * z;
        k(nu, a * s.sqrt()).map(|v| v.value).unwrap_or(f64::NAN) * s.powf(-nu / 2.0) * t.powf(2.0 * mu + 1.0)
    };
    let t0 = start_point(a, nu);
    let grow = if nu < 0.0 { (1.0 + z * z / (t0 * t0)).powf(-nu / 2.0) } else { 1.0 };
    let env = Envelope {
        coef: k_upper_bound(nu, a * t0) * grow,
        power: 2.0 * mu + 1.0 - nu,
        kappa: a,
        decay: Decay::Exp,
        t0,
    };
    let lhs = integrate_detailed(&DecayingIntegrand { f: &f, lower: 0.0, envelope: env }, QUAD_TOL)?;
    let pre = 2f64.powf(mu) * gamma(mu + 1.0)?.value / (a.powf(mu + 1.0) * z.powf(nu - mu - 1.0));
    Ok((lhs, k(nu - mu - 1.0, a * z)?.scale(pre)))
}

fn hankel(p: &TableParams) -> Result<(super::Integral, ValueWithError)> {
    let TableParams { a, b, z, mu, nu, .. } = *p;
    require(a > 0.0 && b > 0.0, "a, b > 0")?;
    require(z > 0.0, "z > 0")?;
    require(mu >= 0.0, "μ ≥ 0 (real instantiation of μ > −1 with |J_μ| ≤ 1)")?;
    let f = move |x: f64| {
        let s = z * z + x * x;
        let j = bessel_j(BesselArgs { nu: mu, z: b * x }).map(|v| v.value).unwrap_or(f64::NAN);
        j * k(nu, a * s.sqrt()).map(|v| v.value).unwrap_or(f64::NAN) * s.powf(-nu / 2.0) * x.powf(mu + 1.0)
    };
    let t0 = start_point(a, nu);
    let grow = if nu < 0.0 { (1.0 + z * z / (t0 * t0)).powf(-nu / 2.0) } else { 1.0 };
    let env = Envelope {
        coef: k_upper_bound(nu, a * t0) * grow,
        power: mu + 1.0 - nu,
        kappa: a,
        decay: Decay::Exp,
        t0,
    };
    let lhs = integrate_detailed(&DecayingIntegrand { f: &f, lower: 0.0, envelope: env }, QUAD_TOL)?;
    let r = (a * a + b * b).sqrt();
    let pre = b.powf(mu) / a.powf(nu) * (r / z).powf(nu - mu - 1.0);
    Ok((lhs, k(nu - mu - 1.0, z * r)?.scale(pre)))
}

fn kosh_fock(p: &TableParams) -> Result<(super::Integral, ValueWithError)> {
    let TableParams { xi, z, w, mu, nu, .. } = *p;
    require(xi > 0.0, "ξ > 0")?;
    require(w > 0.0 && z >= w, "z ≥ w > 0")?;
    require(mu >= 0.0, "μ ≥ 0 (real instantiation of μ > −1 with |J_μ| ≤ 1)")?;
    require(nu >= 0.0, "ν ≥ 0 (real instantiation of μ + ν > −1 with e^{−x}I_ν ≤ 1)")?;
    let u_rate = PI * (z - w);
    let v_rate = PI * (z + w);
    let f = move |x: f64| {
        let j = bessel_j(BesselArgs { nu: mu, z: xi * x }).map(|v| v.value).unwrap_or(f64::NAN);
        let ik = if u_rate == 0.0 {
            if nu == 0.0 {
                k(0.0, v_rate * x).map(|v| v.value).unwrap_or(f64::NAN)
            } else {
                0.0
            }
        } else {
            let ie = bessel_i_scaled(BesselArgs { nu, z: u_rate * x }).map(|v| v.value).unwrap_or(f64::NAN);
            let ke = bessel_k_scaled(BesselArgs { nu, z: v_rate * x }).map(|v| v.value).unwrap_or(f64::NAN);
            ie * ke * ((u_rate - v_rate) * x).exp()
        };
        x.powf(mu + 1.0) * j * ik
    };
    let t0 = start_point(v_rate, nu);
    let env = Envelope {
        coef: k_upper_bound(nu, v_rate * t0),
        power: mu + 1.0,
        kappa: v_rate - u_rate,
        decay: Decay::Exp,
        t0,
    };
    let lhs = integrate_detailed(&DecayingIntegrand { f: &f, lower: 0.0, envelope: env }, QUAD_TOL)?;
    let pz = (xi * xi + 4.0 * PI * PI * z * z).sqrt();
    let pw = (xi * xi + 4.0 * PI * PI * w * w).sqrt();
    let ratio = (pz - pw) / (pz + pw);
    let pre = gamma(mu + nu + 1.0)?.value / gamma(nu + 1.0)?.value * (xi / 2.0).powf(mu) / (pz * pw)
        * if nu == 0.0 { 1.0 } else { ratio.powf(nu) }
        * (1.0 / pz + 1.0 / pw).powf(2.0 * mu);
    let f21 = hyp2f1(nu - mu, -mu, nu + 1.0, ratio * ratio)?;
    Ok((lhs, f21.scale(pre)))
}

fn gr6576(p: &TableParams) -> Result<(super::Integral, ValueWithError)> {
    let TableParams { lambda, nu, a, b, .. } = *p;
    require(a > b && b > 0.0, "a > b > 0")?;
    require(2.0 * nu > lambda - 1.0, "2ν > λ − 1")?;
    require(lambda < 1.0, "λ < 1")?;
    require(nu >= 0.0, "ν ≥ 0 (so that e^{−x}I_ν ≤ 1 in the envelope)")?;
    let f = move |x: f64| {
        let ie = bessel_i_scaled(BesselArgs { nu, z: b * x }).map(|v| v.value).unwrap_or(f64::NAN);
        let ke = bessel_k_scaled(BesselArgs { nu, z: a * x }).map(|v| v.value).unwrap_or(f64::NAN);
        x.powf(-lambda) * ie * ke * ((b - a) * x).exp()
    };
    let t0 = start_point(a, nu);
    let env = Envelope {
        coef: k_upper_bound(nu, a * t0),
        power: -lambda,
        kappa: a - b,
        decay: Decay::Exp,
        t0,
    };
    let lhs = integrate_detailed(&DecayingIntegrand { f: &f, lower: 0.0, envelope: env }, QUAD_TOL)?;
    let s1 = (1.0 - lambda + 2.0 * nu) / 2.0;
    let s2 = (1.0 - lambda) / 2.0;
    let pre = b.powf(nu) * gamma(s1)?.value * gamma(s2)?.value
        / (2f64.powf(lambda + 1.0) * gamma(nu + 1.0)?.value * a.powf(1.0 - lambda + nu));
    let f21 = hyp2f1(s1, s2, nu + 1.0, b * b / (a * a))?;
    Ok((lhs, f21.scale(pre)))
}

/// Reproducible parameter draws inside each integral's hypothesis box.
pub fn table_integral_draws(id: TableIntegral, n: usize, seed: u64) -> Vec<TableParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (id as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    (0..n)
        .map(|_| match id {
            TableIntegral::Watson1 => TableParams {
                a: rng.gen_range(0.5..3.0),
                z: rng.gen_range(0.3..2.0),
                mu: rng.gen_range(-0.5..2.0),
                nu: rng.gen_range(-2.0..3.0),
                ..Default::default()
            },
            TableIntegral::Hankel => TableParams {
                a: rng.gen_range(0.5..3.0),
                b: rng.gen_range(0.2..3.0),
                z: rng.gen_range(0.3..2.0),
                mu: rng.gen_range(0.0..2.0),
                nu: rng.gen_range(-1.0..3.0),
                ..Default::default()
            },
            TableIntegral::KoshFock => {
                let w = rng.gen_range(0.3..1.5);
                TableParams {
                    xi: rng.gen_range(0.2..4.0),
                    w,
                    z: w + rng.gen_range(0.2..1.5),
                    mu: rng.gen_range(0.0..2.0),
                    nu: rng.gen_range(0.0..2.0),
                    ..Default::default()
                }
            }
            TableIntegral::Gr6576 => {
                let a = rng.gen_range(1.0..4.0);
                let lambda = rng.gen_range(-1.0..0.9);
                TableParams {
                    a,
                    b: a * rng.gen_range(0.1..0.9),
                    lambda,
                    nu: rng.gen_range(((lambda - 1.0) / 2.0).max(0.0) + 0.05..3.0),
                    ..Default::default()
                }
            }
        })
        .collect()
}

/// Verifies `draws` parameter points of every table integral, in a fixed order;
/// evaluation errors become failing reports.
pub fn run_table_integrals(draws: usize, seed: u64, tol: f64) -> Vec<VerificationReport> {
    use rayon::prelude::*;
    let cases: Vec<(TableIntegral, TableParams)> = TableIntegral::ALL
        .into_iter()
        .flat_map(|id| table_integral_draws(id, draws, seed).into_iter().map(move |p| (id, p)))
        .collect();
    cases
        .par_iter()
        .map(|(id, p)| {
            let start = std::time::Instant::now();
            let mut rep = verify_table_integral(*id, p, tol)
                .unwrap_or_else(|e| VerificationReport::failed(id.id(), p.named(*id), tol, e.to_string()));
            rep.ms = start.elapsed().as_secs_f64() * 1e3;
            rep
        })
        .collect()
}
