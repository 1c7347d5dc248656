//! Limit checks: as α → β the second-family identities degenerate into the K-series
//! identities, and the ν → −1 limit of the zeta bracket is logarithmic.

use super::first::power_k_series;
use super::{classical, second, Budget, Ctx, IdentityParams, DEFAULT_TABLE_SIZE};
use crate::error::Result;
use crate::hecke::{self, Family, HeckeSystem, SystemParams};
use crate::specfun::{gamma, ln_gamma, zeta, EULER_GAMMA};
use serde::Serialize;
use std::f64::consts::PI;

/// One limit verified by extrapolating estimates at shrinking gaps.
#[derive(Clone, Debug, Serialize)]
pub struct LimitCheck {
    pub name: String,
    pub gaps: Vec<f64>,
    pub estimates: Vec<f64>,
    pub extrapolant: f64,
    pub target: f64,
    pub tol: f64,
    /// log(|E₀−E₁|/|E₁−E₂|)/log(gap ratio).
    pub observed_order: f64,
    pub pass: bool,
    pub error: Option<String>,
}

impl LimitCheck {
    fn failed(name: &str, tol: f64, e: crate::Error) -> Self {
        Self {
            name: name.into(),
            gaps: vec![],
            estimates: vec![],
            extrapolant: f64::NAN,
            target: f64::NAN,
            tol,
            observed_order: f64::NAN,
            pass: false,
            error: Some(e.to_string()),
        }
    }
}

/// Two Richardson steps for errors c₁h^p + c₂h^{2p} + …, with gaps shrinking by `ratio`.
fn richardson(estimates: &[f64], ratio: f64, p: i32) -> f64 {
    let r1 = ratio.powi(p);
    let first: Vec<f64> = estimates.windows(2).map(|w| (r1 * w[1] - w[0]) / (r1 - 1.0)).collect();
    let r2 = r1 * r1;
    (r2 * first[1] - first[0]) / (r2 - 1.0)
}

fn observed_order(estimates: &[f64], ratio: f64) -> f64 {
    ((estimates[0] - estimates[1]).abs() / (estimates[1] - estimates[2]).abs()).ln() / ratio.ln()
}

/// Every estimate used here is even in the gap, so its error expands in h², h⁴, ….
fn assemble(name: &str, gaps: Vec<f64>, estimates: Vec<f64>, ratio: f64, target: f64, tol: f64) -> LimitCheck {
    let extrapolant = richardson(&estimates, ratio, 2);
    let order = observed_order(&estimates, ratio);
    let pass = (extrapolant - target).abs() <= tol && order >= 1.0;
    LimitCheck { name: name.into(), gaps, estimates, extrapolant, target, tol, observed_order: order, pass, error: None }
}

fn ctx_for(sys: Option<&HeckeSystem>, p: IdentityParams) -> Ctx<'_> {
    Ctx { sys, p, budget: Budget::default(), table_size: DEFAULT_TABLE_SIZE }
}

/// √α = m + h/2, √β = m − h/2, so only the I factor of the kernel depends on h.
fn closing_pair(mid: f64, h: f64) -> (f64, f64) {
    ((mid + h / 2.0).powi(2), (mid - h / 2.0).powi(2))
}

/// T2 LHS / (√α−√β)^{ν+1} as α and β close in on m², against
/// (π/2)^{ν+1}/Γ(ν+2) Σ a(n) λ^{(ν+1)/2} K_{ν+1}(2πm√λ).
fn kernel_limit(name: &str, family: Family, sp: SystemParams, nu: f64, mid: f64) -> Result<LimitCheck> {
    const TOL: f64 = 1e-6;
    let sys = hecke::catalog(family, sp, DEFAULT_TABLE_SIZE)?;
    let gaps: Vec<f64> = (0..3).map(|i| 0.1 / f64::powi(2.0, i)).collect();
    let mut estimates = Vec::new();
    for &h in &gaps {
        let (alpha, beta) = closing_pair(mid, h);
        let p = IdentityParams { nu, alpha, beta, ..Default::default() };
        let scale = h.powf(nu + 1.0);
        let lhs = second::t2_lhs(&ctx_for(Some(&sys), p), 1e-12 * scale)?;
        estimates.push(lhs.value.re / scale);
    }
    let series = power_k_series(&sys, nu, 2.0 * PI * mid, 1e-12)?;
    let target = (PI / 2.0).powf(nu + 1.0) / gamma(nu + 2.0)?.value * series.value;
    Ok(assemble(name, gaps, estimates, 2.0, target, TOL))
}

/// Γ(ν+3/2)/(√π Γ(ν+2)) · S^{ν+1}/2^{2ν+3} · ζ(2ν+3) − 1/(4(ν+1)S^{ν+1}), S = √α+√β.
fn zeta_bracket(nu: f64, root_sum: f64) -> Result<f64> {
    let eps = nu + 1.0;
    let ratio = (ln_gamma(nu + 1.5)? - ln_gamma(nu + 2.0)? - 0.5 * PI.ln()).exp();
    let power = root_sum.powf(eps);
    Ok(ratio * power / 2f64.powf(2.0 * nu + 3.0) * zeta(2.0 * nu + 3.0)?.value - 1.0 / (4.0 * eps * power))
}

/// The bracket at ν = −1 ± ε, averaged over the two signs.
fn order_limit(name: &str, alpha: f64, beta: f64) -> Result<LimitCheck> {
    const TOL: f64 = 1e-6;
    let root_sum = alpha.sqrt() + beta.sqrt();
    let gaps = vec![1e-2, 1e-3, 1e-4];
    let estimates = gaps
        .iter()
        .map(|&e| Ok((zeta_bracket(-1.0 + e, root_sum)? + zeta_bracket(-1.0 - e, root_sum)?) / 2.0))
        .collect::<Result<Vec<_>>>()?;
    let target = EULER_GAMMA / 2.0 + 0.5 * root_sum.ln() - 2f64.ln();
    Ok(assemble(name, gaps, estimates, 10.0, target, TOL))
}

/// ELLIPTIC RHS as α and β close in on m², against half the K₀-series RHS at β' = 2πm.
fn elliptic_limit(name: &str, mid: f64) -> Result<LimitCheck> {
    const TOL: f64 = 1e-8;
    let gaps: Vec<f64> = (0..3).map(|i| 0.1 / f64::powi(2.0, i)).collect();
    let mut estimates = Vec::new();
    for &h in &gaps {
        let (alpha, beta) = closing_pair(mid, h);
        let p = IdentityParams { alpha, beta, ..Default::default() };
        estimates.push(classical::elliptic_rhs(&ctx_for(None, p), 1e-11)?.value.re);
    }
    let p = IdentityParams { beta: 2.0 * PI * mid, ..Default::default() };
    let target = classical::watson_k0_rhs(&ctx_for(None, p), 1e-12)?.value.re / 2.0;
    Ok(assemble(name, gaps, estimates, 2.0, target, TOL))
}

/// Runs every limit check.
pub fn limit_checks() -> Vec<LimitCheck> {
    let jobs: Vec<(&str, f64, Box<dyn Fn(&str) -> Result<LimitCheck>>)> = vec![
        ("TAU kernel limit (alpha -> beta)", 1e-6, Box::new(|n| kernel_limit(n, Family::Tau, SystemParams::default(), 0.0, 1.0))),
        ("RK k=2 kernel limit (alpha -> beta)", 1e-6, Box::new(|n| kernel_limit(n, Family::Rk, SystemParams::with_k(2), 0.0, 1.0))),
        ("zeta bracket, nu -> -1", 1e-6, Box::new(|n| order_limit(n, 3.0, 1.0))),
        ("ELLIPTIC -> WATSON-K0 (alpha -> beta)", 1e-8, Box::new(|n| elliptic_limit(n, 1.0))),
    ];
    jobs.into_iter().map(|(name, tol, f)| f(name).unwrap_or_else(|e| LimitCheck::failed(name, tol, e))).collect()
}
