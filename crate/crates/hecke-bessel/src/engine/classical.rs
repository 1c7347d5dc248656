//! Classical identities for a(n) = 1: Watson's K-series, the elliptic-integral series,
//! the K₀ series and the logarithmic series.

use super::kernels::{bessel_k_at, ik_at, ik_majorant, k_majorant};
use super::series::{sum_series, Series, SeriesSum, TailModel, Term};
use super::{Ctx, Side};
use crate::error::Result;
use crate::specfun::{elliptic_k, gamma, ValueWithError, EULER_GAMMA};
use std::f64::consts::{PI, SQRT_2};

fn unit_growth(t: f64) -> f64 {
    if t < 1.0 {
        0.0
    } else {
        t
    }
}

fn explicit_sum(
    term: &dyn Fn(usize) -> Result<Term>,
    tail: &dyn Fn(usize) -> f64,
    monotone_from: f64,
    tol: f64,
    ctx: &Ctx,
) -> Result<SeriesSum> {
    sum_series(&Series { first: 1, term, tail: TailModel::Explicit(tail), monotone_from, tol, budget: ctx.budget })
}

/// ½Γ(ν) + 2 Σ_{n≥1} (nz/2)^ν K_ν(nz).
pub(crate) fn watson_eq4_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let (nu, z) = (ctx.p.nu, ctx.p.z);
    let term = |n: usize| -> Result<Term> {
        let x = n as f64 * z;
        let k = bessel_k_at(nu, x)?;
        let w = (x / 2.0).powf(nu);
        Ok(Term::real(w * k.value, w * k.abs_error, 1.0))
    };
    let g = |t: f64| (t * z / 2.0).powf(nu) * k_majorant(nu, t * z);
    let from = ((2.0 * nu + 2.0) / z).max(1.0);
    let s = sum_series(&Series {
        first: 1,
        term: &term,
        tail: TailModel::Abel { growth: &unit_growth, g: &g },
        monotone_from: from,
        tol: tol / 2.0,
        budget: ctx.budget,
    })?;
    let mut side = Side::default();
    side.add_value(gamma(nu)?, 0.5);
    side.add_real_series(s, 2.0);
    Ok(side)
}

/// √π Γ(ν+½) z^{2ν} (z^{−2ν−1} + 2 Σ_{n≥1} (z² + 4n²π²)^{−ν−½}).
pub(crate) fn watson_eq4_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let (nu, z) = (ctx.p.nu, ctx.p.z);
    let pref = PI.sqrt() * gamma(nu + 0.5)?.value * z.powf(2.0 * nu);
    let term = |n: usize| -> Result<Term> {
        let v = (z * z + 4.0 * (n as f64 * PI).powi(2)).powf(-nu - 0.5);
        Ok(Term::real(v, v * 8.0 * f64::EPSILON, 1.0))
    };
    let tail = |n: usize| (2.0 * PI).powf(-2.0 * nu - 1.0) * (n as f64).powf(-2.0 * nu) / (2.0 * nu);
    let s = explicit_sum(&term, &tail, 1.0, tol / (4.0 * pref), ctx)?;
    let mut side = Side::default();
    side.add_real_series(s, 2.0 * pref);
    side.add_value(ValueWithError::with_rel(pref / z.powf(2.0 * nu + 1.0), 1e-15), 1.0);
    Ok(side)
}

/// Σ_{n≥1} I₀(πn(√α−√β)) K₀(πn(√α+√β)).
pub(crate) fn elliptic_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let (a, b) = (ctx.p.alpha.sqrt(), ctx.p.beta.sqrt());
    let (inner, outer) = (PI * (a - b), PI * (a + b));
    let term = |n: usize| -> Result<Term> {
        let t = n as f64;
        let v = ik_at(0.0, inner * t, outer * t)?;
        Ok(Term::real(v.value, v.abs_error, 1.0))
    };
    let g = |t: f64| ik_majorant(0.0, inner * t, outer * t);
    let s = sum_series(&Series {
        first: 1,
        term: &term,
        tail: TailModel::Abel { growth: &unit_growth, g: &g },
        monotone_from: (1.0 / outer).max(1.0),
        tol,
        budget: ctx.budget,
    })?;
    let mut side = Side::default();
    side.add_real_series(s, 1.0);
    Ok(side)
}

/// K(k₀)/(π(√α+√β)) + ½(γ + log(√α+√β) − log 4) + Σ_{n≥1} {2K(k_n)/(π(A+B)) − 1/(2n)},
/// A = √(n²+α), B = √(n²+β), elliptic modulus k_n = (A−B)/(A+B), k₀ = (√α−√β)/(√α+√β).
pub(crate) fn elliptic_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let (alpha, beta) = (ctx.p.alpha, ctx.p.beta);
    let modulus = |sum: f64| (alpha - beta) / (sum * sum);
    let term = |n: usize| -> Result<Term> {
        let t = n as f64;
        let (a, b) = ((t * t + alpha).sqrt(), (t * t + beta).sqrt());
        let k = elliptic_k(modulus(a + b))?;
        // 1/(A+B) − 1/(2n) = −(α/(n+A) + β/(n+B))/(2n(A+B))
        let excess = (2.0 * k.value / PI - 1.0) / (a + b);
        let gap = -(alpha / (t + a) + beta / (t + b)) / (2.0 * t * (a + b));
        Ok(Term::real(excess + gap, 2.0 * k.abs_error / (PI * (a + b)) + 4.0 * f64::EPSILON * excess.abs(), 1.0))
    };
    // n³·|gap_n| ≤ (α+β)/8, and 2K(k)/π − 1 ≤ k²/(4(1−k²)) with k_n ≤ (α−β)/(4n²)
    let tail = |n: usize| {
        let t = n as f64;
        let k = (alpha - beta) / (4.0 * t * t);
        (alpha + beta) / (16.0 * t * t) + k * k / (4.0 * (1.0 - k * k)) * t / 8.0
    };
    let s = explicit_sum(&term, &tail, 1.0, tol / 2.0, ctx)?;
    let (sa, sb) = (alpha.sqrt(), beta.sqrt());
    let k0 = elliptic_k(modulus(sa + sb))?;
    let mut side = Side::default();
    side.add_real_series(s, 1.0);
    side.add_value(k0, 1.0 / (PI * (sa + sb)));
    side.add_value(ValueWithError::with_rel(0.5 * (EULER_GAMMA + (sa + sb).ln() - 4f64.ln()), 1e-15), 1.0);
    Ok(side)
}

/// 2 Σ_{n≥1} K₀(nβ).
pub(crate) fn watson_k0_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let beta = ctx.p.beta;
    let term = |n: usize| -> Result<Term> {
        let k = bessel_k_at(0.0, n as f64 * beta)?;
        Ok(Term::real(k.value, k.abs_error, 1.0))
    };
    let g = |t: f64| k_majorant(0.0, t * beta);
    let s = sum_series(&Series {
        first: 1,
        term: &term,
        tail: TailModel::Abel { growth: &unit_growth, g: &g },
        monotone_from: (1.0 / beta).max(1.0),
        tol: tol / 2.0,
        budget: ctx.budget,
    })?;
    let mut side = Side::default();
    side.add_real_series(s, 2.0);
    Ok(side)
}

/// π/β + 2π Σ_{n≥1} (1/√(β²+4π²n²) − 1/(2πn)) + γ + log(β/2) − log 2π.
pub(crate) fn watson_k0_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let beta = ctx.p.beta;
    let b2 = beta * beta;
    let term = |n: usize| -> Result<Term> {
        let m = 2.0 * PI * n as f64;
        let root = (b2 + m * m).sqrt();
        let v = -b2 / (root * m * (root + m));
        Ok(Term::real(v, v.abs() * 8.0 * f64::EPSILON, 1.0))
    };
    // |t_n| ≤ β²/(16π³n³) and Σ_{n>N} n⁻³ ≤ 1/(2N²)
    let tail = |n: usize| b2 / (16.0 * PI.powi(3)) / (2.0 * (n as f64).powi(2));
    let s = explicit_sum(&term, &tail, 1.0, tol / (4.0 * PI), ctx)?;
    let mut side = Side::default();
    side.add_real_series(s, 2.0 * PI);
    let constant = PI / beta + EULER_GAMMA + (beta / 2.0).ln() - (2.0 * PI).ln();
    side.add_value(ValueWithError::with_rel(constant, 1e-15), 1.0);
    Ok(side)
}

/// (π/2)(√α−√β) + (1/√2) log((1 − e^{−π√(2α)})/(1 − e^{−π√(2β)})).
pub(crate) fn zeta_log_lhs(ctx: &Ctx, _tol: f64) -> Result<Side> {
    let (alpha, beta) = (ctx.p.alpha, ctx.p.beta);
    let num = (-(-PI * (2.0 * alpha).sqrt()).exp()).ln_1p();
    let den = (-(-PI * (2.0 * beta).sqrt()).exp()).ln_1p();
    let v = PI / 2.0 * (alpha.sqrt() - beta.sqrt()) + (num - den) / SQRT_2;
    let mut side = Side::default();
    side.add_value(ValueWithError::with_rel(v, 1e-15), 1.0);
    Ok(side)
}

/// log(α/β)/(2√2) + (1/√2) Σ_{n≥1} log((2n²+α)/(2n²+β)); the remainder after N terms is
/// taken from the Euler–Maclaurin formula, whose error is in the reported bound.
pub(crate) fn zeta_log_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let (alpha, beta) = (ctx.p.alpha, ctx.p.beta);
    let f = |t: f64| ((alpha - beta) / (2.0 * t * t + beta)).ln_1p();
    let df = |t: f64| 4.0 * t / (2.0 * t * t + alpha) - 4.0 * t / (2.0 * t * t + beta);
    // ∫_N^∞ f(t) dt in closed form
    let integral = |t: f64| {
        (2.0 * alpha).sqrt() * (alpha.sqrt() / (SQRT_2 * t)).atan()
            - (2.0 * beta).sqrt() * (beta.sqrt() / (SQRT_2 * t)).atan()
            - t * f(t)
    };
    // f'' keeps one sign once 6t² > max(α, β), so the remainder is at most |f'(N)|/12
    let remainder_error = |n: usize| df(n as f64).abs() / 12.0;
    let term = |n: usize| -> Result<Term> {
        let v = f(n as f64);
        Ok(Term::real(v, v.abs() * 4.0 * f64::EPSILON, 1.0))
    };
    let from = (alpha.max(beta) / 6.0).sqrt() + 1.0;
    let s = explicit_sum(&term, &remainder_error, from, tol * SQRT_2 / 2.0, ctx)?;
    let n = s.terms as f64;
    let correction = integral(n) - f(n) / 2.0 - df(n) / 12.0;
    let mut side = Side::default();
    side.add_real_series(s, 1.0 / SQRT_2);
    side.add_value(ValueWithError::with_rel(correction, 1e-13), 1.0 / SQRT_2);
    side.add_value(ValueWithError::with_rel((alpha / beta).ln() / (2.0 * SQRT_2), 1e-15), 1.0);
    Ok(side)
}
