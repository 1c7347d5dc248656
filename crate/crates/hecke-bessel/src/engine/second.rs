//! Identities with I·K product kernels and their hypergeometric duals.

use super::kernels::{
    index_at_least, residual_derivative_ik_integral, riesz_ik_derivative_integral, riesz_ik_derivative_majorant,
    CoefficientControl, ProductSeries, WeightedSeries,
};
use super::series::{sum_series, Budget, Series, SeriesSum, TailModel, Term};
use super::{require, Ctx, Side};
use crate::error::{Error, Result};
use crate::hecke::{CoefficientGrowth, HeckeSystem, Spectrum};
use crate::report::{Comparison, VerificationReport};
use crate::specfun::{gamma, hyp2f1, hyp2f1_abs_majorant, ln_gamma, ValueWithError};
use num::complex::Complex64;
use std::f64::consts::PI;

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Σ_{n≥first} c(n)·s_n^{power}·(P+Q)^e (PQ)^{−e−1}·₂F₁(a, b; c; s_n²),
/// with P = √(u_n + α), Q = √(u_n + β) and s_n = (α − β)/(P + Q)².
struct HypSeries<'a> {
    coeff: &'a dyn Fn(usize) -> Result<Complex64>,
    control: CoefficientControl<'a>,
    u: &'a dyn Fn(f64) -> f64,
    alpha: f64,
    beta: f64,
    power: f64,
    e: f64,
    hyp: (f64, f64, f64),
    first: usize,
    monotone_from: f64,
}

impl HypSeries<'_> {
    fn algebraic(&self, t: f64) -> (f64, f64) {
        let u = (self.u)(t);
        let p = (u + self.alpha).sqrt();
        let q = (u + self.beta).sqrt();
        let s = (self.alpha - self.beta) / ((p + q) * (p + q));
        (s.powf(self.power) * (p + q).powf(self.e) * (p * q).powf(-self.e - 1.0), s * s)
    }

    fn sum(&self, tol: f64, budget: Budget) -> Result<SeriesSum> {
        if self.e < -1.0 {
            return Err(Error::Unsupported(format!(
                "hypergeometric-side majorant needs exponent 2δ + 2ρ − 2 ≥ −1, got {}",
                self.e
            )));
        }
        let (a, b, c) = self.hyp;
        let weight = |n: usize| -> Result<ValueWithError> {
            let (alg, w) = self.algebraic(n as f64);
            let f = hyp2f1(a, b, c, w)?;
            Ok(ValueWithError::new(alg * f.value, alg * f.abs_error + (alg * f.value).abs() * 1e-15))
        };
        // every factor is non-increasing in u when e ≥ −1, and the ₂F₁ majorant increases with w
        let majorant = |t: f64| {
            let (alg, w) = self.algebraic(t);
            alg * hyp2f1_abs_majorant(a, b, c, w.min(0.95)).unwrap_or(f64::INFINITY)
        };
        WeightedSeries {
            coeff: self.coeff,
            weight: &weight,
            majorant: &majorant,
            control: self.control,
            first: self.first,
            monotone_from: self.monotone_from,
        }
        .sum(tol, budget)
    }
}

fn control_of<'a>(sys: &HeckeSystem, growth: &'a dyn Fn(f64) -> f64) -> CoefficientControl<'a> {
    match sys.oscillation() {
        Some((h, weight)) => CoefficientControl::Oscillating { h, weight },
        None => CoefficientControl::Growth(growth),
    }
}

fn inner_outer(alpha: f64, beta: f64) -> (f64, f64) {
    (PI * (alpha.sqrt() - beta.sqrt()), PI * (alpha.sqrt() + beta.sqrt()))
}

fn ratio_power(alpha: f64, beta: f64, nu: f64) -> f64 {
    ((alpha - beta) / (alpha.sqrt() + beta.sqrt()).powi(2)).powf(nu + 1.0)
}

fn product_series(
    coeff: &dyn Fn(usize) -> Result<Complex64>,
    growth: &dyn Fn(f64) -> f64,
    spectrum: Spectrum,
    order: f64,
    alpha: f64,
    beta: f64,
    tol: f64,
    budget: Budget,
) -> Result<SeriesSum> {
    let (inner, outer) = inner_outer(alpha, beta);
    ProductSeries { coeff, growth, spectrum, order, inner, outer }.sum(tol, budget)
}

/// Σ_{n≥1} a(n) I_{ν+1}(π√λ_n(√α−√β)) K_{ν+1}(π√λ_n(√α+√β)).
pub(crate) fn t2_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let coeff = |n: usize| sys.a_at(n);
    let growth = |t: f64| sys.growth.bound(t);
    let s = product_series(&coeff, &growth, sys.spectrum, p.nu + 1.0, p.alpha, p.beta, tol, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(1.0));
    Ok(side)
}

/// Hypergeometric dual of order ρ, without its sign: (2/(2π)^{δ+2ρ}) Γ(ν+δ+ρ+1)/Γ(ν+2) Σ_{n≥1} b(n)/(PQ) ... .
fn dual_hyp_series(sys: &HeckeSystem, nu: f64, alpha: f64, beta: f64, rho: f64, tol: f64, budget: Budget) -> Result<(SeriesSum, f64)> {
    let d = sys.delta;
    let pref = 2.0 * (ln_gamma(nu + d + rho + 1.0)? - ln_gamma(nu + 2.0)? - (d + 2.0 * rho) * (2.0 * PI).ln()).exp();
    let coeff = |n: usize| sys.b_at(n);
    let growth = |t: f64| sys.growth.bound(t);
    let u = |t: f64| 4.0 * sys.spectrum.at(t);
    let s = HypSeries {
        coeff: &coeff,
        control: control_of(sys, &growth),
        u: &u,
        alpha,
        beta,
        power: nu + 1.0,
        e: 2.0 * d + 2.0 * rho - 2.0,
        hyp: (nu - d - rho + 2.0, 1.0 - d - rho, nu + 2.0),
        first: 1,
        monotone_from: index_at_least(&sys.spectrum, (2.0 * alpha + 2.0) / 4.0).max(1.0),
    }
    .sum(tol / pref, budget)?;
    Ok((s, pref))
}

/// Hypergeometric series + Q₀(0)/(2(ν+1))·ρ₀^{ν+1} + ∫₀^∞ Q₀'(t) I_{ν+1}K_{ν+1} dt.
pub(crate) fn t2_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let (s, pref) = dual_hyp_series(sys, p.nu, p.alpha, p.beta, 0.0, tol / 2.0, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(pref));
    let q0 = sys.residual.at_zero();
    side.add_value(ValueWithError::with_rel(q0 / (2.0 * (p.nu + 1.0)) * ratio_power(p.alpha, p.beta, p.nu), 1e-14), 1.0);
    let (inner, outer) = inner_outer(p.alpha, p.beta);
    side.add_integral(residual_derivative_ik_integral(&sys.residual, p.nu, inner, outer, tol / 4.0)?, 1.0);
    Ok(side)
}

/// LHS of the general second theorem: (1/Γ(ρ+1)) Σ a(n) ∫_{λ_n}^∞ (t − λ_n)^ρ d/dt[I_{ν+1}K_{ν+1}] dt.
pub(crate) fn second_general_lhs(sys: &HeckeSystem, nu: f64, alpha: f64, beta: f64, rho: f64, tol: f64, budget: Budget) -> Result<Side> {
    let g = gamma(rho + 1.0)?.value;
    let (inner, outer) = inner_outer(alpha, beta);
    let coeff = |n: usize| sys.a_at(n);
    let weight = |n: usize| {
        let a = sys.a_at(n)?.norm().max(1.0);
        let itol = tol * g / (16.0 * a * ((n + 1) as f64).powi(2));
        riesz_ik_derivative_integral(sys.spectrum.at(n as f64), rho, nu, inner, outer, itol)
    };
    let majorant = |t: f64| riesz_ik_derivative_majorant(sys.spectrum.at(t), rho, nu, inner, outer);
    let growth = |t: f64| sys.growth.bound(t);
    let from = index_at_least(&sys.spectrum, ((nu + 2.0 * rho.abs() + 4.0) / (outer - inner)).powi(2) * 2.0).max(1.0);
    let s = WeightedSeries {
        coeff: &coeff,
        weight: &weight,
        majorant: &majorant,
        control: CoefficientControl::Growth(&growth),
        first: 1,
        monotone_from: from,
    }
    .sum(tol * g / 2.0, budget)?;
    let mut side = Side::default();
    side.add_series(s, real(1.0 / g));
    Ok(side)
}

/// RHS of the general second theorem: −(dual series) − Q_ρ(0)/(2(ν+1))·ρ₀^{ν+1} − ∫ Q_ρ' I K.
pub(crate) fn second_general_rhs(sys: &HeckeSystem, nu: f64, alpha: f64, beta: f64, rho: f64, tol: f64, budget: Budget) -> Result<Side> {
    let q = sys.residual_rho(rho)?;
    let (s, pref) = dual_hyp_series(sys, nu, alpha, beta, rho, tol / 2.0, budget)?;
    let mut side = Side::default();
    side.add_series(s, real(-pref));
    side.add_value(ValueWithError::with_rel(-q.at_zero() / (2.0 * (nu + 1.0)) * ratio_power(alpha, beta, nu), 1e-14), 1.0);
    let (inner, outer) = inner_outer(alpha, beta);
    side.add_integral(residual_derivative_ik_integral(&q, nu, inner, outer, tol / 4.0)?, -1.0);
    Ok(side)
}

/// The general second theorem with Riesz order ρ.
pub fn eval_second_theorem_general(
    sys: &HeckeSystem,
    nu: f64,
    alpha: f64,
    beta: f64,
    rho: f64,
    tol: f64,
) -> Result<VerificationReport> {
    super::with_longer_tables(sys, |sys| second_theorem_general_on(sys, nu, alpha, beta, rho, tol))
}

fn second_theorem_general_on(
    sys: &HeckeSystem,
    nu: f64,
    alpha: f64,
    beta: f64,
    rho: f64,
    tol: f64,
) -> Result<VerificationReport> {
    require(nu > -1.0 && rho > -1.0, "ν > −1 and ρ > −1")?;
    require(beta > 0.0 && alpha > beta, "√α > √β > 0")?;
    require(sys.delta + rho + nu + 1.0 > sys.sigma_a_star && sys.sigma_a_star > 0.0, "δ + ρ + ν + 1 > σ_a* > 0")?;
    let budget = Budget::default();
    let lhs = second_general_lhs(sys, nu, alpha, beta, rho, tol, budget)?;
    let rhs = second_general_rhs(sys, nu, alpha, beta, rho, tol, budget)?;
    let mut params =
        vec![("nu".to_string(), nu), ("alpha".into(), alpha), ("beta".into(), beta), ("rho".into(), rho)];
    params.extend(super::system_params(sys));
    Ok(VerificationReport::from_sides(
        &format!("SECOND-GENERAL:{}", sys.id()),
        params,
        lhs.finish(),
        rhs.finish(),
        tol,
        Comparison::Absolute,
    ))
}

const INTEGERS: Spectrum = Spectrum { scale: 1.0, power: 1 };
const SQUARES: Spectrum = Spectrum { scale: 1.0, power: 2 };

/// Σ_{n≥1} r_k(n) I_ν(π√n(√α−√β)) K_ν(π√n(√α+√β)).
pub(crate) fn rk2f1_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let coeff = |n: usize| sys.a_at(n);
    let growth = |t: f64| sys.growth.bound(t);
    let s = product_series(&coeff, &growth, INTEGERS, p.nu, p.alpha, p.beta, tol, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(1.0));
    Ok(side)
}

/// −s₀^ν/(2ν) + Γ(k/2+ν)/(π^{k/2} 2^{k−1} Γ(ν+1)) Σ_{n≥0} r_k(n)/(PQ) s_n^ν (1/P+1/Q)^{k−2} ₂F₁(1−k/2+ν, 1−k/2; ν+1; s_n²).
pub(crate) fn rk2f1_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let kf = sys.params.k as f64;
    let half = kf / 2.0;
    let pref = (ln_gamma(half + p.nu)? - ln_gamma(p.nu + 1.0)? - half * PI.ln() - (kf - 1.0) * 2f64.ln()).exp();
    let coeff = |n: usize| sys.a_at(n);
    let growth = |t: f64| sys.growth.bound(t);
    let u = |t: f64| t;
    let s = HypSeries {
        coeff: &coeff,
        control: CoefficientControl::Growth(&growth),
        u: &u,
        alpha: p.alpha,
        beta: p.beta,
        power: p.nu,
        e: kf - 2.0,
        hyp: (1.0 - half + p.nu, 1.0 - half, p.nu + 1.0),
        first: 0,
        monotone_from: 1.0,
    }
    .sum(tol / (2.0 * pref), ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(pref));
    let s0 = ((p.alpha.sqrt() - p.beta.sqrt()) / (p.alpha.sqrt() + p.beta.sqrt())).powf(p.nu);
    side.add_value(ValueWithError::with_rel(-s0 / (2.0 * p.nu), 1e-15), 1.0);
    Ok(side)
}

/// Σ_{n≥1} τ(n) I_{ν+1}(π√n(√α−√β)) K_{ν+1}(π√n(√α+√β)).
pub(crate) fn tau2f1_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let coeff = |n: usize| sys.a_at(n);
    let growth = |t: f64| CoefficientGrowth::Tau.bound(t);
    let s = product_series(&coeff, &growth, INTEGERS, p.nu + 1.0, p.alpha, p.beta, tol, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(1.0));
    Ok(side)
}

/// 2(2π)^{−12} Γ(13+ν)/Γ(ν+2) Σ τ(n)/(AB) s_n^{ν+1} (1/A+1/B)^{22} ₂F₁(ν−10, −11; ν+2; s_n²), A = √(4n+α).
pub(crate) fn tau2f1_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let pref = 2.0 * (ln_gamma(13.0 + p.nu)? - ln_gamma(p.nu + 2.0)? - 12.0 * (2.0 * PI).ln()).exp();
    let coeff = |n: usize| sys.a_at(n);
    let growth = |t: f64| CoefficientGrowth::Tau.bound(t);
    let u = |t: f64| 4.0 * t;
    let s = HypSeries {
        coeff: &coeff,
        control: CoefficientControl::Growth(&growth),
        u: &u,
        alpha: p.alpha,
        beta: p.beta,
        power: p.nu + 1.0,
        e: 22.0,
        hyp: (p.nu - 10.0, -11.0, p.nu + 2.0),
        first: 1,
        monotone_from: 1.0,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(pref));
    Ok(side)
}

/// e^{−x(a+b)} sinh(x(a−b)) = ½ e^{−2xb}(1 − e^{−2x(a−b)}) for a > b.
fn exp_sinh(x: f64, a: f64, b: f64) -> f64 {
    -0.5 * (-2.0 * x * b).exp() * (-2.0 * x * (a - b)).exp_m1()
}

fn exp_sinh_series(
    coeff: &dyn Fn(usize) -> Result<Complex64>,
    growth: &dyn Fn(f64) -> f64,
    x_of: &dyn Fn(f64) -> f64,
    extra: &dyn Fn(f64) -> f64,
    alpha: f64,
    beta: f64,
    tol: f64,
    budget: Budget,
) -> Result<SeriesSum> {
    let (a, b) = (alpha.sqrt(), beta.sqrt());
    let term = |n: usize| -> Result<Term> {
        let c = coeff(n)?;
        let t = n as f64;
        let v = extra(t) * exp_sinh(x_of(t), a, b);
        Ok(Term { value: c * v, err: 0.0, abs_coeff: c.norm() })
    };
    let g = |t: f64| 0.5 * extra(t) * (-2.0 * x_of(t) * b).exp();
    sum_series(&Series { first: 1, term: &term, tail: TailModel::Abel { growth, g: &g }, monotone_from: 1.0, tol, budget })
}

/// Σ τ(n)/√n · e^{−π√n(√α+√β)} sinh(π√n(√α−√β)).
pub(crate) fn tau_sinh_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let coeff = |n: usize| sys.a_at(n);
    let growth = |t: f64| CoefficientGrowth::Tau.bound(t);
    let x = |t: f64| PI * t.sqrt();
    let extra = |t: f64| 1.0 / t.sqrt();
    let s = exp_sinh_series(&coeff, &growth, &x, &extra, p.alpha, p.beta, tol, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(1.0));
    Ok(side)
}

/// (3·5⋯21)/π^{11} Σ τ(n) ((4n+β)^{−23/2} − (4n+α)^{−23/2}).
pub(crate) fn tau_sinh_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let double_factorial: f64 = (3..=21).step_by(2).map(|j| j as f64).product();
    let pref = double_factorial / PI.powi(11);
    let coeff = |n: usize| sys.a_at(n);
    let diff = |t: f64| {
        let base = 4.0 * t + p.beta;
        base.powf(-11.5) * -(-11.5 * ((p.alpha - p.beta) / base).ln_1p()).exp_m1()
    };
    let weight = |n: usize| Ok(ValueWithError::with_rel(diff(n as f64), 64.0 * f64::EPSILON));
    let majorant = |t: f64| {
        let base = 4.0 * t + p.beta;
        base.powf(-11.5) * (11.5 * (p.alpha - p.beta) / base).min(1.0)
    };
    let growth = |t: f64| CoefficientGrowth::Tau.bound(t);
    let s = WeightedSeries {
        coeff: &coeff,
        weight: &weight,
        majorant: &majorant,
        control: CoefficientControl::Growth(&growth),
        first: 1,
        monotone_from: 1.0,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(pref));
    Ok(side)
}

/// Σ τ(n) e^{−s√n}.
pub(crate) fn tau_exp_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let s = ctx.p.s;
    let growth = |t: f64| CoefficientGrowth::Tau.bound(t);
    let term = |n: usize| -> Result<Term> {
        let c = sys.a_at(n)?;
        Ok(Term { value: c * (-s * (n as f64).sqrt()).exp(), err: 0.0, abs_coeff: c.norm() })
    };
    let g = |t: f64| (-s * t.sqrt()).exp();
    let from = (13.0 / s).powi(2).max(1.0);
    let sum = sum_series(&Series {
        first: 1,
        term: &term,
        tail: TailModel::Abel { growth: &growth, g: &g },
        monotone_from: from,
        tol,
        budget: ctx.budget,
    })?;
    let mut side = Side::default();
    side.add_series(sum, real(1.0));
    Ok(side)
}

/// 2^{36} π^{23/2} Γ(25/2) Σ s τ(n)/(s² + 16π²n)^{25/2}.
pub(crate) fn tau_exp_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let s = ctx.p.s;
    let pref = (36.0 * 2f64.ln() + 11.5 * PI.ln() + ln_gamma(12.5)? + s.ln()).exp();
    let coeff = |n: usize| sys.a_at(n);
    let weight = |n: usize| {
        Ok(ValueWithError::with_rel((s * s + 16.0 * PI * PI * n as f64).powf(-12.5), 64.0 * f64::EPSILON))
    };
    let majorant = |t: f64| (s * s + 16.0 * PI * PI * t).powf(-12.5);
    let growth = |t: f64| CoefficientGrowth::Tau.bound(t);
    let sum = WeightedSeries {
        coeff: &coeff,
        weight: &weight,
        majorant: &majorant,
        control: CoefficientControl::Growth(&growth),
        first: 1,
        monotone_from: 1.0,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(sum, real(pref));
    Ok(side)
}

/// Σ_{n≥1} a(n) I_{ν+1}K_{ν+1} for a character system (λ_n = n²/(2q)).
fn character_product_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let coeff = |n: usize| sys.a_at(n);
    let growth = |t: f64| sys.growth.bound(t);
    let s = product_series(&coeff, &growth, sys.spectrum, p.nu + 1.0, p.alpha, p.beta, tol, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(1.0));
    Ok(side)
}

fn character_hyp_rhs(ctx: &Ctx, tol: f64, pref: f64, e: f64, hyp: (f64, f64, f64)) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let q = sys.params.q as f64;
    let (h, weight) = sys.oscillation().ok_or_else(|| Error::Domain("character system expected".into()))?;
    let coeff = |n: usize| sys.b_at(n);
    let u = |t: f64| 2.0 * t * t / q;
    let s = HypSeries {
        coeff: &coeff,
        control: CoefficientControl::Oscillating { h, weight },
        u: &u,
        alpha: p.alpha,
        beta: p.beta,
        power: p.nu + 1.0,
        e,
        hyp,
        first: 1,
        monotone_from: 2.0 * (p.alpha * q).sqrt() + 2.0,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(pref));
    Ok(side)
}

pub(crate) fn chi_odd_2f1_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    character_product_lhs(ctx, tol)
}

/// π^{−3/2} Γ(ν+5/2)/(√2 Γ(ν+2)) Σ b(n)(A+B)/(A²B²)·s_n^{ν+1} ₂F₁(ν+1/2, −1/2; ν+2; s_n²), A = √(2n²/q + α).
pub(crate) fn chi_odd_2f1_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let nu = ctx.p.nu;
    let pref = (ln_gamma(nu + 2.5)? - ln_gamma(nu + 2.0)? - 1.5 * PI.ln() - 0.5 * 2f64.ln()).exp();
    character_hyp_rhs(ctx, tol, pref, 1.0, (nu + 0.5, -0.5, nu + 2.0))
}

pub(crate) fn chi_even_2f1_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    character_product_lhs(ctx, tol)
}

/// √2 Γ(ν+3/2)/(√π Γ(ν+2)) Σ b(n) s_n^{ν+1}/(A+B) ₂F₁(ν+3/2, 1/2; ν+2; s_n²).
pub(crate) fn chi_even_2f1_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let nu = ctx.p.nu;
    let pref = (ln_gamma(nu + 1.5)? - ln_gamma(nu + 2.0)? - 0.5 * PI.ln() + 0.5 * 2f64.ln()).exp();
    character_hyp_rhs(ctx, tol, pref, -1.0, (nu + 1.5, 0.5, nu + 2.0))
}

fn character_value<'a>(ctx: &'a Ctx) -> Result<impl Fn(usize) -> Result<Complex64> + 'a> {
    let sys = ctx.system()?;
    let chi = sys.character.as_ref().ok_or_else(|| Error::Domain("character system expected".into()))?;
    Ok(move |n: usize| Ok(chi.value(n as u64)))
}

/// Σ χ(n)·w(n)·e^{−πn(√α+√β)/√(2q)} sinh(πn(√α−√β)/√(2q)).
fn character_sinh_lhs(ctx: &Ctx, tol: f64, extra: &dyn Fn(f64) -> f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let q = sys.params.q as f64;
    let coeff = character_value(ctx)?;
    let growth = |t: f64| if t < 1.0 { 0.0 } else { t };
    let x = |t: f64| PI * t / (2.0 * q).sqrt();
    let s = exp_sinh_series(&coeff, &growth, &x, extra, p.alpha, p.beta, tol, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(1.0));
    Ok(side)
}

pub(crate) fn chi_odd_sinh_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    character_sinh_lhs(ctx, tol, &|_| 1.0)
}

/// q^{3/2}(α−β)/π Σ b(n)/((2n²+αq)(2n²+βq)).
pub(crate) fn chi_odd_sinh_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let q = sys.params.q as f64;
    let pref = q.powf(1.5) * (p.alpha - p.beta) / PI;
    let (h, w) = sys.oscillation().ok_or_else(|| Error::Domain("character system expected".into()))?;
    let coeff = |n: usize| sys.b_at(n);
    let rational = |t: f64| 1.0 / ((2.0 * t * t + p.alpha * q) * (2.0 * t * t + p.beta * q));
    let weight = |n: usize| Ok(ValueWithError::with_rel(rational(n as f64), 4.0 * f64::EPSILON));
    let s = WeightedSeries {
        coeff: &coeff,
        weight: &weight,
        majorant: &rational,
        control: CoefficientControl::Oscillating { h, weight: w },
        first: 1,
        monotone_from: (p.alpha * q).sqrt() + 1.0,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(pref));
    Ok(side)
}

pub(crate) fn chi_even_log_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    character_sinh_lhs(ctx, tol, &|t| 1.0 / t)
}

/// (1/(2√q)) Σ b(n) log((2n²+αq)/(2n²+βq)).
pub(crate) fn chi_even_log_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let q = sys.params.q as f64;
    let pref = 1.0 / (2.0 * q.sqrt());
    let (h, w) = sys.oscillation().ok_or_else(|| Error::Domain("character system expected".into()))?;
    let coeff = |n: usize| sys.b_at(n);
    let log_ratio = |t: f64| ((p.alpha - p.beta) * q / (2.0 * t * t + p.beta * q)).ln_1p();
    let weight = |n: usize| Ok(ValueWithError::with_rel(log_ratio(n as f64), 4.0 * f64::EPSILON));
    let s = WeightedSeries {
        coeff: &coeff,
        weight: &weight,
        majorant: &log_ratio,
        control: CoefficientControl::Oscillating { h, weight: w },
        first: 1,
        monotone_from: 1.0,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(pref));
    Ok(side)
}

fn unit_coeff(n: usize) -> Result<Complex64> {
    Ok(real(if n == 0 { 0.0 } else { 1.0 }))
}

/// s₀^{ν+1}/(4(ν+1)) + Σ_{n≥1} I_{ν+1}(πn(√α−√β)) K_{ν+1}(πn(√α+√β)).
pub(crate) fn zeta_2f1_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let p = &ctx.p;
    let growth = |t: f64| CoefficientGrowth::Unit.bound(t);
    let s = product_series(&unit_coeff, &growth, SQUARES, p.nu + 1.0, p.alpha, p.beta, tol, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(1.0));
    let s0 = (p.alpha.sqrt() - p.beta.sqrt()) / (p.alpha.sqrt() + p.beta.sqrt());
    side.add_value(ValueWithError::with_rel(s0.powf(p.nu + 1.0) / (4.0 * (p.nu + 1.0)), 1e-15), 1.0);
    Ok(side)
}

/// Γ(ν+3/2)/(√π Γ(ν+2)) [½ t₀ + Σ_{n≥1} t_n], t_n = s_n^{ν+1}/(A+B) ₂F₁(ν+3/2, 1/2; ν+2; s_n²), A = √(n²+α).
pub(crate) fn zeta_2f1_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let p = &ctx.p;
    let pref = (ln_gamma(p.nu + 1.5)? - ln_gamma(p.nu + 2.0)? - 0.5 * PI.ln()).exp();
    let coeff = |n: usize| Ok(real(if n == 0 { 0.5 } else { 1.0 }));
    let growth = |t: f64| CoefficientGrowth::Unit.bound(t);
    let u = |t: f64| t * t;
    let s = HypSeries {
        coeff: &coeff,
        control: CoefficientControl::Growth(&growth),
        u: &u,
        alpha: p.alpha,
        beta: p.beta,
        power: p.nu + 1.0,
        e: -1.0,
        hyp: (p.nu + 1.5, 0.5, p.nu + 2.0),
        first: 0,
        monotone_from: 1.0,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_series(s, real(pref));
    Ok(side)
}
