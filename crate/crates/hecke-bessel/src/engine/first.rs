//! Identities with K-Bessel kernels, the exponential relation and Riesz sums.

use super::kernels::{
    bessel_k_at, index_at_least, residual_k_integral, residual_power_k_integral, riesz_k_integral,
    riesz_k_majorant, CoefficientControl, KernelSeries, WeightedSeries,
};
use super::series::{sum_series, Budget, Series, TailModel, Term};
use super::{require, Ctx, Side};
use crate::arith::divisor_power_sum;
use crate::error::{Error, Result};
use crate::hecke::{Family, HeckeSystem};
use crate::report::{Comparison, VerificationReport};
use crate::specfun::{bessel_j, gamma, ln_gamma, zeta, BesselArgs, ValueWithError, EULER_GAMMA};
use num::complex::Complex64;
use std::f64::consts::PI;

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn growth_of(sys: &HeckeSystem) -> impl Fn(f64) -> f64 + '_ {
    move |t| sys.growth.bound(t)
}

/// T1 left side: (1/(2πr)) Σ_{n≥1} a(n) (c² + λ_n)^{(1−ν)/2} K_{ν−1}(4πr√(c² + λ_n)).
pub(crate) fn t1_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let pref = 1.0 / (2.0 * PI * p.r);
    let coeff = |n: usize| sys.a_at(n);
    let growth = growth_of(sys);
    let s = KernelSeries {
        coeff: &coeff,
        growth: &growth,
        spectrum: sys.spectrum,
        shift: p.c * p.c,
        power: (1.0 - p.nu) / 2.0,
        order: p.nu - 1.0,
        scale: 4.0 * PI * p.r,
        first: 1,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_real_series(s, pref);
    Ok(side)
}

/// T1 right side: the dual K_{δ+1−ν} series plus ∫₀^∞ Q₀(x)(c² + x)^{−ν/2} K_ν(4πr√(c² + x)) dx.
pub(crate) fn t1_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let d = sys.delta;
    let pref = 1.0 / (2.0 * PI * p.r.powf(p.nu) * p.c.powf(p.nu - d - 1.0));
    let coeff = |n: usize| sys.b_at(n);
    let growth = growth_of(sys);
    let s = KernelSeries {
        coeff: &coeff,
        growth: &growth,
        spectrum: sys.spectrum,
        shift: p.r * p.r,
        power: -(d - p.nu + 1.0) / 2.0,
        order: d + 1.0 - p.nu,
        scale: 4.0 * PI * p.c,
        first: 1,
    }
    .sum(tol / (2.0 * pref), ctx.budget)?;
    let mut side = Side::default();
    side.add_real_series(s, pref);
    side.add_integral(residual_k_integral(&sys.residual, p.nu, p.c, p.r, tol / 4.0)?, 1.0);
    Ok(side)
}

/// Σ_{n≥0} a(n)(c² + λ_n)^{−ν/2} K_ν(4πr√(c² + λ_n)), index 0 carrying the family's a(0).
pub(crate) fn kseries_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let coeff = |n: usize| sys.a_at(n);
    let growth = growth_of(sys);
    let s = KernelSeries {
        coeff: &coeff,
        growth: &growth,
        spectrum: sys.spectrum,
        shift: p.c * p.c,
        power: -p.nu / 2.0,
        order: p.nu,
        scale: 4.0 * PI * p.r,
        first: 0,
    }
    .sum(tol, ctx.budget)?;
    let mut side = Side::default();
    side.add_real_series(s, 1.0);
    Ok(side)
}

/// r^{−ν} c^{δ−ν} Σ_{n≥0} b(n)(r² + μ_n)^{−(δ−ν)/2} K_{δ−ν}(4πc√(r² + μ_n)), with the
/// −K_{ν−1}(4πrc)/(4πr c^{ν−1}) correction for σ₁.
pub(crate) fn kseries_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let d = sys.delta;
    let pref = 1.0 / (p.r.powf(p.nu) * p.c.powf(p.nu - d));
    let coeff = |n: usize| sys.b_at(n);
    let growth = growth_of(sys);
    let s = KernelSeries {
        coeff: &coeff,
        growth: &growth,
        spectrum: sys.spectrum,
        shift: p.r * p.r,
        power: -(d - p.nu) / 2.0,
        order: d - p.nu,
        scale: 4.0 * PI * p.c,
        first: 0,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_real_series(s, pref);
    if sys.family == Family::Sigma && sys.params.k == 1 {
        let k = bessel_k_at(p.nu - 1.0, 4.0 * PI * p.r * p.c)?;
        side.add_value(k, -1.0 / (4.0 * PI * p.r * p.c.powf(p.nu - 1.0)));
    }
    Ok(side)
}

/// Σ_{n≥1} σ_{−s}(n) n^{s/2} K_{s/2}(2n·scale).
fn guinand_series(ctx: &Ctx, scale: f64, tol: f64) -> Result<super::series::SeriesSum> {
    let s = ctx.p.s;
    let size = ctx.table_size;
    let sigma = divisor_power_sum(-s, size);
    let coeff = |n: usize| {
        sigma.get(n).map(|&v| real(v)).ok_or(Error::TableTooShort { needed: n, available: size })
    };
    let growth = |t: f64| if t < 1.0 { 0.0 } else { t * (t.ln() + 1.0) };
    KernelSeries {
        coeff: &coeff,
        growth: &growth,
        spectrum: crate::hecke::Spectrum { scale: 1.0, power: 2 },
        shift: 0.0,
        power: s / 4.0,
        order: s / 2.0,
        scale: 2.0 * scale,
        first: 1,
    }
    .sum(tol, ctx.budget)
}

pub(crate) fn guinand_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let (a, b) = (ctx.p.alpha, ctx.p.beta);
    let mut side = Side::default();
    side.add_real_series(guinand_series(ctx, a, tol / (2.0 * a.sqrt()))?, a.sqrt());
    side.add_real_series(guinand_series(ctx, b, tol / (2.0 * b.sqrt()))?, -b.sqrt());
    Ok(side)
}

/// Closed form; at s = 0 the two brackets are replaced by their limit.
pub(crate) fn guinand_rhs(ctx: &Ctx, _tol: f64) -> Result<Side> {
    let (a, b, s) = (ctx.p.alpha, ctx.p.beta, ctx.p.s);
    let mut side = Side::default();
    if s == 0.0 {
        let v = 0.25 * (b.sqrt() * b.ln() - a.sqrt() * a.ln())
            + (EULER_GAMMA / 2.0 - (2.0 * PI).ln()) * (b.sqrt() - a.sqrt()) / 2.0;
        side.add_value(ValueWithError::with_rel(v, 1e-15), 1.0);
        return Ok(side);
    }
    let first = gamma(s / 2.0)?.scale(0.25) * zeta(s)?;
    side.add_value(first, b.powf((1.0 - s) / 2.0) - a.powf((1.0 - s) / 2.0));
    let second = gamma((1.0 + s) / 2.0)?.scale(0.25 * PI.powf(-s - 0.5)) * zeta(1.0 + s)?;
    side.add_value(second, b.powf((1.0 + s) / 2.0) - a.powf((1.0 + s) / 2.0));
    Ok(side)
}

/// (2/s) Σ_{n≥1} a(n) λ_n^{(ν+1)/2} K_{ν+1}(s√λ_n).
pub(crate) fn cor_lhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let pref = 2.0 / p.s;
    let coeff = |n: usize| sys.a_at(n);
    let growth = growth_of(sys);
    let s = KernelSeries {
        coeff: &coeff,
        growth: &growth,
        spectrum: sys.spectrum,
        shift: 0.0,
        power: (p.nu + 1.0) / 2.0,
        order: p.nu + 1.0,
        scale: p.s,
        first: 1,
    }
    .sum(tol / pref, ctx.budget)?;
    let mut side = Side::default();
    side.add_real_series(s, pref);
    Ok(side)
}

/// 2^{3δ+ν+1} π^δ s^ν Γ(ν+δ+1) Σ_{n≥1} b(n)(16π²μ_n + s²)^{−(δ+ν+1)} + ∫₀^∞ Q₀(x) x^{ν/2} K_ν(s√x) dx.
pub(crate) fn cor_rhs(ctx: &Ctx, tol: f64) -> Result<Side> {
    let sys = ctx.system()?;
    let p = &ctx.p;
    let d = sys.delta;
    let expo = d + p.nu + 1.0;
    let pref = ((3.0 * d + p.nu + 1.0) * 2f64.ln() + d * PI.ln() + p.nu * p.s.ln() + ln_gamma(p.nu + d + 1.0)?).exp();
    let coeff = |n: usize| sys.b_at(n);
    let weight = |n: usize| {
        let base = 16.0 * PI * PI * sys.spectrum.at(n as f64) + p.s * p.s;
        Ok(ValueWithError::with_rel(base.powf(-expo), 4.0 * f64::EPSILON * (1.0 + expo)))
    };
    let majorant = |t: f64| (16.0 * PI * PI * sys.spectrum.at(t) + p.s * p.s).powf(-expo);
    let growth = growth_of(sys);
    let s = WeightedSeries {
        coeff: &coeff,
        weight: &weight,
        majorant: &majorant,
        control: CoefficientControl::Growth(&growth),
        first: 1,
        monotone_from: 1.0,
    }
    .sum(tol / (2.0 * pref), ctx.budget)?;
    let mut side = Side::default();
    side.add_real_series(s, pref);
    side.add_integral(residual_power_k_integral(&sys.residual, p.nu, p.s, tol / 4.0)?, 1.0);
    Ok(side)
}

fn finish_report(id: &str, params: Vec<(String, f64)>, l: Side, r: Side, tol: f64) -> VerificationReport {
    VerificationReport::from_sides(id, params, l.finish(), r.finish(), tol, Comparison::Absolute)
}

/// Σ_{n≥1} a(n) e^{−λ_n x} = (2π/x)^δ Σ_{n≥1} b(n) e^{−4π²μ_n/x} + P(x).
pub fn eval_modular_relation(sys: &HeckeSystem, x: f64, tol: f64) -> Result<VerificationReport> {
    super::with_longer_tables(sys, |sys| modular_relation_on(sys, x, tol))
}

fn modular_relation_on(sys: &HeckeSystem, x: f64, tol: f64) -> Result<VerificationReport> {
    require(x > 0.0, "x > 0")?;
    let growth = growth_of(sys);
    let exp_series = |coeffs: &dyn Fn(usize) -> Result<Complex64>, rate: f64, tol: f64| {
        let term = |n: usize| -> Result<Term> {
            let c = coeffs(n)?;
            let e = (-rate * sys.spectrum.at(n as f64)).exp();
            Ok(Term { value: c * e, err: 0.0, abs_coeff: c.norm() })
        };
        let g = |t: f64| (-rate * sys.spectrum.at(t)).exp();
        sum_series(&Series {
            first: 1,
            term: &term,
            tail: TailModel::Abel { growth: &growth, g: &g },
            monotone_from: 1.0,
            tol,
            budget: Budget::default(),
        })
    };
    let a = |n: usize| sys.a_at(n);
    let b = |n: usize| sys.b_at(n);
    let mut lhs = Side::default();
    lhs.add_series(exp_series(&a, x, tol)?, real(1.0));
    let pref = (2.0 * PI / x).powf(sys.delta);
    let mut rhs = Side::default();
    rhs.add_series(exp_series(&b, 4.0 * PI * PI / x, tol / pref)?, real(pref));
    let p = sys.modular_residual(x)?;
    rhs.add_value(ValueWithError::with_rel(p, 8.0 * f64::EPSILON), 1.0);
    let mut params = vec![("x".to_string(), x)];
    params.extend(super::system_params(sys));
    Ok(finish_report(&format!("MODULAR:{}", sys.id()), params, lhs, rhs, tol))
}

/// (1/Γ(ρ+1)) Σ'_{λ_n ≤ x} a(n)(x − λ_n)^ρ, with a(n)/2 at λ_n = x when ρ = 0.
pub fn riesz_lhs(sys: &HeckeSystem, x: f64, rho: f64) -> Result<Complex64> {
    let last = sys.spectrum.inverse(x).floor() as usize + 1;
    let mut acc = crate::specfun::ComplexNeumaier::new();
    for n in 1..=last {
        let lam = sys.spectrum.at(n as f64);
        if lam > x * (1.0 + 1e-12) {
            break;
        }
        let a = sys.a_at(n)?;
        if rho == 0.0 {
            acc.add(if (lam - x).abs() <= 1e-12 * x { a * 0.5 } else { a });
        } else if lam < x {
            acc.add(a * (x - lam).powf(rho));
        }
    }
    Ok(if rho == 0.0 { acc.value() } else { acc.value() / gamma(rho + 1.0)?.value })
}

/// Riesz sum against (2π)^{−ρ} Σ b(n)(x/μ_n)^{(δ+ρ)/2} J_{δ+ρ}(4π√(μ_n x)) + Q_ρ(x).
pub fn eval_riesz_identity(sys: &HeckeSystem, x: f64, rho: f64, tol: f64, budget: Budget) -> Result<VerificationReport> {
    super::with_longer_tables(sys, |sys| riesz_identity_on(sys, x, rho, tol, budget))
}

fn riesz_identity_on(sys: &HeckeSystem, x: f64, rho: f64, tol: f64, budget: Budget) -> Result<VerificationReport> {
    require(x > 0.0, "x > 0")?;
    require(rho > 2.0 * sys.sigma_a_star - sys.delta - 0.5, "ρ > 2σ_a* − δ − 1/2")?;
    let q = sys.residual_rho(rho)?;
    let order = sys.delta + rho;
    let growth = growth_of(sys);
    let term = |n: usize| -> Result<Term> {
        let b = sys.b_at(n)?;
        if b == real(0.0) {
            return Ok(Term::zero());
        }
        let mu = sys.spectrum.at(n as f64);
        let j = bessel_j(BesselArgs::new(order, 4.0 * PI * (mu * x).sqrt())?)?;
        let w = (x / mu).powf(order / 2.0);
        Ok(Term { value: b * (w * j.value), err: b.norm() * w * j.abs_error, abs_coeff: b.norm() })
    };
    // |J_μ(z)| ≤ √(2/π)(z² − μ²)^{−1/4} for μ > 1/2 and z > μ
    let g = |t: f64| {
        let mu = sys.spectrum.at(t);
        let z2 = 16.0 * PI * PI * mu * x;
        (x / mu).powf(order / 2.0) * (2.0 / PI).sqrt() * (z2 - order * order).powf(-0.25)
    };
    let start = index_at_least(&sys.spectrum, (2.0 * order).powi(2) / (16.0 * PI * PI * x)).max(1.0);
    if order <= 0.5 {
        return Err(Error::Unsupported("J envelope needs δ + ρ > 1/2".into()));
    }
    let pref = (2.0 * PI).powf(-rho);
    let s = sum_series(&Series {
        first: 1,
        term: &term,
        tail: TailModel::Abel { growth: &growth, g: &g },
        monotone_from: start,
        tol: tol / pref,
        budget,
    })?;
    let mut rhs = Side::default();
    rhs.add_series(s, real(pref));
    rhs.add_value(ValueWithError::with_rel(q.eval(x), 8.0 * f64::EPSILON), 1.0);
    let mut lhs = Side::default();
    let l = riesz_lhs(sys, x, rho)?;
    lhs.add_complex(l, l.norm() * 8.0 * f64::EPSILON);
    let mut params = vec![("x".to_string(), x), ("rho".to_string(), rho)];
    params.extend(super::system_params(sys));
    Ok(finish_report(&format!("RIESZ:{}", sys.id()), params, lhs, rhs, tol))
}

/// LHS of the general first theorem: (1/Γ(ρ+1)) Σ a(n) ∫_{λ_n}^∞ (x − λ_n)^ρ (c²+x)^{−ν/2} K_ν(4πr√(c²+x)) dx.
pub(crate) fn first_general_lhs(sys: &HeckeSystem, nu: f64, c: f64, r: f64, rho: f64, tol: f64, budget: Budget) -> Result<Side> {
    let g = gamma(rho + 1.0)?.value;
    let coeff = |n: usize| sys.a_at(n);
    let weight = |n: usize| {
        let a = sys.a_at(n)?.norm().max(1.0);
        let inner = tol * g / (16.0 * a * ((n + 1) as f64).powi(2));
        riesz_k_integral(sys.spectrum.at(n as f64), rho, nu, c, r, inner)
    };
    let majorant = |t: f64| riesz_k_majorant(sys.spectrum.at(t), rho, nu, c, r);
    let growth = growth_of(sys);
    let kappa = 4.0 * PI * r;
    let from = index_at_least(&sys.spectrum, ((nu.abs() + 2.0 * rho.abs() + 4.0) / kappa).powi(2) * 2.0).max(1.0);
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
    side.add_real_series(s, 1.0 / g);
    Ok(side)
}

/// RHS of the general first theorem: the K_{δ+ρ+1−ν} series plus the Q_ρ integral.
pub(crate) fn first_general_rhs(sys: &HeckeSystem, nu: f64, c: f64, r: f64, rho: f64, tol: f64, budget: Budget) -> Result<Side> {
    let d = sys.delta;
    let q = sys.residual_rho(rho)?;
    let pref = 1.0 / ((2.0 * PI).powf(rho + 1.0) * r.powf(nu) * c.powf(nu - d - rho - 1.0));
    let coeff = |n: usize| sys.b_at(n);
    let growth = growth_of(sys);
    let s = KernelSeries {
        coeff: &coeff,
        growth: &growth,
        spectrum: sys.spectrum,
        shift: r * r,
        power: -(d + rho - nu + 1.0) / 2.0,
        order: d + rho + 1.0 - nu,
        scale: 4.0 * PI * c,
        first: 1,
    }
    .sum(tol / (2.0 * pref), budget)?;
    let mut side = Side::default();
    side.add_real_series(s, pref);
    side.add_integral(residual_k_integral(&q, nu, c, r, tol / 4.0)?, 1.0);
    Ok(side)
}

/// The general first theorem with Riesz order ρ.
pub fn eval_first_theorem_general(
    sys: &HeckeSystem,
    nu: f64,
    c: f64,
    r: f64,
    rho: f64,
    tol: f64,
) -> Result<VerificationReport> {
    super::with_longer_tables(sys, |sys| first_theorem_general_on(sys, nu, c, r, rho, tol))
}

fn first_theorem_general_on(sys: &HeckeSystem, nu: f64, c: f64, r: f64, rho: f64, tol: f64) -> Result<VerificationReport> {
    require(nu > -1.0, "ν > −1")?;
    require(c > 0.0 && r > 0.0, "c > 0 and r > 0")?;
    require(rho > -1.0, "ρ > −1")?;
    let budget = Budget::default();
    let lhs = first_general_lhs(sys, nu, c, r, rho, tol, budget)?;
    let rhs = first_general_rhs(sys, nu, c, r, rho, tol, budget)?;
    let mut params = vec![("nu".to_string(), nu), ("c".into(), c), ("r".into(), r), ("rho".into(), rho)];
    params.extend(super::system_params(sys));
    Ok(finish_report(&format!("FIRST-GENERAL:{}", sys.id()), params, lhs, rhs, tol))
}

/// Helper for the limit checks: Σ_{n≥1} a(n) λ_n^{(ν+1)/2} K_{ν+1}(s√λ_n).
pub(crate) fn power_k_series(sys: &HeckeSystem, nu: f64, s: f64, tol: f64) -> Result<ValueWithError> {
    let coeff = |n: usize| sys.a_at(n);
    let growth = growth_of(sys);
    let sum = KernelSeries {
        coeff: &coeff,
        growth: &growth,
        spectrum: sys.spectrum,
        shift: 0.0,
        power: (nu + 1.0) / 2.0,
        order: nu + 1.0,
        scale: s,
        first: 1,
    }
    .sum(tol, Budget::default())?;
    Ok(ValueWithError::new(sum.value.re, sum.err))
}
