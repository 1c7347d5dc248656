//! Bessel-kernel series and integrals shared by the identity evaluators.

use super::series::{sum_series, Budget, Series, SeriesSum, TailModel, Term};
use crate::error::{Error, Result};
use crate::hecke::{ResidualTerm, Spectrum};
use crate::quad::{integrate_detailed, Decay, DecayingIntegrand, Envelope};
use crate::specfun::{
    bessel_k, ik_product, ik_product_dt, k_upper_bound, BesselArgs, ValueWithError,
};
use num::complex::Complex64;
use std::f64::consts::PI;
use std::sync::Mutex;

pub fn bessel_k_at(nu: f64, z: f64) -> Result<ValueWithError> {
    bessel_k(BesselArgs::new(nu, z)?)
}

/// Upper bound for K_ν(z).
pub fn k_majorant(nu: f64, z: f64) -> f64 {
    let e = (-z).exp();
    if e == 0.0 {
        0.0
    } else {
        k_upper_bound(nu, z) * e
    }
}

/// I_m(u)·K_m(v) for 0 ≤ u < v, with the I factor taken as its power-series limit at u = 0.
pub fn ik_at(m: f64, u: f64, v: f64) -> Result<ValueWithError> {
    ik_product(m, u, v)
}

/// Upper bound for I_m(u)·K_m(v), 0 ≤ u < v, m ≥ 0, from e^{−u}I_m(u) ≤ 1.
pub fn ik_majorant(m: f64, u: f64, v: f64) -> f64 {
    let e = (u - v).exp();
    if e == 0.0 {
        0.0
    } else {
        k_upper_bound(m, v) * e
    }
}

/// The smallest index n ≥ 0 with spectrum(n) ≥ x.
pub fn index_at_least(spectrum: &Spectrum, x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        spectrum.inverse(x).ceil() + 1.0
    }
}

/// Σ_{n≥first} c(n)·base_n^{power}·K_order(scale·√base_n), base_n = shift + spectrum(n).
pub struct KernelSeries<'a> {
    pub coeff: &'a dyn Fn(usize) -> Result<Complex64>,
    pub growth: &'a dyn Fn(f64) -> f64,
    pub spectrum: Spectrum,
    pub shift: f64,
    pub power: f64,
    pub order: f64,
    pub scale: f64,
    pub first: usize,
}

impl KernelSeries<'_> {
    pub fn sum(&self, tol: f64, budget: Budget) -> Result<SeriesSum> {
        let term = |n: usize| -> Result<Term> {
            let c = (self.coeff)(n)?;
            if c == Complex64::new(0.0, 0.0) {
                return Ok(Term::zero());
            }
            let base = self.shift + self.spectrum.at(n as f64);
            let k = bessel_k_at(self.order, self.scale * base.sqrt())?;
            let w = base.powf(self.power);
            Ok(Term { value: c * (w * k.value), err: c.norm() * w * k.abs_error, abs_coeff: c.norm() })
        };
        let g = |t: f64| {
            let base = self.shift + self.spectrum.at(t);
            base.powf(self.power) * k_majorant(self.order, self.scale * base.sqrt())
        };
        // base^p e^{−s√base} decreases once √base ≥ 2p/s; the K bound needs s√base ≥ |order| + 1
        let need = (2.0 * self.power.max(0.0) / self.scale).powi(2).max(((self.order.abs() + 1.0) / self.scale).powi(2));
        let series = Series {
            first: self.first,
            term: &term,
            tail: TailModel::Abel { growth: self.growth, g: &g },
            monotone_from: index_at_least(&self.spectrum, need - self.shift),
            tol,
            budget,
        };
        sum_series(&series)
    }
}

/// Σ_{n≥1} c(n)·I_m(A√λ_n)·K_m(B√λ_n), 0 < A < B, m ≥ 0.
pub struct ProductSeries<'a> {
    pub coeff: &'a dyn Fn(usize) -> Result<Complex64>,
    pub growth: &'a dyn Fn(f64) -> f64,
    pub spectrum: Spectrum,
    pub order: f64,
    pub inner: f64,
    pub outer: f64,
}

impl ProductSeries<'_> {
    pub fn sum(&self, tol: f64, budget: Budget) -> Result<SeriesSum> {
        let term = |n: usize| -> Result<Term> {
            let c = (self.coeff)(n)?;
            if c == Complex64::new(0.0, 0.0) || n == 0 {
                return Ok(Term::zero());
            }
            let root = self.spectrum.at(n as f64).sqrt();
            let v = ik_at(self.order, self.inner * root, self.outer * root)?;
            Ok(Term { value: c * v.value, err: c.norm() * v.abs_error, abs_coeff: c.norm() })
        };
        let g = |t: f64| {
            let root = self.spectrum.at(t).sqrt();
            ik_majorant(self.order, self.inner * root, self.outer * root)
        };
        let need = ((self.order + 1.0) / self.outer).powi(2);
        let series = Series {
            first: 1,
            term: &term,
            tail: TailModel::Abel { growth: self.growth, g: &g },
            monotone_from: index_at_least(&self.spectrum, need),
            tol,
            budget,
        };
        sum_series(&series)
    }
}

/// Runs a quadrature whose integrand may fail, reporting the first failure.
fn integrate_fallible(
    f: &(dyn Fn(f64) -> Result<f64> + Sync),
    lower: f64,
    envelope: Envelope,
    tol: f64,
) -> Result<ValueWithError> {
    let failure: Mutex<Option<Error>> = Mutex::new(None);
    let wrapped = |t: f64| match f(t) {
        Ok(v) => v,
        Err(e) => {
            let mut slot = failure.lock().expect("integrand failure slot");
            slot.get_or_insert(e);
            f64::NAN
        }
    };
    let out = integrate_detailed(&DecayingIntegrand { f: &wrapped, lower, envelope }, tol);
    if let Some(e) = failure.into_inner().expect("integrand failure slot") {
        return Err(e);
    }
    Ok(out?.value)
}

/// Σ|cᵢ|·t0^{pᵢ−p_max} and p_max, so that |Q(t)| ≤ C·t^{p_max} for t ≥ t0.
fn monomial_envelope(q: &ResidualTerm, t0: f64) -> (f64, f64) {
    let pmax = q.monomials.iter().map(|&(_, p)| p).fold(f64::NEG_INFINITY, f64::max);
    let coef = q.monomials.iter().map(|&(c, p)| c.abs() * t0.powf(p - pmax)).sum();
    (coef, pmax)
}

/// (c² + x)^{−ν/2} ≤ factor·x^{−ν/2} for x ≥ t0.
fn shifted_power_factor(nu: f64, c2: f64, t0: f64) -> f64 {
    if nu >= 0.0 {
        1.0
    } else {
        (1.0 + c2 / t0).powf(-nu / 2.0)
    }
}

/// ∫_lower^∞ w(x)·(c² + x)^{−ν/2}·K_ν(4πr√(c² + x)) dx for a weight bounded by C·x^p beyond t0.
fn k_kernel_integral(
    weight: &(dyn Fn(f64) -> f64 + Sync),
    weight_bound: &dyn Fn(f64) -> (f64, f64),
    lower: f64,
    nu: f64,
    c: f64,
    r: f64,
    tol: f64,
) -> Result<ValueWithError> {
    let kappa = 4.0 * PI * r;
    let c2 = c * c;
    let t0 = lower.max(1.0).max(((nu.abs() + 1.0) / kappa).powi(2)) + lower.max(0.0);
    let (wc, wp) = weight_bound(t0);
    let envelope = Envelope {
        coef: wc * shifted_power_factor(nu, c2, t0) * k_upper_bound(nu, kappa * (c2 + t0).sqrt()),
        power: wp - nu / 2.0,
        kappa,
        decay: Decay::SqrtExp,
        t0,
    };
    let f = |x: f64| -> Result<f64> {
        let w = weight(x);
        if w == 0.0 {
            return Ok(0.0);
        }
        let base = c2 + x;
        Ok(w * base.powf(-nu / 2.0) * bessel_k_at(nu, kappa * base.sqrt())?.value)
    };
    integrate_fallible(&f, lower, envelope, tol)
}

/// ∫₀^∞ Q(x)·(c² + x)^{−ν/2}·K_ν(4πr√(c² + x)) dx.
pub fn residual_k_integral(q: &ResidualTerm, nu: f64, c: f64, r: f64, tol: f64) -> Result<ValueWithError> {
    if q.is_zero() {
        return Ok(ValueWithError::exact(0.0));
    }
    let w = |x: f64| q.eval(x);
    let bound = |t0: f64| monomial_envelope(q, t0);
    k_kernel_integral(&w, &bound, 0.0, nu, c, r, tol)
}

/// ∫_λ^∞ (x − λ)^ρ·(c² + x)^{−ν/2}·K_ν(4πr√(c² + x)) dx.
pub fn riesz_k_integral(lambda: f64, rho: f64, nu: f64, c: f64, r: f64, tol: f64) -> Result<ValueWithError> {
    let w = |x: f64| if x > lambda { (x - lambda).powf(rho) } else { 0.0 };
    // for x ≥ t0 ≥ 2λ: (x−λ)^ρ ≤ max(1, 2^{−ρ})·x^ρ
    let bound = |_: f64| (if rho >= 0.0 { 1.0 } else { 2f64.powf(-rho) }, rho);
    k_kernel_integral(&w, &bound, lambda, nu, c, r, tol)
}

/// ∫₀^∞ Q(x)·x^{ν/2}·K_ν(s√x) dx.
pub fn residual_power_k_integral(q: &ResidualTerm, nu: f64, s: f64, tol: f64) -> Result<ValueWithError> {
    if q.is_zero() {
        return Ok(ValueWithError::exact(0.0));
    }
    let t0 = 1f64.max(((nu.abs() + 1.0) / s).powi(2));
    let (qc, qp) = monomial_envelope(q, t0);
    let envelope = Envelope {
        coef: qc * k_upper_bound(nu, s * t0.sqrt()),
        power: qp + nu / 2.0,
        kappa: s,
        decay: Decay::SqrtExp,
        t0,
    };
    let f = |x: f64| -> Result<f64> {
        if x == 0.0 {
            return Ok(0.0);
        }
        Ok(q.eval(x) * x.powf(nu / 2.0) * bessel_k_at(nu, s * x.sqrt())?.value)
    };
    integrate_fallible(&f, 0.0, envelope, tol)
}

/// ∫₀^∞ Q'(t)·I_m(A√t)·K_m(B√t) dt with m = ν + 1.
pub fn residual_derivative_ik_integral(q: &ResidualTerm, nu: f64, inner: f64, outer: f64, tol: f64) -> Result<ValueWithError> {
    let dq = q.derivative();
    if dq.is_zero() {
        return Ok(ValueWithError::exact(0.0));
    }
    let m = nu + 1.0;
    let t0 = 1f64.max(((m + 1.0) / outer).powi(2));
    let (qc, qp) = monomial_envelope(&dq, t0);
    let envelope = Envelope {
        coef: qc * k_upper_bound(m, outer * t0.sqrt()),
        power: qp,
        kappa: outer - inner,
        decay: Decay::SqrtExp,
        t0,
    };
    let f = |t: f64| -> Result<f64> {
        if t == 0.0 {
            return Ok(0.0);
        }
        let st = t.sqrt();
        Ok(dq.eval(t) * ik_at(m, inner * st, outer * st)?.value)
    };
    integrate_fallible(&f, 0.0, envelope, tol)
}

/// Bound on |d/dt [I_m(A√t)K_m(B√t)]|·e^{(B−A)√t}·2√t for t ≥ t0, m > 0.
fn ik_derivative_scale(m: f64, inner: f64, outer: f64, t0: f64) -> f64 {
    let x0 = inner * t0.sqrt();
    let y0 = outer * t0.sqrt();
    inner * (1.0 + m / x0) * k_upper_bound(m, y0) + outer * k_upper_bound(m + 1.0, y0)
}

/// ∫_λ^∞ (t − λ)^ρ·d/dt[I_{ν+1}(A√t)K_{ν+1}(B√t)] dt.
pub fn riesz_ik_derivative_integral(lambda: f64, rho: f64, nu: f64, inner: f64, outer: f64, tol: f64) -> Result<ValueWithError> {
    let m = nu + 1.0;
    let t0 = lambda.max(1.0).max(((m + 2.0) / inner).powi(2)) + lambda;
    let weight = if rho >= 0.0 { 1.0 } else { 2f64.powf(-rho) };
    let envelope = Envelope {
        coef: 0.5 * weight * ik_derivative_scale(m, inner, outer, t0),
        power: rho - 0.5,
        kappa: outer - inner,
        decay: Decay::SqrtExp,
        t0,
    };
    let f = |t: f64| -> Result<f64> {
        if t <= lambda {
            return Ok(0.0);
        }
        Ok((t - lambda).powf(rho) * ik_product_dt(nu, inner, outer, t)?.value)
    };
    integrate_fallible(&f, lambda, envelope, tol)
}

/// Upper bound for |∫_λ^∞ (t − λ)^ρ d/dt[I K] dt| used as the outer-series majorant.
pub fn riesz_ik_derivative_majorant(lambda: f64, rho: f64, nu: f64, inner: f64, outer: f64) -> f64 {
    let m = nu + 1.0;
    if rho == 0.0 {
        let r = lambda.sqrt();
        return ik_majorant(m, inner * r, outer * r);
    }
    // √(λ + y) ≥ (√λ + √y)/√2 and ∫₀^∞ y^ρ e^{−κ√y/√2} dy = 2Γ(2ρ+2)(√2/κ)^{2ρ+2}
    let kappa = outer - inner;
    let scale = ik_derivative_scale(m, inner, outer, lambda.max(1e-300));
    let decay = (-kappa * lambda.sqrt() / 2f64.sqrt()).exp();
    if decay == 0.0 {
        return 0.0;
    }
    let moment = 2.0 * crate::specfun::gamma(2.0 * rho + 2.0).map(|g| g.value).unwrap_or(f64::INFINITY)
        * (2f64.sqrt() / kappa).powf(2.0 * rho + 2.0);
    let weight = if rho >= 0.0 { 1.0 } else { 2f64.powf(-rho) };
    weight * scale / (2.0 * lambda.sqrt()) * decay * moment
}

/// Upper bound for ∫_λ^∞ (x − λ)^ρ (c² + x)^{−ν/2} K_ν(4πr√(c² + x)) dx.
pub fn riesz_k_majorant(lambda: f64, rho: f64, nu: f64, c: f64, r: f64) -> f64 {
    let kappa = 4.0 * PI * r;
    let base = c * c + lambda;
    // √(base + y) ≥ (√base + √y)/√2
    let decay = (-kappa * base.sqrt() / 2f64.sqrt()).exp();
    if decay == 0.0 {
        return 0.0;
    }
    let kfac = k_upper_bound(nu, kappa * base.sqrt());
    let moment = |p: f64| {
        2.0 * crate::specfun::gamma(2.0 * p + 2.0).map(|g| g.value).unwrap_or(f64::INFINITY)
            * (2f64.sqrt() / kappa).powf(2.0 * p + 2.0)
    };
    if nu >= 0.0 {
        base.powf(-nu / 2.0) * kfac * decay * moment(rho)
    } else {
        // (base + y)^e ≤ 2^e (base^e + y^e)
        let e = -nu / 2.0;
        2f64.powf(e) * kfac * decay * (base.powf(e) * moment(rho) + moment(rho + e))
    }
}

/// How the coefficients of an algebraically decaying series are controlled.
#[derive(Clone, Copy)]
pub enum CoefficientControl<'a> {
    /// Upper bound for Σ_{1≤n≤t} |c(n)|.
    Growth(&'a dyn Fn(f64) -> f64),
    /// c(n) = ε·χ(n)·n^w with |ε| = 1 and |Σ_{n≤M} χ(n)| ≤ h.
    Oscillating { h: f64, weight: i32 },
}

/// Σ_{n≥first} c(n)·h(n) with |h(t)| ≤ g(t), g decreasing beyond `monotone_from`.
pub struct WeightedSeries<'a> {
    pub coeff: &'a dyn Fn(usize) -> Result<Complex64>,
    pub weight: &'a dyn Fn(usize) -> Result<ValueWithError>,
    pub majorant: &'a dyn Fn(f64) -> f64,
    pub control: CoefficientControl<'a>,
    pub first: usize,
    pub monotone_from: f64,
}

impl WeightedSeries<'_> {
    pub fn sum(&self, tol: f64, budget: Budget) -> Result<SeriesSum> {
        let term = |n: usize| -> Result<Term> {
            let c = (self.coeff)(n)?;
            if c == Complex64::new(0.0, 0.0) {
                return Ok(Term::zero());
            }
            let h = (self.weight)(n)?;
            Ok(Term { value: c * h.value, err: c.norm() * h.abs_error, abs_coeff: c.norm() })
        };
        let weighted = |t: f64| match self.control {
            CoefficientControl::Oscillating { weight, .. } => t.powi(weight) * (self.majorant)(t),
            CoefficientControl::Growth(_) => (self.majorant)(t),
        };
        let tail = match self.control {
            CoefficientControl::Growth(growth) => TailModel::Abel { growth, g: self.majorant },
            CoefficientControl::Oscillating { h, .. } => TailModel::BoundedPartialSums { h, g: &weighted },
        };
        let series = Series { first: self.first, term: &term, tail, monotone_from: self.monotone_from, tol, budget };
        sum_series(&series)
    }
}
