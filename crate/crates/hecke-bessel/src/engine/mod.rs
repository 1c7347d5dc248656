//! Dual-side evaluation of the identity catalog.

mod battery;
mod catalog;
mod classical;
mod first;
mod kernels;
mod limits;
mod second;
pub mod series;

pub use battery::{specfun_battery, BatteryCheck};
pub use catalog::{catalog, CatalogEntry, IdentityId, Sampling, Variant};
pub use first::{eval_first_theorem_general, eval_modular_relation, eval_riesz_identity, riesz_lhs};
pub use limits::{limit_checks, LimitCheck};
pub use second::eval_second_theorem_general;
pub use series::Budget;

use crate::error::{Error, Result};
use crate::hecke::{self, HeckeSystem};
use crate::report::{Comparison, SideValue, VerificationReport};
use crate::specfun::ValueWithError;
use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

/// Default arithmetic table length.
pub const DEFAULT_TABLE_SIZE: usize = 4096;
/// Largest table the automatic retry will build.
pub const MAX_TABLE_SIZE: usize = 1 << 22;

/// Free parameters of the identities; each identity reads a subset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct IdentityParams {
    pub nu: f64,
    pub c: f64,
    pub r: f64,
    pub alpha: f64,
    pub beta: f64,
    pub rho: f64,
    pub s: f64,
    pub x: f64,
    pub z: f64,
}

impl IdentityParams {
    pub fn get(&self, name: &str) -> f64 {
        match name {
            "nu" => self.nu,
            "c" => self.c,
            "r" => self.r,
            "alpha" => self.alpha,
            "beta" => self.beta,
            "rho" => self.rho,
            "s" => self.s,
            "x" => self.x,
            "z" => self.z,
            _ => f64::NAN,
        }
    }

    pub fn set(&mut self, name: &str, v: f64) {
        match name {
            "nu" => self.nu = v,
            "c" => self.c = v,
            "r" => self.r = v,
            "alpha" => self.alpha = v,
            "beta" => self.beta = v,
            "rho" => self.rho = v,
            "s" => self.s = v,
            "x" => self.x = v,
            "z" => self.z = v,
            _ => {}
        }
    }
}

/// One identity at one parameter point.
#[derive(Clone, Debug)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub variant: Variant,
    pub params: IdentityParams,
    pub tol: f64,
}

/// Evaluation controls.
#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    pub table_size: usize,
    pub budget: Budget,
    /// Multipliers on the truncation tolerance of each side (1 = the case tolerance).
    pub lhs_tol_scale: f64,
    pub rhs_tol_scale: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self { table_size: DEFAULT_TABLE_SIZE, budget: Budget::default(), lhs_tol_scale: 1.0, rhs_tol_scale: 1.0 }
    }
}

/// Accumulates one side of an identity.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Side {
    pub value: Complex64,
    pub err: f64,
    pub terms: usize,
    pub tail: f64,
    pub quad_err: f64,
}

impl Side {
    pub fn add_series(&mut self, s: series::SeriesSum, factor: Complex64) {
        self.value += s.value * factor;
        self.err += s.err * factor.norm();
        self.terms += s.terms;
        self.tail += s.tail * factor.norm();
    }

    pub fn add_real_series(&mut self, s: series::SeriesSum, factor: f64) {
        self.add_series(s, Complex64::new(factor, 0.0));
    }

    pub fn add_value(&mut self, v: ValueWithError, factor: f64) {
        self.value += v.value * factor;
        self.err += v.abs_error * factor.abs();
    }

    pub fn add_complex(&mut self, v: Complex64, err: f64) {
        self.value += v;
        self.err += err;
    }

    pub fn add_integral(&mut self, v: ValueWithError, factor: f64) {
        self.add_value(v, factor);
        self.quad_err += v.abs_error * factor.abs();
    }

    pub fn finish(self) -> SideValue {
        SideValue {
            re: self.value.re,
            im: self.value.im,
            abs_error: self.err + self.value.norm() * 16.0 * f64::EPSILON,
            terms: self.terms,
            tail: self.tail,
            quad_err: self.quad_err,
        }
    }
}

/// Shared evaluation context.
pub(crate) struct Ctx<'a> {
    pub sys: Option<&'a HeckeSystem>,
    pub p: IdentityParams,
    pub budget: Budget,
    pub table_size: usize,
}

impl Ctx<'_> {
    pub fn system(&self) -> Result<&HeckeSystem> {
        self.sys.ok_or_else(|| Error::Domain("identity needs a coefficient system".into()))
    }
}

pub(crate) fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(format!("hypothesis violated: {what}")))
    }
}

fn report_params(case: &IdentityCase, sys: Option<&HeckeSystem>) -> Vec<(String, f64)> {
    let mut out: Vec<(String, f64)> =
        case.id.param_names().iter().map(|&n| (n.to_string(), case.params.get(n))).collect();
    if let Some(s) = case.variant.fixed_s {
        if !case.id.param_names().contains(&"s") {
            out.push(("s".into(), s));
        }
    }
    if let Some(sys) = sys {
        out.extend(system_params(sys));
    } else if let Some((family, sp)) = case.variant.system {
        out.extend(system_params_raw(family, sp));
    }
    out
}

fn system_params_raw(family: hecke::Family, sp: hecke::SystemParams) -> Vec<(String, f64)> {
    use hecke::Family::*;
    match family {
        Rk | Sigma => vec![("k".into(), sp.k as f64)],
        ChiOdd | ChiEven => {
            let mut v = vec![("q".into(), sp.q as f64)];
            if let Some(i) = sp.char_index {
                v.push(("char".into(), i as f64));
            }
            v
        }
        Ideal => vec![("D".into(), sp.disc as f64)],
        Tau | Zeta => vec![],
    }
}

fn system_params(sys: &HeckeSystem) -> Vec<(String, f64)> {
    system_params_raw(sys.family, sys.params)
}

/// Runs `f` on `sys`, rebuilding the system with four times longer tables while it reports
/// a table that is too short.
pub(crate) fn with_longer_tables<T>(sys: &HeckeSystem, f: impl Fn(&HeckeSystem) -> Result<T>) -> Result<T> {
    let mut size = sys.max_index().max(64);
    let mut owned: Option<HeckeSystem> = None;
    loop {
        match f(owned.as_ref().unwrap_or(sys)) {
            Err(Error::TableTooShort { .. }) if size < MAX_TABLE_SIZE => {
                size *= 4;
                owned = Some(hecke::catalog(sys.family, sys.params, size)?);
            }
            other => return other,
        }
    }
}

/// Evaluates both sides; table-length failures are retried with a four times longer table.
pub fn try_eval_identity(
    case: &IdentityCase,
    opts: &EvalOptions,
    prebuilt: Option<Arc<HeckeSystem>>,
) -> Result<VerificationReport> {
    let mut size = opts.table_size.max(64);
    let mut sys = prebuilt;
    loop {
        if sys.is_none() {
            if let Some((family, sp)) = case.variant.system {
                sys = Some(Arc::new(hecke::catalog(family, sp, size)?));
            }
        } else if let Some(s) = &sys {
            size = size.max(s.max_index());
        }
        let ctx = Ctx {
            sys: sys.as_deref(),
            p: case.params,
            budget: opts.budget,
            table_size: size,
        };
        match eval_sides(case, &ctx, opts) {
            Err(Error::TableTooShort { .. }) if size < MAX_TABLE_SIZE => {
                size *= 4;
                sys = None;
            }
            Err(e) => return Err(e),
            Ok((l, r)) => {
                let cmp = case.id.comparison();
                let tol = if matches!(cmp, Comparison::Relative(_)) { case.id.relative_tol() } else { case.tol };
                return Ok(VerificationReport::from_sides(
                    case.id.id(),
                    report_params(case, sys.as_deref()),
                    l,
                    r,
                    tol,
                    cmp,
                ));
            }
        }
    }
}

fn eval_sides(case: &IdentityCase, ctx: &Ctx, opts: &EvalOptions) -> Result<(SideValue, SideValue)> {
    catalog::check_hypotheses(case.id, ctx)?;
    let (lhs, rhs) = catalog::sides(case.id);
    let side_tol = case.id.side_tolerance(case.tol, ctx)?;
    let l = lhs(ctx, side_tol * opts.lhs_tol_scale)?.finish();
    let r = rhs(ctx, side_tol * opts.rhs_tol_scale)?.finish();
    for side in [&l, &r] {
        let limit = match case.id.comparison() {
            Comparison::Relative(rel) => rel * side.modulus(),
            Comparison::Absolute => case.tol,
        };
        if side.abs_error > limit {
            return Err(Error::Accuracy {
                message: format!("certified error bound {:.3e} exceeds the requested tolerance {:.3e}", side.abs_error, limit),
                estimate: side.re,
                error: side.abs_error,
            });
        }
    }
    Ok((l, r))
}

/// Evaluates a case; failures become failing reports.
pub fn eval_identity(case: &IdentityCase, opts: &EvalOptions) -> VerificationReport {
    let start = Instant::now();
    let mut rep = match try_eval_identity(case, opts, None) {
        Ok(r) => r,
        Err(e) => VerificationReport::failed(case.id.id(), report_params(case, None), case.tol, e.to_string()),
    };
    rep.ms = start.elapsed().as_secs_f64() * 1e3;
    rep
}

/// Glob match on catalog ids (`*`, `?`, character classes).
pub fn matches_filter(filter: &str, id: &str) -> bool {
    match glob::Pattern::new(filter) {
        Ok(p) => p.matches(id),
        Err(_) => filter == id,
    }
}

fn variant_seed(seed: u64, entry: usize, variant: usize) -> u64 {
    let mut z = seed ^ ((entry as u64) << 32) ^ ((variant as u64) << 16) ^ 0x9E37_79B9_7F4A_7C15;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The cases `run_suite` would evaluate, in catalog-then-draw order.
pub fn suite_cases(filter: &str, draws: usize, seed: u64, tol: f64) -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    for (ei, entry) in catalog().into_iter().enumerate() {
        if !matches_filter(filter, entry.id.id()) {
            continue;
        }
        for (vi, variant) in entry.variants.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(variant_seed(seed, ei, vi));
            for _ in 0..draws {
                let params = entry.id.sample(variant, &mut rng);
                cases.push(IdentityCase { id: entry.id, variant: variant.clone(), params, tol });
            }
        }
    }
    cases
}

/// Evaluates every matching identity at `draws` random in-box points per variant.
/// Runs on the current rayon pool; the report order does not depend on scheduling.
pub fn run_suite(filter: &str, draws: usize, seed: u64, tol: f64, opts: &EvalOptions) -> Vec<VerificationReport> {
    let cases = suite_cases(filter, draws.max(1), seed, tol);
    let mut keys: Vec<(hecke::Family, hecke::SystemParams)> = cases.iter().filter_map(|c| c.variant.system).collect();
    keys.sort_by_key(|(f, p)| (f.id(), p.k, p.q, p.char_index, p.disc));
    keys.dedup();
    let built: BTreeMap<usize, Option<Arc<HeckeSystem>>> = keys
        .par_iter()
        .enumerate()
        .map(|(i, &(f, p))| (i, hecke::catalog(f, p, opts.table_size.max(64)).ok().map(Arc::new)))
        .collect();
    let lookup = |key: (hecke::Family, hecke::SystemParams)| {
        keys.iter().position(|k| *k == key).and_then(|i| built.get(&i).cloned().flatten())
    };
    cases
        .par_iter()
        .map(|case| {
            let start = Instant::now();
            let pre = case.variant.system.and_then(lookup);
            let mut rep = match try_eval_identity(case, opts, pre) {
                Ok(r) => r,
                Err(e) => {
                    VerificationReport::failed(case.id.id(), report_params(case, None), case.tol, e.to_string())
                }
            };
            rep.ms = start.elapsed().as_secs_f64() * 1e3;
            rep
        })
        .collect()
}

pub(crate) fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    if hi <= lo {
        lo
    } else {
        rng.gen_range(lo..hi)
    }
}
