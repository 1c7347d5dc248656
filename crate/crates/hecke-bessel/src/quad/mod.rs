//! Adaptive Gauss–Kronrod quadrature on [a, ∞) for exponentially decaying
//! integrands, with the infinite tail cut off by an analytic envelope bound.

mod tables;

pub use tables::{run_table_integrals, table_integral_draws, verify_table_integral, TableIntegral, TableParams};

use crate::error::{Error, Result};
use crate::specfun::ValueWithError;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const MAX_PANELS: usize = 1 << 20;
const INITIAL_PANELS: usize = 8;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Shape of the exponential factor in an envelope.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Decay {
    /// e^{−κ√t}
    SqrtExp,
    /// e^{−κt}
    Exp,
}

/// |f(t)| ≤ coef·t^power·decay(κ, t) for t ≥ t0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Envelope {
    pub coef: f64,
    pub power: f64,
    pub kappa: f64,
    pub decay: Decay,
    pub t0: f64,
}

impl Envelope {
    pub fn eval(&self, t: f64) -> f64 {
        let e = match self.decay {
            Decay::SqrtExp => self.kappa * t.sqrt(),
            Decay::Exp => self.kappa * t,
        };
        self.coef * (self.power * t.ln() - e).exp()
    }

    /// Upper bound on ∫_t^∞ of the envelope.
    pub fn tail(&self, t: f64) -> f64 {
        if self.coef == 0.0 {
            return 0.0;
        }
        match self.decay {
            // t = u²: 2C ∫_{√t}^∞ u^{2p+1} e^{−κu} du = 2C κ^{−(2p+2)} Γ(2p+2, κ√t)
            Decay::SqrtExp => {
                let s = 2.0 * self.power + 2.0;
                2.0 * self.coef * (ln_upper_gamma_bound(s, self.kappa * t.sqrt()) - s * self.kappa.ln()).exp()
            }
            Decay::Exp => {
                let s = self.power + 1.0;
                self.coef * (ln_upper_gamma_bound(s, self.kappa * t) - s * self.kappa.ln()).exp()
            }
        }
    }
}

/// ln of an upper bound for Γ(s, x) = ∫_x^∞ u^{s−1}e^{−u} du.
pub(crate) fn ln_upper_gamma_bound(s: f64, x: f64) -> f64 {
    let base = (s - 1.0) * x.ln() - x;
    if s <= 1.0 {
        base
    } else if x > s - 1.0 {
        base + (x / (x - s + 1.0)).ln()
    } else {
        // Γ(s, x) ≤ Γ(s)
        crate::specfun::ln_gamma(s).unwrap_or(f64::INFINITY)
    }
}

/// An integrand on (lower, ∞) with a certified decay envelope.
pub struct DecayingIntegrand<'a> {
    pub f: &'a (dyn Fn(f64) -> f64 + Sync),
    pub lower: f64,
    pub envelope: Envelope,
}

/// Detailed quadrature outcome.
#[derive(Clone, Copy, Debug)]
pub struct Integral {
    pub value: ValueWithError,
    pub cutoff: f64,
    pub tail: f64,
    pub panels: usize,
}

/// ∫_a^∞ f with abs_error ≤ tol.
pub fn integrate(f: &DecayingIntegrand, tol: f64) -> Result<ValueWithError> {
    Ok(integrate_detailed(f, tol)?.value)
}

/// Smallest cutoff on a geometric grid with envelope tail below `target`.
pub fn cutoff(env: &Envelope, lower: f64, target: f64) -> Result<f64> {
    let mut t = env.t0.max(lower + 1.0).max(1.0);
    for _ in 0..400 {
        if env.tail(t) < target {
            return Ok(t);
        }
        t *= 1.25;
    }
    Err(Error::Convergence(format!(
        "envelope tail does not fall below {target:e}"
    )))
}

/// Checks the envelope at 16 log-spaced points of [t0, 4t0].
pub fn check_envelope(f: &DecayingIntegrand) -> Result<()> {
    let env = &f.envelope;
    let t0 = env.t0.max(f.lower + 1e-12).max(1e-12);
    for i in 0..16 {
        let t = t0 * 4f64.powf(i as f64 / 15.0);
        let v = (f.f)(t).abs();
        let bound = env.eval(t);
        if !(v <= bound * (1.0 + 1e-9) + 1e-300) {
            return Err(Error::Domain(format!(
                "integrand exceeds its envelope at t = {t}: |f| = {v:e} > {bound:e}"
            )));
        }
    }
    Ok(())
}

pub fn integrate_detailed(f: &DecayingIntegrand, tol: f64) -> Result<Integral> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("quadrature tolerance must be positive, got {tol}")));
    }
    check_envelope(f)?;
    let a = f.lower;
    let t_cut = cutoff(&f.envelope, a, tol / 2.0)?;
    let tail = f.envelope.tail(t_cut);
    let u_max = (t_cut - a).sqrt();
    // t = a + u², dt = 2u du
    let g = |u: f64| {
        if u == 0.0 {
            0.0
        } else {
            2.0 * u * (f.f)(a + u * u)
        }
    };
    let (value, err, panels) = adaptive(&g, 0.0, u_max, tol / 2.0)?;
    Ok(Integral {
        value: ValueWithError::new(value, err + tail),
        cutoff: t_cut,
        tail,
        panels,
    })
}

/// ∫_lo^hi g on a finite interval (open rule, so endpoint singularities are allowed).
pub fn integrate_finite(g: &dyn Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<ValueWithError> {
    let (v, e, _) = adaptive(g, lo, hi, tol)?;
    Ok(ValueWithError::new(v, e))
}

struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.err.total_cmp(&o.err) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err
            .total_cmp(&o.err)
            .then_with(|| o.lo.total_cmp(&self.lo))
    }
}

fn gk15(g: &dyn Fn(f64) -> f64, lo: f64, hi: f64) -> Panel {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = g(center);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut resabs = kron.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = g(center - dx);
        let f2 = g(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kron += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kron;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kron * half;
    resabs *= half.abs();
    resasc *= half.abs();
    let mut err = ((kron - gauss) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    if !value.is_finite() {
        err = f64::INFINITY;
    }
    Panel { lo, hi, value, err }
}

fn finite_panel(p: Panel) -> Result<Panel> {
    if p.value.is_finite() {
        Ok(p)
    } else {
        Err(Error::Domain(format!("integrand is not finite on [{}, {}]", p.lo, p.hi)))
    }
}

fn adaptive(g: &dyn Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<(f64, f64, usize)> {
    let mut heap = BinaryHeap::new();
    let width = (hi - lo) / INITIAL_PANELS as f64;
    for i in 0..INITIAL_PANELS {
        let a = lo + width * i as f64;
        let b = if i + 1 == INITIAL_PANELS { hi } else { a + width };
        heap.push(finite_panel(gk15(g, a, b))?);
    }
    let totals = |heap: &BinaryHeap<Panel>| {
        let mut v = crate::specfun::Neumaier::new();
        let mut e = 0.0;
        for p in heap.iter() {
            v.add(p.value);
            e += p.err;
        }
        (v.value(), e)
    };
    let mut err_sum: f64 = heap.iter().map(|p| p.err).sum();
    let mut refreshed = 0usize;
    while heap.len() < MAX_PANELS {
        if err_sum <= tol {
            // recompute from scratch to shed accumulated update drift
            let (v, e) = totals(&heap);
            if e <= tol {
                return Ok((v, e, heap.len()));
            }
            err_sum = e;
        }
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if !(mid > worst.lo && mid < worst.hi) {
            // interval cannot be split further
            heap.push(worst);
            break;
        }
        let left = finite_panel(gk15(g, worst.lo, mid))?;
        let right = finite_panel(gk15(g, mid, worst.hi))?;
        err_sum += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        refreshed += 1;
        if refreshed % 4096 == 0 {
            err_sum = totals(&heap).1;
        }
    }
    let (v, e) = totals(&heap);
    if e <= tol {
        return Ok((v, e, heap.len()));
    }
    Err(Error::Accuracy {
        message: format!("adaptive quadrature on [{lo}, {hi}] stopped at {} panels", heap.len()),
        estimate: v,
        error: e,
    })
}
