//! Truncated summation with remainder bounds.

use crate::error::{Error, Result};
use crate::specfun::ComplexNeumaier;
use num::complex::Complex64;

/// One evaluated term.
#[derive(Clone, Copy, Debug, Default)]
pub struct Term {
    pub value: Complex64,
    /// Bound on the evaluation error of `value`.
    pub err: f64,
    /// |c(n)| for the coefficient the tail model counts.
    pub abs_coeff: f64,
}

impl Term {
    pub fn real(value: f64, err: f64, abs_coeff: f64) -> Self {
        Self { value: Complex64::new(value, 0.0), err, abs_coeff }
    }

    pub fn zero() -> Self {
        Self::default()
    }
}

/// How the remainder Σ_{n>N} is bounded.
pub enum TailModel<'a> {
    /// Σ_{n>N} |c(n)|·g(n), with `growth(t)` ≥ Σ_{1≤n≤t} |c(n)| and g decreasing.
    Abel { growth: &'a dyn Fn(f64) -> f64, g: &'a dyn Fn(f64) -> f64 },
    /// |Σ_{n>N} c(n)·g(n)| ≤ 2H·g(N+1) when every partial sum of c is at most H in modulus.
    BoundedPartialSums { h: f64, g: &'a dyn Fn(f64) -> f64 },
    /// A direct bound on the remainder after index N.
    Explicit(&'a dyn Fn(usize) -> f64),
}

/// Stopping policy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    /// Stop once the remainder bound is below tol/4 after three terms below tol/8; fail past `max_terms`.
    Certified { max_terms: usize },
    /// Sum exactly this many terms and report the remainder bound.
    Fixed(usize),
}

pub const DEFAULT_MAX_TERMS: usize = 10_000_000;

impl Default for Budget {
    fn default() -> Self {
        Budget::Certified { max_terms: DEFAULT_MAX_TERMS }
    }
}

pub struct Series<'a> {
    pub first: usize,
    pub term: &'a dyn Fn(usize) -> Result<Term>,
    pub tail: TailModel<'a>,
    /// Index from which the tail model's monotonicity assumptions hold.
    pub monotone_from: f64,
    pub tol: f64,
    pub budget: Budget,
}

#[derive(Clone, Copy, Debug)]
pub struct SeriesSum {
    pub value: Complex64,
    /// Evaluation errors plus the remainder bound plus rounding.
    pub err: f64,
    pub tail: f64,
    pub terms: usize,
}

pub fn sum_series(s: &Series) -> Result<SeriesSum> {
    let mut acc = ComplexNeumaier::new();
    let mut abs_sum = 0.0;
    let mut eval_err = 0.0;
    let mut partial_abs = 0.0;
    let mut small = 0usize;
    let mut next_check = s.monotone_from.max(s.first as f64);
    let mut n = s.first;
    loop {
        let t = (s.term)(n)?;
        if !(t.value.re.is_finite() && t.value.im.is_finite()) {
            return Err(Error::Convergence(format!("term {n} is not finite")));
        }
        acc.add(t.value);
        abs_sum += t.value.norm();
        eval_err += t.err;
        if n >= 1 {
            partial_abs += t.abs_coeff;
        }
        small = if t.value.norm() < s.tol / 8.0 { small + 1 } else { 0 };
        let count = n - s.first + 1;
        let finish = |tail: f64| SeriesSum {
            value: acc.value(),
            err: eval_err + tail + abs_sum * 4.0 * f64::EPSILON,
            tail,
            terms: count,
        };
        match s.budget {
            Budget::Fixed(m) => {
                if count >= m {
                    let tail = tail_bound(&s.tail, n, partial_abs)?;
                    return Ok(finish(tail));
                }
            }
            Budget::Certified { max_terms } => {
                if small >= 3 && n as f64 >= next_check {
                    let tail = tail_bound(&s.tail, n, partial_abs)?;
                    if tail < s.tol / 4.0 {
                        return Ok(finish(tail));
                    }
                    next_check = (n as f64 * 1.1).max(n as f64 + 1.0);
                }
                if count >= max_terms {
                    let tail = tail_bound(&s.tail, n, partial_abs).unwrap_or(f64::INFINITY);
                    return Err(Error::Accuracy {
                        message: format!("series remainder bound still above tol/4 after {count} terms"),
                        estimate: acc.value().re,
                        error: tail,
                    });
                }
            }
        }
        n += 1;
    }
}

/// Remainder bound after index `n`, given Σ_{1≤m≤n} |c(m)|.
pub fn tail_bound(model: &TailModel, n: usize, partial_abs: f64) -> Result<f64> {
    let b = match model {
        TailModel::Abel { growth, g } => abel_tail(*growth, *g, n as f64, partial_abs)?,
        TailModel::BoundedPartialSums { h, g } => 2.0 * h * g(n as f64 + 1.0),
        TailModel::Explicit(f) => f(n),
    };
    if b.is_nan() || b < 0.0 {
        return Err(Error::Convergence(format!("invalid remainder bound {b} at index {n}")));
    }
    Ok(b)
}

/// Summation by parts: Σ_{m>n} |c(m)| g(m) ≤ (U(n) − S(n))·g(n) + ∫_n^∞ g dU,
/// with the Stieltjes integral bounded on a geometric grid (g decreasing, U increasing).
fn abel_tail(growth: &dyn Fn(f64) -> f64, g: &dyn Fn(f64) -> f64, n: f64, partial_abs: f64) -> Result<f64> {
    let start = n.max(1.0);
    let g0 = g(start);
    if g0 == 0.0 {
        return Ok(0.0);
    }
    let mut total = (growth(start) - partial_abs).max(0.0) * g0;
    let mut t = start;
    let mut prev = 0.0f64;
    let mut ratios = [f64::INFINITY; 4];
    for step in 0..100_000usize {
        let t1 = (t * 1.05).max(t + 0.25);
        let gt = g(t);
        let inc = (growth(t1) - growth(t)).max(0.0) * gt;
        if !inc.is_finite() {
            return Err(Error::Convergence(format!("remainder bound diverges near t = {t}")));
        }
        total += inc;
        if gt == 0.0 || (inc == 0.0 && g(t1) == 0.0) {
            return Ok(total);
        }
        if prev > 0.0 {
            ratios[step % 4] = inc / prev;
            let r = ratios.iter().cloned().fold(0.0, f64::max);
            if r < 1.0 {
                let rest = 2.0 * inc * r / (1.0 - r);
                if rest <= 1e-3 * total {
                    return Ok(total + rest);
                }
            }
        }
        prev = inc;
        t = t1;
    }
    Err(Error::Convergence(format!("remainder bound did not settle from n = {n}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abel_bound_covers_zeta_two_tail() {
        let growth = |t: f64| t;
        let g = |t: f64| t.powi(-2);
        for n in [10usize, 100, 1000] {
            let exact: f64 = (n + 1..2_000_000).map(|m| (m as f64).powi(-2)).sum::<f64>() + 1.0 / 2e6;
            let b = abel_tail(&growth, &g, n as f64, n as f64).unwrap();
            assert!(b >= exact && b < 1.3 * exact, "n={n}: {b} vs {exact}");
        }
    }

    #[test]
    fn certified_sum_of_geometric_series() {
        let term = |n: usize| Ok(Term::real(0.5f64.powi(n as i32), 0.0, 0.5f64.powi(n as i32)));
        let tail = |n: usize| 0.5f64.powi(n as i32);
        let s = Series {
            first: 0,
            term: &term,
            tail: TailModel::Explicit(&tail),
            monotone_from: 0.0,
            tol: 1e-12,
            budget: Budget::default(),
        };
        let r = sum_series(&s).unwrap();
        assert!((r.value.re - 2.0).abs() <= r.err && r.err < 1e-12);
    }

    #[test]
    fn exhausted_budget_is_reported() {
        let term = |n: usize| Ok(Term::real(1.0 / (n as f64 + 1.0), 0.0, 0.0));
        let tail = |_: usize| f64::INFINITY;
        let s = Series {
            first: 0,
            term: &term,
            tail: TailModel::Explicit(&tail),
            monotone_from: 0.0,
            tol: 1e-6,
            budget: Budget::Certified { max_terms: 100 },
        };
        assert!(matches!(sum_series(&s), Err(Error::Accuracy { .. })));
    }
}
