use super::{ValueWithError, ALGO_REL_ERR};
use crate::error::{domain, Error, Result};
use std::f64::consts::PI;

const MAX_DIRECT_ARG: f64 = 0.95;
const MAX_TERMS: usize = 100_000;

fn nonpositive_integer(x: f64) -> Option<usize> {
    (x <= 0.0 && x == x.round()).then(|| (-x) as usize)
}

/// Gauss ₂F₁(a, b; c; x) on 0 ≤ x < 1.
///
/// Terminating series (a or b a nonpositive integer) are summed exactly for
/// any x in range; otherwise the direct series is used for x ≤ 0.95 with a
/// ratio-test bound on the tail.
pub fn hyp2f1(a: f64, b: f64, c: f64, x: f64) -> Result<ValueWithError> {
    if nonpositive_integer(c).is_some() {
        return domain(format!("₂F₁ lower parameter c = {c} is a pole"));
    }
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Range(format!("₂F₁ argument {x} outside [0, 1)")));
    }
    let terminating = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (Some(m), None) => Some(m),
        (None, Some(n)) => Some(n),
        (None, None) => None,
    };
    if let Some(n) = terminating {
        let mut term = 1.0;
        let mut sum = super::Neumaier::new();
        sum.add(term);
        for k in 0..n {
            let kf = k as f64;
            term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
            sum.add(term);
        }
        return Ok(ValueWithError::exact(sum.value()));
    }
    if x > MAX_DIRECT_ARG {
        return Err(Error::Range(format!(
            "₂F₁ argument {x} above the direct-series cap {MAX_DIRECT_ARG}"
        )));
    }
    let (sum, tail) = gauss_series(a, b, c, x, false)?;
    Ok(ValueWithError::new(sum, tail + sum.abs() * ALGO_REL_ERR))
}

/// Σ |(a)_k (b)_k / ((c)_k k!)| x^k, which bounds |₂F₁(a, b; c; y)| for all 0 ≤ y ≤ x.
pub fn hyp2f1_abs_majorant(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    if !(c > 0.0) {
        return domain(format!("₂F₁ majorant needs c > 0, got {c}"));
    }
    if !(0.0..=MAX_DIRECT_ARG).contains(&x) {
        return Err(Error::Range(format!("₂F₁ majorant argument {x} outside [0, 0.95]")));
    }
    let (sum, tail) = gauss_series(a, b, c, x, true)?;
    Ok(sum + tail)
}

fn gauss_series(a: f64, b: f64, c: f64, x: f64, absolute: bool) -> Result<(f64, f64)> {
    let k_min = (2.0 * c.abs() + a.abs() + b.abs() + 4.0).ceil() as usize;
    let growth = (a + b - c - 1.0).abs();
    let cross = (a * b - c).abs();
    let mut term = 1.0f64;
    let mut sum = super::Neumaier::new();
    sum.add(term);
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let ratio = (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        term *= if absolute { ratio.abs() } else { ratio };
        sum.add(term);
        let j = kf + 1.0;
        if k + 1 >= k_min {
            // ratio bound for all later terms: x·(1 + 2(|a+b−c−1| + |ab−c|/j)/(j+1))
            let r = x * (1.0 + 2.0 * (growth + cross / j) / (j + 1.0));
            if r < 1.0 {
                let tail = term.abs() * r / (1.0 - r);
                let s = sum.value();
                if tail <= 1e-17 * s.abs() || term == 0.0 {
                    return Ok((s, tail));
                }
            }
        }
    }
    Err(Error::Convergence(format!(
        "₂F₁({a}, {b}; {c}; {x}) series did not converge"
    )))
}

/// Complete elliptic integral of the first kind K(k) = ∫₀^{π/2} dθ/√(1 − k² sin²θ),
/// k the modulus, via the arithmetic–geometric mean.
pub fn elliptic_k(k: f64) -> Result<ValueWithError> {
    if !(k.abs() < 1.0) {
        return domain(format!("elliptic_k requires |k| < 1, got {k}"));
    }
    let mut a = 1.0f64;
    let mut b = (1.0 - k * k).sqrt();
    for _ in 0..64 {
        if (a - b).abs() <= 1e-16 * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Ok(ValueWithError::with_rel(PI / (2.0 * a), ALGO_REL_ERR))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_zero_is_one() {
        assert_eq!(hyp2f1(0.3, -1.7, 2.2, 0.0).unwrap().value, 1.0);
    }

    #[test]
    fn log_closed_form() {
        for &x in &[0.01, 0.2, 0.5, 0.9] {
            let s: f64 = f64::sqrt(x);
            let exact = ((1.0 + s) / (1.0 - s)).ln() / (2.0 * s);
            let v = hyp2f1(1.0, 0.5, 1.5, x).unwrap();
            assert!(((v.value - exact) / exact).abs() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn terminating_polynomial_matches_binomial_closed_form() {
        for &z in &[0.05, 0.3, 0.97] {
            let s: f64 = f64::sqrt(z);
            let exact = -((1.0 - s).powi(23) - (1.0 + s).powi(23)) / (46.0 * s);
            let v = hyp2f1(-10.5, -11.0, 1.5, z).unwrap().value;
            assert!(((v - exact) / exact).abs() < 1e-12, "z={z}");
        }
    }

    #[test]
    fn range_and_pole_errors() {
        assert!(matches!(hyp2f1(0.5, 0.5, -2.0, 0.1), Err(Error::Domain(_))));
        assert!(matches!(hyp2f1(0.5, 0.5, 1.0, 0.96), Err(Error::Range(_))));
        assert!(matches!(hyp2f1(0.5, 0.5, 1.0, 1.0), Err(Error::Range(_))));
        assert!(elliptic_k(1.0).is_err());
    }

    #[test]
    fn elliptic_at_zero() {
        assert!((elliptic_k(0.0).unwrap().value - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn majorant_dominates() {
        let m = hyp2f1_abs_majorant(-3.7, 2.2, 1.3, 0.4).unwrap();
        for &y in &[0.0, 0.1, 0.4] {
            assert!(hyp2f1(-3.7, 2.2, 1.3, y).unwrap().value.abs() <= m);
        }
    }
}
