use super::ValueWithError;
use crate::error::{domain, Error, Result};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];
const GAMMA_REL_ERR: f64 = 1e-14;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// sin(πx) with exact reduction, so zeros at integers are exact.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn lanczos_sum(z: f64) -> f64 {
    // z = x - 1
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    a
}

fn gamma_positive(x: f64) -> Result<f64> {
    if x > 171.6 {
        return Err(Error::Range(format!("gamma({x}) overflows")));
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    let half = t.powf((z + 0.5) / 2.0);
    Ok((2.0 * PI).sqrt() * half * ((-t).exp() * half) * lanczos_sum(z))
}

/// Γ(x) for real x away from the poles.
pub fn gamma(x: f64) -> Result<ValueWithError> {
    if !x.is_finite() {
        return domain(format!("gamma argument {x} is not finite"));
    }
    if is_nonpositive_integer(x) {
        return domain(format!("gamma has a pole at x = {x}"));
    }
    let v = if x < 0.5 {
        PI / (sin_pi(x) * gamma_positive(1.0 - x)?)
    } else {
        gamma_positive(x)?
    };
    Ok(ValueWithError::with_rel(v, GAMMA_REL_ERR))
}

/// ln|Γ(x)|.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return domain(format!("ln_gamma has a pole at x = {x}"));
    }
    if x < 0.5 {
        return Ok(PI.ln() - sin_pi(x).abs().ln() - ln_gamma(1.0 - x)?);
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    Ok(LN_SQRT_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln())
}

/// 1/Γ(x), entire: zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > 171.0 {
        return (-ln_gamma(x).unwrap_or(f64::INFINITY)).exp();
    }
    match gamma(x) {
        Ok(g) => 1.0 / g.value,
        Err(_) => 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn integer_and_half_integer_values() {
        assert!(rel(gamma(1.0).unwrap().value, 1.0) < 1e-14);
        assert!(rel(gamma(0.5).unwrap().value, PI.sqrt()) < 1e-14);
        let mut fact = 1.0f64;
        for n in 1..=30u32 {
            fact *= n as f64;
            assert!(rel(gamma(n as f64 + 1.0).unwrap().value, fact) < 1e-13, "n={n}");
        }
        // Γ(25/2) from the recurrence Γ(x+1) = xΓ(x) started at Γ(1/2)
        let mut g = PI.sqrt();
        let mut x = 0.5;
        while x < 12.5 {
            g *= x;
            x += 1.0;
        }
        assert!(rel(gamma(12.5).unwrap().value, g) < 1e-13);
    }

    #[test]
    fn poles_are_domain_errors() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(gamma(x), Err(Error::Domain(_))));
        }
        assert_eq!(rgamma(-3.0), 0.0);
    }

    #[test]
    fn reflection_consistent_with_recurrence() {
        for &x in &[-0.3, -1.7, -4.25, -12.9, -30.5] {
            let lhs = gamma(x).unwrap().value;
            let rhs = gamma(x + 1.0).unwrap().value / x;
            assert!(rel(lhs, rhs) < 1e-13, "x={x}");
        }
    }

    #[test]
    fn ln_gamma_matches_gamma() {
        for &x in &[0.1, 0.5, 1.5, 7.25, 40.0, 49.9, -2.5] {
            let g = gamma(x).unwrap().value.abs().ln();
            assert!((ln_gamma(x).unwrap() - g).abs() < 1e-12 * g.abs().max(1.0), "x={x}");
        }
    }
}
