use super::ValueWithError;
use crate::error::{domain, Result};

const CUTOFF: usize = 20;
/// B_2, B_4, …, B_24.
const BERNOULLI_EVEN: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

/// Riemann ζ(s) for real s ≠ 1 by Euler–Maclaurin summation.
pub fn zeta(s: f64) -> Result<ValueWithError> {
    if s == 1.0 {
        return domain("zeta has a pole at s = 1");
    }
    if s < -20.0 {
        return domain(format!("zeta implemented for s ≥ −20, got {s}"));
    }
    let n = CUTOFF as f64;
    let mut sum = super::Neumaier::new();
    for k in 1..CUTOFF {
        sum.add((k as f64).powf(-s));
    }
    sum.add(n.powf(1.0 - s) / (s - 1.0));
    sum.add(0.5 * n.powf(-s));
    // term_j = B_{2j}/(2j)! · s(s+1)…(s+2j−2) · N^{−s−2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut npow = n.powf(-s - 1.0);
    let mut last = 0.0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        if j > 0 {
            let jj = (2 * j) as f64;
            rising *= (s + jj - 1.0) * (s + jj);
            fact *= (jj + 1.0) * (jj + 2.0);
            npow /= n * n;
        }
        let t = b / fact * rising * npow;
        if j + 1 == BERNOULLI_EVEN.len() {
            last = t;
        } else {
            sum.add(t);
        }
    }
    let v = sum.value();
    Ok(ValueWithError::new(v, 2.0 * last.abs() + v.abs() * 1e-16))
}
