use crate::error::{domain, Result};
use num::{BigInt, BigRational, One, ToPrimitive, Zero};

/// Exact B_n for even n ≥ 2 from Σ_{j=0}^{n} C(n+1, j) B_j = 0.
pub fn bernoulli(n: u32) -> Result<BigRational> {
    if n < 2 || n % 2 == 1 {
        return domain(format!("bernoulli index must be even and at least 2, got {n}"));
    }
    let n = n as usize;
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        // row C(m+1, j) for j = 0..m
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    Ok(b.swap_remove(n))
}

pub fn bernoulli_f64(n: u32) -> Result<f64> {
    let b = bernoulli(n)?;
    Ok(b.numer().to_f64().unwrap_or(f64::NAN) / b.denom().to_f64().unwrap_or(f64::NAN))
}
