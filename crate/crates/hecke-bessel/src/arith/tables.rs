use super::bernoulli::bernoulli;
use super::character::kronecker;
use super::field::{field_constants, require_fundamental};
use crate::error::{domain, Error, Result};
use num::{BigInt, BigRational, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    /// Representations as a sum of k squares.
    Rk(u32),
    /// Divisor power sums σ_k.
    Sigma(u32),
    /// Ramanujan's τ.
    Tau,
    /// Ideal counts of ℚ(√−D).
    Ideal(u64),
    /// The constant sequence 1.
    Ones,
}

/// Exact integer coefficients indexed 0..=N. Index 0 is given by `zero`, a rational.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    pub kind: TableKind,
    pub values: Vec<i128>,
    pub zero: BigRational,
}

impl CoefficientTable {
    /// Largest available index.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<i128> {
        self.values
            .get(n)
            .copied()
            .ok_or(Error::TableTooShort { needed: n, available: self.max_index() })
    }

    /// Coefficient as a float, with index 0 read from `zero`.
    pub fn value_f64(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Ok(ratio_f64(&self.zero));
        }
        Ok(self.get(n)? as f64)
    }

    pub fn zero_f64(&self) -> f64 {
        ratio_f64(&self.zero)
    }
}

fn ratio_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

fn overflow(what: &str, n: usize) -> Error {
    Error::Range(format!("{what} overflows 128-bit integers at index {n}"))
}

/// r_k(0..=N) by repeated convolution with the ±m² indicator; r_k(0) = 1.
pub fn r_k(k: u32, n_max: usize) -> Result<CoefficientTable> {
    if k < 2 {
        return domain(format!("r_k needs k ≥ 2, got {k}"));
    }
    let squares: Vec<(usize, i128)> = (0..)
        .map(|m: usize| (m * m, if m == 0 { 1 } else { 2 }))
        .take_while(|&(s, _)| s <= n_max)
        .collect();
    let mut cur = vec![0i128; n_max + 1];
    for &(s, w) in &squares {
        cur[s] = w;
    }
    for _ in 1..k {
        let mut next = vec![0i128; n_max + 1];
        for (i, &ci) in cur.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for &(s, w) in &squares {
                if i + s > n_max {
                    break;
                }
                next[i + s] = next[i + s]
                    .checked_add(ci.checked_mul(w).ok_or_else(|| overflow("r_k", i + s))?)
                    .ok_or_else(|| overflow("r_k", i + s))?;
            }
        }
        cur = next;
    }
    Ok(CoefficientTable { kind: TableKind::Rk(k), values: cur, zero: BigRational::from_integer(1.into()) })
}

/// σ_k(1..=N) for odd k; index 0 holds −B_{k+1}/(2(k+1)).
pub fn sigma_k(k: u32, n_max: usize) -> Result<CoefficientTable> {
    if k % 2 == 0 {
        return domain(format!("σ_k requires k to be an odd positive integer, got {k}"));
    }
    let mut values = vec![0i128; n_max + 1];
    for d in 1..=n_max {
        let p = (d as i128).checked_pow(k).ok_or_else(|| overflow("σ_k", d))?;
        for m in (d..=n_max).step_by(d) {
            values[m] = values[m].checked_add(p).ok_or_else(|| overflow("σ_k", m))?;
        }
    }
    let zero = -bernoulli(k + 1)? / BigRational::from_integer(BigInt::from(2 * (k + 1)));
    Ok(CoefficientTable { kind: TableKind::Sigma(k), values, zero })
}

/// σ_s(n) = Σ_{d|n} d^s for real s, n = 0..=N (index 0 is 0).
pub fn divisor_power_sum(s: f64, n_max: usize) -> Vec<f64> {
    let mut values = vec![0.0; n_max + 1];
    for d in 1..=n_max {
        let p = (d as f64).powf(s);
        for m in (d..=n_max).step_by(d) {
            values[m] += p;
        }
    }
    values
}

fn mul_truncated(a: &[i128], b: &[i128]) -> Result<Vec<i128>> {
    let n = a.len();
    let mut out = vec![0i128; n];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b[..n - i].iter().enumerate() {
            let t = ai.checked_mul(bj).ok_or_else(|| overflow("τ", i + j))?;
            out[i + j] = out[i + j].checked_add(t).ok_or_else(|| overflow("τ", i + j))?;
        }
    }
    Ok(out)
}

/// τ(1..=N) from q∏(1−q^m)^24; the product comes from the pentagonal series,
/// raised to the 8th power by three squarings and then cubed.
pub fn tau(n_max: usize) -> Result<CoefficientTable> {
    if n_max < 1 {
        return domain("τ table needs N ≥ 1");
    }
    let len = n_max; // coefficients of q^0..q^{N−1}
    let mut euler = vec![0i128; len];
    for j in 0i64.. {
        let mut any = false;
        for g in [j * (3 * j - 1) / 2, j * (3 * j + 1) / 2] {
            if (g as usize) < len {
                euler[g as usize] = if j % 2 == 0 { 1 } else { -1 };
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    let e2 = mul_truncated(&euler, &euler)?;
    let e4 = mul_truncated(&e2, &e2)?;
    let e8 = mul_truncated(&e4, &e4)?;
    let e16 = mul_truncated(&e8, &e8)?;
    let e24 = mul_truncated(&e16, &e8)?;
    let mut values = vec![0i128; n_max + 1];
    values[1..].copy_from_slice(&e24);
    Ok(CoefficientTable { kind: TableKind::Tau, values, zero: BigRational::zero() })
}

/// F(n) = Σ_{d|n} (−D/d), the number of ideals of norm n in ℚ(√−D); F(0) = hR/w.
pub fn ideal_count(d: u64, n_max: usize) -> Result<CoefficientTable> {
    require_fundamental(d)?;
    let fc = field_constants(d)?;
    let mut values = vec![0i128; n_max + 1];
    for k in 1..=n_max {
        let chi = kronecker(-(d as i64), k as u64) as i128;
        if chi != 0 {
            for m in (k..=n_max).step_by(k) {
                values[m] += chi;
            }
        }
    }
    let zero = BigRational::new(
        BigInt::from(fc.class_number * fc.regulator),
        BigInt::from(fc.roots_of_unity),
    );
    Ok(CoefficientTable { kind: TableKind::Ideal(d), values, zero })
}

/// The sequence 1, 1, 1, … with index 0 set to 0.
pub fn ones(n_max: usize) -> CoefficientTable {
    let mut values = vec![1i128; n_max + 1];
    values[0] = 0;
    CoefficientTable { kind: TableKind::Ones, values, zero: BigRational::zero() }
}
