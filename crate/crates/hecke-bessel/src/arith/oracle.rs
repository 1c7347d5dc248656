//! Fast tables against slow reference generators.

use super::{brute, field_constants, gauss_sum, ideal_count, primitive_characters, r_k, sigma_k, tau};
use crate::error::Result;
use num::integer::gcd;
use serde::Serialize;

/// One comparison between a fast generator and its reference.
#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub cases: usize,
    pub mismatches: usize,
    pub pass: bool,
    pub error: Option<String>,
}

fn compare(name: &str, fast: &[i128], slow: &[i128]) -> OracleCheck {
    let mismatches = fast.iter().zip(slow).filter(|(a, b)| a != b).count() + fast.len().abs_diff(slow.len());
    OracleCheck { name: name.into(), cases: fast.len().max(slow.len()), mismatches, pass: mismatches == 0, error: None }
}

fn run(name: &str, f: impl FnOnce() -> Result<OracleCheck>) -> OracleCheck {
    f().unwrap_or_else(|e| OracleCheck { name: name.into(), cases: 0, mismatches: 0, pass: false, error: Some(e.to_string()) })
}

/// Coefficients of θ(q)^k = (Σ_{m∈ℤ} q^{m²})^k up to q^N.
fn theta_power(k: u32, n_max: usize) -> Vec<i128> {
    let mut theta = vec![0i128; n_max + 1];
    let mut m = 0usize;
    while m * m <= n_max {
        theta[m * m] += if m == 0 { 1 } else { 2 };
        m += 1;
    }
    let mut acc = vec![0i128; n_max + 1];
    acc[0] = 1;
    for _ in 0..k {
        let mut next = vec![0i128; n_max + 1];
        for (i, &a) in acc.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &t) in theta[..=n_max - i].iter().enumerate() {
                next[i + j] += a * t;
            }
        }
        acc = next;
    }
    acc
}

/// τ(mn) = τ(m)τ(n) for coprime m, n with mn ≤ N.
fn tau_multiplicativity(n_max: usize) -> Result<OracleCheck> {
    let t = tau(n_max)?.values;
    let mut cases = 0;
    let mut mismatches = 0;
    for m in 2..=n_max {
        for n in m..=n_max / m {
            if gcd(m, n) == 1 {
                cases += 1;
                if t[m * n] != t[m] * t[n] {
                    mismatches += 1;
                }
            }
        }
    }
    Ok(OracleCheck { name: format!("tau(mn) = tau(m) tau(n), mn <= {n_max}"), cases, mismatches, pass: mismatches == 0, error: None })
}

/// τ(p)τ(pᵏ) = τ(pᵏ⁺¹) + p¹¹τ(pᵏ⁻¹) for prime powers pᵏ⁺¹ ≤ N.
fn tau_hecke_relation(n_max: usize) -> Result<OracleCheck> {
    let t = tau(n_max)?.values;
    let mut cases = 0;
    let mut mismatches = 0;
    for p in (2..=n_max).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)) {
        let mut prev = 1usize;
        let mut cur = p;
        while cur * p <= n_max {
            cases += 1;
            if t[p] * t[cur] != t[cur * p] + (p as i128).pow(11) * t[prev] {
                mismatches += 1;
            }
            prev = cur;
            cur *= p;
        }
    }
    Ok(OracleCheck { name: format!("tau Hecke recursion at prime powers <= {n_max}"), cases, mismatches, pass: mismatches == 0 && cases > 0, error: None })
}

/// |τ(χ)| = √q for every primitive χ with q ≤ `q_max`, to 1e−12 relative.
fn gauss_sum_moduli(q_max: u64) -> Result<OracleCheck> {
    let mut cases = 0;
    let mut mismatches = 0;
    for q in 3..=q_max {
        for chi in primitive_characters(q)? {
            cases += 1;
            let g = gauss_sum(&chi)?.norm();
            if ((g - (q as f64).sqrt()) / (q as f64).sqrt()).abs() > 1e-12 {
                mismatches += 1;
            }
        }
    }
    Ok(OracleCheck {
        name: format!("|gauss sum| = sqrt(q), primitive characters, q <= {q_max}"),
        cases,
        mismatches,
        pass: mismatches == 0 && cases > 0,
        error: None,
    })
}

/// Runs every oracle comparison.
pub fn oracle_checks() -> Vec<OracleCheck> {
    const N: usize = 200;
    let mut out = Vec::new();
    for k in [2u32, 3, 4, 8] {
        let name = format!("r_{k} vs theta^{k} expansion, N = {N}");
        out.push(run(&name, || Ok(compare(&name, &r_k(k, N)?.values, &theta_power(k, N)))));
    }
    for k in [2u32, 3, 4] {
        let name = format!("r_{k} vs lattice count, N = 60");
        out.push(run(&name, || Ok(compare(&name, &r_k(k, 60)?.values, &brute::r_k_lattice(k, 60)))));
    }
    let name = format!("tau vs product expansion, N = {N}");
    out.push(run(&name, || Ok(compare(&name, &tau(N)?.values[1..], &brute::tau_direct(N)[1..]))));
    out.push(run("tau multiplicativity", || tau_multiplicativity(100)));
    out.push(run("tau Hecke recursion", || tau_hecke_relation(1000)));
    for k in [1u32, 3, 5] {
        let name = format!("sigma_{k} vs trial division, N = {N}");
        out.push(run(&name, || Ok(compare(&name, &sigma_k(k, N)?.values[1..], &brute::sigma_trial(k, N)[1..]))));
    }
    for d in [3u64, 4, 7, 8, 11, 23] {
        let name = format!("ideal counts D = {d} vs trial division, N = {N}");
        out.push(run(&name, || Ok(compare(&name, &ideal_count(d, N)?.values[1..], &brute::ideal_trial(d, N)[1..]))));
    }
    let name = format!("4 F(n) = r_2(n) for D = 4, N = {N}");
    out.push(run(&name, || {
        let f: Vec<i128> = ideal_count(4, N)?.values[1..].iter().map(|v| 4 * v).collect();
        Ok(compare(&name, &f, &r_k(2, N)?.values[1..]))
    }));
    let name = "class numbers: reduced forms vs analytic formula";
    out.push(run(name, || {
        let ds = [3u64, 4, 7, 8, 11, 15, 19, 20, 23, 24, 31, 35, 39, 40, 43, 47, 51, 52, 55, 56, 59, 67, 71, 84, 163];
        let fast = ds.iter().map(|&d| Ok(field_constants(d)?.class_number as i128)).collect::<Result<Vec<_>>>()?;
        let slow: Vec<i128> = ds.iter().map(|&d| brute::class_number_formula(d) as i128).collect();
        Ok(compare(name, &fast, &slow))
    }));
    out.push(run("gauss sums", || gauss_sum_moduli(50)));
    out
}
