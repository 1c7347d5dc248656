//! Slow reference generators used to cross-check the fast tables.

use super::character::kronecker;

/// r_k(n) by enumerating integer points of the k-ball.
pub fn r_k_lattice(k: u32, n_max: usize) -> Vec<i128> {
    let m = (n_max as f64).sqrt().floor() as i64;
    let mut out = vec![0i128; n_max + 1];
    fn walk(left: u32, acc: usize, m: i64, n_max: usize, out: &mut [i128]) {
        if left == 0 {
            out[acc] += 1;
            return;
        }
        for x in -m..=m {
            let s = acc + (x * x) as usize;
            if s <= n_max {
                walk(left - 1, s, m, n_max, out);
            }
        }
    }
    walk(k, 0, m, n_max, &mut out);
    out
}

/// τ(1..=N) by multiplying out ∏(1−q^m) one factor at a time, 24 times each.
pub fn tau_direct(n_max: usize) -> Vec<i128> {
    let mut poly = vec![0i128; n_max];
    poly[0] = 1;
    for m in 1..n_max {
        for _ in 0..24 {
            for i in (m..n_max).rev() {
                poly[i] -= poly[i - m];
            }
        }
    }
    let mut out = vec![0i128; n_max + 1];
    out[1..].copy_from_slice(&poly);
    out
}

/// σ_k(n) by trial division.
pub fn sigma_trial(k: u32, n_max: usize) -> Vec<i128> {
    (0..=n_max)
        .map(|n| if n == 0 { 0 } else { (1..=n).filter(|d| n % d == 0).map(|d| (d as i128).pow(k)).sum() })
        .collect()
}

/// Σ_{d|n} (−D/d) by trial division.
pub fn ideal_trial(d: u64, n_max: usize) -> Vec<i128> {
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                0
            } else {
                (1..=n).filter(|k| n % k == 0).map(|k| kronecker(-(d as i64), k as u64) as i128).sum()
            }
        })
        .collect()
}

/// Class number from h = −(w/2D)·Σ_{n<D} (−D/n)·n.
pub fn class_number_formula(d: u64) -> i64 {
    let w = match d {
        3 => 6,
        4 => 4,
        _ => 2,
    };
    let s: i64 = (1..d).map(|n| kronecker(-(d as i64), n) as i64 * n as i64).sum();
    -(w * s) / (2 * d as i64)
}
