use hecke_bessel::arith::{
    all_characters, bernoulli, bernoulli_f64, brute, field_constants, gauss_sum, ideal_count, is_fundamental, kronecker,
    primitive_characters, r_k, sigma_k, tau, Parity,
};
use hecke_bessel::specfun::zeta;
use num::integer::gcd;
use num::BigRational;
use proptest::prelude::*;
use std::f64::consts::PI;

fn theta_power(k: u32, n_max: usize) -> Vec<i128> {
    let mut theta = vec![0i128; n_max + 1];
    let mut m: i64 = -((n_max as f64).sqrt() as i64);
    while m * m <= n_max as i64 {
        theta[(m * m) as usize] += 1;
        m += 1;
    }
    let mut acc = vec![0i128; n_max + 1];
    acc[0] = 1;
    for _ in 0..k {
        let mut next = vec![0i128; n_max + 1];
        for i in 0..=n_max {
            for j in 0..=n_max - i {
                next[i + j] += acc[i] * theta[j];
            }
        }
        acc = next;
    }
    acc
}

#[test]
fn r_k_matches_theta_expansion_and_lattice_count() {
    for k in [2, 3, 4, 8] {
        let t = r_k(k, 200).unwrap();
        assert_eq!(t.values, theta_power(k, 200), "k = {k}");
        assert_eq!(t.values[0], 1);
        assert!(t.values.iter().all(|&v| v >= 0));
    }
    for k in [2, 3, 4] {
        assert_eq!(r_k(k, 60).unwrap().values, brute::r_k_lattice(k, 60));
    }
    let r2 = r_k(2, 3).unwrap();
    assert_eq!((r2.values[1], r2.values[3]), (4, 0));
}

#[test]
fn tau_multiplicativity_and_hecke_relation() {
    let t = tau(100).unwrap().values;
    for m in 1..=100usize {
        for n in 1..=100 / m {
            if gcd(m, n) == 1 {
                assert_eq!(t[m * n], t[m] * t[n], "τ({m}·{n})");
            }
        }
    }
    for p in [2usize, 3, 5, 7] {
        assert_eq!(t[p * p], t[p] * t[p] - (p as i128).pow(11));
    }
    assert_eq!(t[6], t[2] * t[3]);
    assert_eq!((t[1], t[2]), (1, -24));
}

#[test]
fn tau_matches_direct_product_expansion() {
    assert_eq!(tau(300).unwrap().values, brute::tau_direct(300));
}

#[test]
fn sigma_and_ideal_counts_are_multiplicative() {
    let s1 = sigma_k(1, 500).unwrap().values;
    let s3 = sigma_k(3, 500).unwrap().values;
    let f23 = ideal_count(23, 500).unwrap().values;
    for m in 1..=500usize {
        for n in 1..=500 / m {
            if gcd(m, n) == 1 {
                assert_eq!(s1[m * n], s1[m] * s1[n]);
                assert_eq!(s3[m * n], s3[m] * s3[n]);
                assert_eq!(f23[m * n], f23[m] * f23[n]);
            }
        }
    }
    assert_eq!(s1, brute::sigma_trial(1, 500));
    assert_eq!(s3[..100], brute::sigma_trial(3, 99)[..]);
    assert_eq!(s1[1], 1);
}

#[test]
fn sigma_zero_index_is_the_bernoulli_value() {
    let t = sigma_k(1, 1).unwrap();
    assert_eq!(t.zero, BigRational::new((-1).into(), 24.into()));
    let t = sigma_k(3, 1).unwrap();
    assert_eq!(t.zero, BigRational::new(1.into(), 240.into()));
}

#[test]
fn ideal_counts_for_gaussian_field_are_quarter_r2() {
    let f = ideal_count(4, 200).unwrap();
    let r2 = r_k(2, 200).unwrap();
    for n in 1..=200 {
        assert_eq!(4 * f.values[n], r2.values[n]);
    }
    assert_eq!(f.values[1], 1);
    assert_eq!(f.zero, BigRational::new(1.into(), 4.into()));
}

#[test]
fn ideal_counts_at_primes() {
    for d in [3u64, 4, 7, 8, 23, 47] {
        let f = ideal_count(d, 400).unwrap();
        assert_eq!(f.values, brute::ideal_trial(d, 400));
        for p in (2..400u64).filter(|&p| (2..p).all(|q| p % q != 0)) {
            if d % p != 0 {
                assert_eq!(f.values[p as usize], 1 + kronecker(-(d as i64), p) as i128);
            }
        }
    }
    assert!(ideal_count(12, 10).is_err());
}

#[test]
fn class_numbers_match_analytic_formula() {
    for d in (3..400).filter(|&d| is_fundamental(d)) {
        let fc = field_constants(d).unwrap();
        assert_eq!(fc.class_number as i64, brute::class_number_formula(d), "D = {d}");
        assert!(fc.class_number >= 1);
    }
    let f = |d| {
        let c = field_constants(d).unwrap();
        (c.class_number, c.roots_of_unity, c.regulator)
    };
    assert_eq!(f(4), (1, 4, 1));
    assert_eq!(f(3), (1, 6, 1));
    assert_eq!(f(23), (3, 2, 1));
}

#[test]
fn character_axioms_and_gauss_sums() {
    for q in 3..=100u64 {
        for chi in primitive_characters(q).unwrap() {
            assert_eq!(chi.value(1).re, 1.0);
            let total: num::complex::Complex64 = (1..=q).map(|n| chi.value(n)).sum();
            assert!(total.norm() < 1e-12, "q = {q}");
            for m in 0..q {
                assert_eq!(chi.value(m).norm() == 0.0, gcd(m, q) != 1);
                for n in 0..q {
                    assert!((chi.value(m * n) - chi.value(m) * chi.value(n)).norm() < 1e-12);
                }
            }
            let minus = chi.value(q - 1).re;
            assert_eq!(minus, if chi.parity == Parity::Even { 1.0 } else { -1.0 });
            let g = gauss_sum(&chi).unwrap();
            assert!((g.norm() - (q as f64).sqrt()).abs() < 1e-10, "q = {q}");
        }
    }
}

#[test]
fn small_moduli() {
    let all5 = all_characters(5).unwrap();
    assert_eq!(all5.len(), 4);
    assert_eq!(all5.iter().filter(|c| c.parity == Parity::Even).count(), 2);
    // the principal character mod 5 is induced from modulus 1
    let p5 = primitive_characters(5).unwrap();
    assert_eq!(p5.len(), 3);
    assert_eq!(p5.iter().filter(|c| c.parity == Parity::Even).count(), 1);
    let g3 = gauss_sum(&primitive_characters(3).unwrap()[0]).unwrap();
    assert!((g3.im - 3f64.sqrt()).abs() < 1e-14 && g3.re.abs() < 1e-14);
    // primitive counts: multiplicative with p ↦ p−2 and p^e ↦ p^{e−2}(p−1)² for e ≥ 2
    let counts: Vec<usize> = [8u64, 9, 12, 15, 16].iter().map(|&q| primitive_characters(q).unwrap().len()).collect();
    assert_eq!(counts, vec![2, 4, 1, 3, 4]);
    assert!(primitive_characters(101).is_err());
}

#[test]
fn bernoulli_values_and_euler_formula() {
    assert_eq!(bernoulli(2).unwrap(), BigRational::new(1.into(), 6.into()));
    assert_eq!(bernoulli(12).unwrap(), BigRational::new((-691).into(), 2730.into()));
    // ζ(2n) = (−1)^{n+1}(2π)^{2n}B_{2n}/(2(2n)!)
    let mut fact = 1.0;
    for n in 1..=6u32 {
        fact *= ((2 * n - 1) * (2 * n)) as f64;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let from_b = sign * (2.0 * PI).powi(2 * n as i32) * bernoulli_f64(2 * n).unwrap() / (2.0 * fact);
        let direct = zeta(2.0 * n as f64).unwrap().value;
        assert!((from_b - direct).abs() < 1e-14 * direct, "n = {n}");
    }
    assert!((bernoulli_f64(2).unwrap() * 4.0 * PI * PI / 4.0 - PI * PI / 6.0).abs() < 1e-15);
}

#[test]
fn kronecker_examples() {
    assert_eq!(kronecker(-4, 5), 1);
    assert_eq!(kronecker(-4, 2), 0);
    assert_eq!(kronecker(17, 1), 1);
}

fn legendre_euler(a: i64, p: u64) -> i32 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let mut r = 1u64;
    let (mut b, mut e) = (a, (p - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 { 1 } else { -1 }
}

proptest! {
    #[test]
    fn kronecker_matches_euler_criterion(a in -500i64..500, idx in 0usize..20) {
        let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73];
        let p = primes[idx];
        prop_assert_eq!(kronecker(a, p), legendre_euler(a, p));
    }

    #[test]
    fn kronecker_is_multiplicative_in_the_bottom(a in -200i64..200, m in 1u64..200, n in 1u64..200) {
        prop_assert_eq!(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
    }

    #[test]
    fn r2_is_four_times_ideal_count(n in 1usize..2000) {
        let r2 = r_k(2, n).unwrap();
        let f = ideal_count(4, n).unwrap();
        prop_assert_eq!(r2.values[n], 4 * f.values[n]);
    }
}
