//! Special functions against independent oracles: reference values computed
//! offline at 30 digits, the two-I-series formula for K, brute-force series.

use hecke_bessel::specfun::*;
use proptest::prelude::*;
use std::f64::consts::PI;

fn args(nu: f64, z: f64) -> BesselArgs {
    BesselArgs::new(nu, z).unwrap()
}

fn rel(x: f64, y: f64) -> f64 {
    if y == 0.0 {
        x.abs()
    } else {
        ((x - y) / y).abs()
    }
}

const K_SCALED: &[(f64, f64, f64)] = &[
    (0.0, 0.01, 4.7686940285444618845),
    (0.0, 1.5, 0.95821005329489649642),
    (0.0, 2.0, 0.84156821507077141792),
    (0.0, 2.5, 0.75954869032809957869),
    (0.3, 0.7, 1.388608330718191209),
    (0.3, 19.0, 0.28635201356868360534),
    (1.0, 0.2, 5.8333860371867254529),
    (1.0, 5.0, 0.60027385878831258294),
    (2.0, 2.0, 1.8750450621394599911),
    (2.5, 30.0, 0.252467831731589614),
    (3.7, 0.05, 1855282.7357412571407),
    (7.2, 9.0, 5.7492018218451994995),
    (12.5, 3.0, 7124207.9009786254659),
    (13.0, 45.0, 1.1795636699479868282),
    (-1.3, 4.4, 0.69257628094855187773),
    (0.5, 700.0, 0.04737082174254673015),
];
const I_SCALED: &[(f64, f64, f64)] = &[
    (0.0, 0.01, 0.9900745851497074988),
    (0.0, 10.0, 0.12783333716342860732),
    (0.3, 18.0, 0.09446283641113046016),
    (0.3, 18.5, 0.093165704133866276232),
    (1.0, 40.0, 0.062482229074442060748),
    (2.5, 2.0, 0.05373177234326974211),
    (-0.3, 1.0, 0.48297966896979102592),
    (-0.3, 25.0, 0.080049535607446801074),
    (-1.5, 3.0, 0.15279171587612459967),
    (-2.7, 0.4, 20.096508058639127548),
    (7.2, 9.0, 0.0075415343301838651974),
    (13.0, 50.0, 0.010360123755258201743),
    (0.7, 300.0, 0.023023716564655930174),
];
const J_VALUES: &[(f64, f64, f64)] = &[
    (0.0, 0.5, 0.93846980724081290423),
    (0.0, 1e-12, 1.0),
    (0.5, 2.0, 0.51301613656182775167),
    (2.0, 3.7, 0.42832965620657586556),
    (1.0, 10.0, 0.04347274616886143667),
    (3.3, 24.0, 0.13534452852986448789),
    (3.3, 26.0, 0.028843249977060333695),
    (0.25, 100.0, -0.01107092754464982669),
    (3.0, 5000.0, 0.0091227219834774897902),
    (-0.4, 7.5, 0.1439513481775291284),
    (-0.4, 1.5, 0.16263140571961608042),
    (5.5, 30.0, -0.089606490265068614412),
    (12.0, 40.0, -0.12697799611784806361),
];
const HYP: &[(f64, f64, f64, f64, f64)] = &[
    (0.3, 0.7, 1.9, 0.5, 1.0699323854033741106),
    (1.5, 0.5, 2.3, 0.9, 1.7952988821421452727),
    (-10.5, -11.5, 2.3, 0.3, 415.04107979272500103),
    (3.8, 0.5, 4.8, 0.95, 2.367388751685052584),
    (0.7, -3.2, 1.7, 0.8, 0.3984368237509195141),
    (13.5, 12.5, 2.5, 0.01, 1.89918634751018187),
];
const ELLIPTIC: &[(f64, f64)] = &[
    (0.1, 1.5747455615173559531),
    (0.6, 1.7507538029157525118),
    (0.9, 2.2805491384227703005),
    (0.999, 4.4955963958421437279),
];

#[test]
fn k_matches_reference_values() {
    for &(nu, z, want) in K_SCALED {
        let got = bessel_k_scaled(args(nu, z)).unwrap();
        assert!(rel(got.value, want) < 2e-14, "K_{nu}({z}): {} vs {want}", got.value);
    }
}

#[test]
fn i_matches_reference_values() {
    for &(nu, z, want) in I_SCALED {
        let got = bessel_i_scaled(args(nu, z)).unwrap();
        assert!(rel(got.value, want) < 2e-14, "I_{nu}({z}): {} vs {want}", got.value);
    }
}

#[test]
fn j_matches_reference_values() {
    for &(nu, z, want) in J_VALUES {
        let got = bessel_j(args(nu, z)).unwrap();
        let tol = 1e-13 * (1.0 + z.sqrt());
        assert!((got.value - want).abs() < tol.max(got.abs_error), "J_{nu}({z}): {} vs {want}", got.value);
    }
}

#[test]
fn hyp2f1_matches_reference_values() {
    for &(a, b, c, x, want) in HYP {
        let got = hyp2f1(a, b, c, x).unwrap();
        assert!(rel(got.value, want) < 1e-13, "2F1({a},{b};{c};{x}): {} vs {want}", got.value);
    }
}

#[test]
fn elliptic_matches_reference_values() {
    for &(k, want) in ELLIPTIC {
        assert!(rel(elliptic_k(k).unwrap().value, want) < 1e-14);
    }
}

/// Σ (z/2)^{ν+2k}/(k!Γ(ν+k+1)) summed directly, 60 terms.
fn i_power_series(nu: f64, z: f64) -> f64 {
    (0..60)
        .map(|k| {
            let k = k as f64;
            (0.5 * z).powf(nu + 2.0 * k) * rgamma(k + 1.0) * rgamma(nu + k + 1.0)
        })
        .sum()
}

/// K_ν = (π/2)(I_{−ν} − I_ν)/sin(νπ) for non-integer ν.
fn k_from_two_i_series(nu: f64, z: f64) -> f64 {
    PI / 2.0 * (i_power_series(-nu, z) - i_power_series(nu, z)) / (nu * PI).sin()
}

#[test]
fn k_matches_two_i_series_formula_at_small_argument() {
    for &nu in &[0.2, 0.45, 0.8, 1.3, 2.6] {
        for &z in &[0.05, 0.4, 1.0, 1.9, 3.0] {
            let want = k_from_two_i_series(nu, z);
            let got = bessel_k(args(nu, z)).unwrap().value;
            assert!(rel(got, want) < 1e-11, "nu={nu} z={z}: {got} vs {want}");
        }
    }
}

#[test]
fn integer_order_k_matches_offset_richardson() {
    // average of the two-series formula at n ± ε, extrapolated in ε²
    for &n in &[0.0, 1.0, 2.0] {
        for &z in &[0.3, 1.0, 2.2] {
            let avg = |e: f64| 0.5 * (k_from_two_i_series(n + e, z) + k_from_two_i_series(n - e, z));
            let (e1, e2) = (1e-3, 5e-4);
            let extrap = (4.0 * avg(e2) - avg(e1)) / 3.0;
            let got = bessel_k(args(n, z)).unwrap().value;
            assert!(rel(got, extrap) < 1e-8, "n={n} z={z}: {got} vs {extrap}");
        }
    }
}

#[test]
fn j_matches_defining_series() {
    let series = |nu: f64, z: f64| -> f64 {
        (0..40)
            .map(|k| {
                let kf = k as f64;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * (0.5 * z).powf(nu + 2.0 * kf) * rgamma(kf + 1.0) * rgamma(nu + kf + 1.0)
            })
            .sum()
    };
    assert!((bessel_j(args(2.0, 3.7)).unwrap().value - series(2.0, 3.7)).abs() < 1e-14);
    assert!((bessel_j(args(0.0, 1e-12)).unwrap().value - 1.0).abs() < 1e-12);
    let half = (2.0 / (PI * 2.0)).sqrt() * 2f64.sin();
    assert!(rel(bessel_j(args(0.5, 2.0)).unwrap().value, half) < 1e-14);
    assert!(rel(series(0.5, 2.0), half) < 1e-14);
}

#[test]
fn specified_examples() {
    assert!(rel(bessel_i(args(0.5, 2.0)).unwrap().value, (1.0 / PI).sqrt() * 2f64.sinh()) < 1e-14);
    assert!(bessel_i(args(3.0, 1e-8)).unwrap().value.abs() < 1e-20);
    let i0 = bessel_i(args(0.0, 10.0)).unwrap().value * (2.0 * PI * 10.0).sqrt() * (-10f64).exp();
    assert!((i0 - 1.0).abs() < 0.02);
    assert!(rel(bessel_k(args(0.5, 1.0)).unwrap().value, (PI / 2.0).sqrt() * (-1f64).exp()) < 1e-14);
    assert_eq!(bessel_k(args(-0.3, 2.0)).unwrap(), bessel_k(args(0.3, 2.0)).unwrap());
    let lim = 1e-6f64.powf(0.7) * bessel_k(args(0.7, 1e-6)).unwrap().value;
    assert!((lim - 2f64.powf(-0.3) * gamma(0.7).unwrap().value).abs() < 1e-5);
    let p = ik_product(0.5, 1.0, 3.0).unwrap().value;
    // I_{1/2}(1) = √(2/π)·sinh 1, K_{1/2}(3) = √(π/6)·e^{−3}
    let want = (2.0 / PI).sqrt() * 1f64.sinh() * (PI / 6.0).sqrt() * (-3f64).exp();
    assert!(rel(p, want) < 1e-14);
    let big = ik_product(0.0, 200.0, 300.0).unwrap().value;
    let asym = (-100f64).exp() / (2.0 * (200.0f64 * 300.0).sqrt());
    assert!((big / asym - 1.0).abs() < 0.02);
}

#[test]
fn ik_product_small_argument_limit() {
    let (al, be, nu): (f64, f64, f64) = (3.0, 1.0, 0.4);
    let want = ((al.sqrt() - be.sqrt()) / (al.sqrt() + be.sqrt())).powf(nu + 1.0) / (2.0 * (nu + 1.0));
    let t = 1e-7;
    let got = ik_product(nu + 1.0, PI * t * (al.sqrt() - be.sqrt()), PI * t * (al.sqrt() + be.sqrt()))
        .unwrap()
        .value;
    assert!(rel(got, want) < 1e-9);
}

#[test]
fn ik_product_dt_matches_finite_difference() {
    let (nu, a, b, t) = (0.3, 1.0, 2.0, 1.7);
    let f = |t: f64| ik_product(nu + 1.0, a * t.sqrt(), b * t.sqrt()).unwrap().value;
    let h = 1e-5 * t;
    let fd = (f(t + h) - f(t - h)) / (2.0 * h);
    let got = ik_product_dt(nu, a, b, t).unwrap().value;
    assert!(rel(got, fd) < 1e-6, "{got} vs {fd}");
}

#[test]
fn ik_product_dt_half_integer_closed_form() {
    // ν = −1/2: I_{1/2}(x)K_{1/2}(y) = sinh(x)e^{−y}/√(xy) with x = A√t, y = B√t
    let (a, b) = (0.8, 2.5);
    for &t in &[0.3, 1.0, 4.0] {
        let s: f64 = f64::sqrt(t);
        let (x, y) = (a * s, b * s);
        // g(t) = sinh(A√t) e^{−B√t} / (√(AB) √t)
        let dg = ((a / (2.0 * s)) * x.cosh() * (-y).exp() - (b / (2.0 * s)) * x.sinh() * (-y).exp())
            / ((a * b).sqrt() * s)
            - x.sinh() * (-y).exp() / (2.0 * (a * b).sqrt() * t * s);
        let got = ik_product_dt(-0.5, a, b, t).unwrap().value;
        assert!(rel(got, dg) < 1e-12, "t={t}: {got} vs {dg}");
    }
}

#[test]
fn elliptic_matches_quadrature_of_definition() {
    let k: f64 = 0.6;
    let n = 2000;
    let h = (PI / 2.0) / n as f64;
    let f = |th: f64| 1.0 / (1.0 - k * k * th.sin().powi(2)).sqrt();
    let mut s = f(0.0) + f(PI / 2.0);
    for i in 1..n {
        s += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
    }
    let simpson = s * h / 3.0;
    assert!((elliptic_k(k).unwrap().value - simpson).abs() < 1e-10);
    for &x in &[0.0, 0.3, 0.9] {
        let lhs = 2.0 / PI * elliptic_k(x).unwrap().value;
        let rhs = hyp2f1(0.5, 0.5, 1.0, x * x).unwrap().value;
        assert!(rel(lhs, rhs) < 1e-13);
    }
}

#[test]
fn gamma_twenty_five_halves() {
    let mut dfact = 1.0;
    let mut k = 1.0;
    while k <= 23.0 {
        dfact *= k;
        k += 2.0;
    }
    assert!(rel(gamma(12.5).unwrap().value, dfact / 4096.0 * PI.sqrt()) < 1e-13);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn wronskian(nu in -2.0f64..13.0, z in 0.1f64..50.0) {
        let i0 = bessel_i_scaled(args(nu, z)).unwrap().value;
        let i1 = bessel_i_scaled(args(nu + 1.0, z)).unwrap().value;
        let k0 = bessel_k_scaled(args(nu, z)).unwrap().value;
        let k1 = bessel_k_scaled(args(nu + 1.0, z)).unwrap().value;
        let w = z * (i0 * k1 + i1 * k0);
        prop_assert!((w - 1.0).abs() < 1e-10, "nu={} z={} w={}", nu, z, w);
    }

    #[test]
    fn k_is_even_in_order(nu in 0.0f64..10.0, z in 0.05f64..80.0) {
        prop_assert_eq!(bessel_k(args(nu, z)).unwrap(), bessel_k(args(-nu, z)).unwrap());
    }

    #[test]
    fn euler_transformation(a in -3.0f64..3.0, b in -3.0f64..3.0, c in 0.2f64..4.0, x in 0.0f64..0.9) {
        let lhs = hyp2f1(a, b, c, x).unwrap().value;
        let rhs = (1.0 - x).powf(c - a - b) * hyp2f1(c - a, c - b, c, x).unwrap().value;
        prop_assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn half_integer_closed_forms(z in 0.1f64..100.0) {
        let i = bessel_i_scaled(args(0.5, z)).unwrap().value;
        let want_i = (2.0 / (PI * z)).sqrt() * 0.5 * (1.0 - (-2.0 * z).exp());
        prop_assert!(rel(i, want_i) < 1e-12);
        let k = bessel_k_scaled(args(0.5, z)).unwrap().value;
        prop_assert!(rel(k, (PI / (2.0 * z)).sqrt()) < 1e-12);
    }

    #[test]
    fn gamma_recurrence(x in -20.0f64..48.0) {
        prop_assume!((x - x.round()).abs() > 1e-3);
        let g = gamma(x).unwrap().value;
        let g1 = gamma(x + 1.0).unwrap().value;
        prop_assert!(rel(g1, x * g) < 1e-13);
    }
}
