use hecke_bessel::quad::{
    integrate, integrate_detailed, table_integral_draws, verify_table_integral, Decay, DecayingIntegrand, Envelope,
    TableIntegral, TableParams,
};
use hecke_bessel::specfun::{bessel_k, k_upper_bound, BesselArgs};
use hecke_bessel::Error;
use std::f64::consts::PI;

fn k(nu: f64, z: f64) -> f64 {
    bessel_k(BesselArgs::new(nu, z).unwrap()).unwrap().value
}

// Both sides frozen by mpmath adaptive quadrature at 30 digits.
#[test]
fn watson1_example_matches_direct_quadrature() {
    let p = TableParams { a: 2.0, z: 1.0, mu: 0.5, nu: 1.2, ..Default::default() };
    let r = verify_table_integral(TableIntegral::Watson1, &p, 1e-8).unwrap();
    assert!(r.pass, "{r:?}");
    assert!((r.lhs.value - 0.051_417_545_507_687_140).abs() < 1e-9);
    assert!((r.rhs.value - 0.051_417_545_507_687_140).abs() < 1e-12);
}

#[test]
fn gr6576_example_matches_direct_quadrature() {
    let p = TableParams { lambda: 0.0, nu: 0.4, a: 3.0, b: 1.0, ..Default::default() };
    let r = verify_table_integral(TableIntegral::Gr6576, &p, 1e-8).unwrap();
    assert!(r.pass, "{r:?}");
    assert!((r.lhs.value - 0.238_046_221_274_655_22).abs() < 1e-9);
    assert!((r.rhs.value - 0.238_046_221_274_655_22).abs() < 1e-12);
}

#[test]
fn hankel_point_matches_direct_quadrature() {
    let p = TableParams { a: 1.5, b: 0.8, z: 0.7, mu: 0.6, nu: 1.3, ..Default::default() };
    let r = verify_table_integral(TableIntegral::Hankel, &p, 1e-8).unwrap();
    assert!(r.pass, "{r:?}");
    assert!((r.rhs.value - 0.131_465_615_327_293_11).abs() < 1e-12);
}

#[test]
fn kosh_fock_point_matches_direct_quadrature() {
    let p = TableParams { xi: 1.3, z: 1.2, w: 0.5, mu: 0.4, nu: 0.7, ..Default::default() };
    let r = verify_table_integral(TableIntegral::KoshFock, &p, 1e-8).unwrap();
    assert!(r.pass, "{r:?}");
    assert!((r.rhs.value - 0.009_523_320_390_652_126_6).abs() < 1e-12);
}

#[test]
fn kosh_fock_degenerate_point_vanishes() {
    let p = TableParams { xi: 1.0, z: 1.0, w: 1.0, mu: 0.3, nu: 0.8, ..Default::default() };
    let r = verify_table_integral(TableIntegral::KoshFock, &p, 1e-7).unwrap();
    assert!(r.pass, "{r:?}");
    assert!(r.rhs.value.abs() < 1e-15 && r.lhs.value.abs() < 1e-7);
}

#[test]
fn hypothesis_violations_name_the_inequality() {
    let p = TableParams { lambda: 0.0, nu: 0.4, a: 1.0, b: 3.0, ..Default::default() };
    match verify_table_integral(TableIntegral::Gr6576, &p, 1e-8) {
        Err(Error::Domain(m)) => assert!(m.contains("a > b"), "{m}"),
        other => panic!("{other:?}"),
    }
    let p = TableParams { a: 2.0, z: 1.0, mu: -1.5, nu: 1.0, ..Default::default() };
    match verify_table_integral(TableIntegral::Watson1, &p, 1e-8) {
        Err(Error::Domain(m)) => assert!(m.contains("μ > −1"), "{m}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn ids_round_trip() {
    for t in TableIntegral::ALL {
        assert_eq!(t.id().parse::<TableIntegral>().unwrap(), t);
    }
    assert!("NOPE".parse::<TableIntegral>().is_err());
}

#[test]
fn random_draws_agree_within_1e_7() {
    for t in TableIntegral::ALL {
        let draws = table_integral_draws(t, 20, 7);
        assert_eq!(draws, table_integral_draws(t, 20, 7));
        for p in draws {
            let r = verify_table_integral(t, &p, 1e-7).unwrap();
            assert!(r.pass, "{} {:?}: diff {:e}", t.id(), p, r.abs_diff);
        }
    }
}

/// weight·x^power·(c²+x)^{−ν/2}·K_ν(4πr√(c²+x)) with ν ≥ 0.
fn kernel_integrand(nu: f64, c: f64, r: f64, weight: f64, power: f64) -> (impl Fn(f64) -> f64 + Sync, Envelope) {
    let rate = 4.0 * PI * r;
    let f = move |x: f64| weight * x.powf(power) * (c * c + x).powf(-nu / 2.0) * k(nu, rate * (c * c + x).sqrt());
    let t0: f64 = 4.0;
    let env = Envelope {
        coef: weight * k_upper_bound(nu, rate * t0.sqrt()),
        power: power - nu / 2.0,
        kappa: rate,
        decay: Decay::SqrtExp,
        t0,
    };
    (f, env)
}

#[test]
fn exp_sqrt_integrates_to_two() {
    let f = |t: f64| (-t.sqrt()).exp();
    let env = Envelope { coef: 1.0, power: 0.0, kappa: 1.0, decay: Decay::SqrtExp, t0: 1.0 };
    let v = integrate(&DecayingIntegrand { f: &f, lower: 0.0, envelope: env }, 1e-10).unwrap();
    assert!((v.value - 2.0).abs() < 1e-10);
    assert!(v.abs_error <= 1e-10);
}

#[test]
fn kernel_integral_with_zero_weight() {
    let (nu, c, r) = (0.7, 1.0, 0.5);
    let (f, env) = kernel_integrand(nu, c, r, 1.0, 0.0);
    let v = integrate(&DecayingIntegrand { f: &f, lower: 0.0, envelope: env }, 1e-12).unwrap();
    let closed = c.powf(1.0 - nu) * k(nu - 1.0, 4.0 * PI * r * c) / (2.0 * PI * r);
    assert!((closed - 0.000_293_710_464_603_995_75).abs() < 1e-15);
    assert!((v.value - closed).abs() < 1e-12);
}

#[test]
fn kernel_integral_with_power_weight() {
    // k = 2: weight (2πx)^{k/2}/Γ(1 + k/2) = 2πx
    let (nu, c, r, kk) = (0.7, 1.0, 0.5, 2.0);
    let (f, env) = kernel_integrand(nu, c, r, 2.0 * PI, 1.0);
    let v = integrate(&DecayingIntegrand { f: &f, lower: 0.0, envelope: env }, 1e-12).unwrap();
    let closed = k(nu - kk / 2.0 - 1.0, 4.0 * PI * r * c) / (2.0 * PI * r.powf(kk / 2.0 + 1.0) * c.powf(nu - kk / 2.0 - 1.0));
    assert!((closed - 0.000_661_177_288_022_556_68).abs() < 1e-15);
    assert!((v.value - closed).abs() < 1e-12);
}

#[test]
fn error_estimate_covers_refinement_and_shrinks() {
    let cases: Vec<TableParams> = vec![
        TableParams { a: 2.0, z: 1.0, mu: 0.5, nu: 1.2, ..Default::default() },
        TableParams { a: 0.7, z: 0.4, mu: -0.4, nu: -1.5, ..Default::default() },
    ];
    for p in cases {
        let nu = p.nu;
        let f = move |t: f64| {
            let s = t * t + p.z * p.z;
            k(nu, p.a * s.sqrt()) * s.powf(-nu / 2.0) * t.powf(2.0 * p.mu + 1.0)
        };
        let t0 = (8.0 / p.a).max((nu.abs() + 1.0) / p.a);
        let grow = if nu < 0.0 { (1.0 + p.z * p.z / (t0 * t0)).powf(-nu / 2.0) } else { 1.0 };
        let env = Envelope {
            coef: k_upper_bound(nu, p.a * t0) * grow,
            power: 2.0 * p.mu + 1.0 - nu,
            kappa: p.a,
            decay: Decay::Exp,
            t0,
        };
        let integrand = DecayingIntegrand { f: &f, lower: 0.0, envelope: env };
        let mut prev_err = f64::INFINITY;
        for tol in [1e-6, 1e-8, 1e-10] {
            let coarse = integrate_detailed(&integrand, tol).unwrap();
            let fine = integrate_detailed(&integrand, tol / 4.0).unwrap();
            let half = integrate_detailed(&integrand, tol / 2.0).unwrap();
            assert!(coarse.value.abs_error <= tol);
            assert!(coarse.value.abs_error >= (coarse.value.value - fine.value.value).abs());
            assert!(half.value.abs_error <= tol / 2.0);
            assert!(fine.cutoff >= coarse.cutoff);
            assert!(coarse.value.abs_error <= prev_err);
            prev_err = coarse.value.abs_error;
        }
    }
}
