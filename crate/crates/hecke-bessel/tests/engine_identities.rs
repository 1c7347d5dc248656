use hecke_bessel::engine::{
    eval_first_theorem_general, eval_identity, eval_modular_relation, eval_riesz_identity,
    eval_second_theorem_general, riesz_lhs, run_suite, suite_cases, try_eval_identity, Budget, EvalOptions,
    IdentityCase, IdentityId, IdentityParams, Variant,
};
use hecke_bessel::hecke::{self, Family, HeckeSystem, SystemParams};
use hecke_bessel::specfun::{bessel_k, BesselArgs, EULER_GAMMA};
use proptest::prelude::*;
use std::f64::consts::PI;

fn system(family: Family, params: SystemParams) -> HeckeSystem {
    hecke::catalog(family, params, 4096).unwrap()
}

fn case(id: IdentityId, variant: Variant, params: IdentityParams, tol: f64) -> IdentityCase {
    IdentityCase { id, variant, params, tol }
}

#[test]
fn rk_k_self_dual_point_agrees_to_rounding() {
    let variant = Variant::system(Family::Rk, SystemParams::with_k(2), (0.5, 0.5));
    let p = IdentityParams { nu: 0.5, c: 1.0, r: 1.0, ..Default::default() };
    let rep = eval_identity(&case(IdentityId::RkK, variant, p, 1e-13), &EvalOptions::default());
    assert!(rep.pass, "{rep:?}");
    assert!(rep.abs_diff < 1e-13, "{}", rep.abs_diff);
}

#[test]
fn guinand_vanishes_at_symmetric_point() {
    let mut variant = Variant::plain("s=0");
    variant.fixed_s = Some(0.0);
    let p = IdentityParams { s: 0.0, alpha: PI, beta: PI, ..Default::default() };
    let rep = eval_identity(&case(IdentityId::Guinand, variant, p, 1e-12), &EvalOptions::default());
    assert!(rep.error.is_none(), "{rep:?}");
    assert!(rep.abs_diff < 1e-12);
    assert!(rep.lhs.value.abs() < 1e-12 && rep.rhs.value.abs() < 1e-12);
}

#[test]
fn watson_k0_at_beta_one_matches_direct_sums() {
    let p = IdentityParams { beta: 1.0, ..Default::default() };
    let rep = eval_identity(&case(IdentityId::WatsonK0, Variant::plain("plain"), p, 1e-10), &EvalOptions::default());
    assert!(rep.pass && rep.abs_diff < 1e-10, "{rep:?}");
    // independent brute-force sums of both sides
    let lhs: f64 = (1..60).map(|n| 2.0 * bessel_k(BesselArgs::new(0.0, n as f64).unwrap()).unwrap().value).sum();
    let mut rhs_series = 0.0;
    for n in 1..2_000_000u64 {
        let m = 2.0 * PI * n as f64;
        rhs_series += 1.0 / (1.0 + m * m).sqrt() - 1.0 / m;
    }
    let rhs = PI * (1.0 + 2.0 * rhs_series) + EULER_GAMMA + 0.5f64.ln() - (2.0 * PI).ln();
    assert!((rep.lhs.value - lhs).abs() < 1e-10);
    assert!((rep.rhs.value - rhs).abs() < 1e-7);
}

#[test]
fn modular_relation_examples() {
    let rk2 = system(Family::Rk, SystemParams::with_k(2));
    let self_dual = eval_modular_relation(&rk2, 2.0 * PI, 1e-13).unwrap();
    assert!(self_dual.abs_diff < 1e-12, "{self_dual:?}");
    let rk4 = system(Family::Rk, SystemParams::with_k(4));
    let r = eval_modular_relation(&rk4, 3.0, 1e-12).unwrap();
    assert!(r.pass && r.abs_diff < 1e-10, "{r:?}");
    let tau = system(Family::Tau, SystemParams::default());
    let r = eval_modular_relation(&tau, 1.0, 1e-12).unwrap();
    assert!(r.pass && r.abs_diff < 1e-10, "{r:?}");
}

#[test]
fn riesz_sum_counts_half_weight_at_the_boundary() {
    // λ_n = n/2 for sums of two squares; x = 1 = λ_2, r₂(1) = r₂(2) = 4
    let rk2 = system(Family::Rk, SystemParams::with_k(2));
    let v = riesz_lhs(&rk2, 1.0, 0.0).unwrap();
    assert_eq!(v.re, 6.0);
    assert_eq!(riesz_lhs(&rk2, 0.3, 2.0).unwrap().re, 0.0);
}

#[test]
fn riesz_identity_below_first_eigenvalue_cancels_residual() {
    let rk2 = system(Family::Rk, SystemParams::with_k(2));
    let r = eval_riesz_identity(&rk2, 0.3, 2.0, 1e-4, Budget::Fixed(200_000)).unwrap();
    assert_eq!(r.lhs.value, 0.0);
    assert!(r.abs_diff < 1e-4, "{r:?}");
}

#[test]
fn first_general_examples() {
    let tau = system(Family::Tau, SystemParams::default());
    let r = eval_first_theorem_general(&tau, 0.5, 1.0, 1.0, 0.5, 1e-9).unwrap();
    assert!(r.abs_diff < 1e-7, "{r:?}");
    let rk2 = system(Family::Rk, SystemParams::with_k(2));
    let r = eval_first_theorem_general(&rk2, 0.0, 0.7, 0.9, 1.0, 1e-9).unwrap();
    assert!(r.abs_diff < 1e-7, "{r:?}");
}

#[test]
fn first_general_at_rho_zero_matches_t1() {
    let rk2 = system(Family::Rk, SystemParams::with_k(2));
    let general = eval_first_theorem_general(&rk2, 0.6, 1.0, 0.8, 0.0, 1e-11).unwrap();
    let variant = Variant::system(Family::Rk, SystemParams::with_k(2), (0.6, 0.6));
    let p = IdentityParams { nu: 0.6, c: 1.0, r: 0.8, ..Default::default() };
    let t1 = eval_identity(&case(IdentityId::T1, variant, p, 1e-11), &EvalOptions::default());
    assert!(t1.pass, "{t1:?}");
    assert!((general.lhs.value - t1.lhs.value).abs() < 1e-9);
    assert!((general.rhs.value - t1.rhs.value).abs() < 1e-9);
}

#[test]
fn second_general_at_rho_zero_matches_t2() {
    let tau = system(Family::Tau, SystemParams::default());
    let general = eval_second_theorem_general(&tau, 0.0, 4.0, 1.0, 0.0, 1e-11).unwrap();
    let variant = Variant::system(Family::Tau, SystemParams::default(), (0.0, 0.0));
    let p = IdentityParams { nu: 0.0, alpha: 4.0, beta: 1.0, ..Default::default() };
    let t2 = eval_identity(&case(IdentityId::T2, variant, p, 1e-11), &EvalOptions::default());
    assert!(t2.pass, "{t2:?}");
    // at ρ = 0 the Riesz-weighted integral of d/dt(I·K) over (λ, ∞) is −I·K(λ)
    assert!((general.lhs.value + t2.lhs.value).abs() < 1e-8);
    assert!((general.rhs.value + t2.rhs.value).abs() < 1e-8);
}

#[test]
fn second_general_character_example() {
    let chi = system(Family::ChiOdd, SystemParams::with_q(4));
    let r = eval_second_theorem_general(&chi, 0.3, 3.0, 1.0, 0.5, 1e-8).unwrap();
    assert!(r.abs_diff < 1e-6, "{r:?}");
}

#[test]
fn second_general_residual_term_sign_matters() {
    // Q₀(0) = −1 for sums of two squares; negating −Q₀(0)/(2(ν+1))·s₀^{ν+1} must break the identity
    let rk2 = system(Family::Rk, SystemParams::with_k(2));
    let (nu, alpha, beta) = (0.3, 3.0, 1.0);
    // the dual series decays like N^{−1.3} here, so only a coarse tolerance is reachable
    let r = eval_second_theorem_general(&rk2, nu, alpha, beta, 0.0, 1e-4).unwrap();
    assert!(r.pass, "{r:?}");
    let s0 = (alpha.sqrt() - beta.sqrt()) / (alpha.sqrt() + beta.sqrt());
    let term = 1.0 / (2.0 * (nu + 1.0)) * s0.powf(nu + 1.0);
    let flipped = r.rhs.value - 2.0 * term;
    assert!((flipped - r.lhs.value).abs() > 1e-3);
}

#[test]
fn suite_counts_and_empty_filter() {
    assert_eq!(suite_cases("TAU-*", 5, 1, 1e-8).len(), 4 * 5);
    assert!(run_suite("NOPE", 3, 0, 1e-7, &EvalOptions::default()).is_empty());
}

#[test]
fn suite_is_deterministic_for_a_seed() {
    let a = suite_cases("*", 2, 11, 1e-7);
    let b = suite_cases("*", 2, 11, 1e-7);
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.id, y.id);
        assert_eq!(x.params, y.params);
    }
}

#[test]
fn sides_are_evaluated_independently() {
    for c in suite_cases("*", 1, 5, 1e-7) {
        let base = try_eval_identity(&c, &EvalOptions::default(), None).unwrap();
        let tight_lhs = EvalOptions { lhs_tol_scale: 1e-2, ..Default::default() };
        let changed = try_eval_identity(&c, &tight_lhs, None).unwrap();
        assert_eq!(base.rhs.value.to_bits(), changed.rhs.value.to_bits(), "{}", c.id);
        let tight_rhs = EvalOptions { rhs_tol_scale: 1e-2, ..Default::default() };
        let changed = try_eval_identity(&c, &tight_rhs, None).unwrap();
        assert_eq!(base.lhs.value.to_bits(), changed.lhs.value.to_bits(), "{}", c.id);
    }
}

#[test]
fn hypothesis_violations_are_reported() {
    let variant = Variant::system(Family::Tau, SystemParams::default(), (0.0, 0.0));
    let p = IdentityParams { nu: 0.0, alpha: 1.0, beta: 2.0, ..Default::default() };
    let rep = eval_identity(&case(IdentityId::T2, variant, p, 1e-7), &EvalOptions::default());
    assert!(!rep.pass);
    assert!(rep.error.unwrap().contains("hypothesis"));
}

#[test]
fn impossible_tolerance_fails() {
    let reps = run_suite("RK-K", 1, 0, 1e-30, &EvalOptions::default());
    assert!(!reps.is_empty());
    assert!(reps.iter().any(|r| !r.pass));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn modular_relation_holds_at_random_points(x in 0.3f64..8.0) {
        let rk4 = system(Family::Rk, SystemParams::with_k(4));
        let r = eval_modular_relation(&rk4, x, 1e-12).unwrap();
        prop_assert!(r.pass && r.abs_diff < 1e-10, "{:?}", r);
    }

    #[test]
    fn kernel_identities_hold_for_any_seed(seed in any::<u64>()) {
        for filter in ["RK-K", "TAU-K", "WATSON-*", "ZETA-LOG"] {
            for r in run_suite(filter, 1, seed, 1e-8, &EvalOptions::default()) {
                prop_assert!(r.pass, "{:?}", r);
            }
        }
    }
}
