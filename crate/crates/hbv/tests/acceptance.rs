//! Acceptance run: one PASS/FAIL line per criterion; exits non-zero if any fails.

use hecke_bessel::arith::oracle_checks;
use hecke_bessel::engine::{
    eval_first_theorem_general, eval_identity, eval_modular_relation, eval_riesz_identity,
    eval_second_theorem_general, limit_checks, run_suite, specfun_battery, Budget, EvalOptions, IdentityCase,
    IdentityId, IdentityParams, Variant,
};
use hecke_bessel::hecke::{self, Family, HeckeSystem, SystemParams};
use hecke_bessel::quad::run_table_integrals;
use hecke_bessel::VerificationReport;
use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

fn system(family: Family, params: SystemParams) -> HeckeSystem {
    hecke::catalog(family, params, 4096).expect("catalog system")
}

fn within(start: Instant, limit_s: u64) -> (bool, Duration) {
    let t = start.elapsed();
    (t <= Duration::from_secs(limit_s), t)
}

fn suite_outcome(reports: &[VerificationReport], start: Instant, limit_s: u64) -> Outcome {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} {:?} diff={:e} {:?}", r.id, r.params, r.abs_diff, r.error))
        .collect();
    let worst = reports.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    let (fast, t) = within(start, limit_s);
    Outcome {
        pass: failed.is_empty() && fast && !reports.is_empty(),
        detail: format!(
            "{}/{} reports pass, worst |diff| {worst:.2e}, {:.2?} (limit {limit_s} s){}",
            reports.len() - failed.len(),
            reports.len(),
            t,
            if failed.is_empty() { String::new() } else { format!("; failing: {}", failed.join(" | ")) }
        ),
    }
}

fn specfun_criterion() -> Outcome {
    let start = Instant::now();
    let checks = specfun_battery();
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    let (fast, t) = within(start, 10);
    Outcome {
        pass: failed.is_empty() && fast,
        detail: format!("{}/{} invariants within tolerance, {t:.2?}; failing: {failed:?}", checks.len() - failed.len(), checks.len()),
    }
}

fn integral_criterion() -> Outcome {
    let start = Instant::now();
    let reports = run_table_integrals(20, 2024, 1e-7);
    suite_outcome(&reports, start, 60)
}

fn arithmetic_criterion() -> Outcome {
    let checks = oracle_checks();
    let failed: Vec<String> = checks.iter().filter(|c| !c.pass).map(|c| format!("{} ({} mismatches)", c.name, c.mismatches)).collect();
    Outcome {
        pass: failed.is_empty(),
        detail: format!("{}/{} exact comparisons agree; failing: {failed:?}", checks.len() - failed.len(), checks.len()),
    }
}

fn modular_criterion() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut errors = Vec::new();
    let systems = [
        system(Family::Rk, SystemParams::with_k(2)),
        system(Family::Rk, SystemParams::with_k(4)),
        system(Family::Tau, SystemParams::default()),
    ];
    for sys in &systems {
        for x in [1.0, 2.0 * PI, 5.0] {
            match eval_modular_relation(sys, x, 1e-12) {
                Ok(r) => worst = worst.max(r.abs_diff),
                Err(e) => errors.push(format!("{} x={x}: {e}", sys.id())),
            }
        }
    }
    let (fast, t) = within(start, 5);
    Outcome {
        pass: errors.is_empty() && worst < 1e-10 && fast,
        detail: format!("9 points, worst |diff| {worst:.2e} (< 1e-10), {t:.2?}; errors: {errors:?}"),
    }
}

fn riesz_criterion() -> Outcome {
    let start = Instant::now();
    let rk2 = system(Family::Rk, SystemParams::with_k(2));
    let mut worst = 0.0f64;
    let mut max_terms = 0;
    let mut errors = Vec::new();
    for x in [5.5, 10.5] {
        match eval_riesz_identity(&rk2, x, 2.0, 1e-4, Budget::Fixed(1_000_000)) {
            Ok(r) => {
                worst = worst.max(r.abs_diff);
                max_terms = max_terms.max(r.rhs_terms);
            }
            Err(e) => errors.push(format!("x={x}: {e}")),
        }
    }
    let (fast, t) = within(start, 120);
    Outcome {
        pass: errors.is_empty() && worst < 1e-4 && max_terms <= 1_000_000 && fast,
        detail: format!("worst |diff| {worst:.2e} (< 1e-4) with {max_terms} dual terms, {t:.2?}; errors: {errors:?}"),
    }
}

fn family_criterion(filters: &[&str], limit_s: u64) -> Outcome {
    let start = Instant::now();
    let reports: Vec<VerificationReport> =
        filters.iter().flat_map(|f| run_suite(f, 3, 42, 1e-7, &EvalOptions::default())).collect();
    suite_outcome(&reports, start, limit_s)
}

fn general_rho_criterion() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut errors = Vec::new();
    let mut record = |label: String, r: hecke_bessel::Result<VerificationReport>| match r {
        Ok(r) => worst = worst.max(r.abs_diff),
        Err(e) => errors.push(format!("{label}: {e}")),
    };
    let systems = [
        system(Family::Tau, SystemParams::default()),
        system(Family::ChiOdd, SystemParams::with_q(4)),
        system(Family::Rk, SystemParams::with_k(2)),
    ];
    for sys in &systems {
        for rho in [0.5, 1.0] {
            record(format!("first {} rho={rho}", sys.id()), eval_first_theorem_general(sys, 0.5, 1.0, 0.9, rho, 1e-8));
            record(format!("second {} rho={rho}", sys.id()), eval_second_theorem_general(sys, 0.5, 3.0, 1.0, rho, 1e-8));
        }
    }

    // ρ = 0 against the dedicated code paths; the second theorem's sides are the negated T2 sides
    let mut consistency = 0.0f64;
    let rk2 = &systems[2];
    let t1_case = IdentityCase {
        id: IdentityId::T1,
        variant: Variant::system(Family::Rk, SystemParams::with_k(2), (0.6, 0.6)),
        params: IdentityParams { nu: 0.6, c: 1.0, r: 0.8, ..Default::default() },
        tol: 1e-11,
    };
    let t1 = eval_identity(&t1_case, &EvalOptions::default());
    match eval_first_theorem_general(rk2, 0.6, 1.0, 0.8, 0.0, 1e-11) {
        Ok(g) => consistency = consistency.max((g.lhs.value - t1.lhs.value).abs()).max((g.rhs.value - t1.rhs.value).abs()),
        Err(e) => errors.push(format!("first rho=0: {e}")),
    }
    let tau = &systems[0];
    let t2_case = IdentityCase {
        id: IdentityId::T2,
        variant: Variant::system(Family::Tau, SystemParams::default(), (0.0, 0.0)),
        params: IdentityParams { nu: 0.0, alpha: 4.0, beta: 1.0, ..Default::default() },
        tol: 1e-11,
    };
    let t2 = eval_identity(&t2_case, &EvalOptions::default());
    match eval_second_theorem_general(tau, 0.0, 4.0, 1.0, 0.0, 1e-11) {
        Ok(g) => consistency = consistency.max((g.lhs.value + t2.lhs.value).abs()).max((g.rhs.value + t2.rhs.value).abs()),
        Err(e) => errors.push(format!("second rho=0: {e}")),
    }
    let (fast, t) = within(start, 300);
    Outcome {
        pass: errors.is_empty() && worst < 1e-6 && consistency < 1e-8 && t1.pass && t2.pass && fast,
        detail: format!(
            "12 general evaluations, worst |diff| {worst:.2e} (< 1e-6); rho=0 vs dedicated paths {consistency:.2e} (< 1e-8), {t:.2?}; errors: {errors:?}"
        ),
    }
}

fn limit_criterion() -> Outcome {
    let checks = limit_checks();
    let parts: Vec<String> = checks
        .iter()
        .map(|c| format!("{}: order {:.2}, |extrapolant - target| {:.1e}", c.name, c.observed_order, (c.extrapolant - c.target).abs()))
        .collect();
    Outcome { pass: checks.iter().all(|c| c.pass), detail: parts.join("; ") }
}

fn determinism_criterion() -> Outcome {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_hbv"))
            .args(["run", "--filter", "*", "--draws", "3", "--seed", "7", "--tol", "1e-7", "--format", "json-lines"])
            .env("HB_THREADS", threads)
            .output()
            .expect("spawn hbv")
    };
    let (one, four) = (run("1"), run("4"));
    let identical = one.stdout == four.stdout;
    Outcome {
        pass: identical && one.status.success() && four.status.success() && !one.stdout.is_empty(),
        detail: format!("{} bytes with 1 thread, {} bytes with 4 threads, identical: {identical}", one.stdout.len(), four.stdout.len()),
    }
}

fn main() {
    let first_family = ["T1", "RK-K", "SIGMA-K", "TAU-K", "CHI-ODD-K", "CHI-EVEN-K", "IDEAL-K", "GUINAND"];
    let second_family = [
        "T2", "COR-K-TRANSFORM", "RK-2F1", "TAU-2F1", "TAU-SINH", "TAU-EXP", "CHI-ODD-2F1", "CHI-ODD-SINH",
        "CHI-EVEN-2F1", "CHI-EVEN-LOG", "ZETA-2F1", "WATSON-EQ4", "ELLIPTIC", "WATSON-K0", "ZETA-LOG",
    ];
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("special-function battery", Box::new(specfun_criterion)),
        ("table integrals, 20 draws each at 1e-7", Box::new(integral_criterion)),
        ("arithmetic oracles", Box::new(arithmetic_criterion)),
        ("modular relation", Box::new(modular_criterion)),
        ("Riesz sum identity", Box::new(riesz_criterion)),
        ("first theorem family", Box::new(move || family_criterion(&first_family, 180))),
        ("second theorem family", Box::new(move || family_criterion(&second_family, 300))),
        ("general-rho theorems", Box::new(general_rho_criterion)),
        ("limit chain", Box::new(limit_criterion)),
        ("determinism across thread counts", Box::new(determinism_criterion)),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("criterion {:>2} {}: {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
