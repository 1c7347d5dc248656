//! Dual-side verification reports.

use crate::specfun::ValueWithError;
use serde::Serialize;

/// Outcome of evaluating both sides of one identity at one parameter point.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    /// Named parameters in a fixed order.
    pub params: Vec<(String, f64)>,
    pub lhs: ValueWithError,
    pub rhs: ValueWithError,
    /// Imaginary parts (zero for real identities).
    pub lhs_im: f64,
    pub rhs_im: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub lhs_tail: f64,
    pub rhs_tail: f64,
    pub quad_err: f64,
    pub tol: f64,
    pub pass: bool,
    /// Set when the evaluation itself failed.
    pub error: Option<String>,
    pub ms: f64,
}

/// How the two sides are compared.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Comparison {
    /// |L − R| ≤ tol + err(L) + err(R).
    Absolute,
    /// |L − R| ≤ rel_tol·max(|L|, |R|) + err(L) + err(R).
    Relative(f64),
}

/// One side of an identity: a possibly complex value with its error budget.
#[derive(Clone, Copy, Debug, Default)]
pub struct SideValue {
    pub re: f64,
    pub im: f64,
    pub abs_error: f64,
    pub terms: usize,
    pub tail: f64,
    pub quad_err: f64,
}

impl SideValue {
    pub fn real(v: ValueWithError) -> Self {
        Self {
            re: v.value,
            abs_error: v.abs_error,
            ..Default::default()
        }
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

impl VerificationReport {
    pub fn from_sides(
        id: &str,
        params: Vec<(String, f64)>,
        lhs: SideValue,
        rhs: SideValue,
        tol: f64,
        comparison: Comparison,
    ) -> Self {
        let abs_diff = (lhs.re - rhs.re).hypot(lhs.im - rhs.im);
        let scale = lhs.modulus().max(rhs.modulus());
        let rel_diff = if scale > 0.0 { abs_diff / scale } else { abs_diff };
        let allowance = match comparison {
            Comparison::Absolute => tol,
            Comparison::Relative(r) => r * scale,
        };
        let pass = abs_diff.is_finite() && abs_diff <= allowance + lhs.abs_error + rhs.abs_error;
        Self {
            id: id.to_string(),
            params,
            lhs: ValueWithError::new(lhs.re, lhs.abs_error),
            rhs: ValueWithError::new(rhs.re, rhs.abs_error),
            lhs_im: lhs.im,
            rhs_im: rhs.im,
            abs_diff,
            rel_diff,
            lhs_terms: lhs.terms,
            rhs_terms: rhs.terms,
            lhs_tail: lhs.tail,
            rhs_tail: rhs.tail,
            quad_err: lhs.quad_err + rhs.quad_err,
            tol,
            pass,
            error: None,
            ms: 0.0,
        }
    }

    pub fn failed(id: &str, params: Vec<(String, f64)>, tol: f64, error: String) -> Self {
        Self {
            id: id.to_string(),
            params,
            lhs: ValueWithError::exact(f64::NAN),
            rhs: ValueWithError::exact(f64::NAN),
            lhs_im: 0.0,
            rhs_im: 0.0,
            abs_diff: f64::NAN,
            rel_diff: f64::NAN,
            lhs_terms: 0,
            rhs_terms: 0,
            lhs_tail: f64::NAN,
            rhs_tail: f64::NAN,
            quad_err: f64::NAN,
            tol,
            pass: false,
            error: Some(error),
            ms: 0.0,
        }
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }
}
