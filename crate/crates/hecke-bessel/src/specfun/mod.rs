//! Special functions with truncation-error bounds.

mod bessel;
mod gamma;
mod hyp;
mod sum;
mod zeta;

use serde::Serialize;
use std::ops::{Add, Mul, Neg, Sub};

pub use bessel::{
    bessel_i, bessel_i_scaled, bessel_j, bessel_k, bessel_k_scaled, ik_product, ik_product_dt,
    k_upper_bound, BesselArgs,
};
pub use gamma::{gamma, ln_gamma, rgamma};
pub use hyp::{elliptic_k, hyp2f1, hyp2f1_abs_majorant};
pub use sum::{ComplexNeumaier, Neumaier};
pub use zeta::zeta;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Relative error assigned to continued-fraction and rational-approximation
/// evaluations whose truncation error is below this by construction.
pub(crate) const ALGO_REL_ERR: f64 = 4e-15;

/// A real value together with a bound on its truncation error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ValueWithError {
    pub value: f64,
    pub abs_error: f64,
}

impl ValueWithError {
    pub fn new(value: f64, abs_error: f64) -> Self {
        Self {
            value,
            abs_error: abs_error.abs(),
        }
    }

    pub fn exact(value: f64) -> Self {
        Self::new(value, 0.0)
    }

    pub fn with_rel(value: f64, rel: f64) -> Self {
        Self::new(value, value.abs() * rel)
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.value * k, self.abs_error * k.abs())
    }

    pub fn rel_error(&self) -> f64 {
        if self.value == 0.0 {
            if self.abs_error == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.abs_error / self.value.abs()
        }
    }
}

impl Add for ValueWithError {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.value + o.value, self.abs_error + o.abs_error)
    }
}

impl Sub for ValueWithError {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.value - o.value, self.abs_error + o.abs_error)
    }
}

impl Mul for ValueWithError {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.value * o.value,
            self.value.abs() * o.abs_error
                + o.value.abs() * self.abs_error
                + self.abs_error * o.abs_error,
        )
    }
}

impl Neg for ValueWithError {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, self.abs_error)
    }
}
