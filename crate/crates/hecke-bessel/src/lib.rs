//! Dual-side numerical verification of Bessel-series identities that follow
//! from Hecke-type functional equations.
//!
//! Modules:
//! - [`specfun`]: Γ, ζ, J/I/K Bessel functions, ₂F₁, complete elliptic K.
//! - [`quad`]: adaptive Gauss–Kronrod on semi-infinite intervals with analytic tails.
//! - [`arith`]: exact arithmetical function tables and Dirichlet characters.
//! - [`hecke`]: the catalog of Dirichlet-series pairs and their residual terms.
//! - [`engine`]: the identity catalog, tail-certified series, reports and suites.

pub mod arith;
pub mod engine;
pub mod error;
pub mod hecke;
pub mod quad;
pub mod report;
pub mod specfun;

pub use error::{Error, Result};
pub use report::VerificationReport;
pub use specfun::ValueWithError;
