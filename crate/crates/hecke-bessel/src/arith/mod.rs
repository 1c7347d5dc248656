//! Exact arithmetical function tables, Bernoulli numbers, Dirichlet characters
//! and imaginary quadratic field constants.

mod bernoulli;
pub mod brute;
mod character;
mod field;
mod oracle;
mod tables;

pub use bernoulli::{bernoulli, bernoulli_f64};
pub use character::{all_characters, gauss_sum, kronecker, primitive_characters, DirichletCharacter, Parity};
pub use field::{field_constants, is_fundamental, FieldConstants};
pub use oracle::{oracle_checks, OracleCheck};
pub use tables::{
    divisor_power_sum, ideal_count, ones, r_k, sigma_k, tau, CoefficientTable, TableKind,
};
