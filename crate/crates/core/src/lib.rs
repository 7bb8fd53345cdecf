//! Order-k recurrent polynomial sequences in several variables.
//!
//! Sequences `P_{n+k} = c₁P_{n+k−1} + ⋯ + c_kP_n` with coefficients in
//! ℤ[x₁, …, x_m] are evaluated by four independent exact engines
//! (iteration, multinomial sum, Hessenberg determinant, companion-matrix
//! power) and by numeric root-based engines. On top of that sits a catalog
//! of machine-checked Fibonacci, Lucas, and Dickson polynomial identities.

pub mod binet;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod families;
pub mod parse;
pub mod recurrence;
pub mod ring;
pub mod spec_doc;

pub use error::{Error, Result};
pub use recurrence::{RecurrenceSpec, TermBudget};
pub use ring::{MultiPoly, QuadExtElem, VarList};
