//! Order-2 Fibonacci/Lucas families, Dickson polynomials, and the identity
//! catalog.

pub mod dickson;
pub mod identities;
pub mod order2;

pub use dickson::{dickson_d, dickson_e, dickson_e_det, tridiag_closed_form_check};
pub use identities::{check_identity, IdentityReport, Status, Witness};
pub use order2::{fib2, lucas2, Order2Family};
