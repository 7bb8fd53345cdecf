//! Exact coefficient rings: sparse multivariate integer polynomials and the
//! quadratic extension used by the radical identities.

pub mod poly;
pub mod quadext;

pub use poly::{ComplexPoint, ExponentVector, IntPoint, MultiPoly, VarList, MAX_TOTAL_DEGREE};
pub use quadext::QuadExtElem;
