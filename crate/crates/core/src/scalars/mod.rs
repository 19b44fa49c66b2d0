//! Exact coefficient field: rational functions in the formal symbols over Q(i).

mod gaussian;
mod gcd;
mod laurent;
mod scalar;

pub use gaussian::GaussianRational;
pub use gcd::{div_exact, make_monic, poly_gcd};
pub use laurent::{LaurentPoly, Monomial, Symbol, NSYM, UNIT_MONOMIAL};
pub use scalar::{q_integer, Bindings, Scalar};
