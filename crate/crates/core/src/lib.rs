pub mod catalog;
pub mod dsl;
pub mod error;
pub mod hopf;
pub mod ncalg;
pub mod presentations;
pub mod reps;
pub mod rewrite;
pub mod scalars;
pub mod suite;

pub use error::{Error, Result};
pub use ncalg::{Alphabet, BracketKind, Gen, NCExpr, Tensor3, TensorExpr, Word};
pub use rewrite::{
    check_identity, is_central, local_confluence_report, normal_form, CriticalPair, IdentityCheck, Presentation,
    Reducer, RewriteRule,
};
pub use scalars::{q_integer, Bindings, GaussianRational, LaurentPoly, Scalar, Symbol};
