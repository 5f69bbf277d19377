//! Exact polynomial arithmetic in `(x, y)` and in `z`, and the reduction of
//! symmetric bivariate polynomials onto the hyperbola `(x-1)(y-1) = q`.

mod bipoly;
mod exact_eval;
mod json;
mod parse;
mod squarefree;
mod symmetric;
mod zpoly;

pub use bipoly::{BiPoly, Exponents};
pub use exact_eval::{IntegerPoly, ScaledComplex};
pub use parse::{parse_rational, rat, rational_to_f64};
pub use squarefree::{gcd, is_squarefree, squarefree_decomposition};
pub use symmetric::{symmetric_to_z, to_elementary};
pub use zpoly::{eval_zpoly, ZPoly};

/// `p(x, y)` is symmetric in its two variables.
pub fn is_symmetric(p: &BiPoly) -> bool {
    p.is_symmetric()
}
