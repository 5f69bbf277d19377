//! Exact Tutte polynomials of self-dual graph families, their eigenvalue
//! decompositions on the hyperbola `(x-1)(y-1) = q`, the limiting zero sets
//! in the `z` and `v` planes, and the complex zeros of the finite polynomials.
//!
//! Variables: `z = x + y - 2`, so `xy = z + q + 1`, and
//! `z = sqrt(q) (v + 1/v)`, i.e. `x = 1 + sqrt(q)/v`, `y = 1 + sqrt(q) v`.

pub mod eigen;
pub mod error;
pub mod exact_poly;
pub mod families;
pub mod limit_sets;
pub mod oracle;
pub mod roots;

pub use error::{Error, Result};

/// Complex point in the `z` or `v` plane.
pub type ComplexPoint = num_complex::Complex64;
