//! Eigenvalue pairs `lambda_a^(+/-)(z)`, dominance, pressure and the Beraha
//! parameter check for wider strips.

mod beraha;
mod dominance;
mod pair;
mod pressure;

pub use beraha::{beraha, beraha_parameters, verify_beraha_factorization};
pub use dominance::{
    classify_dominance, classify_dominance_with, dominance_region, DominanceKind, DominanceVerdict, Region, TermSpec,
};
pub use pair::{
    branch_value, dominant, dominant_with, eigen_explicit, eigen_pair, labeled_pair, Branch, Dominant, EigenPair,
    TIE_TOLERANCE,
};
pub use pressure::{log_partition, pressure, pressure_limit, pressure_principal};
