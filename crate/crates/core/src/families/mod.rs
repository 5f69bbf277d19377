//! The self-dual families: triangle strip with a doubled edge, wheel, cycle
//! with one multiplied edge, and the single counterexample graph.

mod graphs;
mod id;
mod recurrence;
mod spectral;

pub use graphs::build_family_graph;
pub use id::FamilyId;
pub use recurrence::{
    counterexample_poly, cycle_multi_closed_form, cycle_multi_poly, family_bipoly, family_recurrence, family_zpoly,
    triangle_strip_poly, wheel_poly, FamilyEvaluator, Recurrence,
};
pub use spectral::{spectral_form, Coefficient, SpectralForm, SpectralTerm, TermValue};
