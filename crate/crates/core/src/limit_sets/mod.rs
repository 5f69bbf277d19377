//! Limiting zero sets: where the dominant eigenvalue of a family fails to be
//! unique, in the `z` plane and mapped to the `v` plane.

mod pieces;
mod sampling;
mod sets;

pub use pieces::{curve_distance, CrossCurve, CurvePiece, CurveSet, LabeledPiece, Plane};
pub use sampling::{cross_curve_distance, sample_cross_curve, MIN_SAMPLES};
pub use sets::{
    circle_image_in_v, cross_degeneration_curve, family_limit_set, pair_degeneration_curve, pointwise_image,
    real_segment_image, segment_image_in_v, v_to_z, z_to_v, z_to_v_explicit, IMAGE_SAMPLES, Z_EXTENT,
};
