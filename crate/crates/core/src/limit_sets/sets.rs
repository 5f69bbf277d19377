use std::f64::consts::PI;

use num_complex::Complex64;

use super::pieces::{CrossCurve, CurvePiece, CurveSet, Plane};
use crate::eigen::{eigen_explicit, eigen_pair};
use crate::error::{Error, Result};
use crate::families::FamilyId;

/// Parametric pieces running off to infinity are cut at this modulus.
pub const Z_EXTENT: f64 = 1e4;
/// Samples used for pointwise images of circles and parametric pieces.
pub const IMAGE_SAMPLES: usize = 2048;

/// `|lambda_a^+| = |lambda_a^-|`: the real segment
/// `[-a - 2 sqrt(q-a), -a + 2 sqrt(q-a)]`, plus the circle `|z + q + 1| = 1 - q + a`
/// when `a >= q - 1`.
pub fn pair_degeneration_curve(a: f64, q: f64) -> CurveSet {
    let mut set = CurveSet::new(Plane::Z);
    let h = 2.0 * (q - a).max(0.0).sqrt();
    set.push("pair-segment", CurvePiece::RealSegment { c_min: -a - h, c_max: -a + h });
    let radius = 1.0 - q + a;
    if radius >= 0.0 {
        set.push("pair-circle", CurvePiece::circle(Complex64::new(-q - 1.0, 0.0), radius));
    }
    set
}

/// Smallest parameter with `|z(alpha)| <= extent` near the asymptote.
fn alpha_cutoff(a: f64, q: f64, extent: f64) -> f64 {
    let probe = CrossCurve { a, q, alpha_min: 0.0, alpha_max: 0.0 };
    let (mut lo, mut hi) = (1e-15, PI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if probe.point(mid).norm() > extent {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// `|lambda_a| = |lambda_q|`: the quartic `d^2 = -(c+q)^2 (2c+q+4+a)/(2c+q+a)`
/// over `c in [-(q+4+a)/2, -(q+a)/2)`, both signs of `d`, cut at [`Z_EXTENT`].
pub fn cross_degeneration_curve(a: f64, q: f64) -> CurveSet {
    let eps = alpha_cutoff(a, q, Z_EXTENT);
    let mut set = CurveSet::new(Plane::Z);
    set.push(
        "cross-curve",
        CurvePiece::ParamCurve { curve: CrossCurve { a, q, alpha_min: eps, alpha_max: 2.0 * PI - eps } },
    );
    set
}

/// Limiting zero set of a family in the chosen plane.
pub fn family_limit_set(id: FamilyId, q: f64, plane: Plane) -> Result<CurveSet> {
    if q.is_nan() || q <= 1.0 {
        return Err(Error::InvalidRange(format!("q must exceed 1, got {q}")));
    }
    let z = family_limit_set_z(id, q)?;
    Ok(match plane {
        Plane::Z => z,
        Plane::V => family_limit_set_v(id, q, &z),
    })
}

fn family_limit_set_z(id: FamilyId, q: f64) -> Result<CurveSet> {
    let seg_hi = -1.0 + 2.0 * (q - 1.0).sqrt();
    let seg_lo = -1.0 - 2.0 * (q - 1.0).sqrt();
    let mut set = CurveSet::new(Plane::Z);
    match id {
        FamilyId::TriangleStrip => {
            set.push("segment", CurvePiece::RealSegment { c_min: seg_lo, c_max: seg_hi });
            if q < 2.0 {
                set.push("circle", CurvePiece::circle(Complex64::new(-q - 1.0, 0.0), 2.0 - q));
            }
        }
        FamilyId::Wheel => {
            // On [seg_lo, -q] the constant eigenvalue 1 outweighs the pair,
            // unless its coefficient q - 2 vanishes.
            if q == 2.0 || q > 5.0 {
                set.push("segment", CurvePiece::RealSegment { c_min: seg_lo, c_max: seg_hi });
            } else {
                set.push("segment", CurvePiece::RealSegment { c_min: -q, c_max: seg_hi });
                let alpha0 = ((3.0 - q) / 2.0).acos();
                set.push(
                    "cross-curve",
                    CurvePiece::ParamCurve {
                        curve: CrossCurve { a: 1.0, q, alpha_min: alpha0, alpha_max: 2.0 * PI - alpha0 },
                    },
                );
            }
        }
        FamilyId::CycleMultiEdge => set.extend(cross_degeneration_curve(0.0, q)),
        FamilyId::CounterexampleC => {
            return Err(Error::Unsupported("the counterexample is a single graph, not a family".into()))
        }
    }
    Ok(set)
}

fn family_limit_set_v(id: FamilyId, q: f64, z: &CurveSet) -> CurveSet {
    let s = q.sqrt();
    if id == FamilyId::CycleMultiEdge {
        // |x| = 1 and |y| = 1 with x = 1 + sqrt(q)/v, y = 1 + sqrt(q) v.
        let mut set = CurveSet::new(Plane::V);
        set.push("line", CurvePiece::Line { re: -s / 2.0 });
        set.push("circle", CurvePiece::circle(Complex64::new(-1.0 / s, 0.0), 1.0 / s));
        return set;
    }
    let mut set = CurveSet::new(Plane::V);
    for lp in &z.pieces {
        match &lp.piece {
            CurvePiece::RealSegment { c_min, c_max } => set.extend(real_segment_image(*c_min, *c_max, q)),
            CurvePiece::Circle { center, radius } => {
                let c = Complex64::new(center.0, center.1);
                let pts = CurvePiece::circle(c, *radius).sample(IMAGE_SAMPLES, f64::INFINITY);
                set.extend(pointwise_image(&pts, q, "circle-image"));
            }
            CurvePiece::ParamCurve { curve } => {
                let pts = CurvePiece::ParamCurve { curve: *curve }.sample(IMAGE_SAMPLES, Z_EXTENT);
                set.extend(pointwise_image(&pts, q, "cross-image"));
            }
            other => unreachable!("no {} pieces in z-plane family sets", other.kind()),
        }
    }
    set
}

/// `v = F(z) = (z +/- sqrt(z^2 - 4q)) / (2 sqrt(q))`, the two preimages of
/// `z = sqrt(q)(v + 1/v)`. The smaller one is taken as the reciprocal of the
/// larger so that `v1 v2 = 1` holds to rounding.
pub fn z_to_v(z: Complex64, q: f64) -> (Complex64, Complex64) {
    let s = q.sqrt();
    let root = (z * z - 4.0 * q).sqrt();
    let mut v1 = (z + root) / (2.0 * s);
    let mut v2 = (z - root) / (2.0 * s);
    if v1.norm() >= v2.norm() {
        v2 = v1.inv();
    } else {
        v1 = v2.inv();
    }
    (v1, v2)
}

/// The same pair through the explicit component formulas:
/// `v = (lambda_0^(+/-)(z) - 1) / sqrt(q)`, since `lambda_0^(+/-)` are `x` and `y`.
pub fn z_to_v_explicit(z: Complex64, q: f64) -> (Complex64, Complex64) {
    let p = if z.im != 0.0 { eigen_explicit(0.0, q, z).expect("off axis") } else { eigen_pair(0.0, q, z) };
    let s = q.sqrt();
    ((p.lambda_plus - 1.0) / s, (p.lambda_minus - 1.0) / s)
}

pub fn v_to_z(v: Complex64, q: f64) -> Complex64 {
    q.sqrt() * (v + v.inv())
}

/// `r >= 1` with `r + 1/r = u`, for `u >= 2`.
fn radius_for_sum(u: f64) -> f64 {
    (u + (u * u - 4.0).max(0.0).sqrt()) / 2.0
}

fn push_radial(set: &mut CurveSet, label: &str, theta: f64, u_lo: f64, u_hi: f64) {
    let (r_lo, r_hi) = (radius_for_sum(u_lo), radius_for_sum(u_hi));
    if u_lo <= 2.0 {
        set.push(label, CurvePiece::RadialSegment { theta, r_min: 1.0 / r_hi, r_max: r_hi });
    } else {
        set.push(label, CurvePiece::RadialSegment { theta, r_min: r_lo, r_max: r_hi });
        set.push(label, CurvePiece::RadialSegment { theta, r_min: 1.0 / r_hi, r_max: 1.0 / r_lo });
    }
}

/// Image under `F` of the real segment `[c0, c1]`: the part inside
/// `[-2 sqrt(q), 2 sqrt(q)]` lands on the unit circle (both half-planes), the
/// parts outside on the negative or positive real `v` axis, closed under
/// `v -> 1/v`.
pub fn real_segment_image(c0: f64, c1: f64, q: f64) -> CurveSet {
    let s = q.sqrt();
    let mut set = CurveSet::new(Plane::V);
    if c1 >= -2.0 * s && c0 <= 2.0 * s {
        let th_lo = (c1 / (2.0 * s)).min(1.0).acos();
        let th_hi = (c0 / (2.0 * s)).max(-1.0).acos();
        set.push("arc", CurvePiece::Arc { radius: 1.0, theta_min: th_lo, theta_max: th_hi });
        set.push("arc", CurvePiece::Arc { radius: 1.0, theta_min: -th_hi, theta_max: -th_lo });
    }
    if c0 < -2.0 * s {
        push_radial(&mut set, "radial", PI, (-c1 / s).max(2.0), -c0 / s);
    }
    if c1 > 2.0 * s {
        push_radial(&mut set, "radial", 0.0, (c0 / s).max(2.0), c1 / s);
    }
    set
}

/// Image of the pair segment for parameter `a`.
pub fn segment_image_in_v(a: f64, q: f64) -> CurveSet {
    let h = 2.0 * (q - a).max(0.0).sqrt();
    real_segment_image(-a - h, -a + h, q)
}

/// Maps an ordered run of `z` samples to two `v` polylines, continuing each
/// branch by proximity so that neither jumps between the two preimages.
pub fn pointwise_image(zs: &[Complex64], q: f64, label: &str) -> CurveSet {
    let mut a: Vec<Complex64> = Vec::with_capacity(zs.len());
    let mut b: Vec<Complex64> = Vec::with_capacity(zs.len());
    for &z in zs {
        let (v1, v2) = z_to_v(z, q);
        match a.last() {
            Some(&prev) if (v2 - prev).norm() < (v1 - prev).norm() => {
                a.push(v2);
                b.push(v1);
            }
            _ => {
                a.push(v1);
                b.push(v2);
            }
        }
    }
    let mut set = CurveSet::new(Plane::V);
    set.push(format!("{label}+"), CurvePiece::points(&a));
    set.push(format!("{label}-"), CurvePiece::points(&b));
    set
}

/// Image of `|z + q + 1| = 1 - q + a` under `F`, through the explicit
/// component formulas; both branches as polylines.
pub fn circle_image_in_v(a: f64, q: f64, samples: usize) -> Result<CurveSet> {
    let radius = 1.0 - q + a;
    if radius < 0.0 {
        return Err(Error::InvalidRange(format!("circle image needs a >= q - 1, got a = {a}, q = {q}")));
    }
    let center = Complex64::new(-q - 1.0, 0.0);
    let zs: Vec<Complex64> =
        if radius == 0.0 { vec![center] } else { CurvePiece::circle(center, radius).sample(samples, f64::INFINITY) };
    let mut plus: Vec<Complex64> = Vec::with_capacity(zs.len());
    let mut minus = Vec::with_capacity(zs.len());
    for &z in &zs {
        let (v1, v2) = z_to_v_explicit(z, q);
        match plus.last() {
            Some(&prev) if (v2 - prev).norm() < (v1 - prev).norm() => {
                plus.push(v2);
                minus.push(v1);
            }
            _ => {
                plus.push(v1);
                minus.push(v2);
            }
        }
    }
    let mut set = CurveSet::new(Plane::V);
    set.push("circle-image+", CurvePiece::points(&plus));
    set.push("circle-image-", CurvePiece::points(&minus));
    Ok(set)
}
