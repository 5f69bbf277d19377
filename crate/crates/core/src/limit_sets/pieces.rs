use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Plane {
    Z,
    V,
}

impl std::str::FromStr for Plane {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "z" | "Z" => Ok(Plane::Z),
            "v" | "V" => Ok(Plane::V),
            _ => Err(crate::Error::Parse(format!("unknown plane {s:?} (expected z or v)"))),
        }
    }
}

/// The set where a root of `X^2 - (z + 2 + a) X + (z + q + 1)` has modulus
/// one, parametrized by the angle `alpha` of that root:
/// `z(alpha) = (e^(2i alpha) - (2 + a) e^(i alpha) + q + 1) / (e^(i alpha) - 1)`.
/// It runs from `c = -(q + 4 + a)/2` at `alpha = pi` to the vertical
/// asymptote `2c + q + a = 0` as `alpha -> 0, 2 pi`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCurve {
    pub a: f64,
    pub q: f64,
    pub alpha_min: f64,
    pub alpha_max: f64,
}

impl CrossCurve {
    pub fn point(&self, alpha: f64) -> Complex64 {
        let w = Complex64::from_polar(1.0, alpha);
        (w * w - (2.0 + self.a) * w + self.q + 1.0) / (w - 1.0)
    }

    /// `d^2` as a function of `c`; nonnegative on the curve's `c`-range.
    pub fn radicand(&self, c: f64) -> f64 {
        let (a, q) = (self.a, self.q);
        -(c + q).powi(2) * (2.0 * c + q + 4.0 + a) / (2.0 * c + q + a)
    }

    /// `[-(q+4+a)/2, -(q+a)/2)`, where the radicand is nonnegative.
    pub fn validity_interval(&self) -> (f64, f64) {
        (-(self.q + 4.0 + self.a) / 2.0, -(self.q + self.a) / 2.0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CurvePiece {
    /// Real segment `[c_min, c_max]` on the horizontal axis.
    RealSegment {
        c_min: f64,
        c_max: f64,
    },
    Circle {
        center: (f64, f64),
        radius: f64,
    },
    ParamCurve {
        curve: CrossCurve,
    },
    /// `r e^(i theta)`, `theta in [theta_min, theta_max]`.
    Arc {
        radius: f64,
        theta_min: f64,
        theta_max: f64,
    },
    /// `r e^(i theta)`, `r in [r_min, r_max]`.
    RadialSegment {
        theta: f64,
        r_min: f64,
        r_max: f64,
    },
    /// The vertical line `Re = re`.
    Line {
        re: f64,
    },
    /// Ordered samples joined by straight pieces.
    PointList {
        points: Vec<(f64, f64)>,
    },
}

impl CurvePiece {
    pub fn kind(&self) -> &'static str {
        match self {
            CurvePiece::RealSegment { .. } => "segment",
            CurvePiece::Circle { .. } => "circle",
            CurvePiece::ParamCurve { .. } => "param",
            CurvePiece::Arc { .. } => "arc",
            CurvePiece::RadialSegment { .. } => "radial",
            CurvePiece::Line { .. } => "line",
            CurvePiece::PointList { .. } => "points",
        }
    }

    pub fn circle(center: Complex64, radius: f64) -> Self {
        CurvePiece::Circle { center: (center.re, center.im), radius }
    }

    pub fn points(pts: &[Complex64]) -> Self {
        CurvePiece::PointList { points: pts.iter().map(|p| (p.re, p.im)).collect() }
    }

    /// Parameter bounds hold and radii are nonnegative.
    pub fn is_well_formed(&self) -> bool {
        match *self {
            CurvePiece::RealSegment { c_min, c_max } => c_min <= c_max,
            CurvePiece::Circle { radius, .. } => radius >= 0.0,
            CurvePiece::ParamCurve { curve } => curve.alpha_min <= curve.alpha_max,
            CurvePiece::Arc { radius, theta_min, theta_max } => radius >= 0.0 && theta_min <= theta_max,
            CurvePiece::RadialSegment { r_min, r_max, .. } => 0.0 <= r_min && r_min <= r_max,
            CurvePiece::Line { re } => re.is_finite(),
            CurvePiece::PointList { ref points } => points.iter().all(|p| p.0.is_finite() && p.1.is_finite()),
        }
    }

    /// Points along the piece. Lines are cut to `|Im| <= extent`, the
    /// parametric curve to `|z| <= extent`.
    pub fn sample(&self, samples: usize, extent: f64) -> Vec<Complex64> {
        let n = samples.max(2);
        let lin = |lo: f64, hi: f64, k: usize| lo + (hi - lo) * k as f64 / (n - 1) as f64;
        match *self {
            CurvePiece::RealSegment { c_min, c_max } => {
                (0..n).map(|k| Complex64::new(lin(c_min, c_max, k), 0.0)).collect()
            }
            CurvePiece::Circle { center, radius } => {
                let c = Complex64::new(center.0, center.1);
                // Open at angle 0 so that a circle through the origin in the v
                // plane (the image of z = infinity) does not contain it.
                (1..=n).map(|k| c + Complex64::from_polar(radius, 2.0 * PI * k as f64 / (n + 1) as f64)).collect()
            }
            CurvePiece::ParamCurve { curve } => super::sampling::sample_cross_curve(&curve, n, extent),
            CurvePiece::Arc { radius, theta_min, theta_max } => {
                (0..n).map(|k| Complex64::from_polar(radius, lin(theta_min, theta_max, k))).collect()
            }
            CurvePiece::RadialSegment { theta, r_min, r_max } => {
                (0..n).map(|k| Complex64::from_polar(lin(r_min, r_max, k), theta)).collect()
            }
            CurvePiece::Line { re } => (0..n).map(|k| Complex64::new(re, lin(-extent, extent, k))).collect(),
            CurvePiece::PointList { ref points } => points.iter().map(|&(x, y)| Complex64::new(x, y)).collect(),
        }
    }

    pub fn distance(&self, p: Complex64) -> f64 {
        match *self {
            CurvePiece::RealSegment { c_min, c_max } => {
                segment_distance(p, Complex64::new(c_min, 0.0), Complex64::new(c_max, 0.0))
            }
            CurvePiece::Circle { center, radius } => ((p - Complex64::new(center.0, center.1)).norm() - radius).abs(),
            CurvePiece::ParamCurve { curve } => super::sampling::cross_curve_distance(&curve, p),
            CurvePiece::Arc { radius, theta_min, theta_max } => {
                let th = p.arg();
                if th >= theta_min && th <= theta_max {
                    (p.norm() - radius).abs()
                } else {
                    let a = Complex64::from_polar(radius, theta_min);
                    let b = Complex64::from_polar(radius, theta_max);
                    (p - a).norm().min((p - b).norm())
                }
            }
            CurvePiece::RadialSegment { theta, r_min, r_max } => {
                segment_distance(p, Complex64::from_polar(r_min, theta), Complex64::from_polar(r_max, theta))
            }
            CurvePiece::Line { re } => (p.re - re).abs(),
            CurvePiece::PointList { ref points } => polyline_distance(p, points),
        }
    }
}

pub(crate) fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    (p - (a + ab * t.clamp(0.0, 1.0))).norm()
}

fn polyline_distance(p: Complex64, pts: &[(f64, f64)]) -> f64 {
    let c = |k: usize| Complex64::new(pts[k].0, pts[k].1);
    match pts.len() {
        0 => f64::INFINITY,
        1 => (p - c(0)).norm(),
        n => (1..n).map(|k| segment_distance(p, c(k - 1), c(k))).fold(f64::INFINITY, f64::min),
    }
}

/// A labeled finite union of pieces in one plane.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSet {
    pub plane: Plane,
    pub pieces: Vec<LabeledPiece>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabeledPiece {
    pub label: String,
    pub piece: CurvePiece,
}

impl CurveSet {
    pub fn new(plane: Plane) -> Self {
        Self { plane, pieces: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, piece: CurvePiece) {
        self.pieces.push(LabeledPiece { label: label.into(), piece });
    }

    pub fn extend(&mut self, other: CurveSet) {
        assert_eq!(self.plane, other.plane, "mixing planes");
        self.pieces.extend(other.pieces);
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn kinds(&self) -> Vec<&'static str> {
        self.pieces.iter().map(|p| p.piece.kind()).collect()
    }

    /// Minimum Euclidean distance from `p` to any piece.
    pub fn distance(&self, p: Complex64) -> f64 {
        self.pieces.iter().map(|l| l.piece.distance(p)).fold(f64::INFINITY, f64::min)
    }

    pub fn sample(&self, samples: usize, extent: f64) -> Vec<(usize, Vec<Complex64>)> {
        self.pieces.iter().enumerate().map(|(i, l)| (i, l.piece.sample(samples, extent))).collect()
    }
}

pub fn curve_distance(p: Complex64, curves: &CurveSet) -> f64 {
    curves.distance(p)
}
