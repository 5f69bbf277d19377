use num_complex::Complex64;

use super::pieces::{segment_distance, CrossCurve};

/// Minimum number of samples per parametric piece.
pub const MIN_SAMPLES: usize = 256;
const MAX_SAMPLES: usize = 1 << 15;
const MAX_TURN: f64 = 0.05;
const MAX_RELATIVE_CHORD: f64 = 0.01;

/// Adaptive bisection in the curve parameter: a sub-interval is split while
/// the polyline turns too sharply there or its chord is long relative to the
/// distance from the origin. Points outside `|z| <= extent` are dropped.
pub fn sample_cross_curve(curve: &CrossCurve, samples: usize, extent: f64) -> Vec<Complex64> {
    adaptive(curve, samples.max(MIN_SAMPLES)).into_iter().map(|(_, z)| z).filter(|z| z.norm() <= extent).collect()
}

fn adaptive(curve: &CrossCurve, base: usize) -> Vec<(f64, Complex64)> {
    let (lo, hi) = (curve.alpha_min, curve.alpha_max);
    let mut pts: Vec<(f64, Complex64)> = (0..base)
        .map(|k| {
            let t = lo + (hi - lo) * k as f64 / (base - 1) as f64;
            (t, curve.point(t))
        })
        .collect();
    loop {
        let mut out = Vec::with_capacity(pts.len() * 2);
        let mut changed = false;
        for k in 0..pts.len() {
            out.push(pts[k]);
            if k + 1 == pts.len() || pts.len() + out.len() > MAX_SAMPLES {
                continue;
            }
            let (t0, z0) = pts[k];
            let (t1, z1) = pts[k + 1];
            let chord = (z1 - z0).norm();
            let scale = z0.norm().max(z1.norm()).max(1.0);
            let turn = if k > 0 {
                let prev = z0 - pts[k - 1].1;
                let next = z1 - z0;
                if prev.norm() > 0.0 && next.norm() > 0.0 {
                    (next / prev).arg().abs()
                } else {
                    0.0
                }
            } else {
                0.0
            };
            if chord > MAX_RELATIVE_CHORD * scale || turn > MAX_TURN {
                let tm = 0.5 * (t0 + t1);
                out.push((tm, curve.point(tm)));
                changed = true;
            }
        }
        pts = out;
        if !changed || pts.len() >= MAX_SAMPLES {
            return pts;
        }
    }
}

/// Distance from `p` to the curve: nearest polyline segment over the
/// adaptive samples, then golden-section refinement in the parameter around
/// the best candidates until the estimate settles below `1e-12`.
pub fn cross_curve_distance(curve: &CrossCurve, p: Complex64) -> f64 {
    let pts = adaptive(curve, MIN_SAMPLES);
    if pts.len() < 2 {
        return pts.first().map_or(f64::INFINITY, |(_, z)| (p - z).norm());
    }
    let mut seg: Vec<(f64, usize)> = (1..pts.len()).map(|k| (segment_distance(p, pts[k - 1].1, pts[k].1), k)).collect();
    seg.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut best = f64::INFINITY;
    for &(_, k) in seg.iter().take(3) {
        let lo = pts[k.saturating_sub(2)].0;
        let hi = pts[(k + 1).min(pts.len() - 1)].0;
        best = best.min(golden_min(|t| (curve.point(t) - p).norm(), lo, hi));
    }
    best
}

fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() < 1e-14 * (1.0 + a.abs()) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    fc.min(fd)
}
