use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::aberth::{find_roots_seeded, find_roots_with, Evaluator, RootSet};
use crate::error::Result;
use crate::exact_poly::{is_squarefree, parse_rational, rational_to_f64, IntegerPoly};
use crate::families::{family_zpoly, FamilyEvaluator, FamilyId};
use crate::limit_sets::{family_limit_set, z_to_v, CurveSet, Plane};

/// Roots farther than this from the limit set are candidates for isolated
/// limit points.
pub const ISOLATION_DISTANCE: f64 = 0.05;
/// A candidate counts as isolated when the next size has a root this close.
pub const ISOLATION_STABILITY: f64 = 0.01;

impl Evaluator for FamilyEvaluator {
    fn degree(&self) -> usize {
        FamilyEvaluator::degree(self)
    }

    fn newton_ratio(&self, z: Complex64) -> Complex64 {
        let (v, d, _) = self.eval_with_derivative(z);
        v / d
    }
}

/// Roots of the size-`n` member reduced to the hyperbola at `q` (a decimal
/// or fraction string, read exactly).
pub fn find_family_roots(id: FamilyId, n: usize, q: &str) -> Result<RootSet> {
    find_family_roots_seeded(id, n, &parse_rational(q)?, 0)
}

/// Iterates with the recurrence evaluator, which keeps accuracy where the
/// expanded coefficients cancel catastrophically; residuals and polishing
/// use the exact polynomial.
pub fn find_family_roots_seeded(id: FamilyId, n: usize, q: &BigRational, seed: u64) -> Result<RootSet> {
    let p = family_zpoly(id, n, q)?;
    let exact = IntegerPoly::from_zpoly(&p);
    let eval = FamilyEvaluator::new(id, n, rational_to_f64(q))?;
    let has_zero_root = exact.coeffs().first().is_some_and(num_traits::Zero::is_zero);
    if exact.degree() != Some(Evaluator::degree(&eval)) || has_zero_root {
        return find_roots_seeded(&p, seed);
    }
    // Repeated factors (the wheel at q = 2 has one) go through exact
    // splitting.
    if !is_squarefree(&p) {
        return find_roots_seeded(&p, seed);
    }
    find_roots_with(&eval, &exact, seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HalfPlane {
    PositiveRe,
}

/// Both preimages `v` of every root under `z = sqrt(q)(v + 1/v)`.
pub fn roots_in_v(rs: &RootSet, q: f64, filter: Option<HalfPlane>) -> Vec<Complex64> {
    rs.roots
        .iter()
        .flat_map(|r| {
            let (a, b) = z_to_v(r.z, q);
            [a, b]
        })
        .filter(|v| match filter {
            Some(HalfPlane::PositiveRe) => v.re > 0.0,
            None => true,
        })
        .collect()
}

/// Distance of a root to the limit set; in the `v` plane the nearer of its
/// two preimages counts.
pub fn root_distance(z: Complex64, q: f64, set: &CurveSet) -> f64 {
    match set.plane {
        Plane::Z => set.distance(z),
        Plane::V => {
            let (a, b) = z_to_v(z, q);
            set.distance(a).min(set.distance(b))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub degree: usize,
    pub max_distance: f64,
    pub mean_distance: f64,
    /// Far roots with a close counterpart at the next size.
    pub isolated: Vec<Complex64>,
    /// Maximum over the remaining roots.
    pub max_distance_off_isolated: f64,
    pub converged: bool,
    pub max_residual: f64,
}

/// Root distances to the family limit set for each size, one job per size.
pub fn convergence_report(
    id: FamilyId,
    q: &BigRational,
    n_list: &[usize],
    plane: Plane,
) -> Result<Vec<ConvergenceRow>> {
    convergence_report_seeded(id, q, n_list, plane, 0)
}

pub fn convergence_report_seeded(
    id: FamilyId,
    q: &BigRational,
    n_list: &[usize],
    plane: Plane,
    seed: u64,
) -> Result<Vec<ConvergenceRow>> {
    let qf = rational_to_f64(q);
    let set = family_limit_set(id, qf, plane)?;
    let runs: Vec<(usize, RootSet, Vec<f64>)> = n_list
        .par_iter()
        .map(|&n| {
            let rs = find_family_roots_seeded(id, n, q, seed)?;
            let d: Vec<f64> = rs.roots.iter().map(|r| root_distance(r.z, qf, &set)).collect();
            Ok((n, rs, d))
        })
        .collect::<Result<_>>()?;
    let rows = runs
        .iter()
        .enumerate()
        .map(|(i, (n, rs, d))| {
            let next = runs.get(i + 1).map(|(_, r, _)| r.points());
            let isolated_mask: Vec<bool> = rs
                .roots
                .iter()
                .zip(d)
                .map(|(r, &dist)| {
                    dist > ISOLATION_DISTANCE
                        && next.as_ref().is_some_and(|pts| pts.iter().any(|p| (p - r.z).norm() < ISOLATION_STABILITY))
                })
                .collect();
            let max_of = |it: &mut dyn Iterator<Item = f64>| it.fold(0.0, f64::max);
            ConvergenceRow {
                n: *n,
                degree: rs.polynomial_degree,
                max_distance: max_of(&mut d.iter().copied()),
                mean_distance: if d.is_empty() { 0.0 } else { d.iter().sum::<f64>() / d.len() as f64 },
                isolated: rs.roots.iter().zip(&isolated_mask).filter(|(_, &m)| m).map(|(r, _)| r.z).collect(),
                max_distance_off_isolated: max_of(
                    &mut d.iter().zip(&isolated_mask).filter(|(_, &m)| !m).map(|(x, _)| *x),
                ),
                converged: rs.converged,
                max_residual: rs.max_residual(),
            }
        })
        .collect();
    Ok(rows)
}
