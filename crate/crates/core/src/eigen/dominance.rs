use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::pair::{branch_value, Branch, TIE_TOLERANCE};
use crate::error::{Error, Result};

/// One eigenvalue `lambda_a^branch` of a spectral sum, with a flag telling
/// whether its coefficient is nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub a: f64,
    pub branch: Branch,
    pub nonzero: bool,
}

impl TermSpec {
    pub fn new(a: f64, branch: Branch) -> Self {
        Self { a, branch, nonzero: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum DominanceKind {
    UniqueDominant(usize),
    Degenerate(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DominanceVerdict {
    pub kind: DominanceKind,
    /// Relative gap between the largest and the next largest magnitude;
    /// 1 when only one term takes part.
    pub margin: f64,
}

impl DominanceVerdict {
    pub fn is_degenerate(&self) -> bool {
        matches!(self.kind, DominanceKind::Degenerate(_))
    }

    pub fn dominant_index(&self) -> Option<usize> {
        match self.kind {
            DominanceKind::UniqueDominant(i) => Some(i),
            DominanceKind::Degenerate(_) => None,
        }
    }
}

pub fn classify_dominance(z: Complex64, terms: &[TermSpec], q: f64) -> Result<DominanceVerdict> {
    classify_dominance_with(z, terms, q, TIE_TOLERANCE)
}

/// Ranks `|lambda|` over the terms with nonzero coefficient. Terms whose
/// coefficient vanishes are skipped: they cannot make zeros accumulate.
pub fn classify_dominance_with(z: Complex64, terms: &[TermSpec], q: f64, tol: f64) -> Result<DominanceVerdict> {
    let mags: Vec<(usize, f64)> = terms
        .iter()
        .enumerate()
        .filter(|(_, t)| t.nonzero)
        .map(|(i, t)| (i, branch_value(t.a, q, z, t.branch).norm()))
        .collect();
    let Some(&(top_i, top)) = mags.iter().max_by(|x, y| x.1.total_cmp(&y.1)) else {
        return Err(Error::InvalidRange("no term with nonzero coefficient".into()));
    };
    let second = mags.iter().filter(|(i, _)| *i != top_i).map(|(_, m)| *m).fold(f64::NEG_INFINITY, f64::max);
    if !second.is_finite() {
        return Ok(DominanceVerdict { kind: DominanceKind::UniqueDominant(top_i), margin: 1.0 });
    }
    let margin = if top > 0.0 { (top - second) / top } else { 0.0 };
    if margin <= tol {
        let tied = mags.iter().filter(|(_, m)| top - m <= tol * top).map(|(i, _)| *i).collect();
        Ok(DominanceVerdict { kind: DominanceKind::Degenerate(tied), margin })
    } else {
        Ok(DominanceVerdict { kind: DominanceKind::UniqueDominant(top_i), margin })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region {
    /// `Re z > -a_l`, off the excluded real segment: `lambda_(a_u)` dominates.
    InRightRegion,
    /// `Re z < -a_u - 2`, off the excluded real segment: `lambda_(a_l)` dominates.
    InLeftRegion,
    Excluded,
}

/// Membership in the two open half-planes where a single parameter value
/// carries the dominant eigenvalue, with their exceptional real segments.
pub fn dominance_region(z: Complex64, a_l: f64, a_u: f64, q: f64) -> Region {
    let (c, d) = (z.re, z.im);
    if c > -a_l {
        let hi = (-a_l).max(-a_u + 2.0 * (q - a_u).max(0.0).sqrt());
        if d == 0.0 && c <= hi {
            return Region::Excluded;
        }
        return Region::InRightRegion;
    }
    if c < -a_u - 2.0 {
        let lo = (-a_u - 2.0).min(-a_l - 2.0 * (q - a_l).max(0.0).sqrt());
        if d == 0.0 && c >= lo {
            return Region::Excluded;
        }
        return Region::InLeftRegion;
    }
    Region::Excluded
}
