//! One-shot checks with PASS/FAIL reports.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use tutte_atlas_core::eigen::verify_beraha_factorization;
use tutte_atlas_core::exact_poly::{symmetric_to_z, ZPoly};
use tutte_atlas_core::families::{build_family_graph, FamilyId};
use tutte_atlas_core::limit_sets::z_to_v;
use tutte_atlas_core::oracle::tutte;
use tutte_atlas_core::roots::find_roots_seeded;

use crate::numbers::{fmt17, QValue, Sig17};

/// Imaginary parts below this (relative to `max(1, |z|)`) count as real.
pub const REAL_ROOT_TOLERANCE: f64 = 1e-9;
/// Required separation of the `Re(v) > 0` preimages from the unit circle.
pub const UNIT_CIRCLE_GAP: f64 = 0.01;
/// Largest acceptable relative residual of the strip characteristic polynomials.
pub const BERAHA_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VPoint {
    pub re: Sig17,
    pub im: Sig17,
    pub modulus: Sig17,
    pub gap_to_unit_circle: Sig17,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub q: String,
    pub polynomial: String,
    /// Exact coefficients, constant term first.
    pub coefficients: Vec<String>,
    pub real_roots: Vec<Sig17>,
    pub complex_roots: Vec<[Sig17; 2]>,
    pub positive_v: Vec<VPoint>,
    pub checks: Vec<Check>,
    pub failed_stage: Option<String>,
    pub pass: bool,
}

impl CounterexampleReport {
    fn failed(q: &QValue, stage: &str, why: String) -> Self {
        Self {
            q: q.to_string(),
            polynomial: String::new(),
            coefficients: vec![],
            real_roots: vec![],
            complex_roots: vec![],
            positive_v: vec![],
            checks: vec![Check { name: stage.into(), pass: false, detail: why }],
            failed_stage: Some(stage.into()),
            pass: false,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "q = {}", self.q);
        if !self.polynomial.is_empty() {
            let _ = writeln!(s, "polynomial: {}", self.polynomial);
        }
        for r in &self.real_roots {
            let _ = writeln!(s, "real root: {}", fmt17(r.0));
        }
        for [re, im] in &self.complex_roots {
            let _ = writeln!(s, "complex root: {} {}", fmt17(re.0), fmt17(im.0));
        }
        for v in &self.positive_v {
            let _ = writeln!(
                s,
                "v: {} {} |v| = {} gap = {}",
                fmt17(v.re.0),
                fmt17(v.im.0),
                fmt17(v.modulus.0),
                fmt17(v.gap_to_unit_circle.0)
            );
        }
        for c in &self.checks {
            let _ = writeln!(s, "{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        let _ = writeln!(s, "{} verify-counterexample", if self.pass { "PASS" } else { "FAIL" });
        s
    }
}

/// Builds the counterexample graph, runs the oracle, restricts to the
/// hyperbola at `q`, finds the roots and maps them to `v`.
pub fn verify_counterexample(q: &QValue, seed: u64) -> CounterexampleReport {
    let poly = match build_family_graph(FamilyId::CounterexampleC, 0).and_then(|g| tutte(&g)) {
        Ok(p) => p,
        Err(e) => return CounterexampleReport::failed(q, "oracle", e.to_string()),
    };
    let zp: ZPoly = match symmetric_to_z(&poly, &q.exact) {
        Ok(p) => p,
        Err(e) => return CounterexampleReport::failed(q, "restriction", e.to_string()),
    };
    let rs = match find_roots_seeded(&zp, seed).and_then(|r| r.require_converged()) {
        Ok(r) => r,
        Err(e) => return CounterexampleReport::failed(q, "roots", e.to_string()),
    };
    let pts = rs.points();
    let (real, complex): (Vec<Complex64>, Vec<Complex64>) =
        pts.iter().partition(|z| z.im.abs() <= REAL_ROOT_TOLERANCE * z.norm().max(1.0));
    let positive_v: Vec<Complex64> = complex
        .iter()
        .flat_map(|&z| {
            let (a, b) = z_to_v(z, q.value);
            [a, b]
        })
        .filter(|v| v.re > 0.0)
        .collect();
    let min_gap = positive_v.iter().map(|v| (v.norm() - 1.0).abs()).fold(f64::INFINITY, f64::min);
    let checks = vec![
        Check { name: "one real root".into(), pass: real.len() == 1, detail: format!("{} real", real.len()) },
        Check {
            name: "complex roots in Re(z) > 0".into(),
            pass: complex.len() == 2 && complex.iter().all(|z| z.re > 0.0),
            detail: complex.iter().map(|z| fmt17(z.re)).collect::<Vec<_>>().join(", "),
        },
        Check {
            name: "Re(v) > 0 preimages off the unit circle".into(),
            pass: !positive_v.is_empty() && min_gap > UNIT_CIRCLE_GAP,
            detail: format!("min ||v| - 1| = {} (needs > {UNIT_CIRCLE_GAP})", fmt17(min_gap)),
        },
    ];
    let pass = checks.iter().all(|c| c.pass);
    CounterexampleReport {
        q: q.to_string(),
        polynomial: zp.to_string(),
        coefficients: zp.coeffs().iter().map(|c| c.to_string()).collect(),
        real_roots: real.iter().map(|z| Sig17(z.re)).collect(),
        complex_roots: complex.iter().map(|z| [Sig17(z.re), Sig17(z.im)]).collect(),
        positive_v: positive_v
            .iter()
            .map(|v| VPoint {
                re: Sig17(v.re),
                im: Sig17(v.im),
                modulus: Sig17(v.norm()),
                gap_to_unit_circle: Sig17((v.norm() - 1.0).abs()),
            })
            .collect(),
        checks,
        failed_stage: None,
        pass,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BerahaReport {
    pub ly: u32,
    pub q: String,
    pub samples: usize,
    pub seed: u64,
    pub max_residual: Sig17,
    pub tolerance: Sig17,
    pub pass: bool,
}

impl BerahaReport {
    pub fn to_text(&self) -> String {
        format!(
            "{} verify-beraha ly={} q={} samples={}: max relative residual {} (needs < {})\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.ly,
            self.q,
            self.samples,
            fmt17(self.max_residual.0),
            fmt17(self.tolerance.0)
        )
    }
}

/// Random points in `[-4, 4]^2` off the real axis.
pub fn beraha_samples(count: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let im = rng.gen_range(0.05..4.0) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
            Complex64::new(rng.gen_range(-4.0..4.0), im)
        })
        .collect()
}

pub fn verify_beraha(ly: u32, q: &QValue, samples: usize, seed: u64) -> tutte_atlas_core::Result<BerahaReport> {
    let pts = beraha_samples(samples, seed);
    let worst = verify_beraha_factorization(ly, &pts, q.value)?;
    Ok(BerahaReport {
        ly,
        q: q.to_string(),
        samples,
        seed,
        max_residual: Sig17(worst),
        tolerance: Sig17(BERAHA_TOLERANCE),
        pass: worst < BERAHA_TOLERANCE,
    })
}
