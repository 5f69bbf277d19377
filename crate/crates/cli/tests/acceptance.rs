//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tutte_atlas_cli::numbers::QValue;
use tutte_atlas_cli::verify::{beraha_samples, BERAHA_TOLERANCE};
use tutte_atlas_core::eigen::{
    eigen_explicit, eigen_pair, pressure, pressure_limit, verify_beraha_factorization, TIE_TOLERANCE,
};
use tutte_atlas_core::exact_poly::{parse_rational, BiPoly};
use tutte_atlas_core::families::{
    build_family_graph, counterexample_poly, cycle_multi_poly, family_bipoly, spectral_form, wheel_poly, FamilyId,
};
use tutte_atlas_core::limit_sets::{cross_degeneration_curve, pair_degeneration_curve, z_to_v, CurveSet, Plane};
use tutte_atlas_core::oracle::tutte;
use tutte_atlas_core::roots::{convergence_report_seeded, find_family_roots_seeded};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

// Counterexample at q = 16 through the binary.

fn counterexample() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_tutte-atlas"))
        .args(["verify-counterexample", "--q", "16", "--out", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let coeffs: Vec<String> = report["coefficients"]
        .as_array()
        .ok_or("no coefficients")?
        .iter()
        .map(|c| c.as_str().unwrap_or_default().to_string())
        .collect();
    if coeffs != ["218", "12", "6", "1"] {
        return Err(format!("coefficients {coeffs:?}"));
    }
    let c = 210f64.cbrt();
    let want_real = -2.0 - c;
    let want_complex = Complex64::new(c / 2.0 - 2.0, c * 3f64.sqrt() / 2.0);
    let real: Vec<f64> =
        report["real_roots"].as_array().ok_or("no real roots")?.iter().filter_map(|r| r.as_f64()).collect();
    let complex: Vec<Complex64> = report["complex_roots"]
        .as_array()
        .ok_or("no complex roots")?
        .iter()
        .map(|p| Complex64::new(p[0].as_f64().unwrap_or(f64::NAN), p[1].as_f64().unwrap_or(f64::NAN)))
        .collect();
    if real.len() != 1 || complex.len() != 2 {
        return Err(format!("{} real, {} complex", real.len(), complex.len()));
    }
    let real_err = (real[0] - want_real).abs();
    let complex_err =
        complex.iter().map(|z| (z - want_complex).norm().min((z - want_complex.conj()).norm())).fold(0.0f64, f64::max);
    let conj_pair = (complex[0] - complex[1].conj()).norm() < 1e-10;
    let gaps: Vec<f64> = report["positive_v"]
        .as_array()
        .ok_or("no v points")?
        .iter()
        .filter_map(|v| v["gap_to_unit_circle"].as_f64())
        .collect();
    let min_gap = gaps.iter().copied().fold(f64::INFINITY, f64::min);
    check(
        real_err < 1e-10 && complex_err < 1e-10 && conj_pair && !gaps.is_empty() && min_gap > 0.01,
        format!(
            "z^3+6z^2+12z+218; root errors {real_err:.2e} (real), {complex_err:.2e} (complex); \
             min ||v|-1| = {min_gap:.4} over {} points",
            gaps.len()
        ),
    )
}

// Printed polynomials: `x^3+y^3+3x^2+...`, with `^k` or `^{k}`.

fn parse_printed(s: &str) -> BiPoly {
    let mut terms = Vec::new();
    for term in s.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let digits: String = term.chars().take_while(char::is_ascii_digit).collect();
        let coeff: i64 = if digits.is_empty() { 1 } else { digits.parse().unwrap() };
        let mut rest = &term[digits.len()..];
        let (mut i, mut j) = (0u32, 0u32);
        while let Some(var) = rest.chars().next() {
            rest = &rest[1..];
            let mut power = 1;
            if let Some(r) = rest.strip_prefix('^') {
                let r = r.trim_start_matches('{');
                let k: String = r.chars().take_while(char::is_ascii_digit).collect();
                power = k.parse().unwrap();
                rest = r[k.len()..].trim_start_matches('}');
            }
            match var {
                'x' => i += power,
                'y' => j += power,
                other => panic!("unexpected {other:?} in {term:?}"),
            }
        }
        terms.push((i, j, coeff));
    }
    BiPoly::from_terms(terms)
}

const PRINTED_WHEEL: [&str; 3] = ["xy", "x^2+y^2+xy+x+y", "x^3+y^3+3x^2+3y^2+4xy+2x+2y"];
const PRINTED_CYCLE: [&str; 4] = ["1", "x+y", "x^2+y^2+xy+x+y", "x^3+y^3+xy^{2}+x^2y+x^2y^2+x^2+y^2+xy+x+y"];

fn printed_polynomials() -> Outcome {
    let mut bad = Vec::new();
    for (k, s) in PRINTED_WHEEL.iter().enumerate() {
        if wheel_poly(k + 1) != parse_printed(s) {
            bad.push(format!("B_{}", k + 1));
        }
    }
    for (k, s) in PRINTED_CYCLE.iter().enumerate() {
        if cycle_multi_poly(k) != parse_printed(s) {
            bad.push(format!("G_{k},{k}"));
        }
    }
    check(
        bad.is_empty(),
        if bad.is_empty() { "B_1..B_3, G_0,0..G_3,3 exact".into() } else { format!("mismatch {bad:?}") },
    )
}

// Recurrences against deletion-contraction.

fn oracle_equivalence() -> Outcome {
    let mut cases = vec![(FamilyId::CounterexampleC, 0)];
    cases.extend((1..=6).map(|n| (FamilyId::Wheel, n)));
    cases.extend((0..=6).map(|n| (FamilyId::CycleMultiEdge, n)));
    cases.extend((0..=6).map(|n| (FamilyId::TriangleStrip, n)));
    let mut bad = Vec::new();
    for &(id, n) in &cases {
        let oracle = build_family_graph(id, n).and_then(|g| tutte(&g)).map_err(|e| format!("{id} n={n}: {e}"))?;
        let built = if id == FamilyId::CounterexampleC { counterexample_poly() } else { family_bipoly(id, n).unwrap() };
        if oracle != built {
            bad.push(format!("{id} n={n}"));
        }
    }
    check(bad.is_empty(), format!("{} graphs compared, mismatches {bad:?}", cases.len()))
}

// Eigenvalue identities.

fn eigen_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let (mut worst_vieta, mut worst_explicit) = (0.0f64, 0.0f64);
    for _ in 0..10_000 {
        let q = rng.gen_range(0.1..20.0);
        let a = rng.gen_range(0.0..q);
        let z = Complex64::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let pair = eigen_pair(a, q, z);
        worst_vieta = pair.identity_defects().iter().copied().fold(worst_vieta, f64::max);
        if z.im.abs() < 1e-6 {
            continue;
        }
        let e = eigen_explicit(a, q, z).map_err(|e| e.to_string())?;
        let direct = (pair.lambda_plus - e.lambda_plus).norm().max((pair.lambda_minus - e.lambda_minus).norm());
        let crossed = (pair.lambda_plus - e.lambda_minus).norm().max((pair.lambda_minus - e.lambda_plus).norm());
        worst_explicit = worst_explicit.max(direct.min(crossed));
    }
    check(
        worst_vieta <= 1e-12 && worst_explicit <= 1e-10,
        format!("10000 samples: identity defect {worst_vieta:.2e}, explicit vs quadratic {worst_explicit:.2e}"),
    )
}

// Degeneration curves.

fn samples(set: &CurveSet, at_least: usize) -> Vec<Complex64> {
    let per = at_least.div_ceil(set.pieces.len().max(1)) + 1;
    set.sample(per, f64::INFINITY).into_iter().flat_map(|(_, p)| p).collect()
}

fn pair_gap(a: f64, q: f64, z: Complex64) -> f64 {
    let p = eigen_pair(a, q, z);
    let (m1, m2) = (p.lambda_plus.norm(), p.lambda_minus.norm());
    (m1 - m2).abs() / m1.max(m2)
}

/// Relative distance of `|lambda_a^(+/-)|` from `|lambda_q^(+/-)| = {1, |z+q+1|}`.
fn cross_gap(a: f64, q: f64, z: Complex64) -> f64 {
    let p = eigen_pair(a, q, z);
    let targets = [1.0, (z + q + 1.0).norm()];
    [p.lambda_plus.norm(), p.lambda_minus.norm()]
        .iter()
        .flat_map(|&m| targets.map(|t| (m - t).abs() / m.max(t)))
        .fold(f64::INFINITY, f64::min)
}

fn curve_membership() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let (mut worst_on, mut min_off) = (0.0f64, f64::INFINITY);
    let mut counts = (0usize, 0usize);
    for q in [1.5, 3.0, 9.0] {
        for a in [0.0, q / 2.0, q - 0.25] {
            let pair = pair_degeneration_curve(a, q);
            let cross = cross_degeneration_curve(a, q);
            for (set, gap) in [(&pair, pair_gap as fn(f64, f64, Complex64) -> f64), (&cross, cross_gap)] {
                let on = samples(set, 500);
                for z in &on {
                    worst_on = worst_on.max(gap(a, q, *z));
                }
                counts.0 += on.len();
                let mut off = 0;
                while off < 500 {
                    let z = Complex64::new(rng.gen_range(-a - 8.0..6.0), rng.gen_range(-6.0..6.0));
                    if set.distance(z) < 0.05 || z.im.abs() < 0.05 {
                        continue;
                    }
                    min_off = min_off.min(gap(a, q, z));
                    off += 1;
                }
                counts.1 += off;
            }
        }
    }
    check(
        worst_on <= 1e-8 && min_off > TIE_TOLERANCE,
        format!(
            "{} on-curve samples max gap {worst_on:.2e} (<= 1e-8); {} off-curve min gap {min_off:.2e} (> {TIE_TOLERANCE:e})",
            counts.0, counts.1
        ),
    )
}

// Beraha-number factorizations.

fn beraha_factorization() -> Outcome {
    let q: QValue = "2.5".parse().unwrap();
    let pts = beraha_samples(100, 0x5eed_0006);
    let r2 = verify_beraha_factorization(2, &pts, q.value).map_err(|e| e.to_string())?;
    let r3 = verify_beraha_factorization(3, &pts, q.value).map_err(|e| e.to_string())?;
    check(
        r2 < BERAHA_TOLERANCE && r3 < BERAHA_TOLERANCE,
        format!("100 samples at q = 2.5: width 2 residual {r2:.2e}, width 3 residual {r3:.2e} (need < {BERAHA_TOLERANCE:e})"),
    )
}

// Zero convergence and the positive half-plane, sharing one sweep list.

/// Distances at or below this are rounding of points that lie on the set.
const DISTANCE_FLOOR: f64 = 1e-12;

fn sweep_cases() -> Vec<(FamilyId, &'static str)> {
    let mut cases = Vec::new();
    for id in FamilyId::SWEEPABLE {
        for q in ["1.3", "3", "9"] {
            cases.push((id, q));
        }
    }
    cases.push((FamilyId::Wheel, "2"));
    cases.push((FamilyId::Wheel, "4.5"));
    cases
}

fn zero_convergence() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (id, q) in sweep_cases() {
        let exact = parse_rational(q).unwrap();
        let rows = convergence_report_seeded(id, &exact, &[25, 100], Plane::V, 0x5eed_0007)
            .map_err(|e| format!("{id} q={q}: {e}"))?;
        let (d25, d100) = (rows[0].max_distance, rows[1].max_distance);
        let decreasing = d100 < d25 || (d25 <= DISTANCE_FLOOR && d100 <= DISTANCE_FLOOR);
        let pass = decreasing && d100 < 0.1 && rows.iter().all(|r| r.converged);
        ok &= pass;
        lines.push(format!("{}{id} q={q}: {d25:.3e} -> {d100:.3e}", if pass { "" } else { "!" }));
    }
    check(ok, lines.join("; "))
}

fn positive_half_plane() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (id, q) in sweep_cases() {
        let exact = parse_rational(q).unwrap();
        let qf: f64 = q.parse().unwrap();
        let rs = find_family_roots_seeded(id, 100, &exact, 0x5eed_0008)
            .and_then(|r| r.require_converged())
            .map_err(|e| format!("{id} q={q}: {e}"))?;
        let gaps: Vec<f64> = rs
            .roots
            .iter()
            .flat_map(|r| {
                let (a, b) = z_to_v(r.z, qf);
                [a, b]
            })
            .filter(|v| v.re >= 0.0)
            .map(|v| (v.norm() - 1.0).abs())
            .collect();
        let far = id == FamilyId::CycleMultiEdge && q == "9";
        let (lo, hi) = gaps.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &g| (lo.min(g), hi.max(g)));
        let pass = if far { gaps.iter().all(|&g| g >= 0.05) } else { gaps.iter().all(|&g| g <= 0.05) };
        ok &= pass;
        let range = if gaps.is_empty() { "none".to_string() } else { format!("[{lo:.3e}, {hi:.3e}]") };
        lines.push(format!("{}{id} q={q}: {} points, ||v|-1| in {range}", if pass { "" } else { "!" }, gaps.len()));
    }
    check(ok, lines.join("; "))
}

// Pressure convergence.

/// Smallest parameter among the eigenvalues present in each family.
fn lowest_parameter(id: FamilyId) -> f64 {
    match id {
        FamilyId::CycleMultiEdge => 0.0,
        _ => 1.0,
    }
}

fn pressure_convergence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut lines = Vec::new();
    let mut ok = true;
    for id in FamilyId::SWEEPABLE {
        for q in [1.3, 3.0, 9.0] {
            let form = spectral_form(id, q).map_err(|e| e.to_string())?;
            let a_l = lowest_parameter(id);
            let (mut worst400, mut fails) = (0.0f64, 0);
            for _ in 0..20 {
                let im = rng.gen_range(0.2..6.0) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
                let z = Complex64::new(rng.gen_range(-a_l + 0.5..-a_l + 8.0), im);
                let limit = pressure_limit(&form, z).map_err(|e| format!("{id} q={q} z={z}: {e}"))?;
                let e100 = (pressure(&form, 100, z).map_err(|e| e.to_string())? - limit).norm();
                let e400 = (pressure(&form, 400, z).map_err(|e| e.to_string())? - limit).norm();
                worst400 = worst400.max(e400);
                let shrinks = e400 < e100 || (e100 <= DISTANCE_FLOOR && e400 <= DISTANCE_FLOOR);
                if !(e400 < 0.02 && shrinks) {
                    fails += 1;
                }
            }
            ok &= fails == 0;
            lines.push(format!("{id} q={q}: max error at 400 {worst400:.2e}, {fails} failing points"));
        }
    }
    check(ok, lines.join("; "))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "counterexample at q=16", limit: Duration::from_secs(1), run: counterexample },
        Criterion { id: 2, name: "printed polynomials", limit: Duration::from_secs(1), run: printed_polynomials },
        Criterion { id: 3, name: "oracle equivalence", limit: Duration::from_secs(60), run: oracle_equivalence },
        Criterion { id: 4, name: "eigenvalue identities", limit: Duration::from_secs(5), run: eigen_identities },
        Criterion {
            id: 5,
            name: "degeneration-curve membership",
            limit: Duration::from_secs(10),
            run: curve_membership,
        },
        Criterion { id: 6, name: "Beraha factorization", limit: Duration::from_secs(2), run: beraha_factorization },
        Criterion { id: 7, name: "zero convergence", limit: Duration::from_secs(300), run: zero_convergence },
        Criterion { id: 8, name: "positive half-plane", limit: Duration::from_secs(300), run: positive_half_plane },
        Criterion { id: 9, name: "pressure convergence", limit: Duration::from_secs(10), run: pressure_convergence },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if took <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {:?} budget", c.limit)),
            Err(d) => (false, d),
        };
        if !pass {
            failed += 1;
        }
        println!("{} {} {}: {detail} [{:.2?}]", if pass { "PASS" } else { "FAIL" }, c.id, c.name, took);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
