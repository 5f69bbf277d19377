use std::fs;
use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;
use tutte_atlas_core::eigen::{
    classify_dominance, dominance_region, pressure, pressure_limit, Branch, DominanceKind, Region, TermSpec,
};
use tutte_atlas_core::exact_poly::{symmetric_to_z, BiPoly};
use tutte_atlas_core::families::{family_bipoly, spectral_form, FamilyId};
use tutte_atlas_core::limit_sets::{family_limit_set, z_to_v, Plane};
use tutte_atlas_core::oracle::{tutte, Multigraph};
use tutte_atlas_core::roots::{convergence_report_seeded, find_family_roots_seeded};

use crate::error::CliError;
use crate::numbers::{config_seed, fmt17, QValue, Sig17};
use crate::plot::{
    curves_to_csv, finish, plot_from_reader, render_svg, zeros_to_csv, JsonPiece, JsonZero, PlotData, Series, ZeroRow,
};
use crate::verify::{verify_beraha, verify_counterexample};
use crate::{
    Command, ConvergenceArgs, DominanceArgs, FamilyArgs, LimitsetArgs, OracleArgs, Output, PlaneArg, PlotFormat,
    PolyFormat, PressureArgs, ReplotArgs, ReportFormat, TableFormat, VerifyBerahaArgs, VerifyCounterexampleArgs,
    ZerosArgs,
};

pub fn dispatch(cmd: &Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (text, output, verdict) = match cmd {
        Command::Family(a) => (family(a)?, &a.output, Ok(())),
        Command::Oracle(a) => (oracle(a)?, &a.output, Ok(())),
        Command::Zeros(a) => (zeros(a)?, &a.output, Ok(())),
        Command::Limitset(a) => (limitset(a)?, &a.output, Ok(())),
        Command::Dominance(a) => (dominance(a)?, &a.output, Ok(())),
        Command::Pressure(a) => (pressure_table(a)?, &a.output, Ok(())),
        Command::Convergence(a) => (convergence(a)?, &a.output, Ok(())),
        Command::VerifyCounterexample(a) => {
            let (text, pass) = counterexample(a)?;
            (text, &a.output, verdict_of(pass, "verify-counterexample"))
        }
        Command::VerifyBeraha(a) => {
            let (text, pass) = beraha(a)?;
            (text, &a.output, verdict_of(pass, "verify-beraha"))
        }
        Command::Replot(a) => (replot(a)?, &a.output, Ok(())),
    };
    emit(output, &text, stdout)?;
    verdict
}

fn verdict_of(pass: bool, name: &str) -> Result<(), CliError> {
    if pass {
        Ok(())
    } else {
        Err(CliError::Computation(format!("{name} reported FAIL")))
    }
}

fn emit(output: &Output, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &output.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::output(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(CliError::output),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(CliError::output)
}

fn size(id: FamilyId, n: Option<usize>) -> Result<usize, CliError> {
    match (id.has_size(), n) {
        (false, _) => Ok(0),
        (true, Some(n)) => Ok(n),
        (true, None) => Err(CliError::Usage(format!("--n is required for {id}"))),
    }
}

fn render_poly(p: &BiPoly, q: Option<&QValue>, format: PolyFormat) -> Result<String, CliError> {
    let need_q = || q.ok_or_else(|| CliError::Usage("--q is required for the z format".into()));
    Ok(match format {
        PolyFormat::Xy => format!("{p}\n"),
        PolyFormat::Z => format!("{}\n", symmetric_to_z(p, &need_q()?.exact)?),
        PolyFormat::Json => match q {
            Some(q) => to_json(&symmetric_to_z(p, &q.exact)?)?,
            None => to_json(p)?,
        },
    })
}

fn family(a: &FamilyArgs) -> Result<String, CliError> {
    let p = family_bipoly(a.id, size(a.id, a.n)?)?;
    render_poly(&p, a.q.as_ref(), a.format)
}

fn oracle(a: &OracleArgs) -> Result<String, CliError> {
    let text = fs::read_to_string(&a.graph).map_err(|e| CliError::input(format!("{}: {e}", a.graph.display())))?;
    let g = Multigraph::from_json(&text)?;
    render_poly(&tutte(&g)?, a.q.as_ref(), a.format)
}

#[derive(Serialize)]
struct ZerosJson<'a> {
    family: &'a str,
    n: usize,
    q: String,
    plane: &'a str,
    degree: usize,
    seed: u64,
    zeros: Vec<JsonZero>,
}

fn plane_name(p: PlaneArg) -> &'static str {
    match p {
        PlaneArg::Z => "z",
        PlaneArg::V => "v",
    }
}

/// Root rows in the chosen plane; in `v` each root gives both preimages.
pub fn zero_rows(a: &ZerosArgs) -> Result<(Vec<ZeroRow>, usize, u64), CliError> {
    let n = size(a.family, a.n)?;
    let seed = config_seed(&["zeros", a.family.name(), &n.to_string(), &a.q.to_string()]);
    let rs = find_family_roots_seeded(a.family, n, &a.q.exact, seed)?.require_converged()?;
    let mut rows = Vec::new();
    for r in &rs.roots {
        let pts = match a.plane {
            PlaneArg::Z => vec![r.z],
            PlaneArg::V => {
                let (v1, v2) = z_to_v(r.z, a.q.value);
                vec![v1, v2]
            }
        };
        for p in pts {
            if !a.positive_re || p.re > 0.0 {
                rows.push(ZeroRow { re: p.re, im: p.im, residual: r.residual, multiplicity: r.multiplicity });
            }
        }
    }
    Ok((rows, rs.polynomial_degree, seed))
}

fn zeros(a: &ZerosArgs) -> Result<String, CliError> {
    let (rows, degree, seed) = zero_rows(a)?;
    match a.out {
        TableFormat::Csv => zeros_to_csv(&rows),
        TableFormat::Json => to_json(&ZerosJson {
            family: a.family.name(),
            n: size(a.family, a.n)?,
            q: a.q.to_string(),
            plane: plane_name(a.plane),
            degree,
            seed,
            zeros: rows
                .iter()
                .map(|r| JsonZero {
                    re: Sig17(r.re),
                    im: Sig17(r.im),
                    residual: Sig17(r.residual),
                    multiplicity: r.multiplicity,
                })
                .collect(),
        }),
    }
}

#[derive(Serialize)]
struct LimitsetJson<'a> {
    family: &'a str,
    q: String,
    plane: &'a str,
    samples: usize,
    extent: Sig17,
    pieces: Vec<JsonPiece>,
}

/// Sampled pieces of the limit set, with their labels.
pub fn limitset_series(a: &LimitsetArgs) -> Result<(Vec<Series>, Vec<String>, f64), CliError> {
    if a.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let plane: Plane = a.plane.into();
    let extent = a.extent.unwrap_or(if plane == Plane::V { 10.0 } else { 50.0 });
    if extent.is_nan() || extent <= 0.0 {
        return Err(CliError::Usage("--extent must be positive".into()));
    }
    let set = family_limit_set(a.family, a.q.value, plane)?;
    let mut series = Vec::new();
    let mut labels = Vec::new();
    for (id, lp) in set.pieces.iter().enumerate() {
        let pts = lp.piece.sample(a.samples, extent);
        series.push(Series {
            id,
            kind: lp.piece.kind().to_string(),
            points: pts.iter().map(|p| (p.re, p.im)).collect(),
        });
        labels.push(lp.label.clone());
    }
    Ok((series, labels, extent))
}

fn limitset(a: &LimitsetArgs) -> Result<String, CliError> {
    let (series, labels, extent) = limitset_series(a)?;
    match a.out {
        PlotFormat::Csv => curves_to_csv(&series),
        PlotFormat::Svg => Ok(render_svg(&PlotData { curves: series, zeros: vec![] })),
        PlotFormat::Json => to_json(&LimitsetJson {
            family: a.family.name(),
            q: a.q.to_string(),
            plane: plane_name(a.plane),
            samples: a.samples,
            extent: Sig17(extent),
            pieces: series
                .into_iter()
                .zip(labels)
                .map(|(s, label)| JsonPiece {
                    id: s.id,
                    label,
                    kind: s.kind,
                    points: s.points.iter().map(|&(x, y)| [Sig17(x), Sig17(y)]).collect(),
                })
                .collect(),
        }),
    }
}

#[derive(Serialize)]
struct DominanceRow {
    re: Sig17,
    im: Sig17,
    verdict: &'static str,
    terms: String,
    margin: Sig17,
    region: &'static str,
}

fn term_name(t: &TermSpec) -> String {
    format!("{}{}", t.a, t.branch.symbol())
}

fn dominance(a: &DominanceArgs) -> Result<String, CliError> {
    let q = a.q.value;
    let terms: Vec<TermSpec> = match a.family {
        Some(id) => spectral_form(id, q)?.term_specs(),
        None => {
            a.pairs.iter().flat_map(|&p| [TermSpec::new(p, Branch::Plus), TermSpec::new(p, Branch::Minus)]).collect()
        }
    };
    let present: Vec<f64> = terms.iter().filter(|t| t.nonzero).map(|t| t.a).collect();
    if present.is_empty() {
        return Err(CliError::Usage("no eigenvalue with nonzero coefficient".into()));
    }
    if present.iter().any(|&p| !(0.0..=q).contains(&p)) {
        return Err(CliError::Usage(format!("every parameter must lie in [0, q = {q}]")));
    }
    let a_l = present.iter().copied().fold(f64::INFINITY, f64::min);
    let a_u = present.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut rows = Vec::new();
    for im in a.grid.im.values() {
        for re in a.grid.re.values() {
            let z = Complex64::new(re, im);
            let v = classify_dominance(z, &terms, q)?;
            let (verdict, idx) = match &v.kind {
                DominanceKind::UniqueDominant(i) => ("unique", vec![*i]),
                DominanceKind::Degenerate(ix) => ("degenerate", ix.clone()),
            };
            let region = match dominance_region(z, a_l, a_u, q) {
                Region::InRightRegion => "right",
                Region::InLeftRegion => "left",
                Region::Excluded => "neither",
            };
            rows.push(DominanceRow {
                re: Sig17(re),
                im: Sig17(im),
                verdict,
                terms: idx.iter().map(|&i| term_name(&terms[i])).collect::<Vec<_>>().join(" "),
                margin: Sig17(v.margin),
                region,
            });
        }
    }
    match a.out {
        TableFormat::Json => to_json(&rows),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["re", "im", "verdict", "terms", "margin", "region"]).map_err(CliError::output)?;
            for r in &rows {
                w.write_record([
                    fmt17(r.re.0),
                    fmt17(r.im.0),
                    r.verdict.into(),
                    r.terms.clone(),
                    fmt17(r.margin.0),
                    r.region.into(),
                ])
                .map_err(CliError::output)?;
            }
            finish(w)
        }
    }
}

#[derive(Serialize)]
struct PressureRow {
    z_re: Sig17,
    z_im: Sig17,
    n: usize,
    p_re: Sig17,
    p_im: Sig17,
    limit_re: Sig17,
    limit_im: Sig17,
    error: Sig17,
}

fn pressure_table(a: &PressureArgs) -> Result<String, CliError> {
    let form = spectral_form(a.family, a.q.value)?;
    let mut rows = Vec::new();
    for pt in &a.z {
        let z = pt.0;
        let limit = pressure_limit(&form, z)?;
        for &n in &a.n {
            let p = pressure(&form, n, z)?;
            rows.push(PressureRow {
                z_re: Sig17(z.re),
                z_im: Sig17(z.im),
                n,
                p_re: Sig17(p.re),
                p_im: Sig17(p.im),
                limit_re: Sig17(limit.re),
                limit_im: Sig17(limit.im),
                error: Sig17((p - limit).norm()),
            });
        }
    }
    match a.out {
        TableFormat::Json => to_json(&rows),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["z_re", "z_im", "n", "p_re", "p_im", "limit_re", "limit_im", "error"])
                .map_err(CliError::output)?;
            for r in &rows {
                w.write_record([
                    fmt17(r.z_re.0),
                    fmt17(r.z_im.0),
                    r.n.to_string(),
                    fmt17(r.p_re.0),
                    fmt17(r.p_im.0),
                    fmt17(r.limit_re.0),
                    fmt17(r.limit_im.0),
                    fmt17(r.error.0),
                ])
                .map_err(CliError::output)?;
            }
            finish(w)
        }
    }
}

#[derive(Serialize)]
struct ConvergenceJsonRow {
    n: usize,
    degree: usize,
    max_distance: Sig17,
    mean_distance: Sig17,
    isolated: Vec<[Sig17; 2]>,
    max_distance_off_isolated: Sig17,
    converged: bool,
    max_residual: Sig17,
}

fn convergence(a: &ConvergenceArgs) -> Result<String, CliError> {
    if !a.family.has_size() {
        return Err(CliError::Usage("convergence needs a family with a size parameter".into()));
    }
    let mut ns = a.n.clone();
    ns.sort_unstable();
    ns.dedup();
    let seed = config_seed(&["convergence", a.family.name(), &a.q.to_string()]);
    let rows = convergence_report_seeded(a.family, &a.q.exact, &ns, a.plane.into(), seed)?;
    let rows: Vec<ConvergenceJsonRow> = rows
        .into_iter()
        .map(|r| ConvergenceJsonRow {
            n: r.n,
            degree: r.degree,
            max_distance: Sig17(r.max_distance),
            mean_distance: Sig17(r.mean_distance),
            isolated: r.isolated.iter().map(|z| [Sig17(z.re), Sig17(z.im)]).collect(),
            max_distance_off_isolated: Sig17(r.max_distance_off_isolated),
            converged: r.converged,
            max_residual: Sig17(r.max_residual),
        })
        .collect();
    match a.out {
        TableFormat::Json => to_json(&rows),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "n",
                "degree",
                "max_distance",
                "mean_distance",
                "isolated",
                "max_distance_off_isolated",
                "converged",
                "max_residual",
            ])
            .map_err(CliError::output)?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    r.degree.to_string(),
                    fmt17(r.max_distance.0),
                    fmt17(r.mean_distance.0),
                    r.isolated.len().to_string(),
                    fmt17(r.max_distance_off_isolated.0),
                    r.converged.to_string(),
                    fmt17(r.max_residual.0),
                ])
                .map_err(CliError::output)?;
            }
            finish(w)
        }
    }
}

fn counterexample(a: &VerifyCounterexampleArgs) -> Result<(String, bool), CliError> {
    let seed = config_seed(&["verify-counterexample", &a.q.to_string()]);
    let report = verify_counterexample(&a.q, seed);
    let text = match a.out {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => to_json(&report)?,
    };
    Ok((text, report.pass))
}

fn beraha(a: &VerifyBerahaArgs) -> Result<(String, bool), CliError> {
    if a.samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let seed = a.seed.unwrap_or_else(|| config_seed(&["verify-beraha", &a.ly.to_string(), &a.q.to_string()]));
    let report = verify_beraha(a.ly, &a.q, a.samples, seed)?;
    let text = match a.out {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => to_json(&report)?,
    };
    Ok((text, report.pass))
}

fn replot(a: &ReplotArgs) -> Result<String, CliError> {
    let plot = if a.input.as_os_str() == "-" {
        plot_from_reader(std::io::stdin().lock())?
    } else {
        let f = fs::File::open(&a.input).map_err(|e| CliError::input(format!("{}: {e}", a.input.display())))?;
        plot_from_reader(f)?
    };
    Ok(render_svg(&plot))
}
