//! Plot data shared by the direct SVG output and `replot`, so that both draw
//! from the same numbers.

use std::fmt::Write as _;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::numbers::{fmt17, Sig17};

/// Half-width of the fixed square view.
pub const VIEW: f64 = 3.0;
const ZERO_RADIUS: f64 = 0.025;
const STROKE: f64 = 0.012;

#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    pub id: usize,
    pub kind: String,
    pub points: Vec<(f64, f64)>,
}

/// What gets drawn: curve pieces as polylines, zeros as dots.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PlotData {
    pub curves: Vec<Series>,
    pub zeros: Vec<(f64, f64)>,
}

fn color(kind: &str) -> &'static str {
    match kind {
        "segment" | "arc" => "#1f77b4",
        "circle" => "#ff7f0e",
        "param" | "line" => "#2ca02c",
        "radial" => "#d62728",
        _ => "#9467bd",
    }
}

fn coord(x: f64) -> String {
    let s = format!("{x:.5}");
    if s == "-0.00000" {
        "0.00000".into()
    } else {
        s
    }
}

pub fn render_svg(plot: &PlotData) -> String {
    let w = 2.0 * VIEW;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{v} {v} {w} {w}" width="600" height="600">"#,
        v = -VIEW
    );
    let _ = writeln!(s, r#"<rect x="{v}" y="{v}" width="{w}" height="{w}" fill="white"/>"#, v = -VIEW);
    let _ = writeln!(
        s,
        r##"<line class="axis" x1="0" y1="{v}" x2="0" y2="{V}" stroke="#888888" stroke-width="{STROKE}"/>"##,
        v = -VIEW,
        V = VIEW
    );
    let _ = writeln!(
        s,
        r##"<circle class="unit-circle" cx="0" cy="0" r="1" fill="none" stroke="#888888" stroke-width="{STROKE}" stroke-dasharray="0.05 0.05"/>"##
    );
    for c in &plot.curves {
        let pts: Vec<String> = c
            .points
            .iter()
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|(x, y)| format!("{},{}", coord(*x), coord(-*y)))
            .collect();
        if pts.is_empty() {
            continue;
        }
        let _ = writeln!(
            s,
            r#"<polyline class="{k}" data-piece="{id}" fill="none" stroke="{col}" stroke-width="{w}" points="{p}"/>"#,
            k = c.kind,
            id = c.id,
            col = color(&c.kind),
            w = 2.0 * STROKE,
            p = pts.join(" ")
        );
    }
    for (x, y) in &plot.zeros {
        if x.is_finite() && y.is_finite() {
            let _ = writeln!(
                s,
                r#"<circle class="zero" cx="{}" cy="{}" r="{ZERO_RADIUS}" fill="black"/>"#,
                coord(*x),
                coord(-*y)
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// CSV of curve samples: `piece_id, re, im, kind`.
pub fn curves_to_csv(curves: &[Series]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["piece_id", "re", "im", "kind"]).map_err(CliError::output)?;
    for c in curves {
        for (x, y) in &c.points {
            w.write_record([c.id.to_string(), fmt17(*x), fmt17(*y), c.kind.clone()]).map_err(CliError::output)?;
        }
    }
    finish(w)
}

/// One row of the zeros CSV.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroRow {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub multiplicity: usize,
}

pub fn zeros_to_csv(rows: &[ZeroRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["re", "im", "residual", "multiplicity"]).map_err(CliError::output)?;
    for r in rows {
        w.write_record([fmt17(r.re), fmt17(r.im), fmt17(r.residual), r.multiplicity.to_string()])
            .map_err(CliError::output)?;
    }
    finish(w)
}

/// Flushes an in-memory CSV writer into a string.
pub fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::output(e.into_error()))?;
    String::from_utf8(bytes).map_err(CliError::output)
}

fn parse_num(s: &str) -> Result<f64, CliError> {
    s.trim().parse::<f64>().map_err(|e| CliError::Usage(format!("bad number {s:?}: {e}")))
}

/// Reads a CSV written by `zeros` or `limitset`, telling them apart by header.
pub fn plot_from_csv(text: &str) -> Result<PlotData, CliError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(CliError::input)?.clone();
    let col = |name: &str| header.iter().position(|h| h == name);
    let mut plot = PlotData::default();
    match (col("re"), col("im"), col("piece_id"), col("kind")) {
        (Some(re), Some(im), Some(pid), kind) => {
            for rec in r.records() {
                let rec = rec.map_err(CliError::input)?;
                let id: usize = rec[pid].parse().map_err(|e| CliError::Usage(format!("bad piece_id: {e}")))?;
                let kind = kind.map_or("points", |k| &rec[k]).to_string();
                let p = (parse_num(&rec[re])?, parse_num(&rec[im])?);
                match plot.curves.last_mut() {
                    Some(s) if s.id == id => s.points.push(p),
                    _ => plot.curves.push(Series { id, kind, points: vec![p] }),
                }
            }
        }
        (Some(re), Some(im), None, _) => {
            for rec in r.records() {
                let rec = rec.map_err(CliError::input)?;
                plot.zeros.push((parse_num(&rec[re])?, parse_num(&rec[im])?));
            }
        }
        _ => return Err(CliError::Usage("CSV needs re and im columns".into())),
    }
    Ok(plot)
}

#[derive(Serialize, Deserialize)]
pub struct JsonPiece {
    pub id: usize,
    pub label: String,
    pub kind: String,
    pub points: Vec<[Sig17; 2]>,
}

#[derive(Serialize, Deserialize)]
pub struct JsonZero {
    pub re: Sig17,
    pub im: Sig17,
    pub residual: Sig17,
    pub multiplicity: usize,
}

#[derive(Deserialize)]
struct AnyPlotJson {
    #[serde(default)]
    pieces: Vec<JsonPiece>,
    #[serde(default)]
    zeros: Vec<JsonZero>,
}

/// Reads the JSON written by `zeros` or `limitset`.
pub fn plot_from_json(text: &str) -> Result<PlotData, CliError> {
    let raw: AnyPlotJson = serde_json::from_str(text).map_err(CliError::input)?;
    Ok(PlotData {
        curves: raw
            .pieces
            .into_iter()
            .map(|p| Series { id: p.id, kind: p.kind, points: p.points.iter().map(|[x, y]| (x.0, y.0)).collect() })
            .collect(),
        zeros: raw.zeros.iter().map(|z| (z.re.0, z.im.0)).collect(),
    })
}

/// Dispatches on the content: JSON starts with `{`.
pub fn plot_from_reader(mut r: impl Read) -> Result<PlotData, CliError> {
    let mut text = String::new();
    r.read_to_string(&mut text).map_err(CliError::input)?;
    if text.trim_start().starts_with('{') {
        plot_from_json(&text)
    } else {
        plot_from_csv(&text)
    }
}
