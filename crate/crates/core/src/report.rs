//! CSV reports and SVG speedup charts for harness results.
//!
//! The CSV carries the environment record as `#`-prefixed comment lines,
//! then the header `N,t_total,S_comp,E_comp,S_theor,E_theor` and one row
//! per worker count (times in milliseconds). For the variable-workload
//! experiment the per-size single-worker reference times appear as
//! `# t_single_ms[N]: ...` comments, so every derived column is
//! recomputable from the file alone. Parsing keeps lines verbatim, which
//! makes parse → emit byte-identical.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::bench::{BenchResult, Experiment};
use crate::error::{Error, Result};

/// Render a result as CSV.
pub fn result_to_csv(r: &BenchResult) -> Result<String> {
    if r.rows.is_empty() {
        return Err(Error::Report("empty result: no measured rows".into()));
    }
    let mut out = String::new();
    let _ = writeln!(out, "# schema: 1");
    let _ = writeln!(out, "# experiment: {}", r.experiment.name());
    let _ = writeln!(out, "# cores: {}", r.env.cores);
    let _ = writeln!(out, "# timestamp_unix_ms: {}", r.env.timestamp_unix_ms);
    let _ = writeln!(out, "# repetitions: {}", r.env.repetitions);
    let _ = writeln!(out, "# seed: {}", r.env.seed);
    let _ = writeln!(out, "# units: milliseconds");
    let _ = writeln!(out, "# t_seq_ms: {:.3}", r.t_seq_ms);
    let _ = writeln!(out, "# t_par_ms: {:.3}", r.t_par_ms);
    let _ = writeln!(out, "# s_measured: {}", r.s_measured);
    let _ = writeln!(out, "# s_used: {}", r.s_used);
    if let Some(z1) = r.lu_z1 {
        let _ = writeln!(out, "# z1: {z1}");
    }
    for note in &r.env.notes {
        let _ = writeln!(out, "# note: {note}");
    }
    if r.experiment == Experiment::LuVariable {
        for row in &r.rows {
            let _ = writeln!(out, "# t_single_ms[{}]: {:.3}", row.n, row.t_single_ms);
        }
    }
    out.push_str("N,t_total,S_comp,E_comp,S_theor,E_theor\n");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{},{:.3},{:.6},{:.6},{:.6},{:.6}",
            row.n, row.t_total_ms, row.s_comp, row.e_comp, row.s_theor, row.e_theor
        );
    }
    Ok(out)
}

/// A parsed report: comments and rows kept verbatim plus typed row values.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvDoc {
    pub comments: Vec<String>,
    pub header: String,
    pub row_lines: Vec<String>,
}

/// One typed data row of a report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsvRow {
    pub n: usize,
    pub t_total: f64,
    pub s_comp: f64,
    pub e_comp: f64,
    pub s_theor: f64,
    pub e_theor: f64,
}

pub fn parse_csv(text: &str) -> Result<CsvDoc> {
    let mut comments = Vec::new();
    let mut header = None;
    let mut row_lines = Vec::new();
    for line in text.lines() {
        if line.starts_with('#') {
            if header.is_some() {
                return Err(Error::Report("comment after the data header".into()));
            }
            comments.push(line.to_string());
        } else if header.is_none() {
            if line != "N,t_total,S_comp,E_comp,S_theor,E_theor" {
                return Err(Error::Report(format!("unexpected header '{line}'")));
            }
            header = Some(line.to_string());
        } else {
            row_lines.push(line.to_string());
        }
    }
    let header = header.ok_or_else(|| Error::Report("no data header".into()))?;
    if row_lines.is_empty() {
        return Err(Error::Report("no data rows".into()));
    }
    let doc = CsvDoc { comments, header, row_lines };
    doc.rows()?; // validate row shape up front
    Ok(doc)
}

impl CsvDoc {
    pub fn rows(&self) -> Result<Vec<CsvRow>> {
        self.row_lines
            .iter()
            .map(|line| {
                let cells: Vec<&str> = line.split(',').collect();
                if cells.len() != 6 {
                    return Err(Error::Report(format!("malformed row '{line}'")));
                }
                let parse = |i: usize| -> Result<f64> {
                    cells[i]
                        .parse()
                        .map_err(|_| Error::Report(format!("bad number '{}' in '{line}'", cells[i])))
                };
                Ok(CsvRow {
                    n: cells[0]
                        .parse()
                        .map_err(|_| Error::Report(format!("bad N '{}' in '{line}'", cells[0])))?,
                    t_total: parse(1)?,
                    s_comp: parse(2)?,
                    e_comp: parse(3)?,
                    s_theor: parse(4)?,
                    e_theor: parse(5)?,
                })
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&self.header);
        out.push('\n');
        for r in &self.row_lines {
            out.push_str(r);
            out.push('\n');
        }
        out
    }
}

const SVG_W: f64 = 640.0;
const SVG_H: f64 = 420.0;
const MARGIN_L: f64 = 64.0;
const MARGIN_R: f64 = 24.0;
const MARGIN_T: f64 = 36.0;
const MARGIN_B: f64 = 52.0;

/// Speedup-vs-N line chart with the measured and theoretical series.
/// The x axis is log2(N); y starts at zero.
pub fn speedup_chart_svg(r: &BenchResult) -> Result<String> {
    if r.rows.is_empty() {
        return Err(Error::Report("empty result: no rows to plot".into()));
    }
    let xs: Vec<f64> = r.rows.iter().map(|row| (row.n as f64).log2()).collect();
    let x_min = xs.first().copied().unwrap_or(0.0);
    let x_max = xs.last().copied().unwrap_or(1.0).max(x_min + 1e-9);
    let y_max = r
        .rows
        .iter()
        .flat_map(|row| [row.s_comp, row.s_theor])
        .fold(1.0f64, f64::max)
        * 1.08;

    let plot_w = SVG_W - MARGIN_L - MARGIN_R;
    let plot_h = SVG_H - MARGIN_T - MARGIN_B;
    let px = |x: f64| MARGIN_L + (x - x_min) / (x_max - x_min) * plot_w;
    let py = |y: f64| MARGIN_T + (1.0 - y / y_max) * plot_h;

    let series = |values: Vec<(f64, f64)>| -> String {
        values
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let measured: Vec<(f64, f64)> =
        xs.iter().zip(&r.rows).map(|(&x, row)| (x, row.s_comp)).collect();
    let theoretical: Vec<(f64, f64)> =
        xs.iter().zip(&r.rows).map(|(&x, row)| (x, row.s_theor)).collect();

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_W}" height="{SVG_H}" viewBox="0 0 {SVG_W} {SVG_H}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="22" font-family="sans-serif" font-size="15" text-anchor="middle">speedup vs workers ({})</text>"#,
        SVG_W / 2.0,
        r.experiment.name()
    );

    // axes
    let x0 = MARGIN_L;
    let y0 = SVG_H - MARGIN_B;
    let _ = writeln!(
        svg,
        r#"<line x1="{x0}" y1="{MARGIN_T}" x2="{x0}" y2="{y0}" stroke="black"/><line x1="{x0}" y1="{y0}" x2="{:.1}" y2="{y0}" stroke="black"/>"#,
        SVG_W - MARGIN_R
    );
    // x ticks at the measured worker counts
    for (x, row) in xs.iter().zip(&r.rows) {
        let tx = px(*x);
        let _ = writeln!(
            svg,
            r#"<line x1="{tx:.1}" y1="{y0}" x2="{tx:.1}" y2="{:.1}" stroke="black"/><text x="{tx:.1}" y="{:.1}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            y0 + 5.0,
            y0 + 20.0,
            row.n
        );
    }
    // y ticks
    for k in 0..=5 {
        let v = y_max * k as f64 / 5.0;
        let ty = py(v);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{ty:.1}" x2="{x0}" y2="{ty:.1}" stroke="black"/><text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12" text-anchor="end">{v:.1}</text>"#,
            x0 - 5.0,
            x0 - 9.0,
            ty + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="13" text-anchor="middle">N (workers)</text>"#,
        MARGIN_L + plot_w / 2.0,
        SVG_H - 12.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{:.1}" font-family="sans-serif" font-size="13" text-anchor="middle" transform="rotate(-90 16 {:.1})">S(N)</text>"#,
        MARGIN_T + plot_h / 2.0,
        MARGIN_T + plot_h / 2.0
    );

    // series
    let _ = writeln!(
        svg,
        r##"<polyline fill="none" stroke="#d95f02" stroke-width="2" stroke-dasharray="6 4" points="{}"/>"##,
        series(theoretical)
    );
    let _ = writeln!(
        svg,
        r##"<polyline fill="none" stroke="#1b6ca8" stroke-width="2" points="{}"/>"##,
        series(measured.clone())
    );
    for &(x, y) in &measured {
        let _ = writeln!(
            svg,
            r##"<circle cx="{:.2}" cy="{:.2}" r="3.2" fill="#1b6ca8"/>"##,
            px(x),
            py(y)
        );
    }

    // legend
    let lx = MARGIN_L + 12.0;
    let ly = MARGIN_T + 12.0;
    let _ = writeln!(
        svg,
        r##"<line x1="{lx}" y1="{ly}" x2="{:.1}" y2="{ly}" stroke="#1b6ca8" stroke-width="2"/><text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12">measured</text>"##,
        lx + 26.0,
        lx + 32.0,
        ly + 4.0
    );
    let _ = writeln!(
        svg,
        r##"<line x1="{lx}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#d95f02" stroke-width="2" stroke-dasharray="6 4"/><text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12">theoretical</text>"##,
        ly + 18.0,
        lx + 26.0,
        ly + 18.0,
        lx + 32.0,
        ly + 22.0
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Write the CSV to `csv_path` and the chart next to it (same stem,
/// `.svg`). Returns the chart path.
pub fn write_report(r: &BenchResult, csv_path: &Path) -> Result<PathBuf> {
    let csv = result_to_csv(r)?;
    let svg = speedup_chart_svg(r)?;
    std::fs::write(csv_path, csv)?;
    let svg_path = csv_path.with_extension("svg");
    std::fs::write(&svg_path, svg)?;
    Ok(svg_path)
}
