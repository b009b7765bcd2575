//! Output in JSON, CSV, or Markdown.

use std::fmt::Write as _;

use anyhow::Result;
use clap::ValueEnum;
use gammacert::bounds::CurvePoint;
use gammacert::graphs::KernelKind;
use gammacert::kernels::prove::ProofCertificate;
use gammacert::kernels::{Outcome, StageReport};
use gammacert::spectral::{GammaTable, GammaValue};
use serde::Serialize;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Serialize)]
pub struct CountRow {
    pub kind: KernelKind,
    pub n: usize,
    pub total: usize,
    pub below: usize,
    pub beta: String,
}

#[derive(Serialize)]
pub struct BetaDRow {
    pub d: usize,
    pub lambda_d: f64,
    pub beta_d: f64,
}

fn json<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn csv_rows<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn md_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut s = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
    for r in rows {
        let _ = writeln!(s, "| {} |", r.join(" | "));
    }
    s
}

#[derive(Serialize)]
struct GammaCsv<'a> {
    graph: &'a str,
    lambda: f64,
    gamma: f64,
    gamma_lo: String,
    gamma_hi: String,
    exact: Option<String>,
}

pub fn gamma(values: &[GammaValue], f: Format) -> Result<String> {
    let exact = |v: &GammaValue| v.exact.as_ref().map(gammacert::algebra::text::format_rational);
    match f {
        Format::Json => json(&serde_json::json!({ "graphs": values })),
        Format::Csv => csv_rows(values.iter().map(|v| GammaCsv {
            graph: &v.graph,
            lambda: v.lambda.mid_f64(),
            gamma: v.mid_f64(),
            gamma_lo: gammacert::algebra::text::format_rational(&v.value.lo),
            gamma_hi: gammacert::algebra::text::format_rational(&v.value.hi),
            exact: exact(v),
        })),
        Format::Md => Ok(md_table(
            &["graph", "λ", "Γ", "exact"],
            values.iter().map(|v| {
                vec![format!("`{}`", v.graph), format!("{:.10}", v.lambda.mid_f64()), format!("{:.10}", v.mid_f64()), exact(v).unwrap_or_default()]
            }),
        )),
    }
}

fn outcome_name(o: &Outcome) -> &'static str {
    match o {
        Outcome::DirectPass => "direct-pass",
        Outcome::ExceptionalHandled { .. } => "exceptional-handled",
        Outcome::Eliminated { .. } => "eliminated",
        Outcome::Survivor { .. } => "survivor",
    }
}

#[derive(Serialize)]
struct StageCsv<'a> {
    kernel: &'a str,
    active: String,
    pairs: usize,
    failures: usize,
    outcome: &'static str,
}

pub fn stage(r: &StageReport, f: Format) -> Result<String> {
    match f {
        Format::Json => json(r),
        Format::Csv => csv_rows(r.kernels.iter().map(|k| StageCsv {
            kernel: &k.kernel,
            active: k.active.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
            pairs: k.direct.pairs,
            failures: k.direct.failure_count,
            outcome: outcome_name(&k.outcome),
        })),
        Format::Md => Ok(format!("# Kernel stage\n\n{}", r.to_markdown())),
    }
}

#[derive(Serialize)]
struct LinkCsv<'a> {
    link: &'a str,
    pass: bool,
    summary: &'a str,
}

pub fn certificate(c: &ProofCertificate, f: Format) -> Result<String> {
    match f {
        Format::Json => json(c),
        Format::Csv => csv_rows(c.links.iter().map(|l| LinkCsv { link: &l.name, pass: l.pass, summary: &l.summary })),
        Format::Md => Ok(c.to_markdown()),
    }
}

#[derive(Serialize)]
struct TableCsv<'a> {
    rank: usize,
    graph6: &'a str,
    gamma: f64,
    below: bool,
}

pub fn gamma_table(t: &GammaTable, top: usize, f: Format) -> Result<String> {
    let take = if top == 0 { t.rows.len() } else { top };
    let rows = t.rows.iter().take(take).enumerate();
    match f {
        Format::Json => {
            let mut t = t.clone();
            t.rows.truncate(take);
            json(&t)
        }
        Format::Csv => csv_rows(rows.map(|(i, r)| TableCsv { rank: i + 1, graph6: &r.graph6, gamma: r.gamma.mid_f64(), below: r.below })),
        Format::Md => Ok(format!(
            "n = {}, {} below β = {}\n\n{}",
            t.n,
            t.count_below,
            t.threshold.label(),
            md_table(
                &["rank", "graph6", "Γ", "below"],
                rows.map(|(i, r)| vec![(i + 1).to_string(), format!("`{}`", r.graph6), format!("{:.7}", r.gamma.mid_f64()), r.below.to_string()]),
            )
        )),
    }
}

pub fn counts(rows: &[CountRow], f: Format) -> Result<String> {
    match f {
        Format::Json => json(&serde_json::json!({ "rows": rows })),
        Format::Csv => csv_rows(rows),
        Format::Md => Ok(md_table(
            &["kind", "n", "total", "below", "β"],
            rows.iter().map(|r| vec![format!("{:?}", r.kind).to_lowercase(), r.n.to_string(), r.total.to_string(), r.below.to_string(), r.beta.clone()]),
        )),
    }
}

pub fn beta_d(rows: &[BetaDRow], f: Format) -> Result<String> {
    match f {
        Format::Json => json(&serde_json::json!({ "rows": rows })),
        Format::Csv => csv_rows(rows),
        Format::Md => Ok(md_table(
            &["d", "λ_d", "β_d"],
            rows.iter().map(|r| vec![r.d.to_string(), format!("{:.4}", r.lambda_d), format!("{:.4}", r.beta_d)]),
        )),
    }
}

pub fn curves(points: &[CurvePoint], f: Format) -> Result<String> {
    match f {
        Format::Json => json(&serde_json::json!({ "points": points })),
        Format::Csv => csv_rows(points),
        Format::Md => Ok(md_table(
            &["λ", "bound 1", "bound 3"],
            points.iter().map(|p| vec![format!("{:.5}", p.lambda), format!("{:.5}", p.bound_1), format!("{:.5}", p.bound_3)]),
        )),
    }
}
