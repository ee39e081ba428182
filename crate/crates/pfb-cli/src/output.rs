//! Rendering of command results. Every command produces one payload which
//! is serialized per format; the JSON and ASCII renderings carry the same
//! fields.

use pfb_core::basis::{BasisReport, TransitionReport};
use pfb_core::json::{
    coeff_to_string, element_to_terms, BasisReportJson, TableauJson, TransitionReportJson,
};
use pfb_core::tableaux::{Tableau, Weight};
use pfb_core::verify::VerificationReport;

#[derive(Copy, Clone, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

pub struct DimRow {
    pub mu: Vec<usize>,
    pub dim: usize,
}

pub enum Payload {
    Tableaux(Vec<Tableau>),
    Dims { m: usize, p: usize, rows: Vec<DimRow> },
    Basis(BasisReport),
    Transition(TransitionReport),
    Verify(VerificationReport),
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn join_csv(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_escape(f))
        .collect::<Vec<_>>()
        .join(",")
}

fn rows_compact(t: &Tableau) -> String {
    t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("/")
}

fn weight_compact(counts: &[usize]) -> String {
    counts
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn render(payload: &Payload, format: Format) -> String {
    match format {
        Format::Json => render_json(payload),
        Format::Ascii => render_ascii(payload),
        Format::Csv => render_csv(payload),
    }
}

fn render_json(payload: &Payload) -> String {
    let value = match payload {
        Payload::Tableaux(tabs) => {
            let dto: Vec<TableauJson> = tabs.iter().map(Into::into).collect();
            serde_json::to_value(dto)
        }
        Payload::Dims { m, p, rows } => serde_json::to_value(serde_json::json!({
            "m": m,
            "p": p,
            "dims": rows
                .iter()
                .map(|r| serde_json::json!({"mu": r.mu, "dim": r.dim}))
                .collect::<Vec<_>>(),
        })),
        Payload::Basis(report) => serde_json::to_value(BasisReportJson::from(report)),
        Payload::Transition(report) => serde_json::to_value(TransitionReportJson::from(report)),
        Payload::Verify(report) => serde_json::to_value(report),
    };
    let mut text = serde_json::to_string_pretty(&value.expect("serializable payload"))
        .expect("valid JSON value");
    text.push('\n');
    text
}

fn render_ascii(payload: &Payload) -> String {
    let mut out = String::new();
    match payload {
        Payload::Tableaux(tabs) => {
            for (idx, t) in tabs.iter().enumerate() {
                if idx > 0 {
                    out.push('\n');
                }
                out.push_str(&t.ascii());
                out.push('\n');
            }
            if tabs.is_empty() {
                out.push_str("(no tableaux)\n");
            }
        }
        Payload::Dims { m, p, rows } => {
            out.push_str(&format!("m={} p={}\n", m, p));
            for row in rows {
                out.push_str(&format!(
                    "mu=({}) dim={}\n",
                    weight_compact(&row.mu),
                    row.dim
                ));
            }
        }
        Payload::Basis(report) => {
            out.push_str(&format!(
                "basis m={} p={} mu=({}) vectors={}\n",
                report.m,
                report.p,
                weight_compact(report.mu.counts()),
                report.entries.len()
            ));
            out.push_str(&format!(
                "checks: diag_ones={} triangular={} dim_match={}\n",
                report.checks.diag_ones, report.checks.triangular, report.checks.dim_match
            ));
            for (idx, entry) in report.entries.iter().enumerate() {
                out.push_str(&format!("\n[{}] tableau {}\n", idx, rows_compact(&entry.tableau)));
                out.push_str(&format!(
                    "    weight ({})\n",
                    weight_compact(entry.weight.counts())
                ));
                out.push_str(&format!(
                    "    leading gamma={} eta={}\n",
                    entry.leading.gamma.to_row_major_bits(),
                    entry.leading.eta.to_bit_string()
                ));
                out.push_str(&format!("    omega = {}\n", entry.omega));
            }
        }
        Payload::Transition(report) => {
            out.push_str(&format!(
                "transition m={} p={} mu=({}) size={}\n",
                report.m,
                report.p,
                weight_compact(report.mu.counts()),
                report.tableaux.len()
            ));
            out.push_str(&format!(
                "checks: diag_ones={} triangular={} support_ok={}\n",
                report.diag_ones, report.triangular, report.support_ok
            ));
            for (idx, t) in report.tableaux.iter().enumerate() {
                out.push_str(&format!("[{}] {}\n", idx, rows_compact(t)));
            }
            for row in &report.matrix {
                let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("{}\n", line.join(" ")));
            }
        }
        Payload::Verify(report) => {
            out.push_str(&format!("suite: {}\n", report.suite));
            out.push_str(&format!("m: {}\np: {}\n", report.m, report.p));
            if let Some(d) = report.max_degree {
                out.push_str(&format!("max degree: {}\n", d));
            }
            out.push_str(&format!("total checks: {}\n", report.total_checks));
            out.push_str(&format!("failures: {}\n", report.failures.len()));
            out.push_str(&format!("elapsed ms: {}\n", report.elapsed_ms));
            for failure in &report.failures {
                out.push_str(&format!(
                    "FAIL {} | lhs: {} | rhs: {}\n",
                    failure.check.describe(),
                    failure.lhs,
                    failure.rhs
                ));
            }
            out.push_str(if report.passed() { "status: PASS\n" } else { "status: FAIL\n" });
        }
    }
    out
}

fn render_csv(payload: &Payload) -> String {
    let mut lines: Vec<String> = Vec::new();
    match payload {
        Payload::Tableaux(tabs) => {
            lines.push("id,shape,rows".to_string());
            for (idx, t) in tabs.iter().enumerate() {
                let shape = t
                    .shape()
                    .parts()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                lines.push(join_csv(&[
                    idx.to_string(),
                    shape,
                    rows_compact(t),
                ]));
            }
        }
        Payload::Dims { rows, .. } => {
            lines.push("mu,dim".to_string());
            for row in rows {
                lines.push(join_csv(&[
                    row.mu
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    row.dim.to_string(),
                ]));
            }
        }
        Payload::Basis(report) => {
            lines.push("tableau,gamma,eta,coeff".to_string());
            for (idx, entry) in report.entries.iter().enumerate() {
                for term in element_to_terms(&entry.omega) {
                    lines.push(join_csv(&[
                        idx.to_string(),
                        term.gamma,
                        term.eta,
                        term.coeff,
                    ]));
                }
            }
        }
        Payload::Transition(report) => {
            lines.push("probe,vector,value".to_string());
            for (r, row) in report.matrix.iter().enumerate() {
                for (c, value) in row.iter().enumerate() {
                    lines.push(join_csv(&[
                        r.to_string(),
                        c.to_string(),
                        coeff_to_string(value),
                    ]));
                }
            }
        }
        Payload::Verify(report) => {
            lines.push("suite,m,p,total_checks,failures,elapsed_ms,status".to_string());
            lines.push(join_csv(&[
                report.suite.clone(),
                report.m.to_string(),
                report.p.to_string(),
                report.total_checks.to_string(),
                report.failures.len().to_string(),
                report.elapsed_ms.to_string(),
                if report.passed() { "pass" } else { "fail" }.to_string(),
            ]));
            if !report.failures.is_empty() {
                lines.push("identity,lhs,rhs".to_string());
                for failure in &report.failures {
                    lines.push(join_csv(&[
                        failure.check.describe(),
                        failure.lhs.clone(),
                        failure.rhs.clone(),
                    ]));
                }
            }
        }
    }
    let mut text = lines.join("\n");
    text.push('\n');
    text
}

pub fn dims_payload(m: usize, p: usize, max_degree: usize) -> Payload {
    let rows = pfb_core::tableaux::weights_up_to(m, max_degree)
        .into_iter()
        .map(|mu| DimRow {
            dim: pfb_core::tableaux::weight_space_dim(&mu, p),
            mu: mu.counts().to_vec(),
        })
        .collect();
    Payload::Dims { m, p, rows }
}

pub fn weight_from_counts(counts: Vec<usize>) -> Weight {
    Weight::new(counts)
}
