use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Collects rows and renders them as CSV or a JSON array, to stdout or a
/// file. Field order is fixed by the caller, so identical runs produce
/// byte-identical output.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.header.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = String::new();
                let _ = writeln!(out, "{}", self.header.join(","));
                for row in &self.rows {
                    let _ = writeln!(out, "{}", row.join(","));
                }
                out
            }
            Format::Json => {
                let items: Vec<serde_json::Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut map = serde_json::Map::new();
                        for (key, value) in self.header.iter().zip(row) {
                            let parsed = value
                                .parse::<f64>()
                                .map(|x| {
                                    serde_json::Number::from_f64(x)
                                        .map(serde_json::Value::Number)
                                        .unwrap_or(serde_json::Value::String(value.clone()))
                                })
                                .unwrap_or(serde_json::Value::String(value.clone()));
                            map.insert(key.clone(), parsed);
                        }
                        serde_json::Value::Object(map)
                    })
                    .collect();
                let mut text = serde_json::to_string_pretty(&items).expect("serializable rows");
                text.push('\n');
                text
            }
        }
    }
}

pub fn num(x: f64) -> String {
    format!("{x:.10}")
}

pub fn emit(text: &str, out_file: &Option<PathBuf>) -> Result<()> {
    match out_file {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {path:?}"))?,
        None => print!("{text}"),
    }
    Ok(())
}

pub fn emit_json<T: Serialize>(value: &T, out_file: &Option<PathBuf>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(&text, out_file)
}

/// JSON shape of a verification report.
#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub check: String,
    pub params: Option<ParamsJson>,
    pub predicted_radius: Option<f64>,
    pub eval_radius: f64,
    pub verdict: String,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub crossover_bracket: Option<[f64; 2]>,
    pub side_condition: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ParamsJson {
    pub p: f64,
    pub k: f64,
    pub m: u32,
    pub a: f64,
}

impl ReportJson {
    pub fn from_report(check: &str, report: &bohr_core::Report64) -> Self {
        ReportJson {
            check: check.to_string(),
            params: report.params.map(|p| ParamsJson {
                p: p.p,
                k: p.k,
                m: p.m,
                a: p.a,
            }),
            predicted_radius: report.predicted_radius,
            eval_radius: report.eval_radius,
            verdict: report.verdict.to_string(),
            lhs: [report.lhs.lo(), report.lhs.hi()],
            rhs: [report.rhs.lo(), report.rhs.hi()],
            crossover_bracket: report.crossover.map(|s| [s.holds_up_to, s.fails_from]),
            side_condition: report.side_condition.map(|s| s.to_string()),
        }
    }

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.check.clone(),
            self.params.as_ref().map(|p| num(p.p)).unwrap_or_default(),
            self.params.as_ref().map(|p| num(p.k)).unwrap_or_default(),
            self.params
                .as_ref()
                .map(|p| p.m.to_string())
                .unwrap_or_default(),
            self.params.as_ref().map(|p| num(p.a)).unwrap_or_default(),
            self.predicted_radius.map(num).unwrap_or_default(),
            num(self.eval_radius),
            num(self.lhs[0]),
            num(self.lhs[1]),
            num(self.rhs[0]),
            num(self.rhs[1]),
            self.crossover_bracket
                .map(|b| format!("{}..{}", num(b[0]), num(b[1])))
                .unwrap_or_default(),
            self.side_condition.clone().unwrap_or_default(),
            self.verdict.clone(),
        ]
    }

    pub fn csv_header() -> [&'static str; 14] {
        [
            "check",
            "p",
            "k",
            "m",
            "a",
            "predicted_radius",
            "eval_radius",
            "lhs_lo",
            "lhs_hi",
            "rhs_lo",
            "rhs_hi",
            "crossover_bracket",
            "side_condition",
            "verdict",
        ]
    }
}
