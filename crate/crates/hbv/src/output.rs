//! Report rendering: aligned tables, JSON lines and CSV, all in a fixed order.

use crate::Format;
use anyhow::Result;
use hecke_bessel::arith::OracleCheck;
use hecke_bessel::engine::{BatteryCheck, CatalogEntry, LimitCheck};
use hecke_bessel::VerificationReport;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

/// A check from any of the batteries, flattened to common columns.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub cases: usize,
    /// What `measure` means for this check.
    pub measure_kind: &'static str,
    pub measure: f64,
    pub tol: f64,
    pub pass: bool,
    pub error: Option<String>,
}

impl From<&BatteryCheck> for CheckLine {
    fn from(c: &BatteryCheck) -> Self {
        Self {
            name: c.name.clone(),
            cases: c.cases,
            measure_kind: "max_error",
            measure: c.max_error,
            tol: c.tol,
            pass: c.pass,
            error: c.error.clone(),
        }
    }
}

impl From<&OracleCheck> for CheckLine {
    fn from(c: &OracleCheck) -> Self {
        Self {
            name: c.name.clone(),
            cases: c.cases,
            measure_kind: "mismatches",
            measure: c.mismatches as f64,
            tol: 0.0,
            pass: c.pass,
            error: c.error.clone(),
        }
    }
}

impl From<&LimitCheck> for CheckLine {
    fn from(c: &LimitCheck) -> Self {
        Self {
            name: c.name.clone(),
            cases: c.estimates.len(),
            measure_kind: "extrapolant_error",
            measure: (c.extrapolant - c.target).abs(),
            tol: c.tol,
            pass: c.pass,
            error: c.error.clone(),
        }
    }
}

pub struct Emitter {
    format: Format,
    sink: BufWriter<Box<dyn Write>>,
}

fn params_text(params: &[(String, f64)]) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

fn report_json(r: &VerificationReport, timing: bool) -> Value {
    let params: Map<String, Value> = r.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    let mut obj = json!({
        "id": r.id,
        "params": params,
        "lhs": r.lhs.value,
        "rhs": r.rhs.value,
        "abs_diff": r.abs_diff,
        "rel_diff": r.rel_diff,
        "lhs_tail": r.lhs_tail,
        "rhs_tail": r.rhs_tail,
        "quad_err": r.quad_err,
        "terms": { "lhs": r.lhs_terms, "rhs": r.rhs_terms },
        "pass": r.pass,
    });
    let map = obj.as_object_mut().expect("object literal");
    if let Some(e) = &r.error {
        map.insert("error".into(), json!(e));
    }
    if timing {
        map.insert("ms".into(), json!(r.ms));
    }
    obj
}

const REPORT_COLUMNS: [&str; 13] = [
    "id", "params", "lhs", "rhs", "abs_diff", "rel_diff", "lhs_tail", "rhs_tail", "quad_err", "terms_lhs",
    "terms_rhs", "pass", "error",
];

impl Emitter {
    pub fn open(format: Format, path: Option<&Path>) -> Result<Self> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(File::create(p)?),
            None => Box::new(io::stdout()),
        };
        Ok(Self { format, sink: BufWriter::new(sink) })
    }

    pub fn finish(mut self) -> Result<()> {
        self.sink.flush()?;
        Ok(())
    }

    pub fn catalog(&mut self, entries: &[CatalogEntry]) -> Result<()> {
        match self.format {
            Format::Table => {
                writeln!(self.sink, "{:<16} {:>8}  {:<22} summary", "id", "variants", "params")?;
                for e in entries {
                    let params = e.id.param_names().join(",");
                    writeln!(self.sink, "{:<16} {:>8}  {:<22} {}", e.id.id(), e.variants.len(), params, e.id.summary())?;
                }
            }
            Format::JsonLines => {
                for e in entries {
                    let labels: Vec<&str> = e.variants.iter().map(|v| v.label.as_str()).collect();
                    let line = json!({
                        "id": e.id.id(),
                        "params": e.id.param_names(),
                        "variants": labels,
                        "summary": e.id.summary(),
                    });
                    writeln!(self.sink, "{line}")?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.sink);
                w.write_record(["id", "params", "variants", "summary"])?;
                for e in entries {
                    let labels: Vec<&str> = e.variants.iter().map(|v| v.label.as_str()).collect();
                    w.write_record([e.id.id(), &e.id.param_names().join(";"), &labels.join(";"), e.id.summary()])?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }

    pub fn reports(&mut self, reports: &[VerificationReport], timing: bool) -> Result<()> {
        match self.format {
            Format::Table => {
                write!(
                    self.sink,
                    "{:<16} {:<4} {:>10} {:>10} {:>9} {:>9} {:>15}",
                    "id", "pass", "abs_diff", "rel_diff", "lhs_tail", "rhs_tail", "terms"
                )?;
                if timing {
                    write!(self.sink, " {:>9}", "ms")?;
                }
                writeln!(self.sink, "  params")?;
                for r in reports {
                    write!(
                        self.sink,
                        "{:<16} {:<4} {:>10.3e} {:>10.3e} {:>9.1e} {:>9.1e} {:>15}",
                        r.id,
                        if r.pass { "ok" } else { "FAIL" },
                        r.abs_diff,
                        r.rel_diff,
                        r.lhs_tail,
                        r.rhs_tail,
                        format!("{}+{}", r.lhs_terms, r.rhs_terms),
                    )?;
                    if timing {
                        write!(self.sink, " {:>9.1}", r.ms)?;
                    }
                    writeln!(self.sink, "  {}", params_text(&r.params))?;
                }
                let passed = reports.iter().filter(|r| r.pass).count();
                writeln!(self.sink, "{passed}/{} passed", reports.len())?;
            }
            Format::JsonLines => {
                for r in reports {
                    writeln!(self.sink, "{}", report_json(r, timing))?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.sink);
                let mut header: Vec<&str> = REPORT_COLUMNS.to_vec();
                if timing {
                    header.push("ms");
                }
                w.write_record(&header)?;
                for r in reports {
                    let mut row = vec![
                        r.id.clone(),
                        params_text(&r.params),
                        r.lhs.value.to_string(),
                        r.rhs.value.to_string(),
                        r.abs_diff.to_string(),
                        r.rel_diff.to_string(),
                        r.lhs_tail.to_string(),
                        r.rhs_tail.to_string(),
                        r.quad_err.to_string(),
                        r.lhs_terms.to_string(),
                        r.rhs_terms.to_string(),
                        r.pass.to_string(),
                        r.error.clone().unwrap_or_default(),
                    ];
                    if timing {
                        row.push(r.ms.to_string());
                    }
                    w.write_record(&row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }

    pub fn checks<T: Serialize>(&mut self, raw: &[T], lines: &[CheckLine]) -> Result<()> {
        match self.format {
            Format::Table => {
                let width = lines.iter().map(|l| l.name.chars().count()).max().unwrap_or(4).max(4);
                writeln!(self.sink, "{:<width$}  {:<4} {:>6} {:>11} {:>9}  measure", "name", "pass", "cases", "value", "tol")?;
                for l in lines {
                    writeln!(
                        self.sink,
                        "{:<width$}  {:<4} {:>6} {:>11.3e} {:>9.1e}  {}",
                        l.name,
                        if l.pass { "ok" } else { "FAIL" },
                        l.cases,
                        l.measure,
                        l.tol,
                        l.measure_kind
                    )?;
                }
                let passed = lines.iter().filter(|l| l.pass).count();
                writeln!(self.sink, "{passed}/{} passed", lines.len())?;
            }
            Format::JsonLines => {
                for r in raw {
                    writeln!(self.sink, "{}", serde_json::to_string(r)?)?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.sink);
                for l in lines {
                    w.serialize(l)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

/// Prints one diagnostic line per failing report to stderr; true when all passed.
pub fn diagnose_reports(reports: &[VerificationReport]) -> bool {
    let mut ok = true;
    for r in reports.iter().filter(|r| !r.pass) {
        ok = false;
        let why = match &r.error {
            Some(e) => e.clone(),
            None => format!(
                "|lhs - rhs| = {:e} exceeds tol {:e} + error bounds {:e}",
                r.abs_diff,
                r.tol,
                r.lhs.abs_error + r.rhs.abs_error
            ),
        };
        eprintln!("FAIL {} [{}]: {why}", r.id, params_text(&r.params));
    }
    ok
}

/// Same as [`diagnose_reports`] for battery checks.
pub fn diagnose_checks(lines: &[CheckLine]) -> bool {
    let mut ok = true;
    for l in lines.iter().filter(|l| !l.pass) {
        ok = false;
        let why = l.error.clone().unwrap_or_else(|| format!("{} = {:e}, tolerance {:e}", l.measure_kind, l.measure, l.tol));
        eprintln!("FAIL {}: {why}", l.name);
    }
    ok
}
