use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

use super::{Aggregate, Report};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

/// The value with every `volatile` member removed.
pub fn stable_json<T: Serialize>(report: &T) -> Value {
    fn strip(v: &mut Value) {
        match v {
            Value::Object(m) => {
                m.remove("volatile");
                m.values_mut().for_each(strip);
            }
            Value::Array(a) => a.iter_mut().for_each(strip),
            _ => {}
        }
    }
    let mut v = serde_json::to_value(report).expect("serializable");
    strip(&mut v);
    v
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn render_witness(w: &Value, out: &mut String) {
    let kind = w.get("kind").and_then(Value::as_str).unwrap_or("?");
    let rest: serde_json::Map<String, Value> = w
        .as_object()
        .map(|o| o.iter().filter(|(k, _)| *k != "kind").map(|(k, v)| (k.clone(), v.clone())).collect())
        .unwrap_or_default();
    let _ = writeln!(out, "      witness {kind}: {}", compact(&Value::Object(rest)));
}

fn render_report(r: &Report, out: &mut String) {
    let status = if r.pass { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "scenario {} [{}]: {status}", r.scenario, r.anchor);
    for f in &r.environment.moduli {
        let _ = writeln!(out, "  field p={} k={} modulus={:?}", f.p, f.k, f.modulus);
    }
    if let Some(e) = &r.error {
        let _ = writeln!(out, "  construction error: {e}");
    }
    for e in &r.expectations {
        let mark = if e.pass { "ok" } else { "FAILED" };
        let _ = writeln!(out, "  [{mark}] {} ({})", e.op, e.subject);
        let _ = writeln!(out, "      expected {}", compact(&e.expected));
        let _ = writeln!(out, "      actual   {}", compact(&e.actual));
        for w in &e.witnesses {
            render_witness(w, out);
        }
    }
}

/// Plain-text rendering of the stable part of a report.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    render_report(r, &mut s);
    s
}

pub trait Renderable: Serialize {
    fn text(&self) -> String;
}

impl Renderable for Report {
    fn text(&self) -> String {
        render_text(self)
    }
}

impl Renderable for Aggregate {
    fn text(&self) -> String {
        let mut s = String::new();
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        for r in &self.reports {
            render_report(r, &mut s);
        }
        let _ = writeln!(
            s,
            "{} scenarios, {} failed: {}",
            self.scenarios,
            self.failed.len(),
            if self.pass { "PASS" } else { "FAIL" }
        );
        s
    }
}

/// Writes a report as pretty JSON (keys sorted) or text, to `path` or stdout.
pub fn emit_report<T: Renderable>(report: &T, format: ReportFormat, path: Option<&Path>) -> Result<()> {
    let body = match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::to_value(report).expect("serializable"))
                .expect("serializable");
            s.push('\n');
            s
        }
        ReportFormat::Text => report.text(),
    };
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| Error::Io(e.to_string())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}
