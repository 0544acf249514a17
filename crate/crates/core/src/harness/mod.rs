//! Scenario registry, runner and reports.
//!
//! A scenario builds its groups from scratch and records expectations, each
//! an operation name with an expected and an actual JSON value. A verdict
//! expectation passes when the verdict agrees with every field the
//! expectation names, so `{"answer": true}` ignores exactness while
//! `{"answer": true, "exactness": "Exact"}` does not.
//!
//! Reports serialize with sorted keys. Everything outside `volatile` is
//! deterministic for a given configuration.

mod report;
mod scenarios;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chevalley::{default_cap, MatrixGroup, Realization};
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::verdicts::Verdict;

pub use report::{emit_report, render_text, stable_json, Renderable, ReportFormat};
pub use scenarios::{registry, OPERATIONS};

pub const SCHEMA_VERSION: &str = "1";
pub const DEFAULT_D_MAX: u32 = 4;

/// Run-wide knobs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub d_max: u32,
    pub cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { d_max: DEFAULT_D_MAX, cap: default_cap() }
    }
}

/// Scalar overrides read from a JSON file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub level: Option<u32>,
    pub cap: Option<usize>,
    /// Restricts the registry to these ids (in registry order).
    pub scenarios: Option<Vec<String>>,
}

impl Overrides {
    pub fn apply(&self, cfg: &Config) -> Config {
        Config { d_max: self.level.unwrap_or(cfg.d_max), cap: self.cap.unwrap_or(cfg.cap) }
    }
}

pub struct Scenario {
    pub id: &'static str,
    /// Topic key of the statement the scenario checks.
    pub anchor: &'static str,
    pub summary: &'static str,
    pub run: fn(&mut Ctx) -> Result<()>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub op: String,
    pub subject: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
    pub witnesses: Vec<Value>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub p: u32,
    pub k: u32,
    pub moduli: Vec<FieldRecord>,
    pub caps: Config,
    pub version: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Volatile {
    pub timings: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub scenario: String,
    pub anchor: String,
    pub pass: bool,
    pub error: Option<String>,
    pub expectations: Vec<Expectation>,
    pub environment: Environment,
    pub volatile: Volatile,
}

/// Reports of a whole registry run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub schema: String,
    pub pass: bool,
    pub scenarios: usize,
    pub failed: Vec<String>,
    pub reports: Vec<Report>,
    pub warnings: Vec<String>,
}

impl Aggregate {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

/// Collects expectations while a scenario runs.
pub struct Ctx {
    cfg: Config,
    expectations: Vec<Expectation>,
    fields: BTreeSet<(u32, u32, Vec<u32>)>,
    primary: Option<(u32, u32)>,
    timings: BTreeMap<String, f64>,
    clock: Instant,
}

impl Ctx {
    pub fn new(cfg: Config) -> Self {
        Ctx {
            cfg,
            expectations: Vec::new(),
            fields: BTreeSet::new(),
            primary: None,
            timings: BTreeMap::new(),
            clock: Instant::now(),
        }
    }

    pub fn config(&self) -> &Config {
        &self.cfg
    }

    /// The configured `d_max`, but at most `limit`.
    pub fn levels(&self, limit: u32) -> u32 {
        self.cfg.d_max.min(limit).max(1)
    }

    pub fn field(&mut self, p: u32, k: u32) -> Result<Field> {
        let f = Field::new(p, k)?;
        self.fields.insert((p, k, f.modulus().to_vec()));
        self.primary.get_or_insert((p, k));
        Ok(f)
    }

    pub fn group(&mut self, label: &str, p: u32, k: u32) -> Result<MatrixGroup> {
        let f = self.field(p, k)?;
        Ok(MatrixGroup::realized(&Realization::parse(label)?, &f).with_cap(self.cfg.cap))
    }

    fn push(&mut self, op: &str, subject: &str, expected: Value, actual: Value, full: Value, witnesses: Vec<Value>) {
        let pass = actual == expected;
        let i = self.expectations.len();
        self.timings.insert(format!("{i:02}-{op}"), self.clock.elapsed().as_secs_f64());
        self.clock = Instant::now();
        self.expectations.push(Expectation {
            op: op.into(),
            subject: subject.into(),
            expected,
            actual: if pass { actual } else { full },
            pass,
            witnesses,
        });
    }

    /// Expects a plain value.
    pub fn value<T: Serialize>(&mut self, op: &str, subject: &str, expected: Value, actual: Result<T>) {
        self.value_with(op, subject, expected, actual.map(|a| (a, Vec::new())))
    }

    /// Expects a plain value, with witnesses.
    pub fn value_with<T: Serialize>(
        &mut self,
        op: &str,
        subject: &str,
        expected: Value,
        actual: Result<(T, Vec<Value>)>,
    ) {
        match actual {
            Ok((a, w)) => {
                let a = serde_json::to_value(a).expect("serializable");
                self.push(op, subject, expected, a.clone(), a, w)
            }
            Err(e) => self.push(op, subject, expected, error_value(&e), error_value(&e), Vec::new()),
        }
    }

    /// Expects the named fields of a verdict.
    pub fn verdict(&mut self, op: &str, subject: &str, expected: Value, v: Result<Verdict>) {
        match v {
            Ok(v) => {
                let mut full = serde_json::to_value(&v).expect("serializable");
                let witnesses = match full.as_object_mut().and_then(|o| o.remove("witnesses")) {
                    Some(Value::Array(w)) => w,
                    _ => Vec::new(),
                };
                let actual = project(&full, &expected);
                self.push(op, subject, expected, actual, full, witnesses)
            }
            Err(e) => self.push(op, subject, expected, error_value(&e), error_value(&e), Vec::new()),
        }
    }

    /// Expects a specific error.
    pub fn error<T: std::fmt::Debug>(&mut self, op: &str, subject: &str, expected_kind: &str, r: Result<T>) {
        let actual = match r {
            Ok(v) => json!({ "ok": format!("{v:?}") }),
            Err(e) => error_value(&e),
        };
        let expected = json!({ "error": expected_kind });
        let projected = project(&actual, &expected);
        self.push(op, subject, expected, projected, actual, Vec::new())
    }

    fn finish(self, scenario: &Scenario, error: Option<String>) -> Report {
        let (p, k) = self.primary.unwrap_or((0, 0));
        let pass = error.is_none() && self.expectations.iter().all(|e| e.pass);
        Report {
            schema: SCHEMA_VERSION.into(),
            scenario: scenario.id.into(),
            anchor: scenario.anchor.into(),
            pass,
            error,
            expectations: self.expectations,
            environment: Environment {
                p,
                k,
                moduli: self.fields.into_iter().map(|(p, k, modulus)| FieldRecord { p, k, modulus }).collect(),
                caps: self.cfg,
                version: env!("CARGO_PKG_VERSION").into(),
            },
            volatile: Volatile { timings: self.timings },
        }
    }
}

fn error_value(e: &Error) -> Value {
    json!({ "error": error_kind(e), "message": e.to_string() })
}

/// The variant name of an error.
pub fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

/// The fields of `actual` named by an object `expected`; `actual` itself otherwise.
fn project(actual: &Value, expected: &Value) -> Value {
    match (actual, expected) {
        (Value::Object(a), Value::Object(e)) => {
            Value::Object(e.keys().map(|k| (k.clone(), a.get(k).cloned().unwrap_or(Value::Null))).collect())
        }
        _ => actual.clone(),
    }
}

pub fn list_scenarios() -> Vec<(&'static str, &'static str, &'static str)> {
    registry().iter().map(|s| (s.id, s.anchor, s.summary)).collect()
}

fn find(id: &str) -> Result<&'static Scenario> {
    registry().iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownScenario(id.into()))
}

/// Runs one scenario. Construction errors are returned; expectation failures are data.
pub fn run_scenario(id: &str, cfg: &Config) -> Result<Report> {
    let s = find(id)?;
    let mut ctx = Ctx::new(cfg.clone());
    (s.run)(&mut ctx)?;
    Ok(ctx.finish(s, None))
}

fn run_recorded(s: &Scenario, cfg: &Config) -> Report {
    let mut ctx = Ctx::new(cfg.clone());
    match (s.run)(&mut ctx) {
        Ok(()) => ctx.finish(s, None),
        Err(e) => ctx.finish(s, Some(e.to_string())),
    }
}

/// Runs the given scenarios, in parallel if asked.
pub fn verify_scenarios(scenarios: &[&Scenario], cfg: &Config, parallel: bool) -> Aggregate {
    let reports: Vec<Report> = if parallel {
        scenarios.par_iter().map(|s| run_recorded(s, cfg)).collect()
    } else {
        scenarios.iter().map(|s| run_recorded(s, cfg)).collect()
    };
    let failed: Vec<String> = reports.iter().filter(|r| !r.pass).map(|r| r.scenario.clone()).collect();
    let warnings = if scenarios.is_empty() { vec!["no scenarios selected".to_string()] } else { Vec::new() };
    Aggregate {
        schema: SCHEMA_VERSION.into(),
        pass: failed.is_empty(),
        scenarios: reports.len(),
        failed,
        reports,
        warnings,
    }
}

/// Runs the registry, optionally restricted by `overrides.scenarios`.
pub fn verify_all(cfg: &Config, overrides: &Overrides, parallel: bool) -> Result<Aggregate> {
    let cfg = overrides.apply(cfg);
    let selected: Vec<&Scenario> = match &overrides.scenarios {
        None => registry().iter().collect(),
        Some(ids) => {
            for id in ids {
                find(id)?;
            }
            registry().iter().filter(|s| ids.iter().any(|i| i == s.id)).collect()
        }
    };
    Ok(verify_scenarios(&selected, &cfg, parallel))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failing(ctx: &mut Ctx) -> Result<()> {
        ctx.value("jordanPartition", "deliberately wrong", json!([1, 1]), Ok(vec![2]));
        Ok(())
    }

    fn broken(_: &mut Ctx) -> Result<()> {
        Err(Error::NotInvertible)
    }

    #[test]
    fn failure_propagates() {
        let s = Scenario { id: "falsified", anchor: "fixture", summary: "", run: failing };
        let agg = verify_scenarios(&[&s], &Config::default(), false);
        assert!(!agg.pass);
        assert_eq!(agg.exit_code(), 1);
        assert_eq!(agg.failed, vec!["falsified".to_string()]);

        let b = Scenario { id: "broken", anchor: "fixture", summary: "", run: broken };
        let agg = verify_scenarios(&[&b], &Config::default(), false);
        assert!(agg.reports[0].error.is_some());
        assert_eq!(agg.exit_code(), 1);
    }

    #[test]
    fn empty_selection_passes_with_warning() {
        let agg = verify_all(&Config::default(), &Overrides { scenarios: Some(vec![]), ..Default::default() }, false)
            .unwrap();
        assert!(agg.pass && agg.scenarios == 0 && !agg.warnings.is_empty());
    }

    #[test]
    fn unknown_scenario() {
        assert!(matches!(run_scenario("no-such-id", &Config::default()), Err(Error::UnknownScenario(_))));
    }

    #[test]
    fn projection_and_errors() {
        let mut ctx = Ctx::new(Config::default());
        ctx.error("isRegularUnipotent", "not unipotent", "NotUnipotent", Err::<(), _>(Error::NotUnipotent));
        assert!(ctx.expectations[0].pass);
        assert_eq!(error_kind(&Error::CapExceeded { what: "x".into(), partial: 1, cap: 2 }), "CapExceeded");
    }
}
