use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand};
use regunip_core::harness::{
    emit_report, list_scenarios, run_scenario, stable_json, verify_all, Config, Overrides, ReportFormat,
};

/// Runs the regular-unipotent scenario registry and writes reports.
#[derive(Parser)]
#[command(name = "regunip", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List registered scenarios.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Run one scenario.
    Run {
        id: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Run every scenario; exit 1 if any fails.
    Verify {
        #[command(flatten)]
        opts: RunOpts,
        #[arg(long)]
        parallel: bool,
    },
    /// Write the stable part of the reports (no timings), for regression files.
    Report {
        /// Scenario ids; all of them if omitted.
        ids: Vec<String>,
        #[command(flatten)]
        opts: RunOpts,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Args)]
struct RunOpts {
    /// Maximum level d (fields F_{p^k}, k <= d) for level-bounded checks.
    #[arg(long = "level")]
    level: Option<u32>,
    /// Cap on group closure sizes.
    #[arg(long)]
    cap: Option<usize>,
    /// JSON output instead of text.
    #[arg(long)]
    json: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON file with `level`, `cap` and `scenarios` overrides.
    #[arg(long)]
    overrides: Option<PathBuf>,
}

impl RunOpts {
    fn format(&self) -> ReportFormat {
        if self.json {
            ReportFormat::Json
        } else {
            ReportFormat::Text
        }
    }

    /// Flags win over the overrides file, which wins over defaults.
    fn resolve(&self) -> anyhow::Result<(Config, Overrides)> {
        let mut ov = match &self.overrides {
            Some(p) => {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                serde_json::from_str::<Overrides>(&text).with_context(|| format!("parsing {}", p.display()))?
            }
            None => Overrides::default(),
        };
        if self.level.is_some() {
            ov.level = self.level;
        }
        if self.cap.is_some() {
            ov.cap = self.cap;
        }
        if ov.level == Some(0) {
            anyhow::bail!("--level must be at least 1");
        }
        Ok((Config::default(), ov))
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::List { json } => {
            let list = list_scenarios();
            if json {
                let v: Vec<_> = list
                    .iter()
                    .map(|(id, anchor, summary)| serde_json::json!({ "id": id, "anchor": anchor, "summary": summary }))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                for (id, anchor, summary) in list {
                    println!("{id:<24} {anchor:<42} {summary}");
                }
            }
            Ok(0)
        }
        Command::Run { id, opts } => {
            let (cfg, ov) = opts.resolve()?;
            let report = run_scenario(&id, &ov.apply(&cfg))?;
            emit_report(&report, opts.format(), opts.out.as_deref())?;
            Ok(u8::from(!report.pass))
        }
        Command::Verify { opts, parallel } => {
            let (cfg, ov) = opts.resolve()?;
            let agg = verify_all(&cfg, &ov, parallel)?;
            if opts.json {
                for w in &agg.warnings {
                    eprintln!("warning: {w}");
                }
            }
            emit_report(&agg, opts.format(), opts.out.as_deref())?;
            Ok(agg.exit_code() as u8)
        }
        Command::Report { ids, opts, parallel } => {
            let (cfg, mut ov) = opts.resolve()?;
            if !ids.is_empty() {
                ov.scenarios = Some(ids);
            }
            let agg = verify_all(&cfg, &ov, parallel)?;
            match opts.format() {
                ReportFormat::Json => {
                    let mut body = serde_json::to_string_pretty(&stable_json(&agg))?;
                    body.push('\n');
                    match &opts.out {
                        Some(p) => std::fs::write(p, body).with_context(|| format!("writing {}", p.display()))?,
                        None => print!("{body}"),
                    }
                }
                ReportFormat::Text => emit_report(&agg, ReportFormat::Text, opts.out.as_deref())?,
            }
            Ok(agg.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
