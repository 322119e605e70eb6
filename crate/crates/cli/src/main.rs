//! `octad`: runs the verification suites, emits tables and certifies graded
//! dimensions.
//!
//! Exit status is 0 when everything checked passes, 1 when a check fails and
//! 2 on a usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use octad_core::assets::Assets;
use octad_core::exactalg::DEFAULT_PRIME;
use octad_core::report::{
    hilbert_table, render_table, verify, weight_dims, HilbertRing, HilbertTable, Report, RunConfig, TableFormat,
    TableName, Target, Tolerances,
};
use octad_core::runge::numeric::{random_samples, schottky_numeric_fit, DEFAULT_RADIUS};

#[derive(Parser)]
#[command(name = "octad", version, about = "Verification suites for eight points on a line and genus-3 theta constants")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Prime modulus for identity tests and rank computations.
    #[arg(long, global = true, env = "OCTAD_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, global = true, env = "OCTAD_SEED", default_value_t = 1)]
    seed: u64,
    /// Random evaluations per identity test.
    #[arg(long, global = true, env = "OCTAD_TRIALS", default_value_t = 8)]
    trials: usize,
    /// Truncation radius of the theta series.
    #[arg(long, global = true, env = "OCTAD_RADIUS", default_value_t = DEFAULT_RADIUS)]
    radius: i64,
    /// Output format; each command has its own default.
    #[arg(long, global = true, env = "OCTAD_FORMAT")]
    format: Option<Format>,
    /// Also run the long certifications.
    #[arg(long, global = true, env = "OCTAD_DEEP")]
    deep: bool,
    /// Directory whose files replace the embedded transcriptions.
    #[arg(long, global = true, env = "OCTAD_ASSETS")]
    assets: Option<PathBuf>,
    /// Record wall time per check (reports are then no longer reproducible).
    #[arg(long, global = true, env = "OCTAD_TIMINGS")]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Md,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks of one module, or of all.
    Verify {
        /// all, exactalg, charspace, specht, thomae, thetaring, baselocus or runge.
        #[arg(value_parser = parse_target)]
        target: Target,
    },
    /// Regenerate a table.
    Table {
        /// thomae, subspaces, baselocus or sextuplets.
        #[arg(value_parser = parse_table)]
        name: TableName,
    },
    /// Compare graded dimensions from series, closed forms and ranks.
    Hilbert {
        /// config, B or A.
        #[arg(value_parser = parse_ring)]
        ring: HilbertRing,
        /// Largest degree (weight for B).
        #[arg(long, visible_alias = "max-n", default_value_t = 8)]
        max: usize,
    },
    /// Certify selected graded dimensions by rank.
    Dims {
        #[arg(long, value_parser = parse_ring, default_value = "B")]
        ring: HilbertRing,
        #[arg(long, value_delimiter = ',', default_values_t = [2usize, 4, 6])]
        weights: Vec<usize>,
    },
    /// Fit a constant numerically.
    Fit {
        #[command(subcommand)]
        what: FitCommand,
    },
}

#[derive(Subcommand)]
enum FitCommand {
    /// The ratio of the squared sum of eighth powers to the sum of sixteenth powers.
    Schottky {
        #[arg(long, default_value_t = 5)]
        points: usize,
    },
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|e: octad_core::Error| e.to_string())
}

fn parse_table(s: &str) -> Result<TableName, String> {
    s.parse().map_err(|e: octad_core::Error| e.to_string())
}

fn parse_ring(s: &str) -> Result<HilbertRing, String> {
    s.parse().map_err(|e: octad_core::Error| e.to_string())
}

/// A failure the user caused.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

impl GlobalArgs {
    fn config(&self) -> Result<RunConfig> {
        let cfg = RunConfig {
            prime: self.prime,
            seed: self.seed,
            trials: self.trials,
            radius: self.radius,
            tolerances: Tolerances::default(),
            deep: self.deep,
            timings: self.timings,
        };
        cfg.validate().map_err(|e| Usage(e.to_string()))?;
        Ok(cfg)
    }

    fn assets(&self) -> Result<Assets> {
        match &self.assets {
            None => Ok(Assets::embedded()),
            Some(dir) if dir.is_dir() => Ok(Assets::with_dir(dir)),
            Some(dir) => Err(Usage(format!("assets directory {} does not exist", dir.display())).into()),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn render_report(r: &Report, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => r.render_text(),
        Format::Json => to_json(r)?,
        Format::Md | Format::Csv => {
            let mut t = octad_core::report::Table {
                title: format!("verify {}", r.target),
                columns: ["module", "check", "status", "expected", "actual", "provenance"].map(String::from).to_vec(),
                rows: Vec::new(),
            };
            for c in &r.checks {
                let status = serde_json::to_value(c.status)?.as_str().unwrap_or_default().to_string();
                let provenance = serde_json::to_value(c.provenance)?.as_str().unwrap_or_default().to_string();
                t.rows.push(vec![c.module.clone(), c.name.clone(), status, c.expected.clone(), c.actual.clone(), provenance]);
            }
            if format == Format::Md {
                t.to_markdown()
            } else {
                t.to_csv()
            }
        }
    })
}

fn render_dims(t: &HilbertTable, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(t)?,
        Format::Csv => t.to_csv(),
        Format::Text | Format::Md => t.to_markdown(),
    })
}

/// Output and whether everything passed.
fn run(cli: &Cli) -> Result<(String, bool)> {
    let g = &cli.global;
    match &cli.command {
        Command::Verify { target } => {
            let cfg = g.config()?;
            let report = verify(target, &cfg, &g.assets()?)?;
            Ok((render_report(&report, g.format.unwrap_or(Format::Text))?, report.all_pass()))
        }
        Command::Table { name } => {
            let fmt = match g.format.unwrap_or(Format::Md) {
                Format::Md | Format::Text => TableFormat::Markdown,
                Format::Csv => TableFormat::Csv,
                Format::Json => TableFormat::Json,
            };
            Ok((render_table(*name, fmt, &g.assets()?)?, true))
        }
        Command::Hilbert { ring, max } => {
            let cfg = g.config()?;
            let t = hilbert_table(*ring, *max, &cfg, &g.assets()?).map_err(|e| Usage(e.to_string()))?;
            Ok((render_dims(&t, g.format.unwrap_or(Format::Md))?, t.all_agree))
        }
        Command::Dims { ring, weights } => {
            let cfg = g.config()?;
            let t = weight_dims(*ring, weights, &cfg, &g.assets()?).map_err(|e| Usage(e.to_string()))?;
            let mut out = render_dims(&t, g.format.unwrap_or(Format::Md))?;
            if let Some(limit) = ring.max_certified(cfg.deep) {
                if !cfg.deep && weights.iter().any(|&w| w > limit) {
                    out.push_str(&format!("degrees above {limit} are certified only with --deep\n"));
                }
            }
            Ok((out, t.all_agree))
        }
        Command::Fit { what: FitCommand::Schottky { points } } => {
            let cfg = g.config()?;
            if *points < 2 {
                return Err(Usage("a fit needs at least two points".into()).into());
            }
            let samples = random_samples(*points, cfg.radius, cfg.seed).context("theta evaluation")?;
            let fit = schottky_numeric_fit(&samples);
            let constant = fit.relative_spread < cfg.tolerances.spread;
            let out = match g.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&fit)?,
                _ => {
                    let mut s = String::new();
                    for (k, (re, im)) in fit.values.iter().enumerate() {
                        s.push_str(&format!("point {}: {re:.15} {im:+.1e}i\n", k + 1));
                    }
                    s.push_str(&format!(
                        "mean {:.15}, relative spread {:.1e}, distance to 8 {:.1e}\n",
                        fit.mean.0, fit.relative_spread, fit.distance_to_eight
                    ));
                    s
                }
            };
            Ok((out, constant))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e.downcast_ref::<Usage>().is_some();
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
