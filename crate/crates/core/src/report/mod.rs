//! Machine-readable check reports, one suite per module, and the tables and
//! dimension comparisons emitted by the command-line driver.

pub mod dims;
pub mod suites;
pub mod tables;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::assets::Assets;
use crate::error::{Error, Result};
use crate::exactalg::{Modulus, DEFAULT_PRIME};
use crate::runge::numeric::{DEFAULT_RADIUS, ODD_TOLERANCE, SPREAD_TOLERANCE, VERIFY_TOLERANCE};

pub use dims::{hilbert_table, weight_dims, DimRow, HilbertRing, HilbertTable};
pub use tables::{render_table, Table, TableFormat, TableName};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest total degree of any polynomial identity tested modulo the prime.
pub const MAX_DEGREE: u64 = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// Where the expected value of a check comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A value printed in the published source.
    Paper,
    /// A value produced by an independent computation.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub module: String,
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub provenance: Provenance,
    pub seed: u64,
    /// Wall time of the computation behind the check. Only recorded on
    /// request, since it would make reports nondeterministic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Largest relative residual accepted for a numerical identity.
    pub verify: f64,
    /// Largest relative spread of a fitted constant.
    pub spread: f64,
    /// Largest modulus accepted for a theta constant that must vanish.
    pub odd: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { verify: VERIFY_TOLERANCE, spread: SPREAD_TOLERANCE, odd: ODD_TOLERANCE }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub prime: u64,
    pub seed: u64,
    /// Random evaluations per identity test.
    pub trials: usize,
    /// Truncation radius of the theta series.
    pub radius: i64,
    pub tolerances: Tolerances,
    /// Also run the long certifications.
    pub deep: bool,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime: DEFAULT_PRIME,
            seed: 1,
            trials: 8,
            radius: DEFAULT_RADIUS,
            tolerances: Tolerances::default(),
            deep: false,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn modulus(&self) -> Result<Modulus> {
        if self.prime <= MAX_DEGREE {
            return Err(Error::Invalid(format!("prime {} does not exceed the degree bound {MAX_DEGREE}", self.prime)));
        }
        Modulus::new(self.prime)
    }

    pub fn validate(&self) -> Result<()> {
        self.modulus()?;
        if self.trials == 0 {
            return Err(Error::Invalid("at least one trial is required".into()));
        }
        if self.radius < 1 {
            return Err(Error::Invalid("truncation radius must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Module {
    Exactalg,
    Charspace,
    Specht,
    Thomae,
    Thetaring,
    Baselocus,
    Runge,
}

impl Module {
    pub const ALL: [Module; 7] = [
        Module::Exactalg,
        Module::Charspace,
        Module::Specht,
        Module::Thomae,
        Module::Thetaring,
        Module::Baselocus,
        Module::Runge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Module::Exactalg => "exactalg",
            Module::Charspace => "charspace",
            Module::Specht => "specht",
            Module::Thomae => "thomae",
            Module::Thetaring => "thetaring",
            Module::Baselocus => "baselocus",
            Module::Runge => "runge",
        }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Module {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Module::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown module {s:?}")))
    }
}

/// `all` or a single module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    All,
    One(Module),
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            Ok(Target::All)
        } else {
            s.parse().map(Target::One)
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::All => f.write_str("all"),
            Target::One(m) => m.fmt(f),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub crate_version: String,
    pub target: String,
    pub config: RunConfig,
    pub summary: Summary,
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn new(target: &Target, config: &RunConfig, checks: Vec<CheckReport>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Info => summary.info += 1,
            }
        }
        Report {
            schema_version: SCHEMA_VERSION,
            crate_version: env!("CARGO_PKG_VERSION").to_string(),
            target: target.to_string(),
            config: config.clone(),
            summary,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            out.push_str(&format!("[{tag}] {}: {}", c.module, c.name));
            out.push_str(&format!(" | expected {} | actual {}", c.expected, c.actual));
            if let Some(ms) = c.runtime_ms {
                out.push_str(&format!(" | {ms} ms"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} info\n",
            self.summary.pass, self.summary.fail, self.summary.info
        ));
        out
    }
}

/// Runs the suites of `target` in module order.
pub fn verify(target: &Target, config: &RunConfig, assets: &Assets) -> Result<Report> {
    config.validate()?;
    let modules: Vec<Module> = match target {
        Target::All => Module::ALL.to_vec(),
        Target::One(m) => vec![*m],
    };
    let mut checks = Vec::new();
    for m in modules {
        checks.extend(suites::run(m, config, assets)?);
    }
    Ok(Report::new(target, config, checks))
}

/// Collects the checks of one suite.
pub(crate) struct Collector<'a> {
    module: Module,
    config: &'a RunConfig,
    checks: Vec<CheckReport>,
    mark: Instant,
}

impl<'a> Collector<'a> {
    pub(crate) fn new(module: Module, config: &'a RunConfig) -> Self {
        Collector { module, config, checks: Vec::new(), mark: Instant::now() }
    }

    /// Restarts the clock; checks report the time since the last restart.
    pub(crate) fn restart(&mut self) {
        self.mark = Instant::now();
    }

    pub(crate) fn config(&self) -> &RunConfig {
        self.config
    }

    pub(crate) fn record(
        &mut self,
        name: &str,
        status: Status,
        provenance: Provenance,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        let runtime_ms = self.config.timings.then(|| self.mark.elapsed().as_millis() as u64);
        self.checks.push(CheckReport {
            module: self.module.name().to_string(),
            name: name.to_string(),
            status,
            expected: expected.to_string(),
            actual: actual.to_string(),
            provenance,
            seed: self.config.seed,
            runtime_ms,
        });
    }

    pub(crate) fn check(
        &mut self,
        name: &str,
        provenance: Provenance,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        pass: bool,
    ) {
        let status = if pass { Status::Pass } else { Status::Fail };
        self.record(name, status, provenance, expected, actual);
    }

    /// Passes when the rendered values agree.
    pub(crate) fn equal(&mut self, name: &str, provenance: Provenance, expected: impl fmt::Display, actual: impl fmt::Display) {
        let (e, a) = (expected.to_string(), actual.to_string());
        let pass = e == a;
        self.check(name, provenance, e, a, pass);
    }

    pub(crate) fn info(&mut self, name: &str, provenance: Provenance, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.record(name, Status::Info, provenance, expected, actual);
    }

    /// Records a failed check for an error and drops the value.
    pub(crate) fn ok<T>(&mut self, name: &str, result: Result<T>) -> Option<T> {
        match result {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(name, Provenance::Derived, "computation succeeds", format!("error: {e}"), false);
                None
            }
        }
    }

    pub(crate) fn finish(self) -> Vec<CheckReport> {
        self.checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let cfg = RunConfig::default();
        let mut c = Collector::new(Module::Charspace, &cfg);
        c.equal("a", Provenance::Paper, 36, 36);
        c.equal("b", Provenance::Derived, 5, 6);
        c.info("c", Provenance::Paper, 210, 105);
        let r = Report::new(&Target::One(Module::Charspace), &cfg, c.finish());
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, info: 1 });
        assert!(!r.all_pass());
        let text = serde_json::to_string(&r).unwrap();
        assert!(!text.contains("runtime_ms"));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn targets_parse() {
        assert_eq!("all".parse::<Target>().unwrap(), Target::All);
        assert_eq!("runge".parse::<Target>().unwrap(), Target::One(Module::Runge));
        assert!("nonsense".parse::<Target>().is_err());
    }

    #[test]
    fn small_primes_are_rejected() {
        let cfg = RunConfig { prime: 47, ..RunConfig::default() };
        assert!(cfg.validate().is_err());
        let cfg = RunConfig { prime: 53, ..RunConfig::default() };
        assert!(cfg.validate().is_ok());
    }
}
