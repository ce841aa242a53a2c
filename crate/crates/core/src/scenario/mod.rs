//! Named verification scenarios: each binds a fixture or a seeded random matrix
//! to a list of checks and produces a deterministic report.

mod runs;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::groebner::Budget;
use crate::linmat::FIXTURES;
use crate::report::{Check, Status};
use crate::ring::{FieldSpec, DEFAULT_PRIME};

/// The registered scenarios.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scenario {
    Fitting,
    SatPowers,
    Cremona,
    Eima,
    Eta,
    ImplicitCore,
    KernelPi,
    WNzd,
    HilbertSymbolic,
    Erratic,
}

impl Scenario {
    pub const ALL: [Scenario; 10] = [
        Scenario::Fitting,
        Scenario::SatPowers,
        Scenario::Cremona,
        Scenario::Eima,
        Scenario::Eta,
        Scenario::ImplicitCore,
        Scenario::KernelPi,
        Scenario::WNzd,
        Scenario::HilbertSymbolic,
        Scenario::Erratic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::Fitting => "fitting",
            Scenario::SatPowers => "sat-powers",
            Scenario::Cremona => "cremona",
            Scenario::Eima => "eima",
            Scenario::Eta => "eta",
            Scenario::ImplicitCore => "implicit-core",
            Scenario::KernelPi => "kernel-pi",
            Scenario::WNzd => "w-nzd",
            Scenario::HilbertSymbolic => "hilbert-symbolic",
            Scenario::Erratic => "erratic",
        }
    }

    /// One line on what the scenario verifies.
    pub fn summary(self) -> &'static str {
        match self {
            Scenario::Fitting => "codimensions of the Fitting ideals I_t(L) against min{n, (m-t+1)(m-t)}",
            Scenario::SatPowers => {
                "I^(r) = I^r for r <= n-2, strict inclusion at r = n-1 with the inversion factors as witnesses"
            }
            Scenario::Cremona => {
                "Cremona case m = n: f(Delta) = X.D, D = det(Theta)/(n-1), chain-rule identity, D in I^(n-1) \\ I^(n-1)"
            }
            Scenario::Eima => {
                "3 x 2 matrices: I^(d) by the even/odd product formula and ann(I^(d)/I^d) = (X)^floor(d/2)"
            }
            Scenario::Eta => "rank of the eta matrix and the common-divisor test of the inversion factors",
            Scenario::ImplicitCore => {
                "m = n+1: inversion data D, d, G, E, the complex resolving (D) and the fresh generators of I^(n-1)"
            }
            Scenario::KernelPi => {
                "the five generator blocks of the presentation ideal P vanish under pi; codim P = 2n+1"
            }
            Scenario::WNzd => "W is a non-zerodivisor modulo P",
            Scenario::HilbertSymbolic => "Hilbert series of the presentation with W of weight n-1",
            Scenario::Erratic => "m >= n+2: fresh generators of I^(2) and their degrees",
        }
    }

    pub fn default_field(self) -> FieldSpec {
        match self {
            Scenario::Cremona | Scenario::Eima | Scenario::ImplicitCore => FieldSpec::Rationals,
            _ => FieldSpec::Prime(DEFAULT_PRIME),
        }
    }

    /// Default `(m, n)`.
    pub fn default_shape(self) -> (usize, usize) {
        match self {
            Scenario::Cremona | Scenario::Eima => (3, 3),
            Scenario::Erratic => (7, 3),
            _ => (4, 3),
        }
    }

    fn takes_fixture(self) -> bool {
        !matches!(self, Scenario::Eima)
    }
}

impl FromStr for Scenario {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL.into_iter().find(|sc| sc.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Scenario::ALL.iter().map(|sc| sc.name()).collect();
            AlgebraError::Config(format!("unknown scenario '{s}' (expected one of {})", names.join(", ")))
        })
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything a scenario run depends on. Unset options take the scenario's
/// defaults.
#[derive(Clone, Debug)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub field: Option<FieldSpec>,
    pub seed: u64,
    pub fixture: Option<String>,
    pub dmax: Option<u32>,
    pub rmax: Option<u32>,
    pub budget_secs: Option<f64>,
    pub max_degree: Option<u32>,
    pub max_steps: Option<u64>,
    pub out: Option<PathBuf>,
}

impl ScenarioConfig {
    pub fn new(scenario: Scenario) -> Self {
        ScenarioConfig {
            scenario,
            m: None,
            n: None,
            field: None,
            seed: 7,
            fixture: None,
            dmax: None,
            rmax: None,
            budget_secs: None,
            max_degree: None,
            max_steps: None,
            out: None,
        }
    }

    pub fn budget(&self) -> Budget {
        let mut b = match self.budget_secs {
            Some(s) => Budget::with_secs(s),
            None => Budget::unlimited(),
        };
        b.max_degree = self.max_degree;
        b.max_steps = self.max_steps;
        b
    }

    /// Fills in defaults and rejects inconsistent options.
    pub fn resolve(&self) -> Result<Resolved> {
        let sc = self.scenario;
        if let Some(s) = self.budget_secs {
            if !(s > 0.0 && s.is_finite()) {
                return Err(AlgebraError::Config(format!("--budget-secs must be positive, got {s}")));
            }
        }
        if self.max_degree == Some(0) || self.max_steps == Some(0) {
            return Err(AlgebraError::Config("budgets must be positive".into()));
        }
        let field = self.field.unwrap_or_else(|| sc.default_field());
        let (mut m, mut n) = sc.default_shape();
        if let Some(name) = &self.fixture {
            if !sc.takes_fixture() {
                return Err(AlgebraError::Config(format!("scenario {sc} does not take a fixture")));
            }
            if !FIXTURES.contains(&name.as_str()) {
                return Err(AlgebraError::Config(format!(
                    "unknown fixture '{name}' (expected one of {})",
                    FIXTURES.join(", ")
                )));
            }
            (m, n) = if name == "fix-c3" { (3, 3) } else { (4, 3) };
            if self.m.is_some_and(|x| x != m) || self.n.is_some_and(|x| x != n) {
                return Err(AlgebraError::Config(format!("fixture {name} has m={m} n={n}")));
            }
        } else {
            m = self.m.unwrap_or(m);
            n = self.n.unwrap_or(n);
        }
        if m < 2 || n < 3 {
            return Err(AlgebraError::Config(format!("need m >= 2 and n >= 3, got m={m} n={n}")));
        }
        let shape_ok = match sc {
            Scenario::Fitting | Scenario::SatPowers => true,
            Scenario::Cremona => m == n,
            Scenario::Eima => m == 3 && n == 3,
            Scenario::Eta
            | Scenario::ImplicitCore
            | Scenario::KernelPi
            | Scenario::WNzd
            | Scenario::HilbertSymbolic => m == n + 1,
            Scenario::Erratic => m >= n + 2,
        };
        if !shape_ok {
            let want = match sc {
                Scenario::Cremona => "m = n",
                Scenario::Eima => "m = n = 3",
                Scenario::Erratic => "m >= n + 2",
                _ => "m = n + 1",
            };
            return Err(AlgebraError::Config(format!("scenario {sc} needs {want}, got m={m} n={n}")));
        }
        if self.dmax.is_some_and(|d| d < 2) {
            return Err(AlgebraError::Config("--dmax must be at least 2".into()));
        }
        if self.rmax == Some(0) {
            return Err(AlgebraError::Config("--rmax must be at least 1".into()));
        }
        let rmax = self.rmax.unwrap_or(match sc {
            Scenario::Erratic => 2,
            _ => (n as u32 - 1).max(1),
        });
        Ok(Resolved {
            scenario: sc,
            m,
            n,
            field,
            seed: self.seed,
            fixture: self.fixture.clone(),
            dmax: self.dmax.unwrap_or(5),
            rmax,
        })
    }
}

/// A configuration with every default filled in.
#[derive(Clone, Debug, PartialEq)]
pub struct Resolved {
    pub scenario: Scenario,
    pub m: usize,
    pub n: usize,
    pub field: FieldSpec,
    pub seed: u64,
    pub fixture: Option<String>,
    pub dmax: u32,
    pub rmax: u32,
}

impl Resolved {
    fn params(&self, cfg: &ScenarioConfig) -> BTreeMap<String, Value> {
        let mut p = BTreeMap::new();
        p.insert("m".into(), json!(self.m));
        p.insert("n".into(), json!(self.n));
        p.insert("field".into(), json!(self.field.to_string()));
        match &self.fixture {
            Some(f) => p.insert("fixture".into(), json!(f)),
            None => p.insert("seed".into(), json!(self.seed)),
        };
        match self.scenario {
            Scenario::Eima => {
                p.insert("dmax".into(), json!(self.dmax));
            }
            Scenario::SatPowers | Scenario::Erratic => {
                p.insert("rmax".into(), json!(self.rmax));
            }
            _ => {}
        }
        if let Some(s) = cfg.budget_secs {
            p.insert("budgetSecs".into(), json!(s));
        }
        if let Some(d) = cfg.max_degree {
            p.insert("maxDegree".into(), json!(d));
        }
        if let Some(s) = cfg.max_steps {
            p.insert("maxSteps".into(), json!(s));
        }
        p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FieldMode {
    #[serde(rename = "char-0")]
    CharZero,
    /// A large prime standing in for characteristic zero.
    #[serde(rename = "proxy")]
    Proxy,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub phase: String,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub scenario: String,
    pub params: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    /// Tables and polynomials produced along the way.
    pub artifacts: BTreeMap<String, Value>,
    /// Wall-clock times. Kept out of the JSON so reports stay reproducible.
    #[serde(skip)]
    pub timings: Vec<Timing>,
    pub engine_version: String,
    pub field_mode: FieldMode,
}

impl VerificationReport {
    pub fn empty(scenario: &str, field: FieldSpec) -> Self {
        VerificationReport {
            scenario: scenario.into(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            artifacts: BTreeMap::new(),
            timings: Vec::new(),
            engine_version: env!("CARGO_PKG_VERSION").into(),
            field_mode: if field.is_proxy() { FieldMode::Proxy } else { FieldMode::CharZero },
        }
    }

    /// Fail dominates budget exhaustion, which dominates pass.
    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.iter().any(|c| c.status == Status::BudgetExceeded) {
            Status::BudgetExceeded
        } else {
            Status::Pass
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::BudgetExceeded => 2,
        }
    }
}

/// Exit code for configuration errors.
pub const CONFIG_EXIT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(AlgebraError::Config(format!("unknown format '{s}' (expected json or text)"))),
        }
    }
}

/// Runs the scenario's checks in order. Configuration problems are errors;
/// everything that happens during the run ends up in the report.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<VerificationReport> {
    let resolved = cfg.resolve()?;
    let mut run = Run::new(cfg.budget());
    match resolved.field {
        FieldSpec::Rationals => runs::dispatch::<crate::ring::Rational>(&resolved, &mut run),
        FieldSpec::Prime(_) => runs::dispatch::<crate::ring::Fp>(&resolved, &mut run),
    }
    let mut report = VerificationReport::empty(resolved.scenario.name(), resolved.field);
    report.params = resolved.params(cfg);
    report.checks = run.checks;
    report.artifacts = run.artifacts;
    report.timings = run.timings;
    Ok(report)
}

/// JSON with sorted keys, or a plain-text table.
pub fn emit_report(report: &VerificationReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            // `Value` keeps object keys in a sorted map
            let value = serde_json::to_value(report).expect("reports serialize");
            let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => text_report(report).into_bytes(),
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::BudgetExceeded => "BUDGET",
    }
}

fn text_report(r: &VerificationReport) -> String {
    let mut s = String::new();
    let params: Vec<String> = r
        .params
        .iter()
        .map(|(k, v)| match v.as_str() {
            Some(text) => format!("{k}={text}"),
            None => format!("{k}={v}"),
        })
        .collect();
    let mode = match r.field_mode {
        FieldMode::CharZero => "char-0",
        FieldMode::Proxy => "proxy",
    };
    let _ = writeln!(s, "scenario {} ({}) [{mode}, engine {}]", r.scenario, params.join(" "), r.engine_version);
    let width = r.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
    for c in &r.checks {
        let mut line = format!("  {:<6} {:<width$}", status_word(c.status), c.name);
        if let Some(d) = &c.detail {
            let _ = write!(line, "  {d}");
        }
        let _ = writeln!(s, "{}", line.trim_end());
        if let Some(w) = &c.witness {
            let _ = writeln!(s, "         witness: {w}");
        }
    }
    if !r.timings.is_empty() {
        let parts: Vec<String> = r.timings.iter().map(|t| format!("{} {} ms", t.phase, t.millis)).collect();
        let _ = writeln!(s, "  timings: {}", parts.join(", "));
    }
    let passed = r.checks.iter().filter(|c| c.passed()).count();
    let _ = writeln!(s, "{}: {passed}/{} checks pass", status_word(r.status()), r.checks.len());
    s
}

/// Accumulates checks while a scenario runs. After a budget error every
/// further step is skipped.
pub(crate) struct Run {
    budget: Budget,
    checks: Vec<Check>,
    artifacts: BTreeMap<String, Value>,
    timings: Vec<Timing>,
    halted: bool,
}

impl Run {
    fn new(budget: Budget) -> Self {
        Run { budget, checks: Vec::new(), artifacts: BTreeMap::new(), timings: Vec::new(), halted: false }
    }

    /// Runs one timed step. An error becomes a check named after the step.
    pub(crate) fn step<T>(&mut self, label: &str, f: impl FnOnce(&Budget) -> Result<T>) -> Option<T> {
        if self.halted {
            return None;
        }
        let start = Instant::now();
        let out = f(&self.budget);
        self.timings.push(Timing { phase: label.into(), millis: start.elapsed().as_millis() as u64 });
        match out {
            Ok(v) => Some(v),
            Err(e) => {
                self.halted = e.is_budget();
                self.checks.push(Check::from_error(label, &e));
                None
            }
        }
    }

    pub(crate) fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub(crate) fn checks(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }

    pub(crate) fn artifact(&mut self, key: &str, v: Value) {
        self.artifacts.insert(key.into(), v);
    }
}
