use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symrees::ring::FieldSpec;
use symrees::scenario::{emit_report, run_scenario, Format, Scenario, ScenarioConfig, CONFIG_EXIT};

#[derive(Parser)]
#[command(
    name = "symrees",
    version,
    about = "Verify symbolic-power and birational-inversion theorems on determinantal ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario and print or write its report.
    Verify(VerifyArgs),
    /// List the registered scenarios.
    List,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Scenario name (see `symrees list`).
    scenario: String,
    /// Rows of the m x (m-1) matrix.
    #[arg(long)]
    m: Option<usize>,
    /// Number of variables.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// `q` or `fp:<p>`.
    #[arg(long)]
    field: Option<String>,
    /// A named fixture matrix in place of a random one.
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long)]
    dmax: Option<u32>,
    #[arg(long)]
    rmax: Option<u32>,
    /// Wall-clock limit for the whole run.
    #[arg(long, allow_negative_numbers = true)]
    budget_secs: Option<f64>,
    /// Largest sugar degree a Gröbner computation may reach.
    #[arg(long)]
    max_degree: Option<u32>,
    /// Cap on reduction steps per Gröbner computation.
    #[arg(long)]
    max_steps: Option<u64>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: String,
}

fn config(args: &VerifyArgs) -> symrees::Result<(ScenarioConfig, Format)> {
    let mut cfg = ScenarioConfig::new(args.scenario.parse::<Scenario>()?);
    cfg.m = args.m;
    cfg.n = args.n;
    cfg.seed = args.seed;
    cfg.field = args.field.as_deref().map(FieldSpec::parse).transpose()?;
    cfg.fixture = args.fixture.clone();
    cfg.dmax = args.dmax;
    cfg.rmax = args.rmax;
    cfg.budget_secs = args.budget_secs;
    cfg.max_degree = args.max_degree;
    cfg.max_steps = args.max_steps;
    cfg.out = args.out.clone();
    Ok((cfg, args.format.parse()?))
}

/// Writes through a sibling temporary file so readers never see a partial report.
fn write_atomically(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".{}.tmp", std::process::id()));
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)
}

fn verify(args: &VerifyArgs) -> u8 {
    let (cfg, format) = match config(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("symrees: {e}");
            return CONFIG_EXIT as u8;
        }
    };
    let report = match run_scenario(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("symrees: {e}");
            return CONFIG_EXIT as u8;
        }
    };
    let bytes = emit_report(&report, format);
    let written = match &cfg.out {
        Some(path) => write_atomically(path, &bytes),
        None => std::io::stdout().write_all(&bytes),
    };
    if let Err(e) = written {
        eprintln!("symrees: cannot write report: {e}");
        return CONFIG_EXIT as u8;
    }
    report.exit_code() as u8
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(CONFIG_EXIT as u8) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Verify(args) => ExitCode::from(verify(&args)),
        Command::List => {
            for sc in Scenario::ALL {
                println!("{:<17} [{}] {}", sc.name(), sc.default_field(), sc.summary());
            }
            ExitCode::SUCCESS
        }
    }
}
