use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kvertex_cli::{run, CliError, Command, JobConfig, Mode, Suite};

#[derive(Parser)]
#[command(name = "kvertex", version, about = "Bare and capped vertex functions with exact verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bare vertex series at every fixed point.
    Vertex(Common),
    /// Capped vertex series with a rationality report (rank 1).
    Capped(Common),
    /// Capping operator coefficients (rank 1).
    Psi(Common),
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
    },
    /// Run a job described by a JSON config file.
    Run { config: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Relations,
    Macdonald,
    Facver,
    Wkz,
    Cocycle,
    Rlimit,
    Classical,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Specialized,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Largest z-order.
    #[arg(long = "D", default_value_t = 3)]
    order: usize,
    /// Fock space truncation.
    #[arg(long = "N", default_value_t = 2)]
    truncation: u32,
    #[arg(long, default_value = "1")]
    tau: String,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long)]
    seed: Option<u64>,
    /// Symbol value, e.g. `--param T1=3/2` (square-root symbols).
    #[arg(long = "param", value_parser = key_value)]
    params: Vec<(String, String)>,
    /// Largest m + n in the Pade scan.
    #[arg(long)]
    pade_total: Option<usize>,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Worker threads for `verify all`.
    #[arg(long)]
    jobs: Option<usize>,
}

fn key_value(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| format!("expected NAME=VALUE, got {s:?}"))
}

fn config(command: Command, suite: Option<Suite>, c: Common) -> JobConfig {
    // verification suites specialize unless told otherwise
    let default_mode = if c.seed.is_some() && command == Command::Verify { Mode::Specialized } else { Mode::Symbolic };
    let mode = match c.mode {
        Some(ModeArg::Symbolic) => Mode::Symbolic,
        Some(ModeArg::Specialized) => Mode::Specialized,
        None if command == Command::Capped => Mode::Specialized,
        None => default_mode,
    };
    JobConfig {
        command,
        suite,
        n: c.n,
        r: c.r,
        order: c.order,
        truncation: c.truncation,
        tau: c.tau,
        mode,
        seed: c.seed,
        params: c.params.into_iter().collect::<BTreeMap<_, _>>(),
        pade_total: c.pade_total,
        output: c.output,
        jobs: c.jobs,
    }
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Relations => Suite::Relations,
        SuiteArg::Macdonald => Suite::Macdonald,
        SuiteArg::Facver => Suite::Facver,
        SuiteArg::Wkz => Suite::Wkz,
        SuiteArg::Cocycle => Suite::Cocycle,
        SuiteArg::Rlimit => Suite::Rlimit,
        SuiteArg::Classical => Suite::Classical,
        SuiteArg::All => Suite::All,
    }
}

fn execute(cli: Cli) -> Result<bool, CliError> {
    let cfg = match cli.command {
        Cmd::Vertex(c) => config(Command::Vertex, None, c),
        Cmd::Capped(c) => config(Command::Capped, None, c),
        Cmd::Psi(c) => config(Command::Psi, None, c),
        Cmd::Verify { suite: s, common } => config(Command::Verify, Some(suite(s)), common),
        Cmd::Run { config } => JobConfig::from_json(&std::fs::read_to_string(config)?)?,
    };
    let job = cfg.validate()?;
    let report = run(&job)?;
    let text = report.to_json();
    match &cfg.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
