use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hankel_core::cli::{self, Command, Format, RunConfig, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "hankel-verify", version, about = "Verify the third Hankel determinant bound for inverses of convex maps")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random draws [default: 100000]
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true, default_value_t = 64)]
    grid: usize,
    #[arg(long, global = true, default_value_t = 6)]
    refine: usize,
    #[arg(long = "max-atoms", global = true, default_value_t = 6)]
    max_atoms: usize,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    exact: bool,
    /// Sample the unit circle more often
    #[arg(long = "boundary-heavy", global = true)]
    boundary_heavy: bool,
    /// Dump the lattice values to CSV (maximize)
    #[arg(long, global = true)]
    lattice: Option<PathBuf>,
    #[arg(long = "inject-fault", global = true, hide = true)]
    inject_fault: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Symbolic identity check for H31 in terms of c
    Identity,
    /// Grid maximization of theta over the parameter box
    Maximize,
    /// Herglotz sampling of |H31|
    Sample,
    /// Parametrization validity, route agreement and domination
    LzCheck,
    /// Exact pipeline on the extremal function
    Extremal,
}

#[derive(ValueEnum, Clone, Copy)]
enum FormatArg {
    Json,
    Csv,
}

fn config(args: Cli) -> RunConfig {
    let command = match args.command {
        Cmd::Identity => Command::Identity,
        Cmd::Maximize => Command::Maximize,
        Cmd::Sample => Command::Sample,
        Cmd::LzCheck => Command::LzCheck,
        Cmd::Extremal => Command::Extremal,
    };
    let c = args.common;
    let mut cfg = RunConfig::new(command);
    cfg.seed = c.seed;
    if let Some(n) = c.samples {
        cfg.sample_count = n;
    }
    cfg.grid_resolution = c.grid;
    cfg.refine_rounds = c.refine;
    cfg.max_atoms = c.max_atoms;
    cfg.format = match c.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    cfg.output_path = c.out;
    cfg.exact = c.exact;
    cfg.boundary_heavy = c.boundary_heavy;
    cfg.lattice_path = c.lattice;
    cfg.inject_fault = c.inject_fault;
    cfg
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let cfg = config(args);
    let result = cli::configure_threads().and_then(|_| {
        let outcome = cli::run(&cfg)?;
        match &cfg.output_path {
            Some(p) => outcome.write(cfg.format, BufWriter::new(File::create(p)?))?,
            None => outcome.write(cfg.format, io::stdout().lock())?,
        }
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("hankel-verify: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
