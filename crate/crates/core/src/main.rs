use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use thin_steklov::lab::{
    run_convergence_study_with, write_report, ReportFormat, StudyConfig, StudyMode,
};

#[derive(Parser)]
#[command(name = "steklov-lab", version, about = "Thin-domain biharmonic Steklov eigenvalue studies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full epsilon sweep: 2D Steklov spectra against the limit problem.
    Study(RunArgs),
    /// Limit problem only (any n >= 2).
    Limit(RunArgs),
    /// One 2D solve at the first epsilon of the config.
    Steklov(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Flat key = value configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: ReportFormat,
    /// Gauss points per direction, overriding the config.
    #[arg(long)]
    quad: Option<usize>,
    /// Reserved; the solvers are deterministic.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

fn run(mode: StudyMode, args: RunArgs) -> thin_steklov::Result<()> {
    let mut config = StudyConfig::from_file(&args.config, mode)?;
    if let Some(q) = args.quad {
        config.quad = q;
    }
    let _ = args.seed;
    let report = run_convergence_study_with(&config, args.threads)?;
    match &args.out {
        Some(path) => {
            write_report(&report, args.format, path)?;
            eprintln!("wrote {} rows to {}", report.rows.len(), path.display());
        }
        None => print!("{}", report.render(args.format)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mode, args) = match cli.command {
        Command::Study(a) => (StudyMode::Full, a),
        Command::Limit(a) => (StudyMode::LimitOnly, a),
        Command::Steklov(a) => (StudyMode::Single, a),
    };
    match run(mode, args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
