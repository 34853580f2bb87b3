use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use homlie_cli::{load, run, Command, Format};

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

/// Exact checks and computations for Hom-Lie conformal algebras.
#[derive(Parser)]
#[command(name = "homlie", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    report: ReportFormat,
    /// Print every failing tuple instead of the first.
    #[arg(long, global = true)]
    all_witnesses: bool,
    /// Workspace definition file.
    workspace: PathBuf,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.report {
        ReportFormat::Text => Format::Text,
        ReportFormat::Json => Format::Json,
    };
    let outcome = load(&cli.workspace).and_then(|ws| run(&cli.command, &ws, cli.all_witnesses));
    match outcome {
        Ok(doc) => {
            let _ = std::io::stdout().write_all(doc.render(format).as_bytes());
            ExitCode::from(doc.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
