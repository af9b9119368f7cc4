use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use transversal_lab::commands::{self, Invariance, Output, EXIT_CLEAN, EXIT_COUNTEREXAMPLE, EXIT_INPUT};
use transversal_lab::{emit_report, load, scan_corpus, Caps, Format, LabError, Mode};

/// Invariant coset transversals of finite groups.
///
/// FILE is a JSON group file or `builtin:NAME` for a bundled fixture.
/// TRANSVERSAL_LAB_CAP overrides the closure and search caps.
#[derive(Parser)]
#[command(name = "transversal-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a group and list its element enumeration.
    Info { file: String },
    /// Conditions, class numbers, construction, and cocycle data for H.
    Check {
        file: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build a G-invariant transversal and report its loop structure.
    Construct {
        file: String,
        #[arg(long)]
        subgroup: String,
    },
    /// Exhaustive search for an invariant transversal.
    Brute {
        file: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long, value_enum)]
        invariance: Invariance,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Factor set of a central subgroup and its twists by characters.
    Cocycle {
        file: String,
        #[arg(long)]
        subgroup: String,
        /// Index into the characters of H; defaults to every faithful one.
        #[arg(long)]
        lambda: Option<usize>,
        /// Element list to use instead of the minimal coset representatives.
        #[arg(long)]
        transversal: Option<String>,
    },
    /// A Sylow p-subgroup.
    Sylow {
        file: String,
        #[arg(short)]
        p: usize,
    },
    /// Push an invariant transversal of a central H down to Q inside a Sylow subgroup.
    Descend {
        file: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        q: String,
        #[arg(short)]
        p: usize,
    },
    /// Scan every *.json group file in a directory.
    Scan {
        dir: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the bundled fixture groups as Cayley files.
    ExportFixtures { dir: PathBuf },
}

fn run(cli: Cli) -> Result<Output, LabError> {
    let caps = Caps::from_env()?;
    match cli.command {
        Command::Info { file } => Ok(commands::info(&load(&file, &caps)?)),
        Command::Check { file, subgroup, format } => {
            let name = file.rsplit('/').next().unwrap_or(&file).to_string();
            commands::check(&name, &load(&file, &caps)?, &subgroup, format)
        }
        Command::Construct { file, subgroup } => commands::construct(&load(&file, &caps)?, &subgroup),
        Command::Brute { file, subgroup, invariance, cap } => {
            commands::brute(&load(&file, &caps)?, &subgroup, invariance, cap.unwrap_or(caps.search))
        }
        Command::Cocycle { file, subgroup, lambda, transversal } => {
            commands::cocycle(&load(&file, &caps)?, &subgroup, lambda, transversal.as_deref())
        }
        Command::Sylow { file, p } => commands::sylow(&load(&file, &caps)?, p),
        Command::Descend { file, subgroup, q, p } => commands::descend(&load(&file, &caps)?, &subgroup, &q, p),
        Command::Scan { dir, mode, jobs, format, out } => {
            let report = scan_corpus(&dir, mode, jobs, &caps)?;
            let text = emit_report(&report, format, out.as_deref())?.unwrap_or_default();
            let exit = if report.totals.counterexamples > 0 {
                EXIT_COUNTEREXAMPLE
            } else if report.totals.errors > 0 {
                EXIT_INPUT
            } else {
                EXIT_CLEAN
            };
            Ok(Output { text, exit })
        }
        Command::ExportFixtures { dir } => {
            let written = transversal_lab::scan::export_groups(&dir, &transversal_lab_core::group::fixture_corpus())?;
            Ok(Output { text: format!("wrote {} files to {}\n", written.len(), dir.display()), exit: EXIT_CLEAN })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
