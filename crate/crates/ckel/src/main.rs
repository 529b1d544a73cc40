use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ckel::corpus::run_corpus;
use ckel::document::InputDocument;
use ckel::report::{self, CommandError, Report};

/// Exact K-theory and Ext-group invariants of simple Cuntz-Krieger
/// algebras and unital Exel-Laca algebras.
#[derive(Parser)]
#[command(name = "ckel", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Structural checks: Cuntz-Krieger validity of a matrix, or the
    /// stability/irreducibility report of a seed.
    Validate { file: PathBuf },
    /// K_0 with the unit class and K_1, for a matrix or a seed.
    Kgroups {
        file: PathBuf,
        /// Evaluate at this level instead of the certified base level.
        #[arg(long)]
        level: Option<usize>,
        /// Assert the uncertified hypothesis of an explicit-tail seed.
        #[arg(long)]
        assume_drs_li: bool,
    },
    /// Strong and weak extension groups of a seed.
    Ext {
        file: PathBuf,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        assume_drs_li: bool,
    },
    /// Exactness report for the six-term sequence at a level.
    Sixterm {
        file: PathBuf,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Level-to-level corner and restriction map checks.
    Stabilization {
        file: PathBuf,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Reciprocal dual matrix of a seed and the duality verification.
    Dual {
        file: PathBuf,
        #[arg(long)]
        assume_drs_li: bool,
    },
    /// Double-dual checks for a Cuntz-Krieger matrix.
    DoubleDual { file: PathBuf },
    /// The complete invariant (G1, G2) and its direct sum.
    CkInvariant { file: PathBuf },
    /// Decide isomorphism of two simple Cuntz-Krieger algebras.
    Compare { file1: PathBuf, file2: PathBuf },
    /// Run the bundled worked-example regression corpus.
    PaperExamples,
}

fn load(path: &Path) -> Result<InputDocument, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    InputDocument::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
    }
}

fn exit_for(report: &Report) -> ExitCode {
    match report.verdict {
        Some(false) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

fn run_command(cli: &Cli) -> Result<ExitCode, String> {
    let report = match &cli.command {
        Command::Validate { file } => report::validate_report(&load(file)?),
        Command::Kgroups {
            file,
            level,
            assume_drs_li,
        } => report::kgroups_report(&load(file)?, *level, *assume_drs_li),
        Command::Ext {
            file,
            level,
            assume_drs_li,
        } => report::ext_report(&load(file)?, *level, *assume_drs_li),
        Command::Sixterm { file, level } => report::sixterm_report(&load(file)?, *level),
        Command::Stabilization { file, level } => {
            report::stabilization_report_cmd(&load(file)?, *level)
        }
        Command::Dual {
            file,
            assume_drs_li,
        } => report::dual_report(&load(file)?, *assume_drs_li),
        Command::DoubleDual { file } => report::double_dual_report(&load(file)?),
        Command::CkInvariant { file } => report::ck_invariant_report(&load(file)?),
        Command::Compare { file1, file2 } => report::compare_report(&load(file1)?, &load(file2)?),
        Command::PaperExamples => return Ok(run_examples(cli.format)),
    };
    let report = report.map_err(|e: CommandError| e.to_string())?;
    emit(&report, cli.format);
    Ok(exit_for(&report))
}

fn run_examples(format: Format) -> ExitCode {
    let outcomes = run_corpus();
    let all_pass = outcomes.iter().all(|o| o.pass);
    match format {
        Format::Text => {
            for o in &outcomes {
                let status = if o.pass { "PASS" } else { "FAIL" };
                println!("{status} {} - {}", o.name, o.detail);
            }
            println!(
                "{} of {} examples pass",
                outcomes.iter().filter(|o| o.pass).count(),
                outcomes.len()
            );
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = outcomes
                .iter()
                .map(|o| {
                    serde_json::json!({
                        "name": o.name,
                        "pass": o.pass,
                        "detail": o.detail,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({ "examples": items, "verdict": all_pass })
            );
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run_command(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
