use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hkrr_cli::{
    cmd_chern, cmd_chi, cmd_fujiki, cmd_rr, cmd_verify, load_gram, CliError, Report, Suite,
};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "hkrr", version, about = "Riemann-Roch polynomials and Chern numbers of hyperkähler manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    Json,
    #[default]
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChernTarget {
    Og10,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Og6,
    Og10,
    Identity,
    Fujiki,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// RR polynomial of a deformation family (k3n, kumn, og6, og10).
    Rr {
        family: String,
        #[arg(long)]
        n: Option<usize>,
        /// Evaluate χ(L) at q(L) = Q.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Solve for the Chern numbers.
    Chern {
        #[arg(value_enum)]
        target: ChernTarget,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate ∫ α_1⋯α_2n through the polarized Fujiki relation.
    Fujiki {
        #[arg(long, allow_hyphen_values = true)]
        cx: String,
        /// JSON file {"labels": [...], "entries": [[...]]}.
        #[arg(long)]
        gram: PathBuf,
        /// Slot multiset such as "F^5*Theta^5".
        #[arg(long)]
        slots: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// χ(L) for q(L) = Q.
    Chi {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn emit(json: Value, table: String, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("valid JSON")),
        Format::Table => print!("{table}"),
    }
}

fn emit_report(r: &Report, format: Format) -> u8 {
    emit(r.to_json(), r.to_table(), format);
    if r.passed() {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Rr { family, n, eval, format } => {
            Ok(emit_report(&cmd_rr(&family, n, eval.as_deref())?, format))
        }
        Command::Chern { target: ChernTarget::Og10, format } => {
            let r = cmd_chern()?;
            emit(r.to_json(), r.to_table(), format);
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::Verify { suite, format } => {
            let suite = match suite {
                SuiteArg::Og6 => Suite::Og6,
                SuiteArg::Og10 => Suite::Og10,
                SuiteArg::Identity => Suite::Identity,
                SuiteArg::Fujiki => Suite::Fujiki,
                SuiteArg::All => Suite::All,
            };
            Ok(emit_report(&cmd_verify(suite), format))
        }
        Command::Fujiki { cx, gram, slots, format } => {
            let gram = load_gram(&gram)?;
            Ok(emit_report(&cmd_fujiki(&cx, &gram, &slots)?, format))
        }
        Command::Chi { family, n, q, format } => Ok(emit_report(&cmd_chi(&family, n, &q)?, format)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
