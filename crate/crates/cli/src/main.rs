//! `reflectq`: runs catalog verifications and derivations and prints text or
//! JSON reports.

mod jobs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use jobs::{JobError, Outcome};

#[derive(Parser)]
#[command(name = "reflectq", version, about = "Exact reflection-algebra verifications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Parameter override, e.g. `--set c=2/3`. Repeatable.
    #[arg(long = "set", value_name = "SYMBOL=SCALAR", global = true)]
    set: Vec<String>,
    /// Highest retained power of h in limit expansions.
    #[arg(long, default_value_t = reflectq::hseries::DEFAULT_TRUNC, global = true)]
    trunc: i32,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Yang-Baxter equation for an algebra's fundamental R-matrix.
    VerifyYbe { algebra: String },
    /// Solve the intertwining equations for a case.
    DeriveK {
        case: String,
        /// `singlet` or `vector`; defaults to the case's own boundary.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Solve for the parameter values that admit a K-matrix.
    SolveParams { case: String },
    /// Reflection equation for the displayed K-matrix.
    VerifyRe {
        case: String,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Unitarity K(reflected) K = 1 for a singlet K-matrix.
    VerifyUnitarity { case: String },
    /// Fuse the singlet K-matrix into a vector one.
    Fuse { case: String },
    /// One Yangian-limit check.
    LimitCheck { id: String },
    /// Every acceptance check.
    Suite,
}

fn run(cli: &Cli) -> Result<Vec<Outcome>, JobError> {
    let set = jobs::parse_set(&cli.set)?;
    match &cli.command {
        Command::VerifyYbe { algebra } => Ok(vec![jobs::verify_ybe(algebra)?]),
        Command::DeriveK { case, kind } => Ok(vec![jobs::derive_k(case, kind.as_deref(), &set)?]),
        Command::SolveParams { case } => Ok(vec![jobs::solve_params(case, &set)?]),
        Command::VerifyRe { case, kind } => Ok(vec![jobs::verify_re(case, kind.as_deref(), &set)?]),
        Command::VerifyUnitarity { case } => Ok(vec![jobs::verify_unitarity(case, &set)?]),
        Command::Fuse { case } => Ok(vec![jobs::fuse(case)?]),
        Command::LimitCheck { id } => Ok(vec![jobs::limit_check(id, cli.trunc)?]),
        Command::Suite => jobs::suite(cli.trunc),
    }
}

fn render(outcomes: &[Outcome], format: Format) -> String {
    match format {
        Format::Json => {
            let results: Vec<_> = outcomes.iter().map(Outcome::to_json).collect();
            let envelope = json!({
                "artifact": "reflectq",
                "version": env!("CARGO_PKG_VERSION"),
                "results": results,
            });
            format!("{}\n", serde_json::to_string_pretty(&envelope).expect("serializable"))
        }
        Format::Text => {
            let mut s = String::new();
            for o in outcomes {
                s.push_str(&o.to_text());
            }
            let passed = outcomes.iter().filter(|o| o.pass).count();
            s.push_str(&format!("{passed}/{} passed\n", outcomes.len()));
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcomes) => {
            let report = render(&outcomes, cli.format);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, report) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(3);
                    }
                }
                None => print!("{report}"),
            }
            if outcomes.iter().all(|o| o.pass) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
