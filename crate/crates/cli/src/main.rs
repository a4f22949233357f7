//! `hopfcalc`: Drinfeld doubles, modular data and centralizer checks from the command line.

mod commands;
mod select;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Outcome, Status};

#[derive(Parser)]
#[command(name = "hopfcalc", version, about = "Exact Drinfeld doubles and Müger centralizers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Clone)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Upper bound for conductor escalation (sets HOPF_MAX_CONDUCTOR).
    #[arg(long, global = true)]
    max_conductor: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms of a fixture.
    Axioms {
        /// Fixture path (`fixtures/kS3` or `fixtures/kS3.hopf.json`).
        fixture: Option<PathBuf>,
        #[arg(long = "A")]
        a: Option<PathBuf>,
        /// Also check the axioms of the Drinfeld double.
        #[arg(long)]
        double: bool,
    },
    /// Irreducible characters of A (or of A* with --dual).
    Irr {
        #[arg(long = "A")]
        a: PathBuf,
        #[arg(long)]
        dual: bool,
    },
    /// Build D(A) and report its structural checks and modular data.
    Double {
        #[arg(long = "A")]
        a: PathBuf,
    },
    /// The S-matrix of D(A).
    Smatrix {
        #[arg(long = "A")]
        a: PathBuf,
    },
    /// Müger centralizer of D(K) for K ⊆ A, or of the subcategory generated by simples.
    Centralizer {
        #[arg(long = "A")]
        a: PathBuf,
        #[arg(long = "K", conflicts_with = "simples")]
        k: Option<String>,
        /// Comma separated simple indices of D(A).
        #[arg(long)]
        simples: Option<String>,
    },
    /// Hopf and left kernels of a module, with the Brauer closure check.
    Kernels {
        #[arg(long = "A")]
        a: PathBuf,
        /// `simple:<j>`, `regular`, `adjoint:<selector>` or `coideal:<selector>`.
        #[arg(long)]
        module: String,
        /// Work over D(A) instead of A (implied by `coideal:`).
        #[arg(long)]
        double: bool,
    },
    /// Fusion subcategories with FPdim and De Morgan checks.
    Lattice {
        #[arg(long = "A")]
        a: PathBuf,
        /// Enumerate Rep(A) instead of Rep(D(A)).
        #[arg(long)]
        base: bool,
        /// Also realize each subcategory as a normal left coideal subalgebra and check the lattice identities.
        #[arg(long)]
        coideals: bool,
    },
    /// Verify a theorem: thm1.1, thm1.2, thm4.8, cor4.10, grouplike4.14, cor5.5,
    /// prop5.3, prop5.6, cor5.9, thm5.10, eq2.5, eq2.6, double_centralizer.
    Check {
        theorem: String,
        #[arg(long = "A")]
        a: PathBuf,
        #[arg(long = "K")]
        k: Option<String>,
        #[arg(long = "L")]
        l: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.global.json { Format::Json } else { cli.global.format };
    if let Some(bound) = cli.global.max_conductor {
        std::env::set_var("HOPF_MAX_CONDUCTOR", bound.to_string());
    }
    let result = match cli.command {
        Command::Axioms { fixture, a, double } => match fixture.or(a) {
            Some(path) => commands::axioms(&path, double),
            None => Err(hopfcalc::Error::parse("arguments", "a fixture path is required")),
        },
        Command::Irr { a, dual } => commands::irr(&a, dual),
        Command::Double { a } => commands::double(&a),
        Command::Smatrix { a } => commands::smatrix(&a),
        Command::Centralizer { a, k, simples } => commands::centralizer(&a, k.as_deref(), simples.as_deref()),
        Command::Kernels { a, module, double } => commands::kernels(&a, &module, double),
        Command::Lattice { a, base, coideals } => commands::lattice(&a, base, coideals),
        Command::Check { theorem, a, k, l } => commands::check(&theorem, &a, k.as_deref(), l.as_deref()),
    };
    match result {
        Ok(outcome) => emit(&outcome, format),
        Err(e) => {
            let code = commands::error_status(&e);
            if format == Format::Json {
                let diag = serde_json::json!({ "error": commands::error_kind(&e), "message": e.to_string() });
                println!("{}", serde_json::to_string_pretty(&diag).expect("diagnostic serializes"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code.code())
        }
    }
}

fn emit(outcome: &Outcome, format: Format) -> ExitCode {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&outcome.json).expect("report serializes")),
        Format::Csv => match &outcome.csv {
            Some(csv) => print!("{csv}"),
            None => {
                eprintln!("error: this command has no CSV form; use --format json or text");
                return ExitCode::from(Status::Input.code());
            }
        },
        Format::Text => print!("{}", outcome.text),
    }
    ExitCode::from(outcome.status.code())
}
