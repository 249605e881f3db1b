//! `solvgenus`: Heegaard genus and splittings of Anosov torus bundles.
//!
//! Data goes to stdout as JSON (or text for `classify --text`),
//! diagnostics to stderr. Exit codes: 0 success, 2 parse error, 3 domain
//! error, 4 failed re-verification of a printed witness.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use solvgenus::conjugacy::Group;

use commands::{parse_integer, parse_matrix, Failure, Outcome};
use report::ReportDocument;

#[derive(Parser)]
#[command(name = "solvgenus", version, about = "Heegaard genus and splittings of Anosov torus bundles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sl,
    Gl,
}

#[derive(Subcommand)]
enum Command {
    /// Genus, splitting count and witnesses for a monodromy "a,b;c,d".
    Classify {
        #[arg(short = 'm', long = "matrix", allow_hyphen_values = true)]
        matrix: String,
        /// JSON report (default).
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Human-readable summary.
        #[arg(long)]
        text: bool,
    },
    /// Decide conjugacy of two Anosov matrices, with a conjugator.
    Conjugate {
        #[arg(short = 'A', allow_hyphen_values = true)]
        a: String,
        #[arg(short = 'B', allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value = "sl")]
        group: GroupArg,
    },
    /// One representative per SL(2,Z) conjugacy class of trace T.
    Classes {
        #[arg(short = 't', long = "trace", allow_hyphen_values = true)]
        trace: String,
    },
    /// Centralizer of a standard form [[m,-1],[1,0]].
    Centralizer {
        #[arg(short = 'm', long = "matrix", allow_hyphen_values = true)]
        matrix: String,
    },
    /// Virtual conjugacy with an explicit intertwiner P A = B P.
    Commensurable {
        #[arg(short = 'A', allow_hyphen_values = true)]
        a: String,
        #[arg(short = 'B', allow_hyphen_values = true)]
        b: String,
    },
    /// Axis, translation length and cone-point incidence.
    Geodesic {
        #[arg(short = 'm', long = "matrix", allow_hyphen_values = true)]
        matrix: String,
    },
    /// SVG drawing of the axis of [[m,-1],[1,0]] over the modular tiling.
    Figure {
        #[arg(short = 'm', long = "m", allow_hyphen_values = true)]
        m: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// TOML palette overriding the bundled colours.
        #[arg(long)]
        palette: Option<PathBuf>,
    },
}

enum Emit {
    Json(ReportDocument),
    Text(ReportDocument, String),
}

fn run(cli: Cli) -> Outcome<Emit> {
    Ok(match cli.command {
        Command::Classify { matrix, text, .. } => {
            let l = parse_matrix(&matrix)?;
            let (doc, report) = commands::classify_report(&l)?;
            if text {
                let summary = commands::classify_text(&report);
                Emit::Text(doc, summary)
            } else {
                Emit::Json(doc)
            }
        }
        Command::Conjugate { a, b, group } => {
            let group = match group {
                GroupArg::Sl => Group::Sl,
                GroupArg::Gl => Group::Gl,
            };
            Emit::Json(commands::conjugate(&parse_matrix(&a)?, &parse_matrix(&b)?, group)?)
        }
        Command::Classes { trace } => Emit::Json(commands::classes(&parse_integer(&trace)?)?),
        Command::Centralizer { matrix } => Emit::Json(commands::centralizer(&parse_matrix(&matrix)?)?),
        Command::Commensurable { a, b } => {
            Emit::Json(commands::commensurable(&parse_matrix(&a)?, &parse_matrix(&b)?)?)
        }
        Command::Geodesic { matrix } => Emit::Json(commands::geodesic(&parse_matrix(&matrix)?)?),
        Command::Figure { m, output, palette } => {
            Emit::Json(commands::figure(&parse_integer(&m)?, &output, palette.as_deref())?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emit = match run(cli) {
        Ok(e) => e,
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let (doc, text) = match emit {
        Emit::Json(doc) => (doc, None),
        Emit::Text(doc, text) => (doc, Some(text)),
    };
    let failed = doc.failed();
    if !failed.is_empty() {
        eprintln!("error: verification failed: {}", failed.join("; "));
        return ExitCode::from(4);
    }
    let body = match text {
        Some(t) => t,
        None => serde_json::to_string_pretty(&doc).expect("document serializes") + "\n",
    };
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    ExitCode::SUCCESS
}
