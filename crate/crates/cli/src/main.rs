//! `ellsurf`: command-line front end.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error or
//! degenerate input, 3 internal inconsistency.

mod commands;
mod text;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ellsurf_core::Error;

#[derive(Parser, Debug)]
#[command(name = "ellsurf", version, about = "Exact computations on the octahedral family of rational elliptic surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Wrap the payload as {"meta": {...}, "data": ...} with version and timestamp.
    #[arg(long, global = true)]
    meta: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CaseArg {
    Generic,
    EZero,
    FZero,
    VZero,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Quaternion,
    Tetrahedral,
    Octahedral,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Singular fibers of one member, from moduli (a:b) or cover parameters (alpha, beta).
    Classify {
        #[arg(long, requires = "b", conflicts_with_all = ["alpha", "beta"])]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
        #[arg(long, requires = "beta")]
        alpha: Option<String>,
        #[arg(long, requires = "alpha")]
        beta: Option<String>,
    },
    /// Symbolic fiber configuration and Shioda-Tate data of a case.
    Fibers {
        #[arg(long, value_enum, default_value_t = CaseArg::Generic)]
        case: CaseArg,
    },
    /// Divisor class, fiber intersections and height of n1 s(e1) + n2 s(e2) + n3 s(e3).
    Section {
        #[arg(long, value_name = "N1,N2,N3", allow_hyphen_values = true)]
        n: String,
    },
    /// Mordell-Weil sum of two section indices with its fiber-span certificate.
    Mw {
        #[arg(long, num_args = 2, value_names = ["A,B,C", "D,E,F"], allow_hyphen_values = true)]
        add: Vec<String>,
    },
    /// Molien series coefficients through the given degree.
    Molien {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, default_value_t = 48)]
        degree: usize,
    },
    /// Signed permutations of V1, V2, V3 under the 24 coset representatives.
    GroupTable,
    /// Runs exact identity suites.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// A section generator evaluated at (alpha, beta) and (S:T).
    EvalSection {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        /// Index pair `12`, `13` or `23`.
        #[arg(long)]
        pair: String,
        /// `+` or `-`.
        #[arg(long, allow_hyphen_values = true, default_value = "+")]
        sign: String,
    },
}

/// What a command hands back for printing.
pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
    /// False when a requested check failed.
    pub ok: bool,
}

impl Output {
    pub fn new<T: Serialize>(payload: &T, text: String) -> Result<Self, CliError> {
        Ok(Output {
            json: serde_json::to_value(payload).map_err(|e| CliError::Internal(e.to_string()))?,
            text,
            ok: true,
        })
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        use Error::*;
        match e {
            DegenerateParameter | ZeroPoint | VertexDegeneration | BadPair(..) | Parse(_)
            | UnknownName(_) | ConfluentCase(_) | NodePoint | CuspPoint | NoSquareRootInK(_)
            | NotNumericalSection { .. } | SingularPointInput | NotOnCurve | ZeroForm => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Meta {
    version: &'static str,
    command: String,
    timestamp: u64,
}

#[derive(Serialize)]
struct Wrapped<'a> {
    meta: Meta,
    data: &'a serde_json::Value,
}

fn dispatch(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Classify { a, b, alpha, beta } => match (a, b, alpha, beta) {
            (Some(a), Some(b), None, None) => commands::classify_ab(a, b),
            (None, None, Some(x), Some(y)) => commands::classify_cover(x, y),
            _ => Err(CliError::Usage("give either --a and --b or --alpha and --beta".into())),
        },
        Command::Fibers { case } => commands::fibers(match case {
            CaseArg::Generic => ellsurf_core::CaseLabel::Generic,
            CaseArg::EZero => ellsurf_core::CaseLabel::EZero,
            CaseArg::FZero => ellsurf_core::CaseLabel::FZero,
            CaseArg::VZero => ellsurf_core::CaseLabel::VZero,
        }),
        Command::Section { n } => commands::section(n),
        Command::Mw { add } => commands::mw(&add[0], &add[1]),
        Command::Molien { group, degree } => commands::molien(
            match group {
                GroupArg::Quaternion => ellsurf_core::Group::Quaternion,
                GroupArg::Tetrahedral => ellsurf_core::Group::Tetrahedral,
                GroupArg::Octahedral => ellsurf_core::Group::Octahedral,
            },
            *degree,
        ),
        Command::GroupTable => commands::group_table(),
        Command::Verify { suite } => commands::verify(suite),
        Command::EvalSection { alpha, beta, s, t, pair, sign } => {
            commands::eval_section(alpha, beta, s, t, pair, sign)
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Classify { .. } => "classify",
        Command::Fibers { .. } => "fibers",
        Command::Section { .. } => "section",
        Command::Mw { .. } => "mw",
        Command::Molien { .. } => "molien",
        Command::GroupTable => "group-table",
        Command::Verify { .. } => "verify",
        Command::EvalSection { .. } => "eval-section",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(CliError::Internal(m)) => {
            eprintln!("internal error: {m}");
            return ExitCode::from(3);
        }
    };
    let mut stdout = std::io::stdout().lock();
    // a closed pipe downstream is not an error of ours
    match cli.format {
        Format::Text => {
            let _ = stdout.write_all(out.text.as_bytes());
        }
        Format::Json => {
            let rendered = if cli.meta {
                let timestamp = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0);
                let w = Wrapped {
                    meta: Meta {
                        version: env!("CARGO_PKG_VERSION"),
                        command: command_name(&cli.command).into(),
                        timestamp,
                    },
                    data: &out.json,
                };
                serde_json::to_string_pretty(&w)
            } else {
                serde_json::to_string_pretty(&out.json)
            };
            match rendered {
                Ok(s) => {
                    let _ = writeln!(stdout, "{s}");
                }
                Err(e) => {
                    eprintln!("internal error: {e}");
                    return ExitCode::from(3);
                }
            }
        }
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
