use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sr_locus::{Method, OracleParams};
use sr_locus_cli::{parse_face, run, CliError, Options, ProblemSpec, Task};

/// Non-finitely-generated locus of the Frobenius algebra of a
/// Stanley-Reisner ring.
#[derive(Parser)]
#[command(name = "sr-locus", version)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    /// Problem file for the default `locus` command; stdin when absent or `-`.
    input: Option<PathBuf>,
    #[command(flatten)]
    flags: Flags,
}

#[derive(clap::Args, Clone)]
struct Flags {
    #[arg(long, global = true, value_enum, default_value = "both")]
    method: MethodArg,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Characteristic for the oracle: 2, 3 or 5.
    #[arg(long = "char", global = true, default_value_t = 2)]
    p: u32,
    /// Largest Frobenius degree checked by the oracle.
    #[arg(long, global = true, default_value_t = 3)]
    emax: u32,
    /// Generation bound tested by the oracle.
    #[arg(long, global = true, default_value_t = 1)]
    k: u32,
    /// Test every face instead of skipping those above a finitely generated one.
    #[arg(long, global = true)]
    no_prune: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the locus and J.
    Locus { input: Option<PathBuf> },
    /// Run the criterion on one face.
    Check {
        /// 1-based vertices, e.g. "1 3"; "" is the empty face.
        #[arg(long, allow_hyphen_values = true)]
        face: String,
        input: Option<PathBuf>,
    },
    /// Show the link of a face.
    Link {
        #[arg(long, allow_hyphen_values = true)]
        face: String,
        input: Option<PathBuf>,
    },
    /// Compare K_e and L_e in small degrees.
    Oracle { input: Option<PathBuf> },
    /// Nearly complete intersection shortcut.
    Nci { input: Option<PathBuf> },
}

#[derive(ValueEnum, Clone, Copy)]
enum MethodArg {
    Algebraic,
    Combinatorial,
    Both,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io {
                    path: "stdin".into(),
                    source,
                })?;
            Ok(text)
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    let flags = cli.flags;
    let (input, face) = match &cli.command {
        None => (cli.input.as_ref(), None),
        Some(Command::Locus { input } | Command::Oracle { input } | Command::Nci { input }) => {
            (input.as_ref(), None)
        }
        Some(Command::Check { face, input } | Command::Link { face, input }) => {
            (input.as_ref(), Some(face.as_str()))
        }
    };
    let problem = ProblemSpec::parse(&read_input(input)?)?;
    let n = problem.ring.nvars();
    let task = match &cli.command {
        None | Some(Command::Locus { .. }) => Task::Locus,
        Some(Command::Check { .. }) => Task::Check(parse_face(face.unwrap_or(""), n)?),
        Some(Command::Link { .. }) => Task::Link(parse_face(face.unwrap_or(""), n)?),
        Some(Command::Oracle { .. }) => Task::Oracle,
        Some(Command::Nci { .. }) => Task::Nci,
    };
    let opts = Options {
        method: match flags.method {
            MethodArg::Algebraic => Method::Algebraic,
            MethodArg::Combinatorial => Method::Combinatorial,
            MethodArg::Both => Method::Both,
        },
        prune: !flags.no_prune,
        oracle: OracleParams::new(flags.p, flags.emax, flags.k)?,
    };
    let report = run(&problem, task, &opts)?;
    let text = match flags.format {
        Format::Text => report.to_string(),
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
    };
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io {
            path: "stdout".into(),
            source: e,
        }),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors are input errors; 2 is reserved for disagreement.
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
