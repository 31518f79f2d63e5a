//! `newbasis`: build, export and verify the new bases of `C[M(S_n)]`.

mod render;
mod verify;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use newbasis::exact::set_precision_bits;
use newbasis::symplectic::DEFAULT_MAX_D;

const BASIS_GROUPS: [&str; 5] = ["S1", "S2", "S3", "S4", "S5"];

#[derive(Parser, Debug)]
#[command(
    name = "newbasis",
    version,
    about = "Exact new bases and Fourier matrices for M(S1)..M(S5)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Starting precision of the interval sign test.
    #[arg(long = "precision-bits", global = true)]
    precision_bits: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The five-column basis table.
    Table {
        #[arg(long, value_parser = BASIS_GROUPS)]
        group: String,
    },
    /// The basis elements with their expansions.
    Basis {
        #[arg(long, value_parser = BASIS_GROUPS)]
        group: String,
    },
    /// The Fourier matrix in the standard or the new basis.
    Fourier {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = BasisKind::Standard)]
        basis: BasisKind,
    },
    /// Runs the invariant suite; exits 1 if any check fails.
    Verify {
        /// A group name, `V` for the symplectic checks, or `all`.
        #[arg(long, default_value = "all")]
        group: String,
    },
    /// A primitive `P^k` on `V_D`, optionally transformed.
    Symplectic {
        #[arg(short = 'D', long = "D")]
        d: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Apply the Fourier transform.
        #[arg(long)]
        fourier: bool,
        /// Apply the rotation this many times.
        #[arg(long, default_value_t = 0)]
        iota: usize,
        /// Largest accepted D.
        #[arg(long = "max-D", default_value_t = DEFAULT_MAX_D)]
        max_d: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    Standard,
    New,
}

/// Failure kinds mapped to exit codes.
pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<newbasis::error::Error> for Failure {
    fn from(e: newbasis::error::Error) -> Self {
        use newbasis::error::Error;
        match e {
            Error::Unsupported(_) | Error::UnknownSubgroup { .. } | Error::Parse(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Verification(e.to_string()),
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    if let Some(bits) = cli.precision_bits {
        if bits == 0 {
            return Err(Failure::Usage("--precision-bits must be positive".into()));
        }
        set_precision_bits(bits);
    }
    let f = cli.format;
    Ok(match &cli.command {
        Command::Table { group } => (render::table(group, f)?, true),
        Command::Basis { group } => (render::basis(group, f)?, true),
        Command::Fourier { group, basis } => (render::fourier(group, *basis, f)?, true),
        Command::Verify { group } => {
            let checks = verify::run(group)?;
            let ok = checks.iter().all(|c| c.ok);
            (render::report(&checks, f)?, ok)
        }
        Command::Symplectic {
            d,
            k,
            fourier,
            iota,
            max_d,
        } => {
            if d > max_d {
                return Err(Failure::Usage(format!("D = {d} exceeds --max-D {max_d}")));
            }
            (render::symplectic(*d, *k, *fourier, *iota, f)?, true)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, ok) = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Verification(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
