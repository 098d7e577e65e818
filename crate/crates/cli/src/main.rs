use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ginminors_core::formulas::{gin_2minors, gin_maxminors_col, gin_maxminors_row};
use ginminors_core::generate::{random_instance, Degeneracy, GenerateError};
use ginminors_core::hilbert::{h_phi_series, DEFAULT_CAP};
use ginminors_core::instance::{AnyMatrix, Instance, InstanceError, InstanceFile};
use ginminors_core::oracle::{GinOptions, OracleError};
use ginminors_core::verify::{verify, VerifyError, DEFAULT_VERIFY_CAP};
use ginminors_core::{FieldSpec, FormulaError, GinResult, Grading, OrderKind, PrimeField, Rationals, TermOrder};

mod error;

use error::CliError;

#[derive(Parser)]
#[command(name = "ginminors", version, about = "Multigraded gins of determinantal ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gin and primes of the maximal minors of a row-graded matrix.
    GinMaxRow { file: PathBuf },
    /// Gin and primes of the maximal minors of a column-graded matrix.
    GinMaxCol { file: PathBuf },
    /// Gin and primes of the 2-minors of a row-graded matrix.
    #[command(name = "gin-2minors")]
    Gin2minors { file: PathBuf },
    /// Multigraded Hilbert series of the 2-minor gin, read in the ring with
    /// Φ({i}) variables in block i.
    Hilbert {
        file: PathBuf,
        /// Truncation total degree; defaults to the file's `cap`.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Compare every applicable closed form with the Gröbner oracle.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
        /// Number of independent coordinate changes that must agree.
        #[arg(long, default_value_t = 2)]
        seeds: usize,
        /// Hilbert coefficients are compared up to this total degree.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print a reproducible random instance file.
    Random {
        #[arg(long, value_enum)]
        grading: GradingArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// zero-row:I, zero-col:J, dup-row:I=J, dup-col:I=J or kernel:I=D.
        #[arg(long)]
        degenerate: Vec<Degeneracy>,
        /// `fp` (p = 32003), `fp:P` or `q`.
        #[arg(long, env = "GINMINORS_FIELD", default_value = "fp", value_parser = parse_field)]
        field: FieldSpec,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Degrevlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum GradingArg {
    Row,
    Column,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let lower = s.trim().to_ascii_lowercase();
    match lower.split_once(':') {
        None if lower == "q" => Ok(FieldSpec::Q),
        None if lower == "fp" => Ok(FieldSpec::Fp { p: ginminors_core::linalg::DEFAULT_PRIME }),
        Some(("fp", p)) => {
            let p: u32 = p.parse().map_err(|_| format!("bad prime {p:?}"))?;
            PrimeField::new(p).map(|_| FieldSpec::Fp { p }).ok_or_else(|| format!("{p} is not a prime below 2^31"))
        }
        _ => Err(format!("unknown field {s:?}; use fp, fp:P or q")),
    }
}

/// Runs `$body` with `$l` bound to the matrix over its concrete field.
macro_rules! with_matrix {
    ($m:expr, $l:ident => $body:expr) => {
        match $m {
            AnyMatrix::Fp($l) => $body,
            AnyMatrix::Q($l) => $body,
        }
    };
}

fn load(path: &PathBuf) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::schema(format!("{}: {e}", path.display())))?;
    Instance::from_json(&text).map_err(|e| match e {
        InstanceError::Graded(g) => CliError::precondition(g),
        other => CliError::schema(other),
    })
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("output types always serialize")
}

fn gin_output(r: Result<GinResult, FormulaError>) -> Result<String, CliError> {
    Ok(json(&r.map_err(CliError::precondition)?.to_json()))
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::GinMaxRow { file } => gin_output(with_matrix!(&load(&file)?.matrix, l => gin_maxminors_row(l))),
        Command::GinMaxCol { file } => gin_output(with_matrix!(&load(&file)?.matrix, l => gin_maxminors_col(l))),
        Command::Gin2minors { file } => gin_output(with_matrix!(&load(&file)?.matrix, l => gin_2minors(l))),
        Command::Hilbert { file, cap } => {
            let inst = load(&file)?;
            let cap = cap.or(inst.cap).unwrap_or(DEFAULT_CAP);
            let phi = with_matrix!(&inst.matrix, l => l.phi_from_kernels()).map_err(CliError::precondition)?;
            let series = h_phi_series(&phi, cap).map_err(CliError::precondition)?;
            Ok(json(&series.to_json()))
        }
        Command::Verify { file, order, seeds, cap } => {
            let inst = load(&file)?;
            let kind = match order {
                Some(OrderArg::Lex) => OrderKind::Lex,
                Some(OrderArg::Degrevlex) => OrderKind::DegRevLex,
                None => inst.order.unwrap_or(OrderKind::DegRevLex),
            };
            let base = inst.seed.unwrap_or(1);
            let opts = GinOptions::with_seeds((0..seeds as u64).map(|k| base.wrapping_add(k)).collect());
            let cap = cap.or(inst.cap).unwrap_or(DEFAULT_VERIFY_CAP);
            let report =
                with_matrix!(&inst.matrix, l => verify(l, &TermOrder::new(kind), &opts, cap)).map_err(|e| match e {
                    VerifyError::Oracle(o @ OracleError::Unstable { .. }) => CliError::unstable(o),
                    VerifyError::Oracle(o @ OracleError::TooFewSeeds(_)) => CliError::usage(o),
                    VerifyError::Oracle(o) => CliError::resources(o),
                    other => CliError::precondition(other),
                })?;
            let out = json(&report);
            if report.passed {
                Ok(out)
            } else {
                Err(CliError::mismatch(out))
            }
        }
        Command::Random { grading, m, n, seed, degenerate, field } => {
            let grading = match grading {
                GradingArg::Row => Grading::Row,
                GradingArg::Column => Grading::Column,
            };
            let to_cli = |e: GenerateError| match e {
                GenerateError::BadSpec(_) => CliError::usage(e),
                _ => CliError::precondition(e),
            };
            let mut file = match field {
                FieldSpec::Fp { p } => {
                    let f = PrimeField::new(p).expect("validated while parsing");
                    InstanceFile::from_matrix(&random_instance(&f, grading, m, n, seed, &degenerate).map_err(to_cli)?)
                }
                FieldSpec::Q => InstanceFile::from_matrix(
                    &random_instance(&Rationals, grading, m, n, seed, &degenerate).map_err(to_cli)?,
                ),
            };
            file.seed = Some(seed);
            Ok(file.to_json())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Some(out) = &e.stdout {
                println!("{out}");
            }
            if !e.message.is_empty() {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}
