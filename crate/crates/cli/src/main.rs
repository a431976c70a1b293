use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use structmv_cli::commands::{self, BenchRequest, CountRequest, GenRequest, Method};
use structmv_cli::files::{MatrixFile, VectorFile};
use structmv_cli::CliError;

/// Structured matrix-vector products with minimal multiplication counts.
#[derive(Parser)]
#[command(name = "structmv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random instance (or, with `--structure vector`, a random vector).
    Gen {
        #[arg(long)]
        structure: String,
        #[arg(long)]
        n: Option<usize>,
        /// Level list for multilevel instances, e.g. `circulant:2,toeplitz:3`.
        #[arg(long)]
        levels: Option<String>,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long)]
        output: Option<String>,
    },
    /// Multiply a matrix file by a vector file.
    Apply {
        matrix: String,
        vector: String,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        #[arg(short = 'o', long)]
        output: Option<String>,
    },
    /// Check both routes against the dense product.
    Verify {
        matrix: String,
        /// Vector file; a seeded random vector is used when omitted.
        vector: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Tabulate theoretical against measured multiplication counts.
    Count {
        #[arg(long)]
        structure: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        levels: Option<String>,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the structured routes against the dense product and write CSV.
    Bench {
        #[arg(long)]
        structure: String,
        #[arg(long, default_value_t = 1024)]
        n_max: usize,
        #[arg(long)]
        levels: Option<String>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; `-` writes to stdout.
        #[arg(long)]
        csv: String,
    },
}

fn emit(output: Option<&str>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => commands::write_text(path, text),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("stdout", e)),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen {
            structure,
            n,
            levels,
            density,
            seed,
            output,
        } => {
            let text = commands::gen(&GenRequest {
                structure,
                n,
                levels,
                density,
                seed,
            })?;
            emit(output.as_deref(), &text)?;
        }
        Command::Apply {
            matrix,
            vector,
            method,
            output,
        } => {
            let m = MatrixFile::parse(&commands::read_text(&matrix)?)?;
            let v = VectorFile::parse(&commands::read_text(&vector)?)?;
            let (z, mults) = commands::apply(&m, &v, method)?;
            emit(output.as_deref(), &VectorFile::render(&z))?;
            eprintln!("multiplications: {mults}");
        }
        Command::Verify {
            matrix,
            vector,
            seed,
            tol,
        } => {
            let m = MatrixFile::parse(&commands::read_text(&matrix)?)?;
            let v = match vector {
                Some(path) => VectorFile::parse(&commands::read_text(&path)?)?,
                None => commands::random_vector(&m, seed),
            };
            let report = commands::verify(&m, &v, tol)?;
            println!("{report}");
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Count {
            structure,
            n,
            n_max,
            levels,
            density,
            seed,
        } => {
            let rows = commands::count(&CountRequest {
                structure,
                n_min: n,
                n_max,
                levels,
                density,
                seed,
            })?;
            print!("{}", commands::render_count_table(&rows));
            return Ok(if rows.iter().all(|r| r.matches) { 0 } else { 1 });
        }
        Command::Bench {
            structure,
            n_max,
            levels,
            reps,
            density,
            seed,
            csv,
        } => {
            let rows = commands::bench(&BenchRequest {
                structure,
                n_max,
                levels,
                reps,
                density,
                seed,
            })?;
            if csv == "-" {
                commands::write_bench_csv(&rows, std::io::stdout().lock())?;
            } else {
                let file = std::fs::File::create(&csv).map_err(|e| CliError::io(&csv, e))?;
                commands::write_bench_csv(&rows, file)?;
            }
        }
    }
    Ok(0)
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
