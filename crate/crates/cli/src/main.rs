use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, ValueEnum};
use symquot_cli::{parse_requests, run, Overrides, EXIT_OK, EXIT_SCHEMA};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Machine,
}

/// Hilbert series, largeness and Gorenstein analysis of torus and SL2
/// symplectic quotients.
#[derive(Debug, Parser)]
#[command(name = "analyze", version)]
struct Args {
    /// Request file: a JSON object, a JSON array, or one object per line.
    file: PathBuf,
    /// Truncation degree for every request.
    #[arg(long)]
    degree: Option<usize>,
    /// Denominator exponents, e.g. 2,2,3,6.
    #[arg(long, value_delimiter = ',')]
    denominator: Option<Vec<usize>>,
    /// Cross-check against brute-force enumeration.
    #[arg(long)]
    oracle: bool,
    /// Seed for the sampled Jacobian probe.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_SCHEMA as u8)
        }
    }
}

fn real_main() -> anyhow::Result<i32> {
    let args = Args::parse();
    if let Some(den) = &args.denominator {
        anyhow::ensure!(den.iter().all(|&e| e >= 1), "denominator exponents must be positive");
    }
    let text = std::fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let mut requests = match parse_requests(&text) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", args.file.display());
            return Ok(EXIT_SCHEMA);
        }
    };
    let overrides = Overrides {
        degree: args.degree,
        denominators: args.denominator.clone(),
        oracle: args.oracle,
        seed: args.seed,
    };
    let mut code = EXIT_OK;
    for (i, req) in requests.iter_mut().enumerate() {
        overrides.apply(req);
        let start = Instant::now();
        let result = run(req);
        eprintln!("timing: request {}: {:.3} s", i + 1, start.elapsed().as_secs_f64());
        let this = match result {
            Ok(report) => {
                match args.format {
                    Format::Machine => println!("{}", report.to_machine()),
                    Format::Text => print!("{}", report.to_text()),
                }
                report.exit_code()
            }
            Err(e) => {
                eprintln!("error: request {}: {e}", i + 1);
                e.exit_code()
            }
        };
        if code == EXIT_OK {
            code = this;
        }
    }
    Ok(code)
}
