use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use npn_cli::commands;
use npn_cli::{CliError, Result};
use npn_core::SignatureSelection;

/// Signature-based NPN classification of Boolean functions.
#[derive(Parser)]
#[command(name = "npnsig", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the signature vectors of one truth table.
    Sigs {
        #[arg(long = "n")]
        n: usize,
        /// Truth table in hex, most significant digit first.
        #[arg(long)]
        tt: String,
        /// `all` or a comma list of ocv1, ocv2, oiv, osv, osdv.
        #[arg(long, default_value = "all")]
        sigs: String,
    },
    /// Classify a corpus and write per-function class records.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long, default_value = "all")]
        sigs: String,
        #[arg(long)]
        output: PathBuf,
    },
    /// Compare signature classes against the exact oracle (n <= 6).
    Compare {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long, default_value = "all")]
        sigs: String,
    },
    /// Generate a seeded random corpus.
    Gen {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit consecutive integer encodings starting at the seed.
        #[arg(long)]
        consecutive: bool,
        #[arg(long)]
        output: PathBuf,
    },
    /// Time classification of random corpora of increasing size.
    Bench {
        #[arg(long = "n")]
        n: usize,
        /// Comma-separated, strictly ascending corpus sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "all")]
        sigs: String,
    },
}

fn selection(s: &str) -> Result<SignatureSelection> {
    Ok(s.parse()?)
}

fn run(cli: Cli) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Sigs { n, tt, sigs } => commands::sigs(&mut out, n, &tt, selection(&sigs)?),
        Command::Classify {
            input,
            n,
            sigs,
            output,
        } => {
            let summary = commands::classify_file(&input, n, selection(&sigs)?, &output)?;
            let json = serde_json::to_string(&summary).expect("summary serializes");
            writeln!(out, "{json}").map_err(|e| CliError::Io {
                path: "<stdout>".into(),
                source: e,
            })
        }
        Command::Compare { input, n, sigs } => {
            commands::compare_file(&mut out, &input, n, selection(&sigs)?).map(|_| ())
        }
        Command::Gen {
            n,
            count,
            seed,
            consecutive,
            output,
        } => commands::gen_file(&output, n, count, seed, consecutive),
        Command::Bench {
            n,
            sizes,
            seed,
            sigs,
        } => {
            let rows = commands::bench(n, &sizes, seed, selection(&sigs)?)?;
            commands::print_bench(&mut out, &rows)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("npnsig: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
