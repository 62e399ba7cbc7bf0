use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use zdring::brute::BruteLimits;
use zdring::graph::{build_graph, ExportFormat};
use zdring::report::{analyze, AnalyzeOptions};
use zdring::sweep::{self, SweepSummary};
use zdring::{build_witness, factorize, verify_clique, CliqueCheck, Error};

const EXIT_USAGE: u8 = 2;
const EXIT_DISCREPANCY: u8 = 3;

/// Clique number, witnesses and chromatic invariants of the zero-divisor graph G(Z_n)
#[derive(Parser, Debug)]
#[command(name = "zdring", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report the invariants of G(Z_n) for one n
    Analyze {
        n: u64,
        /// Emit the report as JSON
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit a human-readable report (default)
        #[arg(long)]
        text: bool,
        /// Recompute omega and delta with the divisor-class oracle
        #[arg(long)]
        exact: bool,
        /// Also run the element-level oracle (small n only)
        #[arg(long)]
        brute: bool,
        /// Largest n for the brute clique search
        #[arg(long, default_value_t = 500)]
        clique_limit: u64,
        /// Largest n for the brute vertex chromatic number
        #[arg(long, default_value_t = 100)]
        chi_limit: u64,
        /// Largest n for the brute edge chromatic number
        #[arg(long, default_value_t = 40)]
        chi1_limit: u64,
    },
    /// Check the formula against the oracles for every n in a range
    Verify {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Run the element-level clique search for n up to this value
        #[arg(long, default_value_t = 0)]
        brute_max: u64,
        /// CSV output path (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: $ZDRING_WORKERS, then all cores)
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Print the constructed maximum clique
    Witness {
        n: u64,
        /// Verify the witness and set the exit code accordingly
        #[arg(long)]
        check: bool,
    },
    /// Export the graph as an edge list or DOT
    Export {
        n: u64,
        #[arg(long, default_value = "edge-list")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave isolated vertices out of DOT output
        #[arg(long)]
        skip_isolated: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("zdring: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn discrepancy_code(found: bool) -> ExitCode {
    if found {
        ExitCode::from(EXIT_DISCREPANCY)
    } else {
        ExitCode::SUCCESS
    }
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => {
            Box::new(BufWriter::new(File::create(p).map_err(|e| {
                Error::Usage(format!("cannot write {}: {e}", p.display()))
            })?))
        }
        None => Box::new(io::stdout().lock()),
    })
}

/// Prints a line to stdout; a closed pipe is not an error.
fn emit(line: &str) -> Result<(), Error> {
    match writeln!(io::stdout().lock(), "{line}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(io_error(e)),
        _ => Ok(()),
    }
}

fn io_error(e: io::Error) -> Error {
    Error::Usage(format!("write failed: {e}"))
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze {
            n,
            json,
            text: _,
            exact,
            brute,
            clique_limit,
            chi_limit,
            chi1_limit,
        } => {
            let options = AnalyzeOptions {
                exact,
                brute: brute.then_some(BruteLimits {
                    clique: clique_limit,
                    chi: chi_limit,
                    chi1: chi1_limit,
                }),
            };
            let report = analyze(n, &options)?;
            if json {
                emit(&serde_json::to_string_pretty(&report).expect("report serializes"))?;
            } else {
                emit(&report.to_string())?;
            }
            Ok(discrepancy_code(report.has_discrepancy()))
        }
        Command::Verify {
            from,
            to,
            brute_max,
            out,
            workers,
        } => {
            let workers = sweep::resolve_workers(workers)?;
            // open the output first so a bad path fails before the sweep
            let writer = open_output(out.as_ref())?;
            let rows = sweep::run(from, to, brute_max, workers)?;
            sweep::write_csv(&rows, writer).map_err(io_error)?;
            let summary = SweepSummary::from_rows(&rows);
            eprintln!("{summary}");
            Ok(discrepancy_code(!summary.passed()))
        }
        Command::Witness { n, check } => {
            let w = build_witness(&factorize(n)?)?;
            let listed = w
                .elements
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            emit(&format!("{{{listed}}}"))?;
            if !check {
                return Ok(ExitCode::SUCCESS);
            }
            match verify_clique(n, &w.elements) {
                CliqueCheck::Valid => {
                    emit(&format!("valid clique of size {}", w.elements.len()))?;
                    Ok(ExitCode::SUCCESS)
                }
                failure => {
                    emit(&format!("invalid: {failure:?}"))?;
                    Ok(ExitCode::from(EXIT_DISCREPANCY))
                }
            }
        }
        Command::Export {
            n,
            format,
            out,
            skip_isolated,
        } => {
            let format: ExportFormat = format.parse()?;
            let text = build_graph(n)?.export(format, skip_isolated);
            let mut writer = open_output(out.as_ref())?;
            match writer
                .write_all(text.as_bytes())
                .and_then(|_| writer.flush())
            {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(io_error(e)),
                _ => Ok(ExitCode::SUCCESS),
            }
        }
    }
}
