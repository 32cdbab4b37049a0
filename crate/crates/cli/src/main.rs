//! `hurwitz`: admissibility checks, certificate construction and verification, table
//! replay and census from the command line.
//!
//! Exit codes: 0 success, 1 verification failure or internal defect, 2 inadmissible or
//! out of scope, 3 malformed input.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hurwitz_core::datum::{BranchDatum, Surface};
use hurwitz_core::oracle::{census_batch, census_data, verify_appendix_table, CensusClass};
use hurwitz_core::realize::{admissible, realize, verify_certificate, Admissibility, HurwitzCertificate, Verdict};
use hurwitz_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Branch data and Hurwitz certificates for odd-degree coverings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Defect, Euler characteristic of the cover and the admissibility verdict.
    Admissible {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "rp2")]
        base: Surface,
        /// Partitions joined by `;`, e.g. "[3,2];[3,2]".
        #[arg(long)]
        datum: String,
    },
    /// Builds a certificate, checks it independently, and prints or writes it.
    Realize {
        #[arg(long)]
        base: Surface,
        #[arg(long)]
        datum: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks a certificate file.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Replays the built-in table of small realizations.
    CheckTable,
    /// Realizes and verifies every datum with up to `max-s` branch points.
    Census {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 2)]
        max_s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the first N data of the enumeration (to resume an interrupted run).
        #[arg(long, default_value_t = 0)]
        start: usize,
        /// Data per batch between progress reports.
        #[arg(long, default_value_t = 1000)]
        chunk: usize,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Format(_) | Error::Perm(_) => 3,
        Error::Inadmissible(_)
        | Error::EvenDegree(_)
        | Error::TrivialPartition
        | Error::OnlyDecomposable(_)
        | Error::CapExceeded { .. }
        | Error::Precondition(_) => 2,
        Error::Group(_) | Error::SearchExhausted(_) | Error::Internal(_) => 1,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(&e))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Admissible { degree, base, datum } => cmd_admissible(degree, base, &datum),
        Command::Realize { base, datum, seed, out } => cmd_realize(base, &datum, seed, out),
        Command::Verify { certificate } => cmd_verify(&certificate),
        Command::CheckTable => cmd_check_table(),
        Command::Census { degree, max_s, seed, start, chunk } => cmd_census(degree, max_s, seed, start, chunk),
    };
    result.unwrap_or_else(fail)
}

fn cmd_admissible(degree: usize, base: Surface, literal: &str) -> Result<ExitCode, Error> {
    let datum = BranchDatum::parse(base, literal)?;
    if datum.degree() != degree {
        return Err(Error::Format(format!("datum has degree {}, not {degree}", datum.degree())));
    }
    if degree.is_multiple_of(2) {
        return Err(Error::EvenDegree(degree));
    }
    let report = admissible(&datum);
    println!("{report}");
    Ok(match report.verdict {
        Admissibility::Admissible { .. } => ExitCode::SUCCESS,
        Admissibility::Rejected(_) => ExitCode::from(2),
    })
}

fn cmd_realize(base: Surface, literal: &str, seed: u64, out: Option<PathBuf>) -> Result<ExitCode, Error> {
    let datum = BranchDatum::parse(base, literal)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cert = realize(&datum, &mut rng)?;
    // re-read the text we are about to emit so the check covers the serialized form
    let text = cert.to_text();
    let report = verify_certificate(&HurwitzCertificate::parse(&text)?);
    if report.verdict != Verdict::ValidIndecomposable {
        eprintln!("{report}");
        return Err(Error::Internal(format!("certificate failed verification: {}", report.verdict)));
    }
    match out {
        Some(path) => {
            fs::write(&path, &text).map_err(|e| Error::Internal(format!("{}: {e}", path.display())))?;
            eprintln!("wrote {} ({})", path.display(), report.verdict);
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(path: &PathBuf) -> Result<ExitCode, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    let cert = HurwitzCertificate::parse(&text)?;
    let report = verify_certificate(&cert);
    println!("{report}");
    Ok(if report.verdict == Verdict::ValidIndecomposable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_check_table() -> Result<ExitCode, Error> {
    let report = verify_appendix_table()?;
    for row in &report.rows {
        println!(
            "row {}\tdegree {}\tproduct {}\ttransitive {}\tprimitive {}",
            row.index, row.degree, row.product, row.transitive, row.primitive
        );
    }
    let passed = report.rows.iter().filter(|r| r.transitive && r.primitive).count();
    println!("{passed}/{} pass", report.rows.len());
    Ok(if passed == report.rows.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_census(degree: usize, max_s: usize, seed: u64, start: usize, chunk: usize) -> Result<ExitCode, Error> {
    let data = census_data(degree, max_s)?;
    let total = data.len();
    let mut failed = 0;
    let mut stdout = io::stdout().lock();
    let mut done = start.min(total);
    for batch in data[done..].chunks(chunk.max(1)) {
        for line in census_batch(batch, seed) {
            if matches!(line.class, CensusClass::Failed(_)) {
                failed += 1;
            }
            writeln!(stdout, "{line}").map_err(|e| Error::Internal(e.to_string()))?;
        }
        stdout.flush().map_err(|e| Error::Internal(e.to_string()))?;
        done += batch.len();
        eprintln!("census: {done}/{total}");
    }
    eprintln!("census: {failed} failed");
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
