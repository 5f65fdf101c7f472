//! Command-line surface: reduce diagram words, generate relations, compute
//! quotient presentations, and run the named verification suites.
//!
//! Exit codes: 0 success, 1 parse/validation/verification failure, 2
//! resource guard (crossing or registry limits).

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use skein::bracket::{BracketError, CrossingOrder, Reducer};
use skein::presentation::{presentation, Preset, PresentError, RingKind};
use skein::ring::LaurentPoly;
use skein::sliding::SlideError;
use skein::surface::DiagramWord;
use skein::verify;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "skein",
    version,
    about = "Kauffman bracket skein calculator for thickened punctured disks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a diagram word file to the multicurve basis
    Bracket {
        /// Path to a diagram word file
        file: PathBuf,
    },
    /// Print the registry and its handle-sliding relations
    Relations {
        #[command(flatten)]
        job: Job,
    },
    /// Print relations and the surviving basis after elimination
    Quotient {
        #[command(flatten)]
        job: Job,
    },
    /// Run a named verification suite
    Verify {
        /// Suite name: framing, coeff-k, thm71, tensor, s1xs2, ucp,
        /// confluence, or oracle
        name: String,
        /// Seed for the randomized checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct Job {
    /// Surgery preset
    #[arg(long, value_enum)]
    preset: PresetArg,
    /// Punctures left of the wall (connsum only)
    #[arg(long, default_value_t = 1)]
    n: u32,
    /// Punctures right of the wall (connsum only)
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Grading cutoff for the generator registry
    #[arg(long = "K")]
    k: u32,
    /// Coefficient ring for the report
    #[arg(long, value_enum, default_value_t = RingArg::ZA)]
    ring: RingArg,
    /// Write the report to a file instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PresetArg {
    /// Boundary connected sum of two handlebodies
    Connsum,
    /// Double of the solid torus
    S1xs2,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    /// Integer Laurent polynomials Z[A, A^-1]
    #[value(name = "ZA")]
    ZA,
    /// Rational functions Q(A)
    #[value(name = "QA")]
    QA,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{}", e);
            std::process::exit(0);
        }
        Err(e) => {
            eprint!("{}", e);
            std::process::exit(1);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Bracket { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {}", file.display(), e);
                    return 1;
                }
            };
            let word = match DiagramWord::parse(&text) {
                Ok(w) => w,
                Err(e) => {
                    eprintln!("error: {}", e);
                    return 1;
                }
            };
            match Reducer::<LaurentPoly>::new(CrossingOrder::First).reduce(&word) {
                Ok(v) => {
                    println!("{}", v);
                    0
                }
                Err(e @ BracketError::TooManyCrossings { .. }) => {
                    eprintln!("error: {}", e);
                    2
                }
            }
        }
        Command::Relations { job } => run_report(job, false),
        Command::Quotient { job } => run_report(job, true),
        Command::Verify { name, seed } => match verify::run_suite(&name, seed) {
            None => {
                eprintln!(
                    "error: unknown suite '{}'; expected one of: {}",
                    name,
                    verify::SUITES.join(", ")
                );
                1
            }
            Some(report) => {
                print!("{}", report.render());
                if report.passed() {
                    0
                } else {
                    1
                }
            }
        },
    }
}

fn run_report(job: Job, quotient: bool) -> i32 {
    let preset = match job.preset {
        PresetArg::Connsum => {
            if job.n + job.m == 0 {
                eprintln!("error: connsum needs at least one puncture");
                return 1;
            }
            Preset::ConnSum { n: job.n, m: job.m }
        }
        PresetArg::S1xs2 => Preset::S1xS2,
    };
    let q = match presentation(preset, job.k) {
        Ok(q) => q,
        Err(e) => {
            eprintln!("error: {}", e);
            return guard_code(&e);
        }
    };
    let ring = match job.ring {
        RingArg::ZA => RingKind::ZA,
        RingArg::QA => RingKind::QA,
    };
    let report = if quotient { q.report_quotient(ring) } else { q.report_relations(ring) };
    match job.output {
        Some(path) => match std::fs::write(&path, &report) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                1
            }
        },
        None => {
            print!("{}", report);
            0
        }
    }
}

fn guard_code(e: &PresentError) -> i32 {
    match e {
        PresentError::RegistryTooLarge { .. } => 2,
        PresentError::Slide(SlideError::Bracket(BracketError::TooManyCrossings { .. })) => 2,
        _ => 1,
    }
}
