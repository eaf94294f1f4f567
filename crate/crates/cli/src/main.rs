use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use skewrs::config::{load_bundle, CodeSpec};
use skewrs::harness::examples;
use skewrs::AnyCode;

/// Skew Reed-Solomon codes from the command line.
#[derive(Parser, Debug)]
#[command(name = "skewrs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code from a configuration file and write its bundle.
    Build {
        #[arg(long)]
        config: PathBuf,
        /// Bundle path; defaults to the configuration path with a `.bundle` extension.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode a message polynomial read from `--in`.
    Encode(Io),
    /// Decode a received polynomial read from `--in` and write the report.
    Decode(Io),
    /// Seeded noisy-channel simulation.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Error weights, e.g. `0-2` or `1,2`; defaults to 0 through t.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a worked example (1, 2 or 3) and compare every intermediate value.
    #[command(name = "paper-example")]
    Example {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive minimum distance and decoder checks on a small finite-field code.
    Oracle {
        #[arg(long)]
        config: PathBuf,
        /// Largest number of vectors to enumerate.
        #[arg(long, default_value_t = 1 << 24)]
        budget: u128,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Io {
    /// Configuration or bundle file.
    #[arg(long)]
    config: PathBuf,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Verification(_) => ExitCode::from(1),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AnyCode, Failure> {
    load_bundle(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parse `1,2`, `0-2` or a mix such as `0,2-3`.
fn parse_weights(text: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || format!("invalid weight list '{text}'");
        match part.split_once('-') {
            Some((lo, hi)) => {
                let lo: usize = lo.trim().parse().map_err(|_| bad())?;
                let hi: usize = hi.trim().parse().map_err(|_| bad())?;
                if lo > hi {
                    return Err(bad());
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(format!("invalid weight list '{text}'"));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { config, out } => {
            let spec = CodeSpec::parse(&read(&config)?).map_err(|e| usage(format!("{}: {e}", config.display())))?;
            let code = spec.build().map_err(|e| usage(format!("{}: {e}", config.display())))?;
            let out = out.unwrap_or_else(|| config.with_extension("bundle"));
            fs::write(&out, code.bundle_text(&spec)).map_err(|e| usage(format!("{}: {e}", out.display())))?;
            print!("{}", code.summary());
            println!("bundle = {}", out.display());
            Ok(())
        }
        Command::Encode(io) => {
            let code = load(&io.config)?;
            let word = code.encode_text(&read(&io.input)?).map_err(usage)?;
            emit(&format!("{word}\n"), io.out.as_deref())
        }
        Command::Decode(io) => {
            let code = load(&io.config)?;
            let outcome = code.decode_text(&read(&io.input)?).map_err(usage)?;
            emit(&outcome.report, io.out.as_deref())?;
            if outcome.corrected {
                Ok(())
            } else {
                Err(Failure::Verification("decoding failed".into()))
            }
        }
        Command::Simulate { config, trials, weights, seed, out } => {
            let code = load(&config)?;
            let weights = match weights {
                Some(w) => parse_weights(&w).map_err(usage)?,
                None => (0..=code.capability()).collect(),
            };
            let stats = code.simulate(trials, &weights, seed).map_err(usage)?;
            emit(&stats.render(), out.as_deref())?;
            let t = code.capability();
            let missed: usize =
                stats.per_weight.iter().filter(|(&w, _)| w <= t).map(|(_, s)| s.trials - s.successes).sum();
            if missed == 0 {
                Ok(())
            } else {
                Err(Failure::Verification(format!("{missed} trials of weight at most t = {t} were not corrected")))
            }
        }
        Command::Example { which, out } => {
            let transcripts = examples::run(which).ok_or_else(|| usage(format!("no example {which}")))?;
            let text: String = transcripts.iter().map(|t| t.render()).collect();
            emit(&text, out.as_deref())?;
            if transcripts.iter().all(|t| t.passed()) {
                Ok(())
            } else {
                Err(Failure::Verification(format!("example {which} does not match")))
            }
        }
        Command::Oracle { config, budget, out } => {
            let code = load(&config)?;
            let outcome = code.oracle(budget).map_err(|e| usage(format!("oracle declined: {e}")))?;
            emit(&outcome.text, out.as_deref())?;
            if outcome.passed {
                Ok(())
            } else {
                Err(Failure::Verification("oracle found a disagreement".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Verification(m) => eprintln!("verification failed: {m}"),
            }
            f.exit_code()
        }
    }
}
