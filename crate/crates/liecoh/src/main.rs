//! Batch front end: read a JSON job, run it, write a deterministic report.
//!
//! Exit codes: `0` all requested invariants passed, `1` an invariant failed,
//! `2` the input could not be parsed, `3` an internal consistency check
//! tripped (always a bug).

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use liecoh::jobs;
use liecoh::{Error, Result};

#[derive(Parser)]
#[command(
    name = "liecoh",
    version,
    about = "Exact extension groups, cohomology, and block decompositions \
             for finite-dimensional Lie algebras and current algebras"
)]
struct Cli {
    /// JSON job file; stdin is read when omitted and no inline command is given.
    #[arg(long)]
    job: Option<PathBuf>,

    /// Write the report here instead of stdout (overrides the job's output_path).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker thread count (defaults to all cores).
    #[arg(long)]
    threads: Option<usize>,

    /// Print progress notes to stderr.
    #[arg(long)]
    verbose: bool,

    /// Inline command, e.g. `cocycle verify`.
    command: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // A global pool can only be installed once; a second attempt (e.g.
        // under a test harness) keeps the existing pool, which is fine.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) | Error::Shape(_) => 2,
                Error::Invariant(_) => 1,
                Error::Inconsistent(_) => 3,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let text = job_text(cli)?;
    let job = jobs::parse_job(&text)?;
    if cli.verbose {
        eprintln!("running task {:?}", job.task.name());
    }
    let outcome = jobs::run(&job)?;
    if cli.verbose {
        eprintln!(
            "task {:?} finished: {}",
            job.task.name(),
            if outcome.pass { "pass" } else { "FAIL" }
        );
    }
    let rendered = jobs::render_report(&outcome.report);
    let target = cli
        .out
        .clone()
        .or_else(|| job.output_path.as_ref().map(PathBuf::from));
    match target {
        Some(path) => std::fs::write(&path, rendered).map_err(|e| {
            Error::Parse(format!("cannot write report to {}: {e}", path.display()))
        })?,
        None => print!("{rendered}"),
    }
    Ok(outcome.pass)
}

fn job_text(cli: &Cli) -> Result<String> {
    if !cli.command.is_empty() {
        return inline_job(&cli.command);
    }
    if let Some(path) = &cli.job {
        return std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read job file {}: {e}", path.display())));
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Error::Parse(format!("cannot read job from stdin: {e}")))?;
    if text.trim().is_empty() {
        return Err(Error::Parse(
            "no job given: pass --job <file>, pipe JSON to stdin, or use `cocycle verify`".into(),
        ));
    }
    Ok(text)
}

fn inline_job(words: &[String]) -> Result<String> {
    match words {
        [a, b] if a == "cocycle" && b == "verify" => Ok(r#"{"task":"cocycle"}"#.to_string()),
        _ => Err(Error::Parse(format!(
            "unrecognized command {:?}; supported: `cocycle verify`",
            words.join(" ")
        ))),
    }
}
