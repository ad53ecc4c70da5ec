use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use rayon::prelude::*;

use fhcalc_cli::{run_job, Format, JobError, JobSpec, EXIT_VERIFICATION_FAILED};
use fhcalc_core::fdalg::AlgebraPreset;
use fhcalc_core::verify::{self, Suite};

#[derive(Parser)]
#[command(name = "fhcalc", version, about = "Functor homology and stable GL homology dimension calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or more job files.
    Run {
        #[arg(required = true, value_name = "JOBFILE")]
        files: Vec<PathBuf>,
        /// Output file (one job) or directory (several jobs); stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides the format requested in the job file.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Treat symmetric group coefficients as projective without checking.
        #[arg(long)]
        assume_projective: bool,
        /// Number of job files processed concurrently.
        #[arg(long = "jobs", value_name = "N", default_value_t = 1)]
        jobs: usize,
    },
    /// Run a built-in verification suite.
    Verify {
        /// linalg, graded, koszul, fdalg-balance, example-C or all.
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// List built-in algebra and representation presets.
    Presets,
}

/// Writes via a sibling temporary file so readers never see a partial report.
fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("partial");
    fs::write(&tmp, contents).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming onto {}", path.display()))?;
    Ok(())
}

struct Outcome {
    rendered: String,
    code: i32,
}

fn run_one(path: &Path, format: Option<Format>, assume_projective: bool) -> Outcome {
    let start = Instant::now();
    let result = JobSpec::from_path(path).and_then(|spec| {
        let report = run_job(&spec, assume_projective)?;
        Ok((report, format.unwrap_or(spec.format)))
    });
    // Timing goes to stderr so reports stay byte-identical between runs.
    eprintln!("{}: {:.3} s", path.display(), start.elapsed().as_secs_f64());
    match result {
        Ok((report, format)) => Outcome {
            code: if report.passed() { 0 } else { EXIT_VERIFICATION_FAILED },
            rendered: report.render(format),
        },
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            Outcome {
                rendered: String::new(),
                code: e.exit_code(),
            }
        }
    }
}

fn cmd_run(
    jobs: &[PathBuf],
    out: Option<&Path>,
    format: Option<Format>,
    assume_projective: bool,
    parallel: usize,
) -> Result<i32> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallel.max(1))
        .build()
        .context("building the job thread pool")?;
    let outcomes: Vec<Outcome> =
        pool.install(|| jobs.par_iter().map(|p| run_one(p, format, assume_projective)).collect());

    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            for o in &outcomes {
                stdout.write_all(o.rendered.as_bytes())?;
            }
        }
        Some(target) if jobs.len() == 1 => {
            if outcomes[0].code != 1 && outcomes[0].code != 2 {
                write_atomically(target, &outcomes[0].rendered)?;
            }
        }
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            for (path, o) in jobs.iter().zip(&outcomes) {
                if o.code == 1 || o.code == 2 {
                    continue;
                }
                let stem = path.file_stem().unwrap_or_default();
                let ext = if o.rendered.starts_with("degree,") || o.rendered.starts_with("suite,") {
                    "csv"
                } else {
                    "txt"
                };
                write_atomically(&dir.join(stem).with_extension(ext), &o.rendered)?;
            }
        }
    }
    // Validation and guard errors outrank verification failures.
    let codes = outcomes.iter().map(|o| o.code);
    Ok([1, 2, EXIT_VERIFICATION_FAILED]
        .into_iter()
        .find(|c| codes.clone().any(|x| x == *c))
        .unwrap_or(0))
}

fn cmd_verify(suite: &str, seed: u64) -> i32 {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}", JobError::Validation(e.to_string()));
            return 1;
        }
    };
    let mut ok = true;
    for report in verify::run(suite, seed) {
        print!("{report}");
        ok &= report.passed();
    }
    if ok {
        0
    } else {
        EXIT_VERIFICATION_FAILED
    }
}

fn cmd_presets() {
    println!("algebras:");
    for name in AlgebraPreset::NAMES {
        println!("  {name}");
    }
    println!("modules:\n  trivial\n  regular");
    println!("representations:\n  trivial\n  sign\n  standard (full symmetric group only)\n  regular");
    println!("verification suites:");
    for name in Suite::NAMES {
        println!("  {name}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run {
            files,
            out,
            format,
            assume_projective,
            jobs,
        } => match cmd_run(&files, out.as_deref(), format, assume_projective, jobs) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e:#}");
                1
            }
        },
        Command::Verify { suite, seed } => cmd_verify(&suite, seed),
        Command::Presets => {
            cmd_presets();
            0
        }
    };
    ExitCode::from(code as u8)
}
