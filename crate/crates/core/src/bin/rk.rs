use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rk_core::cg::cg_report;
use rk_core::knot::{alexander_polynomial, even_continued_fraction, knot_presentation, Fraction};
use rk_core::metabelian::twisted_for_fraction;
use rk_core::obstruction::{fox_milnor_test, sliceness_verdict};
use rk_core::survey::{run_pipeline, survey, survey_csv, survey_json, Config};
use rk_core::{Error, Result, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "rk", version, about = "Exact slice obstructions for 2-bridge knots K(p/q)")]
struct Cli {
    /// key = value settings (r_bound, k_list, jobs, json_out, csv_out).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Even continued fraction.
    Cf { p: u64, q: u64 },
    /// Alexander polynomial and the Fox-Milnor test.
    Alex { p: u64, q: u64 },
    /// Reduced twisted Alexander polynomial for a character of order k.
    Twisted {
        p: u64,
        q: u64,
        #[arg(long)]
        k: u64,
    },
    /// Casson-Gordon signatures of the double branched cover.
    Cg { p: u64, q: u64 },
    /// Norm obstructions for every k (or the given k).
    Obstruct {
        p: u64,
        q: u64,
        #[arg(long)]
        k: Vec<u64>,
        #[arg(long)]
        r_bound: Option<u64>,
    },
    /// Full pipeline with a one-line verdict.
    Run { p: u64, q: u64 },
    /// CG-fake slice counts for determinant m².
    Survey {
        #[arg(required = true)]
        m: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
struct Tagged<T: Serialize> {
    schema_version: u32,
    #[serde(flatten)]
    body: T,
}

fn emit<T: Serialize>(body: T) -> Result<()> {
    let doc = Tagged { schema_version: SCHEMA_VERSION, body };
    print_stdout(&(serde_json::to_string_pretty(&doc).expect("serializable") + "\n"));
    Ok(())
}

/// Writes to stdout, tolerating a closed pipe.
fn print_stdout(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn write_out(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<()> {
    let mut config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Cf { p, q } => emit(even_continued_fraction(Fraction::new(p, q)?)),
        Command::Alex { p, q } => {
            let delta = alexander_polynomial(&knot_presentation(Fraction::new(p, q)?)?)?;
            #[derive(Serialize)]
            struct Alex {
                alexander: String,
                fox_milnor: Option<rk_core::obstruction::FoxMilnor>,
            }
            let fox_milnor = fox_milnor_test(&delta).ok();
            emit(Alex { alexander: delta.canonical(), fox_milnor })
        }
        Command::Twisted { p, q, k } => emit(twisted_for_fraction(Fraction::new(p, q)?, k)?),
        Command::Cg { p, q } => emit(cg_report(Fraction::new(p, q)?)?),
        Command::Obstruct { p, q, k, r_bound } => {
            if let Some(r) = r_bound {
                config.r_bound = r;
            }
            if !k.is_empty() {
                config.k_list = Some(k);
            }
            emit(sliceness_verdict(Fraction::new(p, q)?, config.k_list.as_deref(), config.r_bound)?)
        }
        Command::Run { p, q } => emit(run_pipeline(Fraction::new(p, q)?, &config)?),
        Command::Survey { m, format, out, jobs } => {
            if jobs.is_some() {
                config.jobs = jobs;
            }
            let rows = m.iter().map(|&m| survey(m, &config)).collect::<Result<Vec<_>>>()?;
            let json = survey_json(&rows);
            let csv = survey_csv(&rows);
            if let Some(path) = &config.json_out {
                write_out(path, &json)?;
            }
            if let Some(path) = &config.csv_out {
                write_out(path, &csv)?;
            }
            let text = match format {
                Format::Json => json,
                Format::Csv => csv,
            };
            match out {
                Some(path) => write_out(&path, &text),
                None => {
                    print_stdout(&text);
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
