//! The `yzq` command line.
//!
//! ```text
//! yzq series <id> [--order N] [--format text|json|csv]
//! yzq verify <suite> [--order N] [--format text|json]
//! yzq table <yz-index1|yz-index2> --kmax K
//! yzq cache <write|read|clear> --dir PATH [--order N] [--series ID]
//! ```
//!
//! `YZQ_ORDER` replaces the default order of 128; `--order` wins over both.
//! Exit codes: 0 success, 1 failed check or I/O error, 2 usage error.

pub mod cache;
pub mod format;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::pipeline::{yz_index1_table, yz_index2_table, SeriesId};
use crate::rational::{parse_canonical, to_canonical, Rational};

use format::{render, Format, SeriesFile};
use verify::{run_suite, Perturbation, Suite, VerifyReport};

pub const DEFAULT_ORDER: usize = 128;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "yzq", version, about = "Exact q-series checks for index-two Yau-Zaslow counts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct OrderArg {
    /// Truncation order (highest exact degree)
    #[arg(long, env = "YZQ_ORDER", default_value_t = DEFAULT_ORDER)]
    pub order: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficients of a named series
    Series {
        /// N0, P0, M0, Q, G2, Ge, Go, M1_tauF, MV_1_2, P1_tau2F, PU_1_2, ODE1_LHS_M, ODE1_LHS_P
        id: String,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity checks
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Replace the constant term of G2 (negative control)
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        sigma0: Option<Rational>,
        /// Replace the initial value Q(0) = 1/8 (negative control)
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        q0: Option<Rational>,
    },
    /// Print a table of curve counts
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
    },
    /// Manage the on-disk series cache
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
        #[arg(long)]
        dir: PathBuf,
        #[command(flatten)]
        order: OrderArg,
        /// With `read`, print this series' file to stdout
        #[arg(long)]
        series: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    #[value(name = "yz-index1")]
    YzIndex1,
    #[value(name = "yz-index2")]
    YzIndex2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CacheAction {
    Write,
    Read,
    Clear,
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_canonical(s).map_err(|e| e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    execute(cli.command, out, err)
}

pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match command {
        Command::Series { id, order, format } => match id.parse::<SeriesId>() {
            Ok(id) => cmd_series(id, order.order, format, out),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        },
        Command::Verify { suite, order, format, sigma0, q0 } => {
            let mut p = Perturbation::default();
            if let Some(s) = sigma0 {
                p.sigma0 = s;
            }
            if let Some(q) = q0 {
                p.q0 = q;
            }
            cmd_verify(suite, order.order, format, &p, out)
        }
        Command::Table { kind, kmax } => cmd_table(kind, kmax as usize, out),
        Command::Cache { action, dir, order, series } => {
            let series = match series.map(|s| s.parse::<SeriesId>()).transpose() {
                Ok(s) => s,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            cmd_cache(action, &dir, order.order, series, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

type CmdResult = Result<u8, Error>;

pub fn cmd_series(id: SeriesId, order: usize, format: Format, out: &mut dyn Write) -> CmdResult {
    out.write_all(render(id, &id.compute(order), format).as_bytes())?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(suite: Suite, order: usize, format: ReportFormat, p: &Perturbation, out: &mut dyn Write) -> CmdResult {
    let reports = run_suite(suite, order, p);
    let report = VerifyReport::new(suite, order, &reports);
    let text = match format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => report.to_json(),
    };
    out.write_all(text.as_bytes())?;
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILURE })
}

pub fn cmd_table(kind: TableKind, k_max: usize, out: &mut dyn Write) -> CmdResult {
    match kind {
        TableKind::YzIndex1 => {
            writeln!(out, "d\tN(d,1)")?;
            for (d, n) in yz_index1_table(k_max) {
                writeln!(out, "{d}\t{}", to_canonical(&n))?;
            }
            Ok(EXIT_OK)
        }
        TableKind::YzIndex2 => {
            writeln!(out, "d\tN(d,2)\tN0[d]\tmatch")?;
            let rows = yz_index2_table(k_max)?;
            for r in &rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    r.yz_index,
                    to_canonical(&r.count),
                    to_canonical(&r.predicted),
                    if r.matches { "yes" } else { "no" }
                )?;
            }
            Ok(if rows.iter().all(|r| r.matches) { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

pub fn cmd_cache(
    action: CacheAction,
    dir: &std::path::Path,
    order: usize,
    series: Option<SeriesId>,
    out: &mut dyn Write,
) -> CmdResult {
    match action {
        CacheAction::Write => {
            for id in SeriesId::ALL {
                let path = cache::store(dir, id, &id.compute(order))?;
                writeln!(out, "wrote {}", path.display())?;
            }
        }
        CacheAction::Read => {
            let ids = match series {
                Some(id) => vec![id],
                None => SeriesId::ALL.to_vec(),
            };
            for id in ids {
                let (s, how) = cache::fetch(dir, id, order)?;
                if series.is_some() {
                    out.write_all(SeriesFile::from_series(id, &s).to_json().as_bytes())?;
                } else {
                    let how = match how {
                        cache::Lookup::Exact => "hit".to_string(),
                        cache::Lookup::Truncated(o) => format!("hit (truncated from order {o})"),
                        cache::Lookup::Miss => "miss (recomputed)".to_string(),
                    };
                    writeln!(out, "{}\torder {}\t{how}", id.name(), s.order())?;
                }
            }
        }
        CacheAction::Clear => {
            let n = cache::clear(dir)?;
            writeln!(out, "removed {n} files")?;
        }
    }
    Ok(EXIT_OK)
}
