//! Command-line front end for `schubloc`: argument handling, JSON and text
//! reports, and the batch sweep.

pub mod args;
pub mod commands;
pub mod error;
pub mod query;
pub mod render;
pub mod report;
pub mod scan;

use std::io::Write;

use args::{Cli, Command, GroupArgs, KindArg, PairArgs};
use error::{CliError, Result};
use query::{Output, Query};
use scan::{Format, ScanConfig};

fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("bad letter `{t}` in --word"))))
        .collect()
}

fn parse_simples(s: &str) -> Result<Vec<usize>> {
    parse_word(s).map(|mut v| {
        v.sort_unstable();
        v.dedup();
        v
    })
}

fn pair_query(p: &PairArgs, output: Output, terms: usize) -> Result<(Query, query::Resolved)> {
    let word = p.word.as_deref().map(parse_word).transpose()?;
    Query::new(
        &p.common.group,
        p.variant.into(),
        Some(&p.w),
        Some(&p.x),
        word,
        vec![output],
        terms,
    )
}

fn emit(common: &GroupArgs, body: &str, stdout: &mut dyn Write) -> Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::io(path.display(), e)),
        None => stdout.write_all(body.as_bytes()).map_err(|e| CliError::io("stdout", e)),
    }
}

/// Render a report in the requested format, with a trailing newline.
pub fn format_report(report: &report::Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render::render(report),
    }
}

/// Run one invocation, writing to `stdout` (or `--out`). Progress notes for
/// sweeps go to `stderr`.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let (common, q, r) = match &cli.command {
        Command::Roots(g) => {
            let (q, r) = Query::new(&g.group, schubloc::Variant::Opposite, None, None, None, vec![Output::Roots], 0)?;
            (g, q, r)
        }
        Command::Bruhat(p) => {
            let (q, r) = pair_query(p, Output::Bruhat, 0)?;
            (&p.common, q, r)
        }
        Command::Comin(p) => {
            let (q, r) = pair_query(p, Output::Comin, 0)?;
            (&p.common, q, r)
        }
        Command::Tangent(p) => {
            let (q, r) = pair_query(p, Output::Tangent, 0)?;
            (&p.common, q, r)
        }
        Command::Restrict(a) => {
            let out = match a.kind {
                KindArg::Chow => Output::RestrictChow,
                KindArg::K => Output::RestrictK,
            };
            let (q, r) = pair_query(&a.pair, out, 0)?;
            (&a.pair.common, q, r)
        }
        Command::Mult(p) => {
            let (q, r) = pair_query(p, Output::Mult, 0)?;
            (&p.common, q, r)
        }
        Command::Hilbert(h) => {
            let (q, r) = pair_query(&h.pair, Output::Hilbert, h.terms)?;
            (&h.pair.common, q, r)
        }
        Command::Scan(s) => {
            let cfg = ScanConfig {
                group: s.common.group.clone(),
                variant: s.variant.into(),
                max_rank: s.max_rank,
                parabolic: s.parabolic.as_deref().map(parse_simples).transpose()?,
                w_filter: s.w.clone(),
                x_filter: s.x.clone(),
                verify_words: s.verify_words,
                out: s.common.out.clone(),
                cache: s.cache.clone(),
                jobs: s.jobs,
                limit: s.limit,
                format: s.common.format.into(),
            };
            let sum = scan::scan(&cfg, stdout)?;
            writeln!(
                stderr,
                "scanned {} of {} pairs (resumed at {}), {} feasible written this run; cache hits {} misses {}",
                sum.resumed_from + sum.written,
                sum.total,
                sum.resumed_from,
                sum.feasible,
                sum.cache_hits,
                sum.cache_misses
            )
            .map_err(|e| CliError::io("stderr", e))?;
            return Ok(());
        }
    };
    let report = commands::run_query(&q, &r)?;
    emit(common, &format_report(&report, common.format.into()), stdout)
}
