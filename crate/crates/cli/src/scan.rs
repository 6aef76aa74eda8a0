//! Batch sweep over all valid `(w, x)` pairs of a group.
//!
//! Records are computed in chunks on a worker pool and written in input
//! order by a single writer. With `--out`, a sidecar `<out>.cursor` records
//! how many records and bytes are complete, so an interrupted sweep resumes
//! where it stopped.

use std::fs::OpenOptions;
use std::io::{BufWriter, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use schubloc::localize::opposite_pair;
use schubloc::*;

use crate::error::{CliError, Result};
use crate::query::{element_string, Int};

pub const DEFAULT_MAX_RANK: usize = 6;
const CHUNK: usize = 64;
const CACHE_WORDS: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub group: String,
    pub variant: Variant,
    pub max_rank: usize,
    /// Keep only `w` whose maximal parabolic is exactly this set.
    pub parabolic: Option<Vec<usize>>,
    pub w_filter: Vec<String>,
    pub x_filter: Vec<String>,
    /// Recompute the multiplicity with up to this many reduced words.
    pub verify_words: Option<usize>,
    pub out: Option<PathBuf>,
    pub cache: Option<PathBuf>,
    pub jobs: Option<usize>,
    /// Stop after writing this many records in this run.
    pub limit: Option<usize>,
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub w: String,
    pub x: String,
    pub feasible: bool,
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Int>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smooth: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words_checked: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub total: usize,
    pub resumed_from: usize,
    pub written: usize,
    pub feasible: usize,
    pub cache_hits: u64,
    pub cache_misses: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct Cursor {
    fingerprint: String,
    done: usize,
    bytes: u64,
}

#[derive(Serialize)]
struct Fingerprint<'a> {
    version: &'a str,
    group: String,
    variant: Variant,
    parabolic: &'a Option<Vec<usize>>,
    w: Vec<String>,
    x: Vec<String>,
    verify_words: Option<usize>,
    format: Format,
}

pub fn cursor_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".cursor");
    PathBuf::from(s)
}

fn parse_filter(g: &WeylGroup, items: &[String]) -> Result<Vec<WeylElement>> {
    items.iter().map(|s| Ok(g.parse_element(s)?)).collect()
}

/// All pairs in sweep order: `w` then `x`, each by length and word.
fn pairs(cfg: &ScanConfig, g: &WeylGroup) -> Result<Vec<(WeylElement, WeylElement)>> {
    let all = g.elements();
    let ws = if cfg.w_filter.is_empty() { all.clone() } else { parse_filter(g, &cfg.w_filter)? };
    let xs = if cfg.x_filter.is_empty() { all } else { parse_filter(g, &cfg.x_filter)? };
    let parabolic = cfg
        .parabolic
        .as_ref()
        .map(|p| ParabolicSubset::new(g.rank(), p))
        .transpose()?;
    let mut out = Vec::new();
    for w in &ws {
        if let Some(p) = &parabolic {
            if max_parabolic(w, cfg.variant).simples() != p.simples() {
                continue;
            }
        }
        for x in &xs {
            let ok = match cfg.variant {
                Variant::Opposite => w.bruhat_leq(x)?,
                Variant::Standard => x.bruhat_leq(w)?,
            };
            if ok {
                out.push((w.clone(), x.clone()));
            }
        }
    }
    Ok(out)
}

fn record(
    w: &WeylElement,
    x: &WeylElement,
    variant: Variant,
    verify: Option<usize>,
    cache: &ReducedWordCache,
) -> Result<ScanRecord> {
    let cert = comin_certificate(w, x, variant)?;
    let smooth = if x.group().is_type_a() {
        Some(zariski_weights_type_a(w, x, variant)?.smooth)
    } else {
        None
    };
    let mut mult = None;
    let mut words_checked = None;
    if cert.feasible || smooth == Some(true) {
        match local_multiplicity(w, x, variant, &EvalOptions::default()) {
            Ok(m) => {
                if let (Some(k), MultiplicitySource::Cominuscule) = (verify, m.source) {
                    let (_, target) = opposite_pair(w, x, variant)?;
                    let words = cache.reduced_words(&target);
                    let mut n = 0;
                    for word in words.iter().take(k) {
                        let o = EvalOptions {
                            word: Some(word.clone()),
                            ..EvalOptions::default()
                        };
                        let again = multiplicity_with(w, x, variant, &o)?.multiplicity;
                        if again != m.value {
                            return Err(CliError::Internal(format!(
                                "multiplicity at {w}, {x} is {} with word {word:?} but {} by default",
                                again, m.value
                            )));
                        }
                        n += 1;
                    }
                    words_checked = Some(n);
                }
                mult = Some(Int(m.value));
            }
            // outside type A a curve certificate may not extend to the denominator set
            Err(e) if e.kind() == ErrorKind::Precondition => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(ScanRecord {
        w: element_string(w),
        x: element_string(x),
        feasible: cert.feasible,
        exact: cert.exactness == Exactness::Exact,
        mult,
        smooth,
        words_checked,
    })
}

pub fn render_record(r: &ScanRecord, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(r).expect("record serializes"),
        Format::Text => {
            let mut s = format!(
                "w=({}) x=({}) {}{}",
                r.w,
                r.x,
                if r.feasible { "feasible" } else { "infeasible" },
                if r.exact { "" } else { " necessary-only" }
            );
            if let Some(m) = &r.mult {
                s.push_str(&format!(" mult={m}"));
            }
            if let Some(sm) = r.smooth {
                s.push_str(if sm { " smooth" } else { " singular" });
            }
            s
        }
    }
}

fn read_cursor(path: &Path, fingerprint: &str, out: &Path) -> Option<Cursor> {
    let text = std::fs::read_to_string(path).ok()?;
    let c: Cursor = serde_json::from_str(&text).ok()?;
    let len = std::fs::metadata(out).ok()?.len();
    (c.fingerprint == fingerprint && len >= c.bytes).then_some(c)
}

fn write_cursor(path: &Path, c: &Cursor) -> Result<()> {
    let text = serde_json::to_string(c).expect("cursor serializes");
    let tmp = path.with_extension("cursor.tmp");
    std::fs::write(&tmp, text).map_err(|e| CliError::io(tmp.display(), e))?;
    std::fs::rename(&tmp, path).map_err(|e| CliError::io(path.display(), e))
}

pub fn scan(cfg: &ScanConfig, stdout: &mut dyn Write) -> Result<ScanSummary> {
    let g = WeylGroup::from_label(&cfg.group)?;
    if g.rank() > cfg.max_rank {
        return Err(CliError::Precondition(format!(
            "rank {} exceeds the sweep cap {}",
            g.rank(),
            cfg.max_rank
        )));
    }
    let pairs = pairs(cfg, &g)?;
    let norm = |items: &[String]| -> Result<Vec<String>> {
        Ok(parse_filter(&g, items)?.iter().map(element_string).collect())
    };
    let fingerprint = serde_json::to_string(&Fingerprint {
        version: crate::report::VERSION,
        group: g.root_system().label().to_string(),
        variant: cfg.variant,
        parabolic: &cfg.parabolic,
        w: norm(&cfg.w_filter)?,
        x: norm(&cfg.x_filter)?,
        verify_words: cfg.verify_words,
        format: cfg.format,
    })
    .expect("fingerprint serializes");

    let cache = match &cfg.cache {
        Some(p) => ReducedWordCache::load(p, CACHE_WORDS, crate::report::VERSION),
        None => ReducedWordCache::new(CACHE_WORDS, crate::report::VERSION),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;

    let mut summary = ScanSummary {
        total: pairs.len(),
        ..ScanSummary::default()
    };
    let mut file_state = None;
    let mut start = 0;
    if let Some(out) = &cfg.out {
        let cpath = cursor_path(out);
        let resume = read_cursor(&cpath, &fingerprint, out);
        let mut file = OpenOptions::new()
            .create(true)
            .write(true)
            .truncate(false)
            .open(out)
            .map_err(|e| CliError::io(out.display(), e))?;
        let bytes = resume.as_ref().map_or(0, |c| c.bytes);
        file.set_len(bytes).map_err(|e| CliError::io(out.display(), e))?;
        file.seek(SeekFrom::End(0)).map_err(|e| CliError::io(out.display(), e))?;
        start = resume.as_ref().map_or(0, |c| c.done.min(pairs.len()));
        file_state = Some((BufWriter::new(file), cpath, bytes));
    }
    summary.resumed_from = start;

    let end = match cfg.limit {
        Some(l) => (start + l).min(pairs.len()),
        None => pairs.len(),
    };
    let mut done = start;
    for chunk in pairs[start..end].chunks(CHUNK) {
        let records: Vec<ScanRecord> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(w, x)| record(w, x, cfg.variant, cfg.verify_words, &cache))
                .collect::<Result<Vec<_>>>()
        })?;
        let mut text = String::new();
        for r in &records {
            if r.feasible {
                summary.feasible += 1;
            }
            text.push_str(&render_record(r, cfg.format));
            text.push('\n');
        }
        done += records.len();
        summary.written += records.len();
        match &mut file_state {
            Some((f, cpath, bytes)) => {
                let out = cfg.out.as_ref().expect("file output");
                f.write_all(text.as_bytes()).map_err(|e| CliError::io(out.display(), e))?;
                f.flush().map_err(|e| CliError::io(out.display(), e))?;
                *bytes += text.len() as u64;
                write_cursor(
                    cpath,
                    &Cursor {
                        fingerprint: fingerprint.clone(),
                        done,
                        bytes: *bytes,
                    },
                )?;
            }
            None => stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::io("stdout", e))?,
        }
    }
    if let Some((_, cpath, bytes)) = &file_state {
        // an empty sweep still leaves a cursor behind
        write_cursor(
            cpath,
            &Cursor {
                fingerprint: fingerprint.clone(),
                done,
                bytes: *bytes,
            },
        )?;
    }
    if let Some(p) = &cfg.cache {
        cache.save(p).map_err(|e| CliError::io(p.display(), e))?;
    }
    (summary.cache_hits, summary.cache_misses) = cache.stats();
    Ok(summary)
}
