//! Chunked parallel scan of graph6 streams.
//!
//! Lines are read in chunks; each chunk is decoded, filtered and measured
//! on the worker pool, then handed back in input order to a single thread
//! that appends to the resume log and feeds the sink. Output is therefore
//! identical for any worker count.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::hash::{Hash, Hasher};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use detour_core::{graph6, Graph};
use rayon::prelude::*;

use crate::error::{Result, SearchError};
use crate::filter::FilterSpec;
use crate::io::Line;
use crate::record::{Engine, ScanRecord};

/// Environment variable naming a default resume log.
pub const RESUME_LOG_ENV: &str = "DETOURS_RESUME_LOG";

/// What to do with undecodable lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ErrorPolicy {
    /// Record the error in [`ScanStats::errors`] and continue.
    #[default]
    Skip,
    Abort,
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub filter: FilterSpec,
    pub engine: Engine,
    /// Worker threads; 0 means one per available core.
    pub jobs: usize,
    pub policy: ErrorPolicy,
    /// Fraction of computed graphs re-checked with the other engine.
    pub audit_fraction: f64,
    pub chunk_size: usize,
    pub resume_log: Option<PathBuf>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            filter: FilterSpec::any(),
            engine: Engine::Auto,
            jobs: 0,
            policy: ErrorPolicy::Skip,
            audit_fraction: 0.01,
            chunk_size: 4096,
            resume_log: None,
        }
    }
}

#[derive(Debug, Default)]
pub struct ScanStats {
    pub read: u64,
    pub errors: Vec<SearchError>,
    pub rejected: u64,
    pub computed: u64,
    pub resumed: u64,
    pub audited: u64,
    pub emitted: u64,
}

enum Outcome {
    Bad(SearchError),
    Rejected,
    Measured {
        record: ScanRecord,
        fresh: bool,
        audited: bool,
    },
}

pub struct Scanner {
    config: ScanConfig,
    pool: rayon::ThreadPool,
    logged: HashMap<String, ScanRecord>,
    log: Option<BufWriter<File>>,
}

fn read_log(path: &Path) -> Result<HashMap<String, ScanRecord>> {
    let mut out = HashMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e.into()),
    };
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: ScanRecord =
            serde_json::from_str(&line).map_err(|source| SearchError::Record {
                line: idx + 1,
                source,
            })?;
        out.insert(rec.graph6.clone(), rec);
    }
    Ok(out)
}

/// Deterministic audit selection, independent of scheduling.
fn selected_for_audit(key: &str, fraction: f64) -> bool {
    if fraction <= 0.0 {
        return false;
    }
    if fraction >= 1.0 {
        return true;
    }
    let mut h = DefaultHasher::new();
    key.hash(&mut h);
    (h.finish() % 1_000_000) < (fraction * 1_000_000.0) as u64
}

impl Scanner {
    pub fn new(config: ScanConfig) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| SearchError::Pool(e.to_string()))?;
        let (logged, log) = match &config.resume_log {
            Some(path) => {
                let logged = read_log(path)?;
                let file = OpenOptions::new().create(true).append(true).open(path)?;
                (logged, Some(BufWriter::new(file)))
            }
            None => (HashMap::new(), None),
        };
        Ok(Scanner {
            config,
            pool,
            logged,
            log,
        })
    }

    pub fn config(&self) -> &ScanConfig {
        &self.config
    }

    fn process(&self, line: &Line) -> Outcome {
        let g = match graph6::decode(&line.text) {
            Ok(g) => g,
            Err(source) => {
                return Outcome::Bad(SearchError::Decode {
                    line: line.number,
                    source,
                })
            }
        };
        if !self.config.filter.structural_match(&g) {
            return Outcome::Rejected;
        }
        if let Some(rec) = self.logged.get(&line.text) {
            return Outcome::Measured {
                record: rec.clone(),
                fresh: false,
                audited: false,
            };
        }
        match self.measure(&g, &line.text) {
            Ok((record, audited)) => Outcome::Measured {
                record,
                fresh: true,
                audited,
            },
            Err(e) => Outcome::Bad(e),
        }
    }

    fn measure(&self, g: &Graph, text: &str) -> Result<(ScanRecord, bool)> {
        let engine = self.config.engine;
        let record = ScanRecord::measure(g, text.to_string(), engine)?;
        let alternate = engine.alternate(g.order());
        let audit = alternate.filter(|_| selected_for_audit(text, self.config.audit_fraction));
        if let Some(alt) = audit {
            let check = alt.count(g)?;
            if (check.order, check.count) != (record.order, record.f) {
                return Err(SearchError::EngineMismatch {
                    graph6: text.to_string(),
                    primary_order: record.order,
                    primary_count: record.f,
                    alternate_order: check.order,
                    alternate_count: check.count,
                });
            }
        }
        Ok((record, audit.is_some()))
    }

    /// Scans `lines`, calling `sink` for every record that passes the filter.
    pub fn run<I, F>(&mut self, lines: I, mut sink: F) -> Result<ScanStats>
    where
        I: IntoIterator<Item = io::Result<Line>>,
        F: FnMut(ScanRecord) -> Result<()>,
    {
        let mut stats = ScanStats::default();
        let mut lines = lines.into_iter();
        let chunk_size = self.config.chunk_size.max(1);
        loop {
            let chunk: Vec<Line> = lines.by_ref().take(chunk_size).collect::<io::Result<_>>()?;
            if chunk.is_empty() {
                break;
            }
            stats.read += chunk.len() as u64;
            let this = &*self;
            let outcomes: Vec<Outcome> = this
                .pool
                .install(|| chunk.par_iter().map(|line| this.process(line)).collect());
            for outcome in outcomes {
                match outcome {
                    Outcome::Bad(e @ SearchError::Decode { .. })
                        if self.config.policy == ErrorPolicy::Skip =>
                    {
                        stats.errors.push(e)
                    }
                    Outcome::Bad(e) => return Err(e),
                    Outcome::Rejected => stats.rejected += 1,
                    Outcome::Measured {
                        record,
                        fresh,
                        audited,
                    } => {
                        if fresh {
                            stats.computed += 1;
                            if let Some(log) = self.log.as_mut() {
                                writeln!(log, "{}", record.to_json())?;
                            }
                        } else {
                            stats.resumed += 1;
                        }
                        stats.audited += audited as u64;
                        if self.config.filter.outcome_match(&record) {
                            stats.emitted += 1;
                            sink(record)?;
                        }
                    }
                }
            }
            if let Some(log) = self.log.as_mut() {
                log.flush()?;
            }
        }
        Ok(stats)
    }

    /// Scans in-memory graphs (for example from the labeled generator).
    pub fn run_graphs<I, F>(&mut self, graphs: I, sink: F) -> Result<ScanStats>
    where
        I: IntoIterator<Item = Graph>,
        F: FnMut(ScanRecord) -> Result<()>,
    {
        let lines = graphs.into_iter().enumerate().map(|(idx, g)| {
            Ok(Line {
                number: idx + 1,
                text: graph6::encode(&g).expect("generated graphs are small"),
            })
        });
        self.run(lines, sink)
    }
}

/// Scans and collects every passing record.
pub fn scan<I>(lines: I, config: ScanConfig) -> Result<(Vec<ScanRecord>, ScanStats)>
where
    I: IntoIterator<Item = io::Result<Line>>,
{
    let mut scanner = Scanner::new(config)?;
    let mut out = Vec::new();
    let stats = scanner.run(lines, |r| {
        out.push(r);
        Ok(())
    })?;
    Ok((out, stats))
}
