//! Search for graphs with a prescribed detour count.

use detour_core::graph6;

use crate::error::{Result, SearchError};
use crate::filter::FilterSpec;
use crate::record::ScanRecord;

/// Recomputes `(n, δ, κ, L, f)` from the graph6 string with the DFS engine
/// and checks it against `rec` and the structural part of `spec`.
pub fn reverify(rec: &ScanRecord, spec: &FilterSpec) -> Result<()> {
    let reject = |reason: String| SearchError::WitnessRejected {
        graph6: rec.graph6.clone(),
        reason,
    };
    let g = graph6::decode(&rec.graph6)?;
    if !spec.structural_match(&g) {
        return Err(reject("graph fails the structural filter".into()));
    }
    let fresh = rec.recompute()?;
    if &fresh != rec {
        return Err(reject(format!(
            "record says {}, recomputation gives {}",
            rec.to_human(),
            fresh.to_human()
        )));
    }
    if !spec.outcome_match(&fresh) {
        return Err(reject(format!(
            "{} fails the outcome filter",
            fresh.to_human()
        )));
    }
    Ok(())
}

/// Keeps the first `cap` records with `f == spec.f_target` that satisfy
/// `spec`, re-verifying each one before accepting it.
#[derive(Debug, Clone)]
pub struct WitnessCollector {
    spec: FilterSpec,
    cap: usize,
    found: Vec<ScanRecord>,
    matched: u64,
}

impl WitnessCollector {
    pub fn new(spec: FilterSpec, cap: usize) -> Result<Self> {
        if spec.f_target.is_none() {
            return Err(SearchError::MissingTarget);
        }
        Ok(WitnessCollector {
            spec,
            cap,
            found: Vec::new(),
            matched: 0,
        })
    }

    pub fn is_full(&self) -> bool {
        self.found.len() >= self.cap
    }

    /// Total matching records seen, including those beyond the cap.
    pub fn matched(&self) -> u64 {
        self.matched
    }

    pub fn observe(&mut self, rec: &ScanRecord) -> Result<()> {
        if self.spec.f_target != Some(rec.f) || !self.spec.outcome_match(rec) {
            return Ok(());
        }
        if self.spec.order.is_some_and(|n| n != rec.n) {
            return Ok(());
        }
        if let Some(k) = self.spec.min_degree {
            if !self.spec.degree_mode.accepts(rec.delta, k) {
                return Ok(());
            }
        }
        if self.spec.connected && !rec.connected {
            return Ok(());
        }
        if self.spec.needs_kappa() {
            let Some(kappa) = rec.kappa else {
                return Ok(());
            };
            if self.spec.kappa.is_some_and(|k| kappa != k)
                || self.spec.kappa_min.is_some_and(|k| kappa < k)
            {
                return Ok(());
            }
        }
        self.matched += 1;
        if !self.is_full() {
            reverify(rec, &self.spec)?;
            self.found.push(rec.clone());
        }
        Ok(())
    }

    pub fn finish(self) -> Vec<ScanRecord> {
        self.found
    }
}

pub fn witness_search<'a, I>(records: I, spec: &FilterSpec, cap: usize) -> Result<Vec<ScanRecord>>
where
    I: IntoIterator<Item = &'a ScanRecord>,
{
    let mut c = WitnessCollector::new(spec.clone(), cap)?;
    for rec in records {
        c.observe(rec)?;
        if c.is_full() {
            break;
        }
    }
    Ok(c.finish())
}
