//! Minimum and minimum-odd detour counts over a graph class, with
//! re-verified witnesses and the full count spectrum.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Result, SearchError};
use crate::filter::DegreeMode;
use crate::record::ScanRecord;

/// Default number of witnesses kept per detour count.
pub const DEFAULT_WITNESS_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub k: usize,
    pub n: usize,
    pub mode: DegreeMode,
    /// True when the corpus was complete, so the values are exact minima;
    /// otherwise they are upper bounds.
    pub exact: bool,
    pub graphs: u64,
    pub a_value: u64,
    pub b_value: Option<u64>,
    pub a_witnesses: Vec<String>,
    pub b_witnesses: Vec<String>,
    /// f -> number of graphs.
    pub spectrum: BTreeMap<u64, u64>,
}

impl SearchSummary {
    pub fn bound_label(&self) -> &'static str {
        if self.exact {
            "exact"
        } else {
            "upper-bound"
        }
    }

    pub const CSV_HEADER: &'static str = "k,n,mode,status,graphs,a,b,a_witness,b_witness";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.k,
            self.n,
            self.mode,
            self.bound_label(),
            self.graphs,
            self.a_value,
            self.b_value.map(|b| b.to_string()).unwrap_or_default(),
            self.a_witnesses.first().map(String::as_str).unwrap_or(""),
            self.b_witnesses.first().map(String::as_str).unwrap_or(""),
        )
    }

    pub fn to_human(&self) -> String {
        let rel = if self.exact { "=" } else { "<=" };
        let b = self
            .b_value
            .map_or_else(|| "none".to_string(), |b| format!("{rel} {b}"));
        let spectrum: Vec<String> = self
            .spectrum
            .iter()
            .map(|(f, c)| format!("{f}:{c}"))
            .collect();
        format!(
            "k={} n={} mode={} graphs={} ({})\na {rel} {}  witnesses: {}\nb {}  witnesses: {}\nspectrum f:count {}",
            self.k,
            self.n,
            self.mode,
            self.graphs,
            self.bound_label(),
            self.a_value,
            self.a_witnesses.join(" "),
            b,
            self.b_witnesses.join(" "),
            spectrum.join(" ")
        )
    }
}

/// Streaming accumulator for [`SearchSummary`].
#[derive(Debug, Clone)]
pub struct Tabulator {
    k: usize,
    n: usize,
    mode: DegreeMode,
    witness_cap: usize,
    graphs: u64,
    spectrum: BTreeMap<u64, u64>,
    witnesses: BTreeMap<u64, Vec<String>>,
}

impl Tabulator {
    pub fn new(k: usize, n: usize, mode: DegreeMode, witness_cap: usize) -> Self {
        Tabulator {
            k,
            n,
            mode,
            witness_cap,
            graphs: 0,
            spectrum: BTreeMap::new(),
            witnesses: BTreeMap::new(),
        }
    }

    /// Records outside the class (wrong order, degree or disconnected) are
    /// ignored.
    pub fn observe(&mut self, rec: &ScanRecord) {
        if rec.n != self.n || !rec.connected || !self.mode.accepts(rec.delta, self.k) {
            return;
        }
        self.graphs += 1;
        *self.spectrum.entry(rec.f).or_default() += 1;
        let list = self.witnesses.entry(rec.f).or_default();
        if list.len() < self.witness_cap {
            list.push(rec.graph6.clone());
        }
    }

    pub fn merge(&mut self, other: Tabulator) {
        self.graphs += other.graphs;
        for (f, c) in other.spectrum {
            *self.spectrum.entry(f).or_default() += c;
        }
        for (f, list) in other.witnesses {
            let mine = self.witnesses.entry(f).or_default();
            mine.extend(list);
            mine.sort();
            mine.dedup();
            mine.truncate(self.witness_cap);
        }
    }

    fn verified(&self, f: u64) -> Result<Vec<String>> {
        let list = self.witnesses.get(&f).cloned().unwrap_or_default();
        for text in &list {
            let rec = ScanRecord {
                graph6: text.clone(),
                n: self.n,
                delta: 0,
                connected: true,
                kappa: None,
                order: 0,
                f,
            }
            .recompute()?;
            if rec.f != f
                || rec.n != self.n
                || !self.mode.accepts(rec.delta, self.k)
                || !rec.connected
            {
                return Err(SearchError::WitnessRejected {
                    graph6: text.clone(),
                    reason: format!(
                        "recomputed n={} delta={} connected={} f={}, expected f={f}",
                        rec.n, rec.delta, rec.connected, rec.f
                    ),
                });
            }
        }
        Ok(list)
    }

    pub fn finish(self, complete: bool) -> Result<SearchSummary> {
        let Some(&a_value) = self.spectrum.keys().next() else {
            return Err(SearchError::EmptyDomain {
                k: self.k,
                n: self.n,
                mode: self.mode.to_string(),
            });
        };
        let b_value = self.spectrum.keys().copied().find(|f| f % 2 == 1);
        let a_witnesses = self.verified(a_value)?;
        let b_witnesses = match b_value {
            Some(b) => self.verified(b)?,
            None => Vec::new(),
        };
        Ok(SearchSummary {
            k: self.k,
            n: self.n,
            mode: self.mode,
            exact: complete,
            graphs: self.graphs,
            a_value,
            b_value,
            a_witnesses,
            b_witnesses,
            spectrum: self.spectrum,
        })
    }
}

pub fn tabulate<'a, I>(
    records: I,
    k: usize,
    n: usize,
    mode: DegreeMode,
    complete: bool,
) -> Result<SearchSummary>
where
    I: IntoIterator<Item = &'a ScanRecord>,
{
    let mut t = Tabulator::new(k, n, mode, DEFAULT_WITNESS_CAP);
    records.into_iter().for_each(|r| t.observe(r));
    t.finish(complete)
}
