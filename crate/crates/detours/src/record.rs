//! Per-graph records and their JSON-lines / CSV forms.

use std::fmt;
use std::str::FromStr;

use detour_core::{count_detours_dfs, count_detours_dp, graph6, DetourReport, Graph, DP_MAX_ORDER};
use serde::{Deserialize, Serialize};

use crate::error::{Result, SearchError};
use crate::filter::kappa_of;

/// Which detour engine computes `(L, f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    Dp,
    Dfs,
    /// DP up to order 20, DFS beyond.
    #[default]
    Auto,
}

impl Engine {
    pub fn resolve(self, n: usize) -> Engine {
        match self {
            Engine::Auto if n <= DP_MAX_ORDER => Engine::Dp,
            Engine::Auto => Engine::Dfs,
            e => e,
        }
    }

    /// The other engine, when it can handle order `n`.
    pub fn alternate(self, n: usize) -> Option<Engine> {
        match self.resolve(n) {
            Engine::Dp => Some(Engine::Dfs),
            _ if n <= DP_MAX_ORDER => Some(Engine::Dp),
            _ => None,
        }
    }

    pub fn count(self, g: &Graph) -> detour_core::Result<DetourReport> {
        match self.resolve(g.order()) {
            Engine::Dp => count_detours_dp(g),
            _ => count_detours_dfs(g),
        }
    }
}

impl FromStr for Engine {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dp" => Ok(Engine::Dp),
            "dfs" => Ok(Engine::Dfs),
            "auto" => Ok(Engine::Auto),
            _ => Err(SearchError::Filter(format!("unknown engine {s:?}"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Dp => "dp",
            Engine::Dfs => "dfs",
            Engine::Auto => "auto",
        })
    }
}

/// One scanned graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub connected: bool,
    /// Vertex connectivity (0 when disconnected); absent above order 20.
    pub kappa: Option<usize>,
    #[serde(rename = "L")]
    pub order: usize,
    pub f: u64,
}

impl ScanRecord {
    pub fn measure(g: &Graph, graph6: String, engine: Engine) -> Result<ScanRecord> {
        let report = engine.count(g)?;
        Ok(ScanRecord::from_report(g, graph6, &report))
    }

    pub fn from_report(g: &Graph, graph6: String, report: &DetourReport) -> ScanRecord {
        ScanRecord {
            graph6,
            n: g.order(),
            delta: g.min_degree(),
            connected: g.is_connected(),
            kappa: kappa_of(g),
            order: report.order,
            f: report.count,
        }
    }

    /// Recomputes every field from `graph6` with the DFS engine.
    pub fn recompute(&self) -> Result<ScanRecord> {
        let g = graph6::decode(&self.graph6)?;
        ScanRecord::measure(&g, self.graph6.clone(), Engine::Dfs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub const CSV_HEADER: &'static str = "graph6,n,delta,kappa,L,f";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.delta,
            self.kappa.map(|k| k.to_string()).unwrap_or_default(),
            self.order,
            self.f
        )
    }

    pub fn to_human(&self) -> String {
        let kappa = self
            .kappa
            .map_or_else(|| "?".to_string(), |k| k.to_string());
        format!(
            "n={} delta={} kappa={} L={} f={}",
            self.n, self.delta, kappa, self.order, self.f
        )
    }
}

/// Full structured report for one graph, optionally with the detour list
/// and per-edge tallies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub kappa: Option<usize>,
    #[serde(rename = "L")]
    pub order: usize,
    pub f: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detours: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_counts: Option<Vec<(usize, usize, u64)>>,
}

impl ReportRecord {
    pub fn new(g: &Graph, graph6: String, report: &DetourReport) -> ReportRecord {
        ReportRecord {
            graph6,
            n: g.order(),
            delta: g.min_degree(),
            kappa: kappa_of(g),
            order: report.order,
            f: report.count,
            detours: report
                .detours
                .as_ref()
                .map(|d| d.iter().map(|p| p.vertices().to_vec()).collect()),
            edge_counts: report
                .edge_counts
                .as_ref()
                .map(|m| m.iter().map(|(e, &c)| (e.u(), e.v(), c)).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use detour_core::{enumerate_detours, families};

    #[test]
    fn h9_record() {
        let g = families::h9();
        let text = graph6::encode(&g).unwrap();
        let rec = ScanRecord::measure(&g, text.clone(), Engine::Auto).unwrap();
        assert_eq!(
            (rec.n, rec.delta, rec.kappa, rec.order, rec.f),
            (9, 2, Some(1), 9, 9)
        );
        assert_eq!(rec.to_human(), "n=9 delta=2 kappa=1 L=9 f=9");
        let back: ScanRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        assert!(rec.to_json().contains("\"L\":9"));
        assert_eq!(rec.recompute().unwrap(), rec);
    }

    #[test]
    fn report_record_shape() {
        let g = Graph::cycle(4).unwrap();
        let report = enumerate_detours(&g).unwrap();
        let rec = ReportRecord::new(&g, "Cl".into(), &report);
        let json = rec.to_json();
        assert!(json.starts_with(
            r#"{"graph6":"Cl","n":4,"delta":2,"kappa":2,"L":4,"f":4,"detours":[[0,1,2,3]"#
        ));
        assert!(json.contains(r#""edge_counts":[[0,1,3],[0,3,3],[1,2,3],[2,3,3]]"#));
        let plain = ReportRecord::new(&g, "Cl".into(), &count_detours_dp(&g).unwrap());
        assert!(!plain.to_json().contains("detours"));
    }

    #[test]
    fn engine_resolution() {
        assert_eq!(Engine::Auto.resolve(20), Engine::Dp);
        assert_eq!(Engine::Auto.resolve(21), Engine::Dfs);
        assert_eq!(Engine::Auto.alternate(10), Some(Engine::Dfs));
        assert_eq!(Engine::Dfs.alternate(10), Some(Engine::Dp));
        assert_eq!(Engine::Auto.alternate(30), None);
        assert!("bfs".parse::<Engine>().is_err());
    }
}
