//! Graph predicates applied during scans.
//!
//! Structural predicates (order, minimum degree, connectivity) are checked
//! before any detour computation; the remaining ones need `L` and `f`.

use std::fmt;
use std::str::FromStr;

use detour_core::{Graph, BRUTE_FORCE_MAX_ORDER};
use serde::{Deserialize, Serialize};

use crate::error::{Result, SearchError};
use crate::record::ScanRecord;

/// How "minimum degree k" is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeMode {
    Exact,
    #[default]
    AtLeast,
}

impl DegreeMode {
    pub fn accepts(self, delta: usize, k: usize) -> bool {
        match self {
            DegreeMode::Exact => delta == k,
            DegreeMode::AtLeast => delta >= k,
        }
    }
}

impl fmt::Display for DegreeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeMode::Exact => "exact",
            DegreeMode::AtLeast => "atleast",
        })
    }
}

impl FromStr for DegreeMode {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(DegreeMode::Exact),
            "atleast" | "at-least" => Ok(DegreeMode::AtLeast),
            _ => Err(SearchError::Filter(format!("unknown degree mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn accepts(self, f: u64) -> bool {
        match self {
            Parity::Odd => f % 2 == 1,
            Parity::Even => f.is_multiple_of(2),
        }
    }
}

/// Predicate bundle; `FilterSpec::gamma(k, n, mode)` is the class of
/// connected graphs of order `n` and minimum degree `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FilterSpec {
    pub order: Option<usize>,
    pub min_degree: Option<usize>,
    pub degree_mode: DegreeMode,
    pub connected: bool,
    pub kappa: Option<usize>,
    pub kappa_min: Option<usize>,
    pub require_traceable: bool,
    pub f_parity: Option<Parity>,
    pub f_target: Option<u64>,
}

impl FilterSpec {
    /// Accepts every graph.
    pub fn any() -> Self {
        FilterSpec::default()
    }

    pub fn gamma(k: usize, n: usize, mode: DegreeMode) -> Self {
        FilterSpec {
            order: Some(n),
            min_degree: Some(k),
            degree_mode: mode,
            connected: true,
            ..FilterSpec::default()
        }
    }

    /// Parses `key=value` pairs separated by commas.
    ///
    /// Keys: `n`, `k`, `mode` (`exact`/`atleast`), `kappa`, `kappa_min`,
    /// `parity` (`odd`/`even`), `f`, `traceable` and `connected`
    /// (`true`/`false`). `connected` defaults to true; `degree_mode` is
    /// used unless `mode` is given.
    pub fn parse(text: &str, degree_mode: DegreeMode) -> Result<Self> {
        let mut spec = FilterSpec {
            degree_mode,
            connected: true,
            ..FilterSpec::default()
        };
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| SearchError::Filter(format!("expected key=value, got {part:?}")))?;
            let int = || {
                value
                    .parse::<usize>()
                    .map_err(|_| SearchError::Filter(format!("{key}: not an integer: {value:?}")))
            };
            let flag = || match value {
                "true" | "yes" | "1" => Ok(true),
                "false" | "no" | "0" | "any" => Ok(false),
                _ => Err(SearchError::Filter(format!(
                    "{key}: not a boolean: {value:?}"
                ))),
            };
            match key {
                "n" => spec.order = Some(int()?),
                "k" => spec.min_degree = Some(int()?),
                "mode" => spec.degree_mode = value.parse()?,
                "kappa" => spec.kappa = Some(int()?),
                "kappa_min" => spec.kappa_min = Some(int()?),
                "f" => spec.f_target = Some(int()? as u64),
                "parity" => {
                    spec.f_parity = Some(match value {
                        "odd" => Parity::Odd,
                        "even" => Parity::Even,
                        _ => {
                            return Err(SearchError::Filter(format!(
                                "parity must be odd or even, got {value:?}"
                            )))
                        }
                    })
                }
                "traceable" => spec.require_traceable = flag()?,
                "connected" => spec.connected = flag()?,
                _ => return Err(SearchError::Filter(format!("unknown key {key:?}"))),
            }
        }
        if spec.kappa.is_some() || spec.kappa_min.is_some_and(|k| k > 0) {
            spec.connected = true;
        }
        Ok(spec)
    }

    /// Checks `3 <= k <= n - 2`, the range where the minimum-degree
    /// tabulation problems are posed.
    pub fn check_problem_range(&self) -> Result<()> {
        match (self.min_degree, self.order) {
            (Some(k), Some(n)) if k >= 3 && k + 2 <= n => Ok(()),
            (k, n) => Err(SearchError::Filter(format!(
                "problem range needs 3 <= k <= n-2, got k={k:?}, n={n:?}"
            ))),
        }
    }

    pub fn needs_kappa(&self) -> bool {
        self.kappa.is_some() || self.kappa_min.is_some()
    }

    /// Cheap predicates, evaluated before any detour computation.
    pub fn structural_match(&self, g: &Graph) -> bool {
        if self.order.is_some_and(|n| g.order() != n) {
            return false;
        }
        if let Some(k) = self.min_degree {
            if !self.degree_mode.accepts(g.min_degree(), k) {
                return false;
            }
        }
        if self.connected && !g.is_connected() {
            return false;
        }
        if self.needs_kappa() {
            let Some(kappa) = kappa_of(g) else {
                return false;
            };
            if self.kappa.is_some_and(|k| kappa != k) || self.kappa_min.is_some_and(|k| kappa < k) {
                return false;
            }
        }
        true
    }

    /// Predicates on `L` and `f`.
    pub fn outcome_match(&self, rec: &ScanRecord) -> bool {
        if self.require_traceable && rec.order != rec.n {
            return false;
        }
        if self.f_parity.is_some_and(|p| !p.accepts(rec.f)) {
            return false;
        }
        if self.f_target.is_some_and(|t| rec.f != t) {
            return false;
        }
        true
    }

    pub fn matches(&self, g: &Graph, rec: &ScanRecord) -> bool {
        self.structural_match(g) && self.outcome_match(rec)
    }
}

/// κ with 0 for disconnected graphs; `None` above the brute-force cap.
pub fn kappa_of(g: &Graph) -> Option<usize> {
    if g.order() > BRUTE_FORCE_MAX_ORDER {
        return None;
    }
    match g.vertex_connectivity() {
        Ok(k) => Some(k),
        Err(_) => Some(0),
    }
}
