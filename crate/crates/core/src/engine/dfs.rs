//! Two-pass depth-first search engine.
//!
//! Pass one finds the detour order with branch-and-bound. Pass two walks
//! every simple path of exactly that order and emits the orientation whose
//! first vertex is smaller than its last.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::DetourReport;
use crate::graph::{Bits, Edge, Graph};
use crate::path::Path;
use crate::{Error, Result};

/// Default cap on explicitly listed detours.
pub const DEFAULT_EMISSION_LIMIT: usize = 1_000_000;

/// Order of the region of unvisited vertices reachable from `v`.
///
/// Any extension of a path ending at `v` stays inside this region, so
/// `len + region` bounds the order of every such extension.
#[inline]
fn region(g: &Graph, v: usize, unvisited: u64) -> usize {
    let start = g.neighbors(v) & unvisited;
    if start == 0 {
        return 0;
    }
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0;
        for u in Bits(frontier) {
            next |= g.neighbors(u);
        }
        next &= unvisited & !seen;
        seen |= next;
        frontier = next;
    }
    seen.count_ones() as usize
}

struct Longest<'g> {
    g: &'g Graph,
    best: usize,
    all: u64,
}

impl Longest<'_> {
    // Returns true once a Hamilton path is found.
    fn walk(&mut self, v: usize, visited: u64, len: usize) -> bool {
        if len > self.best {
            self.best = len;
            if len == self.g.order() {
                return true;
            }
        }
        let unvisited = self.all & !visited;
        let free = self.g.neighbors(v) & unvisited;
        if free == 0 || len + region(self.g, v, unvisited) <= self.best {
            return false;
        }
        for w in Bits(free) {
            if self.walk(w, visited | 1 << w, len + 1) {
                return true;
            }
        }
        false
    }
}

/// Detour order: the maximum number of vertices on a simple path.
pub fn detour_order(g: &Graph) -> usize {
    let all = g.vertex_mask();
    let mut search = Longest { g, best: 1, all };
    let mut done = 0u64;
    for s in 0..g.order() {
        if done & (1 << s) != 0 {
            continue;
        }
        let component = g.reach(s, all);
        done |= component;
        if component.count_ones() as usize <= search.best {
            continue;
        }
        for start in Bits(component) {
            if search.walk(start, 1 << start, 1) {
                return search.best;
            }
            if search.best == component.count_ones() as usize {
                break;
            }
        }
    }
    search.best
}

/// Configurable exhaustive detour enumeration.
///
/// ```
/// use detour_core::{DetourSearch, Graph};
///
/// let c5 = Graph::cycle(5).unwrap();
/// let report = DetourSearch::new(&c5).collect_paths(true).run().unwrap();
/// assert_eq!((report.order, report.count), (5, 5));
/// ```
#[derive(Debug, Clone)]
pub struct DetourSearch<'g> {
    g: &'g Graph,
    collect: bool,
    edge_counts: bool,
    limit: usize,
}

struct Emitter<'a> {
    g: &'a Graph,
    target: usize,
    all: u64,
    stack: Vec<usize>,
    emitted: u64,
    directed: u64,
    paths: Option<Vec<Path>>,
    limit: usize,
    edge_tally: Option<Vec<u64>>,
}

impl Emitter<'_> {
    fn walk(&mut self, v: usize, visited: u64) -> Result<()> {
        let len = self.stack.len();
        if len == self.target {
            return self.complete(v);
        }
        let unvisited = self.all & !visited;
        let free = self.g.neighbors(v) & unvisited;
        if free == 0 || len + region(self.g, v, unvisited) < self.target {
            return Ok(());
        }
        for w in Bits(free) {
            self.stack.push(w);
            self.walk(w, visited | 1 << w)?;
            self.stack.pop();
        }
        Ok(())
    }

    fn complete(&mut self, last: usize) -> Result<()> {
        self.directed = self.directed.checked_add(1).ok_or(Error::CountOverflow)?;
        if self.stack[0] >= last {
            return Ok(());
        }
        self.emitted = self.emitted.checked_add(1).ok_or(Error::CountOverflow)?;
        if let Some(tally) = self.edge_tally.as_mut() {
            let n = self.g.order();
            for w in self.stack.windows(2) {
                let (a, b) = if w[0] < w[1] {
                    (w[0], w[1])
                } else {
                    (w[1], w[0])
                };
                tally[a * n + b] += 1;
            }
        }
        if let Some(paths) = self.paths.as_mut() {
            if paths.len() >= self.limit {
                return Err(Error::EmissionLimit {
                    limit: self.limit,
                    emitted: paths.len(),
                });
            }
            paths.push(Path::from_trusted(self.stack.clone()));
        }
        Ok(())
    }
}

impl<'g> DetourSearch<'g> {
    pub fn new(g: &'g Graph) -> Self {
        DetourSearch {
            g,
            collect: false,
            edge_counts: false,
            limit: DEFAULT_EMISSION_LIMIT,
        }
    }

    /// Keep the explicit list of detours.
    pub fn collect_paths(mut self, yes: bool) -> Self {
        self.collect = yes;
        self
    }

    /// Tally, for every edge, the number of detours through it.
    pub fn edge_counts(mut self, yes: bool) -> Self {
        self.edge_counts = yes;
        self
    }

    /// Maximum number of detours kept when collecting paths.
    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn run(&self) -> Result<DetourReport> {
        let g = self.g;
        let n = g.order();
        let target = detour_order(g);
        let mut em = Emitter {
            g,
            target,
            all: g.vertex_mask(),
            stack: Vec::with_capacity(target),
            emitted: 0,
            directed: 0,
            paths: self.collect.then(Vec::new),
            limit: self.limit,
            edge_tally: self.edge_counts.then(|| vec![0u64; n * n]),
        };
        if target == 1 {
            // Edgeless: every vertex is its own detour.
            if let Some(paths) = em.paths.as_mut() {
                if n > self.limit {
                    return Err(Error::EmissionLimit {
                        limit: self.limit,
                        emitted: self.limit,
                    });
                }
                paths.extend((0..n).map(|v| Path::from_trusted(vec![v])));
            }
            em.emitted = n as u64;
            em.directed = n as u64;
        } else {
            for s in 0..n {
                em.stack.push(s);
                em.walk(s, 1 << s)?;
                em.stack.pop();
            }
            debug_assert_eq!(em.directed, 2 * em.emitted);
        }
        let edge_counts = em.edge_tally.map(|tally| {
            g.edges()
                .map(|e: Edge| (e, tally[e.u() * n + e.v()]))
                .collect::<BTreeMap<_, _>>()
        });
        let detours = em.paths.map(|mut p| {
            p.sort_unstable();
            p
        });
        Ok(DetourReport {
            order: target,
            count: em.emitted,
            directed_paths: em.directed,
            detours,
            edge_counts,
        })
    }
}
