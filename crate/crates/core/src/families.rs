//! Graphs with few detours.
//!
//! * `cycle(n)`: `C_n`, with `n` detours (4 at `n = 4`).
//! * `bowtie`: two triangles sharing a vertex, 4 detours.
//! * `triangle_cycle(n)`: a triangle and `C_{n-2}` sharing a vertex, 4
//!   detours for every `n >= 5` (the bowtie at `n = 5`).
//! * `H9`: the order-9 graph of connectivity 1 whose detours are exactly
//!   the nine paths through `0..=8` listed in [`H9_DETOURS`].
//! * `M(n)`: `H9 + (2,6)` with `(7,8)` subdivided `n - 9` times;
//!   connectivity 2, 9 detours.
//! * `H_extended(n)`: a validated order-10 base with its extension edge
//!   subdivided `n - 10` times.
//!
//! `H9` is the union of the edges of its nine detours. Any graph with that
//! detour set contains those edges, and the union already has exactly
//! those nine detours.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::engine::DetourSearch;
use crate::graph::{Edge, Graph};
use crate::{Error, Result};

/// The nine detours of `H9`.
pub const H9_DETOURS: [[usize; 9]; 9] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8],
    [0, 1, 2, 3, 4, 5, 6, 8, 7],
    [0, 1, 2, 3, 4, 7, 8, 6, 5],
    [1, 0, 2, 3, 4, 5, 6, 7, 8],
    [1, 0, 2, 3, 4, 5, 6, 8, 7],
    [1, 0, 2, 3, 4, 7, 8, 6, 5],
    [3, 2, 0, 1, 4, 5, 6, 7, 8],
    [3, 2, 0, 1, 4, 5, 6, 8, 7],
    [3, 2, 0, 1, 4, 7, 8, 6, 5],
];

/// Extension edge of an order-10 base graph, as labelled in the
/// subdivision rule `H_n = H_10` with `(4,5)` subdivided `n - 10` times.
pub const H10_EXTENSION_EDGE: (usize, usize) = (4, 5);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyId {
    Cycle(usize),
    Bowtie,
    TriangleCycle(usize),
    H9,
    M(usize),
    HExtended {
        order: usize,
        base: Graph,
        edge: Edge,
    },
}

impl FamilyId {
    /// Parses a family name; `H_extended` needs a base graph and is not
    /// accepted here.
    pub fn from_name(name: &str, order: usize) -> Option<FamilyId> {
        match name {
            "cycle" | "C" => Some(FamilyId::Cycle(order)),
            "bowtie" => Some(FamilyId::Bowtie),
            "triangle_cycle" | "G" => Some(FamilyId::TriangleCycle(order)),
            "H9" => Some(FamilyId::H9),
            "M" => Some(FamilyId::M(order)),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Cycle(_) => "cycle",
            FamilyId::Bowtie => "bowtie",
            FamilyId::TriangleCycle(_) => "triangle_cycle",
            FamilyId::H9 => "H9",
            FamilyId::M(_) => "M",
            FamilyId::HExtended { .. } => "H_extended",
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilyId::Cycle(n) | FamilyId::TriangleCycle(n) | FamilyId::M(n) => n,
            FamilyId::Bowtie => 5,
            FamilyId::H9 => 9,
            FamilyId::HExtended { order, .. } => order,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.order())
    }
}

fn out_of_range(id: &FamilyId) -> Error {
    Error::FamilyOrder {
        family: id.name(),
        order: id.order(),
    }
}

pub fn build(id: &FamilyId) -> Result<Graph> {
    match id {
        FamilyId::Cycle(n) if *n >= 3 => Graph::cycle(*n),
        FamilyId::Bowtie => Ok(bowtie()),
        FamilyId::TriangleCycle(n) if *n >= 5 => triangle_cycle(*n),
        FamilyId::H9 => Ok(h9()),
        FamilyId::M(n) if *n >= 9 => m(*n),
        FamilyId::HExtended { order, base, edge } if *order >= 11 => {
            if !validate_h10(base, *edge).is_valid() {
                return Err(Error::InvalidBase);
            }
            base.subdivide(*edge, order - 10)
        }
        _ => Err(out_of_range(id)),
    }
}

pub fn bowtie() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
        .expect("static edge list")
}

/// Triangle `{0, 1, 2}` and the cycle `0, 3, 4, .., n-1` sharing vertex 0.
pub fn triangle_cycle(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::FamilyOrder {
            family: "triangle_cycle",
            order: n,
        });
    }
    let mut edges: Vec<(usize, usize)> = alloc::vec![(0, 1), (1, 2), (0, 2), (0, 3), (n - 1, 0)];
    edges.extend((3..n - 1).map(|v| (v, v + 1)));
    Graph::from_edges(n, edges)
}

pub fn h9() -> Graph {
    let mut g = Graph::empty(9).expect("order 9");
    for p in &H9_DETOURS {
        for w in p.windows(2) {
            let e = Edge::new(w[0], w[1]).expect("distinct");
            if !g.contains_edge(e) {
                g.insert_edge(e).expect("in range");
            }
        }
    }
    g
}

pub fn m(n: usize) -> Result<Graph> {
    if n < 9 {
        return Err(Error::FamilyOrder {
            family: "M",
            order: n,
        });
    }
    h9().add_edge(Edge::new(2, 6)?)?
        .subdivide(Edge::new(7, 8)?, n - 9)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H10Failure {
    Order(usize),
    Disconnected,
    MinDegree(usize),
    Connectivity(usize),
    NotTraceable { detour_order: usize },
    DetourCount(u64),
    ExtensionNotAnEdge(Edge),
    ExtensionCoverage { edge: Edge, detours: u64 },
    Engine(Error),
}

impl fmt::Display for H10Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H10Failure::Order(n) => write!(f, "order {n}, expected 10"),
            H10Failure::Disconnected => f.write_str("graph is disconnected"),
            H10Failure::MinDegree(d) => write!(f, "minimum degree {d} < 2"),
            H10Failure::Connectivity(k) => write!(f, "connectivity {k}, expected 1"),
            H10Failure::NotTraceable { detour_order } => {
                write!(f, "not traceable (detour order {detour_order})")
            }
            H10Failure::DetourCount(c) => write!(f, "{c} detours, expected 9"),
            H10Failure::ExtensionNotAnEdge(e) => write!(f, "extension edge {e} is missing"),
            H10Failure::ExtensionCoverage { edge, detours } => {
                write!(f, "extension edge {edge} lies on {detours} of 9 detours")
            }
            H10Failure::Engine(e) => write!(f, "engine error: {e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct H10Validation {
    pub failures: Vec<H10Failure>,
}

impl H10Validation {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn diagnostics(&self) -> Vec<String> {
        use alloc::string::ToString;
        self.failures.iter().map(ToString::to_string).collect()
    }
}

/// Checks whether `g` can serve as the order-10 base of the `H_n` chain
/// with `edge` as the subdivided edge: order 10, connected, δ >= 2, κ = 1,
/// traceable, 9 detours, and `edge` on all of them.
pub fn validate_h10(g: &Graph, edge: Edge) -> H10Validation {
    let mut failures = Vec::new();
    if g.order() != 10 {
        failures.push(H10Failure::Order(g.order()));
    }
    let delta = g.min_degree();
    if delta < 2 {
        failures.push(H10Failure::MinDegree(delta));
    }
    match g.vertex_connectivity() {
        Ok(1) => {}
        Ok(k) => failures.push(H10Failure::Connectivity(k)),
        Err(Error::Disconnected) => failures.push(H10Failure::Disconnected),
        Err(e) => failures.push(H10Failure::Engine(e)),
    }
    match DetourSearch::new(g).edge_counts(true).run() {
        Ok(report) => {
            if report.order != g.order() {
                failures.push(H10Failure::NotTraceable {
                    detour_order: report.order,
                });
            }
            if report.count != 9 {
                failures.push(H10Failure::DetourCount(report.count));
            }
            match report.edge_counts.and_then(|c| c.get(&edge).copied()) {
                None => failures.push(H10Failure::ExtensionNotAnEdge(edge)),
                Some(c) if c != report.count => {
                    failures.push(H10Failure::ExtensionCoverage { edge, detours: c })
                }
                Some(_) => {}
            }
        }
        Err(e) => failures.push(H10Failure::Engine(e)),
    }
    H10Validation { failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{count_detours_dp, detour_order};

    fn f(g: &Graph) -> u64 {
        count_detours_dp(g).unwrap().count
    }

    #[test]
    fn h9_edge_list() {
        let expected = Graph::from_edges(
            9,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (1, 4),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (6, 8),
                (7, 8),
                (4, 7),
            ],
        )
        .unwrap();
        assert_eq!(h9(), expected);
    }

    #[test]
    fn build_examples() {
        let c4 = build(&FamilyId::Cycle(4)).unwrap();
        assert_eq!(f(&c4), 4);
        let m9 = build(&FamilyId::M(9)).unwrap();
        assert_eq!(m9.order(), 9);
        assert_eq!(m9.min_degree(), 2);
        assert_eq!(m9.vertex_connectivity(), Ok(2));
        assert_eq!(f(&m9), 9);
        let g6 = build(&FamilyId::TriangleCycle(6)).unwrap();
        assert_eq!(f(&g6), 4);
        let m14 = build(&FamilyId::M(14)).unwrap();
        assert_eq!(m14.order(), 14);
        assert_eq!(f(&m14), 9);
    }

    #[test]
    fn triangle_cycle_five_is_bowtie() {
        assert_eq!(triangle_cycle(5).unwrap(), bowtie());
        for n in 5..=12 {
            let g = triangle_cycle(n).unwrap();
            assert_eq!(g.min_degree(), 2);
            assert_eq!(g.vertex_connectivity(), Ok(1));
            assert_eq!(detour_order(&g), n);
            assert_eq!(f(&g), 4, "n = {n}");
        }
    }

    #[test]
    fn cycles_have_n_detours() {
        for n in 3..=10 {
            assert_eq!(f(&Graph::cycle(n).unwrap()), n as u64);
        }
    }

    #[test]
    fn order_ranges() {
        assert!(build(&FamilyId::Cycle(2)).is_err());
        assert!(build(&FamilyId::TriangleCycle(4)).is_err());
        assert!(build(&FamilyId::M(8)).is_err());
        assert_eq!(FamilyId::from_name("bowtie", 0), Some(FamilyId::Bowtie));
        assert_eq!(FamilyId::from_name("nope", 3), None);
    }

    #[test]
    fn validate_h10_examples() {
        let e45 = Edge::new(4, 5).unwrap();
        let v = validate_h10(&h9(), e45);
        assert_eq!(v.failures[0], H10Failure::Order(9));

        let v = validate_h10(&m(9).unwrap(), e45);
        assert!(v.failures.contains(&H10Failure::Connectivity(2)));
        assert!(!v.is_valid());

        // H9 with (7,8) subdivided once: every detour of H9 uses (7,8).
        let base = h9().subdivide(Edge::new(7, 8).unwrap(), 1).unwrap();
        let ext = Edge::new(7, 9).unwrap();
        let v = validate_h10(&base, ext);
        assert!(v.is_valid(), "{:?}", v.diagnostics());
        // (4,5) is on only some of its detours
        let v = validate_h10(&base, e45);
        assert!(matches!(
            v.failures.as_slice(),
            [H10Failure::ExtensionCoverage { .. }]
        ));

        let id = FamilyId::HExtended {
            order: 13,
            base: base.clone(),
            edge: ext,
        };
        let h13 = build(&id).unwrap();
        assert_eq!(h13.order(), 13);
        assert_eq!(f(&h13), 9);
        assert_eq!(h13.vertex_connectivity(), Ok(1));

        let bad = FamilyId::HExtended {
            order: 12,
            base: m(10).unwrap(),
            edge: ext,
        };
        assert_eq!(build(&bad), Err(Error::InvalidBase));
    }
}
