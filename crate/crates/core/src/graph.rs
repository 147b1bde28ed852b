//! Bitset-backed simple undirected graphs with up to 64 vertices.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest supported order; one adjacency row fits a `u64`.
pub const MAX_ORDER: usize = 64;

/// Largest order accepted by [`Graph::vertex_connectivity`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 20;

/// An undirected edge, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            core::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            core::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency is a bitmask of the neighbours of `v`. Rows are
/// kept symmetric and irreflexive by every constructor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask, lowest first.
#[derive(Clone)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        Ok(Graph {
            n,
            adj: alloc::vec![0; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.insert_edge(Edge::new(a, b)?)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::FamilyOrder {
                family: "cycle",
                order: n,
            });
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn path_graph(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Builds a graph from raw adjacency rows, checking symmetry.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        let g = Graph { n, adj: rows };
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let all = full_mask(n);
        for v in 0..n {
            if g.adj[v] & (1u64 << v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            if g.adj[v] & !all != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (g.adj[v] & !all).trailing_zeros() as usize,
                    n,
                });
            }
            for w in Bits(g.adj[v]) {
                if g.adj[w] & (1u64 << v) == 0 {
                    return Err(Error::NotAdjacent(w, v));
                }
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn insert_edge(&mut self, e: Edge) -> Result<()> {
        self.check_vertex(e.v)?;
        if self.has_edge(e.u, e.v) {
            return Err(Error::DuplicateEdge(e));
        }
        self.adj[e.u] |= 1u64 << e.v;
        self.adj[e.v] |= 1u64 << e.u;
        Ok(())
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & (1u64 << b) != 0
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n)
            .flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| Edge { u, v }))
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Minimum degree, δ(G).
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Vertices reachable from `start` using only vertices in `allowed`.
    /// `start` itself is included whether or not it is allowed.
    pub fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    fn connected_within(&self, alive: u64) -> bool {
        if alive == 0 {
            return true;
        }
        let start = alive.trailing_zeros() as usize;
        self.reach(start, alive) == alive
    }

    /// Vertex connectivity κ(G) by deleting vertex subsets in order of
    /// increasing size. Complete graphs give `n - 1`.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        if self.n > BRUTE_FORCE_MAX_ORDER {
            return Err(Error::BruteForceLimit {
                n: self.n,
                max: BRUTE_FORCE_MAX_ORDER,
            });
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let all = self.vertex_mask();
        // Only subsets leaving at least two vertices can disconnect.
        for size in 1..self.n.saturating_sub(1) {
            let mut cut: u64 = (1u64 << size) - 1;
            while cut <= all {
                if !self.connected_within(all & !cut) {
                    return Ok(size);
                }
                cut = next_combination(cut);
            }
        }
        Ok(self.n - 1)
    }

    /// Replaces `e = (a, b)` by a path `a, n, n+1, .., n+t-1, b` through `t`
    /// fresh vertices appended at the end of the labeling.
    pub fn subdivide(&self, e: Edge, t: usize) -> Result<Graph> {
        if !self.contains_edge(e) {
            return Err(Error::NotAnEdge(e));
        }
        if t == 0 {
            return Ok(self.clone());
        }
        let n = self.n + t;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        let mut g = Graph { n, adj };
        g.adj[e.u] &= !(1u64 << e.v);
        g.adj[e.v] &= !(1u64 << e.u);
        let mut prev = e.u;
        for fresh in self.n..n {
            g.insert_edge(Edge::new(prev, fresh)?)?;
            prev = fresh;
        }
        g.insert_edge(Edge::new(prev, e.v)?)?;
        Ok(g)
    }

    /// Returns a copy with `e` added.
    pub fn add_edge(&self, e: Edge) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(e)?;
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::OrderMismatch(perm.len(), self.n));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            if seen & (1u64 << p) != 0 {
                return Err(Error::RepeatedVertex(p));
            }
            seen |= 1u64 << p;
        }
        let mut g = Graph::empty(self.n)?;
        for e in self.edges() {
            g.insert_edge(Edge::new(perm[e.u], perm[e.v])?)?;
        }
        Ok(g)
    }
}

/// Next larger integer with the same popcount (Gosper's hack).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    if r == 0 {
        return u64::MAX;
    }
    (((r ^ x) >> 2) / c) | r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn edge_normalizes() {
        let e = Edge::new(5, 2).unwrap();
        assert_eq!((e.u(), e.v()), (2, 5));
        assert_eq!(Edge::new(3, 3), Err(Error::SelfLoop(3)));
    }

    #[test]
    fn rejects_bad_orders_and_edges() {
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
        assert!(matches!(Graph::empty(65), Err(Error::OrderTooLarge { .. })));
        assert!(Graph::empty(64).is_ok());
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(Graph::cycle(4).unwrap().min_degree(), 2);
        let b = bowtie();
        assert_eq!(b.min_degree(), 2);
        assert_eq!(b.degree(0), 4);
        assert_eq!(families::h9().min_degree(), 2);
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::cycle(4).unwrap().is_connected());
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(
            two_triangles.vertex_connectivity(),
            Err(Error::Disconnected)
        );
        assert!(families::h9().is_connected());
    }

    #[test]
    fn vertex_connectivity_examples() {
        assert_eq!(Graph::complete(4).unwrap().vertex_connectivity(), Ok(3));
        assert_eq!(Graph::complete(1).unwrap().vertex_connectivity(), Ok(0));
        assert_eq!(Graph::complete(2).unwrap().vertex_connectivity(), Ok(1));
        assert_eq!(Graph::cycle(6).unwrap().vertex_connectivity(), Ok(2));
        let h9 = families::h9();
        assert_eq!(h9.vertex_connectivity(), Ok(1));
        // 4 separates {0,1,2,3} from {5,6,7,8}
        let alive = h9.vertex_mask() & !(1 << 4);
        assert_eq!(h9.reach(0, alive), 0b1111);
        let m9 = h9.add_edge(Edge::new(2, 6).unwrap()).unwrap();
        assert_eq!(m9.vertex_connectivity(), Ok(2));
        assert!(matches!(
            Graph::cycle(21).unwrap().vertex_connectivity(),
            Err(Error::BruteForceLimit { .. })
        ));
    }

    #[test]
    fn subdivide_examples() {
        let c3 = Graph::cycle(3).unwrap();
        let c4 = c3.subdivide(Edge::new(0, 1).unwrap(), 1).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.size(), 4);
        assert_eq!(c4.min_degree(), 2);
        assert!(c4.has_edge(0, 3) && c4.has_edge(3, 1) && !c4.has_edge(0, 1));
        assert_eq!(c3.subdivide(Edge::new(1, 2).unwrap(), 0).unwrap(), c3);
        assert_eq!(
            c3.subdivide(Edge::new(0, 1).unwrap(), 2).unwrap(),
            Graph::cycle(5).unwrap().relabel(&[0, 3, 4, 1, 2]).unwrap()
        );
        let p3 = Graph::path_graph(3).unwrap();
        assert_eq!(
            p3.subdivide(Edge::new(0, 2).unwrap(), 1),
            Err(Error::NotAnEdge(Edge::new(0, 2).unwrap()))
        );
    }

    #[test]
    fn add_edge_examples() {
        let k2 = Graph::empty(2)
            .unwrap()
            .add_edge(Edge::new(0, 1).unwrap())
            .unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            c4.add_edge(Edge::new(0, 1).unwrap()),
            Err(Error::DuplicateEdge(Edge::new(0, 1).unwrap()))
        );
        let diamond = c4.add_edge(Edge::new(0, 2).unwrap()).unwrap();
        assert_eq!(diamond.size(), 5);
    }

    #[test]
    fn from_rows_checks_symmetry() {
        assert!(Graph::from_rows(alloc::vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(alloc::vec![0b01]).is_err());
        assert_eq!(
            Graph::from_rows(alloc::vec![0b10, 0b01]).unwrap(),
            Graph::complete(2).unwrap()
        );
    }

    #[test]
    fn gosper_walks_all_subsets() {
        let mut x = 0b111u64;
        let mut count = 0;
        while x < (1 << 6) {
            count += 1;
            x = next_combination(x);
        }
        assert_eq!(count, 20);
    }
}
