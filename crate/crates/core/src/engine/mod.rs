//! Detour order, detour counts and per-edge detour statistics.
//!
//! Two engines compute the same `(order, count)` pair independently:
//! [`count_detours_dp`] (subset dynamic program, order <= 20) and
//! [`DetourSearch`] (branch-and-bound DFS, any order). Only the DFS engine
//! lists detours or tallies edges.

mod dfs;
mod dp;

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

pub use dfs::{detour_order, DetourSearch, DEFAULT_EMISSION_LIMIT};
pub use dp::{count_detours_dp, DP_MAX_ORDER};

use crate::chords::{classify_chord, ChordClass};
use crate::graph::{Edge, Graph};
use crate::path::Path;
use crate::{Error, Result};

/// Result of a detour computation on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetourReport {
    /// Detour order L: vertices on a longest path.
    pub order: usize,
    /// f(G): detours counted once per undirected path.
    pub count: u64,
    /// Longest paths counted with orientation (`2 * count` when `order >= 2`).
    pub directed_paths: u64,
    /// Detours in canonical orientation, sorted lexicographically.
    pub detours: Option<Vec<Path>>,
    /// Detours through each edge of the graph, including zeros.
    pub edge_counts: Option<BTreeMap<Edge, u64>>,
}

impl DetourReport {
    /// The guaranteed lower bound `min(2δ + 1, n)` on the detour order of a
    /// connected graph.
    pub fn order_lower_bound(g: &Graph) -> usize {
        (2 * g.min_degree() + 1).min(g.order())
    }
}

/// Counts detours with the DFS engine (no list kept).
pub fn count_detours_dfs(g: &Graph) -> Result<DetourReport> {
    DetourSearch::new(g).run()
}

/// Lists every detour in canonical orientation, with edge tallies.
pub fn enumerate_detours(g: &Graph) -> Result<DetourReport> {
    DetourSearch::new(g)
        .collect_paths(true)
        .edge_counts(true)
        .run()
}

/// Number of detours through every edge of `g`.
pub fn edge_detour_counts(g: &Graph) -> Result<BTreeMap<Edge, u64>> {
    let report = DetourSearch::new(g).edge_counts(true).run()?;
    Ok(report.edge_counts.unwrap_or_default())
}

/// Number of detours of `g` whose edge set contains `e`.
pub fn detours_through_edge(g: &Graph, e: Edge) -> Result<u64> {
    if !g.contains_edge(e) {
        return Err(Error::NotAnEdge(e));
    }
    Ok(edge_detour_counts(g)?.get(&e).copied().unwrap_or(0))
}

/// Checks that `p` is a path of `g` with the detour order.
pub fn validate_detour(g: &Graph, p: &Path) -> Result<usize> {
    p.validate_in(g)?;
    let order = detour_order(g);
    if p.order() != order {
        return Err(Error::NotADetour {
            expected: order,
            found: p.order(),
        });
    }
    Ok(order)
}

/// Inner chords of the detour `p` that lie on at least one detour of `g`.
pub fn omega(g: &Graph, p: &Path) -> Result<BTreeSet<Edge>> {
    validate_detour(g, p)?;
    let counts = edge_detour_counts(g)?;
    Ok(counts
        .into_iter()
        .filter(|&(e, c)| c > 0 && classify_chord(p, e) == ChordClass::Inner)
        .map(|(e, _)| e)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use alloc::vec;
    use alloc::vec::Vec;

    /// Independent oracle: every ordered sequence of distinct vertices,
    /// kept when consecutive vertices are adjacent. No pruning.
    fn brute_force(g: &Graph) -> (usize, Vec<Vec<usize>>) {
        fn extend(g: &Graph, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(seq.clone());
            for v in 0..g.order() {
                if seq.contains(&v) {
                    continue;
                }
                if g.has_edge(*seq.last().unwrap(), v) {
                    seq.push(v);
                    extend(g, seq, out);
                    seq.pop();
                }
            }
        }
        let mut all = Vec::new();
        for s in 0..g.order() {
            extend(g, &mut vec![s], &mut all);
        }
        let l = all.iter().map(Vec::len).max().unwrap();
        let mut longest: Vec<Vec<usize>> = all
            .into_iter()
            .filter(|p| p.len() == l)
            .map(|mut p| {
                if p[0] > p[l - 1] {
                    p.reverse();
                }
                p
            })
            .collect();
        longest.sort();
        longest.dedup();
        (l, longest)
    }

    fn bowtie() -> Graph {
        families::bowtie()
    }

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn oracle_values() {
        // frozen from `brute_force`
        assert_eq!(brute_force(&Graph::complete(3).unwrap()).1.len(), 3);
        assert_eq!(brute_force(&Graph::complete(4).unwrap()).1.len(), 12);
        assert_eq!(brute_force(&bowtie()).0, 5);
        assert_eq!(brute_force(&Graph::cycle(5).unwrap()).1.len(), 5);
    }

    #[test]
    fn detour_order_examples() {
        assert_eq!(detour_order(&Graph::path_graph(3).unwrap()), 3);
        assert_eq!(detour_order(&families::h9()), 9);
        assert_eq!(detour_order(&bowtie()), 5);
        assert_eq!(detour_order(&Graph::empty(3).unwrap()), 1);
        // star K_{1,3}
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(detour_order(&star), 3);
    }

    #[test]
    fn dp_examples() {
        let r = count_detours_dp(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!((r.order, r.count), (3, 3));
        let r = count_detours_dp(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!((r.order, r.count), (4, 4));
        let r = count_detours_dp(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!((r.order, r.count, r.directed_paths), (4, 12, 24));
        assert!(matches!(
            count_detours_dp(&Graph::cycle(21).unwrap()),
            Err(Error::DpCapacity { n: 21, max: 20 })
        ));
    }

    #[test]
    fn single_vertex_and_edgeless() {
        let k1 = Graph::empty(1).unwrap();
        let r = count_detours_dp(&k1).unwrap();
        assert_eq!((r.order, r.count), (1, 1));
        let r = enumerate_detours(&k1).unwrap();
        assert_eq!((r.order, r.count), (1, 1));
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(count_detours_dp(&e3).unwrap().count, 3);
        let r = enumerate_detours(&e3).unwrap();
        assert_eq!(r.count, 3);
        assert_eq!(r.detours.unwrap().len(), 3);
    }

    #[test]
    fn enumerate_examples() {
        let k2 = Graph::complete(2).unwrap();
        let r = enumerate_detours(&k2).unwrap();
        assert_eq!(r.detours.unwrap(), vec![Path::new(vec![0, 1]).unwrap()]);

        let c5 = Graph::cycle(5).unwrap();
        let r = enumerate_detours(&c5).unwrap();
        assert_eq!(r.count, 5);
        let expected: Vec<Path> = brute_force(&c5)
            .1
            .into_iter()
            .map(|p| Path::new(p).unwrap())
            .collect();
        assert_eq!(r.detours.unwrap(), expected);
    }

    #[test]
    fn h9_detours_match_listed_sequences() {
        let listed: [[usize; 9]; 9] = [
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
        let mut expected: Vec<Path> = listed
            .iter()
            .map(|p| Path::new(p.to_vec()).unwrap().canonical())
            .collect();
        expected.sort();
        let r = enumerate_detours(&families::h9()).unwrap();
        assert_eq!(r.count, 9);
        assert_eq!(r.detours.unwrap(), expected);
    }

    #[test]
    fn emission_limit_truncates() {
        let k5 = Graph::complete(5).unwrap();
        let err = DetourSearch::new(&k5)
            .collect_paths(true)
            .limit(10)
            .run()
            .unwrap_err();
        assert_eq!(
            err,
            Error::EmissionLimit {
                limit: 10,
                emitted: 10
            }
        );
        // counting without a list is unaffected
        assert_eq!(DetourSearch::new(&k5).limit(10).run().unwrap().count, 60);
    }

    #[test]
    fn through_edge_examples() {
        let m9 = families::m(9).unwrap();
        assert_eq!(detours_through_edge(&m9, e(2, 6)), Ok(0));
        assert_eq!(detours_through_edge(&m9, e(7, 8)), Ok(9));
        let c4 = Graph::cycle(4).unwrap();
        for edge in c4.edges() {
            assert_eq!(detours_through_edge(&c4, edge), Ok(3));
        }
        assert_eq!(
            detours_through_edge(&c4, e(0, 2)),
            Err(Error::NotAnEdge(e(0, 2)))
        );
    }

    #[test]
    fn omega_examples() {
        let h9 = families::h9();
        let p = Path::new((0..9).collect()).unwrap();
        let got: Vec<Edge> = omega(&h9, &p).unwrap().into_iter().collect();
        assert_eq!(got, vec![e(1, 4), e(4, 7)]);

        let c6 = Graph::cycle(6).unwrap();
        let p = Path::new((0..6).collect()).unwrap();
        assert!(omega(&c6, &p).unwrap().is_empty());

        let b = bowtie();
        let p = Path::new(vec![1, 2, 0, 3, 4]).unwrap();
        assert!(omega(&b, &p).unwrap().is_empty());

        let short = Path::new(vec![1, 2, 0]).unwrap();
        assert_eq!(
            omega(&b, &short),
            Err(Error::NotADetour {
                expected: 5,
                found: 3
            })
        );
        let bogus = Path::new(vec![1, 3, 0, 2, 4]).unwrap();
        assert!(matches!(omega(&b, &bogus), Err(Error::NotAdjacent(1, 3))));
    }

    #[test]
    fn engines_match_oracle_on_small_graphs() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, &p)| p),
                )
                .unwrap();
                let (l, paths) = brute_force(&g);
                let dfs = enumerate_detours(&g).unwrap();
                let dp = count_detours_dp(&g).unwrap();
                let f = if l == 1 { n } else { paths.len() };
                assert_eq!((dfs.order, dfs.count as usize), (l, f));
                assert_eq!((dp.order, dp.count as usize), (l, f));
                assert_eq!(dp.directed_paths, dfs.directed_paths);
                if l > 1 {
                    let listed: Vec<Vec<usize>> = dfs
                        .detours
                        .unwrap()
                        .into_iter()
                        .map(Path::into_vertices)
                        .collect();
                    assert_eq!(listed, paths);
                }
            }
        }
    }
}
