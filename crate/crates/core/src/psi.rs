//! The four or six detours generated by one boundary chord at each end.
//!
//! Given a detour `x_1, .., x_k` with chords `x_1 x_i` and `x_k x_j`,
//! rerouting through those chords yields four paths of order `k` when
//! `i <= j` and six when `i > j`. Indices here are 1-based so that `i` and
//! `j` name path positions directly; everything else in the crate is 0-based.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::Edge;
use crate::path::Path;
use crate::{Error, Result};

/// Vertices of `p` from position `a` to position `b` (1-based, inclusive),
/// walking backwards when `a > b`.
fn seg(p: &[usize], a: usize, b: usize, out: &mut Vec<usize>) {
    if a <= b {
        out.extend_from_slice(&p[a - 1..b]);
    } else {
        out.extend(p[b - 1..a].iter().rev());
    }
}

fn join(p: &[usize], pieces: &[(usize, usize)]) -> Path {
    let mut out = Vec::with_capacity(p.len());
    for &(a, b) in pieces {
        seg(p, a, b, &mut out);
    }
    Path::from_trusted(out)
}

fn check_indices(p: &Path, i: usize, j: usize) -> Result<usize> {
    let k = p.order();
    if k < 4 {
        return Err(Error::PathTooShort(k));
    }
    if i == k || j == 1 {
        return Err(Error::CycleCase);
    }
    if !(3..k).contains(&i) {
        return Err(Error::IndexOutOfRange {
            name: "i",
            value: i,
            min: 3,
            max: k - 1,
            order: k,
        });
    }
    if !(2..=k - 2).contains(&j) {
        return Err(Error::IndexOutOfRange {
            name: "j",
            value: j,
            min: 2,
            max: k - 2,
            order: k,
        });
    }
    Ok(k)
}

/// Detours built from `p` and the chords `x_1 x_i`, `x_k x_j`.
///
/// The first element is always `p` itself. Each returned path lies in
/// `p ∪ {x_1 x_i, x_k x_j}` and has the order of `p`.
pub fn psi_detours(p: &Path, i: usize, j: usize) -> Result<Vec<Path>> {
    let k = check_indices(p, i, j)?;
    let x = p.vertices();
    let paths = if i <= j {
        alloc::vec![
            p.clone(),
            join(x, &[(1, j), (k, j + 1)]),
            join(x, &[(i - 1, 1), (i, k)]),
            join(x, &[(i - 1, 1), (i, j), (k, j + 1)]),
        ]
    } else {
        alloc::vec![
            p.clone(),
            join(x, &[(1, j), (k, j + 1)]),
            join(x, &[(i - 1, 1), (i, k)]),
            join(x, &[(j - 1, 1), (i, k), (j, i - 1)]),
            join(x, &[(i + 1, k), (j, 1), (i, j + 1)]),
            join(x, &[(j - 1, 1), (i, j), (k, i + 1)]),
        ]
    };
    Ok(paths)
}

/// For each edge of `p`, the number of paths of [`psi_detours`] using it.
pub fn psi_edge_appearances(p: &Path, i: usize, j: usize) -> Result<BTreeMap<Edge, usize>> {
    let paths = psi_detours(p, i, j)?;
    let mut counts: BTreeMap<Edge, usize> = p.edges().map(|e| (e, 0)).collect();
    for q in &paths {
        for e in q.edges() {
            if let Some(c) = counts.get_mut(&e) {
                *c += 1;
            }
        }
    }
    Ok(counts)
}

/// Edges of `p` allowed to appear on fewer than four of the generated
/// detours: `x_{i-1} x_i` and `x_j x_{j+1}` when `i <= j`, and `x_i x_j`
/// when `i = j + 1`.
pub fn low_coverage_edges(p: &Path, i: usize, j: usize) -> Result<Vec<Edge>> {
    check_indices(p, i, j)?;
    let x = p.vertices();
    let edge = |a: usize, b: usize| Edge::new(x[a - 1], x[b - 1]);
    if i <= j {
        Ok(alloc::vec![edge(i - 1, i)?, edge(j, j + 1)?])
    } else if i == j + 1 {
        Ok(alloc::vec![edge(j, i)?])
    } else {
        Ok(Vec::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn path(v: &[usize]) -> Path {
        Path::new(v.to_vec()).unwrap()
    }

    #[test]
    fn four_detours_when_i_le_j() {
        let p = path(&[1, 2, 3, 4, 5]);
        let got = psi_detours(&p, 3, 3).unwrap();
        assert_eq!(
            got,
            vec![
                path(&[1, 2, 3, 4, 5]),
                path(&[1, 2, 3, 5, 4]),
                path(&[2, 1, 3, 4, 5]),
                path(&[2, 1, 3, 5, 4]),
            ]
        );
    }

    #[test]
    fn six_detours_when_i_gt_j() {
        let p = path(&[1, 2, 3, 4, 5]);
        let got = psi_detours(&p, 4, 2).unwrap();
        assert_eq!(
            got,
            vec![
                path(&[1, 2, 3, 4, 5]),
                path(&[1, 2, 5, 4, 3]),
                path(&[3, 2, 1, 4, 5]),
                path(&[1, 4, 5, 2, 3]),
                path(&[5, 2, 1, 4, 3]),
                path(&[1, 4, 3, 2, 5]),
            ]
        );
    }

    #[test]
    fn rejects_bad_indices() {
        let p = path(&[1, 2, 3, 4, 5]);
        assert_eq!(psi_detours(&p, 5, 3), Err(Error::CycleCase));
        assert_eq!(psi_detours(&p, 3, 1), Err(Error::CycleCase));
        assert!(matches!(
            psi_detours(&p, 2, 3),
            Err(Error::IndexOutOfRange { name: "i", .. })
        ));
        assert!(matches!(
            psi_detours(&p, 3, 4),
            Err(Error::IndexOutOfRange { name: "j", .. })
        ));
        assert!(matches!(
            psi_detours(&p, 9, 2),
            Err(Error::IndexOutOfRange { name: "i", .. })
        ));
        assert_eq!(
            psi_detours(&path(&[0, 1, 2]), 3, 2),
            Err(Error::PathTooShort(3))
        );
    }

    #[test]
    fn exceptions_match_appearance_counts() {
        let p = path(&[0, 1, 2, 3, 4, 5, 6]);
        let counts = psi_edge_appearances(&p, 3, 5).unwrap();
        let ex = low_coverage_edges(&p, 3, 5).unwrap();
        assert_eq!(ex, vec![Edge::new(1, 2).unwrap(), Edge::new(4, 5).unwrap()]);
        for (e, c) in counts {
            if ex.contains(&e) {
                assert_eq!(c, 2);
            } else {
                assert_eq!(c, 4);
            }
        }
        let counts = psi_edge_appearances(&p, 4, 3).unwrap();
        let ex = low_coverage_edges(&p, 4, 3).unwrap();
        assert_eq!(ex, vec![Edge::new(2, 3).unwrap()]);
        assert_eq!(counts[&Edge::new(2, 3).unwrap()], 2);
        assert!(counts.values().filter(|&&c| c < 4).count() == 1);
    }
}
