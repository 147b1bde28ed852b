//! Every labeled graph of a small order.

use detour_core::Graph;

use crate::error::{Result, SearchError};
use crate::filter::FilterSpec;

/// Largest order enumerated (2^21 labeled graphs at order 7).
pub const LABELED_MAX_ORDER: usize = 7;

/// All labeled graphs on `n` vertices passing `spec`'s structural
/// predicates, each exactly once.
///
/// Bit `t` of the enumeration counter is the `t`-th vertex pair in graph6
/// column order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn labeled_graphs(n: usize, spec: &FilterSpec) -> Result<impl Iterator<Item = Graph> + '_> {
    if n > LABELED_MAX_ORDER {
        return Err(SearchError::GeneratorCapacity {
            n,
            max: LABELED_MAX_ORDER,
        });
    }
    if n == 0 {
        return Err(detour_core::Error::EmptyGraph.into());
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut rows = vec![0u64; n];
        for (t, &(i, j)) in pairs.iter().enumerate() {
            if mask >> t & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        let g = Graph::from_rows(rows).expect("symmetric rows");
        spec.structural_match(&g).then_some(g)
    }))
}
