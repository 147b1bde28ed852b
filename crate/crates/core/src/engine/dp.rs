//! Subset dynamic program over `(visited set, endpoint)` states.

use alloc::vec;

use super::DetourReport;
use crate::graph::{Bits, Graph};
use crate::{Error, Result};

/// Largest order the dynamic program accepts (`2^n * n` counters).
pub const DP_MAX_ORDER: usize = 20;

/// Counts detours by counting directed simple paths per `(subset, endpoint)`.
///
/// `table[mask * n + v]` is the number of directed paths that visit exactly
/// the vertices of `mask` and end at `v`.
pub fn count_detours_dp(g: &Graph) -> Result<DetourReport> {
    let n = g.order();
    if n > DP_MAX_ORDER {
        return Err(Error::DpCapacity {
            n,
            max: DP_MAX_ORDER,
        });
    }
    let states = 1usize << n;
    let mut table = vec![0u64; states * n];
    for v in 0..n {
        table[(1 << v) * n + v] = 1;
    }
    let mut best = 1u32;
    let mut best_total: u64 = n as u64;
    for mask in 1..states {
        let size = mask.count_ones();
        let mut total: u64 = 0;
        for v in Bits(mask as u64) {
            let here = table[mask * n + v];
            if here == 0 {
                continue;
            }
            total = total.checked_add(here).ok_or(Error::CountOverflow)?;
            let free = g.neighbors(v) & !(mask as u64);
            for w in Bits(free) {
                let slot = &mut table[(mask | 1 << w) * n + w];
                *slot = slot.checked_add(here).ok_or(Error::CountOverflow)?;
            }
        }
        if total == 0 || size < best {
            continue;
        }
        if size > best {
            best = size;
            best_total = total;
        } else if size > 1 {
            best_total = best_total.checked_add(total).ok_or(Error::CountOverflow)?;
        }
    }
    let order = best as usize;
    let count = if order == 1 { n as u64 } else { best_total / 2 };
    Ok(DetourReport {
        order,
        count,
        directed_paths: best_total,
        detours: None,
        edge_counts: None,
    })
}
