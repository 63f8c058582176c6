//! Exact maximum matching size by branch and bound.
//!
//! Vertices are branched on rather than edges: the chosen vertex (minimum
//! positive degree in what remains) is either matched to one of its live
//! neighbors or left exposed. A degree-one vertex is always matched to its
//! neighbor. The bound is `current + live_non_isolated / 2`.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_MATCHING_ORDER: usize = 24;

/// ν(G), the maximum number of pairwise disjoint edges.
pub fn max_matching_size(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_MATCHING_ORDER {
        return Err(Error::UnsupportedSize {
            what: "matching order",
            got: n,
            cap: MAX_MATCHING_ORDER,
        });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.row_word(v) as u32).collect();
    let alive = (1u32 << n) - 1;
    let mut best = greedy(&adj, alive);
    branch(&adj, alive, 0, &mut best);
    Ok(best)
}

fn greedy(adj: &[u32], mut alive: u32) -> usize {
    let mut size = 0;
    while alive != 0 {
        let v = alive.trailing_zeros() as usize;
        alive &= !(1 << v);
        let nb = adj[v] & alive;
        if nb != 0 {
            let w = nb.trailing_zeros() as usize;
            alive &= !(1 << w);
            size += 1;
        }
    }
    size
}

fn branch(adj: &[u32], mut alive: u32, current: usize, best: &mut usize) {
    let mut pick: Option<(u32, usize)> = None;
    let mut it = alive;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        let d = (adj[v] & alive).count_ones();
        if d == 0 {
            alive &= !(1 << v);
        } else if pick.is_none_or(|(bd, _)| d < bd) {
            pick = Some((d, v));
        }
    }
    if current + alive.count_ones() as usize / 2 <= *best {
        return;
    }
    let Some((d, v)) = pick else {
        *best = (*best).max(current);
        return;
    };
    let nb = adj[v] & alive;
    let without_v = alive & !(1 << v);
    if d == 1 {
        let w = nb.trailing_zeros() as usize;
        branch(adj, without_v & !(1 << w), current + 1, best);
        return;
    }
    let mut it = nb;
    while it != 0 {
        let w = it.trailing_zeros() as usize;
        it &= it - 1;
        branch(adj, without_v & !(1 << w), current + 1, best);
    }
    branch(adj, without_v, current, best);
}
