//! Canonical labeling by exhaustive permutation search.
//!
//! Vertices are first split into an isomorphism-invariant ordered
//! partition (degree classes refined by neighbor colors). Among the
//! labelings that respect this partition, the canonical one minimizes the
//! column-major upper-triangle adjacency string. The search fixes one
//! position at a time, prunes branches whose prefix already exceeds the
//! best string, and skips a candidate when a twin of it (same neighborhood
//! up to each other) was already tried at the same position.

use super::graph6;
use super::Graph;
use crate::error::{Error, Result};

pub const MAX_CANON_ORDER: usize = 10;

/// Isomorphism-class identifier: the graph6 string of the canonical
/// relabeling. Two graphs get equal codes iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative.
    pub fn graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical codes are valid graph6")
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let perm = canonical_labeling(g)?;
    Ok(CanonicalForm(graph6::encode(&g.relabel(&perm))))
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedSize {
            what: "canonical form order",
            got: n,
            cap: MAX_CANON_ORDER,
        });
    }
    if n <= 1 {
        return Ok((0..n).collect());
    }
    let adj: Vec<u32> = (0..n).map(|v| g.row_word(v) as u32).collect();
    let colors = refine(&adj);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| colors[v]);
    let cell_of_pos: Vec<usize> = by_color.iter().map(|&v| colors[v]).collect();

    let mut twins = vec![0u32; n];
    for u in 0..n {
        for v in 0..n {
            if u != v && adj[u] & !(1 << v) == adj[v] & !(1 << u) {
                twins[u] |= 1 << v;
            }
        }
    }

    let mut search = Search {
        n,
        total_bits: n * (n - 1) / 2,
        adj,
        colors,
        cell_of_pos,
        twins,
        placed: vec![0; n],
        best: u64::MAX,
        best_order: Vec::new(),
    };
    search.dfs(0, 0, 0);
    let mut perm = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// Ordered color refinement seeded with degrees. Colors are ranks of
/// signatures, so the resulting ordered partition does not depend on the
/// input labeling.
fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let degrees: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    let (mut count, mut colors) = rank(&degrees);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap())
            .collect();
        if sorted.len() == count {
            return next;
        }
        count = sorted.len();
        colors = next;
    }
}

fn rank(values: &[usize]) -> (usize, Vec<usize>) {
    let mut distinct = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let ranks = values
        .iter()
        .map(|x| distinct.binary_search(x).unwrap())
        .collect();
    (distinct.len(), ranks)
}

struct Search {
    n: usize,
    total_bits: usize,
    adj: Vec<u32>,
    colors: Vec<usize>,
    cell_of_pos: Vec<usize>,
    twins: Vec<u32>,
    placed: Vec<usize>,
    best: u64,
    best_order: Vec<usize>,
}

impl Search {
    fn dfs(&mut self, depth: usize, cur: u64, used: u32) {
        if depth == self.n {
            if cur < self.best || self.best_order.is_empty() {
                self.best = cur;
                self.best_order = self.placed.clone();
            }
            return;
        }
        let cell = self.cell_of_pos[depth];
        let col_start = depth * depth.saturating_sub(1) / 2;
        let shift = self.total_bits - (depth * (depth + 1) / 2);
        let mut tried = 0u32;
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.colors[v] != cell || self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            let mut next = cur;
            for i in 0..depth {
                if self.adj[self.placed[i]] >> v & 1 == 1 {
                    next |= 1 << (self.total_bits - 1 - (col_start + i));
                }
            }
            if shift < 64 && (next >> shift) > (self.best >> shift) {
                continue;
            }
            self.placed[depth] = v;
            self.dfs(depth + 1, next, used | 1 << v);
        }
    }
}
