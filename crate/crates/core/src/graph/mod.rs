//! Undirected simple graphs over `0..n` stored as bitset adjacency rows.
//!
//! Rows are packed into 64-bit words. Graphs of order at most 64 use a
//! single word per row, and the hot queries (`degree`, `neighbors`,
//! `has_edge`) take a one-word path in that case; larger graphs (up to
//! [`MAX_ORDER`]) go through the general multi-word path.

mod canon;
mod enumerate;
pub mod graph6;
mod matching;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{invalid, Result};

pub use canon::{canonical_form, CanonicalForm, MAX_CANON_ORDER};
pub use enumerate::{enumerate_graphs, known_class_count, MAX_ENUM_ORDER};
pub use matching::{max_matching_size, MAX_MATCHING_ORDER};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Iterates the set bits of a word slice in increasing order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_ORDER`.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 0..n {
            for u in 0..v {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(0, n - 1);
        g
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(crate::Error::UnsupportedSize {
                what: "graph order",
                got: n,
                cap: MAX_ORDER,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(invalid(format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(invalid(format!("duplicate edge ({u},{v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Single-word row for graphs with `n <= 64`.
    #[inline]
    pub fn row_word(&self, v: usize) -> u64 {
        debug_assert_eq!(self.words, 1);
        self.bits[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if self.words == 1 {
            self.bits[u] >> v & 1 == 1
        } else {
            self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
        }
    }

    /// Adds the edge `uv`. Panics on loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        let w = self.words;
        self.bits[u * w + v / 64] |= 1 << (v % 64);
        self.bits[v * w + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge ({u},{v})");
        let w = self.words;
        self.bits[u * w + v / 64] &= !(1 << (v % 64));
        self.bits[v * w + u / 64] &= !(1 << (u % 64));
    }

    /// Copy of `self` with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        if self.words == 1 {
            self.bits[v].count_ones() as usize
        } else {
            self.row(v).iter().map(|w| w.count_ones() as usize).sum()
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// e(G).
    pub fn size(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            for u in 0..v {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Whether every edge of `self` is an edge of `other` (same order).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, x: usize, y: usize) -> Option<usize> {
        self.distances_from(x)[y]
    }

    /// Breadth-first layers `N^1(v), N^2(v), ...` around `v`.
    pub fn shells(&self, v: usize) -> NeighborhoodShells {
        assert!(v < self.n, "vertex {v} out of range");
        let w = self.words;
        let mut seen = vec![0u64; w];
        seen[v / 64] |= 1 << (v % 64);
        let mut frontier = seen.clone();
        let mut shells = Vec::new();
        loop {
            let mut next = vec![0u64; w];
            for x in iter_bits(&frontier) {
                for (nw, rw) in next.iter_mut().zip(self.row(x)) {
                    *nw |= rw;
                }
            }
            for (nw, sw) in next.iter_mut().zip(&seen) {
                *nw &= !sw;
            }
            if next.iter().all(|&x| x == 0) {
                break;
            }
            for (sw, nw) in seen.iter_mut().zip(&next) {
                *sw |= nw;
            }
            shells.push(iter_bits(&next).collect());
            frontier = next;
        }
        NeighborhoodShells { source: v, shells }
    }

    /// The link graph `L_v`: vertices `N^1(v) ∪ N^2(v)`, edges inside
    /// `N^1(v)` and between `N^1(v)` and `N^2(v)`.
    pub fn link_graph(&self, v: usize) -> LinkGraph {
        let sh = self.shells(v);
        let n1 = sh.shell(1).to_vec();
        let n2 = sh.shell(2).to_vec();
        let mut in_n1 = vec![0u64; self.words];
        let mut in_n2 = vec![0u64; self.words];
        for &x in &n1 {
            in_n1[x / 64] |= 1 << (x % 64);
        }
        for &y in &n2 {
            in_n2[y / 64] |= 1 << (y % 64);
        }
        let mut graph = Graph::empty(self.n);
        for &x in &n1 {
            for y in self.neighbors(x) {
                let bit = 1u64 << (y % 64);
                if in_n1[y / 64] & bit != 0 || in_n2[y / 64] & bit != 0 {
                    graph.bits[x * self.words + y / 64] |= bit;
                    graph.bits[y * self.words + x / 64] |= 1 << (x % 64);
                }
            }
        }
        let mut vertices: Vec<usize> = n1.iter().chain(&n2).copied().collect();
        vertices.sort_unstable();
        LinkGraph {
            center: v,
            n1,
            n2,
            vertices,
            graph,
        }
    }

    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components() == 1
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }
}

/// Diameter of a graph; disconnected graphs have no finite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_most(self, d: usize) -> bool {
        matches!(self, Diameter::Finite(x) if x <= d)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodShells {
    pub source: usize,
    /// `shells[i]` holds `N^{i+1}(source)`, sorted.
    pub shells: Vec<Vec<usize>>,
}

impl NeighborhoodShells {
    /// `N^i(source)` for `i >= 1`; empty past the last layer.
    pub fn shell(&self, i: usize) -> &[usize] {
        assert!(i >= 1, "shell index starts at 1");
        self.shells.get(i - 1).map_or(&[], Vec::as_slice)
    }
}

/// `L_v` kept in the host graph's index space: vertices outside
/// `N^1(v) ∪ N^2(v)` are isolated in `graph`.
#[derive(Debug, Clone)]
pub struct LinkGraph {
    pub center: usize,
    pub n1: Vec<usize>,
    pub n2: Vec<usize>,
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

impl LinkGraph {
    /// d_L(x).
    pub fn degree(&self, x: usize) -> usize {
        self.graph.degree(x)
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }

    /// `L_v` relabeled onto `0..|V(L)|` in increasing vertex order.
    pub fn compact(&self) -> Graph {
        self.graph.induced(&self.vertices)
    }
}

/// `S(n,k) = K_k ∨ co-K_{n-k}`: vertices `0..k` form the clique.
///
/// `k = 0` yields the edgeless graph.
pub fn make_snk(n: usize, k: usize) -> Result<Graph> {
    if k >= n {
        return Err(invalid(format!("S(n,k) needs k < n, got n={n}, k={k}")));
    }
    if n > MAX_ORDER {
        return Err(crate::Error::UnsupportedSize {
            what: "graph order",
            got: n,
            cap: MAX_ORDER,
        });
    }
    let mut g = Graph::empty(n);
    for u in 0..k {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// `S(n,k)` plus the edge `{k, k+1}` inside the independent part.
pub fn make_snk_plus(n: usize, k: usize) -> Result<Graph> {
    if n < k + 2 {
        return Err(invalid(format!("S+(n,k) needs n >= k+2, got n={n}, k={k}")));
    }
    let mut g = make_snk(n, k)?;
    g.add_edge(k, k + 1);
    Ok(g)
}

/// e(S(n,k)) = k(k-1)/2 + k(n-k).
pub fn snk_edge_count(n: usize, k: usize) -> usize {
    k * k.saturating_sub(1) / 2 + k * n.saturating_sub(k)
}

/// Degree-sequence test for `G ≅ S(n,k)`: exactly `k` dominating vertices
/// and every other vertex of degree `k`.
pub fn is_snk(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k >= n {
        return false;
    }
    let degs = g.degrees();
    let dominating = degs.iter().filter(|&&d| d == n - 1).count();
    if k == n - 1 {
        return dominating == n;
    }
    dominating == k && degs.iter().all(|&d| d == n - 1 || d == k)
}

/// Degree-sequence test for `G ≅ S+(n,k)`.
pub fn is_snk_plus(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n < k + 2 {
        return false;
    }
    if n == k + 2 {
        return g.size() == n * (n - 1) / 2;
    }
    let degs = g.degrees();
    let dominating = degs.iter().filter(|&&d| d == n - 1).count();
    let raised = degs.iter().filter(|&&d| d == k + 1).count();
    let plain = degs.iter().filter(|&&d| d == k).count();
    dominating == k && raised == 2 && plain == n - k - 2
}
