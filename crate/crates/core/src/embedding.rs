//! Tree containment.
//!
//! [`contains_tree`] is an exact backtracking search and is the source of
//! truth for every verdict. [`embed_diam4_at_root`] places a diameter-≤4
//! tree with its root on a chosen vertex by assigning star centers to
//! neighbors; it is sound but may miss embeddings, and only ever serves as
//! a fast path.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::trees::{Diam4Tree, Tree};

pub const MAX_TREE_ORDER: usize = 14;

/// Node budget for one [`embed_diam4_at_root`] call.
const STRUCTURED_BUDGET: usize = 200_000;

/// Injective map from tree vertices to graph vertices: `map[t]` is the
/// image of tree vertex `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that every tree edge lands on a graph edge.
    pub fn verify(&self, g: &Graph, tree: &Tree) -> bool {
        if self.map.len() != tree.order() || self.map.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let mut seen = vec![false; g.order()];
        for &v in &self.map {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        tree.edges()
            .iter()
            .all(|&(a, b)| g.has_edge(self.map[a], self.map[b]))
    }

    /// `(tree vertex, graph vertex)` pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.map.iter().copied().enumerate().collect()
    }
}

#[inline]
fn bit(words: &[u64], v: usize) -> bool {
    words[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
fn set(words: &mut [u64], v: usize, on: bool) {
    if on {
        words[v / 64] |= 1 << (v % 64);
    } else {
        words[v / 64] &= !(1 << (v % 64));
    }
}

fn free_neighbors(g: &Graph, v: usize, used: &[u64]) -> usize {
    g.row(v)
        .iter()
        .zip(used)
        .map(|(r, u)| (r & !u).count_ones() as usize)
        .sum()
}

struct Backtrack<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<usize>,
    children: Vec<usize>,
    tree_deg: Vec<usize>,
    map: Vec<usize>,
    used: Vec<u64>,
}

impl Backtrack<'_> {
    fn fits(&self, t: usize, c: usize) -> bool {
        !bit(&self.used, c)
            && self.g.degree(c) >= self.tree_deg[t]
            && free_neighbors(self.g, c, &self.used) >= self.children[t]
    }

    fn place(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let t = self.order[i];
        let anchor = self.map[self.parent[t]];
        let cands: Vec<usize> = self.g.neighbors(anchor).collect();
        for c in cands {
            if !self.fits(t, c) {
                continue;
            }
            self.map[t] = c;
            set(&mut self.used, c, true);
            if self.place(i + 1) {
                return true;
            }
            set(&mut self.used, c, false);
        }
        false
    }
}

/// Exact tree-subgraph test. Tree vertices are placed in BFS order from a
/// maximum-degree root; a candidate image must be unused, have enough
/// degree, and have at least as many unused neighbors as the tree vertex
/// has children.
pub fn contains_tree(g: &Graph, tree: &Tree) -> Result<Option<Embedding>> {
    let m = tree.order();
    if m > MAX_TREE_ORDER {
        return Err(Error::UnsupportedSize {
            what: "tree order",
            got: m,
            cap: MAX_TREE_ORDER,
        });
    }
    if m > g.order() {
        return Ok(None);
    }
    let adj = tree.adjacency();
    let tree_deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let root = (0..m)
        .max_by_key(|&v| (tree_deg[v], std::cmp::Reverse(v)))
        .unwrap();

    let mut order = Vec::with_capacity(m);
    let mut parent = vec![usize::MAX; m];
    let mut children = vec![0; m];
    let mut seen = vec![false; m];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                children[v] += 1;
                order.push(w);
                queue.push_back(w);
            }
        }
    }

    let mut bt = Backtrack {
        g,
        order,
        parent,
        children,
        tree_deg,
        map: vec![usize::MAX; m],
        used: vec![0; g.row_words()],
    };
    let mut roots: Vec<usize> = (0..g.order()).collect();
    roots.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for r in roots {
        if !bt.fits(root, r) {
            continue;
        }
        bt.map[root] = r;
        set(&mut bt.used, r, true);
        if bt.place(0) {
            let emb = Embedding { map: bt.map };
            debug_assert!(emb.verify(g, tree));
            return Ok(Some(emb));
        }
        set(&mut bt.used, r, false);
    }
    Ok(None)
}

struct Structured<'a> {
    g: &'a Graph,
    stars: Vec<(usize, Vec<usize>)>,
    trivial: Vec<usize>,
    /// Candidate centers: N¹(u) by descending link degree.
    centers: Vec<usize>,
    in_n1: Vec<u64>,
    in_n2: Vec<u64>,
    used: Vec<u64>,
    n1_free: usize,
    map: Vec<usize>,
    budget: usize,
}

impl Structured<'_> {
    fn assign(&mut self, i: usize) -> bool {
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        if i == self.stars.len() {
            return self.fill_trivial();
        }
        let need_after = self.stars.len() - i - 1 + self.trivial.len();
        let (center_t, leaves_t) = self.stars[i].clone();
        for ci in 0..self.centers.len() {
            let x = self.centers[ci];
            if bit(&self.used, x) {
                continue;
            }
            // Leaves come from unused L-neighbors of x, N²(u) first.
            let mut pick = Vec::with_capacity(leaves_t.len());
            let mut from_n1 = 0;
            for (pass, is_n1) in [(&self.in_n2, false), (&self.in_n1, true)] {
                for y in self.g.neighbors(x) {
                    if pick.len() == leaves_t.len() {
                        break;
                    }
                    if bit(pass, y) && !bit(&self.used, y) {
                        pick.push(y);
                        from_n1 += is_n1 as usize;
                    }
                }
            }
            if pick.len() < leaves_t.len() || self.n1_free < 1 + from_n1 + need_after {
                continue;
            }
            set(&mut self.used, x, true);
            for &y in &pick {
                set(&mut self.used, y, true);
            }
            self.n1_free -= 1 + from_n1;
            self.map[center_t] = x;
            for (&lt, &y) in leaves_t.iter().zip(&pick) {
                self.map[lt] = y;
            }
            if self.assign(i + 1) {
                return true;
            }
            self.n1_free += 1 + from_n1;
            set(&mut self.used, x, false);
            for &y in &pick {
                set(&mut self.used, y, false);
            }
        }
        false
    }

    fn fill_trivial(&mut self) -> bool {
        let free: Vec<usize> = self
            .centers
            .iter()
            .copied()
            .filter(|&x| !bit(&self.used, x))
            .take(self.trivial.len())
            .collect();
        if free.len() < self.trivial.len() {
            return false;
        }
        for (&t, &x) in self.trivial.iter().zip(&free) {
            self.map[t] = x;
        }
        true
    }
}

/// Tries to embed `t` with its root on `u`: nontrivial stars go to distinct
/// neighbors of `u` (largest star first, busiest neighbor first) with
/// backtracking over that assignment, each star's leaves are taken
/// greedily from unused vertices of `N¹(u) ∪ N²(u)` adjacent to its center
/// (preferring `N²(u)`), and trivial stars take the remaining neighbors.
/// Any returned embedding has been verified.
pub fn embed_diam4_at_root(g: &Graph, t: &Diam4Tree, u: usize) -> Option<Embedding> {
    let m = t.order();
    if m > g.order() || u >= g.order() {
        return None;
    }
    let dec = t.decompose();
    if g.degree(u) < dec.p {
        return None;
    }
    let words = g.row_words();
    let link = g.link_graph(u);
    let mut in_n1 = vec![0u64; words];
    let mut in_n2 = vec![0u64; words];
    for &x in &link.n1 {
        set(&mut in_n1, x, true);
    }
    for &y in &link.n2 {
        set(&mut in_n2, y, true);
    }
    let mut centers = link.n1.clone();
    centers.sort_by_key(|&x| (std::cmp::Reverse(link.degree(x)), x));

    let mut used = vec![0u64; words];
    set(&mut used, u, true);
    let mut map = vec![usize::MAX; m];
    map[dec.root] = u;
    let mut search = Structured {
        g,
        stars: dec
            .nontrivial_stars
            .iter()
            .map(|s| (s.center, s.leaves.clone()))
            .collect(),
        trivial: dec
            .all_stars
            .iter()
            .filter(|s| s.is_trivial())
            .map(|s| s.center)
            .collect(),
        n1_free: centers.len(),
        centers,
        in_n1,
        in_n2,
        used,
        map,
        budget: STRUCTURED_BUDGET,
    };
    if !search.assign(0) {
        return None;
    }
    let emb = Embedding { map: search.map };
    emb.verify(g, t.tree()).then_some(emb)
}

/// Fast path over every root (busiest first), then the exact oracle.
pub fn find_diam4(g: &Graph, t: &Diam4Tree) -> Result<Option<Embedding>> {
    let mut roots: Vec<usize> = (0..g.order()).collect();
    roots.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for u in roots {
        if let Some(e) = embed_diam4_at_root(g, t, u) {
            return Ok(Some(e));
        }
    }
    contains_tree(g, t.tree())
}

/// Indices into `family` of the trees `g` does not contain.
pub fn missing_indices(g: &Graph, family: &[Diam4Tree]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, t) in family.iter().enumerate() {
        if find_diam4(g, t)?.is_none() {
            out.push(i);
        }
    }
    Ok(out)
}

/// The members of `family` that `g` does not contain.
pub fn contains_all(g: &Graph, family: &[Diam4Tree]) -> Result<Vec<Diam4Tree>> {
    Ok(missing_indices(g, family)?
        .into_iter()
        .map(|i| family[i].clone())
        .collect())
}
