//! Trees of diameter at most four and their star-forest decomposition.
//!
//! Deleting a center of such a tree leaves a forest of stars, so the tree
//! is determined by the multiset of leaf counts `{a_1 >= ... >= a_p}` of
//! those stars (a trivial star has `a_i = 0`). The order is
//! `m = 1 + p + Σ a_i`.

mod canon;
pub mod prufer;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{invalid, Result};
use crate::graph::Graph;

pub use canon::{tree_code, TreeCode};
pub use prufer::{all_trees, for_each_degree_sorted_tree, for_each_labeled_tree, MAX_PRUFER_ORDER};

/// A free tree on `0..order` given by its edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    pub fn new(order: usize, edges: Vec<(usize, usize)>) -> Result<Tree> {
        if order == 0 {
            return Err(invalid("tree needs at least one vertex"));
        }
        if edges.len() + 1 != order {
            return Err(invalid(format!(
                "tree of order {order} needs {} edges, got {}",
                order - 1,
                edges.len()
            )));
        }
        let g = Graph::from_edges(order, &edges)?;
        if !g.is_connected() {
            return Err(invalid("edge list is not connected"));
        }
        Ok(Tree { order, edges })
    }

    pub(crate) fn new_unchecked(order: usize, edges: Vec<(usize, usize)>) -> Tree {
        Tree { order, edges }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.order, &self.edges).expect("tree edges are valid")
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    fn eccentricities(&self) -> Vec<usize> {
        let adj = self.adjacency();
        (0..self.order)
            .map(|s| {
                let mut dist = vec![usize::MAX; self.order];
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                let mut far = 0;
                while let Some(v) = queue.pop_front() {
                    far = far.max(dist[v]);
                    for &w in &adj[v] {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[v] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                far
            })
            .collect()
    }

    pub fn diameter(&self) -> usize {
        self.eccentricities().into_iter().max().unwrap_or(0)
    }

    /// The one or two vertices of minimum eccentricity, ascending.
    pub fn centers(&self) -> Vec<usize> {
        let ecc = self.eccentricities();
        let r = *ecc.iter().min().expect("nonempty tree");
        (0..self.order).filter(|&v| ecc[v] == r).collect()
    }

    pub fn code(&self) -> TreeCode {
        tree_code(self)
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.order == other.order && self.code() == other.code()
    }
}

/// A star of the forest left by deleting the root; `leaves` is empty for a
/// trivial star.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

impl Star {
    pub fn is_trivial(&self) -> bool {
        self.leaves.is_empty()
    }
}

/// `C_T` (all stars) and `F_T` (nontrivial stars) of a rooted diameter-≤4
/// tree, in tree vertex ids. Stars are sorted by descending leaf count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarForestDecomposition {
    pub root: usize,
    pub all_stars: Vec<Star>,
    pub nontrivial_stars: Vec<Star>,
    /// ω(C_T).
    pub p: usize,
    /// ω(F_T).
    pub p_prime: usize,
}

impl StarForestDecomposition {
    pub fn star_sizes(&self) -> Vec<usize> {
        self.all_stars.iter().map(|s| s.leaves.len()).collect()
    }

    /// e(F_T).
    pub fn nontrivial_edge_count(&self) -> usize {
        self.nontrivial_stars.iter().map(|s| s.leaves.len()).sum()
    }

    pub fn trivial_count(&self) -> usize {
        self.p - self.p_prime
    }
}

fn stars_at(adj: &[Vec<usize>], root: usize) -> Option<Vec<Star>> {
    let mut stars = Vec::with_capacity(adj[root].len());
    for &c in &adj[root] {
        let leaves: Vec<usize> = adj[c].iter().copied().filter(|&w| w != root).collect();
        if leaves.iter().any(|&l| adj[l].len() != 1) {
            return None;
        }
        stars.push(Star { center: c, leaves });
    }
    stars.sort_by(|a, b| {
        b.leaves
            .len()
            .cmp(&a.leaves.len())
            .then(a.center.cmp(&b.center))
    });
    Some(stars)
}

/// Decomposes `tree` at its root. For a bicentered tree the root is the
/// center whose deletion leaves more components; remaining ties go to the
/// lexicographically larger star-size multiset, then the smaller index.
pub fn decompose_tree(tree: &Tree) -> Result<StarForestDecomposition> {
    if tree.diameter() > 4 {
        return Err(invalid(format!(
            "tree has diameter {} > 4",
            tree.diameter()
        )));
    }
    let adj = tree.adjacency();
    let mut best: Option<(usize, Vec<Star>)> = None;
    for c in tree.centers() {
        let stars = stars_at(&adj, c).expect("center of a diameter-4 tree sees only stars");
        let better = match &best {
            None => true,
            Some((_, cur)) => {
                let key = |s: &[Star]| {
                    (
                        s.len(),
                        s.iter().map(|x| x.leaves.len()).collect::<Vec<_>>(),
                    )
                };
                key(&stars) > key(cur)
            }
        };
        if better {
            best = Some((c, stars));
        }
    }
    let (root, all_stars) = best.expect("at least one center");
    let nontrivial_stars: Vec<Star> = all_stars
        .iter()
        .filter(|s| !s.is_trivial())
        .cloned()
        .collect();
    Ok(StarForestDecomposition {
        root,
        p: all_stars.len(),
        p_prime: nontrivial_stars.len(),
        all_stars,
        nontrivial_stars,
    })
}

/// A tree of diameter at most four, labeled with its root at 0 followed by
/// each star (center, then leaves) in star-size order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diam4Tree {
    star_sizes: Vec<usize>,
    tree: Tree,
}

fn materialize(sizes: &[usize]) -> Tree {
    let order = 1 + sizes.len() + sizes.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(order - 1);
    let mut next = 1;
    for &a in sizes {
        let c = next;
        edges.push((0, c));
        for l in c + 1..=c + a {
            edges.push((c, l));
        }
        next = c + a + 1;
    }
    Tree::new_unchecked(order, edges)
}

impl Diam4Tree {
    /// Tree whose root carries stars with the given leaf counts. The result
    /// is re-rooted at its proper center, so `star_sizes()` may differ from
    /// the input when the input root is not a center.
    pub fn from_star_sizes(sizes: &[usize]) -> Diam4Tree {
        let mut sizes = sizes.to_vec();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let raw = materialize(&sizes);
        Diam4Tree::from_tree(&raw).expect("root-star construction has diameter <= 4")
    }

    pub fn from_tree(tree: &Tree) -> Result<Diam4Tree> {
        let dec = decompose_tree(tree)?;
        let star_sizes = dec.star_sizes();
        let tree = materialize(&star_sizes);
        Ok(Diam4Tree { star_sizes, tree })
    }

    pub fn order(&self) -> usize {
        self.tree.order
    }

    pub fn star_sizes(&self) -> &[usize] {
        &self.star_sizes
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn decompose(&self) -> StarForestDecomposition {
        decompose_tree(&self.tree).expect("diameter-4 invariant")
    }

    /// `root:[a_1,...,a_p]`.
    pub fn notation(&self) -> String {
        self.to_string()
    }

    pub fn graph6(&self) -> String {
        crate::graph::graph6::encode(&self.tree.to_graph())
    }

    pub fn code(&self) -> TreeCode {
        self.tree.code()
    }
}

impl fmt::Display for Diam4Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root:[")?;
        for (i, a) in self.star_sizes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Partitions of `total` into positive parts, non-increasing within each
/// partition, emitted in lexicographically decreasing order.
fn partitions_desc(total: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

/// 𝒯_m: one tree per isomorphism class of order-`m` trees with diameter at
/// most four, in the order their first star-size multiset appears among
/// lexicographically decreasing partitions of `m - 1`.
pub fn enumerate_diam4_trees(m: usize) -> Vec<Diam4Tree> {
    if m == 0 {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for parts in partitions_desc(m - 1) {
        let sizes: Vec<usize> = parts.iter().map(|q| q - 1).collect();
        let raw = materialize(&sizes);
        if seen.insert(raw.code()) {
            out.push(Diam4Tree::from_tree(&raw).expect("diameter <= 4 by construction"));
        }
    }
    out
}

/// 𝒯_{≤ℓ}: the union of `enumerate_diam4_trees(m)` for `m = 1..=ℓ`.
pub fn enumerate_diam4_trees_up_to(max_order: usize) -> Vec<Diam4Tree> {
    (1..=max_order).flat_map(enumerate_diam4_trees).collect()
}

/// The spider with one leg of length one and `k` legs of length two
/// (order `2k + 2`).
pub fn spider_1_2s(k: usize) -> Diam4Tree {
    assert!(k >= 1, "spider_1_2s needs k >= 1");
    let mut sizes = vec![1; k];
    sizes.push(0);
    Diam4Tree::from_star_sizes(&sizes)
}

/// The spider with `k + 1` legs of length two (order `2k + 3`). For
/// `k = 0` this is the path on three vertices, rooted at its middle vertex.
pub fn spider_2s(k: usize) -> Diam4Tree {
    Diam4Tree::from_star_sizes(&vec![1; k + 1])
}

/// Which order a starred family is taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyOrder {
    /// Order `2k + 2`, minus [`spider_1_2s`].
    Even,
    /// Order `2k + 3`, minus [`spider_2s`].
    Odd,
}

/// The diameter-≤4 family of order `2k+2` (or `2k+3`) with the matching
/// spider removed.
pub fn family_t_star(k: usize, order: FamilyOrder) -> Vec<Diam4Tree> {
    assert!(k >= 1, "family_t_star needs k >= 1");
    let (m, spider) = match order {
        FamilyOrder::Even => (2 * k + 2, spider_1_2s(k)),
        FamilyOrder::Odd => (2 * k + 3, spider_2s(k)),
    };
    let code = spider.code();
    enumerate_diam4_trees(m)
        .into_iter()
        .filter(|t| t.code() != code)
        .collect()
}

/// 𝒯*_{≤2k+2}: every diameter-≤4 tree of order at most `2k+2` except the
/// spider [`spider_1_2s`]`(k)`.
pub fn family_t_star_up_to(k: usize) -> Vec<Diam4Tree> {
    let code = spider_1_2s(k).code();
    enumerate_diam4_trees_up_to(2 * k + 2)
        .into_iter()
        .filter(|t| t.code() != code)
        .collect()
}
