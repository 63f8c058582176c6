//! Reference implementations used as oracles by the integration tests.
//! Each one is deliberately naive and shares no code with the library
//! routine it checks.

#![allow(dead_code)]

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rand::Rng;

use spectree::Graph;

/// Connected graph: a random recursive tree plus each remaining pair with
/// probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| i64::from(g.has_edge(u, v))).collect())
        .collect()
}

/// Largest adjacency eigenvalue by dense symmetric eigendecomposition.
pub fn dense_radius(g: &Graph) -> f64 {
    let n = g.order();
    let m = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    m.symmetric_eigenvalues()
        .iter()
        .cloned()
        .fold(f64::MIN, f64::max)
}

/// Column sums of `A^2 - aA - bI` from an explicit matrix product.
pub fn b_sums_dense(g: &Graph, a: i64, b: i64) -> Vec<i64> {
    let m = adjacency_matrix(g);
    let n = g.order();
    (0..n)
        .map(|j| {
            let mut s = 0;
            for i in 0..n {
                let sq: i64 = (0..n).map(|t| m[i][t] * m[t][j]).sum();
                s += sq - a * m[i][j] - if i == j { b } else { 0 };
            }
            s
        })
        .collect()
}

/// BFS distances with `usize::MAX` for unreachable vertices.
pub fn bfs(g: &Graph, s: usize) -> Vec<usize> {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for y in 0..n {
            if g.has_edge(x, y) && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// `Σ_{x∈N¹(v)} d_L(x) - (k-2)d(v) - k(n-k)`, with the link graph degrees
/// counted directly from distances.
pub fn link_rhs(g: &Graph, v: usize, k: i64) -> i64 {
    let n = g.order();
    let dist = bfs(g, v);
    let mut total = 0i64;
    for x in (0..n).filter(|&x| dist[x] == 1) {
        total += (0..n)
            .filter(|&y| g.has_edge(x, y) && (dist[y] == 1 || dist[y] == 2))
            .count() as i64;
    }
    total - (k - 2) * g.degree(v) as i64 - k * (n as i64 - k)
}

/// Whether `tree` (given as an edge list on `0..m`) is a subgraph of `g`,
/// by plain depth-first assignment of tree vertices in index order.
pub fn brute_contains(g: &Graph, m: usize, tree: &[(usize, usize)]) -> bool {
    fn go(
        g: &Graph,
        m: usize,
        tree: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let t = map.len();
        if t == m {
            return true;
        }
        for x in 0..g.order() {
            if used[x] {
                continue;
            }
            let ok = tree.iter().all(|&(a, b)| {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                hi != t || g.has_edge(map[lo], x)
            });
            if ok {
                used[x] = true;
                map.push(x);
                if go(g, m, tree, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
        }
        false
    }
    if m > g.order() {
        return false;
    }
    go(g, m, tree, &mut Vec::new(), &mut vec![false; g.order()])
}

/// Quadratic Prüfer decode.
pub fn prufer_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let m = seq.len() + 2;
    let mut degree = vec![1usize; m];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    for &s in seq {
        let leaf = (0..m).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..m).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_code(adj, c, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism-invariant string for a tree: the minimum rooted
/// parenthesis code over its centers, found by peeling leaves.
pub fn tree_string(m: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..m).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = m;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&r| rooted_code(&adj, r, usize::MAX))
        .min()
        .unwrap()
}

pub fn tree_diameter(m: usize, edges: &[(usize, usize)]) -> usize {
    let g = Graph::from_edges(m, edges).unwrap();
    (0..m)
        .map(|s| *bfs(&g, s).iter().max().unwrap())
        .max()
        .unwrap()
}

/// Unlabeled trees of order `m` keyed by [`tree_string`], with their
/// diameters, from every Prüfer sequence.
pub fn trees_via_prufer(m: usize) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    if m == 1 {
        out.insert(tree_string(1, &[]), 0);
        return out;
    }
    if m == 2 {
        out.insert(tree_string(2, &[(0, 1)]), 1);
        return out;
    }
    let len = m - 2;
    let mut seq = vec![0usize; len];
    loop {
        let edges = prufer_decode(&seq);
        let key = tree_string(m, &edges);
        out.entry(key).or_insert_with(|| tree_diameter(m, &edges));
        let mut i = 0;
        while i < len {
            seq[i] += 1;
            if seq[i] < m {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
    }
    out
}

/// Maximum matching of a tree by exhaustive edge subsets.
pub fn tree_matching_number(m: usize, edges: &[(usize, usize)]) -> usize {
    let e = edges.len();
    let mut best = 0;
    for mask in 0u32..(1 << e) {
        let mut used = vec![false; m];
        let mut ok = true;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used[a] || used[b] {
                    ok = false;
                    break;
                }
                used[a] = true;
                used[b] = true;
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}
