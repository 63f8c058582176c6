//! Labeled-tree enumeration through Prüfer sequences.

use std::collections::BTreeMap;

use super::canon::tree_code;
use super::Tree;
use crate::error::{Error, Result};

pub const MAX_PRUFER_ORDER: usize = 10;

/// Calls `visit` with the edge list of every labeled tree on `0..m`
/// (`m^(m-2)` of them for `m >= 2`).
pub fn for_each_labeled_tree(m: usize, mut visit: impl FnMut(&[(usize, usize)])) {
    match m {
        0 => {}
        1 => visit(&[]),
        2 => visit(&[(0, 1)]),
        _ => {
            let mut seq = vec![0usize; m - 2];
            let mut degree = vec![0usize; m];
            let mut edges = Vec::with_capacity(m - 1);
            loop {
                decode(&seq, &mut degree, &mut edges);
                visit(&edges);
                // Odometer increment.
                let mut i = seq.len();
                loop {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                    seq[i] += 1;
                    if seq[i] < m {
                        break;
                    }
                    seq[i] = 0;
                }
            }
        }
    }
}

/// Linear-time Prüfer decoding.
fn decode(seq: &[usize], degree: &mut [usize], edges: &mut Vec<(usize, usize)>) {
    let m = degree.len();
    degree.fill(1);
    for &x in seq {
        degree[x] += 1;
    }
    edges.clear();
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, m - 1));
}

/// Calls `visit` with every labeled tree on `0..m` whose degrees are
/// non-increasing in the label. Every unlabeled tree has such a labeling
/// (sort vertices by degree), so this reaches every isomorphism class
/// while decoding far fewer sequences than [`for_each_labeled_tree`].
pub fn for_each_degree_sorted_tree(m: usize, mut visit: impl FnMut(&[(usize, usize)])) {
    if m <= 2 {
        for_each_labeled_tree(m, visit);
        return;
    }
    let len = m - 2;
    let mut degree = vec![0usize; m];
    let mut edges = Vec::with_capacity(m - 1);
    // A label's multiplicity in the sequence is its degree minus one, so
    // the multiplicities run over partitions of m - 2.
    for parts in partitions(len, m) {
        let mut seq: Vec<usize> = parts
            .iter()
            .enumerate()
            .flat_map(|(label, &c)| std::iter::repeat_n(label, c))
            .collect();
        loop {
            decode(&seq, &mut degree, &mut edges);
            visit(&edges);
            if !next_permutation(&mut seq) {
                break;
            }
        }
    }
}

/// Partitions of `total` into at most `max_parts` parts, each listed in
/// non-increasing order.
fn partitions(total: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(
        rest: usize,
        cap: usize,
        max_parts: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_parts {
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, max_parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(seq: &mut [usize]) -> bool {
    let Some(i) = seq.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = seq.iter().rposition(|&x| x > seq[i]).unwrap();
    seq.swap(i, j);
    seq[i + 1..].reverse();
    true
}

/// One representative per isomorphism class of trees of order `m`,
/// obtained by decoding Prüfer sequences and deduplicating by tree code.
/// Sorted by code.
pub fn all_trees(m: usize) -> Result<Vec<Tree>> {
    if m > MAX_PRUFER_ORDER {
        return Err(Error::UnsupportedSize {
            what: "Prüfer enumeration order",
            got: m,
            cap: MAX_PRUFER_ORDER,
        });
    }
    let mut classes = BTreeMap::new();
    for_each_degree_sorted_tree(m, |edges| {
        let t = Tree::new_unchecked(m, edges.to_vec());
        classes.entry(tree_code(&t)).or_insert(t);
    });
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn cayley_counts() {
        for m in 1..=7 {
            let mut distinct = HashSet::new();
            let mut count = 0usize;
            for_each_labeled_tree(m, |edges| {
                let mut e: Vec<(usize, usize)> =
                    edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
                e.sort_unstable();
                assert!(Tree::new(m, e.clone()).is_ok());
                distinct.insert(e);
                count += 1;
            });
            let cayley = if m == 1 { 1 } else { m.pow(m as u32 - 2) };
            assert_eq!(count, cayley);
            assert_eq!(distinct.len(), cayley);
        }
    }

    #[test]
    fn free_tree_counts() {
        // Unlabeled trees of order 1..=10.
        let known = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &want) in known.iter().enumerate() {
            assert_eq!(all_trees(i + 1).unwrap().len(), want, "m={}", i + 1);
        }
        assert!(all_trees(11).is_err());
    }

    #[test]
    fn degree_sorted_subset_covers_all_classes() {
        for m in 1..=8 {
            let mut full = BTreeMap::new();
            for_each_labeled_tree(m, |e| {
                full.entry(tree_code(&Tree::new_unchecked(m, e.to_vec())))
                    .or_insert(());
            });
            let mut sorted = BTreeMap::new();
            let mut decoded = 0usize;
            for_each_degree_sorted_tree(m, |e| {
                let t = Tree::new_unchecked(m, e.to_vec());
                let deg = t.degrees();
                assert!(deg.windows(2).all(|w| w[0] >= w[1]));
                sorted.entry(tree_code(&t)).or_insert(());
                decoded += 1;
            });
            assert_eq!(full.len(), sorted.len(), "m={m}");
            if m >= 2 {
                assert!(decoded <= m.pow(m as u32 - 2));
            }
        }
    }
}
