//! AHU-style canonical codes for free trees, rooted at the center (or at
//! the central edge for bicentered trees).

use super::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeCode(Vec<u8>);

impl TreeCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn tree_code(tree: &Tree) -> TreeCode {
    let adj = tree.adjacency();
    let centers = tree.centers();
    let mut out = Vec::with_capacity(2 * tree.order() + 1);
    match centers[..] {
        [c] => {
            out.push(b'C');
            out.extend(rooted(&adj, c, usize::MAX));
        }
        [c1, c2] => {
            let mut halves = [rooted(&adj, c1, c2), rooted(&adj, c2, c1)];
            halves.sort();
            out.push(b'B');
            out.extend(halves[0].iter().chain(&halves[1]));
        }
        _ => unreachable!("a tree has one or two centers"),
    }
    TreeCode(out)
}

fn rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted(adj, w, v))
        .collect();
    kids.sort();
    let mut out = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
    out.push(b'(');
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
    out
}
