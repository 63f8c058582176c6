//! Isomorph-free generation of all graphs of a given small order.
//!
//! Order `j + 1` is built from the representatives of order `j` by adding a
//! vertex joined to every subset of the old vertices and keeping one
//! canonical representative per class. Every level is cached for the life
//! of the process, so repeated lemma sweeps share one corpus.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use super::canon::canonical_form;
use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ENUM_ORDER: usize = 8;

/// Number of isomorphism classes of graphs on `n` vertices, `n <= 8`.
pub fn known_class_count(n: usize) -> Option<usize> {
    const COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
    COUNTS.get(n).copied()
}

static LEVELS: [OnceLock<Arc<Vec<Graph>>>; MAX_ENUM_ORDER + 1] =
    [const { OnceLock::new() }; MAX_ENUM_ORDER + 1];

/// One canonically labeled representative per isomorphism class of order
/// `n`, sorted by canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::UnsupportedSize {
            what: "enumeration order",
            got: n,
            cap: MAX_ENUM_ORDER,
        });
    }
    if n == 0 {
        return Err(crate::error::invalid(
            "enumeration order must be at least 1",
        ));
    }
    Ok(level(n))
}

fn level(n: usize) -> Arc<Vec<Graph>> {
    LEVELS[n]
        .get_or_init(|| {
            if n == 1 {
                return Arc::new(vec![Graph::empty(1)]);
            }
            let prev = level(n - 1);
            let codes: BTreeSet<_> = prev
                .par_iter()
                .flat_map_iter(|g| {
                    (0u32..1 << (n - 1)).map(move |mask| {
                        let mut h = Graph::empty(n);
                        for (u, v) in g.edges() {
                            h.add_edge(u, v);
                        }
                        for u in 0..n - 1 {
                            if mask >> u & 1 == 1 {
                                h.add_edge(u, n - 1);
                            }
                        }
                        canonical_form(&h).expect("order within canonical cap")
                    })
                })
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
            Arc::new(codes.iter().map(|c| c.graph()).collect())
        })
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Labeled enumeration of every graph on `n` vertices, deduplicated
    /// through the canonical form.
    fn labeled_oracle(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut seen = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let mut g = Graph::empty(n);
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
            seen.insert(canonical_form(&g).unwrap());
        }
        seen.len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(4).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(5).unwrap().len(), 34);
        for n in 1..=6 {
            assert_eq!(
                enumerate_graphs(n).unwrap().len(),
                labeled_oracle(n),
                "n={n}"
            );
            assert_eq!(
                Some(enumerate_graphs(n).unwrap().len()),
                known_class_count(n)
            );
        }
        assert!(enumerate_graphs(9).is_err());
    }

    #[test]
    fn representatives_are_distinct_and_canonical() {
        for n in 1..=7 {
            let graphs = enumerate_graphs(n).unwrap();
            let codes: HashSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
            assert_eq!(codes.len(), graphs.len());
            for g in graphs.iter() {
                assert_eq!(canonical_form(g).unwrap().graph(), *g);
            }
        }
    }
}
