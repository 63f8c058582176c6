//! Exhaustive small-order checks of the supporting lemmas, plus censuses
//! of the spectral extremal statements (see [`census`]).
//!
//! Every checker sweeps all isomorphism classes of the given order and
//! records each graph that meets the lemma's hypothesis but fails its
//! conclusion. The lemmas are theorems, so a nonempty violation list at
//! these sizes points at a bug in this crate.

pub mod census;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::embedding::{contains_all, contains_tree, missing_indices};
use crate::error::{invalid, Error, Result};
use crate::graph::{
    canonical_form, enumerate_graphs, graph6, make_snk, max_matching_size, snk_edge_count, Graph,
    MAX_ENUM_ORDER,
};
use crate::trees::{all_trees, enumerate_diam4_trees, family_t_star_up_to, Diam4Tree, Tree};

pub use census::{
    census_conjecture_b, census_theorem, CensusMode, CensusReport, CensusRow, CensusViolation,
    Corpus,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// Edge density forces every diameter-≤4 tree of order k.
    Es4,
    /// Graphs without a k-matching have at most e(S(n,k-1)) edges.
    Matching,
    /// Density plus a dominating vertex forces 𝒯*_{≤2k+2}.
    Ves4,
    /// Proper supergraphs of S(n,k) contain every tree of order 2k+2.
    Structure,
}

impl LemmaId {
    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Es4 => "es4",
            LemmaId::Matching => "matching",
            LemmaId::Ves4 => "ves4",
            LemmaId::Structure => "structure",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub graph6: String,
    pub diagnostic: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaVerdict {
    pub lemma: LemmaId,
    pub n: usize,
    pub k: usize,
    /// Classes swept.
    pub graphs_scanned: usize,
    /// Classes meeting the hypothesis.
    pub graphs_checked: usize,
    /// Matching lemma: classes attaining the edge bound.
    pub equality_cases: usize,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaVerdict {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for LemmaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} k={}: scanned {}, checked {}, ",
            self.lemma, self.n, self.k, self.graphs_scanned, self.graphs_checked
        )?;
        if self.lemma == LemmaId::Matching {
            write!(f, "equality {}, ", self.equality_cases)?;
        }
        if self.holds() {
            f.write_str("holds at this scale")
        } else {
            write!(f, "{} VIOLATION(S)", self.violations.len())
        }
    }
}

fn corpus(n: usize) -> Result<std::sync::Arc<Vec<Graph>>> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(Error::UnsupportedSize {
            what: "exhaustive sweep order",
            got: n,
            cap: MAX_ENUM_ORDER,
        });
    }
    enumerate_graphs(n)
}

fn missing_diagnostic(family: &[Diam4Tree], missing: &[usize]) -> String {
    let names: Vec<String> = missing.iter().map(|&i| family[i].notation()).collect();
    format!("missing trees {}", names.join(" "))
}

/// Sweeps `graphs`, keeping those accepted by `hypothesis`, and reports the
/// members of `family` each such graph fails to contain.
fn sweep_family(
    lemma: LemmaId,
    n: usize,
    k: usize,
    graphs: &[Graph],
    family: &[Diam4Tree],
    hypothesis: impl Fn(&Graph) -> bool + Sync,
) -> Result<LemmaVerdict> {
    let results: Vec<Option<(String, Vec<usize>)>> = graphs
        .par_iter()
        .map(|g| -> Result<_> {
            if !hypothesis(g) {
                return Ok(None);
            }
            Ok(Some((graph6::encode(g), missing_indices(g, family)?)))
        })
        .collect::<Result<_>>()?;
    let graphs_checked = results.iter().flatten().count();
    let violations = results
        .into_iter()
        .flatten()
        .filter(|(_, missing)| !missing.is_empty())
        .map(|(g6, missing)| LemmaViolation {
            graph6: g6,
            diagnostic: missing_diagnostic(family, &missing),
        })
        .collect();
    Ok(LemmaVerdict {
        lemma,
        n,
        k,
        graphs_scanned: graphs.len(),
        graphs_checked,
        equality_cases: 0,
        violations,
    })
}

/// Every class of order `n` with `e(G) > (k-2)n/2` must contain every
/// diameter-≤4 tree of order `k`.
pub fn check_es_diam4(n: usize, k: usize) -> Result<LemmaVerdict> {
    if k == 0 {
        return Err(invalid("es4 needs k >= 1"));
    }
    let graphs = corpus(n)?;
    let family = enumerate_diam4_trees(k);
    let threshold = (k as i64 - 2) * n as i64;
    sweep_family(LemmaId::Es4, n, k, &graphs, &family, |g| {
        2 * g.size() as i64 > threshold
    })
}

/// Every class of order `n` with ν(G) < k has `e(G) <= e(S(n,k-1))`, with
/// equality only for `S(n,k-1)`.
pub fn check_matching_lemma(n: usize, k: usize) -> Result<LemmaVerdict> {
    if k == 0 {
        return Err(invalid("matching lemma needs k >= 1"));
    }
    if 2 * n < 5 * k {
        return Err(invalid(format!(
            "matching lemma needs n >= 5k/2, got n={n}, k={k}"
        )));
    }
    let graphs = corpus(n)?;
    let bound = snk_edge_count(n, k - 1);
    let extremal = canonical_form(&make_snk(n, k - 1)?)?;
    let mut verdict = LemmaVerdict {
        lemma: LemmaId::Matching,
        n,
        k,
        graphs_scanned: graphs.len(),
        graphs_checked: 0,
        equality_cases: 0,
        violations: Vec::new(),
    };
    for g in graphs.iter() {
        if max_matching_size(g)? >= k {
            continue;
        }
        verdict.graphs_checked += 1;
        let e = g.size();
        if e > bound {
            verdict.violations.push(LemmaViolation {
                graph6: graph6::encode(g),
                diagnostic: format!("e = {e} exceeds e(S(n,k-1)) = {bound}"),
            });
        } else if e == bound {
            verdict.equality_cases += 1;
            if canonical_form(g)? != extremal {
                verdict.violations.push(LemmaViolation {
                    graph6: graph6::encode(g),
                    diagnostic: format!("attains e = {bound} but is not S(n,k-1)"),
                });
            }
        }
    }
    Ok(verdict)
}

fn need_room_for_spider(n: usize, k: usize, what: &str) -> Result<()> {
    if k == 0 || n < 2 * k + 2 {
        return Err(invalid(format!(
            "{what} needs k >= 1 and n >= 2k+2, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// Every class of order `n` with `e(G) > (2k-1)n/2` and a dominating vertex
/// must contain every tree of 𝒯*_{≤2k+2}.
pub fn check_lemma_ves4(n: usize, k: usize) -> Result<LemmaVerdict> {
    need_room_for_spider(n, k, "ves4")?;
    let graphs = corpus(n)?;
    let family = family_t_star_up_to(k);
    let threshold = (2 * k as i64 - 1) * n as i64;
    sweep_family(LemmaId::Ves4, n, k, &graphs, &family, |g| {
        2 * g.size() as i64 > threshold && g.max_degree() == n - 1
    })
}

/// Classes of proper supergraphs of `S(n,k)` on the same vertex set. The
/// only non-edges of `S(n,k)` lie in the independent part, so these are the
/// joins `K_k ∨ H` over nonempty graphs `H` of order `n - k`.
pub fn snk_supergraphs(n: usize, k: usize) -> Result<Vec<Graph>> {
    let base = make_snk(n, k)?;
    let mut classes = BTreeSet::new();
    for h in corpus(n - k)?.iter() {
        if h.size() == 0 {
            continue;
        }
        let mut g = base.clone();
        for (u, v) in h.edges() {
            g.add_edge(k + u, k + v);
        }
        classes.insert(canonical_form(&g)?);
    }
    Ok(classes.iter().map(|c| c.graph()).collect())
}

/// Every proper supergraph of `S(n,k)` on `n` vertices contains every tree
/// of order `2k+2` (all trees, not only diameter ≤ 4).
pub fn check_structure_lemma(n: usize, k: usize) -> Result<LemmaVerdict> {
    need_room_for_spider(n, k, "structure lemma")?;
    if n > MAX_ENUM_ORDER {
        return Err(Error::UnsupportedSize {
            what: "exhaustive sweep order",
            got: n,
            cap: MAX_ENUM_ORDER,
        });
    }
    let trees = all_trees(2 * k + 2)?;
    let supers = snk_supergraphs(n, k)?;
    let results: Vec<Option<LemmaViolation>> = supers
        .par_iter()
        .map(|g| -> Result<_> {
            let missing: Vec<&Tree> = trees
                .iter()
                .map(|t| contains_tree(g, t).map(|e| (t, e.is_none())))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter_map(|(t, miss)| miss.then_some(t))
                .collect();
            Ok((!missing.is_empty()).then(|| LemmaViolation {
                graph6: graph6::encode(g),
                diagnostic: format!(
                    "missing {} tree(s), first {}",
                    missing.len(),
                    graph6::encode(&missing[0].to_graph())
                ),
            }))
        })
        .collect::<Result<_>>()?;
    Ok(LemmaVerdict {
        lemma: LemmaId::Structure,
        n,
        k,
        graphs_scanned: supers.len(),
        graphs_checked: supers.len(),
        equality_cases: 0,
        violations: results.into_iter().flatten().collect(),
    })
}

/// Members of 𝒯_{2k+2} that `S(n,k)` itself does not contain.
pub fn extremal_missing(n: usize, k: usize) -> Result<Vec<Diam4Tree>> {
    contains_all(&make_snk(n, k)?, &enumerate_diam4_trees(2 * k + 2))
}

/// Runs one lemma checker by id.
pub fn check(lemma: LemmaId, n: usize, k: usize) -> Result<LemmaVerdict> {
    match lemma {
        LemmaId::Es4 => check_es_diam4(n, k),
        LemmaId::Matching => check_matching_lemma(n, k),
        LemmaId::Ves4 => check_lemma_ves4(n, k),
        LemmaId::Structure => check_structure_lemma(n, k),
    }
}

/// Every `(n, k)` with `n <= 8` that a checker accepts.
pub fn parameter_grid(lemma: LemmaId) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=MAX_ENUM_ORDER {
        for k in 1..=n {
            let ok = match lemma {
                LemmaId::Es4 => true,
                LemmaId::Matching => 2 * n >= 5 * k,
                LemmaId::Ves4 | LemmaId::Structure => n >= 2 * k + 2,
            };
            if ok {
                out.push((n, k));
            }
        }
    }
    out
}
