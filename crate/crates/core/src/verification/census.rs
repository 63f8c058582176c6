//! Censuses over all graphs of a given order.
//!
//! For every tree `T` of the target family, the census finds the largest
//! spectral radius among `T`-free graphs and compares it with the extremal
//! benchmark. Mode `a` uses trees of order `2k+2` and `μ(S(n,k))`; mode `b`
//! uses trees of order `2k+3` and `μ(S+(n,k))`.
//!
//! Work is split into contiguous shards, each shard produces per-tree
//! accumulators, and accumulators merge with sum / max / sorted-union, so
//! the report does not depend on the shard count.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::embedding::{contains_tree, missing_indices};
use crate::error::{invalid, Error, Result};
use crate::graph::{
    enumerate_graphs, graph6, is_snk, is_snk_plus, known_class_count, Graph, MAX_ENUM_ORDER,
};
use crate::spectral::{exact_radius_snk, exact_radius_snk_plus, spectral_radius, DEFAULT_TOL};
use crate::trees::{enumerate_diam4_trees, Diam4Tree};

/// One-sided tolerance for raising a flag: `μ(G) >= benchmark - FLAG_TOL`.
pub const FLAG_TOL: f64 = 1e-9;
/// Graphs within this distance of the maximum are listed as argmax.
pub const ARGMAX_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusMode {
    A,
    B,
}

impl CensusMode {
    pub fn tree_order(self, k: usize) -> usize {
        match self {
            CensusMode::A => 2 * k + 2,
            CensusMode::B => 2 * k + 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            CensusMode::A => "a",
            CensusMode::B => "b",
        }
    }
}

/// Graph source for a census.
#[derive(Debug, Clone)]
pub enum Corpus {
    /// Built-in enumeration (orders up to 8).
    Internal,
    /// Graphs read elsewhere, with an optional expected class count.
    External {
        graphs: Vec<Graph>,
        expected: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusRow {
    pub tree_id: String,
    pub tree_g6: String,
    pub free_count: usize,
    /// `None` when no graph in the corpus avoids the tree.
    pub max_mu: Option<f64>,
    pub argmax_g6: Vec<String>,
    pub benchmark: f64,
    /// `max_mu - benchmark`.
    pub margin: Option<f64>,
    /// Mode b: `max_mu - μ(S+(n,k))`.
    pub margin_plus: Option<f64>,
    /// Mode b: which benchmark the maximum tracks.
    pub tracks: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusViolation {
    pub tree_id: String,
    pub graph6: String,
    pub mu: f64,
    pub benchmark: f64,
    pub margin: f64,
    /// Radius recomputed and tree-freeness re-checked from the decoded
    /// graph6 string.
    pub reverified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub mode: CensusMode,
    pub n: usize,
    pub k: usize,
    pub config: BTreeMap<String, String>,
    pub corpus_size: usize,
    /// μ(S(n,k)).
    pub benchmark: f64,
    /// μ(S+(n,k)), mode b only.
    pub benchmark_plus: Option<f64>,
    pub rows: Vec<CensusRow>,
    pub violations: Vec<CensusViolation>,
    pub warnings: Vec<String>,
    pub note: String,
}

impl CensusReport {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
struct Acc {
    free_count: usize,
    max_mu: Option<f64>,
    argmax: Vec<(String, f64)>,
    flagged: Vec<(String, f64)>,
}

impl Acc {
    fn push(&mut self, g6: &str, mu: f64, flag: bool) {
        self.free_count += 1;
        if self.max_mu.is_none_or(|m| mu > m) {
            self.max_mu = Some(mu);
        }
        self.argmax.push((g6.to_string(), mu));
        self.prune();
        if flag {
            self.flagged.push((g6.to_string(), mu));
        }
    }

    fn prune(&mut self) {
        if let Some(m) = self.max_mu {
            self.argmax.retain(|(_, mu)| *mu >= m - ARGMAX_TOL);
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        self.free_count += other.free_count;
        self.max_mu = match (self.max_mu, other.max_mu) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self.argmax.extend(other.argmax);
        self.flagged.extend(other.flagged);
        self.prune();
        self
    }

    fn finish(mut self) -> Acc {
        self.argmax.sort_by(|a, b| a.0.cmp(&b.0));
        self.argmax.dedup_by(|a, b| a.0 == b.0);
        self.flagged.sort_by(|a, b| a.0.cmp(&b.0));
        self.flagged.dedup_by(|a, b| a.0 == b.0);
        self
    }
}

fn format_mu(x: f64) -> String {
    format!("{x:.12}")
}

/// Census against `μ(S(n,k))` over trees of order `2k+2`.
pub fn census_theorem(n: usize, k: usize, corpus: &Corpus, jobs: usize) -> Result<CensusReport> {
    run_census(CensusMode::A, n, k, corpus, jobs)
}

/// Census against `μ(S(n,k))` and `μ(S+(n,k))` over trees of order `2k+3`.
pub fn census_conjecture_b(
    n: usize,
    k: usize,
    corpus: &Corpus,
    jobs: usize,
) -> Result<CensusReport> {
    run_census(CensusMode::B, n, k, corpus, jobs)
}

pub fn run_census(
    mode: CensusMode,
    n: usize,
    k: usize,
    corpus: &Corpus,
    jobs: usize,
) -> Result<CensusReport> {
    let m = mode.tree_order(k);
    if k == 0 || n < m {
        return Err(invalid(format!(
            "census mode {} needs k >= 1 and n >= {m} (trees of order {m}), got n={n}, k={k}",
            mode.label()
        )));
    }
    if m > crate::embedding::MAX_TREE_ORDER {
        return Err(Error::UnsupportedSize {
            what: "census tree order",
            got: m,
            cap: crate::embedding::MAX_TREE_ORDER,
        });
    }

    let mut warnings = Vec::new();
    let internal;
    let (graphs, corpus_label): (&[Graph], String) = match corpus {
        Corpus::Internal => {
            if n > MAX_ENUM_ORDER {
                return Err(Error::CorpusRequired(format!(
                    "internal enumeration stops at order {MAX_ENUM_ORDER}; supply a graph6 corpus for n={n}"
                )));
            }
            internal = enumerate_graphs(n)?;
            (&internal[..], "internal".to_string())
        }
        Corpus::External { graphs, expected } => {
            if graphs.is_empty() {
                return Err(Error::CorpusIncomplete("corpus is empty".into()));
            }
            if let Some((i, g)) = graphs.iter().enumerate().find(|(_, g)| g.order() != n) {
                return Err(Error::CorpusIncomplete(format!(
                    "graph {} has order {}, census order is {n}",
                    i + 1,
                    g.order()
                )));
            }
            let want = expected.or_else(|| known_class_count(n));
            match want {
                Some(w) if w != graphs.len() => warnings.push(format!(
                    "corpus-incomplete: {} graphs supplied, {w} isomorphism classes expected",
                    graphs.len()
                )),
                None => warnings.push(format!(
                    "corpus of {} graphs could not be checked against an expected class count",
                    graphs.len()
                )),
                _ => {}
            }
            (&graphs[..], "external".to_string())
        }
    };

    let family = enumerate_diam4_trees(m);
    let benchmark = exact_radius_snk(n, k)?;
    let benchmark_plus = match mode {
        CensusMode::A => None,
        CensusMode::B => Some(exact_radius_snk_plus(n, k)?),
    };
    let flag_bench = benchmark_plus.unwrap_or(benchmark);
    let is_extremal = |g: &Graph| match mode {
        CensusMode::A => is_snk(g, k),
        CensusMode::B => is_snk_plus(g, k),
    };

    let jobs = jobs.max(1);
    let shard_len = graphs.len().div_ceil(jobs).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| invalid(format!("worker pool: {e}")))?;
    let shard_accs: Vec<Vec<Acc>> = pool.install(|| {
        graphs
            .par_chunks(shard_len)
            .map(|shard| -> Result<Vec<Acc>> {
                let mut accs = vec![Acc::default(); family.len()];
                for g in shard {
                    let missing = missing_indices(g, &family)?;
                    if missing.is_empty() {
                        continue;
                    }
                    let mu = spectral_radius(g, DEFAULT_TOL)?.radius;
                    let g6 = graph6::encode(g);
                    let flag = mu >= flag_bench - FLAG_TOL && !is_extremal(g);
                    for i in missing {
                        accs[i].push(&g6, mu, flag);
                    }
                }
                Ok(accs)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let accs: Vec<Acc> = (0..family.len())
        .map(|i| {
            shard_accs
                .iter()
                .map(|s| s[i].clone())
                .fold(Acc::default(), Acc::merge)
                .finish()
        })
        .collect();

    let mut rows = Vec::with_capacity(family.len());
    let mut violations = Vec::new();
    for (tree, acc) in family.iter().zip(accs) {
        let tree_id = tree.notation();
        for (g6, mu) in &acc.flagged {
            match reverify(g6, tree, flag_bench, mode, k) {
                Ok(true) => violations.push(CensusViolation {
                    tree_id: tree_id.clone(),
                    graph6: g6.clone(),
                    mu: *mu,
                    benchmark: flag_bench,
                    margin: mu - flag_bench,
                    reverified: true,
                }),
                Ok(false) => warnings.push(format!(
                    "flag on {g6} for {tree_id} did not survive re-verification"
                )),
                Err(e) => warnings.push(format!("re-verification of {g6} failed: {e}")),
            }
        }
        let tracks = benchmark_plus.map(|bp| tracks_label(&acc, benchmark, bp, k));
        rows.push(CensusRow {
            tree_id,
            tree_g6: tree.graph6(),
            free_count: acc.free_count,
            max_mu: acc.max_mu,
            argmax_g6: acc.argmax.iter().map(|(g6, _)| g6.clone()).collect(),
            benchmark,
            margin: acc.max_mu.map(|m| m - benchmark),
            margin_plus: benchmark_plus.and_then(|bp| acc.max_mu.map(|m| m - bp)),
            tracks,
        });
    }

    let mut config = BTreeMap::new();
    config.insert("mode".into(), mode.label().into());
    config.insert("n".into(), n.to_string());
    config.insert("k".into(), k.to_string());
    config.insert("corpus".into(), corpus_label);
    if let Corpus::External {
        expected: Some(e), ..
    } = corpus
    {
        config.insert("expected_count".into(), e.to_string());
    }
    config.insert("flag_tol".into(), format!("{FLAG_TOL:e}"));
    config.insert("spectral_tol".into(), format!("{DEFAULT_TOL:e}"));

    let threshold = 2 * (k + 2).pow(4);
    Ok(CensusReport {
        mode,
        n,
        k,
        config,
        corpus_size: graphs.len(),
        benchmark,
        benchmark_plus,
        rows,
        violations,
        warnings,
        note: format!(
            "the asymptotic statement is claimed only for n > 2(k+2)^4 = {threshold}; \
             at n = {n} flags are exploratory findings, not refutations"
        ),
    })
}

/// Decodes the witness afresh and re-checks radius, tree-freeness and
/// non-extremality.
fn reverify(g6: &str, tree: &Diam4Tree, bench: f64, mode: CensusMode, k: usize) -> Result<bool> {
    let g = graph6::decode(g6)?;
    let mu = spectral_radius(&g, DEFAULT_TOL)?.radius;
    let extremal = match mode {
        CensusMode::A => is_snk(&g, k),
        CensusMode::B => is_snk_plus(&g, k),
    };
    Ok(mu >= bench - FLAG_TOL && !extremal && contains_tree(&g, tree.tree())?.is_none())
}

fn tracks_label(acc: &Acc, bench: f64, bench_plus: f64, k: usize) -> String {
    let Some(max) = acc.max_mu else {
        return "none".into();
    };
    let argmax: Vec<Graph> = acc
        .argmax
        .iter()
        .filter_map(|(g6, _)| graph6::decode(g6).ok())
        .collect();
    if argmax.iter().any(|g| is_snk_plus(g, k)) {
        "S+(n,k)".into()
    } else if argmax.iter().any(|g| is_snk(g, k)) {
        "S(n,k)".into()
    } else if max > bench_plus + ARGMAX_TOL {
        "above S+(n,k)".into()
    } else if max > bench + ARGMAX_TOL {
        "between S(n,k) and S+(n,k)".into()
    } else {
        "below S(n,k)".into()
    }
}

impl CensusReport {
    fn header_lines(&self) -> Vec<String> {
        let mut out = vec![format!(
            "spectree census mode={} n={} k={}",
            self.mode.label(),
            self.n,
            self.k
        )];
        let cfg: Vec<String> = self
            .config
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        out.push(format!("config: {}", cfg.join(" ")));
        out.push(format!("corpus_size: {}", self.corpus_size));
        out.push(format!("benchmark_snk: {}", format_mu(self.benchmark)));
        if let Some(bp) = self.benchmark_plus {
            out.push(format!("benchmark_snk_plus: {}", format_mu(bp)));
        }
        out.push(format!("note: {}", self.note));
        out
    }

    /// CSV with `#` comment lines for the config, then columns
    /// `tree_id,free_count,max_mu,margin,argmax_g6` (mode b appends
    /// `margin_plus,tracks`), then `#` lines for violations and warnings.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for line in self.header_lines() {
            writeln!(out, "# {line}").unwrap();
        }
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        let mut header = vec!["tree_id", "free_count", "max_mu", "margin", "argmax_g6"];
        if self.mode == CensusMode::B {
            header.extend(["margin_plus", "tracks"]);
        }
        w.write_record(&header).unwrap();
        for row in &self.rows {
            let mut rec = vec![
                row.tree_id.clone(),
                row.free_count.to_string(),
                row.max_mu.map(format_mu).unwrap_or_default(),
                row.margin.map(format_mu).unwrap_or_default(),
                row.argmax_g6.join(" "),
            ];
            if self.mode == CensusMode::B {
                rec.push(row.margin_plus.map(format_mu).unwrap_or_default());
                rec.push(row.tracks.clone().unwrap_or_default());
            }
            w.write_record(&rec).unwrap();
        }
        out.push_str(&String::from_utf8(w.into_inner().unwrap()).unwrap());
        for v in &self.violations {
            writeln!(
                out,
                "# VIOLATION tree={} graph6={} mu={} margin={} reverified={}",
                v.tree_id,
                v.graph6,
                format_mu(v.mu),
                format_mu(v.margin),
                v.reverified
            )
            .unwrap();
        }
        for wmsg in &self.warnings {
            writeln!(out, "# WARNING {wmsg}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for line in self.header_lines() {
            writeln!(out, "{line}").unwrap();
        }
        writeln!(out).unwrap();
        for row in &self.rows {
            write!(
                out,
                "{:<24} free={:<6} max_mu={:<16} margin={:<16}",
                row.tree_id,
                row.free_count,
                row.max_mu.map(format_mu).unwrap_or_else(|| "-".into()),
                row.margin.map(format_mu).unwrap_or_else(|| "-".into()),
            )
            .unwrap();
            if let Some(t) = &row.tracks {
                write!(out, " tracks={t}").unwrap();
            }
            writeln!(out, " argmax={}", row.argmax_g6.join(",")).unwrap();
        }
        if self.violations.is_empty() {
            writeln!(out, "\nno flags raised").unwrap();
        } else {
            writeln!(out, "\n{} flag(s):", self.violations.len()).unwrap();
            for v in &self.violations {
                writeln!(
                    out,
                    "  VIOLATION {} {} mu={} margin={} reverified={}",
                    v.tree_id,
                    v.graph6,
                    format_mu(v.mu),
                    format_mu(v.margin),
                    v.reverified
                )
                .unwrap();
            }
        }
        for wmsg in &self.warnings {
            writeln!(out, "warning: {wmsg}").unwrap();
        }
        out
    }
}
