//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 usage or parameter
//! error, 3 violations found.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spectree::graph::{graph6, make_snk};
use spectree::spectral::{exact_radius_snk, spectral_radius, CharPolyParams};
use spectree::trees::enumerate_diam4_trees;
use spectree::verification::{self, Corpus, LemmaId};
use spectree::{Error, Graph};

pub const EXIT_IO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VIOLATION: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Error },
    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        let code = match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } | CliError::Parse { .. } => EXIT_IO,
            CliError::Lib(e) => match e {
                Error::InvalidParameters(_)
                | Error::UnsupportedSize { .. }
                | Error::CorpusRequired(_) => EXIT_USAGE,
                Error::Graph6(_)
                | Error::ConvergenceFailure { .. }
                | Error::CorpusIncomplete(_) => EXIT_IO,
            },
        };
        ExitCode::from(code)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "spectree",
    version,
    about = "Spectral extremal checks for trees of diameter at most four"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the trees of a given order with diameter at most four.
    GenTrees {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = TreeFormat::G6)]
        format: TreeFormat,
    },
    /// Spectral radius of graph6 graphs read from a file or stdin.
    Radius(RadiusArgs),
    /// Exhaustively check a supporting lemma at one (n, k).
    Check {
        #[arg(value_enum)]
        lemma: LemmaArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Census of tree-free graphs against the extremal benchmark.
    Census(CensusArgs),
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    /// graph6 file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Print the closed form for S(n,k) and its gap to power iteration.
    #[arg(long, value_name = "N,K")]
    exact_snk: Option<String>,
    #[arg(long, env = "SPECTREE_TOL", default_value_t = spectree::spectral::DEFAULT_TOL)]
    tol: f64,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// graph6 file with one graph per isomorphism class of order n.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Expected number of classes in the corpus.
    #[arg(long)]
    expected_count: Option<usize>,
    /// Worker threads; defaults to available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Report path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TreeFormat {
    G6,
    Multiset,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Human,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LemmaArg {
    Es4,
    Matching,
    Ves4,
    Structure,
}

impl From<LemmaArg> for LemmaId {
    fn from(l: LemmaArg) -> LemmaId {
        match l {
            LemmaArg::Es4 => LemmaId::Es4,
            LemmaArg::Matching => LemmaId::Matching,
            LemmaArg::Ves4 => LemmaId::Ves4,
            LemmaArg::Structure => LemmaId::Structure,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    A,
    B,
}

pub fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::GenTrees { order, format } => gen_trees(order, format),
        Command::Radius(args) => radius(args),
        Command::Check {
            lemma,
            n,
            k,
            format,
        } => check(lemma.into(), n, k, format),
        Command::Census(args) => census(args),
    }
}

fn gen_trees(order: usize, format: TreeFormat) -> CliResult<ExitCode> {
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for t in enumerate_diam4_trees(order) {
        let line = match format {
            TreeFormat::G6 => t.graph6(),
            TreeFormat::Multiset => t.notation(),
        };
        writeln!(out, "{line}").map_err(stdout_err)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_nk(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Usage(format!("--exact-snk expects N,K, got {s:?}"));
    let (n, k) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        n.trim().parse().map_err(|_| bad())?,
        k.trim().parse().map_err(|_| bad())?,
    ))
}

fn radius(args: RadiusArgs) -> CliResult<ExitCode> {
    if !(args.tol > 0.0 && args.tol < 1.0) {
        return Err(CliError::Usage(format!(
            "tolerance must lie in (0, 1), got {}",
            args.tol
        )));
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Some(spec) = &args.exact_snk {
        let (n, k) = parse_nk(spec)?;
        let exact = exact_radius_snk(n, k)?;
        let params = CharPolyParams::for_snk(n, k)?;
        let numeric = spectral_radius(&make_snk(n, k)?, args.tol)?.radius;
        writeln!(
            out,
            "S({n},{k}) closed_form={exact:.12} power_iteration={numeric:.12} delta={:.3e} \
             char_poly=x^2-{}x-{}",
            (exact - numeric).abs(),
            params.a,
            params.b
        )
        .map_err(stdout_err)?;
        if args.input.is_none() {
            return Ok(ExitCode::SUCCESS);
        }
    }
    let text = read_input(args.input.as_ref())?;
    let graphs = parse_graphs(&text)?;
    for (g6, g) in graphs {
        let r = spectral_radius(&g, args.tol)?;
        writeln!(out, "{g6}\t{:.12}", r.radius).map_err(stdout_err)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn check(lemma: LemmaId, n: usize, k: usize, format: OutputFormat) -> CliResult<ExitCode> {
    let verdict = verification::check(lemma, n, k)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        OutputFormat::Json => {
            let s = serde_json::to_string_pretty(&verdict).expect("verdict serializes");
            writeln!(out, "{s}").map_err(stdout_err)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["lemma", "n", "k", "graph6", "diagnostic"])
                .map_err(csv_err)?;
            for v in &verdict.violations {
                w.write_record([
                    lemma.name(),
                    &n.to_string(),
                    &k.to_string(),
                    &v.graph6,
                    &v.diagnostic,
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(stdout_err)?;
        }
        OutputFormat::Human => {
            writeln!(out, "{verdict}").map_err(stdout_err)?;
            for v in &verdict.violations {
                writeln!(out, "VIOLATION {} {}", v.graph6, v.diagnostic).map_err(stdout_err)?;
            }
        }
    }
    Ok(if verdict.holds() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    })
}

fn census(args: CensusArgs) -> CliResult<ExitCode> {
    let corpus = match &args.corpus {
        None => Corpus::Internal,
        Some(path) => {
            let text = read_input(Some(path))?;
            let graphs = parse_graphs(&text)?.into_iter().map(|(_, g)| g).collect();
            Corpus::External {
                graphs,
                expected: args.expected_count,
            }
        }
    };
    let jobs = match args.jobs {
        Some(0) => return Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |p| p.get()),
    };
    let report = match args.mode {
        ModeArg::A => verification::census_theorem(args.n, args.k, &corpus, jobs)?,
        ModeArg::B => verification::census_conjecture_b(args.n, args.k, &corpus, jobs)?,
    };
    let body = match args.format {
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Json => report.to_json(),
        OutputFormat::Human => report.to_human(),
    };
    match &args.out {
        Some(path) => fs::write(path, body).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(stdout_err)?,
    }
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    for v in &report.violations {
        eprintln!(
            "VIOLATION {} {} mu={:.12} margin={:.3e}",
            v.tree_id, v.graph6, v.mu, v.margin
        );
    }
    Ok(if report.has_violations() {
        ExitCode::from(EXIT_VIOLATION)
    } else {
        ExitCode::SUCCESS
    })
}

fn read_input(path: Option<&PathBuf>) -> CliResult<String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(s)
        }
    }
}

/// graph6 lines paired with their decoded graphs; blank lines and the
/// optional `>>graph6<<` header are skipped.
fn parse_graphs(text: &str) -> CliResult<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(graph6::HEADER).unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line).map_err(|source| CliError::Parse {
            line: i + 1,
            source,
        })?;
        out.push((line.to_string(), g));
    }
    Ok(out)
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source,
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e.into(),
    }
}
