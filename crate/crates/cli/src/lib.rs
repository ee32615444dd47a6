//! Command-line workbench for biclique partitions.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 input not co-chordal,
//! 3 partition failed verification.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use bicliq_core::format::{parse_graph, parse_partition, write_graph, write_partition};
use bicliq_core::{
    bounds_report, exact_bp, gen, gen_co_chordal, mc, partition_auto, verify_partition, EdgeChoiceStrategy, Error,
    GenSpec, Graph, Method, OracleConfig, Verdict,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_NOT_CO_CHORDAL: u8 = 2;
pub const EXIT_VERIFY_FAIL: u8 = 3;

/// Environment variable that replaces the default oracle expansion budget.
pub const BUDGET_ENV: &str = "BICLIQ_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "bicliq", version, about = "Biclique partitions of co-chordal graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition a co-chordal graph into bicliques.
    Partition {
        input: PathBuf,
        #[arg(long, default_value = "lexbfs")]
        method: Method,
        #[arg(long, default_value = "first")]
        strategy: EdgeChoiceStrategy,
        /// Write the partition here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a partition file against a graph file.
    Verify { graph: PathBuf, partition: PathBuf },
    /// Report lower and upper bounds on the biclique partition number.
    Bounds {
        input: PathBuf,
        /// Also run the exact oracle.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Generate instances and run both heuristics, one CSV row each. With
    /// `--kind chordal` the instances are the complements of the generated
    /// chordal graphs.
    Sweep {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Run the exact oracle on each instance.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        oracle: OracleArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated graph file.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    /// Node-expansion budget for the oracle (default from BICLIQ_BUDGET).
    #[arg(long)]
    pub budget: Option<u64>,
    /// Largest edge count the oracle accepts.
    #[arg(long, default_value_t = bicliq_core::exact::DEFAULT_EDGE_CAP)]
    pub edge_cap: usize,
}

impl OracleArgs {
    pub fn config(&self) -> Result<OracleConfig> {
        let budget = match self.budget {
            Some(b) => b,
            None => match std::env::var(BUDGET_ENV) {
                Ok(v) => v.trim().parse().with_context(|| format!("{BUDGET_ENV}={v:?} is not a count"))?,
                Err(_) => bicliq_core::exact::DEFAULT_BUDGET,
            },
        };
        Ok(OracleConfig { edge_cap: self.edge_cap, budget })
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Chordal,
    /// Complement of a chordal graph.
    CoChordal,
    Split,
    Complete,
    Cycle,
    Path,
    Star,
    Empty,
    ErdosRenyi,
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    #[arg(long, value_enum, default_value = "co-chordal")]
    pub kind: Kind,
    /// Vertex count (for split graphs: clique plus independent side).
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    /// Clique side size for split graphs (default n / 2).
    #[arg(long)]
    pub clique: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl SpecArgs {
    fn spec(&self, seed: u64) -> GenSpec {
        let (n, density) = (self.n, self.density);
        match self.kind {
            Kind::Chordal | Kind::CoChordal => GenSpec::Chordal { n, density, seed },
            Kind::Split => {
                let clique = self.clique.unwrap_or(n / 2).min(n);
                GenSpec::Split { clique, independent: n - clique, density, seed }
            }
            Kind::Complete => GenSpec::Complete { n },
            Kind::Cycle => GenSpec::Cycle { n },
            Kind::Path => GenSpec::Path { n },
            Kind::Star => GenSpec::Star { leaves: n.saturating_sub(1) },
            Kind::Empty => GenSpec::Empty { n },
            Kind::ErdosRenyi => GenSpec::ErdosRenyi { n, density, seed },
        }
    }

    /// Instance `index` of a batch; instance 0 uses `seed` itself.
    pub fn generate(&self, index: u64) -> Result<Graph> {
        let spec = self.spec(self.seed.wrapping_add(index));
        let g = match self.kind {
            Kind::CoChordal => gen_co_chordal(&spec)?,
            _ => gen(&spec)?,
        };
        Ok(g)
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Runs one command. `Ok` carries the exit code; errors map to exit 1.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Partition { input, method, strategy, out: path } => {
            let g = read_graph(&input)?;
            let (partition, mc) = match partition_auto(&g, method, strategy) {
                Ok(r) => r,
                Err(e @ (Error::NotCoChordal(_) | Error::EmptyGraph)) => {
                    writeln!(out, "{e}")?;
                    return Ok(EXIT_NOT_CO_CHORDAL);
                }
                Err(e) => return Err(e.into()),
            };
            let verified = verify_partition(&g, partition.parts()).is_pass();
            emit(out, path.as_deref(), &write_partition(&partition))?;
            writeln!(out, "parts={} mc={} verified={}", partition.len(), mc, verified)?;
            Ok(if verified { EXIT_OK } else { EXIT_VERIFY_FAIL })
        }
        Command::Verify { graph, partition } => {
            let g = read_graph(&graph)?;
            let text = fs::read_to_string(&partition).with_context(|| format!("reading {}", partition.display()))?;
            let p = parse_partition(&text).with_context(|| format!("parsing {}", partition.display()))?;
            match verify_partition(&g, p.parts()) {
                Verdict::Pass => {
                    writeln!(out, "PASS")?;
                    Ok(EXIT_OK)
                }
                Verdict::Fail(v) => {
                    writeln!(out, "FAIL: {v}")?;
                    Ok(EXIT_VERIFY_FAIL)
                }
            }
        }
        Command::Bounds { input, exact, oracle } => {
            let g = read_graph(&input)?;
            let cfg = oracle.config()?;
            let report = bounds_report(&g, exact.then_some(&cfg))?;
            write!(out, "{report}")?;
            Ok(EXIT_OK)
        }
        Command::Sweep { spec, count, exact, oracle, out: path } => {
            let cfg = exact.then(|| oracle.config()).transpose()?;
            let mut spec = spec;
            if spec.kind == Kind::Chordal {
                spec.kind = Kind::CoChordal;
            }
            let rows = match sweep_rows(&spec, count, cfg.as_ref()) {
                Ok(rows) => rows,
                Err(e) => match e.downcast_ref::<Error>() {
                    Some(Error::NotCoChordal(_) | Error::EmptyGraph) => {
                        writeln!(out, "{e}")?;
                        return Ok(EXIT_NOT_CO_CHORDAL);
                    }
                    _ => return Err(e),
                },
            };
            let text = sweep_csv(&rows, exact)?;
            emit(out, path.as_deref(), &text)?;
            Ok(if rows.iter().all(|r| r.agreement) { EXIT_OK } else { EXIT_VERIFY_FAIL })
        }
        Command::Gen { spec, out: path } => {
            let g = spec.generate(0)?;
            emit(out, path.as_deref(), &write_graph(&g))?;
            Ok(EXIT_OK)
        }
    }
}

pub const SWEEP_COLUMNS: [&str; 9] =
    ["index", "n", "m", "mc", "clique_tree_parts", "lexbfs_parts", "agreement", "clique_tree_ms", "lexbfs_ms"];

/// CSV text with a header row; `exact` adds an `exact_bp` column.
pub fn sweep_csv(rows: &[SweepRow], exact: bool) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = SWEEP_COLUMNS.to_vec();
    if exact {
        header.push("exact_bp");
    }
    w.write_record(&header)?;
    for r in rows {
        w.write_record(r.fields(exact))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub index: usize,
    pub n: usize,
    pub m: usize,
    pub mc: usize,
    pub clique_tree_parts: usize,
    pub lexbfs_parts: usize,
    /// Both partitions verify and both have `mc - 1` parts.
    pub agreement: bool,
    pub clique_tree_ms: f64,
    pub lexbfs_ms: f64,
    /// Oracle result: the value when complete, otherwise a note.
    pub exact: Option<String>,
}

impl SweepRow {
    pub fn fields(&self, with_exact: bool) -> Vec<String> {
        let mut f = vec![
            self.index.to_string(),
            self.n.to_string(),
            self.m.to_string(),
            self.mc.to_string(),
            self.clique_tree_parts.to_string(),
            self.lexbfs_parts.to_string(),
            self.agreement.to_string(),
            format!("{:.3}", self.clique_tree_ms),
            format!("{:.3}", self.lexbfs_ms),
        ];
        if with_exact {
            f.push(self.exact.clone().unwrap_or_default());
        }
        f
    }
}

fn sweep_one(g: &Graph, index: usize, oracle: Option<&OracleConfig>) -> Result<SweepRow> {
    let timed = |method| -> Result<(usize, bool, f64)> {
        let start = Instant::now();
        let (p, _) = partition_auto(g, method, EdgeChoiceStrategy::FirstCanonical)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        Ok((p.len(), verify_partition(g, p.parts()).is_pass(), ms))
    };
    let (ct, ct_ok, ct_ms) = timed(Method::CliqueTree)?;
    let (lx, lx_ok, lx_ms) = timed(Method::Lexbfs)?;
    let mc = mc(&g.complement())?;
    let exact = match oracle {
        None => None,
        Some(cfg) => Some(match exact_bp(g, cfg) {
            Ok(r) if r.complete => r.bp.to_string(),
            Ok(r) => format!("incomplete[{}..{}]", r.lower_bound, r.bp),
            Err(Error::EdgeCapExceeded { .. }) => "skipped".to_string(),
            Err(e) => return Err(e.into()),
        }),
    };
    Ok(SweepRow {
        index,
        n: g.n(),
        m: g.m(),
        mc,
        clique_tree_parts: ct,
        lexbfs_parts: lx,
        agreement: ct_ok && lx_ok && ct + 1 == mc && lx + 1 == mc,
        clique_tree_ms: ct_ms,
        lexbfs_ms: lx_ms,
        exact,
    })
}

/// Generates `count` instances and evaluates them on worker threads. Rows
/// come back in instance order.
pub fn sweep_rows(spec: &SpecArgs, count: usize, oracle: Option<&OracleConfig>) -> Result<Vec<SweepRow>> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(count.max(1));
    let mut slots: Vec<Option<Result<SweepRow>>> = (0..count).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (w, chunk) in slots.chunks_mut(count.div_ceil(workers).max(1)).enumerate() {
            let base = w * count.div_ceil(workers).max(1);
            scope.spawn(move || {
                for (off, slot) in chunk.iter_mut().enumerate() {
                    let index = base + off;
                    *slot = Some(spec.generate(index as u64).and_then(|g| sweep_one(&g, index, oracle)));
                }
            });
        }
    });
    slots.into_iter().map(|s| s.expect("every slot is filled")).collect()
}
