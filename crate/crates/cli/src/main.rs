use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use conetutte::poset::build_poset;
use conetutte::trees::{apply_shift, enumerate_trees, CanonicalTree, ShiftSite};
use conetutte::tutte::{tutte_at_x1, tutte_subset_oracle};
use conetutte::verify::{run_suite, Report, Suite, SuiteConfig, Summary};
use conetutte::{cone, corpus, verify, IntPolynomial, Multigraph};

/// Tutte polynomials T(1,y) of cones over graphs, tree shifts, and their
/// verification suites.
#[derive(Debug, Parser)]
#[command(name = "conetutte", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// T_G(1,y) of the graph in FILE.
    Tutte {
        file: PathBuf,
        /// Full bivariate T_G(x,y) by subset expansion (at most 20 edges).
        #[arg(long)]
        full: bool,
    },
    /// f(G) = T_{Cone(G)}(1,y).
    ConeF { file: PathBuf },
    /// g_v(G): the cone with the spoke at v deleted.
    Gv {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// All trees on N vertices up to isomorphism.
    Trees {
        n: usize,
        /// Print only the number of trees.
        #[arg(long)]
        count: bool,
    },
    /// Generalized tree shift of the tree in FILE along the path from v1 to vk.
    Shift {
        file: PathBuf,
        #[arg(long)]
        v1: usize,
        #[arg(long)]
        vk: usize,
    },
    /// Build the shift poset on trees with N vertices.
    Poset {
        n: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// f(T) for every tree on N vertices; path first, star last.
    Table { n: usize },
    /// Run a verification suite.
    Verify {
        /// factorization, conjecture, extremes, identities, general-lemma,
        /// table7, oracles or all.
        suite: String,
        /// Largest tree size for the tree suites.
        #[arg(long, default_value_t = verify::DEFAULT_TREE_N)]
        n: usize,
        /// Random trials for the randomized suites.
        #[arg(long, default_value_t = verify::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = corpus::DEFAULT_SEED)]
        seed: u64,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON-lines report stream here (`-` for stdout).
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn read_graph(path: &Path) -> Result<Multigraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Multigraph::from_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_poly(out: &mut impl Write, p: &IntPolynomial) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(p)?)?;
    writeln!(out, "{p}")?;
    Ok(())
}

/// `Ok(false)` means a verification failure (exit 1); errors are input or
/// usage problems (exit 2).
fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Tutte { file, full } => {
            let g = read_graph(&file)?;
            if full {
                let t = tutte_subset_oracle(&g)?;
                let terms: Vec<[i128; 3]> = t.terms().map(|((a, b), c)| [a as i128, b as i128, c]).collect();
                writeln!(out, "{}", serde_json::to_string(&terms)?)?;
                writeln!(out, "{t}")?;
            } else {
                print_poly(out, &tutte_at_x1(&g))?;
            }
        }
        Command::ConeF { file } => print_poly(out, &cone::f(&read_graph(&file)?))?,
        Command::Gv { file, vertex } => print_poly(out, &cone::g(&read_graph(&file)?, vertex)?)?,
        Command::Trees { n, count } => {
            let trees = enumerate_trees(n)?;
            if count {
                writeln!(out, "{}", trees.len())?;
            } else {
                for (i, t) in trees.iter().enumerate() {
                    writeln!(out, "# tree {i} code={} leaves={}", t.code(), t.leaf_count())?;
                    write!(out, "{}", t.graph().to_edge_list())?;
                }
            }
        }
        Command::Shift { file, v1, vk } => {
            let g = read_graph(&file)?;
            let before = CanonicalTree::new(&g)?;
            let after = apply_shift(&g, ShiftSite::new(v1, vk))?;
            writeln!(
                out,
                "# code={} leaves_before={} leaves_after={}",
                after.code(),
                before.leaf_count(),
                after.leaf_count()
            )?;
            write!(out, "{}", after.graph().to_edge_list())?;
        }
        Command::Poset { n, dot, json } => {
            let d = build_poset(n)?;
            if let Some(path) = dot {
                fs::write(&path, d.to_dot()).with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = json {
                fs::write(&path, serde_json::to_string_pretty(&d.to_json())? + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let (mins, maxs) = d.extremes();
            writeln!(
                out,
                "nodes={} covers={} minimal={} maximal={}",
                d.nodes().len(),
                d.cover_count(),
                mins.len(),
                maxs.len()
            )?;
        }
        Command::Table { n } => {
            let mut trees = enumerate_trees(n)?;
            // path first, star last, the rest in code order
            trees.sort_by_key(|t| (!t.is_path(), t.is_star() && !t.is_path(), t.code().clone()));
            for (i, t) in trees.iter().enumerate() {
                let fv = cone::f(t.graph());
                writeln!(out, "{}\t{}\t{}\t{}\t{fv}", i + 1, t.code(), t.leaf_count(), serde_json::to_string(&fv)?)?;
            }
        }
        Command::Verify { suite, n, trials, seed, jobs, report } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::from_name(&suite).ok_or_else(|| anyhow!("unknown suite {suite:?}"))?]
            };
            let config = SuiteConfig { n_max: n, trials, seed };
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build()?;
            let mut results: Vec<(Suite, Vec<Report>)> = Vec::new();
            for s in suites {
                results.push((s, pool.install(|| run_suite(s, config))?));
            }
            if let Some(path) = report {
                let mut lines = String::new();
                for r in results.iter().flat_map(|(_, rs)| rs) {
                    lines.push_str(&r.to_json_line());
                    lines.push('\n');
                }
                if path.as_os_str() == "-" {
                    out.write_all(lines.as_bytes())?;
                } else {
                    fs::write(&path, lines).with_context(|| format!("writing {}", path.display()))?;
                }
            }
            return print_summary(out, &results);
        }
    }
    Ok(true)
}

/// Summary table, annotated reports and the first few failures.
fn print_summary(out: &mut impl Write, results: &[(Suite, Vec<Report>)]) -> Result<bool> {
    let mut ok = true;
    writeln!(out, "{:<16} {:>8} {:>8}  status", "suite", "passed", "total")?;
    for (suite, reports) in results {
        let s = Summary::of(reports);
        ok &= s.all_passed();
        let status = if s.all_passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{:<16} {:>8} {:>8}  {status}", suite.name(), s.passed, s.total)?;
    }
    for (suite, reports) in results {
        for r in reports.iter().filter(|r| r.note.is_some()) {
            writeln!(out, "note [{}] {} {}: {}", suite.name(), r.check, r.input, r.note.as_deref().unwrap_or(""))?;
        }
        for r in reports.iter().filter(|r| !r.pass).take(10) {
            writeln!(out, "failed [{}] {}", suite.name(), r.to_json_line())?;
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
