//! Command-line surface. [`run`] writes to caller-supplied streams and
//! returns the process exit code so it can be driven from tests.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::ecst::tree_total_weight;
use crate::graph::{EdgeId, WeaklyDynamicGraph};
use crate::io::{
    generate_graph, parse_events, parse_graph, read_plan, simulate, write_graph, write_plan,
    GeneratorConfig,
};
use crate::oracle::{brute_critical_value, enumerate_spanning_trees};
use crate::precompute::{precompute_all, select_tree, PlanSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "wdmst", version, about = "Precomputed alternative MSTs for graphs with unstable edges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build plans for every unstable edge and write them as JSON.
    Precompute {
        graph: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Pick the optimal precomputed tree for one edge value.
    Query {
        plan: PathBuf,
        graph: PathBuf,
        #[arg(long)]
        edge: EdgeId,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Replay a weight-change event file and report latencies.
    Simulate {
        plan: PathBuf,
        graph: PathBuf,
        events: PathBuf,
        #[arg(long)]
        compare_naive: bool,
    },
    /// Print a random connected graph.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        extra_edges: usize,
        #[arg(long, default_value_t = 1)]
        unstable: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check plans against exhaustive enumeration (small graphs only).
    Verify {
        graph: PathBuf,
        #[arg(long, default_value_t = 3.0)]
        halfwidth: f64,
        #[arg(long, default_value_t = 0.5)]
        step: f64,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_USAGE, message: format!("cannot open {}: {e}", path.display()) })
}

fn load_graph(path: &Path) -> Result<WeaklyDynamicGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_plans(path: &Path, g: &WeaklyDynamicGraph) -> Result<PlanSet, Failure> {
    read_plan(&read(path)?, g).map_err(|e| format!("{}: {e}", path.display()).into())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Precompute { graph, out: plan_path } => precompute(&graph, &plan_path, out),
        Command::Query { plan, graph, edge, x } => query(&plan, &graph, edge, x, out),
        Command::Simulate { plan, graph, events, compare_naive } => {
            run_simulation(&plan, &graph, &events, compare_naive, out)
        }
        Command::Generate { n, extra_edges, unstable, seed } => {
            generate(GeneratorConfig { n, extra_edges, unstable, seed }, out)
        }
        Command::Verify { graph, halfwidth, step } => verify(&graph, halfwidth, step, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn precompute(graph: &Path, plan_path: &Path, out: &mut dyn Write) -> CmdResult {
    let g = load_graph(graph)?;
    let ps = precompute_all(&g);
    std::fs::write(plan_path, write_plan(&ps, &g))
        .map_err(|e| format!("cannot write {}: {e}", plan_path.display()))?;
    for p in ps.plans() {
        writeln!(out, "edge {}: d_s={} s_v={} cv={}", p.unstable_edge(), p.d_s(), p.s_v(), p.cv())?;
    }
    Ok(EXIT_OK)
}

fn join_ids(ids: &[EdgeId]) -> String {
    ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn query(plan: &Path, graph: &Path, edge: EdgeId, x: f64, out: &mut dyn Write) -> CmdResult {
    if !x.is_finite() {
        return Err(format!("x must be finite, got {x}").into());
    }
    let g = load_graph(graph)?;
    let ps = load_plans(plan, &g)?;
    let sel = ps.select(edge, x)?;
    writeln!(out, "{} {}", sel.chosen.as_str(), sel.total_weight)?;
    writeln!(out, "edges: {}", join_ids(sel.tree.edge_ids()))?;
    Ok(EXIT_OK)
}

fn run_simulation(
    plan: &Path,
    graph: &Path,
    events: &Path,
    compare_naive: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let mut g = load_graph(graph)?;
    let ps = load_plans(plan, &g)?;
    let events = parse_events(&read(events)?)?;
    let (report, _) = simulate(ps, &mut g, &events, compare_naive)?;
    write!(out, "{report}")?;
    Ok(EXIT_OK)
}

fn generate(cfg: GeneratorConfig, out: &mut dyn Write) -> CmdResult {
    let g = generate_graph(cfg)?;
    writeln!(out, "c generated n={} extra_edges={} unstable={} seed={}", cfg.n, cfg.extra_edges, cfg.unstable, cfg.seed)?;
    write!(out, "{}", write_graph(&g))?;
    Ok(EXIT_OK)
}

/// Grid `centre + k * step` for `|k * step| <= halfwidth`.
fn grid(centre: f64, halfwidth: f64, step: f64) -> Vec<f64> {
    let k = (halfwidth / step).floor() as i64;
    (-k..=k).map(|i| centre + i as f64 * step).collect()
}

fn verify(graph: &Path, halfwidth: f64, step: f64, out: &mut dyn Write) -> CmdResult {
    if !(step > 0.0 && step.is_finite() && halfwidth >= 0.0 && halfwidth.is_finite()) {
        return Err("--step must be positive and --halfwidth non-negative".into());
    }
    let g = load_graph(graph)?;
    let mut catalog = enumerate_spanning_trees(&g)?;
    let ps = precompute_all(&g);
    let mut failures = 0;
    let mut verdict = |ok: bool| {
        if !ok {
            failures += 1;
        }
        if ok { "OK" } else { "FAIL" }
    };

    for plan in ps.plans() {
        let e = plan.unstable_edge();
        let oracle_cv = brute_critical_value(&g, e)?;
        writeln!(
            out,
            "edge {e} cv: engine={} oracle={} {}",
            plan.cv(),
            oracle_cv,
            verdict(plan.cv() == oracle_cv)
        )?;
        let centre = if plan.cv().is_finite() { plan.cv() } else { g.weight(e) };
        let mut instantiated = g.clone();
        for x in grid(centre, halfwidth, step) {
            catalog.set_weight(e, x);
            instantiated.set_unstable_weight(e, x)?;
            let oracle = catalog.minimum().expect("connected graphs have a spanning tree");
            let sel = select_tree(plan, x);
            let priced = tree_total_weight(sel.tree, &instantiated);
            let ok = sel.total_weight == oracle && priced == oracle;
            writeln!(
                out,
                "edge {e} x={x}: {} engine={} oracle={oracle} {}",
                sel.chosen.as_str(),
                sel.total_weight,
                verdict(ok)
            )?;
        }
        catalog.set_weight(e, g.weight(e));
    }
    if failures > 0 {
        writeln!(out, "{failures} check(s) failed")?;
        Ok(EXIT_VERIFY_FAILED)
    } else {
        writeln!(out, "all checks passed")?;
        Ok(EXIT_OK)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("wdmst").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn grid_points() {
        assert_eq!(grid(2.0, 1.0, 0.5), vec![1.0, 1.5, 2.0, 2.5, 3.0]);
        assert_eq!(grid(0.0, 0.0, 0.5), vec![0.0]);
    }

    #[test]
    fn missing_file() {
        let (code, _, err) = run_capture(&["precompute", "/nonexistent/g.wdg", "-o", "/tmp/x.json"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("cannot open"), "{err}");
    }

    #[test]
    fn usage_error() {
        let (code, _, err) = run_capture(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!err.is_empty());
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("precompute"));
    }

    #[test]
    fn generate_small() {
        let (code, out, _) =
            run_capture(&["generate", "--n", "2", "--extra-edges", "0", "--unstable", "0", "--seed", "1"]);
        assert_eq!(code, EXIT_OK);
        let g = parse_graph(&out).unwrap();
        assert_eq!(g.edge_count(), 1);
        let (code, _, err) = run_capture(&["generate", "--n", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("at least 2"));
    }
}
