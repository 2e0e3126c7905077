//! Browser-independent state behind the demo page. Everything crosses the
//! wasm boundary as JSON text.

use serde::Serialize;
use wdmst::io::{generate_graph, parse_graph, write_graph, GeneratorConfig};
use wdmst::{apply_change, precompute_all, weight_function, EdgeId, PlanSet, WeaklyDynamicGraph};

/// Larger graphs are accepted but not drawn.
pub const MAX_DRAWN_VERTICES: usize = 80;

#[derive(Serialize)]
struct PlanView {
    edge: EdgeId,
    u: usize,
    v: usize,
    x: f64,
    d_s: Option<f64>,
    s_v: f64,
    cv: Option<f64>,
}

#[derive(Serialize)]
struct SelectionView<'a> {
    edge: EdgeId,
    x: f64,
    chosen: &'static str,
    total_weight: f64,
    tree: &'a [EdgeId],
}

#[derive(Serialize)]
struct EdgeView {
    id: EdgeId,
    u: usize,
    v: usize,
    weight: f64,
    unstable: bool,
}

#[derive(Serialize)]
struct Layout {
    drawn: bool,
    vertices: Vec<(f64, f64)>,
    edges: Vec<EdgeView>,
}

pub struct Explorer {
    graph: WeaklyDynamicGraph,
    plans: PlanSet,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

impl Explorer {
    pub fn from_text(text: &str) -> Result<Self, String> {
        let graph = parse_graph(text).map_err(|e| e.to_string())?;
        Ok(Self::from_graph(graph))
    }

    pub fn generated(n: usize, extra_edges: usize, unstable: usize, seed: u64) -> Result<Self, String> {
        let graph = generate_graph(GeneratorConfig { n, extra_edges, unstable, seed })
            .map_err(|e| e.to_string())?;
        Ok(Self::from_graph(graph))
    }

    fn from_graph(graph: WeaklyDynamicGraph) -> Self {
        let plans = precompute_all(&graph);
        Self { graph, plans }
    }

    pub fn graph_text(&self) -> String {
        write_graph(&self.graph)
    }

    /// Per unstable edge: endpoints, current value, `d_s`, `s_v`, `cv`.
    /// Infinite values become `null`.
    pub fn plans_json(&self) -> String {
        let views: Vec<PlanView> = self
            .plans
            .plans()
            .iter()
            .map(|p| {
                let e = &self.graph.edges()[p.unstable_edge()];
                PlanView {
                    edge: e.id,
                    u: e.u,
                    v: e.v,
                    x: e.weight,
                    d_s: finite(p.d_s()),
                    s_v: p.s_v(),
                    cv: finite(p.cv()),
                }
            })
            .collect();
        serde_json::to_string(&views).unwrap()
    }

    /// Which precomputed tree is optimal at `x`, without touching the graph.
    pub fn select_json(&self, edge: EdgeId, x: f64) -> Result<String, String> {
        let sel = self.plans.select(edge, x).map_err(|e| e.to_string())?;
        Ok(serde_json::to_string(&SelectionView {
            edge,
            x,
            chosen: sel.chosen.as_str(),
            total_weight: sel.total_weight,
            tree: sel.tree.edge_ids(),
        })
        .unwrap())
    }

    /// `samples` points of `x -> min(d_s, s_v + x)` over `[lo, hi]`.
    pub fn curve_json(&self, edge: EdgeId, lo: f64, hi: f64, samples: usize) -> Result<String, String> {
        let f = weight_function(self.plans.plan(edge).map_err(|e| e.to_string())?);
        let samples = samples.max(2);
        let points: Vec<(f64, f64)> = (0..samples)
            .map(|i| {
                let x = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
                (x, f.eval(x))
            })
            .collect();
        Ok(serde_json::to_string(&points).unwrap())
    }

    /// Commits a new value: answers from the current plan, then rebuilds.
    pub fn commit_json(&mut self, edge: EdgeId, x: f64) -> Result<String, String> {
        let (immediate, rebuilt) =
            apply_change(&self.plans, &mut self.graph, edge, x).map_err(|e| e.to_string())?;
        let json = serde_json::to_string(&SelectionView {
            edge,
            x,
            chosen: immediate.chosen.as_str(),
            total_weight: immediate.total_weight,
            tree: immediate.tree.edge_ids(),
        })
        .unwrap();
        self.plans = rebuilt;
        Ok(json)
    }

    /// Vertices on a circle plus the edge list, for drawing.
    pub fn layout_json(&self) -> String {
        let n = self.graph.vertex_count();
        let drawn = n <= MAX_DRAWN_VERTICES;
        let vertices = if drawn {
            (0..n)
                .map(|i| {
                    let a = std::f64::consts::TAU * i as f64 / n as f64;
                    (0.5 + 0.42 * a.cos(), 0.5 + 0.42 * a.sin())
                })
                .collect()
        } else {
            Vec::new()
        };
        let edges = if drawn {
            self.graph
                .edges()
                .iter()
                .map(|e| EdgeView { id: e.id, u: e.u, v: e.v, weight: e.weight, unstable: e.is_unstable() })
                .collect()
        } else {
            Vec::new()
        };
        serde_json::to_string(&Layout { drawn, vertices, edges }).unwrap()
    }
}
