#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use wdmst::{EdgeId, EdgeKind, EdgeSpec, WeaklyDynamicGraph};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture(name: &str) -> WeaklyDynamicGraph {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    wdmst::io::parse_graph(&text).unwrap()
}

/// Edge cap for instances fed to the oracle.
pub const SMALL_EDGE_CAP: usize = 16;

pub struct SmallInstance {
    pub n: usize,
    pub max_weight: u32,
    pub unstable: usize,
    pub distinct: bool,
}

/// Random connected multigraph with integer weights in `[1, max_weight]`.
/// With `distinct`, all weights are pairwise different.
pub fn random_small<R: Rng>(rng: &mut R, spec: SmallInstance) -> WeaklyDynamicGraph {
    let SmallInstance { n, max_weight, unstable, distinct } = spec;
    let tree_edges = n - 1;
    let extra = rng.gen_range(0..=SMALL_EDGE_CAP - tree_edges);
    let total = tree_edges + extra;
    let mut weights: Vec<u32> = if distinct {
        let mut pool: Vec<u32> = (1..=max_weight.max(total as u32)).collect();
        pool.shuffle(rng);
        pool.truncate(total);
        pool
    } else {
        (0..total).map(|_| rng.gen_range(1..=max_weight)).collect()
    };
    let mut specs = Vec::with_capacity(total);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        specs.push((u, v));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        specs.push((u, v));
    }
    specs.shuffle(rng);
    weights.shuffle(rng);
    let mut specs: Vec<EdgeSpec> = specs
        .into_iter()
        .zip(weights)
        .map(|((u, v), w)| EdgeSpec::stable(u, v, w as f64))
        .collect();
    let mut ids: Vec<usize> = (0..total).collect();
    ids.shuffle(rng);
    for &id in ids.iter().take(unstable) {
        specs[id].kind = EdgeKind::Unstable;
    }
    WeaklyDynamicGraph::build(n, &specs).unwrap()
}

/// Random disjoint mandatory/forbidden sets, each edge independently with
/// probability `p` for each role.
pub fn random_constraints<R: Rng>(
    rng: &mut R,
    g: &WeaklyDynamicGraph,
    p: f64,
) -> (BTreeSet<EdgeId>, BTreeSet<EdgeId>) {
    let mut mandatory = BTreeSet::new();
    let mut forbidden = BTreeSet::new();
    for id in 0..g.edge_count() {
        let r: f64 = rng.gen();
        if r < p {
            mandatory.insert(id);
        } else if r < 2.0 * p {
            forbidden.insert(id);
        }
    }
    (mandatory, forbidden)
}

/// Grid `cv - 3 .. cv + 3` in steps of 0.5.
pub fn threshold_grid(cv: f64) -> Vec<f64> {
    (-6..=6).map(|k| cv + k as f64 * 0.5).collect()
}
