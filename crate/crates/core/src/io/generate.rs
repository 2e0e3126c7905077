//! Seeded random instances: a random spanning-tree backbone plus extra
//! random edges, so the result is always connected.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeKind, EdgeSpec, WeaklyDynamicGraph};

pub const MAX_WEIGHT: u32 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub extra_edges: usize,
    pub unstable: usize,
    pub seed: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("need at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("requested {requested} unstable edges but the graph has only {edges} edges")]
    TooManyUnstable { requested: usize, edges: usize },
}

/// Deterministic for a fixed config. Weights and initial unstable values are
/// integers in `[1, MAX_WEIGHT]`; parallel edges may occur, self-loops never.
pub fn generate_graph(cfg: GeneratorConfig) -> Result<WeaklyDynamicGraph, GenerateError> {
    let GeneratorConfig { n, extra_edges, unstable, seed } = cfg;
    if n < 2 {
        return Err(GenerateError::TooFewVertices(n));
    }
    let total = n - 1 + extra_edges;
    if unstable > total {
        return Err(GenerateError::TooManyUnstable { requested: unstable, edges: total });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weight = |rng: &mut ChaCha8Rng| rng.gen_range(1..=MAX_WEIGHT) as f64;

    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut specs = Vec::with_capacity(total);
    for i in 1..n {
        let parent = perm[rng.gen_range(0..i)];
        specs.push(EdgeSpec::stable(perm[i], parent, weight(&mut rng)));
    }
    for _ in 0..extra_edges {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        specs.push(EdgeSpec::stable(u, v, weight(&mut rng)));
    }
    specs.shuffle(&mut rng);
    for idx in sample(&mut rng, total, unstable) {
        specs[idx].kind = EdgeKind::Unstable;
        specs[idx].weight = weight(&mut rng);
    }
    Ok(WeaklyDynamicGraph::build(n, &specs).expect("backbone keeps the graph connected"))
}
