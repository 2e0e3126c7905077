//! Edge-constrained spanning trees: minimum (or maximum) spanning trees that
//! must contain a mandatory edge set and avoid a forbidden edge set.
//!
//! Two constructions are provided. [`constrained_mst_kruskal`] seeds the
//! forest with every mandatory edge and then runs Kruskal over the remaining
//! admissible edges. [`constrained_mst_prim`] handles the single-mandatory-edge
//! case by growing a Prim tree from both endpoints of that edge at once.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use thiserror::Error;

use crate::dsu::DisjointSetUnion;
use crate::graph::{EdgeId, GraphError, WeaklyDynamicGraph};

static MST_RUNS: AtomicU64 = AtomicU64::new(0);

/// Number of constrained-MST computations started by this process.
pub fn mst_invocations() -> u64 {
    MST_RUNS.load(AtomicOrdering::Relaxed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum OptimizationSense {
    #[default]
    Minimize,
    Maximize,
}

impl OptimizationSense {
    fn key(self, w: f64) -> f64 {
        match self {
            OptimizationSense::Minimize => w,
            OptimizationSense::Maximize => -w,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EcstError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {0} is both mandatory and forbidden")]
    ConflictingConstraints(EdgeId),
    #[error("mandatory edges contain a cycle")]
    MandatoryCycle,
    #[error("removing the forbidden edges disconnects the graph")]
    InfeasibleForbidden,
    #[error("seed edge {0} is forbidden")]
    ForbiddenSeed(EdgeId),
}

impl EcstError {
    /// True for the two "no such tree exists" outcomes.
    pub fn is_infeasible(&self) -> bool {
        matches!(self, EcstError::MandatoryCycle | EcstError::InfeasibleForbidden)
    }
}

/// Mandatory set E+ and forbidden set E- of a constrained problem.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    mandatory: BTreeSet<EdgeId>,
    forbidden: BTreeSet<EdgeId>,
}

impl Constraints {
    pub fn new(
        mandatory: BTreeSet<EdgeId>,
        forbidden: BTreeSet<EdgeId>,
    ) -> Result<Self, EcstError> {
        if let Some(&id) = mandatory.intersection(&forbidden).next() {
            return Err(EcstError::ConflictingConstraints(id));
        }
        Ok(Self { mandatory, forbidden })
    }

    pub fn none() -> Self {
        Self::default()
    }

    pub fn mandatory(&self) -> &BTreeSet<EdgeId> {
        &self.mandatory
    }

    pub fn forbidden(&self) -> &BTreeSet<EdgeId> {
        &self.forbidden
    }

    fn validate(&self, g: &WeaklyDynamicGraph) -> Result<(), EcstError> {
        match self.mandatory.iter().chain(&self.forbidden).find(|&&id| id >= g.edge_count()) {
            Some(&id) => Err(GraphError::UnknownEdgeId(id).into()),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TreeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("expected {expected} edges, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("edge set contains a cycle")]
    Cycle,
}

/// A spanning tree given by its edge ids, with the stable part of its weight
/// cached. Unstable members are priced at lookup time.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanningTree {
    edge_ids: Vec<EdgeId>,
    stable_sum: f64,
    unstable_members: Vec<EdgeId>,
}

impl SpanningTree {
    /// Validates `ids` as a spanning tree of `g`.
    pub fn from_edge_ids(g: &WeaklyDynamicGraph, ids: &[EdgeId]) -> Result<Self, TreeError> {
        let expected = g.vertex_count() - 1;
        if ids.len() != expected {
            return Err(TreeError::WrongSize { expected, got: ids.len() });
        }
        let mut dsu = DisjointSetUnion::new(g.vertex_count());
        for &id in ids {
            let e = g.edge(id)?;
            if !dsu.union(e.u, e.v) {
                return Err(TreeError::Cycle);
            }
        }
        Ok(Self::assemble(g, ids.to_vec()))
    }

    // Caller guarantees `ids` is a spanning tree.
    fn assemble(g: &WeaklyDynamicGraph, mut ids: Vec<EdgeId>) -> Self {
        ids.sort_unstable();
        let mut stable_sum = 0.0;
        let mut unstable_members = Vec::new();
        for &id in &ids {
            let e = &g.edges()[id];
            if e.is_unstable() {
                unstable_members.push(id);
            } else {
                stable_sum += e.weight;
            }
        }
        Self { edge_ids: ids, stable_sum, unstable_members }
    }

    /// Member edge ids in ascending order.
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn stable_sum(&self) -> f64 {
        self.stable_sum
    }

    pub fn unstable_members(&self) -> &[EdgeId] {
        &self.unstable_members
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.edge_ids.binary_search(&id).is_ok()
    }
}

/// Stable sum plus the current values of the tree's unstable members.
pub fn tree_total_weight(t: &SpanningTree, g: &WeaklyDynamicGraph) -> f64 {
    t.stable_sum + t.unstable_members.iter().map(|&id| g.weight(id)).sum::<f64>()
}

/// Modified Kruskal: all mandatory edges first, then the admissible edges in
/// `(weight, id)` order, keeping each edge that joins two components.
pub fn constrained_mst_kruskal(
    g: &WeaklyDynamicGraph,
    c: &Constraints,
    sense: OptimizationSense,
) -> Result<SpanningTree, EcstError> {
    MST_RUNS.fetch_add(1, AtomicOrdering::Relaxed);
    c.validate(g)?;
    let n = g.vertex_count();
    let mut dsu = DisjointSetUnion::new(n);
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    for &id in &c.mandatory {
        let e = &g.edges()[id];
        if !dsu.union(e.u, e.v) {
            return Err(EcstError::MandatoryCycle);
        }
        chosen.push(id);
    }

    let mut order: Vec<(f64, EdgeId)> = g
        .edges()
        .iter()
        .filter(|e| !c.mandatory.contains(&e.id) && !c.forbidden.contains(&e.id))
        .map(|e| (sense.key(e.weight), e.id))
        .collect();
    order.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    for (_, id) in order {
        if dsu.components() == 1 {
            break;
        }
        let e = &g.edges()[id];
        if dsu.union(e.u, e.v) {
            chosen.push(id);
        }
    }
    if dsu.components() != 1 {
        return Err(EcstError::InfeasibleForbidden);
    }
    Ok(SpanningTree::assemble(g, chosen))
}

#[derive(Clone, Copy, Debug)]
struct Key(f64, EdgeId);

impl PartialEq for Key {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Key {}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0).then(self.1.cmp(&other.1))
    }
}

/// Modified Prim: start from the vertex set `{u, v}` of `seed_edge` with that
/// edge already in the tree, then repeatedly add the cheapest admissible edge
/// leaving the current vertex set.
pub fn constrained_mst_prim(
    g: &WeaklyDynamicGraph,
    seed_edge: EdgeId,
    forbidden: &BTreeSet<EdgeId>,
    sense: OptimizationSense,
) -> Result<SpanningTree, EcstError> {
    MST_RUNS.fetch_add(1, AtomicOrdering::Relaxed);
    let seed = g.edge(seed_edge)?;
    if let Some(&bad) = forbidden.iter().find(|&&id| id >= g.edge_count()) {
        return Err(GraphError::UnknownEdgeId(bad).into());
    }
    if forbidden.contains(&seed_edge) {
        return Err(EcstError::ForbiddenSeed(seed_edge));
    }

    let n = g.vertex_count();
    let mut banned = vec![false; g.edge_count()];
    for &id in forbidden {
        banned[id] = true;
    }
    // Compressed adjacency: offsets into a flat list of incident edge ids.
    let mut offsets = vec![0usize; n + 1];
    for e in g.edges() {
        offsets[e.u + 1] += 1;
        offsets[e.v + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut incident = vec![0usize; offsets[n]];
    for e in g.edges() {
        incident[fill[e.u]] = e.id;
        fill[e.u] += 1;
        incident[fill[e.v]] = e.id;
        fill[e.v] += 1;
    }

    let mut in_tree = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(Key, usize)>> = BinaryHeap::new();
    let mut chosen = Vec::with_capacity(n - 1);
    let mut reached = 0usize;
    let visit = |w: usize, in_tree: &mut [bool], heap: &mut BinaryHeap<Reverse<(Key, usize)>>| {
        in_tree[w] = true;
        for &id in &incident[offsets[w]..offsets[w + 1]] {
            if banned[id] {
                continue;
            }
            let e = &g.edges()[id];
            let far = e.other(w);
            if !in_tree[far] {
                heap.push(Reverse((Key(sense.key(e.weight), id), far)));
            }
        }
    };

    chosen.push(seed_edge);
    visit(seed.u, &mut in_tree, &mut heap);
    visit(seed.v, &mut in_tree, &mut heap);
    reached += 2;
    while reached < n {
        let Some(Reverse((Key(_, id), far))) = heap.pop() else {
            return Err(EcstError::InfeasibleForbidden);
        };
        if in_tree[far] {
            continue;
        }
        chosen.push(id);
        visit(far, &mut in_tree, &mut heap);
        reached += 1;
    }
    Ok(SpanningTree::assemble(g, chosen))
}
