//! Per-edge plans for weakly dynamic graphs.
//!
//! For an unstable edge `e` a plan holds two alternative minimum spanning
//! trees: `mst_s`, the best tree avoiding `e` (weight `d_s`, independent of
//! the value of `e`), and `mst_v`, the best tree through `e` (weight
//! `s_v + x`). Their crossing point `cv = d_s - s_v` decides which one is
//! optimal for any value `x`, so answering a query is a single comparison.
//!
//! With several unstable edges, each plan is built with the other unstable
//! edges frozen at their current values. After a change to one edge the
//! immediate answer comes from that edge's existing plan and the remaining
//! plans are rebuilt.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::ecst::{
    constrained_mst_kruskal, constrained_mst_prim, tree_total_weight, Constraints, EcstError,
    OptimizationSense, SpanningTree,
};
use crate::graph::{EdgeId, GraphError, WeaklyDynamicGraph};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlanError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ecst(#[from] EcstError),
    #[error("edge {0} is not an unstable edge of this graph")]
    NotUnstable(EdgeId),
    #[error("no frozen value supplied for unstable edge {0}")]
    FrozenIncomplete(EdgeId),
    #[error("plan set snapshot does not match the graph's current unstable values")]
    StaleSnapshot,
    #[error("inconsistent plan for edge {edge}: {reason}")]
    Inconsistent { edge: EdgeId, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WhichTree {
    /// `mst_s`, the tree without the unstable edge.
    Stable,
    /// `mst_v`, the tree through the unstable edge.
    Variable,
}

impl WhichTree {
    pub fn as_str(self) -> &'static str {
        match self {
            WhichTree::Stable => "stable",
            WhichTree::Variable => "variable",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgePlan {
    unstable_edge: EdgeId,
    mst_s: Option<SpanningTree>,
    d_s: f64,
    mst_v: SpanningTree,
    s_v: f64,
    cv: f64,
    frozen_others: BTreeMap<EdgeId, f64>,
}

impl EdgePlan {
    /// Reassembles a plan from stored parts, checking its invariants against
    /// `g`. `d_s`, `s_v` and `cv` must agree exactly with the trees.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        g: &WeaklyDynamicGraph,
        unstable_edge: EdgeId,
        mst_s: Option<SpanningTree>,
        mst_v: SpanningTree,
        frozen_others: BTreeMap<EdgeId, f64>,
        d_s: f64,
        s_v: f64,
        cv: f64,
    ) -> Result<Self, PlanError> {
        let inconsistent = |reason: &str| PlanError::Inconsistent {
            edge: unstable_edge,
            reason: reason.to_string(),
        };
        if !g.unstable_ids().contains(&unstable_edge) {
            return Err(PlanError::NotUnstable(unstable_edge));
        }
        let plan = Self::assemble(g, unstable_edge, mst_s, mst_v, frozen_others)?;
        if !plan.mst_v.contains(unstable_edge) {
            return Err(inconsistent("mst_v does not contain the unstable edge"));
        }
        if plan.mst_s.as_ref().is_some_and(|t| t.contains(unstable_edge)) {
            return Err(inconsistent("mst_s contains the unstable edge"));
        }
        if plan.d_s != d_s || plan.s_v != s_v || plan.cv != cv {
            return Err(inconsistent("stored weights disagree with the trees"));
        }
        Ok(plan)
    }

    fn assemble(
        g: &WeaklyDynamicGraph,
        unstable_edge: EdgeId,
        mst_s: Option<SpanningTree>,
        mst_v: SpanningTree,
        frozen_others: BTreeMap<EdgeId, f64>,
    ) -> Result<Self, PlanError> {
        let frozen_graph = freeze(g, unstable_edge, &frozen_others)?;
        let d_s = mst_s
            .as_ref()
            .map_or(f64::INFINITY, |t| tree_total_weight(t, &frozen_graph));
        let s_v = mst_v.stable_sum()
            + mst_v
                .unstable_members()
                .iter()
                .filter(|&&id| id != unstable_edge)
                .map(|&id| frozen_graph.weight(id))
                .sum::<f64>();
        Ok(Self { unstable_edge, mst_s, d_s, mst_v, s_v, cv: d_s - s_v, frozen_others })
    }

    pub fn unstable_edge(&self) -> EdgeId {
        self.unstable_edge
    }

    /// Best tree avoiding the unstable edge; `None` when the edge is a bridge.
    pub fn mst_s(&self) -> Option<&SpanningTree> {
        self.mst_s.as_ref()
    }

    pub fn mst_v(&self) -> &SpanningTree {
        &self.mst_v
    }

    pub fn d_s(&self) -> f64 {
        self.d_s
    }

    /// Weight of `mst_v` excluding the unstable edge itself.
    pub fn s_v(&self) -> f64 {
        self.s_v
    }

    pub fn cv(&self) -> f64 {
        self.cv
    }

    pub fn frozen_others(&self) -> &BTreeMap<EdgeId, f64> {
        &self.frozen_others
    }
}

/// Graph with every other unstable edge set to its frozen value. Borrows
/// `g` when nothing needs to change.
fn freeze<'g>(
    g: &'g WeaklyDynamicGraph,
    e: EdgeId,
    frozen: &BTreeMap<EdgeId, f64>,
) -> Result<Cow<'g, WeaklyDynamicGraph>, PlanError> {
    let mut differs = false;
    for &other in g.unstable_ids().iter().filter(|&&id| id != e) {
        match frozen.get(&other) {
            None => return Err(PlanError::FrozenIncomplete(other)),
            Some(&x) => differs |= x != g.weight(other),
        }
    }
    if let Some(&extra) = frozen.keys().find(|&&id| id == e || !g.unstable_ids().contains(&id)) {
        return Err(PlanError::NotUnstable(extra));
    }
    if !differs {
        return Ok(Cow::Borrowed(g));
    }
    Ok(Cow::Owned(g.with_unstable_values(frozen)?))
}

/// Builds the plan for unstable edge `e` with the other unstable edges held
/// at `frozen`.
pub fn precompute_plan(
    g: &WeaklyDynamicGraph,
    e: EdgeId,
    frozen: &BTreeMap<EdgeId, f64>,
) -> Result<EdgePlan, PlanError> {
    if !g.unstable_ids().contains(&e) {
        return Err(PlanError::NotUnstable(e));
    }
    let frozen_graph = freeze(g, e, frozen)?;
    let without = Constraints::new(BTreeSet::new(), BTreeSet::from([e]))?;
    let mst_s = match constrained_mst_kruskal(&frozen_graph, &without, OptimizationSense::Minimize) {
        Ok(t) => Some(t),
        Err(EcstError::InfeasibleForbidden) => None,
        Err(other) => return Err(other.into()),
    };
    let mst_v = constrained_mst_prim(&frozen_graph, e, &BTreeSet::new(), OptimizationSense::Minimize)?;
    EdgePlan::assemble(g, e, mst_s, mst_v, frozen.clone())
}

/// Result of a query: which precomputed tree is optimal and its weight.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Selection<'a> {
    pub chosen: WhichTree,
    pub total_weight: f64,
    pub tree: &'a SpanningTree,
}

/// Picks the optimal tree for value `x` of the plan's edge. `x < cv` selects
/// `mst_v`; `x >= cv` selects `mst_s`, so a tie goes to the stable tree.
pub fn select_tree(plan: &EdgePlan, x: f64) -> Selection<'_> {
    if x < plan.cv {
        Selection { chosen: WhichTree::Variable, total_weight: plan.s_v + x, tree: &plan.mst_v }
    } else {
        let tree = plan
            .mst_s
            .as_ref()
            .expect("a plan without mst_s has cv = +inf and never selects it");
        Selection { chosen: WhichTree::Stable, total_weight: plan.d_s, tree }
    }
}

/// `x -> min(d_s, s_v + x)`: slope 1 below the breakpoint, flat above it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PiecewiseWeight {
    pub intercept: f64,
    pub plateau: f64,
    pub breakpoint: f64,
}

impl PiecewiseWeight {
    pub fn eval(&self, x: f64) -> f64 {
        if x < self.breakpoint {
            self.intercept + x
        } else {
            self.plateau
        }
    }
}

pub fn weight_function(plan: &EdgePlan) -> PiecewiseWeight {
    PiecewiseWeight { intercept: plan.s_v, plateau: plan.d_s, breakpoint: plan.cv }
}

/// One plan per unstable edge, all built against the same snapshot of
/// unstable values.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PlanSet {
    plans: Vec<EdgePlan>,
    snapshot: BTreeMap<EdgeId, f64>,
}

impl PlanSet {
    /// Reassembles a plan set, checking that every plan agrees with the
    /// snapshot and that each unstable edge of `g` has exactly one plan.
    pub fn from_parts(
        g: &WeaklyDynamicGraph,
        mut plans: Vec<EdgePlan>,
        snapshot: BTreeMap<EdgeId, f64>,
    ) -> Result<Self, PlanError> {
        plans.sort_by_key(EdgePlan::unstable_edge);
        let ids: Vec<EdgeId> = plans.iter().map(EdgePlan::unstable_edge).collect();
        if ids != g.unstable_ids() || snapshot.keys().copied().collect::<Vec<_>>() != ids {
            return Err(PlanError::StaleSnapshot);
        }
        for p in &plans {
            let expected: BTreeMap<EdgeId, f64> = snapshot
                .iter()
                .filter(|(&id, _)| id != p.unstable_edge)
                .map(|(&id, &x)| (id, x))
                .collect();
            if expected != p.frozen_others {
                return Err(PlanError::StaleSnapshot);
            }
        }
        Ok(Self { plans, snapshot })
    }

    pub fn plans(&self) -> &[EdgePlan] {
        &self.plans
    }

    pub fn len(&self) -> usize {
        self.plans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plans.is_empty()
    }

    pub fn snapshot(&self) -> &BTreeMap<EdgeId, f64> {
        &self.snapshot
    }

    pub fn plan(&self, e: EdgeId) -> Result<&EdgePlan, PlanError> {
        self.plans
            .binary_search_by_key(&e, EdgePlan::unstable_edge)
            .map(|i| &self.plans[i])
            .map_err(|_| PlanError::NotUnstable(e))
    }

    /// Constant-time query for edge `e` at value `x`.
    pub fn select(&self, e: EdgeId, x: f64) -> Result<Selection<'_>, PlanError> {
        Ok(select_tree(self.plan(e)?, x))
    }

    /// Plan set for the graph's current unstable values. Plans whose frozen
    /// values still match are reused; the rest are rebuilt, in parallel when
    /// there is more than one.
    pub fn rebuild(&self, g: &WeaklyDynamicGraph) -> PlanSet {
        let snapshot = g.unstable_values();
        let reusable = |k: EdgeId| {
            self.plan(k).ok().filter(|p| {
                p.frozen_others.iter().all(|(id, x)| snapshot.get(id) == Some(x))
                    && p.frozen_others.len() + 1 == snapshot.len()
            })
        };
        let build = |k: EdgeId| {
            precompute_plan(g, k, &others(&snapshot, k))
                .expect("frozen values come from the graph itself")
        };
        let stale = g.unstable_ids().iter().filter(|&&k| reusable(k).is_none()).count();
        let plans = if stale <= 1 || cfg!(target_family = "wasm") {
            g.unstable_ids()
                .iter()
                .map(|&k| reusable(k).cloned().unwrap_or_else(|| build(k)))
                .collect()
        } else {
            std::thread::scope(|s| {
                let slots: Vec<_> = g
                    .unstable_ids()
                    .iter()
                    .map(|&k| match reusable(k) {
                        Some(p) => Ok(p.clone()),
                        None => Err(s.spawn(move || build(k))),
                    })
                    .collect();
                slots
                    .into_iter()
                    .map(|slot| slot.unwrap_or_else(|h| h.join().expect("plan worker panicked")))
                    .collect()
            })
        };
        PlanSet { plans, snapshot }
    }
}

fn others(snapshot: &BTreeMap<EdgeId, f64>, k: EdgeId) -> BTreeMap<EdgeId, f64> {
    snapshot.iter().filter(|(&id, _)| id != k).map(|(&id, &x)| (id, x)).collect()
}

/// Builds a plan for every unstable edge, freezing the others at the graph's
/// current values.
pub fn precompute_all(g: &WeaklyDynamicGraph) -> PlanSet {
    PlanSet::default().rebuild(g)
}

/// Applies a change of edge `e` to `new_x`. The immediate selection comes
/// from the existing plan; the returned plan set reflects the new value.
pub fn apply_change<'a>(
    ps: &'a PlanSet,
    g: &mut WeaklyDynamicGraph,
    e: EdgeId,
    new_x: f64,
) -> Result<(Selection<'a>, PlanSet), PlanError> {
    if ps.snapshot != g.unstable_values() {
        return Err(PlanError::StaleSnapshot);
    }
    let plan = ps.plan(e)?;
    g.set_unstable_weight(e, new_x)?;
    let immediate = select_tree(plan, new_x);
    Ok((immediate, ps.rebuild(g)))
}
