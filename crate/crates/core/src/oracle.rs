//! Exhaustive ground truth for desk-size instances.
//!
//! Everything here works by enumerating every `(n-1)`-subset of the edge set
//! and keeping the ones that form spanning trees. It deliberately shares no
//! code with [`crate::ecst`] or [`crate::precompute`] so it can be used to
//! check them.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::dsu::DisjointSetUnion;
use crate::ecst::OptimizationSense;
use crate::graph::{EdgeId, WeaklyDynamicGraph};

/// Largest edge count accepted by the subset enumeration.
pub const MAX_ORACLE_EDGES: usize = 24;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("oracle supports at most {max} edges, graph has {edges}", max = MAX_ORACLE_EDGES)]
    TooLarge { edges: usize },
    #[error("unknown edge id {0}")]
    UnknownEdgeId(EdgeId),
}

/// All spanning trees of a graph, plus the edge weights used to price them.
#[derive(Clone, Debug)]
pub struct TreeCatalog {
    trees: Vec<Vec<EdgeId>>,
    weights: Vec<f64>,
}

/// A catalog member with its total weight.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogTree {
    pub edge_ids: Vec<EdgeId>,
    pub total: f64,
}

impl TreeCatalog {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Trees as sorted edge-id lists, in lexicographic order.
    pub fn trees(&self) -> &[Vec<EdgeId>] {
        &self.trees
    }

    /// Reprices one edge (typically an unstable edge at a new value).
    pub fn set_weight(&mut self, id: EdgeId, w: f64) {
        self.weights[id] = w;
    }

    pub fn total(&self, tree: &[EdgeId]) -> f64 {
        tree.iter().map(|&id| self.weights[id]).sum()
    }

    /// Minimum total over the whole catalog, or `None` when it is empty.
    pub fn minimum(&self) -> Option<f64> {
        self.trees.iter().map(|t| self.total(t)).min_by(f64::total_cmp)
    }

    /// All trees whose total equals the catalog minimum.
    pub fn minimizers(&self) -> Vec<&[EdgeId]> {
        let Some(best) = self.minimum() else { return Vec::new() };
        self.trees
            .iter()
            .filter(|t| self.total(t) == best)
            .map(Vec::as_slice)
            .collect()
    }
}

pub fn enumerate_spanning_trees(g: &WeaklyDynamicGraph) -> Result<TreeCatalog, OracleError> {
    let m = g.edge_count();
    if m > MAX_ORACLE_EDGES {
        return Err(OracleError::TooLarge { edges: m });
    }
    let k = g.vertex_count() - 1;
    let weights: Vec<f64> = g.edges().iter().map(|e| e.weight).collect();
    let mut trees = Vec::new();
    if k > m {
        return Ok(TreeCatalog { trees, weights });
    }
    // Lexicographic walk over k-combinations of 0..m.
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut dsu = DisjointSetUnion::new(g.vertex_count());
        if idx.iter().all(|&id| {
            let e = &g.edges()[id];
            dsu.union(e.u, e.v)
        }) {
            trees.push(idx.clone());
        }
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + m - k) else { break };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(TreeCatalog { trees, weights })
}

/// Extreme-weight catalog member containing every `mandatory` edge and no
/// `forbidden` edge. Ties go to the lexicographically smallest edge set.
pub fn brute_constrained_min(
    catalog: &TreeCatalog,
    mandatory: &BTreeSet<EdgeId>,
    forbidden: &BTreeSet<EdgeId>,
    sense: OptimizationSense,
) -> Option<CatalogTree> {
    let mut best: Option<CatalogTree> = None;
    for tree in &catalog.trees {
        let admissible = mandatory.iter().all(|id| tree.binary_search(id).is_ok())
            && !tree.iter().any(|id| forbidden.contains(id));
        if !admissible {
            continue;
        }
        let total = catalog.total(tree);
        let better = match &best {
            None => true,
            Some(b) => match sense {
                OptimizationSense::Minimize => total < b.total,
                OptimizationSense::Maximize => total > b.total,
            },
        };
        if better {
            best = Some(CatalogTree { edge_ids: tree.clone(), total });
        }
    }
    best
}

/// Threshold for edge `e` by exhaustion: the best total over trees avoiding
/// `e`, minus the best total of the other edges over trees containing `e`.
/// `+inf` when every spanning tree uses `e`.
pub fn brute_critical_value(g: &WeaklyDynamicGraph, e: EdgeId) -> Result<f64, OracleError> {
    if e >= g.edge_count() {
        return Err(OracleError::UnknownEdgeId(e));
    }
    let catalog = enumerate_spanning_trees(g)?;
    let mut without = f64::INFINITY;
    let mut with_rest = f64::INFINITY;
    for tree in catalog.trees() {
        if tree.contains(&e) {
            let rest: f64 = tree.iter().filter(|&&id| id != e).map(|&id| g.weight(id)).sum();
            with_rest = with_rest.min(rest);
        } else {
            without = without.min(catalog.total(tree));
        }
    }
    Ok(without - with_rest)
}

/// Largest edge weight on the unique `u`-`v` path of a spanning tree.
///
/// Panics if `tree` does not connect `u` and `v`.
pub fn max_weight_on_tree_path(
    tree: &[EdgeId],
    g: &WeaklyDynamicGraph,
    u: usize,
    v: usize,
) -> f64 {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for &id in tree {
        let e = &g.edges()[id];
        adj[e.u].push(id);
        adj[e.v].push(id);
    }
    // DFS from u, carrying the running maximum.
    let mut best = vec![None; n];
    best[u] = Some(f64::NEG_INFINITY);
    let mut stack = vec![u];
    while let Some(a) = stack.pop() {
        let here = best[a].unwrap();
        for &id in &adj[a] {
            let e = &g.edges()[id];
            let b = e.other(a);
            if best[b].is_none() {
                best[b] = Some(here.max(e.weight));
                stack.push(b);
            }
        }
    }
    best[v].expect("tree does not connect the two vertices")
}

/// Number of spanning trees by Kirchhoff's theorem, using fraction-free
/// (Bareiss) elimination on the reduced Laplacian.
pub fn matrix_tree_count(g: &WeaklyDynamicGraph) -> u128 {
    let n = g.vertex_count();
    if n == 1 {
        return 1;
    }
    let size = n - 1;
    let mut lap = vec![vec![0i128; n]; n];
    for e in g.edges() {
        lap[e.u][e.u] += 1;
        lap[e.v][e.v] += 1;
        lap[e.u][e.v] -= 1;
        lap[e.v][e.u] -= 1;
    }
    let mut a: Vec<Vec<i128>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..size {
        if a[k][k] == 0 {
            match (k + 1..size).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[size - 1][size - 1]) as u128
}
