//! Weakly dynamic graphs: undirected multigraphs whose edge weights are fixed
//! except for a small set of unstable edges.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::dsu::DisjointSetUnion;

/// Dense edge identifier, assigned in input order starting at 0.
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Stable,
    Unstable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
    /// For unstable edges this is the current value and may be replaced.
    pub weight: f64,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn is_unstable(&self) -> bool {
        self.kind == EdgeKind::Unstable
    }

    /// The endpoint opposite `w`.
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Input record for [`WeaklyDynamicGraph::build`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeSpec {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
    pub kind: EdgeKind,
}

impl EdgeSpec {
    pub fn stable(u: usize, v: usize, weight: f64) -> Self {
        Self { u, v, weight, kind: EdgeKind::Stable }
    }

    pub fn unstable(u: usize, v: usize, x: f64) -> Self {
        Self { u, v, weight: x, kind: EdgeKind::Unstable }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {edge} is a self-loop on vertex {u}")]
    SelfLoop { edge: EdgeId, u: usize },
    #[error("edge {edge} has endpoint {vertex} but the graph has {n} vertices")]
    VertexOutOfRange { edge: EdgeId, vertex: usize, n: usize },
    #[error("edge {edge} has non-finite weight {weight}")]
    NonFiniteWeight { edge: EdgeId, weight: f64 },
    #[error("graph is disconnected ({components} components)")]
    DisconnectedGraph { components: usize },
    #[error("unknown edge id {0}")]
    UnknownEdgeId(EdgeId),
    #[error("edge {0} is stable and cannot be modified")]
    NotUnstable(EdgeId),
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeaklyDynamicGraph {
    n: usize,
    edges: Vec<Edge>,
    unstable_ids: Vec<EdgeId>,
}

impl WeaklyDynamicGraph {
    /// Builds and validates a graph. Edge ids follow the order of `specs`.
    /// Parallel edges are allowed; self-loops are not. The full edge set
    /// must connect all `n` vertices.
    pub fn build(n: usize, specs: &[EdgeSpec]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = Vec::with_capacity(specs.len());
        let mut unstable_ids = Vec::new();
        for (id, s) in specs.iter().enumerate() {
            for vertex in [s.u, s.v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { edge: id, vertex, n });
                }
            }
            if s.u == s.v {
                return Err(GraphError::SelfLoop { edge: id, u: s.u });
            }
            if !s.weight.is_finite() {
                return Err(GraphError::NonFiniteWeight { edge: id, weight: s.weight });
            }
            if s.kind == EdgeKind::Unstable {
                unstable_ids.push(id);
            }
            edges.push(Edge { id, u: s.u, v: s.v, weight: s.weight, kind: s.kind });
        }
        let g = Self { n, edges, unstable_ids };
        let components = g.components_without(&BTreeSet::new());
        if components != 1 {
            return Err(GraphError::DisconnectedGraph { components });
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge, GraphError> {
        self.edges.get(id).ok_or(GraphError::UnknownEdgeId(id))
    }

    pub fn weight(&self, id: EdgeId) -> f64 {
        self.edges[id].weight
    }

    pub fn unstable_ids(&self) -> &[EdgeId] {
        &self.unstable_ids
    }

    /// Current values of every unstable edge.
    pub fn unstable_values(&self) -> BTreeMap<EdgeId, f64> {
        self.unstable_ids.iter().map(|&id| (id, self.edges[id].weight)).collect()
    }

    /// True iff the edges not in `excluded` connect all vertices.
    pub fn is_connected(&self, excluded: &BTreeSet<EdgeId>) -> Result<bool, GraphError> {
        if let Some(&bad) = excluded.iter().find(|&&id| id >= self.edges.len()) {
            return Err(GraphError::UnknownEdgeId(bad));
        }
        Ok(self.components_without(excluded) == 1)
    }

    fn components_without(&self, excluded: &BTreeSet<EdgeId>) -> usize {
        let mut dsu = DisjointSetUnion::new(self.n);
        for e in &self.edges {
            if !excluded.contains(&e.id) {
                dsu.union(e.u, e.v);
            }
        }
        dsu.components()
    }

    /// Replaces the current value of an unstable edge.
    pub fn set_unstable_weight(&mut self, id: EdgeId, x: f64) -> Result<(), GraphError> {
        let edge = self.edges.get_mut(id).ok_or(GraphError::UnknownEdgeId(id))?;
        if edge.kind != EdgeKind::Unstable {
            return Err(GraphError::NotUnstable(id));
        }
        if !x.is_finite() {
            return Err(GraphError::NonFiniteWeight { edge: id, weight: x });
        }
        edge.weight = x;
        Ok(())
    }

    /// Copy of the graph with the given unstable values substituted.
    pub fn with_unstable_values(
        &self,
        values: &BTreeMap<EdgeId, f64>,
    ) -> Result<Self, GraphError> {
        let mut g = self.clone();
        for (&id, &x) in values {
            g.set_unstable_weight(id, x)?;
        }
        Ok(g)
    }
}
