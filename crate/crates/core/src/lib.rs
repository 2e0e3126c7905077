//! Alternative minimum spanning trees for weakly dynamic graphs.
//!
//! A weakly dynamic graph has fixed edge weights except for a few unstable
//! edges whose values change over time. For each unstable edge this crate
//! precomputes the best spanning tree without the edge, the best tree
//! through it, and the critical value at which they trade places. Queries
//! after a weight change then pick the right tree with one comparison.

pub mod cli;
pub mod dsu;
pub mod ecst;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod precompute;

pub use dsu::DisjointSetUnion;
pub use ecst::{
    constrained_mst_kruskal, constrained_mst_prim, tree_total_weight, Constraints, EcstError,
    OptimizationSense, SpanningTree,
};
pub use graph::{Edge, EdgeId, EdgeKind, EdgeSpec, GraphError, WeaklyDynamicGraph};
pub use precompute::{
    apply_change, precompute_all, precompute_plan, select_tree, weight_function, EdgePlan,
    PiecewiseWeight, PlanError, PlanSet, Selection, WhichTree,
};
