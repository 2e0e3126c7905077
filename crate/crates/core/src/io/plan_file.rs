//! JSON persistence for plan sets.
//!
//! A plan file records, per unstable edge, both trees as edge-id lists with
//! `d_s`, `s_v` and `cv`, plus a fingerprint of the graph it was built for.
//! Infinite values are written as the string `"inf"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::ecst::{SpanningTree, TreeError};
use crate::graph::{EdgeId, WeaklyDynamicGraph};
use crate::precompute::{EdgePlan, PlanError, PlanSet};

#[derive(Debug, Error)]
pub enum PlanFileError {
    #[error("malformed plan file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("plan was built for a different graph (expected fingerprint {expected}, graph has {actual})")]
    FingerprintMismatch { expected: String, actual: String },
    #[error("invalid tree for edge {edge}: {source}")]
    Tree { edge: EdgeId, source: TreeError },
    #[error(transparent)]
    Plan(#[from] PlanError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub n: usize,
    pub edges: usize,
    /// SHA-256 over vertex count and every edge's endpoints, kind and
    /// weight bits, in id order.
    pub hash: String,
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={} edges={} sha256={}", self.n, self.edges, self.hash)
    }
}

pub fn fingerprint(g: &WeaklyDynamicGraph) -> Fingerprint {
    let mut h = Sha256::new();
    h.update((g.vertex_count() as u64).to_le_bytes());
    for e in g.edges() {
        h.update((e.u as u64).to_le_bytes());
        h.update((e.v as u64).to_le_bytes());
        h.update([e.is_unstable() as u8]);
        h.update(e.weight.to_bits().to_le_bytes());
    }
    let hash = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
    Fingerprint { n: g.vertex_count(), edges: g.edge_count(), hash }
}

mod inf_float {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Word(String),
    }

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if *x == f64::INFINITY {
            "inf".serialize(s)
        } else {
            x.serialize(s)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(x),
            Repr::Word(w) if w == "inf" => Ok(f64::INFINITY),
            Repr::Word(w) => Err(serde::de::Error::custom(format!("expected number or \"inf\", got {w:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct PlanRecord {
    edge: EdgeId,
    #[serde(with = "inf_float")]
    d_s: f64,
    s_v: f64,
    #[serde(with = "inf_float")]
    cv: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mst_s: Option<Vec<EdgeId>>,
    mst_v: Vec<EdgeId>,
    frozen_others: BTreeMap<EdgeId, f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct PlanFile {
    fingerprint: Fingerprint,
    snapshot: BTreeMap<EdgeId, f64>,
    plans: Vec<PlanRecord>,
}

pub fn write_plan(ps: &PlanSet, g: &WeaklyDynamicGraph) -> String {
    let file = PlanFile {
        fingerprint: fingerprint(g),
        snapshot: ps.snapshot().clone(),
        plans: ps
            .plans()
            .iter()
            .map(|p| PlanRecord {
                edge: p.unstable_edge(),
                d_s: p.d_s(),
                s_v: p.s_v(),
                cv: p.cv(),
                mst_s: p.mst_s().map(|t| t.edge_ids().to_vec()),
                mst_v: p.mst_v().edge_ids().to_vec(),
                frozen_others: p.frozen_others().clone(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plan files always serialize")
}

/// Loads a plan file for `g`. Rejects files whose fingerprint differs from
/// the graph's, and files whose stored numbers disagree with their trees.
pub fn read_plan(text: &str, g: &WeaklyDynamicGraph) -> Result<PlanSet, PlanFileError> {
    let file: PlanFile = serde_json::from_str(text)?;
    let actual = fingerprint(g);
    if file.fingerprint != actual {
        return Err(PlanFileError::FingerprintMismatch {
            expected: file.fingerprint.to_string(),
            actual: actual.to_string(),
        });
    }
    let tree = |edge: EdgeId, ids: &[EdgeId]| {
        SpanningTree::from_edge_ids(g, ids).map_err(|source| PlanFileError::Tree { edge, source })
    };
    let mut plans = Vec::with_capacity(file.plans.len());
    for r in file.plans {
        let mst_s = r.mst_s.as_deref().map(|ids| tree(r.edge, ids)).transpose()?;
        let mst_v = tree(r.edge, &r.mst_v)?;
        plans.push(EdgePlan::from_parts(
            g,
            r.edge,
            mst_s,
            mst_v,
            r.frozen_others,
            r.d_s,
            r.s_v,
            r.cv,
        )?);
    }
    Ok(PlanSet::from_parts(g, plans, file.snapshot)?)
}
