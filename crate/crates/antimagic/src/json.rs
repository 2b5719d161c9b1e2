//! JSON forms of labelings, decomposition plans and verification reports.
//! Rationals travel as exact "p/q" strings.

use crate::decompose::{DecompositionPlan, TrailKind};
use crate::engine::{Labeling, Op};
use crate::graph::Graph;
use crate::rational::{format_rat, parse_rat};
use crate::verify::{ClaimStatus, VerificationReport};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("unknown operation {0:?} (expected \"+\" or \"*\")")]
    BadOp(String),
    #[error("no edge {0}-{1} in the graph")]
    NoSuchEdge(usize, usize),
    #[error("edge {0}-{1} labeled twice")]
    DuplicateEdge(usize, usize),
    #[error("labeling covers {got} of {want} edges")]
    Incomplete { got: usize, want: usize },
    #[error("bad rational: {0}")]
    BadRational(#[from] crate::rational::RatParseError),
}

pub fn op_str(op: Op) -> &'static str {
    match op {
        Op::Sum => "+",
        Op::Product => "*",
    }
}

pub fn parse_op(s: &str) -> Result<Op, JsonError> {
    match s {
        "+" => Ok(Op::Sum),
        "*" => Ok(Op::Product),
        other => Err(JsonError::BadOp(other.to_string())),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EdgeLabelJson {
    pub edge: [usize; 2],
    pub label: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VertexValueJson {
    pub vertex: usize,
    pub value: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LabelingJson {
    pub op: String,
    pub labels: Vec<EdgeLabelJson>,
    pub vertex_values: Vec<VertexValueJson>,
}

pub fn labeling_to_json(g: &Graph, labeling: &Labeling) -> LabelingJson {
    let values = labeling.vertex_values(g);
    LabelingJson {
        op: op_str(labeling.op).to_string(),
        labels: (0..g.edge_count())
            .map(|e| {
                let (u, v) = g.endpoints(e);
                EdgeLabelJson {
                    edge: [u, v],
                    label: format_rat(&labeling.labels[e]),
                }
            })
            .collect(),
        vertex_values: g
            .vertices()
            .map(|v| VertexValueJson {
                vertex: v,
                value: format_rat(&values[v]),
            })
            .collect(),
    }
}

/// Rebuilds a labeling from its JSON form, matching edges by endpoints.
/// The stored vertex values are ignored; they are derived data.
pub fn labeling_from_json(g: &Graph, json: &LabelingJson) -> Result<Labeling, JsonError> {
    let op = parse_op(&json.op)?;
    let mut labels = vec![None; g.edge_count()];
    for item in &json.labels {
        let [u, v] = item.edge;
        let e = g
            .edge_between(u, v)
            .ok_or(JsonError::NoSuchEdge(u, v))?;
        if labels[e].is_some() {
            return Err(JsonError::DuplicateEdge(u, v));
        }
        labels[e] = Some(parse_rat(&item.label)?);
    }
    let got = labels.iter().filter(|l| l.is_some()).count();
    if got != g.edge_count() {
        return Err(JsonError::Incomplete {
            got,
            want: g.edge_count(),
        });
    }
    Ok(Labeling {
        op,
        labels: labels.into_iter().map(|l| l.unwrap()).collect(),
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GpdPathJson {
    pub from: usize,
    pub to: usize,
    pub edges: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GpdJson {
    pub center: usize,
    pub paths: Vec<GpdPathJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TrailJson {
    pub kind: String,
    pub anchor: usize,
    pub edges: Vec<usize>,
    pub first_tree_path: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PlanJson {
    /// edges of the pruned graph as host-id endpoint pairs
    pub pruned_edges: Vec<[usize; 2]>,
    pub e1: Vec<usize>,
    pub e2: Vec<usize>,
    pub step1_edges: Vec<usize>,
    pub step2_edges: Vec<usize>,
    pub gpds: Vec<GpdJson>,
    pub trails: Vec<TrailJson>,
    pub m0: usize,
    pub mb: usize,
    pub is_tree: bool,
}

pub fn plan_to_json(g: &Graph, plan: &DecompositionPlan) -> PlanJson {
    PlanJson {
        pruned_edges: plan
            .pruned
            .orig_edge
            .iter()
            .map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect(),
        e1: plan.e1.iter().copied().collect(),
        e2: plan.e2.iter().copied().collect(),
        step1_edges: plan.step1_edges.clone(),
        step2_edges: plan.step2_edges.clone(),
        gpds: plan
            .gpds
            .iter()
            .map(|d| GpdJson {
                center: d.center,
                paths: d
                    .paths
                    .iter()
                    .map(|p| GpdPathJson {
                        from: p.from,
                        to: p.to,
                        edges: p.edges.clone(),
                    })
                    .collect(),
            })
            .collect(),
        trails: plan
            .sequence
            .trails
            .iter()
            .map(|t| TrailJson {
                kind: match t.kind {
                    TrailKind::Path => "path".into(),
                    TrailKind::Circuit => "circuit".into(),
                },
                anchor: t.anchor,
                edges: t.edges.clone(),
                first_tree_path: t.first_tree_path,
            })
            .collect(),
        m0: plan.sequence.m0,
        mb: plan.sequence.mb,
        is_tree: plan.sequence.is_tree,
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClaimJson {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CollisionJson {
    pub u: usize,
    pub v: usize,
    pub value: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReportJson {
    pub op: String,
    pub is_bijection: bool,
    pub is_injective_values: bool,
    pub vertex_values: Vec<VertexValueJson>,
    pub collision_witness: Option<CollisionJson>,
    pub claim_results: Vec<ClaimJson>,
}

pub fn report_to_json(report: &VerificationReport) -> ReportJson {
    ReportJson {
        op: op_str(report.op).to_string(),
        is_bijection: report.is_bijection,
        is_injective_values: report.is_injective_values,
        vertex_values: report
            .vertex_values
            .iter()
            .enumerate()
            .map(|(v, val)| VertexValueJson {
                vertex: v,
                value: format_rat(val),
            })
            .collect(),
        collision_witness: report.collision_witness.as_ref().map(|(u, v, val)| {
            CollisionJson {
                u: *u,
                v: *v,
                value: format_rat(val),
            }
        }),
        claim_results: report
            .claim_results
            .iter()
            .map(|c| ClaimJson {
                name: c.name.to_string(),
                status: match c.status {
                    ClaimStatus::Pass => "pass".into(),
                    ClaimStatus::Fail => "fail".into(),
                    ClaimStatus::Skipped => "skipped".into(),
                },
                detail: c.detail.clone(),
            })
            .collect(),
    }
}
