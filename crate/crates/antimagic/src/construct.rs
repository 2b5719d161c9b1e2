//! Structural constructions: pruned graphs, leafy extensions, subdivisions.

use crate::classify::classify;
use crate::graph::{subgraph_from_edges, Graph, GraphError};
use std::collections::{BTreeMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("empty graph")]
    Empty,
    #[error("pendant count requested at non-interior vertex {0}")]
    NotInterior(usize),
    #[error("subdivision length 0 requested for edge {0}")]
    ZeroLength(usize),
    #[error("vertex {vertex} has no unlabeled pendant edge to keep")]
    NoKeepableLeaf { vertex: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The pruned copy of a graph.
///
/// All but one leaf is deleted at each vertex of V_s', and every leaf at any
/// other support vertex. Vertices of the pruned graph are re-indexed
/// densely in increasing original-id order; `orig_vertex`/`orig_edge` map
/// back to the host graph. `kept_edge_of` records, per V_s' vertex of the
/// original, its single retained pendant edge (original edge id).
#[derive(Debug, Clone)]
pub struct PrunedGraph {
    pub graph: Graph,
    pub orig_vertex: Vec<usize>,
    pub orig_edge: Vec<usize>,
    pub kept_edge_of: BTreeMap<usize, usize>,
}

/// Prunes `g`. Edges in `forbidden` (already labeled elsewhere) are never
/// chosen as retained pendant edges; among eligible pendant edges the one
/// with the smallest leaf vertex id is kept.
///
/// `K_2` prunes to itself, and a star prunes to a path of order three
/// through the center.
pub fn prune(g: &Graph, forbidden: &HashSet<usize>) -> Result<PrunedGraph, ConstructError> {
    if g.vertex_count() == 0 {
        return Err(ConstructError::Empty);
    }
    if g.vertex_count() == 2 && g.edge_count() == 1 {
        let copy = subgraph_from_edges(g, &[0]);
        return Ok(PrunedGraph {
            graph: copy.graph,
            orig_vertex: copy.orig_vertex,
            orig_edge: copy.orig_edge,
            kept_edge_of: BTreeMap::new(),
        });
    }
    let classes = classify(g);
    if g.is_star() {
        let center = *classes.interior.iter().next().expect("star has a center");
        // keep the two smallest-leaf-id unlabeled pendant edges
        let mut kept: Vec<usize> = g
            .neighbors(center)
            .iter()
            .filter(|&&(_, e)| !forbidden.contains(&e))
            .map(|&(_, e)| e)
            .take(2)
            .collect();
        if kept.len() < 2 {
            return Err(ConstructError::NoKeepableLeaf { vertex: center });
        }
        kept.sort_unstable();
        let copy = subgraph_from_edges(g, &kept);
        return Ok(PrunedGraph {
            graph: copy.graph,
            orig_vertex: copy.orig_vertex,
            orig_edge: copy.orig_edge,
            kept_edge_of: BTreeMap::new(),
        });
    }
    let mut kept_edge_of = BTreeMap::new();
    let mut deleted: HashSet<usize> = HashSet::new();
    for &v in &classes.supports {
        let pendant = g.pendant_edges_at(v);
        if classes.supports_prime.contains(&v) {
            // keep the unlabeled pendant edge with the smallest leaf id
            let keep = pendant
                .iter()
                .copied()
                .filter(|e| !forbidden.contains(e))
                .min_by_key(|&e| g.other_end(e, v))
                .ok_or(ConstructError::NoKeepableLeaf { vertex: v })?;
            kept_edge_of.insert(v, keep);
            deleted.extend(pendant.into_iter().filter(|&e| e != keep));
        } else {
            deleted.extend(pendant);
        }
    }
    let remaining: Vec<usize> = (0..g.edge_count()).filter(|e| !deleted.contains(e)).collect();
    let copy = subgraph_from_edges(g, &remaining);
    Ok(PrunedGraph {
        graph: copy.graph,
        orig_vertex: copy.orig_vertex,
        orig_edge: copy.orig_edge,
        kept_edge_of,
    })
}

/// Adds `count` fresh pendant edges at each keyed vertex, which must be
/// interior. Original edge ids are preserved; new leaves get fresh ids.
pub fn leafy(g: &Graph, pendant_counts: &BTreeMap<usize, usize>) -> Result<Graph, ConstructError> {
    for &v in pendant_counts.keys() {
        if v >= g.vertex_count() || g.degree(v) <= 1 {
            return Err(ConstructError::NotInterior(v));
        }
    }
    let mut out = g.clone();
    for (&v, &count) in pendant_counts {
        for _ in 0..count {
            let leaf = out.add_vertex();
            out.add_edge(v, leaf)?;
        }
    }
    Ok(out)
}

/// Replaces each edge by a path of the requested length (default 1 keeps
/// the edge). Length 1 preserves the edge and its id; longer paths reuse
/// the original id for the segment at the smaller endpoint and append
/// fresh ids for the rest.
pub fn subdivide(
    g: &Graph,
    per_edge_lengths: &BTreeMap<usize, usize>,
) -> Result<Graph, ConstructError> {
    if let Some((&e, _)) = per_edge_lengths.iter().find(|&(_, &len)| len == 0) {
        return Err(ConstructError::ZeroLength(e));
    }
    let mut out = Graph::new(g.vertex_count());
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        let len = per_edge_lengths.get(&e).copied().unwrap_or(1);
        let mut prev = u;
        for _ in 1..len {
            let mid = out.add_vertex();
            out.add_edge(prev, mid)?;
            prev = mid;
        }
        out.add_edge(prev, v)?;
    }
    Ok(out)
}
