//! Edge decomposition of the pruned graph: forest/even partition, good
//! path decompositions of trees, Eulerian circuits, and the assembled
//! sequence of ordered trails that drives the labeling engine.

use crate::classify::classify;
use crate::construct::{prune, ConstructError, PrunedGraph};
use crate::graph::{edge_components, subgraph_from_edges, Graph};
use std::collections::{BTreeSet, HashSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("input is not a tree")]
    NotATree,
    #[error("vertex {0} has odd degree; no Eulerian circuit")]
    OddDegree(usize),
    #[error("graph is disconnected; no Eulerian circuit")]
    Disconnected,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no admissible GPD center in component {0}")]
    NoCenter(usize),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// Partition of a graph's edges into a forest part and an even part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    pub e1: BTreeSet<usize>,
    pub e2: BTreeSet<usize>,
}

/// Splits the edges so that `e1` induces a forest and `e2` an even graph.
///
/// Cycles are located by DFS from the smallest vertex id with ascending
/// neighbor order and removed in discovery order; removed cycles form the
/// even part.
pub fn forest_even_partition(g: &Graph) -> EdgePartition {
    let mut removed: HashSet<usize> = HashSet::new();
    let mut e2 = BTreeSet::new();
    while let Some(cycle) = find_cycle(g, &removed) {
        for e in cycle {
            removed.insert(e);
            e2.insert(e);
        }
    }
    let e1 = (0..g.edge_count()).filter(|e| !removed.contains(e)).collect();
    EdgePartition { e1, e2 }
}

/// First cycle of the graph minus `removed`, as the DFS discovers it.
fn find_cycle(g: &Graph, removed: &HashSet<usize>) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut parent_edge: Vec<Option<usize>> = vec![None; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        // iterative DFS, neighbors ascending
        let mut stack = vec![(root, 0usize)];
        visited[root] = true;
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            let nbrs = g.neighbors(v);
            if *idx >= nbrs.len() {
                stack.pop();
                continue;
            }
            let (w, e) = nbrs[*idx];
            *idx += 1;
            if removed.contains(&e) || parent_edge[v] == Some(e) {
                continue;
            }
            if !visited[w] {
                visited[w] = true;
                parent_edge[w] = Some(e);
                stack.push((w, 0));
            } else {
                // back edge: w is an ancestor of v on the DFS stack
                let mut cycle = vec![e];
                let mut x = v;
                while x != w {
                    let pe = parent_edge[x].expect("ancestor chain");
                    cycle.push(pe);
                    x = g.other_end(pe, x);
                }
                return Some(cycle);
            }
        }
    }
    None
}

impl EdgePartition {
    /// Checks the defining invariants against `g`.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let all: BTreeSet<usize> = (0..g.edge_count()).collect();
        let union: BTreeSet<usize> = self.e1.union(&self.e2).copied().collect();
        if union != all || !self.e1.is_disjoint(&self.e2) {
            return Err("e1, e2 do not partition the edge set".into());
        }
        let forest_edges: Vec<usize> = self.e1.iter().copied().collect();
        let sub = subgraph_from_edges(g, &forest_edges);
        let comps = edge_components(g, &forest_edges).len();
        if sub.graph.edge_count() + comps != sub.graph.vertex_count() {
            return Err("e1 does not induce a forest".into());
        }
        for v in g.vertices() {
            let deg2 = g
                .neighbors(v)
                .iter()
                .filter(|&&(_, e)| self.e2.contains(&e))
                .count();
            if deg2 % 2 != 0 {
                return Err(format!("vertex {v} has odd degree in e2"));
            }
        }
        if g.edge_count() > 0 && self.e1.is_empty() && self.e2.is_empty() {
            return Err("both parts empty".into());
        }
        Ok(())
    }
}

/// One path of a good path decomposition, in DFS-descent direction: it runs
/// from `from` (the center, or a vertex on an earlier path) down to the
/// tree leaf `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpdPath {
    pub from: usize,
    pub to: usize,
    pub edges: Vec<usize>,
}

/// Good path decomposition of a tree centered at `center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gpd {
    pub center: usize,
    pub paths: Vec<GpdPath>,
}

/// Builds a GPD by depth-first search from `center`, visiting smallest-id
/// neighbors first. Every maximal descent to a leaf closes one path.
pub fn gpd(tree: &Graph, center: usize) -> Result<Gpd, DecomposeError> {
    gpd_steered(tree, center, None)
}

/// Like [`gpd`], but when `first_leaf` is given, the first DFS descent is
/// routed along the unique tree path from the center to that leaf, so the
/// first path of the decomposition ends there. The remaining descents keep
/// the smallest-id neighbor order.
pub fn gpd_steered(
    tree: &Graph,
    center: usize,
    first_leaf: Option<usize>,
) -> Result<Gpd, DecomposeError> {
    if !tree.is_tree() || tree.edge_count() == 0 {
        return Err(DecomposeError::NotATree);
    }
    if center >= tree.vertex_count() {
        return Err(DecomposeError::Precondition(format!(
            "center {center} not a vertex"
        )));
    }
    // prefer[v] = the neighbor to descend to first from v (the next vertex
    // on the center-to-first_leaf path).
    let mut prefer: Vec<Option<usize>> = vec![None; tree.vertex_count()];
    if let Some(target) = first_leaf {
        if target >= tree.vertex_count() {
            return Err(DecomposeError::Precondition(format!(
                "first leaf {target} not a vertex"
            )));
        }
        for w in tree_path(tree, center, target).windows(2) {
            prefer[w[0]] = Some(w[1]);
        }
    }
    let mut visited = vec![false; tree.vertex_count()];
    let mut paths = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    let mut open_from = center;
    descend(
        tree,
        center,
        &prefer,
        &mut visited,
        &mut open,
        &mut open_from,
        &mut paths,
    );
    debug_assert!(open.is_empty());
    Ok(Gpd { center, paths })
}

/// Vertex sequence of the unique path between `from` and `to` in a tree.
fn tree_path(tree: &Graph, from: usize, to: usize) -> Vec<usize> {
    let mut parent: Vec<Option<usize>> = vec![None; tree.vertex_count()];
    let mut stack = vec![from];
    let mut seen = vec![false; tree.vertex_count()];
    seen[from] = true;
    while let Some(v) = stack.pop() {
        for &(w, _) in tree.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                stack.push(w);
            }
        }
    }
    let mut path = vec![to];
    let mut at = to;
    while let Some(p) = parent[at] {
        path.push(p);
        at = p;
    }
    path.reverse();
    path
}

fn descend(
    tree: &Graph,
    v: usize,
    prefer: &[Option<usize>],
    visited: &mut [bool],
    open: &mut Vec<usize>,
    open_from: &mut usize,
    paths: &mut Vec<GpdPath>,
) {
    visited[v] = true;
    let mut descended = false;
    let mut order: Vec<(usize, usize)> = tree.neighbors(v).to_vec();
    if let Some(p) = prefer[v] {
        order.sort_by_key(|&(w, _)| (w != p, w));
    }
    for (w, e) in order {
        if visited[w] {
            continue;
        }
        descended = true;
        if open.is_empty() {
            *open_from = v;
        }
        open.push(e);
        descend(tree, w, prefer, visited, open, open_from, paths);
    }
    if !descended && !open.is_empty() {
        paths.push(GpdPath {
            from: *open_from,
            to: v,
            edges: std::mem::take(open),
        });
    }
}

impl Gpd {
    /// Validates the four defining conditions of a GPD against `tree`.
    pub fn check(&self, tree: &Graph) -> Result<(), String> {
        if self.paths.is_empty() {
            return Err("empty decomposition".into());
        }
        let mut covered = BTreeSet::new();
        for (i, p) in self.paths.iter().enumerate() {
            if p.edges.is_empty() {
                return Err(format!("path {i} is empty"));
            }
            let mut at = p.from;
            for &e in &p.edges {
                let (a, b) = tree.endpoints(e);
                if a != at && b != at {
                    return Err(format!("path {i} is not contiguous"));
                }
                at = tree.other_end(e, at);
                if !covered.insert(e) {
                    return Err(format!("edge {e} covered twice"));
                }
            }
            if at != p.to {
                return Err(format!("path {i} does not end at its stated end"));
            }
            if tree.degree(p.to) != 1 && tree.degree(p.from) != 1 {
                return Err(format!("path {i} has no tree-leaf end"));
            }
        }
        if covered.len() != tree.edge_count() {
            return Err("paths do not cover the tree".into());
        }
        if self.paths[0].from != self.center && self.paths[0].to != self.center {
            return Err("center is not an end of the first path".into());
        }
        // each later path attaches to an earlier one
        let mut on_earlier: BTreeSet<usize> = BTreeSet::new();
        for (i, p) in self.paths.iter().enumerate() {
            if i > 0 && !on_earlier.contains(&p.from) && !on_earlier.contains(&p.to) {
                return Err(format!("path {i} does not attach to an earlier path"));
            }
            let mut at = p.from;
            on_earlier.insert(at);
            for &e in &p.edges {
                at = tree.other_end(e, at);
                on_earlier.insert(at);
            }
        }
        Ok(())
    }
}

/// Eulerian circuit by Hierholzer's method with smallest-id-first edge
/// choice, starting and ending at `start`. Requires every degree even and
/// all edges reachable from `start`.
pub fn eulerian_circuit(g: &Graph, start: usize) -> Result<Vec<usize>, DecomposeError> {
    for v in g.vertices() {
        if g.degree(v) % 2 != 0 {
            return Err(DecomposeError::OddDegree(v));
        }
    }
    if g.edge_count() == 0 {
        return Err(DecomposeError::Disconnected);
    }
    let mut next = vec![0usize; g.vertex_count()];
    let mut used = vec![false; g.edge_count()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut arrival_edges = Vec::with_capacity(g.edge_count());
    while let Some(&(v, arrived_by)) = stack.last() {
        let nbrs = g.neighbors(v);
        while next[v] < nbrs.len() && used[nbrs[next[v]].1] {
            next[v] += 1;
        }
        if next[v] == nbrs.len() {
            stack.pop();
            if let Some(e) = arrived_by {
                arrival_edges.push(e);
            }
        } else {
            let (w, e) = nbrs[next[v]];
            used[e] = true;
            stack.push((w, Some(e)));
        }
    }
    if arrival_edges.len() != g.edge_count() {
        return Err(DecomposeError::Disconnected);
    }
    arrival_edges.reverse();
    Ok(arrival_edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrailKind {
    Path,
    Circuit,
}

/// An ordered trail of the labeling sequence. Edges are host-graph ids in
/// labeling order. A path trail starts at `anchor` (a pruned-component
/// leaf that is not the GPD center); a circuit starts and ends at `anchor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedTrail {
    pub kind: TrailKind,
    pub anchor: usize,
    pub edges: Vec<usize>,
    /// true only for the first GPD path of a tree input
    pub first_tree_path: bool,
}

/// The full Step-3 sequence: all GPD paths of all forest components, then
/// the Eulerian circuits of all even components, plus the label-split
/// counts `m0` and `mb`.
#[derive(Debug, Clone)]
pub struct SSequence {
    pub trails: Vec<OrderedTrail>,
    pub m0: usize,
    pub mb: usize,
    /// the G = G_1 case: the even part is empty, so the input is a tree
    pub is_tree: bool,
}

/// Everything Step 3 needs, computed without assigning any label. Edge ids
/// are host-graph ids throughout; `gpds` keeps the per-component
/// decompositions (host ids) for explain output.
#[derive(Debug, Clone)]
pub struct DecompositionPlan {
    pub step1_edges: Vec<usize>,
    pub pruned: PrunedGraph,
    /// partition translated to host edge ids
    pub e1: BTreeSet<usize>,
    pub e2: BTreeSet<usize>,
    pub step2_edges: Vec<usize>,
    pub gpds: Vec<Gpd>,
    pub sequence: SSequence,
}

/// Computes Steps 1-3 structure for a connected graph with `V_3 subset of
/// V_s`, at least two interior vertices and at least one degree->=3 vertex.
/// Stars, paths, cycles and K_2 are rejected; they are handled elsewhere.
pub fn build_plan(g: &Graph) -> Result<DecompositionPlan, DecomposeError> {
    let classes = classify(g);
    if !g.is_connected() {
        return Err(DecomposeError::Precondition("graph is disconnected".into()));
    }
    if g.edge_count() < 3 {
        return Err(DecomposeError::Precondition("size must be at least 3".into()));
    }
    if let Some(&v) = classes.deg3.difference(&classes.supports).next() {
        return Err(DecomposeError::Precondition(format!(
            "vertex {v} has degree >= 3 but is not a support vertex"
        )));
    }
    if g.is_star() {
        return Err(DecomposeError::Precondition(
            "star handled trivially; no decomposition plan".into(),
        ));
    }
    if classes.interior.len() < 2 {
        return Err(DecomposeError::Precondition(
            "need at least two interior vertices".into(),
        ));
    }
    if classes.deg3.is_empty() {
        return Err(DecomposeError::Precondition(
            "paths and cycles are handled by the search labeler".into(),
        ));
    }

    // Step 1 edge selection: at V_{s,3}' keep the two smallest pendant
    // edge ids unlabeled, elsewhere in V_3 keep one.
    let mut step1_edges = Vec::new();
    for &v in &classes.supports_prime_3 {
        let pendant = g.pendant_edges_at(v);
        step1_edges.extend(pendant.into_iter().skip(2));
    }
    for &v in classes.deg3.difference(&classes.supports_prime_3) {
        let pendant = g.pendant_edges_at(v);
        step1_edges.extend(pendant.into_iter().skip(1));
    }
    let mut labeled: HashSet<usize> = step1_edges.iter().copied().collect();

    let pruned = prune(g, &labeled)?;
    let part = forest_even_partition(&pruned.graph);
    let e1: BTreeSet<usize> = part.e1.iter().map(|&e| pruned.orig_edge[e]).collect();
    let e2: BTreeSet<usize> = part.e2.iter().map(|&e| pruned.orig_edge[e]).collect();
    let g2_vertices: BTreeSet<usize> = e2
        .iter()
        .flat_map(|&e| {
            let (a, b) = g.endpoints(e);
            [a, b]
        })
        .collect();

    // Step 2 edge selection per forest component.
    let e1_local: Vec<usize> = part.e1.iter().copied().collect();
    let components = edge_components(&pruned.graph, &e1_local);
    let mut step2_edges = Vec::new();
    let mut comp_copies = Vec::new();
    for comp in &components {
        let sub = subgraph_from_edges(&pruned.graph, comp);
        let to_host_edge = |local: usize, sub: &crate::graph::SubgraphCopy| {
            pruned.orig_edge[sub.orig_edge[local]]
        };
        let cls = classify(&sub.graph);
        if sub.graph.is_star() {
            let center = *cls.interior.iter().next().expect("star center");
            // all pendant edges except the two with the smallest leaf ids,
            // matching what the component's pruned copy will retain
            let keep: Vec<usize> = sub
                .graph
                .neighbors(center)
                .iter()
                .map(|&(_, e)| e)
                .take(2)
                .collect();
            let mut rest: Vec<usize> = (0..sub.graph.edge_count())
                .filter(|e| !keep.contains(e))
                .collect();
            rest.sort_unstable();
            step2_edges.extend(rest.into_iter().map(|e| to_host_edge(e, &sub)));
        } else {
            for &v in &cls.supports_prime_3 {
                let pendant = sub.graph.pendant_edges_at(v);
                let keep = pendant
                    .iter()
                    .copied()
                    .min_by_key(|&e| sub.graph.other_end(e, v))
                    .expect("V_s' vertex has a pendant edge");
                step2_edges.extend(
                    pendant
                        .into_iter()
                        .filter(|&e| e != keep)
                        .map(|e| to_host_edge(e, &sub)),
                );
            }
            for &v in cls.deg3.difference(&cls.supports_prime_3) {
                let pendant = sub.graph.pendant_edges_at(v);
                step2_edges.extend(pendant.into_iter().map(|e| to_host_edge(e, &sub)));
            }
        }
        comp_copies.push(sub);
    }
    labeled.extend(step2_edges.iter().copied());

    // GPD per forest component, on a pruned copy containing no labeled edge.
    let is_tree = e2.is_empty();
    let mut gpds = Vec::new();
    let mut trails = Vec::new();
    let mut m0 = 0usize;
    for (ci, sub) in comp_copies.iter().enumerate() {
        let forbidden_local: HashSet<usize> = sub
            .orig_edge
            .iter()
            .enumerate()
            .filter(|&(_, &pe)| labeled.contains(&pruned.orig_edge[pe]))
            .map(|(local, _)| local)
            .collect();
        let pc = prune(&sub.graph, &forbidden_local)?;
        let to_host_vertex =
            |v: usize| pruned.orig_vertex[sub.orig_vertex[pc.orig_vertex[v]]];
        let to_host_edge = |e: usize| pruned.orig_edge[sub.orig_edge[pc.orig_edge[e]]];
        let center_local = pick_center(g, &pc, &to_host_vertex, &g2_vertices, &classes, ci)?;
        // In the tree case an odd first path forces the delicate start-in-
        // L_b machinery (and the product label-1 exception), which is only
        // sound when no even alternative exists. Prefer a center and first
        // descent that make the first path even.
        let (center_local, first_leaf) = if is_tree && ci == 0 {
            even_first_path_choice(&pc, &to_host_vertex, &classes)
                .unwrap_or((center_local, None))
        } else {
            (center_local, None)
        };
        let decomposition = gpd_steered(&pc.graph, center_local, first_leaf)?;
        for (pi, p) in decomposition.paths.iter().enumerate() {
            m0 += p.edges.len() / 2;
            // trail order starts at the leaf end (the DFS descent target)
            let edges: Vec<usize> = p.edges.iter().rev().map(|&e| to_host_edge(e)).collect();
            let anchor = to_host_vertex(p.to);
            trails.push(OrderedTrail {
                kind: TrailKind::Path,
                anchor,
                edges,
                first_tree_path: is_tree && ci == 0 && pi == 0,
            });
        }
        gpds.push(Gpd {
            center: to_host_vertex(decomposition.center),
            paths: decomposition
                .paths
                .iter()
                .map(|p| GpdPath {
                    from: to_host_vertex(p.from),
                    to: to_host_vertex(p.to),
                    edges: p.edges.iter().map(|&e| to_host_edge(e)).collect(),
                })
                .collect(),
        });
    }

    // Eulerian circuits of the even components, anchored at a vertex of
    // degree >= 3 in the host graph (smallest id).
    let e2_local: Vec<usize> = part.e2.iter().copied().collect();
    for comp in edge_components(&pruned.graph, &e2_local) {
        let sub = subgraph_from_edges(&pruned.graph, &comp);
        let to_host_vertex = |v: usize| pruned.orig_vertex[sub.orig_vertex[v]];
        let anchor_local = (0..sub.graph.vertex_count())
            .find(|&v| g.degree(to_host_vertex(v)) >= 3)
            .ok_or_else(|| {
                DecomposeError::Precondition(
                    "even component has no vertex of degree >= 3 in the host".into(),
                )
            })?;
        let circuit = eulerian_circuit(&sub.graph, anchor_local)?;
        m0 += (circuit.len() + 1) / 2;
        trails.push(OrderedTrail {
            kind: TrailKind::Circuit,
            anchor: to_host_vertex(anchor_local),
            edges: circuit
                .into_iter()
                .map(|e| pruned.orig_edge[sub.orig_edge[e]])
                .collect(),
            first_tree_path: false,
        });
    }

    let first_path_odd = trails
        .first()
        .map(|t| t.kind == TrailKind::Path && t.edges.len() % 2 == 1)
        .unwrap_or(false);
    let mb = if is_tree && first_path_odd { m0 + 1 } else { m0 };

    Ok(DecompositionPlan {
        step1_edges,
        pruned,
        e1,
        e2,
        step2_edges,
        gpds,
        sequence: SSequence {
            trails,
            m0,
            mb,
            is_tree,
        },
    })
}

/// Chooses the GPD center of one forest component's pruned copy.
///
/// With a non-empty even part the center must lie on the even subgraph;
/// for a tree input the single component is centered at a degree->=3
/// vertex of the host. If pruning the component removed every even-part
/// vertex, fall back to the smallest host-degree->=3 non-leaf.
fn pick_center(
    _g: &Graph,
    pc: &PrunedGraph,
    to_host_vertex: &dyn Fn(usize) -> usize,
    g2_vertices: &BTreeSet<usize>,
    classes: &crate::classify::VertexClasses,
    component_index: usize,
) -> Result<usize, DecomposeError> {
    let locals: Vec<usize> = (0..pc.graph.vertex_count()).collect();
    if g2_vertices.is_empty() {
        return locals
            .iter()
            .copied()
            .find(|&v| classes.deg3.contains(&to_host_vertex(v)))
            .ok_or(DecomposeError::NoCenter(component_index));
    }
    if let Some(v) = locals
        .iter()
        .copied()
        .find(|&v| g2_vertices.contains(&to_host_vertex(v)))
    {
        return Ok(v);
    }
    locals
        .iter()
        .copied()
        .find(|&v| pc.graph.degree(v) > 1 && classes.deg3.contains(&to_host_vertex(v)))
        .ok_or(DecomposeError::NoCenter(component_index))
}

/// Looks for a GPD center (a degree->=3 host vertex) together with a leaf
/// of the pruned tree at even distance from it. Returns the smallest such
/// center with its smallest even-distance leaf, or `None` when every
/// center-to-leaf path is odd.
fn even_first_path_choice(
    pc: &PrunedGraph,
    to_host_vertex: &dyn Fn(usize) -> usize,
    classes: &crate::classify::VertexClasses,
) -> Option<(usize, Option<usize>)> {
    let n = pc.graph.vertex_count();
    for v in (0..n).filter(|&v| classes.deg3.contains(&to_host_vertex(v))) {
        // BFS distances from the candidate center
        let mut dist = vec![usize::MAX; n];
        dist[v] = 0;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &(w, _) in pc.graph.neighbors(x) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
            }
        }
        if let Some(leaf) = (0..n)
            .find(|&w| w != v && pc.graph.degree(w) == 1 && dist[w] % 2 == 0)
        {
            return Some((v, Some(leaf)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        // triangle 0-1-2 with a pendant 3 at vertex 0
        let mut g = Graph::new(4);
        for (a, b) in [(0, 1), (1, 2), (0, 2), (0, 3)] {
            g.add_edge(a, b).unwrap();
        }
        g
    }

    fn spider() -> Graph {
        // path 0-1-2-3 with a pendant 4 at vertex 1
        let mut g = Graph::new(5);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (1, 4)] {
            g.add_edge(a, b).unwrap();
        }
        g
    }

    #[test]
    fn partition_of_tree_is_all_forest() {
        let g = spider();
        let p = forest_even_partition(&g);
        assert_eq!(p.e1.len(), 4);
        assert!(p.e2.is_empty());
        p.check(&g).unwrap();
    }

    #[test]
    fn partition_of_cycle_is_all_even() {
        let g = crate::generate::cycle(5).unwrap();
        let p = forest_even_partition(&g);
        assert!(p.e1.is_empty());
        assert_eq!(p.e2.len(), 5);
        p.check(&g).unwrap();
    }

    #[test]
    fn partition_theta_graph() {
        // two triangles sharing an edge: cycle 0-1-2 plus 1-2-3
        let mut g = Graph::new(4);
        for (a, b) in [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)] {
            g.add_edge(a, b).unwrap();
        }
        let p = forest_even_partition(&g);
        p.check(&g).unwrap();
        // DFS from 0 finds 0-1-2-0 first; the rest is a forest
        assert_eq!(p.e2, BTreeSet::from([0, 1, 2]));
        assert_eq!(p.e1, BTreeSet::from([3, 4]));
    }

    #[test]
    fn gpd_spider_from_branch_vertex() {
        let g = spider();
        let d = gpd(&g, 1).unwrap();
        d.check(&g).unwrap();
        assert_eq!(d.paths.len(), 3);
        assert_eq!(d.paths[0], GpdPath { from: 1, to: 0, edges: vec![0] });
        assert_eq!(d.paths[1], GpdPath { from: 1, to: 3, edges: vec![1, 2] });
        assert_eq!(d.paths[2], GpdPath { from: 1, to: 4, edges: vec![3] });
    }

    #[test]
    fn gpd_rejects_non_tree() {
        assert_eq!(gpd(&paw(), 0), Err(DecomposeError::NotATree));
    }

    #[test]
    fn eulerian_triangle() {
        let g = crate::generate::cycle(3).unwrap();
        assert_eq!(eulerian_circuit(&g, 0).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn eulerian_rejects_odd_degree() {
        let g = crate::generate::path(3).unwrap();
        assert_eq!(eulerian_circuit(&g, 0), Err(DecomposeError::OddDegree(0)));
    }

    #[test]
    fn eulerian_bowtie() {
        // two triangles sharing vertex 2
        let mut g = Graph::new(5);
        for (a, b) in [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)] {
            g.add_edge(a, b).unwrap();
        }
        let circuit = eulerian_circuit(&g, 2).unwrap();
        assert_eq!(circuit.len(), 6);
        // smallest-id-first from 2: 2-0-1-2-3-4-2
        assert_eq!(circuit, vec![2, 0, 1, 3, 4, 5]);
    }

    #[test]
    fn plan_for_paw() {
        let g = paw();
        let plan = build_plan(&g).unwrap();
        assert!(plan.step1_edges.is_empty());
        assert!(plan.step2_edges.is_empty());
        assert_eq!(plan.e1, BTreeSet::new());
        assert_eq!(plan.e2, BTreeSet::from([0, 1, 2]));
        assert!(!plan.sequence.is_tree);
        assert_eq!(plan.sequence.m0, 2);
        assert_eq!(plan.sequence.mb, 2);
        assert_eq!(plan.sequence.trails.len(), 1);
        let t = &plan.sequence.trails[0];
        assert_eq!(t.kind, TrailKind::Circuit);
        assert_eq!(t.anchor, 0);
        assert_eq!(t.edges, vec![0, 1, 2]);
    }

    #[test]
    fn plan_for_spider() {
        let g = spider();
        let plan = build_plan(&g).unwrap();
        assert!(plan.step1_edges.is_empty());
        assert!(plan.step2_edges.is_empty());
        assert!(plan.sequence.is_tree);
        // pruned graph is the path 0-1-2-3; GPD from vertex 1, steered so
        // the first path (1-2-3) is even
        assert_eq!(plan.pruned.graph.edge_count(), 3);
        assert_eq!(plan.sequence.m0, 1);
        assert_eq!(plan.sequence.mb, 1); // first path is even
        let trails = &plan.sequence.trails;
        assert_eq!(trails.len(), 2);
        assert_eq!(trails[0].edges, vec![2, 1]);
        assert_eq!(trails[0].anchor, 3);
        assert!(trails[0].first_tree_path);
        assert_eq!(trails[1].edges, vec![0]);
        assert_eq!(trails[1].anchor, 0);
    }

    #[test]
    fn plan_rejects_bad_inputs() {
        assert!(matches!(
            build_plan(&crate::generate::star(4).unwrap()),
            Err(DecomposeError::Precondition(_))
        ));
        assert!(matches!(
            build_plan(&crate::generate::path(5).unwrap()),
            Err(DecomposeError::Precondition(_))
        ));
        // degree-3 vertex without a pendant edge: K_4 minus an edge plus path
        let mut g = Graph::new(4);
        for (a, b) in [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)] {
            g.add_edge(a, b).unwrap();
        }
        assert!(matches!(
            build_plan(&g),
            Err(DecomposeError::Precondition(_))
        ));
    }
}
