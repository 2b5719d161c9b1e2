//! Simple undirected graphs with dense integer vertex and edge ids.
//!
//! Edge ids are stable: edge `i` is the `i`-th edge added, and every
//! algorithm in the crate addresses edges by id so that subgraphs and
//! pruned copies can be mapped back to the original graph.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("vertex {0} out of range (n={1})")]
    VertexOutOfRange(usize, usize),
    #[error("empty graph")]
    Empty,
    #[error("bad edge list line {line}: {msg}")]
    BadEdgeList { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // per vertex: (neighbor, edge id), sorted by neighbor
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an edge and returns its id. Rejects loops and parallel edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize, GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.adj[u].iter().any(|&(w, _)| w == v) {
            return Err(GraphError::ParallelEdge(u, v));
        }
        let id = self.edges.len();
        self.edges.push((u.min(v), u.max(v)));
        let pu = self.adj[u].partition_point(|&(w, _)| w < v);
        self.adj[u].insert(pu, (v, id));
        let pv = self.adj[v].partition_point(|&(w, _)| w < u);
        self.adj[v].insert(pv, (u, id));
        Ok(id)
    }

    /// Adds a fresh vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of edge `e` other than `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Neighbors of `v` as (neighbor, edge id), sorted by neighbor id.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// The id of the edge joining `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return None;
        }
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.vertex_count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1
            && self.edge_count() + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// A path graph: a tree whose vertices all have degree at most two.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.vertices().all(|v| self.degree(v) <= 2)
    }

    /// A cycle graph: connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3
            && self.is_connected()
            && self.vertices().all(|v| self.degree(v) == 2)
    }

    /// A star: a tree of order at least three with exactly one interior vertex.
    pub fn is_star(&self) -> bool {
        self.is_tree()
            && self.vertex_count() >= 3
            && self.vertices().filter(|&v| self.degree(v) > 1).count() == 1
    }

    /// An edge is pendant when one of its ends has degree one.
    pub fn is_pendant_edge(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        self.degree(u) == 1 || self.degree(v) == 1
    }

    /// Pendant edges incident with `v`, sorted by edge id.
    pub fn pendant_edges_at(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.adj[v]
            .iter()
            .filter(|&&(w, _)| self.degree(w) == 1)
            .map(|&(_, e)| e)
            .collect();
        out.sort_unstable();
        out
    }

    /// Checks internal consistency: simplicity and adjacency/edge agreement.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut seen = BTreeSet::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                return Err(format!("loop at {u}"));
            }
            if u >= self.vertex_count() || v >= self.vertex_count() {
                return Err(format!("edge {id} out of range"));
            }
            if !seen.insert((u, v)) {
                return Err(format!("parallel edge {u}-{v}"));
            }
            if !self.adj[u].contains(&(v, id)) || !self.adj[v].contains(&(u, id)) {
                return Err(format!("adjacency missing edge {id}"));
            }
        }
        let total: usize = self.adj.iter().map(Vec::len).sum();
        if total != 2 * self.edges.len() {
            return Err("adjacency size mismatch".to_string());
        }
        Ok(())
    }

    /// Parses the interchange edge-list format: one `u v` pair per line,
    /// `#` comments and blank lines ignored. Vertex count is one more than
    /// the largest id mentioned.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut pairs = Vec::new();
        let mut max_v = None::<usize>;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                tok.and_then(|t| t.parse::<usize>().ok())
                    .ok_or(GraphError::BadEdgeList {
                        line: i + 1,
                        msg: format!("expected `u v`, got `{raw}`"),
                    })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(GraphError::BadEdgeList {
                    line: i + 1,
                    msg: format!("trailing tokens in `{raw}`"),
                });
            }
            max_v = Some(max_v.map_or(u.max(v), |m: usize| m.max(u.max(v))));
            pairs.push((u, v));
        }
        let n = match max_v {
            Some(m) => m + 1,
            None => return Err(GraphError::Empty),
        };
        Graph::from_edges(n, &pairs)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Relabels vertices by `perm` (old id -> new id) keeping edge ids.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        for &(u, v) in &self.edges {
            g.add_edge(perm[u], perm[v]).expect("permutation of a simple graph");
        }
        g
    }
}

/// A standalone copy of the subgraph spanned by `edge_ids`, together with
/// maps back to the host graph. Vertices are the endpoints of the chosen
/// edges, re-indexed densely in increasing host-id order, so host-id order
/// is preserved.
#[derive(Debug, Clone)]
pub struct SubgraphCopy {
    pub graph: Graph,
    /// local vertex id -> host vertex id (strictly increasing)
    pub orig_vertex: Vec<usize>,
    /// local edge id -> host edge id
    pub orig_edge: Vec<usize>,
}

impl SubgraphCopy {
    pub fn local_vertex(&self, host: usize) -> Option<usize> {
        self.orig_vertex.binary_search(&host).ok()
    }
}

pub fn subgraph_from_edges(g: &Graph, edge_ids: &[usize]) -> SubgraphCopy {
    let mut ids: Vec<usize> = edge_ids.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mut verts = BTreeSet::new();
    for &e in &ids {
        let (u, v) = g.endpoints(e);
        verts.insert(u);
        verts.insert(v);
    }
    let orig_vertex: Vec<usize> = verts.into_iter().collect();
    let mut local = Graph::new(orig_vertex.len());
    let lookup = |host: usize| orig_vertex.binary_search(&host).unwrap();
    for &e in &ids {
        let (u, v) = g.endpoints(e);
        local
            .add_edge(lookup(u), lookup(v))
            .expect("subgraph of a simple graph");
    }
    SubgraphCopy {
        graph: local,
        orig_vertex,
        orig_edge: ids,
    }
}

/// Connected components of the subgraph spanned by `edge_ids`, each returned
/// as a sorted list of edge ids, ordered by the smallest vertex they contain.
pub fn edge_components(g: &Graph, edge_ids: &[usize]) -> Vec<Vec<usize>> {
    let set: BTreeSet<usize> = edge_ids.iter().copied().collect();
    let mut edge_seen = vec![false; g.edge_count()];
    let mut vertex_seen = vec![false; g.vertex_count()];
    let mut components = Vec::new();
    for v0 in g.vertices() {
        if vertex_seen[v0] || !g.neighbors(v0).iter().any(|&(_, e)| set.contains(&e)) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![v0];
        vertex_seen[v0] = true;
        while let Some(v) = stack.pop() {
            for &(w, e) in g.neighbors(v) {
                if !set.contains(&e) {
                    continue;
                }
                if !edge_seen[e] {
                    edge_seen[e] = true;
                    comp.push(e);
                }
                if !vertex_seen[w] {
                    vertex_seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn paw() -> Graph {
        // triangle 0,1,2 plus pendant 0-3
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::Loop(0)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(GraphError::ParallelEdge(1, 0)));
    }

    #[test]
    fn shape_predicates() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_path() && p4.is_tree() && !p4.is_star());
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(c3.is_cycle() && !c3.is_tree());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_star());
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p3.is_star(), "P3 has exactly one interior vertex");
        assert!(paw().is_connected());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = paw();
        let text = g.to_edge_list();
        let h = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
        let commented = "# paw\n0 1\n1 2 # chord\n\n2 0\n0 3\n";
        assert_eq!(Graph::parse_edge_list(commented).unwrap(), g);
        assert_eq!(Graph::parse_edge_list("# nothing\n"), Err(GraphError::Empty));
    }

    #[test]
    fn subgraph_copy_preserves_order() {
        let g = paw();
        let sub = subgraph_from_edges(&g, &[1, 2]); // edges 1-2, 2-0
        assert_eq!(sub.orig_vertex, vec![0, 1, 2]);
        assert_eq!(sub.orig_edge, vec![1, 2]);
        assert_eq!(sub.graph.edge_count(), 2);
        sub.graph.check_invariants().unwrap();
    }

    #[test]
    fn components_ordered_by_smallest_vertex() {
        // two disjoint edges 2-3 and 0-1
        let g = Graph::from_edges(4, &[(2, 3), (0, 1)]).unwrap();
        let comps = edge_components(&g, &[0, 1]);
        assert_eq!(comps, vec![vec![1], vec![0]]);
    }
}
