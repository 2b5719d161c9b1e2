//! Labelers beyond the arithmetic engine: the support-saturated
//! construction, the leafy-extension combinator, and a backtracking
//! search that doubles as a test oracle.

use crate::engine::{Labeling, Op};
use crate::graph::Graph;
use crate::rational::Rat;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Default edge bound for the exhaustive search on arbitrary graphs.
pub const DEFAULT_SEARCH_BOUND: usize = 10;

#[derive(Debug, Error)]
pub enum UniversalError {
    #[error("no labeling exists for this graph and label set")]
    NotFound,
    #[error("{m} edges exceeds the exhaustive bound {bound}; call search_label_bounded with a larger bound to run the backtracking search anyway")]
    TooLarge { m: usize, bound: usize },
    #[error("invalid labels: {0}")]
    BadLabels(String),
    #[error("vertex {0} is interior but not a support vertex")]
    InteriorNotSupport(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid weights: {0}")]
    BadWeights(String),
    #[error("inner labeler failed: {0}")]
    Inner(String),
}

/// A total vertex weight added into every vertex value: positive for sum
/// mode, at least 1 for product mode.
#[derive(Debug, Clone)]
pub struct WeightFunction {
    pub mode: Op,
    pub weights: Vec<Rat>,
}

impl WeightFunction {
    /// The neutral weight function (all-zero sums, all-one products).
    pub fn identity(mode: Op, n: usize) -> Self {
        WeightFunction {
            mode,
            weights: vec![mode.identity(); n],
        }
    }

    pub fn check(&self, g: &Graph) -> Result<(), UniversalError> {
        if self.weights.len() != g.vertex_count() {
            return Err(UniversalError::BadWeights(format!(
                "{} weights for {} vertices",
                self.weights.len(),
                g.vertex_count()
            )));
        }
        for (v, w) in self.weights.iter().enumerate() {
            // the identity (zero sum, unit product) stands for "no weight"
            // and is always admissible
            let ok = match self.mode {
                Op::Sum => *w >= self.mode.identity(),
                Op::Product => *w >= Rat::one(),
            };
            if !ok {
                return Err(UniversalError::BadWeights(format!(
                    "weight of vertex {v} out of range"
                )));
            }
        }
        Ok(())
    }
}

fn check_labels(labels: &[Rat], m: usize, op: Op) -> Result<(), UniversalError> {
    if labels.len() != m {
        return Err(UniversalError::BadLabels(format!(
            "{} labels for {m} edges",
            labels.len()
        )));
    }
    for pair in labels.windows(2) {
        if pair[0] >= pair[1] {
            return Err(UniversalError::BadLabels(
                "labels must be sorted and distinct".into(),
            ));
        }
    }
    if op == Op::Product {
        if let Some(l) = labels.first() {
            if *l < Rat::one() {
                return Err(UniversalError::BadLabels(
                    "product labels must be at least 1".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Backtracking search for a bijection `E -> labels` with injective
/// (optionally weighted) vertex values. Deterministic: edges in id order,
/// candidate labels ascending, first solution returned. The search is
/// complete, so `NotFound` certifies non-existence.
pub fn search_label(
    g: &Graph,
    labels: &[Rat],
    op: Op,
    weights: Option<&WeightFunction>,
) -> Result<Labeling, UniversalError> {
    let bound = if g.is_path() || g.is_cycle() {
        usize::MAX
    } else {
        DEFAULT_SEARCH_BOUND
    };
    search_label_bounded(g, labels, op, weights, bound)
}

/// [`search_label`] with an explicit edge bound.
pub fn search_label_bounded(
    g: &Graph,
    labels: &[Rat],
    op: Op,
    weights: Option<&WeightFunction>,
    bound: usize,
) -> Result<Labeling, UniversalError> {
    let m = g.edge_count();
    if m > bound {
        return Err(UniversalError::TooLarge { m, bound });
    }
    check_labels(labels, m, op)?;
    if let Some(w) = weights {
        if w.mode != op {
            return Err(UniversalError::BadWeights(
                "weight mode differs from the requested operation".into(),
            ));
        }
        w.check(g)?;
    }

    let base: Vec<Rat> = match weights {
        Some(w) => w.weights.clone(),
        None => vec![op.identity(); g.vertex_count()],
    };
    let mut state = Search {
        g,
        op,
        labels,
        used: vec![false; m],
        choice: vec![usize::MAX; m],
        partial: base,
        remaining: g.vertices().map(|v| g.degree(v)).collect(),
        finished_values: BTreeSet::new(),
    };
    if state.go(0) {
        let final_labels = state
            .choice
            .iter()
            .map(|&i| labels[i].clone())
            .collect();
        Ok(Labeling {
            op,
            labels: final_labels,
        })
    } else {
        Err(UniversalError::NotFound)
    }
}

struct Search<'a> {
    g: &'a Graph,
    op: Op,
    labels: &'a [Rat],
    used: Vec<bool>,
    choice: Vec<usize>,
    partial: Vec<Rat>,
    remaining: Vec<usize>,
    finished_values: BTreeSet<Rat>,
}

impl Search<'_> {
    fn go(&mut self, e: usize) -> bool {
        if e == self.g.edge_count() {
            return true;
        }
        let (a, b) = self.g.endpoints(e);
        for i in 0..self.labels.len() {
            if self.used[i] {
                continue;
            }
            // apply
            self.used[i] = true;
            self.choice[e] = i;
            let old_a = self.partial[a].clone();
            let old_b = self.partial[b].clone();
            self.partial[a] = self.op.apply(&old_a, &self.labels[i]);
            self.partial[b] = self.op.apply(&old_b, &self.labels[i]);
            self.remaining[a] -= 1;
            self.remaining[b] -= 1;

            // prune: any vertex saturated by this edge must take a fresh value
            let mut ok = true;
            let mut inserted: Vec<Rat> = Vec::new();
            for v in [a, b] {
                if self.remaining[v] == 0 {
                    let val = self.partial[v].clone();
                    if self.finished_values.contains(&val) || inserted.contains(&val) {
                        ok = false;
                        break;
                    }
                    inserted.push(val);
                }
            }
            if ok {
                for val in &inserted {
                    self.finished_values.insert(val.clone());
                }
                if self.go(e + 1) {
                    return true;
                }
                for val in &inserted {
                    self.finished_values.remove(val);
                }
            }

            // undo
            self.remaining[a] += 1;
            self.remaining[b] += 1;
            self.partial[a] = old_a;
            self.partial[b] = old_b;
            self.choice[e] = usize::MAX;
            self.used[i] = false;
        }
        false
    }
}

/// Labels a connected graph in which every interior vertex is a support
/// vertex, for any sorted distinct label set in the op's range.
///
/// One pendant edge per interior vertex (smallest edge id) is reserved;
/// the other pendant edges take the middle labels ascending by edge id,
/// non-pendant edges take the top labels ascending by edge id, and the
/// reserved edges take the smallest labels in ascending order of their
/// vertex's partial value.
pub fn label_support_saturated(
    g: &Graph,
    labels: &[Rat],
    op: Op,
) -> Result<Labeling, UniversalError> {
    let m = g.edge_count();
    if !g.is_connected() || m < 3 {
        return Err(UniversalError::Precondition(
            "graph must be connected with at least 3 edges".into(),
        ));
    }
    check_labels(labels, m, op)?;
    if op == Op::Sum {
        if let Some(l) = labels.first() {
            if *l <= op.identity() {
                return Err(UniversalError::BadLabels(
                    "sum labels must be positive".into(),
                ));
            }
        }
    }
    let interior: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 1).collect();
    for &v in &interior {
        if g.pendant_edges_at(v).is_empty() {
            return Err(UniversalError::InteriorNotSupport(v));
        }
    }

    let reserved: Vec<usize> = interior
        .iter()
        .map(|&v| g.pendant_edges_at(v)[0])
        .collect();
    let reserved_set: BTreeSet<usize> = reserved.iter().copied().collect();
    let n_s = interior.len();
    let mut assignment: Vec<Option<Rat>> = vec![None; m];
    let mut next = n_s; // positions n_s.. hold the non-reserved pendant labels
    for e in 0..m {
        if g.is_pendant_edge(e) && !reserved_set.contains(&e) {
            assignment[e] = Some(labels[next].clone());
            next += 1;
        }
    }
    let n_ell = next; // number of pendant edges
    for e in 0..m {
        if !g.is_pendant_edge(e) {
            assignment[e] = Some(labels[next].clone());
            next += 1;
        }
    }
    debug_assert_eq!(next, m);

    // partial value at each interior vertex over the labels placed so far
    let partial = |v: usize| {
        g.neighbors(v).iter().fold(op.identity(), |acc, &(_, e)| {
            match &assignment[e] {
                Some(l) => op.apply(&acc, l),
                None => acc,
            }
        })
    };
    let mut order: Vec<usize> = (0..n_s).collect();
    let partials: Vec<Rat> = interior.iter().map(|&v| partial(v)).collect();
    order.sort_by(|&i, &j| partials[i].cmp(&partials[j]).then(interior[i].cmp(&interior[j])));
    for (rank, &i) in order.iter().enumerate() {
        assignment[reserved[i]] = Some(labels[rank].clone());
    }
    let _ = n_ell;

    let final_labels = assignment
        .into_iter()
        .map(|slot| slot.expect("all edges assigned"))
        .collect();
    let labeling = Labeling {
        op,
        labels: final_labels,
    };
    let report = crate::verify::verify(g, &labeling, Some(labels));
    if !report.ok() {
        return Err(UniversalError::Inner(format!(
            "support-saturated construction failed verification: {}",
            report.summary()
        )));
    }
    Ok(labeling)
}

/// A weighted labeler for [`extend_leafy`]: given a graph, sorted labels,
/// an operation and a weight function, produce a labeling whose weighted
/// vertex values are injective.
pub type WeightedLabeler<'a> =
    &'a dyn Fn(&Graph, &[Rat], Op, &WeightFunction) -> Result<Labeling, UniversalError>;

/// Labels a leafy graph `g_tilde` built over `core` (core edges and
/// vertices form an id prefix of `g_tilde`). The added pendant forest H
/// takes the `h` smallest labels; the core is then labeled by `inner`
/// under the weight function that charges each core vertex with its
/// incident H labels.
///
/// Any bijection from H to the `h` smallest labels keeps the leaf values
/// separated below the core values, but the induced weight function
/// changes with the distribution of those labels among the attachment
/// vertices, and a search-based `inner` may succeed for one distribution
/// and not another. The distributions are therefore tried in turn
/// (first: each attachment vertex in id order takes the smallest labels
/// still free, matching ascending edge-id assignment for leafy-built
/// graphs) until `inner` succeeds.
pub fn extend_leafy(
    g_tilde: &Graph,
    core: &Graph,
    inner: WeightedLabeler,
    labels: &[Rat],
    op: Op,
) -> Result<Labeling, UniversalError> {
    let m_core = core.edge_count();
    let m = g_tilde.edge_count();
    check_labels(labels, m, op)?;
    if g_tilde.vertex_count() < core.vertex_count() || m < m_core {
        return Err(UniversalError::Precondition(
            "core is larger than the leafy graph".into(),
        ));
    }
    for e in 0..m_core {
        if g_tilde.endpoints(e) != core.endpoints(e) {
            return Err(UniversalError::Precondition(format!(
                "edge {e} of the leafy graph differs from the core"
            )));
        }
    }
    for e in m_core..m {
        let (u, v) = g_tilde.endpoints(e);
        let (att, leaf) = if v >= core.vertex_count() { (u, v) } else { (v, u) };
        if leaf < core.vertex_count()
            || g_tilde.degree(leaf) != 1
            || att >= core.vertex_count()
            || core.degree(att) <= 1
        {
            return Err(UniversalError::Precondition(format!(
                "edge {e} is not a pendant edge added at an interior core vertex"
            )));
        }
    }

    let h = m - m_core;
    // group the added pendant edges by attachment vertex; only the set of
    // labels charged to each vertex changes the inner problem
    let mut grouped: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in m_core..m {
        let (u, v) = g_tilde.endpoints(e);
        let att = if v >= core.vertex_count() { u } else { v };
        grouped.entry(att).or_default().push(e);
    }
    let groups: Vec<(usize, Vec<usize>)> = grouped.into_iter().collect();
    let sizes: Vec<usize> = groups.iter().map(|(_, es)| es.len()).collect();
    let pool: Vec<usize> = (0..h).collect();
    let mut distributions = Vec::new();
    let mut cur = Vec::new();
    collect_distributions(&sizes, &pool, MAX_DISTRIBUTIONS, &mut cur, &mut distributions);

    let mut last_err = UniversalError::NotFound;
    for dist in distributions {
        let mut weights = WeightFunction::identity(op, core.vertex_count());
        let mut assignment: Vec<Option<Rat>> = vec![None; m];
        for ((att, edges), label_ids) in groups.iter().zip(&dist) {
            for (&e, &i) in edges.iter().zip(label_ids) {
                let label = labels[i].clone();
                weights.weights[*att] = op.apply(&weights.weights[*att], &label);
                assignment[e] = Some(label);
            }
        }
        let core_labeling = match inner(core, &labels[h..], op, &weights) {
            Ok(l) => l,
            Err(e) => {
                last_err = e;
                continue;
            }
        };
        for (e, l) in core_labeling.labels.into_iter().enumerate() {
            assignment[e] = Some(l);
        }
        let labeling = Labeling {
            op,
            labels: assignment
                .into_iter()
                .map(|s| s.expect("total"))
                .collect(),
        };
        let report = crate::verify::verify(g_tilde, &labeling, Some(labels));
        if !report.ok() {
            last_err = UniversalError::Inner(format!(
                "leafy extension failed verification: {}",
                report.summary()
            ));
            continue;
        }
        return Ok(labeling);
    }
    Err(last_err)
}

/// How many pendant-label distributions [`extend_leafy`] will try before
/// giving up.
const MAX_DISTRIBUTIONS: usize = 10_000;

/// All ways to split `pool` into ordered groups of the given sizes (up to
/// `cap` of them), each group's items ascending. The first emitted split
/// gives the first group the smallest items still free, and so on.
fn collect_distributions(
    sizes: &[usize],
    pool: &[usize],
    cap: usize,
    cur: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if out.len() >= cap {
        return;
    }
    match sizes.split_first() {
        None => out.push(cur.clone()),
        Some((&k, rest)) => {
            for combo in combinations(pool, k) {
                let remaining: Vec<usize> =
                    pool.iter().copied().filter(|x| !combo.contains(x)).collect();
                cur.push(combo);
                collect_distributions(rest, &remaining, cap, cur, out);
                cur.pop();
                if out.len() >= cap {
                    return;
                }
            }
        }
    }
}

/// Ascending k-subsets of `pool` in lexicographic order.
fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in pool.iter().enumerate() {
        if pool.len() - i < k {
            break;
        }
        for mut rest in combinations(&pool[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}
