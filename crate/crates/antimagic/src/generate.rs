//! Graph family generators for corpus building and sweeps.
//!
//! All random generators are deterministic functions of their seed
//! (ChaCha8). Generated graphs are checked against the family's defining
//! property before being returned.

use crate::classify::classify;
use crate::construct::{leafy, subdivide};
use crate::graph::Graph;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("degenerate size: {0}")]
    Degenerate(String),
    #[error("leaf count key {0} is not a spine/cycle vertex")]
    BadKey(usize),
}

/// Path with `m` edges on vertices `0..=m`.
pub fn path(m: usize) -> Result<Graph, GenerateError> {
    if m == 0 {
        return Err(GenerateError::Degenerate("path needs >= 1 edge".into()));
    }
    let mut g = Graph::new(m + 1);
    for i in 0..m {
        g.add_edge(i, i + 1).expect("path edges are simple");
    }
    Ok(g)
}

/// Cycle with `m` edges on vertices `0..m`.
pub fn cycle(m: usize) -> Result<Graph, GenerateError> {
    if m < 3 {
        return Err(GenerateError::Degenerate("cycle needs >= 3 edges".into()));
    }
    let mut g = Graph::new(m);
    for i in 0..m {
        g.add_edge(i, (i + 1) % m).expect("cycle edges are simple");
    }
    Ok(g)
}

/// Star `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph, GenerateError> {
    if k < 2 {
        return Err(GenerateError::Degenerate("star needs >= 2 leaves".into()));
    }
    let mut g = Graph::new(k + 1);
    for i in 1..=k {
        g.add_edge(0, i).expect("star edges are simple");
    }
    Ok(g)
}

/// Caterpillar: a spine path of `spine_edges` edges (spine vertices
/// `0..=spine_edges`) plus `leaf_counts[v]` pendant leaves at spine vertex
/// `v`. Size is `spine_edges + sum(counts)`.
pub fn caterpillar(
    spine_edges: usize,
    leaf_counts: &BTreeMap<usize, usize>,
) -> Result<Graph, GenerateError> {
    let spine = path(spine_edges)?;
    if let Some(&k) = leaf_counts.keys().find(|&&v| v > spine_edges) {
        return Err(GenerateError::BadKey(k));
    }
    attach_leaves(spine, leaf_counts)
}

/// Cycle of `cycle_edges` edges plus pendant leaves per cycle vertex.
pub fn leafy_cycle(
    cycle_edges: usize,
    leaf_counts: &BTreeMap<usize, usize>,
) -> Result<Graph, GenerateError> {
    let base = cycle(cycle_edges)?;
    if let Some(&k) = leaf_counts.keys().find(|&&v| v >= cycle_edges) {
        return Err(GenerateError::BadKey(k));
    }
    attach_leaves(base, leaf_counts)
}

fn attach_leaves(
    mut g: Graph,
    leaf_counts: &BTreeMap<usize, usize>,
) -> Result<Graph, GenerateError> {
    for (&v, &count) in leaf_counts {
        for _ in 0..count {
            let leaf = g.add_vertex();
            g.add_edge(v, leaf).expect("fresh pendant edge");
        }
    }
    Ok(g)
}

/// Seed-deterministic connected graph on roughly `n` base vertices in which
/// every vertex of degree at least three is a support vertex: a random
/// spanning tree, a few extra edges, then a pendant attached to every bald
/// degree->=3 vertex.
pub fn random_v3_subset_vs(n: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n < 2 {
        return Err(GenerateError::Degenerate("need >= 2 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_tree(n, &mut rng);
    // sprinkle extra edges to create cycles (kept sparse)
    let extras = if n >= 4 { rng.gen_range(0..=n / 3) } else { 0 };
    for _ in 0..extras {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            let _ = g.add_edge(u, v); // ignore duplicates
        }
    }
    support_bald_deg3(&mut g);
    debug_assert!(classify(&g).v3_subset_vs());
    Ok(g)
}

/// Seed-deterministic connected graph in which every interior vertex is a
/// support vertex (the Proposition-9 class).
pub fn random_interior_support(n: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n < 2 {
        return Err(GenerateError::Degenerate("need >= 2 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut g = random_tree(n, &mut rng);
    let extras = if n >= 4 { rng.gen_range(0..=n / 3) } else { 0 };
    for _ in 0..extras {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            let _ = g.add_edge(u, v);
        }
    }
    // attach a pendant to every interior vertex lacking one
    loop {
        let classes = classify(&g);
        let bald: Vec<usize> = classes
            .interior
            .difference(&classes.supports)
            .copied()
            .collect();
        if bald.is_empty() {
            break;
        }
        for v in bald {
            let leaf = g.add_vertex();
            g.add_edge(v, leaf).expect("fresh pendant edge");
        }
    }
    debug_assert!(classify(&g).interior_all_supports());
    Ok(g)
}

/// Random caterpillar of size exactly `m`, with at least one pendant at an
/// inner spine vertex so that `V_3` is non-empty.
pub fn random_caterpillar(m: usize, seed: u64) -> Result<Graph, GenerateError> {
    if m < 4 {
        return Err(GenerateError::Degenerate("need size >= 4".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spine_edges = rng.gen_range(2..=m - 2).min(m - 2);
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    let inner = rng.gen_range(1..spine_edges.max(2));
    *counts.entry(inner.min(spine_edges - 1).max(1)).or_insert(0) += 1;
    let mut remaining = m - spine_edges - 1;
    while remaining > 0 {
        let v = rng.gen_range(0..=spine_edges);
        *counts.entry(v).or_insert(0) += 1;
        remaining -= 1;
    }
    caterpillar(spine_edges, &counts)
}

/// Random leafy cycle of size exactly `m` (cycle length >= 3).
pub fn random_leafy_cycle(m: usize, seed: u64) -> Result<Graph, GenerateError> {
    if m < 4 {
        return Err(GenerateError::Degenerate("need size >= 4".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cycle_edges = rng.gen_range(3..=m - 1);
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for _ in 0..m - cycle_edges {
        let v = rng.gen_range(0..cycle_edges);
        *counts.entry(v).or_insert(0) += 1;
    }
    leafy_cycle(cycle_edges, &counts)
}

/// Random subdivided leafy graph: a small V_3-subset-of-V_s base, extra
/// pendants on interior vertices, then subdivision of non-pendant edges
/// only. Pendant edges of the leafy graph are never subdivided.
pub fn random_subdivided_leafy(target_m: usize, seed: u64) -> Result<Graph, GenerateError> {
    if target_m < 6 {
        return Err(GenerateError::Degenerate("need size >= 6".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base_n = rng.gen_range(4..=8);
    let base = random_v3_subset_vs(base_n, rng.gen())?;
    let classes = classify(&base);
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in classes.interior.iter() {
        if rng.gen_bool(0.4) {
            *counts.entry(v).or_insert(0) += rng.gen_range(1..=2);
        }
    }
    if counts.is_empty() {
        // keep V_3 non-empty so the four-step engine applies
        let v = *classes.interior.iter().next().expect("n >= 4 tree has interior");
        counts.insert(v, 1);
    }
    let tilde = leafy(&base, &counts).map_err(|e| GenerateError::Degenerate(e.to_string()))?;
    let mut lengths: BTreeMap<usize, usize> = BTreeMap::new();
    let mut budget = target_m.saturating_sub(tilde.edge_count());
    for e in 0..tilde.edge_count() {
        if tilde.is_pendant_edge(e) || budget == 0 {
            continue;
        }
        let extra = rng.gen_range(0..=budget.min(3));
        if extra > 0 {
            lengths.insert(e, 1 + extra);
            budget -= extra;
        }
    }
    let out = subdivide(&tilde, &lengths).map_err(|e| GenerateError::Degenerate(e.to_string()))?;
    debug_assert!(classify(&out).v3_subset_vs());
    Ok(out)
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        g.add_edge(parent, v).expect("tree edge");
    }
    g
}

/// Attaches a pendant leaf to every degree->=3 vertex without one.
fn support_bald_deg3(g: &mut Graph) {
    loop {
        let classes = classify(g);
        let bald: Vec<usize> = classes
            .deg3
            .difference(&classes.supports)
            .copied()
            .collect();
        if bald.is_empty() {
            return;
        }
        for v in bald {
            let leaf = g.add_vertex();
            g.add_edge(v, leaf).expect("fresh pendant edge");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caterpillar_size() {
        let g = caterpillar(2, &[(1, 1)].into_iter().collect()).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(classify(&g).v3_subset_vs());
        let g = caterpillar(2, &[(1, 2)].into_iter().collect()).unwrap();
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn leafy_cycle_paw() {
        let g = leafy_cycle(3, &[(0, 1)].into_iter().collect()).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(0), 3);
        assert!(classify(&g).v3_subset_vs());
    }

    #[test]
    fn random_families_satisfy_their_property() {
        for seed in 0..20 {
            let g = random_v3_subset_vs(7, seed).unwrap();
            assert!(g.is_connected());
            assert!(classify(&g).v3_subset_vs(), "seed {seed}");

            let h = random_interior_support(7, seed).unwrap();
            assert!(h.is_connected());
            assert!(classify(&h).interior_all_supports(), "seed {seed}");

            let c = random_caterpillar(20, seed).unwrap();
            assert_eq!(c.edge_count(), 20);
            assert!(classify(&c).v3_subset_vs());
            assert!(!classify(&c).deg3.is_empty(), "seed {seed} produced a path");

            let lc = random_leafy_cycle(20, seed).unwrap();
            assert_eq!(lc.edge_count(), 20);
            assert!(classify(&lc).v3_subset_vs());
        }
    }

    #[test]
    fn determinism() {
        assert_eq!(
            random_v3_subset_vs(9, 42).unwrap(),
            random_v3_subset_vs(9, 42).unwrap()
        );
        assert_ne!(
            random_caterpillar(30, 1).unwrap(),
            random_caterpillar(30, 2).unwrap()
        );
    }

    #[test]
    fn degenerate_sizes_error() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(star(1).is_err());
        assert!(caterpillar(1, &[(5, 1)].into_iter().collect()).is_err());
    }
}
