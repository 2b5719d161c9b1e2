//! Structural properties checked across whole graph families: edge
//! partitions, path decompositions, pruning, and plan assembly.

use antimagic::classify::classify;
use antimagic::decompose::{build_plan, forest_even_partition, gpd};
use antimagic::graph::Graph;
use std::collections::{BTreeSet, HashSet};

/// Labeled tree from a Pruefer sequence; every labeled tree on n >= 2
/// vertices arises from exactly one sequence.
fn prufer_to_tree(n: usize, seq: &[usize]) -> Graph {
    assert_eq!(seq.len(), n.saturating_sub(2));
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Graph::new(n);
    let mut used = vec![false; n];
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1 && !used[u]).unwrap();
        used[leaf] = true;
        g.add_edge(leaf, v).unwrap();
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1 && !used[u]).collect();
    assert_eq!(rest.len(), 2);
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

fn all_prufer_trees(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::new(1)];
    }
    if n == 2 {
        return vec![prufer_to_tree(2, &[])];
    }
    let len = n - 2;
    let mut out = Vec::new();
    let mut seq = vec![0usize; len];
    loop {
        out.push(prufer_to_tree(n, &seq));
        let mut i = 0;
        while i < len {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
    }
    out
}

#[test]
fn partition_invariants_exhaustive_small() {
    for g in antimagic::enumerate::enumerate_connected(6) {
        let p = forest_even_partition(&g);
        p.check(&g).unwrap_or_else(|e| panic!("{e} on {:?}", g.to_edge_list()));
    }
}

#[test]
fn partition_invariants_random_larger() {
    for n in [7usize, 8] {
        for seed in 0..40 {
            let g = antimagic::generate::random_v3_subset_vs(n, seed).unwrap();
            forest_even_partition(&g).check(&g).unwrap();
        }
    }
}

#[test]
fn gpd_valid_on_all_small_trees_all_centers() {
    for n in 2..=7usize {
        for tree in all_prufer_trees(n) {
            for center in 0..n {
                let d = gpd(&tree, center).unwrap();
                d.check(&tree)
                    .unwrap_or_else(|e| panic!("{e}: n={n} center={center}"));
            }
        }
    }
}

#[test]
fn gpd_valid_on_random_trees_to_ten_vertices() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let n = rng.gen_range(8..=10);
        // random tree: attach each vertex to an earlier one
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(rng.gen_range(0..v), v).unwrap();
        }
        let center = rng.gen_range(0..n);
        gpd(&g, center).unwrap().check(&g).unwrap();
    }
}

#[test]
fn prune_of_leafy_keeps_interior() {
    use std::collections::BTreeMap;
    for seed in 0..30 {
        let base = antimagic::generate::random_interior_support(7, seed).unwrap();
        let interior: Vec<usize> = base
            .vertices()
            .filter(|&v| base.degree(v) > 1)
            .collect();
        let counts: BTreeMap<usize, usize> =
            interior.iter().map(|&v| (v, 1 + seed as usize % 2)).collect();
        let big = antimagic::construct::leafy(&base, &counts).unwrap();
        let pruned = antimagic::construct::prune(&big, &HashSet::new()).unwrap();
        // every interior vertex of the leafy graph survives pruning
        for v in big.vertices().filter(|&v| big.degree(v) > 1) {
            assert!(pruned.orig_vertex.contains(&v));
        }
    }
}

#[test]
fn classify_is_permutation_invariant() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for seed in 0..20 {
        let g = antimagic::generate::random_v3_subset_vs(7, seed).unwrap();
        let classes = classify(&g);
        let mut perm: Vec<usize> = g.vertices().collect();
        perm.shuffle(&mut rng);
        let h = g.permuted(&perm);
        let hclasses = classify(&h);
        let map = |s: &BTreeSet<usize>| -> BTreeSet<usize> {
            s.iter().map(|&v| perm[v]).collect()
        };
        assert_eq!(map(&classes.interior), hclasses.interior);
        assert_eq!(map(&classes.leaves), hclasses.leaves);
        assert_eq!(map(&classes.supports), hclasses.supports);
        assert_eq!(map(&classes.deg3), hclasses.deg3);
        assert_eq!(map(&classes.supports_prime), hclasses.supports_prime);
        assert_eq!(map(&classes.supports_prime_3), hclasses.supports_prime_3);
    }
}

/// The plan's edge accounting: step-1 edges, step-2 edges and trail edges
/// are disjoint; path trails plus step-2 edges cover the forest part
/// exactly and circuits cover the even part exactly.
#[test]
fn plan_edge_accounting() {
    let mut checked = 0;
    for g in antimagic::enumerate::enumerate_connected(6) {
        if g.edge_count() < 3 || g.is_star() || g.is_path() || g.is_cycle() {
            continue;
        }
        let classes = classify(&g);
        if !classes.deg3.is_subset(&classes.supports) || classes.deg3.is_empty() {
            continue;
        }
        let plan = build_plan(&g).unwrap();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut path_edges: BTreeSet<usize> = BTreeSet::new();
        let mut circuit_edges: BTreeSet<usize> = BTreeSet::new();
        for &e in plan.step1_edges.iter().chain(plan.step2_edges.iter()) {
            assert!(seen.insert(e), "edge {e} scheduled twice");
        }
        for t in &plan.sequence.trails {
            for &e in &t.edges {
                assert!(seen.insert(e), "edge {e} scheduled twice");
                match t.kind {
                    antimagic::decompose::TrailKind::Path => path_edges.insert(e),
                    antimagic::decompose::TrailKind::Circuit => circuit_edges.insert(e),
                };
            }
        }
        let step2: BTreeSet<usize> = plan.step2_edges.iter().copied().collect();
        let forest_cover: BTreeSet<usize> = path_edges.union(&step2).copied().collect();
        assert_eq!(forest_cover, plan.e1, "forest edges miscovered");
        assert_eq!(circuit_edges, plan.e2, "even edges miscovered");
        // everything not scheduled must be a pendant edge (step 4 material)
        for e in 0..g.edge_count() {
            if !seen.contains(&e) {
                assert!(g.is_pendant_edge(e), "unscheduled non-pendant edge {e}");
            }
        }
        checked += 1;
    }
    assert!(checked > 100, "only {checked} graphs exercised");
}

/// The mb formula: one extra big label exactly when the input is a tree
/// whose first GPD path is odd.
#[test]
fn mb_formula_on_trees() {
    for n in 4..=7usize {
        for tree in all_prufer_trees(n) {
            let classes = classify(&tree);
            if tree.edge_count() < 3
                || tree.is_star()
                || tree.is_path()
                || !classes.deg3.is_subset(&classes.supports)
                || classes.deg3.is_empty()
            {
                continue;
            }
            let plan = build_plan(&tree).unwrap();
            assert!(plan.sequence.is_tree);
            let first = &plan.sequence.trails[0];
            let expect = plan.sequence.m0 + usize::from(first.edges.len() % 2 == 1);
            assert_eq!(plan.sequence.mb, expect);
        }
    }
}
