//! Exhaustive enumeration of small connected graphs.
//!
//! `enumerate_connected` yields every connected labeled simple graph up to
//! the requested order (one representative per labeled graph). Labeled
//! counts per order are frozen in tests: 1, 1, 4, 38, 728, 26704, 1866256
//! for n = 1..7. Isomorph deduplication is available separately through
//! `canonical_form` / `dedup_isomorphic`; the counts up to isomorphism are
//! 1, 1, 2, 6, 21, 112, 853.

use crate::graph::Graph;

/// Maximum order accepted (desk scale: the n=8 stream alone has 2^28 masks).
pub const MAX_ENUM_VERTICES: usize = 8;

/// Streams all connected labeled simple graphs with `1..=max_vertices`
/// vertices, in (order, edge-mask) order.
pub fn enumerate_connected(max_vertices: usize) -> impl Iterator<Item = Graph> {
    assert!(
        (1..=MAX_ENUM_VERTICES).contains(&max_vertices),
        "enumeration is desk-scale only (1..={MAX_ENUM_VERTICES})"
    );
    (1..=max_vertices).flat_map(connected_of_order)
}

/// All connected labeled graphs on exactly `n` vertices.
pub fn connected_of_order(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1u64 << pairs.len();
    (0..total).filter_map(move |mask| {
        if !mask_connected(n, &pairs, mask) {
            return None;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Some(Graph::from_edges(n, &edges).expect("mask graphs are simple"))
    })
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    if n == 1 {
        return mask == 0;
    }
    let mut adj_bits = vec![0u16; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj_bits[u] |= 1 << v;
            adj_bits[v] |= 1 << u;
        }
    }
    let mut reached: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next: u16 = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj_bits[v];
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached.count_ones() as usize == n
}

/// Canonical form of a graph: the lexicographically smallest upper-triangle
/// adjacency bitstring over vertex permutations. Permutations are pruned to
/// those mapping the degree multiset onto itself (degree-sorted classes),
/// which is exact because degree sequences are isomorphism invariants.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    assert!(n <= MAX_ENUM_VERTICES, "canonical form is desk-scale only");
    let mut adj = vec![0u16; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    // group vertices by degree; permutations permute within groups of the
    // degree-sorted order
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match groups.last() {
            Some(last) if g.degree(last[0]) == g.degree(v) => {
                groups.last_mut().unwrap().push(v)
            }
            _ => groups.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u64>> = None;
    let mut assignment = vec![0usize; n]; // old id -> new position
    permute_groups(&groups, 0, &mut assignment, &mut |perm| {
        let key = upper_triangle_key(n, &adj, perm);
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
    });
    best.expect("at least the identity permutation")
}

fn permute_groups(
    groups: &[Vec<usize>],
    offset: usize,
    assignment: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    fn heap(
        items: &mut Vec<usize>,
        k: usize,
        groups: &[Vec<usize>],
        gi: usize,
        offset: usize,
        assignment: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if k == items.len() {
            for (slot, &v) in items.iter().enumerate() {
                assignment[v] = offset + slot;
            }
            descend(groups, gi + 1, offset + items.len(), assignment, visit);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            heap(items, k + 1, groups, gi, offset, assignment, visit);
            items.swap(k, i);
        }
    }
    fn descend(
        groups: &[Vec<usize>],
        gi: usize,
        offset: usize,
        assignment: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if gi == groups.len() {
            visit(assignment);
            return;
        }
        let mut items = groups[gi].clone();
        heap(&mut items, 0, groups, gi, offset, assignment, visit);
    }
    let _ = offset;
    descend(groups, 0, 0, assignment, visit);
}

fn upper_triangle_key(n: usize, adj: &[u16], perm: &[usize]) -> Vec<u64> {
    // inverse: position -> old id
    let mut inv = vec![0usize; n];
    for (old, &pos) in perm.iter().enumerate() {
        inv[pos] = old;
    }
    let mut bits: Vec<u64> = Vec::with_capacity(1);
    let mut word = 0u64;
    let mut count = 0u32;
    for i in 0..n {
        for j in i + 1..n {
            let bit = (adj[inv[i]] >> inv[j]) & 1;
            word = word << 1 | bit as u64;
            count += 1;
            if count == 64 {
                bits.push(word);
                word = 0;
                count = 0;
            }
        }
    }
    if count > 0 {
        bits.push(word << (64 - count));
    }
    bits
}

/// Keeps one representative per isomorphism class (first occurrence wins).
pub fn dedup_isomorphic(graphs: impl Iterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        let key = (g.vertex_count(), canonical_form(&g));
        if seen.insert(key) {
            out.push(g);
        }
    }
    out
}
