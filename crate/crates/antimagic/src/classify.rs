//! Vertex classification: leaves, interior, support and near-pendant sets.

use crate::graph::Graph;
use std::collections::BTreeSet;

/// Degree-derived vertex classes of a graph.
///
/// `supports_prime` (written V_s' elsewhere) is the set of support vertices
/// with at most one non-leaf neighbor. The inclusive reading is used: a
/// vertex all of whose neighbors are leaves (a star center) qualifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClasses {
    pub interior: BTreeSet<usize>,
    pub leaves: BTreeSet<usize>,
    pub supports: BTreeSet<usize>,
    pub deg3: BTreeSet<usize>,
    pub supports_prime: BTreeSet<usize>,
    pub supports_prime_3: BTreeSet<usize>,
}

pub fn classify(g: &Graph) -> VertexClasses {
    let mut c = VertexClasses {
        interior: BTreeSet::new(),
        leaves: BTreeSet::new(),
        supports: BTreeSet::new(),
        deg3: BTreeSet::new(),
        supports_prime: BTreeSet::new(),
        supports_prime_3: BTreeSet::new(),
    };
    for v in g.vertices() {
        let deg = g.degree(v);
        if deg == 1 {
            c.leaves.insert(v);
        } else if deg > 1 {
            c.interior.insert(v);
        }
        if deg >= 3 {
            c.deg3.insert(v);
        }
        let leaf_neighbors = g
            .neighbors(v)
            .iter()
            .filter(|&&(w, _)| g.degree(w) == 1)
            .count();
        // a support vertex is incident with at least one pendant edge; in
        // K_2 both endpoints qualify
        if leaf_neighbors >= 1 {
            c.supports.insert(v);
        }
        // V_s': interior supports with at most one non-leaf neighbor
        // (inclusive reading: a star center, all of whose neighbors are
        // leaves, belongs to V_s')
        if deg > 1 && leaf_neighbors >= 1 && deg - leaf_neighbors <= 1 {
            c.supports_prime.insert(v);
            if deg >= 3 {
                c.supports_prime_3.insert(v);
            }
        }
    }
    c
}

impl VertexClasses {
    pub fn v3_subset_vs(&self) -> bool {
        self.deg3.is_subset(&self.supports)
    }

    /// Every interior vertex is a support vertex (the Prop-9 class).
    pub fn interior_all_supports(&self) -> bool {
        self.interior.is_subset(&self.supports)
    }
}
