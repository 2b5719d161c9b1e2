//! Constructive antimagic and product-antimagic edge labelings.
//!
//! The centerpiece is a four-step labeling procedure that produces, for any
//! connected graph whose degree->=3 vertices all carry a pendant edge and
//! any positive increasing arithmetic label sequence, an edge labeling
//! whose induced vertex sums (or vertex products, for sequences starting
//! at >= 1) are pairwise distinct. Around it sit the supporting structure
//! (pruned graphs, forest/even edge partitions, good path decompositions,
//! Eulerian circuits), alternative constructions for support-saturated and
//! leafy graphs, a brute-force search oracle, and exact-rational
//! verification of every produced labeling.

pub mod classify;
pub mod construct;
pub mod decompose;
pub mod dot;
pub mod engine;
pub mod enumerate;
pub mod generate;
pub mod graph;
pub mod json;
pub mod rational;
pub mod universal;
pub mod verify;

pub use classify::{classify, VertexClasses};
pub use construct::{leafy, prune, subdivide, PrunedGraph};
pub use engine::{label_arithmetic, ArithSeq, Labeling, Op};
pub use graph::Graph;
pub use rational::Rat;
