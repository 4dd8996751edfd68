//! Exact rainbow neighbourhood numbers of small graphs.
//!
//! Given a proper colouring, a vertex *yields* when its closed
//! neighbourhood meets every colour class. This crate computes, by exact
//! enumeration over all minimum proper colourings, the minimum and maximum
//! number of yielding vertices (r⁻ and r⁺), the convention colourings
//! (χ-colourings with lexicographically maximal class sizes), and verifies
//! the known closed forms for cycles, sunlets, empty-suns and bipartite
//! graphs against an independent brute-force oracle.

pub mod bitset;
pub mod colouring;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod rainbow;
pub mod random;
pub mod report;

pub use colouring::{Colouring, SearchBudget};
pub use families::{generate, join_k1, Family, FamilySpec};
pub use graph::{emit_graph6, parse_dimacs, parse_edge_list, parse_graph6, Graph};
pub use rainbow::{rainbow_count, rainbow_range, RainbowOptions, RainbowRange, RainbowReport};
