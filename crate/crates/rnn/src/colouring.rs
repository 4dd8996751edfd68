//! Exact chromatic and clique numbers, canonical enumeration of all
//! χ-colourings, and convention colourings (χ-colourings whose colour-class
//! size vector is lexicographically maximal).
//!
//! Canonical form: colour indices are ordered by first occurrence along the
//! vertex order 0, 1, 2, …, so each partition of V into colour classes is
//! visited exactly once, never once per colour permutation.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColouringError {
    #[error("colour class {0} is empty")]
    EmptyClass(usize),
    #[error("colour index {index} out of range for k={k}")]
    IndexOutOfRange { index: usize, k: usize },
}

/// A total colour assignment using colours `0..k`, every colour occurring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    assignment: Vec<usize>,
    k: usize,
    class_sizes: Vec<usize>,
}

impl Colouring {
    /// Builds a colouring from a declared colour count; every index in
    /// `0..k` must occur.
    pub fn from_parts(assignment: Vec<usize>, k: usize) -> Result<Colouring, ColouringError> {
        let mut class_sizes = vec![0usize; k];
        for &c in &assignment {
            if c >= k {
                return Err(ColouringError::IndexOutOfRange { index: c, k });
            }
            class_sizes[c] += 1;
        }
        if let Some(i) = class_sizes.iter().position(|&s| s == 0) {
            return Err(ColouringError::EmptyClass(i));
        }
        Ok(Colouring { assignment, k, class_sizes })
    }

    /// Infers k as the largest index + 1.
    pub fn new(assignment: Vec<usize>) -> Result<Colouring, ColouringError> {
        let k = assignment.iter().max().map_or(0, |&m| m + 1);
        Colouring::from_parts(assignment, k)
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colour(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// θ(c₀), …, θ(c_{k−1}).
    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Class sizes sorted in decreasing order.
    pub fn sorted_class_sizes(&self) -> Vec<usize> {
        let mut s = self.class_sizes.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

impl Serialize for Colouring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Colouring", 2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("assignment", &self.assignment)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Colouring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            k: usize,
            assignment: Vec<usize>,
        }
        let w = Wire::deserialize(d)?;
        Colouring::from_parts(w.assignment, w.k).map_err(serde::de::Error::custom)
    }
}

/// True iff no edge is monochromatic. Panics if the assignment length does
/// not match the graph order.
pub fn is_proper(g: &Graph, c: &Colouring) -> bool {
    assert_eq!(
        c.assignment.len(),
        g.n(),
        "colouring length {} does not match graph order {}",
        c.assignment.len(),
        g.n()
    );
    g.edges().all(|(u, v)| c.assignment[u] != c.assignment[v])
}

// ---------------------------------------------------------------------------
// Search budget
// ---------------------------------------------------------------------------

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: DEFAULT_BUDGET }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

struct Meter {
    used: u64,
    cap: u64,
}

impl Meter {
    fn new(cap: u64) -> Meter {
        Meter { used: 0, cap }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.cap
    }
}

// ---------------------------------------------------------------------------
// Clique number
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    /// Best clique size found; exact ω(G) when `exact`.
    pub omega: usize,
    pub exact: bool,
    pub nodes: u64,
}

/// Exact ω(G) by branch-and-bound over candidate bitsets. On budget
/// exhaustion `omega` is the best lower bound found, flagged inexact.
pub fn clique_number(g: &Graph, budget: SearchBudget) -> CliqueResult {
    let n = g.n();
    if n == 0 {
        return CliqueResult { omega: 0, exact: true, nodes: 0 };
    }
    // vertices in descending degree order; ties by index
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut meter = Meter::new(budget.max_nodes);
    let mut best = 1usize;
    let mut ok = true;
    for (i, &v) in order.iter().enumerate() {
        if n - i <= best {
            break;
        }
        let mut cand = g.neighbours(v).clone();
        // restrict to later vertices in the order
        for &u in &order[..=i] {
            cand.remove(u);
        }
        ok &= clique_expand(g, &cand, 1, &mut best, &mut meter);
        if !ok {
            break;
        }
    }
    CliqueResult { omega: best, exact: ok, nodes: meter.used }
}

fn clique_expand(
    g: &Graph,
    cand: &crate::bitset::VertexSet,
    size: usize,
    best: &mut usize,
    meter: &mut Meter,
) -> bool {
    if !meter.tick() {
        return false;
    }
    if size > *best {
        *best = size;
    }
    let mut cand = cand.clone();
    while let Some(v) = cand.first() {
        if size + cand.len() <= *best {
            return true;
        }
        cand.remove(v);
        let next = cand.intersection(g.neighbours(v));
        if size + 1 > *best {
            *best = size + 1;
        }
        if !next.is_empty() && !clique_expand(g, &next, size + 1, best, meter) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Chromatic number
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    /// χ(G) when `exact`; otherwise equals `lower` (best known bracket).
    pub chi: usize,
    pub exact: bool,
    pub lower: usize,
    pub upper: usize,
    pub nodes: u64,
}

/// Exact χ(G): DSATUR upper bound, clique lower bound, then backtracking
/// k-colourability tests with symmetry breaking for each k in between.
pub fn chromatic_number(g: &Graph, budget: SearchBudget) -> ChromaticResult {
    let n = g.n();
    if n == 0 {
        return ChromaticResult { chi: 0, exact: true, lower: 0, upper: 0, nodes: 0 };
    }
    if g.edge_count() == 0 {
        return ChromaticResult { chi: 1, exact: true, lower: 1, upper: 1, nodes: 0 };
    }
    let cl = clique_number(g, budget);
    let mut nodes = cl.nodes;
    let lower = cl.omega.max(2);
    let upper = dsatur_upper_bound(g);
    debug_assert!(lower <= upper);
    for k in lower..upper {
        let mut meter = Meter::new(budget.max_nodes.saturating_sub(nodes));
        let verdict = k_colourable(g, k, &mut meter);
        nodes += meter.used;
        match verdict {
            Some(true) => {
                return ChromaticResult { chi: k, exact: true, lower: k, upper: k, nodes };
            }
            Some(false) => continue,
            None => {
                // undecided at this k: χ is somewhere in [k, upper]
                return ChromaticResult { chi: k, exact: false, lower: k, upper, nodes };
            }
        }
    }
    // every k < upper was decisively refuted, and DSATUR attains upper
    ChromaticResult { chi: upper, exact: true, lower: upper, upper, nodes }
}

/// Greedy DSATUR colouring; returns the number of colours used.
fn dsatur_upper_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    let mut used = 0usize;
    for _ in 0..n {
        // highest saturation, then highest degree, then lowest index
        let v = (0..n)
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| {
                let sat = g
                    .neighbours(v)
                    .iter()
                    .filter(|&u| colour[u] != usize::MAX)
                    .map(|u| colour[u])
                    .collect::<std::collections::BTreeSet<_>>()
                    .len();
                (sat, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        let mut c = 0;
        while g.neighbours(v).iter().any(|u| colour[u] == c) {
            c += 1;
        }
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// None = budget exhausted before a decision.
fn k_colourable(g: &Graph, k: usize, meter: &mut Meter) -> Option<bool> {
    let n = g.n();
    if k == 0 {
        return Some(n == 0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colour = vec![usize::MAX; n];
    fn rec(
        g: &Graph,
        order: &[usize],
        k: usize,
        i: usize,
        used: usize,
        colour: &mut [usize],
        meter: &mut Meter,
    ) -> Option<bool> {
        if !meter.tick() {
            return None;
        }
        if i == order.len() {
            return Some(true);
        }
        let v = order[i];
        // symmetry breaking: at most one brand-new colour index
        for c in 0..k.min(used + 1) {
            if g.neighbours(v).iter().any(|u| colour[u] == c) {
                continue;
            }
            colour[v] = c;
            let r = rec(g, order, k, i + 1, used.max(c + 1), colour, meter);
            colour[v] = usize::MAX;
            if r != Some(false) {
                return r;
            }
        }
        Some(false)
    }
    rec(g, &order, k, 0, 0, &mut colour, meter)
}

// ---------------------------------------------------------------------------
// Canonical enumeration of χ-colourings
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumStats {
    pub chi: usize,
    pub colourings: u64,
    pub nodes: u64,
    /// False when the budget cut the enumeration (or χ itself) short.
    pub complete: bool,
}

/// A partial canonical assignment of vertices `0..assignment.len()`;
/// `used` colours occur, necessarily exactly the indices `0..used`.
#[derive(Debug, Clone)]
pub(crate) struct Prefix {
    pub assignment: Vec<usize>,
    pub used: usize,
}

/// Splits the canonical search tree into at least `target` prefixes (fewer
/// if the whole tree is smaller), in lexicographic order. Returns the
/// prefixes and the number of tree nodes spent building them.
pub(crate) fn split_prefixes(g: &Graph, chi: usize, target: usize) -> (Vec<Prefix>, u64) {
    let n = g.n();
    let mut frontier = vec![Prefix { assignment: Vec::new(), used: 0 }];
    let mut nodes = 0u64;
    while frontier.len() < target {
        let depth = frontier.first().map_or(n, |p| p.assignment.len());
        if depth >= n {
            break;
        }
        let mut next = Vec::new();
        for p in &frontier {
            nodes += 1;
            for c in feasible_colours(g, chi, &p.assignment, p.used, depth, n) {
                let mut a = p.assignment.clone();
                a.push(c);
                next.push(Prefix { assignment: a, used: p.used.max(c + 1) });
            }
        }
        if next.is_empty() {
            return (next, nodes);
        }
        frontier = next;
    }
    (frontier, nodes)
}

fn feasible_colours<'a>(
    g: &'a Graph,
    chi: usize,
    assignment: &'a [usize],
    used: usize,
    v: usize,
    n: usize,
) -> impl Iterator<Item = usize> + 'a {
    let viable = chi.saturating_sub(used) <= n - v;
    (0..chi.min(used + 1)).filter(move |&c| {
        viable
            && !g
                .neighbours(v)
                .iter()
                .take_while(|&u| u < v)
                .any(|u| assignment[u] == c)
    })
}

/// DFS continuation of one prefix. `visit` gets each completed canonical
/// assignment. Returns (nodes, colourings, complete).
pub(crate) fn enumerate_from(
    g: &Graph,
    chi: usize,
    prefix: &Prefix,
    cap: u64,
    visit: &mut dyn FnMut(&[usize]),
) -> (u64, u64, bool) {
    let n = g.n();
    let mut assignment = prefix.assignment.clone();
    assignment.resize(n, usize::MAX);
    let mut meter = Meter::new(cap);
    let mut count = 0u64;
    let complete = enum_rec(
        g,
        chi,
        prefix.assignment.len(),
        prefix.used,
        &mut assignment,
        &mut meter,
        &mut count,
        visit,
    );
    (meter.used, count, complete)
}

#[allow(clippy::too_many_arguments)]
fn enum_rec(
    g: &Graph,
    chi: usize,
    v: usize,
    used: usize,
    assignment: &mut Vec<usize>,
    meter: &mut Meter,
    count: &mut u64,
    visit: &mut dyn FnMut(&[usize]),
) -> bool {
    if !meter.tick() {
        return false;
    }
    let n = g.n();
    if v == n {
        if used == chi {
            *count += 1;
            visit(assignment);
        }
        return true;
    }
    // not enough vertices left to introduce the missing colours
    if chi - used > n - v {
        return true;
    }
    for c in 0..chi.min(used + 1) {
        if g
            .neighbours(v)
            .iter()
            .take_while(|&u| u < v)
            .any(|u| assignment[u] == c)
        {
            continue;
        }
        assignment[v] = c;
        if !enum_rec(g, chi, v + 1, used.max(c + 1), assignment, meter, count, visit) {
            return false;
        }
    }
    assignment[v] = usize::MAX;
    true
}

/// Visits every proper χ-colouring of `g` once in canonical form, in
/// lexicographic order of the assignment sequence.
pub fn enumerate_chi_colourings(
    g: &Graph,
    budget: SearchBudget,
    mut visit: impl FnMut(&Colouring),
) -> EnumStats {
    let chrom = chromatic_number(g, budget);
    if !chrom.exact {
        return EnumStats { chi: chrom.chi, colourings: 0, nodes: chrom.nodes, complete: false };
    }
    let chi = chrom.chi;
    if g.n() == 0 {
        // one empty colouring
        visit(&Colouring::from_parts(Vec::new(), 0).unwrap());
        return EnumStats { chi: 0, colourings: 1, nodes: chrom.nodes, complete: true };
    }
    let root = Prefix { assignment: Vec::new(), used: 0 };
    let cap = budget.max_nodes.saturating_sub(chrom.nodes);
    let (nodes, count, complete) = enumerate_from(g, chi, &root, cap, &mut |a| {
        visit(&Colouring::from_parts(a.to_vec(), chi).unwrap());
    });
    EnumStats { chi, colourings: count, nodes: chrom.nodes + nodes, complete }
}

// ---------------------------------------------------------------------------
// Convention colourings
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ConventionOutcome {
    pub chi: usize,
    /// All χ-colourings attaining the lexicographically maximal class-size
    /// vector, classes relabelled largest-first, sorted by assignment.
    pub colourings: Vec<Colouring>,
    pub class_sizes: Vec<usize>,
    pub stats: EnumStats,
}

/// χ-colourings whose class-size vector (θ(c₁), θ(c₂), …) is the
/// lexicographic maximum over all χ-colourings — the rainbow neighbourhood
/// convention, one representative per colour-class partition.
pub fn convention_colourings(g: &Graph, budget: SearchBudget) -> ConventionOutcome {
    let mut best: Vec<usize> = Vec::new();
    let mut kept: Vec<Colouring> = Vec::new();
    let stats = enumerate_chi_colourings(g, budget, |c| {
        let sizes = c.sorted_class_sizes();
        if sizes > best {
            best = sizes;
            kept.clear();
            kept.push(relabel_largest_first(c));
        } else if sizes == best {
            kept.push(relabel_largest_first(c));
        }
    });
    kept.sort_by(|a, b| a.assignment().cmp(b.assignment()));
    ConventionOutcome { chi: stats.chi, colourings: kept, class_sizes: best, stats }
}

/// Relabels colour classes in decreasing size order (ties by first
/// occurrence), so class_sizes comes out sorted descending.
fn relabel_largest_first(c: &Colouring) -> Colouring {
    let k = c.k();
    let mut first_occurrence = vec![usize::MAX; k];
    for (v, &col) in c.assignment().iter().enumerate() {
        if first_occurrence[col] == usize::MAX {
            first_occurrence[col] = v;
        }
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(c.class_sizes()[i]), first_occurrence[i]));
    let mut relabel = vec![0usize; k];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new;
    }
    let assignment = c.assignment().iter().map(|&col| relabel[col]).collect();
    Colouring::from_parts(assignment, k).unwrap()
}
