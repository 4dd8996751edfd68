//! Rainbow neighbourhood analysis: per-colouring yield detection, exact
//! r⁻_χ(G) and r⁺_χ(G) over all canonical χ-colourings, and checkers for
//! the closed-form family results.

use crate::colouring::{
    chromatic_number, clique_number, enumerate_chi_colourings, enumerate_from, is_proper,
    split_prefixes, Colouring, Prefix, SearchBudget,
};
use crate::families::{generate, join_k1, Family, FamilySpec};
use crate::graph::Graph;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RainbowError {
    #[error("colouring length {got} does not match graph order {n}")]
    LengthMismatch { got: usize, n: usize },
    #[error("colouring is not a proper colouring of the graph")]
    Improper,
    #[error("budget-limited result where an exact one is required")]
    Inexact,
}

fn validate(g: &Graph, c: &Colouring) -> Result<(), RainbowError> {
    if c.assignment().len() != g.n() {
        return Err(RainbowError::LengthMismatch { got: c.assignment().len(), n: g.n() });
    }
    if !is_proper(g, c) {
        return Err(RainbowError::Improper);
    }
    Ok(())
}

/// Colours of N[v] as a presence mask check; early exit once all k seen.
fn yields_unchecked(g: &Graph, assignment: &[usize], k: usize, v: usize) -> bool {
    if k > 64 {
        let mut seen = vec![false; k];
        seen[assignment[v]] = true;
        for u in g.neighbours(v).iter() {
            seen[assignment[u]] = true;
        }
        return seen.iter().all(|&b| b);
    }
    let full: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut mask = 1u64 << assignment[v];
    for u in g.neighbours(v).iter() {
        mask |= 1u64 << assignment[u];
        if mask == full {
            return true;
        }
    }
    mask == full
}

/// True iff N[v] meets every colour class of `c`.
pub fn yields_rainbow(g: &Graph, c: &Colouring, v: usize) -> Result<bool, RainbowError> {
    validate(g, c)?;
    assert!(v < g.n(), "vertex {v} out of range");
    Ok(yields_unchecked(g, c.assignment(), c.k(), v))
}

/// Per-vertex yield flags for one colouring; `count` is r_χ(G) for it.
#[derive(Debug, Clone, Serialize)]
pub struct RainbowReport {
    pub yields: Vec<bool>,
    pub count: usize,
    pub colouring: Colouring,
}

pub fn rainbow_count(g: &Graph, c: &Colouring) -> Result<RainbowReport, RainbowError> {
    validate(g, c)?;
    let yields: Vec<bool> = (0..g.n())
        .map(|v| yields_unchecked(g, c.assignment(), c.k(), v))
        .collect();
    let count = yields.iter().filter(|&&b| b).count();
    Ok(RainbowReport { yields, count, colouring: c.clone() })
}

// ---------------------------------------------------------------------------
// Exact r⁻ / r⁺
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub struct RainbowOptions {
    pub budget: SearchBudget,
    pub threads: usize,
    /// Skip yield checks on vertices with degree < χ−1 (they can never
    /// yield). Sound; the flag exists so tests can compare both paths.
    pub prune_low_degree: bool,
}

impl Default for RainbowOptions {
    fn default() -> Self {
        RainbowOptions { budget: SearchBudget::default(), threads: 1, prune_low_degree: true }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RainbowRange {
    pub chi: usize,
    pub r_min: usize,
    pub r_max: usize,
    pub min_witness: Option<Colouring>,
    pub max_witness: Option<Colouring>,
    /// Yield count over convention colourings (smallest observed when not
    /// unique).
    pub convention_value: Option<usize>,
    /// All convention colourings produced the same yield count.
    pub convention_unique: bool,
    pub convention_matches_min: bool,
    pub convention_count: u64,
    pub colourings_enumerated: u64,
    pub nodes: u64,
    pub exact: bool,
}

/// Number of search-tree prefixes the enumeration is split into. Fixed so
/// that statistics and results do not depend on the worker count.
const BRANCH_TARGET: usize = 256;

#[derive(Clone)]
struct BranchAcc {
    colourings: u64,
    complete: bool,
    min: Option<(usize, Vec<usize>)>,
    max: Option<(usize, Vec<usize>)>,
    conv_sizes: Vec<usize>,
    conv_counts: std::collections::BTreeSet<usize>,
    conv_n: u64,
}

impl BranchAcc {
    fn empty() -> BranchAcc {
        BranchAcc {
            colourings: 0,
            complete: true,
            min: None,
            max: None,
            conv_sizes: Vec::new(),
            conv_counts: std::collections::BTreeSet::new(),
            conv_n: 0,
        }
    }

    fn absorb(&mut self, other: BranchAcc) {
        self.colourings += other.colourings;
        self.complete &= other.complete;
        // earlier (lexicographically smaller) witness wins ties
        if let Some((c, a)) = other.min {
            if self.min.as_ref().is_none_or(|(bc, _)| c < *bc) {
                self.min = Some((c, a));
            }
        }
        if let Some((c, a)) = other.max {
            if self.max.as_ref().is_none_or(|(bc, _)| c > *bc) {
                self.max = Some((c, a));
            }
        }
        use std::cmp::Ordering;
        match other.conv_sizes.cmp(&self.conv_sizes) {
            Ordering::Greater => {
                self.conv_sizes = other.conv_sizes;
                self.conv_counts = other.conv_counts;
                self.conv_n = other.conv_n;
            }
            Ordering::Equal => {
                self.conv_counts.extend(other.conv_counts);
                self.conv_n += other.conv_n;
            }
            Ordering::Less => {}
        }
    }
}

/// Exact r⁻_χ(G) and r⁺_χ(G) with witnesses, plus the convention-colouring
/// yield count, by a fold over the canonical χ-colouring enumeration.
/// Deterministic for any thread count.
pub fn rainbow_range(g: &Graph, opts: &RainbowOptions) -> RainbowRange {
    let n = g.n();
    if n == 0 {
        let empty = Colouring::from_parts(Vec::new(), 0).unwrap();
        return RainbowRange {
            chi: 0,
            r_min: 0,
            r_max: 0,
            min_witness: Some(empty.clone()),
            max_witness: Some(empty),
            convention_value: Some(0),
            convention_unique: true,
            convention_matches_min: true,
            convention_count: 1,
            colourings_enumerated: 1,
            nodes: 0,
            exact: true,
        };
    }
    let chrom = chromatic_number(g, opts.budget);
    if !chrom.exact {
        return RainbowRange {
            chi: chrom.chi,
            r_min: chrom.lower,
            r_max: n,
            min_witness: None,
            max_witness: None,
            convention_value: None,
            convention_unique: false,
            convention_matches_min: false,
            convention_count: 0,
            colourings_enumerated: 0,
            nodes: chrom.nodes,
            exact: false,
        };
    }
    let chi = chrom.chi;
    let eligible: Vec<bool> = (0..n)
        .map(|v| !opts.prune_low_degree || g.degree(v) + 1 >= chi)
        .collect();

    let (prefixes, prefix_nodes) = split_prefixes(g, chi, BRANCH_TARGET);
    let per_branch_cap = opts.budget.max_nodes.saturating_sub(chrom.nodes + prefix_nodes);

    let run_branch = |p: &Prefix| -> (u64, BranchAcc) {
        let mut acc = BranchAcc::empty();
        let (nodes, count, complete) = enumerate_from(g, chi, p, per_branch_cap, &mut |a| {
            let yc = (0..n)
                .filter(|&v| eligible[v] && yields_unchecked(g, a, chi, v))
                .count();
            if acc.min.as_ref().is_none_or(|(bc, _)| yc < *bc) {
                acc.min = Some((yc, a.to_vec()));
            }
            if acc.max.as_ref().is_none_or(|(bc, _)| yc > *bc) {
                acc.max = Some((yc, a.to_vec()));
            }
            let sizes = sorted_sizes(a, chi);
            use std::cmp::Ordering;
            match sizes.cmp(&acc.conv_sizes) {
                Ordering::Greater => {
                    acc.conv_sizes = sizes;
                    acc.conv_counts = [yc].into();
                    acc.conv_n = 1;
                }
                Ordering::Equal => {
                    acc.conv_counts.insert(yc);
                    acc.conv_n += 1;
                }
                Ordering::Less => {}
            }
        });
        acc.colourings = count;
        acc.complete = complete;
        (nodes, acc)
    };

    let results: Vec<(u64, BranchAcc)> = if opts.threads <= 1 {
        prefixes.iter().map(run_branch).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            prefixes.par_iter().map(run_branch).collect()
        })
    };

    let mut total = BranchAcc::empty();
    let mut branch_nodes = 0u64;
    for (nodes, acc) in results {
        branch_nodes += nodes;
        total.absorb(acc);
    }
    let nodes = chrom.nodes + prefix_nodes + branch_nodes;
    let exact = total.complete && nodes <= opts.budget.max_nodes;

    let (r_min, min_witness) = match &total.min {
        Some((c, a)) => (*c, Some(Colouring::from_parts(a.clone(), chi).unwrap())),
        None => (chi, None),
    };
    let (r_max, max_witness) = match &total.max {
        Some((c, a)) => (*c, Some(Colouring::from_parts(a.clone(), chi).unwrap())),
        None => (n, None),
    };
    let convention_value = total.conv_counts.first().copied();
    let convention_unique = total.conv_counts.len() == 1 && exact;
    RainbowRange {
        chi,
        r_min,
        r_max,
        min_witness,
        max_witness,
        convention_value,
        convention_unique,
        convention_matches_min: exact && convention_value == Some(r_min),
        convention_count: total.conv_n,
        colourings_enumerated: total.colourings,
        nodes,
        exact,
    }
}

fn sorted_sizes(assignment: &[usize], k: usize) -> Vec<usize> {
    let mut sizes = vec![0usize; k];
    for &c in assignment {
        sizes[c] += 1;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

// ---------------------------------------------------------------------------
// Theorem / lemma checkers
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub id: &'static str,
    pub pass: bool,
    pub details: String,
}

impl Verdict {
    fn new(id: &'static str, pass: bool, details: String) -> Verdict {
        Verdict { id, pass, details }
    }
}

/// χ(G) ≤ r⁻ ≤ r⁺ ≤ n.
pub fn check_theorem_1_1(g: &Graph, range: &RainbowRange) -> Result<Verdict, RainbowError> {
    if !range.exact {
        return Err(RainbowError::Inexact);
    }
    let ok = range.chi <= range.r_min && range.r_min <= range.r_max && range.r_max <= g.n();
    Ok(Verdict::new(
        "thm1.1",
        ok,
        format!("chi={} r_min={} r_max={} n={}", range.chi, range.r_min, range.r_max, g.n()),
    ))
}

/// Every yielding vertex has degree ≥ χ−1, checked over every χ-colouring.
pub fn check_lemma_3_2(g: &Graph, budget: SearchBudget) -> Result<Verdict, RainbowError> {
    let mut bad: Option<(usize, Vec<usize>)> = None;
    let stats = enumerate_chi_colourings(g, budget, |c| {
        if bad.is_some() {
            return;
        }
        for v in 0..g.n() {
            if yields_unchecked(g, c.assignment(), c.k(), v) && g.degree(v) + 1 < c.k() {
                bad = Some((v, c.assignment().to_vec()));
                return;
            }
        }
    });
    if !stats.complete {
        return Err(RainbowError::Inexact);
    }
    Ok(match bad {
        None => Verdict::new("lem3.2", true, format!("chi={}, {} colourings", stats.chi, stats.colourings)),
        Some((v, a)) => Verdict::new(
            "lem3.2",
            false,
            format!("vertex {v} of degree {} yields under {a:?}", g.degree(v)),
        ),
    })
}

/// ω(G) ≤ r⁻_χ(G).
pub fn check_clique_bound(
    g: &Graph,
    range: &RainbowRange,
    budget: SearchBudget,
) -> Result<Verdict, RainbowError> {
    if !range.exact {
        return Err(RainbowError::Inexact);
    }
    let cl = clique_number(g, budget);
    if !cl.exact {
        return Err(RainbowError::Inexact);
    }
    Ok(Verdict::new(
        "clique-bound",
        cl.omega <= range.r_min,
        format!("omega={} r_min={}", cl.omega, range.r_min),
    ))
}

/// All convention colourings share one yield count, and it equals r⁻.
pub fn check_theorem_2_1(g: &Graph, range: &RainbowRange) -> Result<Verdict, RainbowError> {
    if !range.exact {
        return Err(RainbowError::Inexact);
    }
    let ok = range.convention_unique && range.convention_matches_min;
    Ok(Verdict::new(
        "thm2.1",
        ok,
        format!(
            "n={} convention_value={:?} unique={} r_min={} ({} convention colourings)",
            g.n(),
            range.convention_value,
            range.convention_unique,
            range.r_min,
            range.convention_count
        ),
    ))
}

/// r(K₁+G) = 1 + r(G), tested for both the min and the max.
#[derive(Debug, Clone, Serialize)]
pub struct JoinCheck {
    pub base_min: usize,
    pub base_max: usize,
    pub joined_min: usize,
    pub joined_max: usize,
    pub min_ok: bool,
    pub max_ok: bool,
    pub pass: bool,
}

pub fn check_join_lemma(g: &Graph, opts: &RainbowOptions) -> Result<JoinCheck, RainbowError> {
    let base = rainbow_range(g, opts);
    let joined = rainbow_range(&join_k1(g), opts);
    if !base.exact || !joined.exact {
        return Err(RainbowError::Inexact);
    }
    let min_ok = joined.r_min == 1 + base.r_min;
    let max_ok = joined.r_max == 1 + base.r_max;
    Ok(JoinCheck {
        base_min: base.r_min,
        base_max: base.r_max,
        joined_min: joined.r_min,
        joined_max: joined.r_max,
        min_ok,
        max_ok,
        pass: min_ok && max_ok,
    })
}

// ---------------------------------------------------------------------------
// Family formula verification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct FamilyRow {
    pub graph: String,
    pub param: usize,
    pub predicted_min: Option<usize>,
    pub predicted_max: Option<usize>,
    pub computed_min: usize,
    pub computed_max: usize,
    pub exact: bool,
    pub matched: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyCheck {
    pub formula: String,
    pub rows: Vec<FamilyRow>,
    pub all_match: bool,
}

fn family_row(
    spec: &FamilySpec,
    param: usize,
    predicted_min: Option<usize>,
    predicted_max: Option<usize>,
    opts: &RainbowOptions,
) -> FamilyRow {
    let g = generate(spec).expect("valid family spec");
    let r = rainbow_range(&g, opts);
    let matched = r.exact
        && predicted_min.is_none_or(|p| p == r.r_min)
        && predicted_max.is_none_or(|p| p == r.r_max);
    FamilyRow {
        graph: spec.describe(),
        param,
        predicted_min,
        predicted_max,
        computed_min: r.r_min,
        computed_max: r.r_max,
        exact: r.exact,
        matched,
    }
}

fn finish(formula: &str, rows: Vec<FamilyRow>) -> FamilyCheck {
    let all_match = rows.iter().all(|r| r.matched);
    FamilyCheck { formula: formula.to_string(), rows, all_match }
}

/// Odd cycles: r⁻ = 3 for all odd n ≥ 3; r⁺ = 3 for n ∈ {3,5} and
/// 3 + 2(ℓ+1) for n = 7+4ℓ or 9+4ℓ.
pub fn verify_prop_2_3(odd_ns: &[usize], opts: &RainbowOptions) -> FamilyCheck {
    let rows = odd_ns
        .iter()
        .map(|&n| {
            assert!(n >= 3 && n % 2 == 1, "prop2.3 applies to odd n >= 3");
            let r_max = if n <= 5 {
                3
            } else {
                let l = if (n - 7) % 4 == 0 { (n - 7) / 4 } else { (n - 9) / 4 };
                3 + 2 * (l + 1)
            };
            family_row(&FamilySpec::cycle(n), n, Some(3), Some(r_max), opts)
        })
        .collect();
    finish("prop2.3: odd cycles", rows)
}

/// Odd sunlets, n ≥ 7: r⁺(Sₙ) = n.
pub fn verify_prop_2_4(odd_ns: &[usize], opts: &RainbowOptions) -> FamilyCheck {
    let rows = odd_ns
        .iter()
        .map(|&n| {
            assert!(n >= 7 && n % 2 == 1, "prop2.4 applies to odd n >= 7");
            family_row(&FamilySpec::sunlet(n), n, None, Some(n), opts)
        })
        .collect();
    finish("prop2.4: odd sunlets", rows)
}

/// Empty-suns: r⁺ = 2n for all n ≥ 3.
pub fn verify_prop_2_5(ns: &[usize], opts: &RainbowOptions) -> FamilyCheck {
    let rows = ns
        .iter()
        .map(|&n| family_row(&FamilySpec::empty_sun(n), n, None, Some(2 * n), opts))
        .collect();
    finish("prop2.5: empty-suns", rows)
}

/// Bipartite graphs: r⁻ = r⁺ = n.
pub fn verify_thm_1_2(specs: &[FamilySpec], opts: &RainbowOptions) -> FamilyCheck {
    let rows = specs
        .iter()
        .map(|spec| {
            let g = generate(spec).expect("valid family spec");
            assert!(g.is_bipartite(), "thm1.2 applies to bipartite graphs");
            let n = g.n();
            family_row(spec, n, Some(n), Some(n), opts)
        })
        .collect();
    finish("thm1.2: bipartite graphs", rows)
}

/// Bipartite family specs over a parameter range, for CLI sweeps.
pub fn bipartite_sweep_specs(family: Family, lo: usize, hi: usize) -> Vec<FamilySpec> {
    (lo..=hi)
        .filter(|&n| match family {
            Family::Cycle => n % 2 == 0 && n >= 4,
            _ => true,
        })
        .map(|n| FamilySpec { family, params: vec![n] })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn opts() -> RainbowOptions {
        RainbowOptions::default()
    }

    /// The worked C₇ colourings from the source material.
    #[test]
    fn c7_golden_vectors() {
        let g = generate(&FamilySpec::cycle(7)).unwrap();
        let conv = Colouring::new(vec![0, 1, 0, 1, 0, 1, 2]).unwrap();
        assert!(!yields_rainbow(&g, &conv, 3).unwrap());
        assert!(yields_rainbow(&g, &conv, 6).unwrap());
        let rep = rainbow_count(&g, &conv).unwrap();
        assert_eq!(rep.count, 3);
        let yielding: Vec<usize> = (0..7).filter(|&v| rep.yields[v]).collect();
        assert_eq!(yielding, vec![0, 5, 6]);

        let recoloured = Colouring::new(vec![0, 1, 0, 2, 0, 1, 2]).unwrap();
        let rep = rainbow_count(&g, &recoloured).unwrap();
        assert_eq!(rep.count, 5);
        let yielding: Vec<usize> = (0..7).filter(|&v| rep.yields[v]).collect();
        assert_eq!(yielding, vec![0, 2, 4, 5, 6]);
    }

    #[test]
    fn k1_yields_trivially() {
        let g = Graph::edgeless(1);
        let c = Colouring::new(vec![0]).unwrap();
        assert!(yields_rainbow(&g, &c, 0).unwrap());
    }

    #[test]
    fn improper_colouring_rejected() {
        let g = generate(&FamilySpec::cycle(3)).unwrap();
        let c = Colouring::new(vec![0, 0, 1]).unwrap();
        assert_eq!(yields_rainbow(&g, &c, 0), Err(RainbowError::Improper));
        assert!(rainbow_count(&g, &c).is_err());
        let short = Colouring::new(vec![0, 1]).unwrap();
        assert!(matches!(
            rainbow_count(&g, &short),
            Err(RainbowError::LengthMismatch { got: 2, n: 3 })
        ));
    }

    #[test]
    fn bipartite_counts_full() {
        let g = generate(&FamilySpec::complete_bipartite(2, 3)).unwrap();
        let c = Colouring::new(vec![0, 0, 1, 1, 1]).unwrap();
        assert_eq!(rainbow_count(&g, &c).unwrap().count, 5);
    }

    #[test]
    fn ranges_of_named_graphs() {
        let cases = [
            (FamilySpec::cycle(7), 3, 5),
            (FamilySpec::complete(4), 4, 4),
            (FamilySpec::cycle(5), 3, 3),
            (FamilySpec::null(5), 5, 5),
        ];
        for (spec, want_min, want_max) in cases {
            let g = generate(&spec).unwrap();
            let r = rainbow_range(&g, &opts());
            assert!(r.exact);
            assert_eq!((r.r_min, r.r_max), (want_min, want_max), "{}", spec.describe());
        }
        let es4 = generate(&FamilySpec::empty_sun(4)).unwrap();
        assert_eq!(rainbow_range(&es4, &opts()).r_max, 8);
    }

    #[test]
    fn witness_is_lex_smallest() {
        let g = generate(&FamilySpec::cycle(7)).unwrap();
        let r = rainbow_range(&g, &opts());
        // first canonical colouring with count 3 in lex order
        let w = r.min_witness.unwrap();
        let mut best: Option<Vec<usize>> = None;
        enumerate_chi_colourings(&g, SearchBudget::default(), |c| {
            if best.is_none() && rainbow_count(&g, c).unwrap().count == 3 {
                best = Some(c.assignment().to_vec());
            }
        });
        assert_eq!(w.assignment(), best.unwrap().as_slice());
    }

    #[test]
    fn pruning_matches_unpruned() {
        for spec in [
            FamilySpec::cycle(9),
            FamilySpec::sunlet(4),
            FamilySpec::sunlet(5),
            FamilySpec::empty_sun(4),
            FamilySpec::complete_bipartite(2, 4),
        ] {
            let g = generate(&spec).unwrap();
            let pruned = rainbow_range(&g, &opts());
            let unpruned =
                rainbow_range(&g, &RainbowOptions { prune_low_degree: false, ..opts() });
            assert_eq!((pruned.r_min, pruned.r_max), (unpruned.r_min, unpruned.r_max));
            assert_eq!(pruned.convention_value, unpruned.convention_value);
        }
    }

    #[test]
    fn thread_counts_agree() {
        let g = generate(&FamilySpec::sunlet(5)).unwrap();
        let base = rainbow_range(&g, &opts());
        for threads in [2, 4, 8] {
            let r = rainbow_range(&g, &RainbowOptions { threads, ..opts() });
            assert_eq!(
                serde_json::to_string(&r).unwrap(),
                serde_json::to_string(&base).unwrap()
            );
        }
    }

    #[test]
    fn checkers_on_cycle9() {
        let g = generate(&FamilySpec::cycle(9)).unwrap();
        let r = rainbow_range(&g, &opts());
        assert!(check_theorem_1_1(&g, &r).unwrap().pass);
        assert!(check_lemma_3_2(&g, SearchBudget::default()).unwrap().pass);
        assert!(check_clique_bound(&g, &r, SearchBudget::default()).unwrap().pass);
        assert!(check_theorem_2_1(&g, &r).unwrap().pass);
    }

    #[test]
    fn sunlet_pendants_never_yield() {
        let g = generate(&FamilySpec::sunlet(5)).unwrap();
        let mut saw = false;
        enumerate_chi_colourings(&g, SearchBudget::default(), |c| {
            for v in 5..10 {
                assert!(!yields_unchecked(&g, c.assignment(), c.k(), v));
            }
            saw = true;
        });
        assert!(saw);
    }

    #[test]
    fn join_lemma_examples() {
        for spec in [FamilySpec::cycle(5), FamilySpec::complete(3), FamilySpec::null(4)] {
            let g = generate(&spec).unwrap();
            let jc = check_join_lemma(&g, &opts()).unwrap();
            assert!(jc.pass, "{}: {jc:?}", spec.describe());
        }
        // wheel W5 = K1 + C5: r_min = 1 + 3
        let c5 = generate(&FamilySpec::cycle(5)).unwrap();
        let jc = check_join_lemma(&c5, &opts()).unwrap();
        assert_eq!(jc.joined_min, 4);
        // star K_{1,4} = K1 + null(4): r = 5
        let n4 = generate(&FamilySpec::null(4)).unwrap();
        let jc = check_join_lemma(&n4, &opts()).unwrap();
        assert_eq!((jc.joined_min, jc.joined_max), (5, 5));
    }

    #[test]
    fn family_formulas() {
        // The stated r⁺ closed form for odd cycles holds at n <= 7 but is
        // refuted by enumeration from n = 9 on (c(v_i) = i mod 3 makes all
        // of C₉ yield); the checker must report that honestly.
        let p23 = verify_prop_2_3(&[3, 5, 7, 9, 11], &opts());
        assert!(!p23.all_match);
        for row in &p23.rows {
            assert_eq!(row.computed_min, 3);
            assert_eq!(row.matched, row.param <= 7, "{row:?}");
        }
        assert_eq!(p23.rows[3].computed_max, 9); // C9
        assert_eq!(p23.rows[4].computed_max, 9); // C11
        let p24 = verify_prop_2_4(&[7], &opts());
        assert!(p24.all_match, "{p24:?}");
        let p25 = verify_prop_2_5(&[3, 4, 5], &opts());
        assert!(p25.all_match, "{p25:?}");
        let t12 = verify_thm_1_2(
            &[FamilySpec::path(5), FamilySpec::cycle(6), FamilySpec::complete_bipartite(3, 3)],
            &opts(),
        );
        assert!(t12.all_match, "{t12:?}");
    }

    #[test]
    fn inexact_input_rejected_by_checkers() {
        let g = generate(&FamilySpec::cycle(9)).unwrap();
        let r = rainbow_range(&g, &RainbowOptions { budget: SearchBudget::new(5), ..opts() });
        assert!(!r.exact);
        assert!(matches!(check_theorem_1_1(&g, &r), Err(RainbowError::Inexact)));
    }
}
