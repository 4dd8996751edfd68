//! Deliberately naive reference implementations for validating the engine.
//! Shares no search code with the colouring or rainbow modules: everything
//! here is plain exhaustive enumeration over k^n assignments.

use crate::colouring::Colouring;
use crate::graph::Graph;
use thiserror::Error;

/// Enumeration guard: k^n assignments must stay at desk scale.
pub const ORACLE_GUARD: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("k^n = {0} exceeds the oracle enumeration guard")]
    GuardExceeded(u128),
}

fn guard(k: usize, n: usize) -> Result<(), OracleError> {
    let total = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > ORACLE_GUARD as u128 {
        return Err(OracleError::GuardExceeded(total));
    }
    Ok(())
}

fn proper_naive(g: &Graph, assignment: &[usize]) -> bool {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) && assignment[u] == assignment[v] {
                return false;
            }
        }
    }
    true
}

/// All proper assignments V -> {0..k-1}, including non-onto and
/// non-canonical ones, in odometer order.
pub fn oracle_all_proper_colourings(g: &Graph, k: usize) -> Result<Vec<Colouring>, OracleError> {
    guard(k, g.n())?;
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Colouring::from_parts(Vec::new(), 0).unwrap());
        return Ok(out);
    }
    if k == 0 {
        return Ok(out);
    }
    let mut a = vec![0usize; n];
    loop {
        if proper_naive(g, &a) {
            // k here is the number of colours actually used
            let used = a.iter().max().unwrap() + 1;
            let mut occurs = vec![false; used];
            for &c in &a {
                occurs[c] = true;
            }
            if occurs.iter().all(|&b| b) {
                out.push(Colouring::from_parts(a.clone(), used).unwrap());
            } else {
                // non-contiguous colour use still counts as a proper
                // assignment; renumber nothing, keep it as a k-indexed one
                out.push(raw_colouring(&a, k));
            }
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            a[i] += 1;
            if a[i] < k {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

// Colouring requires every index below k to occur, so gappy assignments are
// stored with colours compacted while remembering nothing else; properness
// and yields are unaffected by renaming colours.
fn raw_colouring(a: &[usize], k: usize) -> Colouring {
    let mut map = vec![usize::MAX; k];
    let mut next = 0usize;
    let mut b = Vec::with_capacity(a.len());
    for &c in a {
        if map[c] == usize::MAX {
            map[c] = next;
            next += 1;
        }
        b.push(map[c]);
    }
    Colouring::from_parts(b, next).unwrap()
}

/// Smallest k admitting any proper assignment.
pub fn oracle_chromatic_number(g: &Graph) -> Result<usize, OracleError> {
    if g.n() == 0 {
        return Ok(0);
    }
    for k in 1..=g.n() {
        guard(k, g.n())?;
        if any_proper(g, k) {
            return Ok(k);
        }
    }
    unreachable!("every graph on n vertices is n-colourable")
}

fn any_proper(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let mut a = vec![0usize; n];
    loop {
        if proper_naive(g, &a) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            a[i] += 1;
            if a[i] < k {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

fn yields_naive(g: &Graph, assignment: &[usize], k: usize, v: usize) -> bool {
    let mut seen = vec![false; k];
    seen[assignment[v]] = true;
    for u in 0..g.n() {
        if g.has_edge(u, v) {
            seen[assignment[u]] = true;
        }
    }
    seen.iter().all(|&b| b)
}

fn count_naive(g: &Graph, assignment: &[usize], k: usize) -> usize {
    (0..g.n()).filter(|&v| yields_naive(g, assignment, k, v)).count()
}

/// (r⁻, r⁺): min and max yield count over all onto proper χ-colourings,
/// counted per labelled colouring. Also returns the onto-colouring count.
pub fn oracle_rainbow_range(g: &Graph) -> Result<(usize, usize), OracleError> {
    Ok(oracle_rainbow_detail(g)?.0)
}

pub fn oracle_rainbow_detail(g: &Graph) -> Result<((usize, usize), u64), OracleError> {
    let n = g.n();
    if n == 0 {
        return Ok(((0, 0), 1));
    }
    let chi = oracle_chromatic_number(g)?;
    guard(chi, n)?;
    let mut a = vec![0usize; n];
    let mut r_min = usize::MAX;
    let mut r_max = 0usize;
    let mut onto = 0u64;
    loop {
        if proper_naive(g, &a) {
            let mut occurs = vec![false; chi];
            for &c in &a {
                occurs[c] = true;
            }
            if occurs.iter().all(|&b| b) {
                onto += 1;
                let c = count_naive(g, &a, chi);
                r_min = r_min.min(c);
                r_max = r_max.max(c);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(((r_min, r_max), onto));
            }
            a[i] += 1;
            if a[i] < chi {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// Number of onto proper k-colourings (labelled).
pub fn oracle_onto_count(g: &Graph, k: usize) -> Result<u64, OracleError> {
    guard(k, g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(u64::from(k == 0));
    }
    if k == 0 {
        return Ok(0);
    }
    let mut a = vec![0usize; n];
    let mut onto = 0u64;
    loop {
        if proper_naive(g, &a) {
            let mut occurs = vec![false; k];
            for &c in &a {
                occurs[c] = true;
            }
            if occurs.iter().all(|&b| b) {
                onto += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(onto);
            }
            a[i] += 1;
            if a[i] < k {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}
