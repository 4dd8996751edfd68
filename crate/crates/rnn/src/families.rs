//! Generators for the named graph families: cycles, paths, complete and
//! complete bipartite graphs, null graphs, sunlets, empty-suns, and the
//! K₁-join of an arbitrary graph.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    Null,
    Sunlet,
    EmptySun,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Null => "null",
            Family::Sunlet => "sunlet",
            Family::EmptySun => "empty_sun",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Some(match s {
            "cycle" => Family::Cycle,
            "path" => Family::Path,
            "complete" => Family::Complete,
            "complete_bipartite" => Family::CompleteBipartite,
            "null" => Family::Null,
            "sunlet" => Family::Sunlet,
            "empty_sun" => Family::EmptySun,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} takes {expected} parameter(s), got {got}")]
    Arity { family: &'static str, expected: usize, got: usize },
    #[error("{family} requires parameter >= {min}, got {got}")]
    OutOfRange { family: &'static str, min: usize, got: usize },
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<FamilySpec, FamilyError> {
        let spec = FamilySpec { family, params };
        spec.validate()?;
        Ok(spec)
    }

    pub fn cycle(n: usize) -> FamilySpec {
        FamilySpec { family: Family::Cycle, params: vec![n] }
    }

    pub fn path(n: usize) -> FamilySpec {
        FamilySpec { family: Family::Path, params: vec![n] }
    }

    pub fn complete(n: usize) -> FamilySpec {
        FamilySpec { family: Family::Complete, params: vec![n] }
    }

    pub fn complete_bipartite(m: usize, n: usize) -> FamilySpec {
        FamilySpec { family: Family::CompleteBipartite, params: vec![m, n] }
    }

    pub fn null(n: usize) -> FamilySpec {
        FamilySpec { family: Family::Null, params: vec![n] }
    }

    pub fn sunlet(n: usize) -> FamilySpec {
        FamilySpec { family: Family::Sunlet, params: vec![n] }
    }

    pub fn empty_sun(n: usize) -> FamilySpec {
        FamilySpec { family: Family::EmptySun, params: vec![n] }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let name = self.family.name();
        let expected = match self.family {
            Family::CompleteBipartite => 2,
            _ => 1,
        };
        if self.params.len() != expected {
            return Err(FamilyError::Arity { family: name, expected, got: self.params.len() });
        }
        let min = match self.family {
            Family::Cycle | Family::Sunlet | Family::EmptySun => 3,
            _ => 1,
        };
        for &p in &self.params {
            if p < min {
                return Err(FamilyError::OutOfRange { family: name, min, got: p });
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        format!("{}:{}", self.family.name(), params.join(","))
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let p = &spec.params;
    let g = match spec.family {
        Family::Cycle => {
            let n = p[0];
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges).unwrap()
        }
        Family::Path => {
            let n = p[0];
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges).unwrap()
        }
        Family::Complete => {
            let n = p[0];
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        }
        Family::CompleteBipartite => {
            let (m, n) = (p[0], p[1]);
            let mut edges = Vec::new();
            for u in 0..m {
                for v in 0..n {
                    edges.push((u, m + v));
                }
            }
            Graph::from_edges(m + n, &edges).unwrap()
        }
        Family::Null => Graph::edgeless(p[0]),
        Family::Sunlet => {
            // cycle 0..n, pendant n+i attached to i
            let n = p[0];
            let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend((0..n).map(|i| (i, n + i)));
            Graph::from_edges(2 * n, &edges).unwrap()
        }
        Family::EmptySun => {
            // cycle 0..n; vertex n+i adjacent to i and i+1 mod n
            let n = p[0];
            let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            for i in 0..n {
                edges.push((n + i, i));
                edges.push((n + i, (i + 1) % n));
            }
            Graph::from_edges(2 * n, &edges).unwrap()
        }
    };
    Ok(g.with_label(spec.describe()))
}

/// K₁ + G: one new universal vertex (index |V(G)|) joined to every vertex of G.
pub fn join_k1(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend((0..n).map(|v| (v, n)));
    Graph::from_edges(n + 1, &edges).unwrap()
}
