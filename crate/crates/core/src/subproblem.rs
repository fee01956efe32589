use crate::graph::CompactGraph;

/// A search state `(R, P, X)`: a clique, its candidates and its forbidden set.
///
/// All three are strictly ascending except `r`, which is kept in insertion
/// order by the search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subproblem {
    pub r: Vec<u32>,
    pub p: Vec<u32>,
    pub x: Vec<u32>,
}

impl Subproblem {
    pub fn new(r: Vec<u32>, p: Vec<u32>, x: Vec<u32>) -> Self {
        Subproblem { r, p, x }
    }

    /// Checks that R is a clique, every vertex of P ∪ X is adjacent to all of
    /// R, P and X are disjoint, and P and X are strictly ascending.
    pub fn check(&self, g: &CompactGraph) -> Result<(), String> {
        check_parts(g, &self.r, &self.p, &self.x)
    }
}

pub(crate) fn check_parts(g: &CompactGraph, r: &[u32], p: &[u32], x: &[u32]) -> Result<(), String> {
    for (name, s) in [("P", p), ("X", x)] {
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("{name} not strictly ascending: {s:?}"));
        }
    }
    for (i, &a) in r.iter().enumerate() {
        for &b in &r[i + 1..] {
            if !g.has_edge(a, b) {
                return Err(format!("R is not a clique: {a} and {b} not adjacent"));
            }
        }
    }
    for &v in p.iter().chain(x) {
        if let Some(&a) = r.iter().find(|&&a| !g.has_edge(a, v)) {
            return Err(format!("{v} in P ∪ X is not adjacent to {a} in R"));
        }
    }
    if let Some(v) = crate::graph::setops::first_common(p, x) {
        return Err(format!("{v} is in both P and X"));
    }
    Ok(())
}
