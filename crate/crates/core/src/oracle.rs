//! Reference enumerators for testing, sharing no code with the engine.
//!
//! [`brute_force_mce`] is the pivot-free recursion over `u128` adjacency
//! masks; [`subset_mce`] checks every vertex subset of graphs with at most
//! 20 vertices. Both report cliques with at least two vertices.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::OracleError;
use crate::graph::CompactGraph;

/// Cliques as sorted member lists, in lexicographic order.
pub type CliqueSet = BTreeSet<Vec<u32>>;

/// Default vertex limit of [`brute_force_mce`].
pub const DEFAULT_ORACLE_LIMIT: usize = 64;
/// Hard vertex limit imposed by the mask width.
pub const MAX_ORACLE_LIMIT: usize = 128;
/// Vertex limit of [`subset_mce`].
pub const SUBSET_LIMIT: usize = 20;

fn masks(g: &CompactGraph) -> Vec<u128> {
    (0..g.n() as u32)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | 1u128 << u))
        .collect()
}

fn members(mut mask: u128) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros());
        mask &= mask - 1;
    }
    out
}

/// All maximal cliques, for graphs with at most [`DEFAULT_ORACLE_LIMIT`] vertices.
pub fn brute_force_mce(g: &CompactGraph) -> Result<CliqueSet, OracleError> {
    brute_force_mce_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

/// Like [`brute_force_mce`] with a caller-chosen limit (capped at 128).
pub fn brute_force_mce_with_limit(g: &CompactGraph, limit: usize) -> Result<CliqueSet, OracleError> {
    let limit = limit.min(MAX_ORACLE_LIMIT);
    if g.n() > limit {
        return Err(OracleError::LimitExceeded { n: g.n(), limit });
    }
    let adj = masks(g);
    let all = if g.n() == 128 { u128::MAX } else { (1u128 << g.n()) - 1 };
    let mut out = CliqueSet::new();
    expand(&adj, 0, all, 0, &mut out);
    Ok(out)
}

fn expand(adj: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut CliqueSet) {
    if p == 0 {
        if x == 0 && r.count_ones() >= 2 {
            out.insert(members(r));
        }
        return;
    }
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        let bit = 1u128 << v;
        expand(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// All maximal cliques by checking every subset; at most 20 vertices.
pub fn subset_mce(g: &CompactGraph) -> Result<CliqueSet, OracleError> {
    let n = g.n();
    if n > SUBSET_LIMIT {
        return Err(OracleError::LimitExceeded { n, limit: SUBSET_LIMIT });
    }
    let adj: Vec<u32> = masks(g).into_iter().map(|m| m as u32).collect();
    const NOT_CLIQUE: u32 = u32::MAX;
    // common[mask]: vertices adjacent to every member, or NOT_CLIQUE.
    let mut common = vec![0u32; 1 << n];
    common[0] = (1u32 << n) - 1;
    let mut out = CliqueSet::new();
    for mask in 1u32..(1u32 << n) {
        let low = mask.trailing_zeros();
        let rest = mask & (mask - 1);
        let c = common[rest as usize];
        common[mask as usize] = if c != NOT_CLIQUE && c & (1 << low) != 0 {
            c & adj[low as usize]
        } else {
            NOT_CLIQUE
        };
        if common[mask as usize] == 0 && mask.count_ones() >= 2 {
            out.insert(members(mask as u128));
        }
    }
    Ok(out)
}

/// Outcome of [`verify_cliques`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    /// Claimed sets that are not cliques (or have fewer than two members).
    pub non_cliques: Vec<Vec<u32>>,
    /// Claimed cliques paired with a vertex that extends them.
    pub non_maximal: Vec<(Vec<u32>, u32)>,
    /// Maximal cliques missing from the claim; only filled when
    /// `completeness_checked`.
    pub missing: Vec<Vec<u32>>,
    /// Claimed sets reported more than once, with their multiplicity.
    pub duplicates: Vec<(Vec<u32>, usize)>,
    pub completeness_checked: bool,
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        self.non_cliques.is_empty() && self.non_maximal.is_empty() && self.missing.is_empty() && self.duplicates.is_empty()
    }
}

/// Checks that every claimed set is a maximal clique, that none repeats, and,
/// when `g` has at most `limit` vertices, that none is missing.
pub fn verify_cliques(g: &CompactGraph, claimed: &[Vec<u32>], limit: usize) -> Verdict {
    let mut verdict = Verdict::default();
    let mut seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for c in claimed {
        let mut c = c.clone();
        c.sort_unstable();
        *seen.entry(c).or_default() += 1;
    }
    for (c, &k) in &seen {
        if k > 1 {
            verdict.duplicates.push((c.clone(), k));
        }
        let in_range = c.iter().all(|&v| (v as usize) < g.n());
        let distinct = c.windows(2).all(|w| w[0] < w[1]);
        let is_clique = in_range
            && distinct
            && c.len() >= 2
            && c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if !is_clique {
            verdict.non_cliques.push(c.clone());
            continue;
        }
        let witness = g
            .neighbors(c[0])
            .iter()
            .copied()
            .find(|&w| c[1..].iter().all(|&v| g.has_edge(v, w)));
        if let Some(w) = witness {
            verdict.non_maximal.push((c.clone(), w));
        }
    }
    if g.n() <= limit.min(MAX_ORACLE_LIMIT) {
        let truth = brute_force_mce_with_limit(g, limit).expect("within limit");
        verdict.missing = truth.into_iter().filter(|c| !seen.contains_key(c)).collect();
        verdict.completeness_checked = true;
    }
    verdict
}
