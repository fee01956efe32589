//! Top-level forbidden-set pruning by neighbor containment.
//!
//! `ignore[u] = j` records that once outer iteration `j` has finished, some
//! other vertex dominates `u` in every later top-level forbidden set, so `u`
//! need not be placed there. Entries start at `n` and only decrease.

use crate::graph::setops::intersect_count;
use crate::graph::{DegeneracyOrder, LaterNeighbors};
use crate::metrics::Counters;

/// Per-run `ignore` array; meaningless across different orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgnoreIndex {
    ignore: Vec<u32>,
}

impl IgnoreIndex {
    pub fn new(n: usize) -> Self {
        IgnoreIndex {
            ignore: vec![n as u32; n],
        }
    }

    #[inline]
    pub fn get(&self, v: u32) -> u32 {
        self.ignore[v as usize]
    }

    #[inline]
    fn lower(&mut self, v: u32, to: u32) {
        let e = &mut self.ignore[v as usize];
        *e = (*e).min(to);
    }
}

/// Returns the pruned forbidden set for the top-level subproblem of `v`
/// (`P = N⁺(v)`, `X = N⁻(v)`), then records the dominations `P` reveals.
///
/// `stats` accumulates Σ|X|, Σ|X'| and the number of subproblems whose
/// forbidden set shrank.
pub fn forbidden_set_reduction(
    v: u32,
    p: &[u32],
    x: &[u32],
    idx: &mut IgnoreIndex,
    order: &DegeneracyOrder,
    later: &LaterNeighbors,
    stats: &mut Counters,
) -> Vec<u32> {
    let i = order.rank(v);
    let pruned: Vec<u32> = x.iter().copied().filter(|&u| idx.get(u) >= i).collect();

    for &u in p {
        let nu = later.of(u);
        let c = intersect_count(p, nu);
        if c == p.len() {
            idx.lower(v, order.rank(u));
        } else if c == nu.len() {
            idx.lower(u, i);
        }
    }

    stats.forbidden_subproblems += 1;
    stats.forbidden_before += x.len() as u64;
    stats.forbidden_after += pruned.len() as u64;
    if pruned.len() < x.len() {
        stats.forbidden_pruned_subproblems += 1;
    }
    pruned
}
