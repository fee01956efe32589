use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::compact::CompactGraph;

/// Degeneracy (minimum-degree removal) order of a graph.
///
/// `order[i]` is the i-th removed vertex and `rank` is its inverse. Every
/// vertex has at most `degeneracy` neighbors ranked after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    order: Vec<u32>,
    rank: Vec<u32>,
    degeneracy: usize,
}

/// Repeatedly removes a minimum-degree vertex, smallest id first among ties.
///
/// Uses a lazy binary heap keyed on `(degree, id)`, which is what gives the
/// deterministic tie-break; stale heap entries are skipped on pop.
pub fn degeneracy_order(g: &CompactGraph) -> DegeneracyOrder {
    let n = g.n();
    let mut degree: Vec<u32> = (0..n as u32).map(|v| g.degree(v) as u32).collect();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> =
        (0..n as u32).map(|v| Reverse((degree[v as usize], v))).collect();
    let mut order = Vec::with_capacity(n);
    let mut rank = vec![0u32; n];
    let mut degeneracy = 0usize;

    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v as usize] || d != degree[v as usize] {
            continue;
        }
        removed[v as usize] = true;
        rank[v as usize] = order.len() as u32;
        order.push(v);
        degeneracy = degeneracy.max(d as usize);
        for &u in g.neighbors(v) {
            if !removed[u as usize] {
                degree[u as usize] -= 1;
                heap.push(Reverse((degree[u as usize], u)));
            }
        }
    }

    DegeneracyOrder {
        order,
        rank,
        degeneracy,
    }
}

impl DegeneracyOrder {
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    #[inline]
    pub fn rank(&self, v: u32) -> u32 {
        self.rank[v as usize]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// λ.
    pub fn degeneracy(&self) -> usize {
        self.degeneracy
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Splits `N(v)` into `(earlier, later)` neighbors, both ascending by id.
    pub fn split_neighbors(&self, g: &CompactGraph, v: u32, earlier: &mut Vec<u32>, later: &mut Vec<u32>) {
        earlier.clear();
        later.clear();
        let r = self.rank(v);
        for &u in g.neighbors(v) {
            if self.rank(u) > r {
                later.push(u);
            } else {
                earlier.push(u);
            }
        }
    }
}

/// CSR of later neighbors `N⁺(v)` (ascending by id), built once per run.
#[derive(Clone, Debug)]
pub struct LaterNeighbors {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl LaterNeighbors {
    pub fn new(g: &CompactGraph, order: &DegeneracyOrder) -> Self {
        let mut offsets = Vec::with_capacity(g.n() + 1);
        let mut targets = Vec::with_capacity(g.m());
        offsets.push(0);
        for v in 0..g.n() as u32 {
            let r = order.rank(v);
            targets.extend(g.neighbors(v).iter().copied().filter(|&u| order.rank(u) > r));
            offsets.push(targets.len());
        }
        LaterNeighbors { offsets, targets }
    }

    #[inline]
    pub fn of(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}
