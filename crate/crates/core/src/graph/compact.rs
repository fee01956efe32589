use crate::error::GraphError;
use crate::graph::editable::EditableGraph;
use crate::graph::setops;

/// Frozen CSR graph with ascending adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    max_degree: usize,
    original_id: Option<Vec<u32>>,
}

/// How [`compact`] treats vertices deleted from the editable graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DeadVertices {
    /// Keep every id; deleted vertices become isolated.
    #[default]
    KeepIds,
    /// Drop deleted vertices and renumber the survivors densely, recording
    /// their previous ids in `original_id`.
    Renumber,
}

/// Freezes the live part of `g`.
pub fn compact(g: &EditableGraph, dead: DeadVertices) -> CompactGraph {
    match dead {
        DeadVertices::KeepIds => {
            let mut offsets = Vec::with_capacity(g.n() + 1);
            let mut targets = Vec::with_capacity(2 * g.m());
            offsets.push(0);
            for v in 0..g.n() as u32 {
                targets.extend_from_slice(g.neighbors(v));
                offsets.push(targets.len());
            }
            CompactGraph::from_csr(offsets, targets, None)
        }
        DeadVertices::Renumber => {
            let keep: Vec<u32> = (0..g.n() as u32).filter(|&v| g.is_alive(v)).collect();
            let mut new_id = vec![u32::MAX; g.n()];
            for (i, &v) in keep.iter().enumerate() {
                new_id[v as usize] = i as u32;
            }
            let mut offsets = Vec::with_capacity(keep.len() + 1);
            let mut targets = Vec::with_capacity(2 * g.m());
            offsets.push(0);
            for &v in &keep {
                // Renumbering is monotone, so lists stay ascending.
                targets.extend(g.neighbors(v).iter().map(|&u| new_id[u as usize]));
                offsets.push(targets.len());
            }
            CompactGraph::from_csr(offsets, targets, Some(keep))
        }
    }
}

impl CompactGraph {
    fn from_csr(offsets: Vec<usize>, targets: Vec<u32>, original_id: Option<Vec<u32>>) -> Self {
        let max_degree = offsets.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0);
        let g = CompactGraph {
            offsets,
            targets,
            max_degree,
            original_id,
        };
        debug_assert!(g.check_invariants().is_ok(), "{:?}", g.check_invariants());
        g
    }

    /// Convenience: `compact(from_edges(pairs))` keeping ids.
    pub fn from_edges<I>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        Ok(compact(&EditableGraph::from_edges(pairs)?, DeadVertices::KeepIds))
    }

    /// Like [`CompactGraph::from_edges`] with an explicit vertex count.
    pub fn from_edges_with_n<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let (g, _) = EditableGraph::from_edges_with_n(n, pairs)?;
        Ok(compact(&g, DeadVertices::KeepIds))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Id of `v` before renumbering, or `v` itself when no renumbering happened.
    #[inline]
    pub fn original_id(&self, v: u32) -> u32 {
        match &self.original_id {
            Some(map) => map[v as usize],
            None => v,
        }
    }

    pub fn original_ids(&self) -> Option<&[u32]> {
        self.original_id.as_deref()
    }

    /// Smallest common neighbor of `u` and `v`; `None` if they share none.
    pub fn common_neighbor_exists(&self, u: u32, v: u32) -> Result<Option<u32>, GraphError> {
        for w in [u, v] {
            if w as usize >= self.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w as u64,
                    n: self.n(),
                });
            }
        }
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(setops::first_common(self.neighbors(u), self.neighbors(v)))
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n() as u32).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Verifies ordering, symmetry and the absence of self-loops.
    pub fn check_invariants(&self) -> Result<(), String> {
        for u in 0..self.n() as u32 {
            let list = self.neighbors(u);
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {u} not strictly ascending"));
            }
            for &v in list {
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if v as usize >= self.n() || self.neighbors(v).binary_search(&u).is_err() {
                    return Err(format!("edge {{{u}, {v}}} not mirrored"));
                }
            }
        }
        Ok(())
    }
}
