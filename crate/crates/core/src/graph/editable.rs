use crate::error::GraphError;
use crate::graph::setops;

/// Mutable simple undirected graph used while global reduction runs.
///
/// Each vertex owns an ascending neighbor list; deleting an edge removes the
/// entry from both endpoint lists in place, so the list length is always the
/// live degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EditableGraph {
    adjacency: Vec<Vec<u32>>,
    alive: Vec<bool>,
    m_live: usize,
}

impl EditableGraph {
    /// `n` isolated vertices.
    pub fn with_vertices(n: usize) -> Self {
        EditableGraph {
            adjacency: vec![Vec::new(); n],
            alive: vec![true; n],
            m_live: 0,
        }
    }

    /// Builds a simple graph from vertex-id pairs. Self-loops are dropped and
    /// duplicates (in either orientation) collapse to one edge. `n` is the
    /// largest id plus one.
    pub fn from_edges<I>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let pairs: Vec<(u32, u32)> = pairs.into_iter().collect();
        let n = pairs
            .iter()
            .map(|&(u, v)| u.max(v) as usize + 1)
            .max()
            .unwrap_or(0);
        Ok(Self::from_edges_with_n(n, pairs)?.0)
    }

    /// Builds from ragged id tuples, rejecting any tuple that is not a pair.
    pub fn from_id_lists(lists: &[Vec<u32>]) -> Result<Self, GraphError> {
        let mut pairs = Vec::with_capacity(lists.len());
        for (index, l) in lists.iter().enumerate() {
            if l.len() != 2 {
                return Err(GraphError::MalformedPair {
                    index,
                    got: l.len(),
                });
            }
            pairs.push((l[0], l[1]));
        }
        Self::from_edges(pairs)
    }

    /// Builds with an explicit vertex count. Returns the graph together with
    /// `(self_loops_dropped, duplicates_dropped)`.
    pub fn from_edges_with_n<I>(n: usize, pairs: I) -> Result<(Self, (usize, usize)), GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut loops = 0;
        let mut raw = 0;
        for (u, v) in pairs {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w as u64,
                        n,
                    });
                }
            }
            if u == v {
                loops += 1;
                continue;
            }
            raw += 1;
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        let mut twice_m = 0;
        for list in adjacency.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        let m = twice_m / 2;
        let g = EditableGraph {
            adjacency,
            alive: vec![true; n],
            m_live: m,
        };
        Ok((g, (loops, raw - m)))
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Live edge count.
    pub fn m(&self) -> usize {
        self.m_live
    }

    pub fn is_alive(&self, v: u32) -> bool {
        self.alive[v as usize]
    }

    pub fn live_vertex_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Live neighbors of `v`, ascending.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// Smallest common neighbor of `u` and `v`, if any.
    pub fn common_neighbor(&self, u: u32, v: u32) -> Option<u32> {
        setops::first_common(self.neighbors(u), self.neighbors(v))
    }

    /// Checked variant of [`EditableGraph::common_neighbor`].
    pub fn common_neighbor_exists(&self, u: u32, v: u32) -> Result<Option<u32>, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(self.common_neighbor(u, v))
    }

    fn check(&self, v: u32) -> Result<(), GraphError> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v as u64,
                n: self.n(),
            })
        }
    }

    /// Deletes edge `{u, v}`. Returns whether it existed.
    pub fn remove_edge(&mut self, u: u32, v: u32) -> bool {
        if setops::remove_sorted(&mut self.adjacency[u as usize], v) {
            let mirrored = setops::remove_sorted(&mut self.adjacency[v as usize], u);
            debug_assert!(mirrored, "asymmetric adjacency at {{{u}, {v}}}");
            self.m_live -= 1;
            true
        } else {
            false
        }
    }

    /// Adds edge `{u, v}` (no-op for self-loops and existing edges).
    pub fn add_edge(&mut self, u: u32, v: u32) -> bool {
        if u == v || self.has_edge(u, v) {
            return false;
        }
        setops::insert_sorted(&mut self.adjacency[u as usize], v);
        setops::insert_sorted(&mut self.adjacency[v as usize], u);
        self.m_live += 1;
        true
    }

    /// Deletes `v` and all its incident edges. Returns the number of edges removed.
    pub fn remove_vertex(&mut self, v: u32) -> usize {
        let nbrs = std::mem::take(&mut self.adjacency[v as usize]);
        for &u in &nbrs {
            let mirrored = setops::remove_sorted(&mut self.adjacency[u as usize], v);
            debug_assert!(mirrored);
        }
        self.m_live -= nbrs.len();
        self.alive[v as usize] = false;
        nbrs.len()
    }

    /// Live edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }
}
