//! Global reduction: peel low-degree vertices and non-triangle edges off the
//! input graph before ordering, reporting the maximal cliques they account for.
//!
//! After every rule application the invariant
//! `mc(G) = emitted ∪ mc(G_current)` holds, where cliques are taken to have at
//! least two vertices. Reported cliques are sorted ascending.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::EditableGraph;
use crate::sink::CliqueSink;

/// Applications of each reduction rule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCounts {
    pub degree0: u64,
    pub degree1: u64,
    /// Degree two, neighbors not adjacent: two 2-cliques.
    pub degree2_case1: u64,
    /// Degree two, neighbors adjacent with no other common neighbor: a 3-clique,
    /// and the neighbor edge goes too.
    pub degree2_case2: u64,
    /// Degree two, neighbors adjacent and sharing another neighbor: a 3-clique.
    pub degree2_case3: u64,
    pub non_triangle_edge: u64,
}

/// What global reduction removed and reported.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionLedger {
    /// Cliques reported by reduction rules (never by a recursion).
    pub cliques_emitted: u64,
    pub deleted_vertices: u64,
    pub deleted_edges: u64,
    pub rules: RuleCounts,
}

impl ReductionLedger {
    fn report(&mut self, sink: &mut dyn CliqueSink, clique: &mut [u32]) {
        clique.sort_unstable();
        sink.emit(clique);
        self.cliques_emitted += 1;
    }
}

/// Which rule families [`global_reduce`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlobalConfig {
    pub vertex_rules: bool,
    pub edge_rules: bool,
}

impl Default for GlobalConfig {
    fn default() -> Self {
        GlobalConfig {
            vertex_rules: true,
            edge_rules: true,
        }
    }
}

/// Removes every vertex of degree at most two, cascading to neighbors whose
/// degree drops into range. Returns the number of vertices removed.
///
/// The work queue is FIFO, seeded in ascending id order; the rule is chosen
/// by the degree a vertex has when it is popped.
pub fn vertex_reduction(
    g: &mut EditableGraph,
    sink: &mut dyn CliqueSink,
    ledger: &mut ReductionLedger,
) -> usize {
    let n = g.n();
    let mut queued = vec![false; n];
    let mut queue: VecDeque<u32> = VecDeque::new();
    for v in 0..n as u32 {
        if g.is_alive(v) && g.degree(v) <= 2 {
            queued[v as usize] = true;
            queue.push_back(v);
        }
    }

    let mut removed = 0;
    let enqueue = |g: &EditableGraph, queue: &mut VecDeque<u32>, queued: &mut [bool], u: u32| {
        if g.is_alive(u) && !queued[u as usize] && g.degree(u) <= 2 {
            queued[u as usize] = true;
            queue.push_back(u);
        }
    };

    while let Some(v) = queue.pop_front() {
        queued[v as usize] = false;
        if !g.is_alive(v) {
            continue;
        }
        match *g.neighbors(v) {
            [a, b] => {
                ledger.deleted_edges += g.remove_vertex(v) as u64;
                if g.has_edge(a, b) {
                    ledger.report(sink, &mut [v, a, b]);
                    if g.common_neighbor(a, b).is_none() {
                        g.remove_edge(a, b);
                        ledger.deleted_edges += 1;
                        ledger.rules.degree2_case2 += 1;
                    } else {
                        ledger.rules.degree2_case3 += 1;
                    }
                } else {
                    ledger.report(sink, &mut [v, a]);
                    ledger.report(sink, &mut [v, b]);
                    ledger.rules.degree2_case1 += 1;
                }
                enqueue(g, &mut queue, &mut queued, a);
                enqueue(g, &mut queue, &mut queued, b);
            }
            [a] => {
                ledger.deleted_edges += g.remove_vertex(v) as u64;
                ledger.report(sink, &mut [v, a]);
                ledger.rules.degree1 += 1;
                enqueue(g, &mut queue, &mut queued, a);
            }
            [] => {
                g.remove_vertex(v);
                ledger.rules.degree0 += 1;
            }
            // Degrees never grow, so a queued vertex always has degree <= 2.
            _ => unreachable!("queued vertex {v} has degree {}", g.degree(v)),
        }
        ledger.deleted_vertices += 1;
        removed += 1;
    }
    removed
}

/// Deletes every edge whose endpoints share no neighbor, reporting each as a
/// maximal 2-clique. Returns the number of edges removed.
///
/// When a probe finds a common neighbor `w`, all three triangle edges are
/// marked so none of them is probed again in this pass.
pub fn edge_reduction(
    g: &mut EditableGraph,
    sink: &mut dyn CliqueSink,
    ledger: &mut ReductionLedger,
) -> usize {
    let n = g.n();
    // visited[u][i] flags the edge {u, neighbors(u)[i]}; kept in lockstep with
    // the adjacency lists when edges are deleted.
    let mut visited: Vec<Vec<bool>> = (0..n as u32).map(|v| vec![false; g.degree(v)]).collect();
    let mark = |g: &EditableGraph, visited: &mut [Vec<bool>], a: u32, b: u32| {
        if let Ok(i) = g.neighbors(a).binary_search(&b) {
            visited[a as usize][i] = true;
        }
        if let Ok(i) = g.neighbors(b).binary_search(&a) {
            visited[b as usize][i] = true;
        }
    };

    let mut removed = 0;
    for u in 0..n as u32 {
        let mut i = 0;
        while i < g.degree(u) {
            let v = g.neighbors(u)[i];
            if v < u || visited[u as usize][i] {
                i += 1;
                continue;
            }
            match g.common_neighbor(u, v) {
                None => {
                    let j = g
                        .neighbors(v)
                        .binary_search(&u)
                        .expect("adjacency is symmetric");
                    g.remove_edge(u, v);
                    visited[u as usize].remove(i);
                    visited[v as usize].remove(j);
                    ledger.report(sink, &mut [u, v]);
                    ledger.deleted_edges += 1;
                    ledger.rules.non_triangle_edge += 1;
                    removed += 1;
                }
                Some(w) => {
                    mark(g, &mut visited, u, v);
                    mark(g, &mut visited, u, w);
                    mark(g, &mut visited, v, w);
                    i += 1;
                }
            }
        }
    }
    removed
}

/// Alternates vertex and edge reduction until neither changes the graph.
///
/// Edge deletions can create new low-degree vertices, so a single pass of
/// each is not enough in general.
pub fn global_reduce(
    g: &mut EditableGraph,
    sink: &mut dyn CliqueSink,
    ledger: &mut ReductionLedger,
    config: GlobalConfig,
) {
    loop {
        if config.vertex_rules {
            vertex_reduction(g, sink, ledger);
        }
        if !config.edge_rules || edge_reduction(g, sink, ledger) == 0 || !config.vertex_rules {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sink::CollectingSink;

    fn run_vertex(edges: &[(u32, u32)]) -> (EditableGraph, Vec<Vec<u32>>, ReductionLedger) {
        let mut g = EditableGraph::from_edges(edges.iter().copied()).unwrap();
        let mut sink = CollectingSink::new();
        let mut ledger = ReductionLedger::default();
        vertex_reduction(&mut g, &mut sink, &mut ledger);
        let mut c = sink.into_cliques();
        c.sort();
        (g, c, ledger)
    }

    #[test]
    fn path_cascades_to_empty() {
        let (g, cliques, ledger) = run_vertex(&[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.m(), 0);
        assert_eq!(g.live_vertex_count(), 0);
        assert_eq!(cliques, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(ledger.cliques_emitted, 3);
        assert_eq!(ledger.deleted_vertices, 4);
        assert_eq!(ledger.deleted_edges, 3);
    }

    #[test]
    fn k4_untouched() {
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let (g, cliques, _) = run_vertex(&k4);
        assert_eq!(g.m(), 6);
        assert!(cliques.is_empty());
    }

    #[test]
    fn degree_two_rules_cascade_on_diamond() {
        // Diamond: 2 and 3 both hang off edge {0, 1}. Popping 2 finds 3 as
        // another common neighbor (case 3, edge kept); popping 3 then finds
        // none (case 2, edge deleted).
        let (g, cliques, ledger) = run_vertex(&[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1)]);
        assert_eq!(cliques, vec![vec![0, 1, 2], vec![0, 1, 3]]);
        assert_eq!(ledger.rules.degree2_case3, 1);
        assert_eq!(ledger.rules.degree2_case2, 1);
        assert_eq!(ledger.rules.degree0, 2);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn degree_two_case_three_in_heavier_context() {
        // Triangle {v=0, w=1, x=2} where x has a K4 around it so only u=3
        // has degree <= 2.
        let edges = [
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 0),
            (3, 1),
            (0, 4),
            (1, 4),
            (2, 4),
            (0, 5),
            (1, 5),
            (2, 5),
            (4, 5),
        ];
        let (g, cliques, ledger) = run_vertex(&edges);
        assert_eq!(cliques, vec![vec![0, 1, 3]]);
        assert_eq!(ledger.rules.degree2_case3, 1);
        assert!(g.has_edge(0, 1));
        assert!(!g.is_alive(3));
        assert_eq!(g.m(), 10);
    }

    #[test]
    fn edge_reduction_examples() {
        let mut g = EditableGraph::from_edges([(0, 1), (1, 2)]).unwrap();
        let mut sink = CollectingSink::new();
        let mut ledger = ReductionLedger::default();
        assert_eq!(edge_reduction(&mut g, &mut sink, &mut ledger), 2);
        assert_eq!(g.m(), 0);
        assert_eq!(sink.cliques(), &[vec![0, 1], vec![1, 2]]);

        let mut k3 = EditableGraph::from_edges([(0, 1), (1, 2), (0, 2)]).unwrap();
        let mut sink = CollectingSink::new();
        assert_eq!(edge_reduction(&mut k3, &mut sink, &mut ledger), 0);
        assert_eq!(k3.m(), 3);

        // Two triangles joined by a bridge.
        let mut g = EditableGraph::from_edges([
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (2, 3),
        ])
        .unwrap();
        let mut sink = CollectingSink::new();
        assert_eq!(edge_reduction(&mut g, &mut sink, &mut ledger), 1);
        assert_eq!(sink.cliques(), &[vec![2, 3]]);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn star_empties_under_vertex_rules() {
        let mut g = EditableGraph::from_edges((1..=5).map(|i| (0, i))).unwrap();
        let mut sink = CollectingSink::new();
        let mut ledger = ReductionLedger::default();
        global_reduce(&mut g, &mut sink, &mut ledger, GlobalConfig::default());
        assert_eq!(g.m(), 0);
        assert_eq!(sink.count(), 5);
        assert_eq!(ledger.rules.non_triangle_edge, 0);
    }

    #[test]
    fn k5_unchanged() {
        let edges: Vec<(u32, u32)> = (0..5u32).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let mut g = EditableGraph::from_edges(edges).unwrap();
        let mut sink = CollectingSink::new();
        let mut ledger = ReductionLedger::default();
        global_reduce(&mut g, &mut sink, &mut ledger, GlobalConfig::default());
        assert_eq!(g.m(), 10);
        assert_eq!(ledger, ReductionLedger::default());
    }

    #[test]
    fn fixpoint_after_edge_removal_creates_low_degree() {
        // Two K4s sharing nothing, joined by two non-triangle edges through a
        // hub of degree 3 that drops to degree 1 after edge reduction.
        let mut edges = Vec::new();
        for base in [0u32, 4] {
            for a in 0..4 {
                for b in a + 1..4 {
                    edges.push((base + a, base + b));
                }
            }
        }
        edges.extend([(8, 0), (8, 4), (8, 9), (9, 10), (10, 8), (9, 11), (10, 11)]);
        let mut g = EditableGraph::from_edges(edges).unwrap();
        let mut sink = CollectingSink::new();
        let mut ledger = ReductionLedger::default();
        global_reduce(&mut g, &mut sink, &mut ledger, GlobalConfig::default());
        for v in 0..g.n() as u32 {
            if g.is_alive(v) && g.degree(v) > 0 {
                assert!(g.degree(v) >= 3);
            }
        }
        for (u, v) in g.edges() {
            assert!(g.common_neighbor(u, v).is_some());
        }
        assert_eq!(g.m(), 12);
    }
}
