//! Enumeration drivers.
//!
//! [`enumerate`] runs a recursion over a frozen graph; [`run`] first applies
//! global reduction to an editable graph and then enumerates what is left.
//!
//! With forbidden-set reduction off, the per-vertex top-level subproblems are
//! independent and may run on a rayon pool ([`EnumConfig::parallel`]). Each
//! worker owns its scratch and counters; cliques are buffered per vertex and
//! handed to the caller's sink in the same order a sequential run would use.
//! Forbidden-set reduction carries state from one top-level vertex to the
//! next, so with it on the driver is always sequential.

mod pivot;
mod search;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::forbidden::{forbidden_set_reduction, IgnoreIndex};
use crate::global::{global_reduce, GlobalConfig, ReductionLedger};
use crate::graph::{compact, degeneracy_order, CompactGraph, DeadVertices, EditableGraph, LaterNeighbors};
use crate::metrics::{snapshot, Counters, GraphShape, PhaseTimings, RunReport};
use crate::sink::{CliqueSink, CollectingSink, CountingSink, TranslatingSink};
use crate::subproblem::Subproblem;

pub use pivot::pivot_select;
use search::Searcher;

/// Recursion kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    /// Pivoting recursion over the whole graph.
    BkPivot,
    /// Pivoting recursion per vertex, in degeneracy order.
    BkDegen,
    /// Minimum-degree peeling per vertex, in degeneracy order.
    BkRcd,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::BkPivot, Algorithm::BkDegen, Algorithm::BkRcd];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::BkPivot => "bk",
            Algorithm::BkDegen => "degen",
            Algorithm::BkRcd => "rcd",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bk" | "pivot" => Ok(Algorithm::BkPivot),
            "degen" => Ok(Algorithm::BkDegen),
            "rcd" => Ok(Algorithm::BkRcd),
            _ => Err(format!("unknown algorithm {s:?} (expected bk, degen or rcd)")),
        }
    }
}

/// Which reductions are enabled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Reductions {
    pub global: bool,
    pub dynamic: bool,
    pub xreduce: bool,
}

impl Reductions {
    pub const NONE: Reductions = Reductions {
        global: false,
        dynamic: false,
        xreduce: false,
    };
    pub const ALL: Reductions = Reductions {
        global: true,
        dynamic: true,
        xreduce: true,
    };

    /// All eight on/off combinations, `NONE` first and `ALL` last.
    pub fn subsets() -> [Reductions; 8] {
        std::array::from_fn(|i| Reductions {
            global: i & 4 != 0,
            dynamic: i & 2 != 0,
            xreduce: i & 1 != 0,
        })
    }
}

impl fmt::Display for Reductions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [(self.global, "global"), (self.dynamic, "dynamic"), (self.xreduce, "xreduce")]
            .iter()
            .filter(|(on, _)| *on)
            .map(|&(_, n)| n)
            .collect();
        if names.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&names.join(","))
        }
    }
}

impl FromStr for Reductions {
    type Err = String;
    /// `all`, `none`, or a comma-separated list of `global`, `dynamic`, `xreduce`.
    fn from_str(s: &str) -> Result<Self, String> {
        let mut r = Reductions::NONE;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "all" => r = Reductions::ALL,
                "none" => {}
                "global" => r.global = true,
                "dynamic" => r.dynamic = true,
                "xreduce" => r.xreduce = true,
                _ => return Err(format!("unknown reduction {part:?} (expected global, dynamic, xreduce, all or none)")),
            }
        }
        Ok(r)
    }
}

/// Run configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub algorithm: Algorithm,
    pub reductions: Reductions,
    /// Use the exact degree-one rule instead of the relaxed one.
    pub strict_degree_one: bool,
    /// Record the per-degree visit histogram.
    pub metrics: bool,
    /// Run independent top-level subproblems on the rayon pool.
    pub parallel: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            algorithm: Algorithm::BkDegen,
            reductions: Reductions::ALL,
            strict_degree_one: false,
            metrics: false,
            parallel: false,
        }
    }
}

impl EnumConfig {
    pub fn new(algorithm: Algorithm, reductions: Reductions) -> Self {
        EnumConfig {
            algorithm,
            reductions,
            ..Default::default()
        }
    }
}

struct EnumOutcome {
    counters: Counters,
    degeneracy: usize,
    ordering: f64,
    enumeration: f64,
}

/// Enumerates the maximal cliques (two or more vertices) of `g` into `sink`.
///
/// Global reduction is not applied here, whatever `cfg` says; see [`run`].
pub fn enumerate(g: &CompactGraph, cfg: &EnumConfig, sink: &mut dyn CliqueSink) -> RunReport {
    let start = Instant::now();
    let degrees: Vec<u32>;
    let key = if cfg.metrics {
        degrees = (0..g.n() as u32).map(|v| g.degree(v) as u32).collect();
        Some(&degrees[..])
    } else {
        None
    };
    let out = enumerate_inner(g, cfg, sink, key);
    let shape = GraphShape {
        n: g.n(),
        m: g.m(),
        reduced_n: g.n(),
        reduced_m: g.m(),
        degeneracy: out.degeneracy,
        max_degree: g.max_degree(),
    };
    let timings = PhaseTimings {
        global_reduction: 0.0,
        ordering: out.ordering,
        enumeration: out.enumeration,
        total: start.elapsed().as_secs_f64(),
    };
    let mut reductions = cfg.reductions;
    reductions.global = false;
    snapshot(
        cfg.algorithm.name(),
        &reductions.to_string(),
        &out.counters,
        &ReductionLedger::default(),
        shape,
        timings,
    )
}

/// Global reduction (when enabled) followed by [`enumerate`] on the rest.
///
/// Cliques reach `sink` in the ids of `graph`. Visit histograms are keyed by
/// degree in `graph` before reduction.
pub fn run(mut graph: EditableGraph, cfg: &EnumConfig, sink: &mut dyn CliqueSink) -> RunReport {
    let start = Instant::now();
    let (n, m) = (graph.n(), graph.m());
    let input_degrees: Vec<u32> = if cfg.metrics {
        (0..n as u32).map(|v| graph.degree(v) as u32).collect()
    } else {
        Vec::new()
    };

    let mut ledger = ReductionLedger::default();
    let t = Instant::now();
    if cfg.reductions.global {
        global_reduce(&mut graph, sink, &mut ledger, GlobalConfig::default());
    }
    let global_time = t.elapsed().as_secs_f64();

    let dead = if graph.live_vertex_count() < n {
        DeadVertices::Renumber
    } else {
        DeadVertices::KeepIds
    };
    let g = compact(&graph, dead);
    drop(graph);

    let keys: Vec<u32>;
    let key = if cfg.metrics {
        keys = (0..g.n() as u32).map(|v| input_degrees[g.original_id(v) as usize]).collect();
        Some(&keys[..])
    } else {
        None
    };
    let out = match g.original_ids() {
        Some(map) => {
            let mut t = TranslatingSink {
                inner: sink,
                map,
                buf: Vec::new(),
            };
            enumerate_inner(&g, cfg, &mut t, key)
        }
        None => enumerate_inner(&g, cfg, sink, key),
    };

    let shape = GraphShape {
        n,
        m,
        reduced_n: (0..g.n() as u32).filter(|&v| g.degree(v) > 0).count(),
        reduced_m: g.m(),
        degeneracy: out.degeneracy,
        max_degree: g.max_degree(),
    };
    let timings = PhaseTimings {
        global_reduction: global_time,
        ordering: out.ordering,
        enumeration: out.enumeration,
        total: start.elapsed().as_secs_f64(),
    };
    snapshot(
        cfg.algorithm.name(),
        &cfg.reductions.to_string(),
        &out.counters,
        &ledger,
        shape,
        timings,
    )
}

/// Runs the configured kernel on a single subproblem and returns the number
/// of recursive calls. Only `algorithm`, `reductions.dynamic` and
/// `strict_degree_one` of `cfg` apply; [`Algorithm::BkPivot`] and
/// [`Algorithm::BkDegen`] both use the pivoting kernel here.
pub fn enumerate_subproblem(g: &CompactGraph, sub: &Subproblem, cfg: &EnumConfig, sink: &mut dyn CliqueSink) -> u64 {
    let mut s = Searcher::new(g, cfg.reductions.dynamic, cfg.strict_degree_one, None);
    top_level_with(&mut s, cfg.algorithm == Algorithm::BkRcd, &sub.r, sub.p.clone(), sub.x.clone(), sink);
    s.counters.recursive_calls
}

enum TaskSink {
    Count(CountingSink),
    Collect(CollectingSink),
}

fn enumerate_inner(g: &CompactGraph, cfg: &EnumConfig, sink: &mut dyn CliqueSink, key: Option<&[u32]>) -> EnumOutcome {
    let red = cfg.reductions;
    let mut counters = Counters::default();

    if cfg.algorithm == Algorithm::BkPivot {
        let t = Instant::now();
        let degeneracy = degeneracy_order(g).degeneracy();
        let ordering = t.elapsed().as_secs_f64();
        let t = Instant::now();
        let p: Vec<u32> = (0..g.n() as u32).filter(|&v| g.degree(v) > 0).collect();
        let mut s = Searcher::new(g, red.dynamic, cfg.strict_degree_one, key);
        if !p.is_empty() {
            counters.top_level_subproblems = 1;
            counters.max_top_level_candidates = p.len();
            s.pivot(&[], p, Vec::new(), sink);
        }
        counters.merge(&s.counters);
        return EnumOutcome {
            counters,
            degeneracy,
            ordering,
            enumeration: t.elapsed().as_secs_f64(),
        };
    }

    let t = Instant::now();
    let order = degeneracy_order(g);
    let ordering = t.elapsed().as_secs_f64();
    let t = Instant::now();
    let rcd = cfg.algorithm == Algorithm::BkRcd;
    let active: Vec<u32> = order.order().iter().copied().filter(|&v| g.degree(v) > 0).collect();
    counters.top_level_subproblems = active.len() as u64;

    if cfg.parallel && !red.xreduce {
        let wants = sink.wants_members();
        let results: Vec<(Counters, TaskSink)> = active
            .par_iter()
            .map_init(
                || (Searcher::new(g, red.dynamic, cfg.strict_degree_one, key), Vec::new(), Vec::new()),
                |(s, x, p), &v| {
                    order.split_neighbors(g, v, x, p);
                    let mut task = if wants {
                        TaskSink::Collect(CollectingSink::new())
                    } else {
                        TaskSink::Count(CountingSink::new())
                    };
                    let mut c = Counters {
                        max_top_level_candidates: p.len(),
                        ..Default::default()
                    };
                    let (pp, xx) = (p.clone(), x.clone());
                    match &mut task {
                        TaskSink::Count(k) => top_level(s, rcd, v, pp, xx, k),
                        TaskSink::Collect(k) => top_level(s, rcd, v, pp, xx, k),
                    }
                    c.merge(&std::mem::take(&mut s.counters));
                    (c, task)
                },
            )
            .collect();
        for (c, task) in results {
            counters.merge(&c);
            match task {
                TaskSink::Count(k) => sink.tally(k.count()),
                TaskSink::Collect(k) => {
                    for cl in k.cliques() {
                        sink.emit(cl);
                    }
                }
            }
        }
    } else {
        let mut s = Searcher::new(g, red.dynamic, cfg.strict_degree_one, key);
        let later = red.xreduce.then(|| LaterNeighbors::new(g, &order));
        let mut ignore = red.xreduce.then(|| IgnoreIndex::new(g.n()));
        let (mut x, mut p) = (Vec::new(), Vec::new());
        for &v in &active {
            order.split_neighbors(g, v, &mut x, &mut p);
            counters.max_top_level_candidates = counters.max_top_level_candidates.max(p.len());
            let xs = match (&later, &mut ignore) {
                (Some(later), Some(idx)) => forbidden_set_reduction(v, &p, &x, idx, &order, later, &mut counters),
                _ => x.clone(),
            };
            top_level(&mut s, rcd, v, p.clone(), xs, sink);
        }
        counters.merge(&s.counters);
    }

    EnumOutcome {
        counters,
        degeneracy: order.degeneracy(),
        ordering,
        enumeration: t.elapsed().as_secs_f64(),
    }
}

fn top_level(s: &mut Searcher<'_>, rcd: bool, v: u32, p: Vec<u32>, x: Vec<u32>, sink: &mut dyn CliqueSink) {
    top_level_with(s, rcd, &[v], p, x, sink)
}

fn top_level_with(s: &mut Searcher<'_>, rcd: bool, r: &[u32], p: Vec<u32>, x: Vec<u32>, sink: &mut dyn CliqueSink) {
    if rcd {
        s.rcd(r, p, x, sink);
    } else {
        s.pivot(r, p, x, sink);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cliques(g: &CompactGraph, cfg: &EnumConfig) -> Vec<Vec<u32>> {
        let mut sink = CollectingSink::new();
        enumerate(g, cfg, &mut sink);
        let mut c = sink.into_cliques();
        c.sort();
        c
    }

    #[test]
    fn reduction_names_round_trip() {
        for r in Reductions::subsets() {
            assert_eq!(r.to_string().parse::<Reductions>().unwrap(), r);
        }
        assert_eq!("all".parse::<Reductions>().unwrap(), Reductions::ALL);
        assert_eq!("global, xreduce".parse::<Reductions>().unwrap().to_string(), "global,xreduce");
        assert!("fast".parse::<Reductions>().is_err());
    }

    #[test]
    fn every_kernel_on_small_graphs() {
        let graphs = [
            CompactGraph::from_edges([(0, 1), (1, 2), (0, 2)]).unwrap(),
            CompactGraph::from_edges([(0, 1), (1, 2), (2, 3)]).unwrap(),
            CompactGraph::from_edges([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap(),
        ];
        let expected = [
            vec![vec![0, 1, 2]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![vec![0, 1, 2], vec![1, 2, 3]],
        ];
        for (g, want) in graphs.iter().zip(&expected) {
            for a in Algorithm::ALL {
                for r in Reductions::subsets() {
                    for parallel in [false, true] {
                        let cfg = EnumConfig {
                            algorithm: a,
                            reductions: r,
                            parallel,
                            ..Default::default()
                        };
                        assert_eq!(&cliques(g, &cfg), want, "{a} {r} parallel={parallel}");
                    }
                }
            }
        }
    }

    #[test]
    fn run_translates_ids_after_reduction() {
        // Triangle 0-1-2 with a pendant 3 and a K4 on 4..8 bridged to 2.
        let mut edges = vec![(0, 1), (1, 2), (0, 2), (2, 3), (2, 4)];
        for u in 4..8u32 {
            for v in u + 1..8 {
                edges.push((u, v));
            }
        }
        let g = EditableGraph::from_edges(edges.clone()).unwrap();
        let mut sink = CollectingSink::new();
        let report = run(g, &EnumConfig::default(), &mut sink);
        let mut got = sink.into_cliques();
        got.sort();
        let mut want = cliques(&CompactGraph::from_edges(edges).unwrap(), &EnumConfig::new(Algorithm::BkPivot, Reductions::NONE));
        want.sort();
        assert_eq!(got, want);
        assert_eq!(report.cliques_total, want.len() as u64);
        assert!(report.cliques_from_global > 0);
    }
}
