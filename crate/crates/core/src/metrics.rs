//! Run counters and the serialized run report.
//!
//! Counters are owned by one worker and merged when a run finishes; nothing on
//! the search hot path touches shared state. Vertex visits are only recorded
//! when metrics are enabled.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::global::ReductionLedger;

/// Per-worker event counters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    /// Entries into the recursion procedure, top-level entries included.
    pub recursive_calls: u64,
    /// Cliques reported at recursion leaves.
    pub recursion_cliques: u64,
    /// Cliques reported by in-recursion reduction rules.
    pub dynamic_cliques: u64,
    pub dynamic_removed: u64,
    pub dynamic_hoisted: u64,
    /// Top-level (per-vertex) subproblems started.
    pub top_level_subproblems: u64,
    /// Largest top-level candidate set seen.
    pub max_top_level_candidates: usize,
    /// Σ|X| and Σ|X'| over subproblems where forbidden-set reduction ran.
    pub forbidden_before: u64,
    pub forbidden_after: u64,
    pub forbidden_subproblems: u64,
    pub forbidden_pruned_subproblems: u64,
    /// `visits[d]`: how often a vertex of original degree `d` was placed in
    /// the P or X of a new subproblem.
    pub visits: Vec<u64>,
}

impl Counters {
    pub fn merge(&mut self, other: &Counters) {
        self.recursive_calls += other.recursive_calls;
        self.recursion_cliques += other.recursion_cliques;
        self.dynamic_cliques += other.dynamic_cliques;
        self.dynamic_removed += other.dynamic_removed;
        self.dynamic_hoisted += other.dynamic_hoisted;
        self.top_level_subproblems += other.top_level_subproblems;
        self.max_top_level_candidates = self.max_top_level_candidates.max(other.max_top_level_candidates);
        self.forbidden_before += other.forbidden_before;
        self.forbidden_after += other.forbidden_after;
        self.forbidden_subproblems += other.forbidden_subproblems;
        self.forbidden_pruned_subproblems += other.forbidden_pruned_subproblems;
        if self.visits.len() < other.visits.len() {
            self.visits.resize(other.visits.len(), 0);
        }
        for (a, b) in self.visits.iter_mut().zip(&other.visits) {
            *a += b;
        }
    }

    #[inline]
    pub(crate) fn visit(&mut self, degree: u32) {
        let d = degree as usize;
        if d >= self.visits.len() {
            self.visits.resize(d + 1, 0);
        }
        self.visits[d] += 1;
    }
}

/// Wall time per phase, in seconds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseTimings {
    pub global_reduction: f64,
    pub ordering: f64,
    pub enumeration: f64,
    pub total: f64,
}

/// Sizes of the graph before and after global reduction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphShape {
    pub n: usize,
    pub m: usize,
    pub reduced_n: usize,
    pub reduced_m: usize,
    pub degeneracy: usize,
    pub max_degree: usize,
}

/// Everything a finished run reports.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub algorithm: String,
    pub reductions: String,
    pub graph: GraphShape,
    pub recursive_calls: u64,
    pub cliques_total: u64,
    /// Cliques reported by global plus in-recursion reduction rules.
    pub cliques_from_reductions: u64,
    pub cliques_from_global: u64,
    pub cliques_from_dynamic: u64,
    pub deleted_vertex_ratio: f64,
    pub deleted_edge_ratio: f64,
    /// Σ|X'| / Σ|X| over top-level subproblems (0 when the reduction is off).
    pub r_vertex: f64,
    /// Share of top-level subproblems whose forbidden set shrank.
    pub r_subproblem: f64,
    pub top_level_subproblems: u64,
    pub max_top_level_candidates: usize,
    pub dynamic_removed: u64,
    pub dynamic_hoisted: u64,
    pub ledger: ReductionLedger,
    /// Original degree → number of visits.
    pub visit_histogram: BTreeMap<u32, u64>,
    pub timings: PhaseTimings,
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// Assembles a report from a finished run's pieces.
pub fn snapshot(
    algorithm: &str,
    reductions: &str,
    counters: &Counters,
    ledger: &ReductionLedger,
    graph: GraphShape,
    timings: PhaseTimings,
) -> RunReport {
    let visit_histogram = counters
        .visits
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(d, &c)| (d as u32, c))
        .collect();
    RunReport {
        algorithm: algorithm.to_string(),
        reductions: reductions.to_string(),
        graph,
        recursive_calls: counters.recursive_calls,
        cliques_total: ledger.cliques_emitted + counters.dynamic_cliques + counters.recursion_cliques,
        cliques_from_reductions: ledger.cliques_emitted + counters.dynamic_cliques,
        cliques_from_global: ledger.cliques_emitted,
        cliques_from_dynamic: counters.dynamic_cliques,
        deleted_vertex_ratio: ratio(ledger.deleted_vertices, graph.n as u64),
        deleted_edge_ratio: ratio(ledger.deleted_edges, graph.m as u64),
        r_vertex: ratio(counters.forbidden_after, counters.forbidden_before),
        r_subproblem: ratio(counters.forbidden_pruned_subproblems, counters.forbidden_subproblems),
        top_level_subproblems: counters.top_level_subproblems,
        max_top_level_candidates: counters.max_top_level_candidates,
        dynamic_removed: counters.dynamic_removed,
        dynamic_hoisted: counters.dynamic_hoisted,
        ledger: *ledger,
        visit_histogram,
        timings,
    }
}

impl RunReport {
    /// Pretty JSON with fields in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Total visits across all degrees.
    pub fn total_visits(&self) -> u64 {
        self.visit_histogram.values().sum()
    }

    /// Two-column human-readable rendering.
    pub fn render_table(&self) -> String {
        let rows: Vec<(&str, String)> = vec![
            ("algorithm", self.algorithm.clone()),
            ("reductions", self.reductions.clone()),
            ("vertices", self.graph.n.to_string()),
            ("edges", self.graph.m.to_string()),
            ("reduced vertices", self.graph.reduced_n.to_string()),
            ("reduced edges", self.graph.reduced_m.to_string()),
            ("degeneracy", self.graph.degeneracy.to_string()),
            ("max degree", self.graph.max_degree.to_string()),
            ("maximal cliques", self.cliques_total.to_string()),
            ("  from global reduction", self.cliques_from_global.to_string()),
            ("  from dynamic reduction", self.cliques_from_dynamic.to_string()),
            ("recursive calls", self.recursive_calls.to_string()),
            ("deleted vertex ratio", format!("{:.4}", self.deleted_vertex_ratio)),
            ("deleted edge ratio", format!("{:.4}", self.deleted_edge_ratio)),
            ("r_vertex", format!("{:.4}", self.r_vertex)),
            ("r_subproblem", format!("{:.4}", self.r_subproblem)),
            ("vertex visits", self.total_visits().to_string()),
            ("time total (s)", format!("{:.6}", self.timings.total)),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}
