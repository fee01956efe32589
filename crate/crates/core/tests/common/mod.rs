#![allow(dead_code)]

use rmce::io::gen_random;
use rmce::oracle::{brute_force_mce, CliqueSet};
use rmce::{compact, run, Algorithm, CollectingSink, CompactGraph, DeadVertices, EditableGraph, EnumConfig, Reductions};

pub const CORPUS_PROBABILITIES: [f64; 4] = [0.05, 0.1, 0.3, 0.6];

/// One seeded random graph of the test corpus.
pub struct CorpusGraph {
    pub seed: u64,
    pub n: usize,
    pub p: f64,
    pub graph: EditableGraph,
}

impl CorpusGraph {
    pub fn frozen(&self) -> CompactGraph {
        compact(&self.graph, DeadVertices::KeepIds)
    }

    pub fn label(&self) -> String {
        format!("G({}, {}, seed {})", self.n, self.p, self.seed)
    }
}

/// `count` graphs with n cycling through 1..=60 and p through the four
/// corpus densities.
pub fn corpus(count: u64) -> Vec<CorpusGraph> {
    (0..count)
        .map(|seed| {
            let n = 1 + (seed as usize * 37) % 60;
            let p = CORPUS_PROBABILITIES[seed as usize % 4];
            CorpusGraph {
                seed,
                n,
                p,
                graph: gen_random(n, p, seed).expect("valid parameters"),
            }
        })
        .collect()
}

pub fn configs() -> Vec<EnumConfig> {
    let mut out = Vec::new();
    for a in Algorithm::ALL {
        for r in Reductions::subsets() {
            out.push(EnumConfig::new(a, r));
        }
    }
    out
}

pub fn engine_cliques(g: &EditableGraph, cfg: &EnumConfig) -> CliqueSet {
    let mut sink = CollectingSink::new();
    run(g.clone(), cfg, &mut sink);
    let list = sink.into_cliques();
    let n = list.len();
    let set: CliqueSet = list.into_iter().collect();
    assert_eq!(set.len(), n, "duplicate cliques under {cfg:?}");
    set
}

pub fn oracle_cliques(g: &EditableGraph) -> CliqueSet {
    brute_force_mce(&compact(g, DeadVertices::KeepIds)).expect("corpus graphs fit the oracle")
}

/// Complete multipartite graph with `parts` parts of three vertices.
pub fn moon_moser(parts: u32) -> EditableGraph {
    let n = 3 * parts;
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |v| u / 3 != v / 3).map(move |v| (u, v)));
    EditableGraph::from_edges_with_n(n as usize, edges).unwrap().0
}

pub fn complete(k: u32) -> EditableGraph {
    let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
    EditableGraph::from_edges_with_n(k as usize, edges).unwrap().0
}
