mod common;

use std::collections::BTreeSet;

use common::{complete, configs, engine_cliques, moon_moser, oracle_cliques};
use proptest::prelude::*;
use rmce::dynamic::{dynamic_reduce, DynamicScratch};
use rmce::graph::setops::intersect_sorted;
use rmce::io::gen_random;
use rmce::{
    compact, enumerate_subproblem, Algorithm, CollectingSink, CompactGraph, DeadVertices, EditableGraph, EnumConfig,
    CliqueSink, CountingSink, Reductions, Subproblem,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = EditableGraph> {
    (1..=max_n, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| gen_random(n, p, seed).unwrap())
}

/// Subproblem rooted at `v` of an ascending-id order: R = {v}, P = later
/// neighbors, X = earlier ones.
fn vertex_subproblem(g: &CompactGraph, v: u32) -> Subproblem {
    let (x, p): (Vec<u32>, Vec<u32>) = g.neighbors(v).iter().partition(|&&u| u < v);
    Subproblem::new(vec![v], p, x)
}

fn solve(g: &CompactGraph, sub: &Subproblem, cfg: &EnumConfig) -> BTreeSet<Vec<u32>> {
    let mut sink = CollectingSink::new();
    enumerate_subproblem(g, sub, cfg, &mut sink);
    sink.into_cliques().into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_configuration_matches_reference(g in arb_graph(40), strict in any::<bool>()) {
        let truth = oracle_cliques(&g);
        for cfg in configs() {
            let cfg = EnumConfig { strict_degree_one: strict, ..cfg };
            prop_assert_eq!(&engine_cliques(&g, &cfg), &truth, "{:?}", cfg);
        }
    }

    #[test]
    fn parallel_output_equals_sequential(g in arb_graph(50), a in 0usize..3, r in 0usize..8) {
        let cfg = EnumConfig::new(Algorithm::ALL[a], Reductions::subsets()[r]);
        let mut seq = CollectingSink::new();
        rmce::run(g.clone(), &cfg, &mut seq);
        let mut par = CollectingSink::new();
        rmce::run(g, &EnumConfig { parallel: true, ..cfg }, &mut par);
        prop_assert_eq!(seq.cliques(), par.cliques());
    }

    #[test]
    fn dynamic_reduction_conserves_subproblem_output(g in arb_graph(30), pick in any::<u32>(), strict in any::<bool>()) {
        let g = compact(&g, DeadVertices::KeepIds);
        let v = pick % g.n() as u32;
        prop_assume!(g.degree(v) > 0);
        let sub = vertex_subproblem(&g, v);
        let plain = EnumConfig::new(Algorithm::BkDegen, Reductions::NONE);
        let want = solve(&g, &sub, &plain);

        let mut reduced = sub.clone();
        let mut sink = CollectingSink::new();
        let mut scratch = DynamicScratch::new(g.n());
        dynamic_reduce(&g, &mut reduced, &mut sink, &mut scratch, strict);
        reduced.r.sort_unstable();
        prop_assert!(reduced.check(&g).is_ok());
        let mut got: BTreeSet<Vec<u32>> = sink.into_cliques().into_iter().collect();
        if reduced.p.is_empty() {
            if reduced.x.is_empty() {
                got.insert(reduced.r.clone());
            }
        } else {
            got.extend(solve(&g, &reduced, &plain));
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn dominated_forbidden_vertex_can_be_dropped(g in arb_graph(30), pick in any::<u32>(), rcd in any::<bool>()) {
        let g = compact(&g, DeadVertices::KeepIds);
        let v = pick % g.n() as u32;
        prop_assume!(g.degree(v) > 0);
        let sub = vertex_subproblem(&g, v);
        let alg = if rcd { Algorithm::BkRcd } else { Algorithm::BkDegen };
        let cfg = EnumConfig::new(alg, Reductions::NONE);
        let want = solve(&g, &sub, &cfg);
        for &u in &sub.x {
            let nu = intersect_sorted(g.neighbors(u), &sub.p);
            let dominated = sub.x.iter().any(|&w| w != u && intersect_sorted(&nu, g.neighbors(w)).len() == nu.len());
            if dominated {
                let mut pruned = sub.clone();
                pruned.x.retain(|&w| w != u);
                prop_assert_eq!(&solve(&g, &pruned, &cfg), &want);
            }
        }
    }

    #[test]
    fn reductions_never_add_calls(g in arb_graph(45)) {
        for alg in [Algorithm::BkDegen, Algorithm::BkRcd] {
            let mut a = CountingSink::new();
            let all = rmce::run(g.clone(), &EnumConfig::new(alg, Reductions::ALL), &mut a).recursive_calls;
            let mut b = CountingSink::new();
            let none = rmce::run(g.clone(), &EnumConfig::new(alg, Reductions::NONE), &mut b).recursive_calls;
            prop_assert!(all <= none, "{alg}: {all} > {none}");
            prop_assert_eq!(a.count(), b.count());
        }
    }
}

#[test]
fn moon_moser_counts() {
    for (k, want) in [(3, 27), (4, 81), (5, 243)] {
        let g = moon_moser(k);
        for cfg in configs() {
            assert_eq!(engine_cliques(&g, &cfg).len(), want, "{cfg:?}");
        }
    }
}

#[test]
fn complete_graph_is_one_clique() {
    for k in 2..9 {
        let g = complete(k);
        let want: BTreeSet<Vec<u32>> = [(0..k).collect()].into_iter().collect();
        for cfg in configs() {
            assert_eq!(engine_cliques(&g, &cfg), want);
        }
    }
}

#[test]
fn isolated_vertices_and_empty_graphs() {
    let empty = EditableGraph::from_edges_with_n(0, []).unwrap().0;
    let isolated = EditableGraph::from_edges_with_n(5, [(3, 4)]).unwrap().0;
    for cfg in configs() {
        assert!(engine_cliques(&empty, &cfg).is_empty());
        assert_eq!(engine_cliques(&isolated, &cfg), [vec![3, 4]].into_iter().collect());
    }
}

#[test]
fn deep_recursion_does_not_overflow() {
    let k = 1500;
    let g = complete(k);
    for alg in Algorithm::ALL {
        let mut sink = CountingSink::new();
        rmce::run(g.clone(), &EnumConfig::new(alg, Reductions::NONE), &mut sink);
        assert_eq!(sink.count(), 1);
    }
}
