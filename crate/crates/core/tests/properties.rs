use std::sync::OnceLock;

use proptest::prelude::*;

use welldom::corpus::{all_graphs_up_to_iso, connected_graphs_in_range};
use welldom::domination::oracle::brute_force_domination_number;
use welldom::domination::{
    domination_number, enumerate_maximal_independent_sets, enumerate_minimal_dominating_sets,
    find_open_irredundant_gamma_set, independence_number, is_minimal_dominating, is_open_irredundant,
    is_well_covered, is_well_dominated,
};
use welldom::harness::reduction_mismatch;
use welldom::{cartesian_product, is_isomorphic, Graph, VertexSet};

fn graphs_to_six() -> &'static Vec<Graph> {
    static CACHE: OnceLock<Vec<Graph>> = OnceLock::new();
    CACHE.get_or_init(|| (1..=6).flat_map(|n| all_graphs_up_to_iso(n).unwrap()).collect())
}

#[test]
fn maximal_independent_sets_are_minimal_dominating() {
    for g in graphs_to_six() {
        for s in enumerate_maximal_independent_sets(g).unwrap() {
            assert!(is_minimal_dominating(g, s).unwrap());
        }
    }
}

#[test]
fn well_dominated_implies_well_covered() {
    let mut wd = 0;
    for g in graphs_to_six() {
        if is_well_dominated(g).unwrap().verdict {
            wd += 1;
            assert!(is_well_covered(g).unwrap().verdict);
        }
    }
    assert!(wd > 0);
}

#[test]
fn extremes_of_the_enumeration_are_gamma_and_alpha() {
    for g in graphs_to_six() {
        let min = enumerate_minimal_dominating_sets(g).unwrap().map(|s| s.len()).min().unwrap();
        assert_eq!(min, domination_number(g).unwrap());
        let max = enumerate_maximal_independent_sets(g).unwrap().map(|s| s.len()).max().unwrap();
        assert_eq!(max, independence_number(g).unwrap());
    }
}

#[test]
fn open_irredundant_gamma_sets_exist_on_connected_graphs() {
    for g in connected_graphs_in_range(2, 6).unwrap() {
        let d = find_open_irredundant_gamma_set(&g).unwrap();
        assert_eq!(d.len(), brute_force_domination_number(&g).unwrap());
        assert!(is_minimal_dominating(&g, d).unwrap() && is_open_irredundant(&g, d).unwrap());
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn enumerated_sets_are_distinct_and_minimal(g in arb_graph(10)) {
        let mut sets: Vec<VertexSet> = enumerate_minimal_dominating_sets(&g).unwrap().collect();
        prop_assert!(sets.iter().all(|&s| is_minimal_dominating(&g, s).unwrap()));
        let n = sets.len();
        sets.sort();
        sets.dedup();
        prop_assert_eq!(sets.len(), n);
    }

    #[test]
    fn refutation_witnesses_replay(g in arb_graph(10)) {
        let r = is_well_dominated(&g).unwrap();
        match r.witnesses() {
            Some((a, b)) => {
                prop_assert!(!r.verdict && a.len() < b.len());
                prop_assert!(is_minimal_dominating(&g, a).unwrap() && is_minimal_dominating(&g, b).unwrap());
            }
            None => prop_assert_eq!(r.common_size, Some(domination_number(&g).unwrap())),
        }
    }

    #[test]
    fn product_verdict_is_symmetric(g in arb_graph(4), h in arb_graph(4)) {
        let (a, _) = cartesian_product(&g, &h).unwrap();
        let (b, _) = cartesian_product(&h, &g).unwrap();
        if a.order() <= 10 {
            prop_assert!(is_isomorphic(&a, &b).unwrap());
        }
        prop_assert_eq!(is_well_dominated(&a).unwrap().verdict, is_well_dominated(&b).unwrap().verdict);
        prop_assert_eq!(domination_number(&a).unwrap(), domination_number(&b).unwrap());
    }

    #[test]
    fn residual_product_identity(g in arb_graph(5), h in arb_graph(5)) {
        let (p, map) = cartesian_product(&g, &h).unwrap();
        for a in enumerate_maximal_independent_sets(&g).unwrap() {
            for b in enumerate_maximal_independent_sets(&h).unwrap() {
                prop_assert_eq!(reduction_mismatch(&g, &h, &p, &map, a, b).unwrap(), None);
            }
        }
    }

    #[test]
    fn residuals_of_well_dominated_graphs(pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let wd: Vec<&Graph> = graphs_to_six().iter().filter(|g| is_well_dominated(g).unwrap().verdict).collect();
        let g = pick.get(&wd);
        // A pseudo-random independent set, grown greedily.
        let mut i = VertexSet::EMPTY;
        for v in 0..g.order() {
            if seed >> v & 1 == 1 && !g.open_neighborhood(v).unwrap().intersects(i) {
                i.insert(v);
            }
        }
        let (r, _) = g.remove_closed_neighborhood(i).unwrap();
        if r.order() > 0 {
            prop_assert!(is_well_dominated(&r).unwrap().verdict);
        }
    }
}
