//! Properties of minors, reorientations and the orientation predicates.

use modflow::corpus::exhaustive;
use modflow::flows::flow_polynomial;
use modflow::oracles;
use modflow::orient::{
    cycle_reversal_equivalent, cyclic_part, enumerate_reorientations, is_acyclic, is_totally_cyclic,
    reversal_connected, OrientationMode, Reorientation,
};
use modflow::tensions::chromatic_polynomial;
use modflow::{Caps, EdgeKind, EdgeSet, Method, OrientedMultigraph, Rational};
use proptest::prelude::*;

fn small_graph(max_vertices: u32, max_edges: usize) -> impl Strategy<Value = OrientedMultigraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((1..=n, 1..=n), 0..=max_edges)
            .prop_map(move |edges| OrientedMultigraph::from_edge_list(n, &edges).unwrap())
    })
}

fn graph_and_subset(max_vertices: u32, max_edges: usize) -> impl Strategy<Value = (OrientedMultigraph, EdgeSet)> {
    small_graph(max_vertices, max_edges).prop_flat_map(|g| {
        let m = g.num_edges();
        (Just(g), 0..1u64 << m).prop_map(|(g, bits)| {
            let s = g.edge_set_from_bits(bits);
            (g, s)
        })
    })
}

fn sign(e: usize) -> Rational {
    Rational::from_integer(if e % 2 == 0 { 1 } else { -1 }.into())
}

proptest! {
    #[test]
    fn minors_keep_edge_identities((g, s) in graph_and_subset(4, 7)) {
        let rest: EdgeSet = g.edge_set().difference(&s).copied().collect();
        prop_assert_eq!(g.delete(&s).unwrap().edge_set(), rest.clone());
        prop_assert_eq!(g.contract(&s).unwrap().edge_set(), rest);
        prop_assert_eq!(g.restrict(&s).unwrap().edge_set(), s.clone());
        prop_assert_eq!(g.restrict(&s).unwrap().num_vertices(), g.num_vertices());
        prop_assert_eq!(g.reorient(&s).unwrap().reorient(&s).unwrap(), g.clone());
    }

    #[test]
    fn contraction_drops_rank_by_rank_of_subset((g, s) in graph_and_subset(4, 7)) {
        let contracted = g.contract(&s).unwrap();
        prop_assert_eq!(contracted.component_count(), g.component_count());
        prop_assert_eq!(contracted.rank(), g.rank() - g.restrict(&s).unwrap().rank());
    }

    #[test]
    fn component_and_cyclotomic_changes(g in small_graph(4, 7)) {
        for e in g.edge_ids() {
            let del = g.delete_edge(e).unwrap();
            let con = g.contract_edge(e).unwrap();
            match g.classify_edge(e).unwrap() {
                EdgeKind::Ordinary => {
                    prop_assert_eq!(del.component_count(), g.component_count());
                    prop_assert_eq!(con.component_count(), g.component_count());
                    prop_assert_eq!(con.cyclotomic_number(), g.cyclotomic_number());
                    prop_assert_eq!(del.cyclotomic_number() + 1, g.cyclotomic_number());
                }
                EdgeKind::Coloop => {
                    prop_assert_eq!(del.component_count(), g.component_count() + 1);
                    prop_assert_eq!(con.cyclotomic_number(), g.cyclotomic_number());
                }
                EdgeKind::Loop => {
                    prop_assert_eq!(del.cyclotomic_number() + 1, g.cyclotomic_number());
                }
            }
        }
    }

    #[test]
    fn incidence_columns((g, s) in graph_and_subset(4, 7)) {
        let a = g.incidence_matrix();
        let flipped = g.reorient(&s).unwrap().incidence_matrix();
        for (j, e) in g.edge_ids().enumerate() {
            let col = a.column(j);
            prop_assert_eq!(col.iter().sum::<i64>(), 0);
            let expected: Vec<i64> = if s.contains(&e) { col.iter().map(|x| -x).collect() } else { col };
            prop_assert_eq!(flipped.column(j), expected);
        }
        let ones = vec![1; g.num_edges()];
        let net: Vec<i64> = g.indegrees().iter().zip(g.outdegrees()).map(|(i, o)| i - o).collect();
        prop_assert_eq!(a.apply(&ones), net);
    }

    #[test]
    fn predicates_match_reachability(g in small_graph(4, 7)) {
        prop_assert_eq!(is_totally_cyclic(&g), oracles::totally_cyclic(&g));
        prop_assert_eq!(is_acyclic(&g), oracles::acyclic(&g));
        prop_assert_eq!(cyclic_part(&g), oracles::cycle_edges(&g));
    }

    /// A totally cyclic sigma of G projects to G/e, and to G\e exactly
    /// when flipping e keeps it totally cyclic; the lifts go the other way.
    #[test]
    fn projection_and_lifting(g in small_graph(4, 6)) {
        for e in g.edge_ids() {
            if g.classify_edge(e).unwrap() != EdgeKind::Ordinary {
                continue;
            }
            let con = g.contract_edge(e).unwrap();
            let del = g.delete_edge(e).unwrap();
            let single: EdgeSet = [e].into();
            for bits in 0..1u64 << g.num_edges() {
                let sigma = g.edge_set_from_bits(bits);
                let without: EdgeSet = sigma.difference(&single).copied().collect();
                let with_e: EdgeSet = without.union(&single).copied().collect();
                let tc = |h: &OrientedMultigraph, s: &EdgeSet| is_totally_cyclic(&h.reorient(s).unwrap());
                let toggled: EdgeSet = sigma.symmetric_difference(&single).copied().collect();
                if tc(&g, &sigma) {
                    prop_assert!(tc(&con, &without));
                    prop_assert_eq!(tc(&del, &without), tc(&g, &toggled));
                }
                if tc(&con, &without) {
                    prop_assert!(tc(&g, &without) || tc(&g, &with_e));
                }
                if tc(&del, &without) {
                    prop_assert!(tc(&g, &without) && tc(&g, &with_e));
                }
            }
        }
    }
}

#[test]
fn orientation_counts_are_polynomial_values() {
    let caps = Caps::default();
    for g in exhaustive(3, 4) {
        let cyclic = enumerate_reorientations(&g, OrientationMode::TotallyCyclic, &caps).unwrap().len();
        let acyclic = enumerate_reorientations(&g, OrientationMode::Acyclic, &caps).unwrap().len();
        let phi = flow_polynomial(&g, Method::DeletionContraction, &caps).unwrap();
        let chi = chromatic_polynomial(&g);
        let n = |x: usize| Rational::from_integer(x.into());
        assert_eq!(n(cyclic), phi.eval_i64(-1) * sign(g.cyclotomic_number()));
        assert_eq!(n(acyclic), chi.eval_i64(-1) * sign(g.num_vertices()));
    }
}

#[test]
fn cycle_reversals_connect_each_class() {
    let caps = Caps::default();
    for g in exhaustive(3, 4).into_iter().filter(|g| g.num_edges() >= 2) {
        let cyclic = enumerate_reorientations(&g, OrientationMode::TotallyCyclic, &caps).unwrap();
        for a in &cyclic {
            for b in &cyclic {
                let same = cycle_reversal_equivalent(&g, a, b).unwrap();
                assert_eq!(same, reversal_connected(&g, a, b, &caps).unwrap());
            }
        }
    }
}

#[test]
fn in_degree_determines_reversal_class() {
    let caps = Caps::default();
    let g = OrientedMultigraph::from_edge_list(3, &[(1, 2), (2, 3), (2, 3), (3, 1), (3, 1)]).unwrap();
    let cyclic = enumerate_reorientations(&g, OrientationMode::TotallyCyclic, &caps).unwrap();
    for s in &cyclic {
        for t in &cyclic {
            let indeg = |r: &Reorientation| r.apply(&g).unwrap().indegrees();
            assert_eq!(cycle_reversal_equivalent(&g, s, t).unwrap(), indeg(s) == indeg(t));
        }
    }
}
