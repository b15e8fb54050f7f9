mod common;

use clutterkit::covers::{covering_number, is_unmixed, minimal_vertex_covers};
use clutterkit::minors::{contract, contract_set, intersect_covers, Minor};
use clutterkit::vertex_set::VertexSet;
use clutterkit::Clutter;
use common::{clutter, konig_instance, sorted};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn contract_in_order(c: &Clutter, order: &[usize]) -> Minor {
    let mut current = Minor::Proper(c.clone());
    for &v in order {
        current = match current {
            Minor::Proper(m) => contract(&m, v).unwrap(),
            Minor::Improper => Minor::Improper,
        };
    }
    current
}

proptest! {
    #[test]
    fn contracting_an_isolated_vertex_is_identity(c in clutter(10, 10)) {
        for v in &c.isolated_vertices() {
            prop_assert_eq!(contract(&c, v).unwrap(), Minor::Proper(c.clone()));
        }
    }

    #[test]
    fn contraction_order_is_irrelevant(
        (c, order) in clutter(10, 12).prop_flat_map(|c| {
            let n = c.n();
            (Just(c), subsequence((0..n).collect::<Vec<_>>(), 0..=n).prop_shuffle())
        })
    ) {
        let s = VertexSet::from_indices(c.n(), order.iter().copied());
        prop_assert_eq!(contract_in_order(&c, &order), contract_set(&c, &s).unwrap());
    }

    #[test]
    fn intersecting_covers_keeps_a_konig_matching(inst in konig_instance(10), pick in any::<u64>()) {
        let c = &inst.clutter;
        prop_assume!(is_unmixed(c).unwrap());
        let covers = minimal_vertex_covers(c).unwrap();
        let chosen: Vec<VertexSet> = covers
            .iter()
            .enumerate()
            .filter(|(k, _)| pick >> (k % 64) & 1 == 1)
            .map(|(_, s)| s.clone())
            .collect();
        prop_assume!(!chosen.is_empty());
        let reduced = intersect_covers(c, &chosen).unwrap();
        let isolated = reduced.isolated_vertices();
        let mut union = reduced.empty_set();
        for e in &inst.matching {
            let shrunk = e.difference(&isolated);
            prop_assert!(reduced.contains_edge(&shrunk), "{} not an edge", reduced.format_set(&shrunk));
            union.union_with(&shrunk);
        }
        prop_assert_eq!(union, reduced.universe().difference(&isolated));
        prop_assert_eq!(covering_number(&reduced).unwrap(), inst.matching.len());
    }

    #[test]
    fn covers_through_a_vertex_give_a_contraction(inst in konig_instance(10), pick in any::<usize>()) {
        let c = &inst.clutter;
        prop_assume!(is_unmixed(c).unwrap());
        let e = &inst.matching[pick % inst.matching.len()];
        let members = e.to_vec();
        let x = members[(pick / 7) % members.len()];
        let through: Vec<VertexSet> = minimal_vertex_covers(c)
            .unwrap()
            .into_iter()
            .filter(|s| s.contains(x))
            .collect();
        let reduced = intersect_covers(c, &through).unwrap();
        let contracted = contract_set(c, &e.without(x)).unwrap().into_proper().unwrap();
        prop_assert_eq!(sorted(reduced.edges().to_vec()), sorted(contracted.edges().to_vec()));
    }
}
