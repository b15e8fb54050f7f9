#![allow(dead_code)]

use clutterkit::generators::{self, KonigInstance};
use clutterkit::vertex_set::{minimalize, VertexSet};
use clutterkit::Clutter;
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

pub fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Clutters on `1..=max_n` vertices built from up to `max_q` random sets.
pub fn clutter(max_n: usize, max_q: usize) -> impl Strategy<Value = Clutter> {
    (1..=max_n)
        .prop_flat_map(move |n| (Just(n), vec(btree_set(0..n, 1..=n.min(4)), 0..=max_q)))
        .prop_map(|(n, family)| {
            let sets = family
                .into_iter()
                .map(|s| VertexSet::from_indices(n, s))
                .collect();
            Clutter::new(labels(n), minimalize(sets)).unwrap()
        })
}

/// Clutters with at least one edge.
pub fn nonempty_clutter(max_n: usize, max_q: usize) -> impl Strategy<Value = Clutter> {
    clutter(max_n, max_q).prop_filter("has an edge", |c| c.num_edges() > 0)
}

/// Antichains of at most `max_f` sets on `max_n` vertices.
pub fn facets(max_n: usize, max_f: usize) -> impl Strategy<Value = Vec<VertexSet>> {
    clutter(max_n, max_f).prop_map(|c| c.edges().to_vec())
}

pub fn konig_instance(max_n: usize) -> impl Strategy<Value = KonigInstance> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = generators::rng(seed);
        if seed % 2 == 0 {
            generators::random_konig_instance(&mut rng, max_n)
        } else {
            generators::random_ordering_instance(&mut rng, max_n)
        }
    })
}

pub fn ordering_instance(max_n: usize) -> impl Strategy<Value = KonigInstance> {
    any::<u64>().prop_map(move |seed| {
        generators::random_ordering_instance(&mut generators::rng(seed), max_n)
    })
}

pub fn bipartite_instance(max_n: usize) -> impl Strategy<Value = KonigInstance> {
    any::<u64>().prop_map(move |seed| {
        generators::random_bipartite_with_perfect_matching(&mut generators::rng(seed), max_n)
    })
}

pub fn sorted(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    clutterkit::vertex_set::sort_canonical(&mut sets);
    sets
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u32 << n).map(move |m| VertexSet::from_indices(n, (0..n).filter(|&v| m >> v & 1 == 1)))
}
