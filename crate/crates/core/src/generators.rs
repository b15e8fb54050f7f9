//! Seeded random instance generators for the property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clutter::Clutter;
use crate::covers::covering_number_with;
use crate::limits::Limits;
use crate::vertex_set::{minimalize, VertexSet};

pub const DEFAULT_SEED: u64 = 0x5eed_c1a7;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A clutter together with a perfect matching of König type.
#[derive(Debug, Clone)]
pub struct KonigInstance {
    pub clutter: Clutter,
    pub matching: Vec<VertexSet>,
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Splits `0..n` into `g` nonempty blocks at random.
fn random_blocks<R: Rng>(rng: &mut R, n: usize, g: usize) -> Vec<Vec<usize>> {
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let mut blocks: Vec<Vec<usize>> = vertices[..g].iter().map(|&v| vec![v]).collect();
    for &v in &vertices[g..] {
        let k = rng.random_range(0..g);
        blocks[k].push(v);
    }
    blocks
}

fn assemble(n: usize, blocks: &[VertexSet], extra: Vec<VertexSet>) -> Option<KonigInstance> {
    let mut family = blocks.to_vec();
    family.extend(extra);
    let family = minimalize(family);
    if !blocks.iter().all(|b| family.contains(b)) {
        return None;
    }
    let clutter = Clutter::new(labels(n), family).ok()?;
    let g = covering_number_with(&clutter, &Limits::default()).ok()?;
    (g == blocks.len()).then(|| {
        let mut matching = blocks.to_vec();
        crate::vertex_set::sort_canonical(&mut matching);
        KonigInstance { clutter, matching }
    })
}

/// A random clutter on at most `max_n` vertices with a König-type perfect
/// matching: random blocks plus random extra edges comparable with no
/// block, kept only when the covering number equals the block count.
pub fn random_konig_instance<R: Rng>(rng: &mut R, max_n: usize) -> KonigInstance {
    loop {
        let n = rng.random_range(2..=max_n);
        let g = rng.random_range(1..=n.div_ceil(2).max(1));
        let blocks: Vec<VertexSet> = random_blocks(rng, n, g)
            .into_iter()
            .map(|b| VertexSet::from_indices(n, b))
            .collect();
        let extras = rng.random_range(0..=2 * n);
        let mut extra = Vec::new();
        for _ in 0..extras {
            let size = rng.random_range(2..=n.min(4));
            let mut pool: Vec<usize> = (0..n).collect();
            pool.shuffle(rng);
            let e = VertexSet::from_indices(n, pool[..size].iter().copied());
            if blocks.iter().all(|b| !e.is_subset(b) && !b.is_subset(&e)) {
                extra.push(e);
            }
        }
        if let Some(inst) = assemble(n, &blocks, extra) {
            return inst;
        }
    }
}

/// A random clutter satisfying the ordering condition for its matching:
/// each block gets a random vertex order and every extra edge is a union
/// of proper prefixes of at least two blocks.
pub fn random_ordering_instance<R: Rng>(rng: &mut R, max_n: usize) -> KonigInstance {
    loop {
        let n = rng.random_range(2..=max_n);
        let g = rng.random_range(1..=n.div_ceil(2).max(1));
        let blocks = random_blocks(rng, n, g);
        let long: Vec<usize> = (0..g).filter(|&k| blocks[k].len() >= 2).collect();
        let mut extra = Vec::new();
        if long.len() >= 2 {
            for _ in 0..rng.random_range(0..=2 * n) {
                let mut chosen = long.clone();
                chosen.shuffle(rng);
                chosen.truncate(rng.random_range(2..=long.len()));
                let mut e = VertexSet::empty(n);
                for k in chosen {
                    let len = rng.random_range(1..blocks[k].len());
                    for &v in &blocks[k][..len] {
                        e.insert(v);
                    }
                }
                extra.push(e);
            }
        }
        let sets: Vec<VertexSet> = blocks
            .iter()
            .map(|b| VertexSet::from_indices(n, b.iter().copied()))
            .collect();
        if let Some(inst) = assemble(n, &sets, extra) {
            return inst;
        }
    }
}

/// A random bipartite graph on `x1..xg, y1..yg` containing the perfect
/// matching `x_i y_i`. Half of the draws only add edges `x_i y_j` with
/// `i < j` in a hidden random order, so that an h₁-ordering exists.
pub fn random_bipartite_with_perfect_matching<R: Rng>(rng: &mut R, max_n: usize) -> KonigInstance {
    let g = rng.random_range(1..=max_n / 2);
    let n = 2 * g;
    let mut names: Vec<String> = (1..=g).map(|i| format!("x{i}")).collect();
    names.extend((1..=g).map(|i| format!("y{i}")));
    let mut hidden: Vec<usize> = (0..g).collect();
    hidden.shuffle(rng);
    let triangular = rng.random_bool(0.5);
    let density = rng.random_range(0.1..0.6);
    let mut edges: Vec<VertexSet> = (0..g)
        .map(|i| VertexSet::from_indices(n, [i, g + i]))
        .collect();
    for i in 0..g {
        for j in 0..g {
            if i == j || (triangular && hidden[i] >= hidden[j]) {
                continue;
            }
            if rng.random_bool(density) {
                edges.push(VertexSet::from_indices(n, [i, g + j]));
            }
        }
    }
    let matching = edges[..g].to_vec();
    let clutter = Clutter::new(names, edges).expect("distinct two-element edges");
    KonigInstance { clutter, matching }
}

/// A random graph on `1..=max_n` vertices, each pair an edge with
/// probability one half.
pub fn random_graph<R: Rng>(rng: &mut R, max_n: usize) -> Clutter {
    let n = rng.random_range(1..=max_n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(0.5) {
                edges.push(VertexSet::from_indices(n, [u, v]));
            }
        }
    }
    Clutter::new(labels(n), edges).expect("distinct two-element edges")
}

/// A random clutter on `1..=max_n` vertices with up to `max_q` edges.
pub fn random_clutter<R: Rng>(rng: &mut R, max_n: usize, max_q: usize) -> Clutter {
    let n = rng.random_range(1..=max_n);
    let q = rng.random_range(0..=max_q);
    let mut family = Vec::new();
    for _ in 0..q {
        let size = rng.random_range(1..=n.min(4));
        let mut pool: Vec<usize> = (0..n).collect();
        pool.shuffle(rng);
        family.push(VertexSet::from_indices(n, pool[..size].iter().copied()));
    }
    Clutter::new(labels(n), minimalize(family)).expect("minimalized family is a clutter")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::validate_konig;
    use crate::structure::ordering_condition;

    #[test]
    fn generated_matchings_are_konig() {
        let mut r = rng(7);
        for _ in 0..50 {
            let inst = random_konig_instance(&mut r, 10);
            validate_konig(&inst.clutter, &inst.matching).unwrap();
            let inst = random_ordering_instance(&mut r, 10);
            assert!(ordering_condition(&inst.clutter, &inst.matching).unwrap());
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_konig_instance(&mut rng(3), 10);
        let b = random_konig_instance(&mut rng(3), 10);
        assert_eq!(a.clutter, b.clutter);
    }
}
