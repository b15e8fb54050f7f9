//! Brute-force reference implementations used to cross-check the searches.

use crate::clutter::Clutter;
use crate::covers::is_minimal_cover;
use crate::vertex_set::{sort_canonical, VertexSet};

fn from_mask(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Minimal vertex covers by testing all `2^n` subsets.
pub fn covers_by_subset_scan(c: &Clutter) -> Vec<VertexSet> {
    let n = c.n();
    assert!(n <= 24, "subset scan over {n} vertices");
    let mut out: Vec<VertexSet> = (0..1u64 << n)
        .map(|mask| from_mask(n, mask))
        .filter(|s| is_minimal_cover(c, s))
        .collect();
    sort_canonical(&mut out);
    out
}

/// Smallest cover size by testing all `2^n` subsets.
pub fn covering_number_by_subset_scan(c: &Clutter) -> usize {
    covers_by_subset_scan(c)
        .iter()
        .map(VertexSet::len)
        .min()
        .unwrap_or(0)
}

/// Whether all minimal covers found by the subset scan have equal size.
pub fn unmixed_by_subset_scan(c: &Clutter) -> bool {
    let covers = covers_by_subset_scan(c);
    covers.windows(2).all(|w| w[0].len() == w[1].len())
}

/// Edge indices of a maximum matching, the lexicographically smallest among
/// maximum ones, by testing all `2^q` edge subsets.
pub fn max_matching_by_subset_scan(c: &Clutter) -> Vec<usize> {
    let q = c.num_edges();
    assert!(q <= 24, "subset scan over {q} edges");
    let mut best: Vec<usize> = Vec::new();
    for mask in 0..1u64 << q {
        let chosen: Vec<usize> = (0..q).filter(|&i| mask >> i & 1 == 1).collect();
        if chosen.len() < best.len() {
            continue;
        }
        let mut used = c.empty_set();
        let disjoint = chosen.iter().all(|&i| {
            let ok = c.edges()[i].is_disjoint(&used);
            used.union_with(&c.edges()[i]);
            ok
        });
        if disjoint && (chosen.len() > best.len() || chosen < best) {
            best = chosen;
        }
    }
    best
}

/// Whether some `r × r` submatrix of the incidence matrix has exactly two
/// ones in every row and column, by enumerating all row and column subsets.
pub fn cycle_by_submatrix_scan(c: &Clutter, r: usize) -> bool {
    let (n, q) = (c.n(), c.num_edges());
    assert!(n <= 16 && q <= 16, "submatrix scan on a {n} × {q} matrix");
    if r > n || r > q {
        return false;
    }
    let a = c.incidence_matrix();
    let rows: Vec<u32> = (0..1u32 << n)
        .filter(|m| m.count_ones() as usize == r)
        .collect();
    let cols: Vec<u32> = (0..1u32 << q)
        .filter(|m| m.count_ones() as usize == r)
        .collect();
    rows.iter().any(|&rm| {
        cols.iter().any(|&cm| {
            let row_ok = (0..n).filter(|&i| rm >> i & 1 == 1).all(|i| {
                (0..q)
                    .filter(|&j| cm >> j & 1 == 1 && a.entry(i, j) == 1)
                    .count()
                    == 2
            });
            row_ok
                && (0..q).filter(|&j| cm >> j & 1 == 1).all(|j| {
                    (0..n)
                        .filter(|&i| rm >> i & 1 == 1 && a.entry(i, j) == 1)
                        .count()
                        == 2
                })
        })
    })
}

/// Whether some permutation of the facets is a shelling, checking every
/// permutation directly against the definition.
pub fn shellable_by_permutations(facets: &[VertexSet]) -> bool {
    assert!(
        facets.len() <= 8,
        "permutation scan over {} facets",
        facets.len()
    );
    let mut order: Vec<usize> = (0..facets.len()).collect();
    loop {
        let ordered: Vec<&VertexSet> = order.iter().map(|&k| &facets[k]).collect();
        if is_shelling_by_definition(&ordered) {
            return true;
        }
        let Some(i) = (1..order.len()).rev().find(|&i| order[i - 1] < order[i]) else {
            return false;
        };
        let j = (i..order.len())
            .rev()
            .find(|&j| order[j] > order[i - 1])
            .expect("pivot");
        order.swap(i - 1, j);
        order[i..].reverse();
    }
}

fn is_shelling_by_definition(f: &[&VertexSet]) -> bool {
    (0..f.len()).all(|j| {
        (0..j).all(|i| {
            f[j].difference(f[i]).iter().any(|v| {
                (0..j).any(|l| {
                    let d = f[j].difference(f[l]);
                    d.len() == 1 && d.contains(v)
                })
            })
        })
    })
}
