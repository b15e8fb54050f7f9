//! Minimal vertex covers, i.e. the primary decomposition of the edge ideal.

use crate::clutter::Clutter;
use crate::limits::Limits;
use crate::vertex_set::{sort_canonical, VertexSet};
use crate::Result;

/// All inclusion-minimal vertex covers of `c`, in canonical order.
///
/// The edgeless clutter has the single minimal cover `∅`.
pub fn minimal_vertex_covers(c: &Clutter) -> Result<Vec<VertexSet>> {
    minimal_vertex_covers_with(c, &Limits::default())
}

pub fn minimal_vertex_covers_with(c: &Clutter, limits: &Limits) -> Result<Vec<VertexSet>> {
    Limits::check("vertex count", c.n(), limits.max_vertices)?;
    let mut search = CoverSearch {
        edges: c.edges(),
        found: Vec::new(),
    };
    search.branch(c.empty_set(), c.empty_set());
    let mut covers: Vec<VertexSet> = search
        .found
        .into_iter()
        .filter(|s| is_minimal_cover(c, s))
        .collect();
    sort_canonical(&mut covers);
    Ok(covers)
}

/// Size of a smallest vertex cover (the height of the edge ideal).
pub fn covering_number(c: &Clutter) -> Result<usize> {
    covering_number_with(c, &Limits::default())
}

pub fn covering_number_with(c: &Clutter, limits: &Limits) -> Result<usize> {
    Ok(minimal_vertex_covers_with(c, limits)?
        .iter()
        .map(VertexSet::len)
        .min()
        .unwrap_or(0))
}

/// Facets of the Stanley–Reisner complex: complements of the minimal
/// covers, in the same order.
pub fn stanley_reisner_facets(c: &Clutter) -> Result<Vec<VertexSet>> {
    stanley_reisner_facets_with(c, &Limits::default())
}

pub fn stanley_reisner_facets_with(c: &Clutter, limits: &Limits) -> Result<Vec<VertexSet>> {
    Ok(minimal_vertex_covers_with(c, limits)?
        .iter()
        .map(VertexSet::complement)
        .collect())
}

/// Whether every edge meets `s`.
pub fn is_vertex_cover(c: &Clutter, s: &VertexSet) -> bool {
    c.edges().iter().all(|e| e.intersects(s))
}

/// Whether `s` is a cover and no vertex can be dropped from it.
pub fn is_minimal_cover(c: &Clutter, s: &VertexSet) -> bool {
    is_vertex_cover(c, s) && s.iter().all(|v| has_private_edge(c.edges(), s, v))
}

/// Whether all minimal covers have the same size.
pub fn is_unmixed(c: &Clutter) -> Result<bool> {
    is_unmixed_with(c, &Limits::default())
}

pub fn is_unmixed_with(c: &Clutter, limits: &Limits) -> Result<bool> {
    let covers = minimal_vertex_covers_with(c, limits)?;
    Ok(covers.windows(2).all(|w| w[0].len() == w[1].len()))
}

fn has_private_edge(edges: &[VertexSet], s: &VertexSet, v: usize) -> bool {
    edges
        .iter()
        .any(|e| e.contains(v) && e.intersection_len(s) == 1)
}

struct CoverSearch<'a> {
    edges: &'a [VertexSet],
    found: Vec<VertexSet>,
}

impl CoverSearch<'_> {
    /// Branches on an uncovered edge. `forbidden` vertices were excluded by
    /// earlier sibling branches, so each cover is generated at most once.
    fn branch(&mut self, chosen: VertexSet, forbidden: VertexSet) {
        let mut pick: Option<(usize, VertexSet)> = None;
        for e in self.edges {
            if e.intersects(&chosen) {
                continue;
            }
            let open = e.difference(&forbidden);
            let k = open.len();
            if k == 0 {
                return;
            }
            if pick.as_ref().is_none_or(|(best, _)| k < *best) {
                pick = Some((k, open));
            }
        }
        let Some((_, open)) = pick else {
            self.found.push(chosen);
            return;
        };
        let mut forbidden = forbidden;
        for v in &open {
            let next = chosen.with(v);
            // private edges only disappear as the cover grows
            if next.iter().all(|u| has_private_edge(self.edges, &next, u)) {
                self.branch(next, forbidden.clone());
            }
            forbidden.insert(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(n: usize, lists: &[&[usize]]) -> Vec<VertexSet> {
        lists
            .iter()
            .map(|l| VertexSet::from_indices(n, l.iter().copied()))
            .collect()
    }

    #[test]
    fn p4_covers_and_facets() {
        // x1..x4 = 0..3; values frozen from a 2^4 subset scan
        let c = Clutter::from_indices(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        let covers = minimal_vertex_covers(&c).unwrap();
        assert_eq!(covers, sets(4, &[&[0, 2], &[1, 2], &[1, 3]]));
        assert_eq!(covering_number(&c).unwrap(), 2);
        let facets = stanley_reisner_facets(&c).unwrap();
        assert_eq!(facets, sets(4, &[&[1, 3], &[0, 3], &[0, 2]]));
        assert!(is_unmixed(&c).unwrap());
    }

    #[test]
    fn k22_covers() {
        let c = Clutter::from_names(
            &["x1", "x2", "y1", "y2"],
            &[&["x1", "y1"], &["x1", "y2"], &["x2", "y1"], &["x2", "y2"]],
        )
        .unwrap();
        let covers = minimal_vertex_covers(&c).unwrap();
        assert_eq!(covers, sets(4, &[&[0, 1], &[2, 3]]));
        let facets = stanley_reisner_facets(&c).unwrap();
        assert_eq!(facets, sets(4, &[&[2, 3], &[0, 1]]));
    }

    #[test]
    fn single_edge_and_singletons() {
        let c = Clutter::from_indices(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(covering_number(&c).unwrap(), 1);
        let all = Clutter::from_indices(3, &[&[0], &[1], &[2]]).unwrap();
        assert_eq!(
            stanley_reisner_facets(&all).unwrap(),
            vec![VertexSet::empty(3)]
        );
    }

    #[test]
    fn p3_is_mixed() {
        let c = Clutter::from_indices(3, &[&[0, 1], &[1, 2]]).unwrap();
        assert_eq!(
            minimal_vertex_covers(&c).unwrap(),
            sets(3, &[&[1], &[0, 2]])
        );
        assert!(!is_unmixed(&c).unwrap());
    }

    #[test]
    fn edgeless_clutter() {
        let c = Clutter::from_indices(3, &[]).unwrap();
        assert_eq!(
            minimal_vertex_covers(&c).unwrap(),
            vec![VertexSet::empty(3)]
        );
        assert_eq!(covering_number(&c).unwrap(), 0);
        assert_eq!(
            stanley_reisner_facets(&c).unwrap(),
            vec![VertexSet::full(3)]
        );
    }

    #[test]
    fn size_guard_refuses() {
        let c = Clutter::from_indices(30, &[&[0, 29]]).unwrap();
        let err = minimal_vertex_covers(&c).unwrap_err();
        assert!(err.is_size_guard());
        let ok = minimal_vertex_covers_with(&c, &Limits::default().with_max_vertices(30)).unwrap();
        assert_eq!(ok.len(), 2);
    }
}
