//! Maximum matchings, the König property, and perfect matchings of König type.

use std::ops::ControlFlow;

use crate::clutter::Clutter;
use crate::covers::covering_number_with;
use crate::limits::Limits;
use crate::vertex_set::{sort_canonical, VertexSet};
use crate::{Error, Result};

/// Pairwise disjoint edges of a host clutter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<VertexSet>,
    perfect: bool,
    konig_type: bool,
}

impl Matching {
    /// Classifies `edges` against `c`. `covering_number` is the height of
    /// the edge ideal of `c`.
    pub fn classify(c: &Clutter, edges: Vec<VertexSet>, covering_number: usize) -> Result<Self> {
        let mut union = c.empty_set();
        for e in &edges {
            if !c.is_edge(e) {
                return Err(Error::NotPerfectMatching(format!(
                    "{} is not an edge",
                    c.format_set(e)
                )));
            }
            if union.intersects(e) {
                return Err(Error::NotPerfectMatching(format!(
                    "{} overlaps an earlier matching edge",
                    c.format_set(e)
                )));
            }
            union.union_with(e);
        }
        let perfect = union.len() == c.n();
        let konig_type = perfect && edges.len() == covering_number;
        Ok(Matching {
            edges,
            perfect,
            konig_type,
        })
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<VertexSet> {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        self.perfect
    }

    pub fn is_konig_type(&self) -> bool {
        self.konig_type
    }
}

/// Checks that `edges` form a perfect matching of `c`.
pub fn validate_perfect(c: &Clutter, edges: &[VertexSet]) -> Result<Matching> {
    // the covering number is irrelevant here; pass a value that cannot match
    let m = Matching::classify(c, edges.to_vec(), usize::MAX)?;
    if !m.perfect {
        return Err(Error::NotPerfectMatching(
            "the edges do not cover every vertex".into(),
        ));
    }
    Ok(m)
}

/// Checks that `edges` form a perfect matching of König type of `c`.
pub fn validate_konig(c: &Clutter, edges: &[VertexSet]) -> Result<Matching> {
    validate_konig_with(c, edges, &Limits::default())
}

pub fn validate_konig_with(c: &Clutter, edges: &[VertexSet], limits: &Limits) -> Result<Matching> {
    let g = covering_number_with(c, limits)?;
    let m =
        Matching::classify(c, edges.to_vec(), g).map_err(|e| Error::NotKonigType(e.to_string()))?;
    if !m.perfect {
        return Err(Error::NotKonigType(
            "the edges do not cover every vertex".into(),
        ));
    }
    if !m.konig_type {
        return Err(Error::NotKonigType(format!(
            "{} edges but the covering number is {g}",
            m.len()
        )));
    }
    Ok(m)
}

/// A maximum set of pairwise disjoint edges. Among maximum matchings the
/// lexicographically smallest sequence of edge indices is returned.
pub fn maximum_edge_matching(c: &Clutter) -> Result<Matching> {
    maximum_edge_matching_with(c, &Limits::default())
}

pub fn maximum_edge_matching_with(c: &Clutter, limits: &Limits) -> Result<Matching> {
    Limits::check("edge count", c.num_edges(), limits.max_edges)?;
    let g = covering_number_with(c, limits)?;
    let edges = c.edges();
    let min_size = edges.iter().map(VertexSet::len).min().unwrap_or(1);
    let mut search = MaxMatching {
        edges,
        n: c.n(),
        min_size,
        best: Vec::new(),
        chosen: Vec::new(),
    };
    search.run(0, &c.empty_set());
    let chosen = search.best.iter().map(|&i| edges[i].clone()).collect();
    Matching::classify(c, chosen, g)
}

struct MaxMatching<'a> {
    edges: &'a [VertexSet],
    n: usize,
    min_size: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl MaxMatching<'_> {
    // preorder over increasing index sequences is lexicographic, so keeping
    // only strict improvements yields the smallest sequence of maximum length
    fn run(&mut self, start: usize, used: &VertexSet) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let free = self.n - used.len();
        let bound = self.chosen.len() + (self.edges.len() - start).min(free / self.min_size);
        if bound <= self.best.len() {
            return;
        }
        for i in start..self.edges.len() {
            if self.edges[i].is_disjoint(used) {
                self.chosen.push(i);
                self.run(i + 1, &used.union(&self.edges[i]));
                self.chosen.pop();
            }
        }
    }
}

/// True iff the maximum number of pairwise disjoint edges equals the
/// covering number.
pub fn has_konig_property(c: &Clutter) -> Result<bool> {
    has_konig_property_with(c, &Limits::default())
}

pub fn has_konig_property_with(c: &Clutter, limits: &Limits) -> Result<bool> {
    let m = maximum_edge_matching_with(c, limits)?;
    Ok(m.len() == covering_number_with(c, limits)?)
}

/// Some perfect matching of König type, found by exhaustive search.
pub fn find_perfect_matching_konig(c: &Clutter) -> Result<Option<Matching>> {
    find_perfect_matching_konig_with(c, &Limits::default())
}

pub fn find_perfect_matching_konig_with(c: &Clutter, limits: &Limits) -> Result<Option<Matching>> {
    let mut found = None;
    for_each_konig_matching(c, limits, |m| {
        found = Some(m);
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// All perfect matchings of König type, each in canonical edge order.
pub fn konig_perfect_matchings(c: &Clutter) -> Result<Vec<Matching>> {
    let mut all = Vec::new();
    for_each_konig_matching(c, &Limits::default(), |m| {
        all.push(m);
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

/// Visits every perfect matching of König type until `visit` breaks.
pub fn for_each_konig_matching<F>(c: &Clutter, limits: &Limits, mut visit: F) -> Result<()>
where
    F: FnMut(Matching) -> ControlFlow<()>,
{
    Limits::check("edge count", c.num_edges(), limits.max_edges)?;
    let g = covering_number_with(c, limits)?;
    if c.has_isolated_vertices() {
        return Ok(());
    }
    let mut chosen = Vec::new();
    let _ = perfect_search(
        c,
        g,
        &c.empty_set(),
        &mut chosen,
        &mut |edges: &[usize]| {
            let mut sets: Vec<VertexSet> = edges.iter().map(|&i| c.edges()[i].clone()).collect();
            sort_canonical(&mut sets);
            visit(Matching {
                edges: sets,
                perfect: true,
                konig_type: true,
            })
        },
    );
    Ok(())
}

/// Every perfect matching of `c` (of any size), as canonical edge lists.
pub fn perfect_matchings(c: &Clutter) -> Vec<Vec<VertexSet>> {
    let mut all = Vec::new();
    let mut chosen = Vec::new();
    let _ = perfect_search(
        c,
        usize::MAX,
        &c.empty_set(),
        &mut chosen,
        &mut |edges: &[usize]| {
            let mut sets: Vec<VertexSet> = edges.iter().map(|&i| c.edges()[i].clone()).collect();
            sort_canonical(&mut sets);
            all.push(sets);
            ControlFlow::Continue(())
        },
    );
    all
}

/// Branches on the edges through the smallest uncovered vertex. Only
/// matchings with exactly `target` edges are reported (`usize::MAX` = any).
fn perfect_search(
    c: &Clutter,
    target: usize,
    used: &VertexSet,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let Some(v) = used.complement().first() else {
        if target == usize::MAX || chosen.len() == target {
            return visit(chosen);
        }
        return ControlFlow::Continue(());
    };
    if target != usize::MAX && chosen.len() >= target {
        return ControlFlow::Continue(());
    }
    for (i, e) in c.edges().iter().enumerate() {
        if e.contains(v) && e.is_disjoint(used) {
            chosen.push(i);
            let r = perfect_search(c, target, &used.union(e), chosen, visit);
            chosen.pop();
            r?;
        }
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied())
    }

    fn p4() -> Clutter {
        Clutter::from_indices(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap()
    }

    #[test]
    fn p4_maximum_matching() {
        let m = maximum_edge_matching(&p4()).unwrap();
        assert_eq!(m.edges(), &[set(4, &[0, 1]), set(4, &[2, 3])]);
        assert!(m.is_perfect() && m.is_konig_type());
        assert!(has_konig_property(&p4()).unwrap());
        let k = find_perfect_matching_konig(&p4()).unwrap().unwrap();
        assert_eq!(k.edges(), m.edges());
    }

    #[test]
    fn triangle_lacks_konig_property() {
        let k3 = Clutter::from_indices(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        assert_eq!(maximum_edge_matching(&k3).unwrap().len(), 1);
        assert!(!has_konig_property(&k3).unwrap());
    }

    #[test]
    fn single_edge() {
        let c = Clutter::from_indices(2, &[&[0, 1]]).unwrap();
        let m = maximum_edge_matching(&c).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m.is_konig_type());
    }

    #[test]
    fn complete_admissible_2_2_has_konig_matching() {
        // x1=0, x2=1, y1=2, y2=3
        let c = Clutter::from_indices(4, &[&[0, 2], &[1, 3], &[0, 3]]).unwrap();
        let m = find_perfect_matching_konig(&c).unwrap().unwrap();
        assert_eq!(m.edges(), &[set(4, &[0, 2]), set(4, &[1, 3])]);
    }

    #[test]
    fn validation_errors() {
        let c = p4();
        assert!(matches!(
            validate_konig(&c, &[set(4, &[0, 1])]),
            Err(Error::NotKonigType(_))
        ));
        assert!(validate_konig(&c, &[set(4, &[0, 1]), set(4, &[1, 2])]).is_err());
        assert!(validate_konig(&c, &[set(4, &[0, 2]), set(4, &[1, 3])]).is_err());
        assert!(validate_perfect(&c, &[set(4, &[0, 1]), set(4, &[2, 3])]).is_ok());
    }

    #[test]
    fn perfect_matching_not_of_konig_type() {
        // edges {a,b,c}, {d}, {a,d}? not a clutter; use a path with a long edge:
        // {0,1},{2,3},{1,2}: perfect matching {0,1},{2,3} is König (g = 2)
        // {0,1,2},{2,3},{3,4},{4,5}: covering number 2, perfect matching
        // {0,1,2},{3,4}? misses 5; {0,1,2},{4,5} misses 3 -> none
        let c = Clutter::from_indices(6, &[&[0, 1, 2], &[2, 3], &[3, 4], &[4, 5]]).unwrap();
        assert!(perfect_matchings(&c).is_empty());
        assert!(find_perfect_matching_konig(&c).unwrap().is_none());
    }
}
