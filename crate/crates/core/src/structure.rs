//! Unmixedness criteria, the ordering condition, cycles of the incidence
//! matrix, and free vertices of matching edges.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::clutter::Clutter;
use crate::limits::Limits;
use crate::matching::{for_each_konig_matching, validate_konig_with, validate_perfect, Matching};
use crate::minors::free_vertices;
use crate::monomial::Monomial;
use crate::vertex_set::VertexSet;
use crate::Result;

pub use crate::covers::{is_unmixed, is_unmixed_with};

/// The equivalent reformulations of unmixedness available once a perfect
/// matching of König type is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `(e∖{x}) ∪ (e′∖{y})` contains an edge for distinct `x ∈ e`, `y ∈ e′`
    /// lying in a common matching edge.
    B,
    /// `supp(x_e x_e′ / x_T)` contains an edge for every `T ⊆ e_i` dividing
    /// the product.
    C,
    /// `(x_e x_e′ : x_{e_i}) ⊆ I` for all `e ≠ e′` and `e_i`.
    D,
    /// `I = (I² : x_{e_1}) + ⋯ + (I² : x_{e_g})`.
    E,
}

/// Evaluates one condition for `c` under the König-type matching `m`.
pub fn check_unmixed_condition(c: &Clutter, m: &[VertexSet], which: Condition) -> Result<bool> {
    check_unmixed_condition_with(c, m, which, &Limits::default())
}

pub fn check_unmixed_condition_with(
    c: &Clutter,
    m: &[VertexSet],
    which: Condition,
    limits: &Limits,
) -> Result<bool> {
    validate_konig_with(c, m, limits)?;
    Ok(evaluate(c, m, which))
}

fn evaluate(c: &Clutter, m: &[VertexSet], which: Condition) -> bool {
    match which {
        Condition::B => condition_b(c, m),
        Condition::C => condition_c(c, m),
        Condition::D => condition_d(c, m),
        Condition::E => condition_e(c, m),
    }
}

fn distinct_pairs(c: &Clutter) -> impl Iterator<Item = (&VertexSet, &VertexSet)> {
    let edges = c.edges();
    (0..edges.len()).flat_map(move |i| (i + 1..edges.len()).map(move |j| (&edges[i], &edges[j])))
}

fn condition_b(c: &Clutter, m: &[VertexSet]) -> bool {
    distinct_pairs(c).all(|(e, f)| {
        m.iter().all(|ei| {
            let xs = e.intersection(ei);
            let ys = f.intersection(ei);
            xs.iter().all(|x| {
                ys.iter()
                    .filter(|&y| y != x)
                    .all(|y| c.contains_edge(&e.without(x).union(&f.without(y))))
            })
        })
    })
}

fn condition_c(c: &Clutter, m: &[VertexSet]) -> bool {
    distinct_pairs(c).all(|(e, f)| {
        let product = Monomial::product(e, f);
        m.iter().all(|ei| {
            ei.intersection(product.support())
                .subsets()
                .filter(|t| !t.is_empty())
                .all(|t| c.contains_edge(product.colon(&t).support()))
        })
    })
}

fn condition_d(c: &Clutter, m: &[VertexSet]) -> bool {
    distinct_pairs(c).all(|(e, f)| {
        let product = Monomial::product(e, f);
        m.iter()
            .all(|ei| c.contains_edge(product.colon(ei).support()))
    })
}

fn condition_e(c: &Clutter, m: &[VertexSet]) -> bool {
    let edges = c.edges();
    let mut sum = Vec::new();
    for i in 0..edges.len() {
        for j in i..edges.len() {
            let product = Monomial::product(&edges[i], &edges[j]);
            for ei in m {
                sum.push(product.colon(ei));
            }
        }
    }
    let sum_in_i = sum.iter().all(|h| c.contains_edge(h.support()));
    let i_in_sum = edges.iter().all(|f| sum.iter().any(|h| h.divides(f)));
    sum_in_i && i_in_sum
}

/// All five formulations evaluated side by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theorem25Report {
    pub unmixed: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
}

impl Theorem25Report {
    pub fn all_agree(&self) -> bool {
        [self.b, self.c, self.d, self.e]
            .iter()
            .all(|&v| v == self.unmixed)
    }
}

pub fn theorem25_equivalence_report(c: &Clutter, m: &[VertexSet]) -> Result<Theorem25Report> {
    theorem25_equivalence_report_with(c, m, &Limits::default())
}

pub fn theorem25_equivalence_report_with(
    c: &Clutter,
    m: &[VertexSet],
    limits: &Limits,
) -> Result<Theorem25Report> {
    validate_konig_with(c, m, limits)?;
    Ok(Theorem25Report {
        unmixed: is_unmixed_with(c, limits)?,
        b: evaluate(c, m, Condition::B),
        c: evaluate(c, m, Condition::C),
        d: evaluate(c, m, Condition::D),
        e: evaluate(c, m, Condition::E),
    })
}

/// Whether `f₁ ∩ e_i` and `f₂ ∩ e_i` are comparable for all edges and all
/// matching edges.
pub fn ordering_condition(c: &Clutter, m: &[VertexSet]) -> Result<bool> {
    ordering_condition_with(c, m, &Limits::default())
}

pub fn ordering_condition_with(c: &Clutter, m: &[VertexSet], limits: &Limits) -> Result<bool> {
    validate_konig_with(c, m, limits)?;
    Ok(ordering_holds(c, m))
}

pub(crate) fn ordering_holds(c: &Clutter, m: &[VertexSet]) -> bool {
    m.iter().all(|ei| {
        let traces: Vec<VertexSet> = c.edges().iter().map(|f| f.intersection(ei)).collect();
        traces.iter().enumerate().all(|(i, a)| {
            traces[i + 1..]
                .iter()
                .all(|b| a.is_subset(b) || b.is_subset(a))
        })
    })
}

/// Whether every edge of the perfect matching `m` contains a free vertex.
pub fn matching_edges_have_free_vertex(c: &Clutter, m: &[VertexSet]) -> Result<bool> {
    validate_perfect(c, m)?;
    Ok(free_vertex_in_each(c, m))
}

fn free_vertex_in_each(c: &Clutter, m: &[VertexSet]) -> bool {
    let free = free_vertices(c);
    m.iter().all(|e| e.intersects(&free))
}

/// A König-type perfect matching whose edges all have free vertices and
/// which satisfies the ordering condition, if one exists.
pub fn char_tbc_condition_b(c: &Clutter) -> Result<Option<Matching>> {
    char_tbc_condition_b_with(c, &Limits::default())
}

pub fn char_tbc_condition_b_with(c: &Clutter, limits: &Limits) -> Result<Option<Matching>> {
    let mut found = None;
    for_each_konig_matching(c, limits, |m| {
        if free_vertex_in_each(c, m.edges()) && ordering_holds(c, m.edges()) {
            found = Some(m);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// Rows and columns of a square incidence submatrix with exactly two ones
/// in each row and column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// An induced cycle of the vertex/edge incidence graph, with `half`
/// vertices and `half` edges.
#[derive(Debug, Clone)]
struct InducedCycle {
    nodes: VertexSet,
    closed: VertexSet,
    half: usize,
}

/// The bipartite incidence graph: nodes `0..n` are vertices, `n..n+q` edges.
struct IncidenceGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl IncidenceGraph {
    fn new(c: &Clutter) -> Self {
        let n = c.n();
        let total = n + c.num_edges();
        let mut adj = vec![VertexSet::empty(total); total];
        for (j, e) in c.edges().iter().enumerate() {
            for v in e {
                adj[v].insert(n + j);
                adj[n + j].insert(v);
            }
        }
        IncidenceGraph { n, adj }
    }

    /// Every chordless cycle, each reported once.
    fn induced_cycles(&self) -> Vec<InducedCycle> {
        let total = self.adj.len();
        let mut out = Vec::new();
        for s in 0..total {
            if self.adj[s].len() < 2 {
                continue;
            }
            let mut path = vec![s];
            let mut on_path = VertexSet::empty(total).with(s);
            self.extend(s, &mut path, &mut on_path, &mut out);
        }
        out
    }

    // `path` is an induced path starting at its smallest node `s`
    fn extend(
        &self,
        s: usize,
        path: &mut Vec<usize>,
        on_path: &mut VertexSet,
        out: &mut Vec<InducedCycle>,
    ) {
        let last = *path.last().expect("path starts nonempty");
        let interior = on_path.without(s).without(last);
        for w in &self.adj[last] {
            if w <= s || on_path.contains(w) || self.adj[w].len() < 2 {
                continue;
            }
            if self.adj[w].intersects(&interior) {
                continue;
            }
            if path.len() >= 3 && self.adj[w].contains(s) {
                // closing; each cycle is met in both directions
                if path[1] < w {
                    let nodes = on_path.with(w);
                    let mut closed = nodes.clone();
                    for u in &nodes {
                        closed.union_with(&self.adj[u]);
                    }
                    let half = path.len().div_ceil(2);
                    out.push(InducedCycle {
                        nodes,
                        closed,
                        half,
                    });
                }
                continue;
            }
            path.push(w);
            on_path.insert(w);
            self.extend(s, path, on_path, out);
            on_path.remove(w);
            path.pop();
        }
    }

    fn witness(&self, chosen: &[&InducedCycle]) -> CycleWitness {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for cyc in chosen {
            for u in &cyc.nodes {
                if u < self.n {
                    vertices.push(u);
                } else {
                    edges.push(u - self.n);
                }
            }
        }
        vertices.sort_unstable();
        edges.sort_unstable();
        CycleWitness { vertices, edges }
    }
}

fn check_cycle_limits(c: &Clutter, limits: &Limits) -> Result<()> {
    Limits::check("vertex count", c.n(), limits.max_vertices)?;
    Limits::check("edge count", c.num_edges(), limits.max_edges)
}

/// A cycle of length exactly `r`, if the incidence matrix has one.
///
/// Such a submatrix is a union of chordless cycles of the incidence graph
/// with no edges between them, so the search combines chordless cycles
/// whose sizes add up to `r`.
pub fn find_cycle_of_length(c: &Clutter, r: usize) -> Result<Option<CycleWitness>> {
    find_cycle_of_length_with(c, r, &Limits::default())
}

pub fn find_cycle_of_length_with(
    c: &Clutter,
    r: usize,
    limits: &Limits,
) -> Result<Option<CycleWitness>> {
    check_cycle_limits(c, limits)?;
    if r < 3 || r > c.n().min(c.num_edges()) {
        return Ok(None);
    }
    let graph = IncidenceGraph::new(c);
    let cycles = graph.induced_cycles();
    let mut chosen = Vec::new();
    if combine(&cycles, 0, r, &mut chosen) {
        return Ok(Some(graph.witness(&chosen)));
    }
    Ok(None)
}

fn combine<'a>(
    cycles: &'a [InducedCycle],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<&'a InducedCycle>,
) -> bool {
    if remaining == 0 {
        return true;
    }
    for (i, cyc) in cycles.iter().enumerate().skip(start) {
        if cyc.half > remaining || chosen.iter().any(|d| d.closed.intersects(&cyc.nodes)) {
            continue;
        }
        chosen.push(cyc);
        if combine(cycles, i + 1, remaining - cyc.half, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn has_cycle_of_length(c: &Clutter, r: usize) -> Result<bool> {
    Ok(find_cycle_of_length(c, r)?.is_some())
}

/// No cycle of odd length. Any odd cycle contains a chordless one of odd
/// length, so only single chordless cycles need checking.
pub fn is_balanced(c: &Clutter) -> Result<bool> {
    is_balanced_with(c, &Limits::default())
}

pub fn is_balanced_with(c: &Clutter, limits: &Limits) -> Result<bool> {
    check_cycle_limits(c, limits)?;
    let cycles = IncidenceGraph::new(c).induced_cycles();
    Ok(cycles.iter().all(|cyc| cyc.half % 2 == 0))
}

/// No cycle of any length `r ≥ 3`.
pub fn is_totally_balanced(c: &Clutter) -> Result<bool> {
    is_totally_balanced_with(c, &Limits::default())
}

pub fn is_totally_balanced_with(c: &Clutter, limits: &Limits) -> Result<bool> {
    check_cycle_limits(c, limits)?;
    let cycles = IncidenceGraph::new(c).induced_cycles();
    if cycles.iter().any(|cyc| cyc.half >= 3) {
        return Ok(false);
    }
    // two separated squares together form a cycle of length 4
    for (i, a) in cycles.iter().enumerate() {
        if cycles[i + 1..]
            .iter()
            .any(|b| !a.closed.intersects(&b.nodes))
        {
            return Ok(false);
        }
    }
    Ok(true)
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

    fn c4() -> Clutter {
        Clutter::from_indices(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]).unwrap()
    }

    fn k3() -> Clutter {
        Clutter::from_indices(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap()
    }

    #[test]
    fn condition_b_examples() {
        let m = [set(4, &[0, 1]), set(4, &[2, 3])];
        assert!(check_unmixed_condition(&p4(), &m, Condition::B).unwrap());
        assert!(check_unmixed_condition(&c4(), &m, Condition::B).unwrap());
        let gap = Clutter::from_names(
            &["x1", "y1", "y2", "z2"],
            &[&["x1", "y1"], &["y2", "z2"], &["y1", "z2"], &["x1", "y2"]],
        )
        .unwrap();
        let m = [set(4, &[0, 1]), set(4, &[2, 3])];
        assert!(check_unmixed_condition(&gap, &m, Condition::B).unwrap());
    }

    #[test]
    fn report_on_p4_and_single_edge() {
        let m = [set(4, &[0, 1]), set(4, &[2, 3])];
        let r = theorem25_equivalence_report(&p4(), &m).unwrap();
        assert!(r.unmixed && r.b && r.c && r.d && r.e);
        let single = Clutter::from_indices(3, &[&[0, 1, 2]]).unwrap();
        let r = theorem25_equivalence_report(&single, &[set(3, &[0, 1, 2])]).unwrap();
        assert!(r.all_agree() && r.unmixed);
    }

    #[test]
    fn report_on_mixed_instance() {
        // path x1x2, x2x3, x3x4, x4x5, x5x6: matching {x1x2, x3x4, x5x6}, mixed
        let c = Clutter::from_indices(6, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5]]).unwrap();
        let m = [set(6, &[0, 1]), set(6, &[2, 3]), set(6, &[4, 5])];
        let r = theorem25_equivalence_report(&c, &m).unwrap();
        assert!(!r.unmixed);
        assert!(r.all_agree());
    }

    #[test]
    fn report_requires_konig_matching() {
        assert!(theorem25_equivalence_report(&p4(), &[set(4, &[0, 1])]).is_err());
    }

    #[test]
    fn ordering_examples() {
        let m = [set(4, &[0, 1]), set(4, &[2, 3])];
        assert!(ordering_condition(&p4(), &m).unwrap());
        // x1=0, x2=1, y1=2, y2=3
        let k22 = Clutter::from_indices(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]).unwrap();
        let m = [set(4, &[0, 2]), set(4, &[1, 3])];
        assert!(!ordering_condition(&k22, &m).unwrap());
        assert!(!matching_edges_have_free_vertex(&k22, &m).unwrap());
        assert!(char_tbc_condition_b(&k22).unwrap().is_none());
    }

    #[test]
    fn free_vertex_and_char_tbc_on_p4() {
        let m = [set(4, &[0, 1]), set(4, &[2, 3])];
        assert!(matching_edges_have_free_vertex(&p4(), &m).unwrap());
        let w = char_tbc_condition_b(&p4()).unwrap().unwrap();
        assert_eq!(w.edges(), &m);
    }

    #[test]
    fn cycle_examples() {
        assert!(has_cycle_of_length(&k3(), 3).unwrap());
        for r in 3..=4 {
            assert!(!has_cycle_of_length(&p4(), r).unwrap());
        }
        assert!(has_cycle_of_length(&c4(), 4).unwrap());
        assert!(!has_cycle_of_length(&c4(), 3).unwrap());
        assert!(is_balanced(&c4()).unwrap());
        assert!(!is_totally_balanced(&c4()).unwrap());
        assert!(is_balanced(&p4()).unwrap() && is_totally_balanced(&p4()).unwrap());
        assert!(!is_balanced(&k3()).unwrap());
    }

    #[test]
    fn separated_squares_form_a_cycle() {
        // {a,b,c},{a,b,d} and {e,f,g},{e,f,h}: each pair shares two vertices
        let c =
            Clutter::from_indices(8, &[&[0, 1, 2], &[0, 1, 3], &[4, 5, 6], &[4, 5, 7]]).unwrap();
        assert!(!has_cycle_of_length(&c, 3).unwrap());
        let w = find_cycle_of_length(&c, 4).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 4, 5]);
        assert!(is_balanced(&c).unwrap());
        assert!(!is_totally_balanced(&c).unwrap());
        let one = Clutter::from_indices(4, &[&[0, 1, 2], &[0, 1, 3]]).unwrap();
        assert!(is_totally_balanced(&one).unwrap());
    }

    #[test]
    fn whisker_style_clutter_has_long_cycles_only_when_present() {
        // C6 graph: only a cycle of length 6
        let c6 = Clutter::from_indices(6, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]])
            .unwrap();
        assert!(has_cycle_of_length(&c6, 6).unwrap());
        assert!(!has_cycle_of_length(&c6, 4).unwrap());
        assert!(is_balanced(&c6).unwrap());
    }
}
