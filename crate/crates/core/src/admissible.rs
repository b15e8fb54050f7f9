//! Admissible sets and clutters, lexicographic shellings of complete
//! admissible uniform clutters, Alexander duality, and linear quotients.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::clutter::Clutter;
use crate::covers::minimal_vertex_covers_with;
use crate::limits::Limits;
use crate::matching::for_each_konig_matching;
use crate::shelling::{ShellingOrder, Witness};
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// Which definition of admissible set to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Classes met are exactly `X¹..X^k`.
    #[default]
    Strict,
    /// Classes met are increasing but may skip.
    Relaxed,
}

/// Color classes `X¹..X^d` and matching edges `e₁..e_g`, two partitions of
/// the same universe with `|e_i ∩ X^j| ≤ 1`. Indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleStructure {
    classes: Vec<VertexSet>,
    matching: Vec<VertexSet>,
    class_of: Vec<usize>,
    edge_of: Vec<usize>,
}

fn partition_index(n: usize, parts: &[VertexSet], what: &str) -> Result<Vec<usize>> {
    let mut index = vec![usize::MAX; n];
    for (k, part) in parts.iter().enumerate() {
        if part.capacity() != n {
            return Err(Error::InvalidStructure(format!(
                "{what} {} has the wrong capacity",
                k + 1
            )));
        }
        if part.is_empty() {
            return Err(Error::InvalidStructure(format!(
                "{what} {} is empty",
                k + 1
            )));
        }
        for v in part {
            if index[v] != usize::MAX {
                return Err(Error::InvalidStructure(format!(
                    "vertex {v} lies in two {what}s"
                )));
            }
            index[v] = k;
        }
    }
    if let Some(v) = index.iter().position(|&k| k == usize::MAX) {
        return Err(Error::InvalidStructure(format!(
            "vertex {v} lies in no {what}"
        )));
    }
    Ok(index)
}

impl AdmissibleStructure {
    pub fn new(n: usize, classes: Vec<VertexSet>, matching: Vec<VertexSet>) -> Result<Self> {
        let class_of = partition_index(n, &classes, "class")?;
        let edge_of = partition_index(n, &matching, "matching edge")?;
        for (i, e) in matching.iter().enumerate() {
            for (j, x) in classes.iter().enumerate() {
                if e.intersection_len(x) > 1 {
                    return Err(Error::InvalidStructure(format!(
                        "matching edge {} meets class {} twice",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(AdmissibleStructure {
            classes,
            matching,
            class_of,
            edge_of,
        })
    }

    /// The `d × g` grid: vertex `(i−1)·g + (j−1)` lies in class `i` and
    /// matching edge `j`.
    pub fn grid(g: usize, d: usize) -> Self {
        let n = g * d;
        let classes = (0..d)
            .map(|i| VertexSet::from_indices(n, (0..g).map(|j| i * g + j)))
            .collect();
        let matching = (0..g)
            .map(|j| VertexSet::from_indices(n, (0..d).map(|i| i * g + j)))
            .collect();
        AdmissibleStructure::new(n, classes, matching).expect("the grid is a valid structure")
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn matching(&self) -> &[VertexSet] {
        &self.matching
    }

    pub fn d(&self) -> usize {
        self.classes.len()
    }

    pub fn g(&self) -> usize {
        self.matching.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn matching_of(&self, v: usize) -> usize {
        self.edge_of[v]
    }

    /// The same partitions with the roles of classes and matching exchanged.
    pub fn swapped(&self) -> Result<Self> {
        AdmissibleStructure::new(self.n(), self.matching.clone(), self.classes.clone())
    }

    /// Members of `s` listed by increasing class, or the first class met twice.
    fn by_class(&self, s: &VertexSet) -> Result<Vec<usize>> {
        let mut members = s.to_vec();
        members.sort_by_key(|&v| self.class_of[v]);
        for w in members.windows(2) {
            if self.class_of[w[0]] == self.class_of[w[1]] {
                return Err(Error::ClassCollision {
                    class: self.class_of[w[0]] + 1,
                });
            }
        }
        Ok(members)
    }
}

/// Whether `s` is admissible. Fails if `s` meets some class twice.
pub fn is_admissible_set(a: &AdmissibleStructure, s: &VertexSet, mode: Mode) -> Result<bool> {
    if s.capacity() != a.n() {
        return Err(Error::Malformed(
            "set capacity does not match the structure".into(),
        ));
    }
    let members = a.by_class(s)?;
    let classes_ok = match mode {
        Mode::Strict => members.iter().enumerate().all(|(k, &v)| a.class_of(v) == k),
        Mode::Relaxed => true,
    };
    let indices_ok = members
        .windows(2)
        .all(|w| a.matching_of(w[0]) <= a.matching_of(w[1]));
    Ok(classes_ok && indices_ok)
}

/// The complete admissible clutter: maximal admissible sets containing no
/// matching edge, together with the matching edges.
pub fn generate_complete_admissible(
    labels: Vec<String>,
    a: &AdmissibleStructure,
    mode: Mode,
) -> Result<Clutter> {
    generate_complete_admissible_with(labels, a, mode, &Limits::default())
}

pub fn generate_complete_admissible_with(
    labels: Vec<String>,
    a: &AdmissibleStructure,
    mode: Mode,
    limits: &Limits,
) -> Result<Clutter> {
    if labels.len() != a.n() {
        return Err(Error::InvalidStructure(format!(
            "{} labels for {} vertices",
            labels.len(),
            a.n()
        )));
    }
    for e in a.matching() {
        if !is_admissible_set(a, e, mode)? {
            return Err(Error::MatchingEdgeNotAdmissible(
                crate::clutter::format_set(&labels, e),
            ));
        }
    }
    let mut gen = Generator {
        a,
        mode,
        limit: limits.max_generated_edges,
        edges: a.matching().to_vec(),
    };
    gen.extend(&VertexSet::empty(a.n()), None, None)?;
    Clutter::new(labels, gen.edges)
}

struct Generator<'a> {
    a: &'a AdmissibleStructure,
    mode: Mode,
    limit: usize,
    edges: Vec<VertexSet>,
}

impl Generator<'_> {
    /// Candidates that may follow a set whose last member has class
    /// `class` and matching index `index`.
    fn successors(&self, class: Option<usize>, index: Option<usize>) -> Vec<usize> {
        let next = class.map_or(0, |k| k + 1);
        let classes = match self.mode {
            Mode::Strict => next..(next + 1).min(self.a.d()),
            Mode::Relaxed => next..self.a.d(),
        };
        let mut out = Vec::new();
        for k in classes {
            for v in &self.a.classes()[k] {
                if index.is_none_or(|j| self.a.matching_of(v) >= j) {
                    out.push(v);
                }
            }
        }
        out
    }

    fn is_maximal(&self, s: &VertexSet) -> bool {
        (0..self.a.n()).filter(|&v| !s.contains(v)).all(|v| {
            // a vertex in an occupied class can never be added
            matches!(
                is_admissible_set(self.a, &s.with(v), self.mode),
                Ok(false) | Err(_)
            )
        })
    }

    fn extend(&mut self, s: &VertexSet, class: Option<usize>, index: Option<usize>) -> Result<()> {
        if self.a.matching().iter().any(|e| e.is_subset(s)) {
            return Ok(());
        }
        let next = self.successors(class, index);
        if !s.is_empty() && self.is_maximal(s) {
            Limits::check("generated edge count", self.edges.len() + 1, self.limit)?;
            self.edges.push(s.clone());
            return Ok(());
        }
        for v in next {
            let t = s.with(v);
            self.extend(&t, Some(self.a.class_of(v)), Some(self.a.matching_of(v)))?;
        }
        Ok(())
    }
}

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Vertex labels `x{i}_{j}` of the `d × g` grid.
pub fn grid_labels(g: usize, d: usize) -> Vec<String> {
    (1..=d)
        .flat_map(|i| (1..=g).map(move |j| format!("x{i}_{j}")))
        .collect()
}

/// The complete admissible uniform clutter on the `d × g` grid.
pub fn generate_complete_admissible_uniform(
    g: usize,
    d: usize,
) -> Result<(Clutter, AdmissibleStructure)> {
    generate_complete_admissible_uniform_with(g, d, &Limits::default())
}

pub fn generate_complete_admissible_uniform_with(
    g: usize,
    d: usize,
    limits: &Limits,
) -> Result<(Clutter, AdmissibleStructure)> {
    if g == 0 || d == 0 {
        return Err(Error::InvalidStructure("g and d must be at least 1".into()));
    }
    let expected = binomial(d + g - 1, g - 1).unwrap_or(usize::MAX);
    Limits::check("generated edge count", expected, limits.max_generated_edges)?;
    let a = AdmissibleStructure::grid(g, d);
    let c = generate_complete_admissible_with(grid_labels(g, d), &a, Mode::Strict, limits)?;
    if c.num_edges() != expected || !c.is_uniform() {
        return Err(Error::Construction(format!(
            "grid ({g}, {d}) produced {} edges, expected {expected}",
            c.num_edges()
        )));
    }
    Ok((c, a))
}

/// Whether `c` is the complete admissible uniform clutter of `a`.
pub fn is_complete_admissible_uniform(c: &Clutter, a: &AdmissibleStructure) -> Result<bool> {
    if c.n() != a.n() || c.edges().iter().any(|e| e.len() != a.d()) {
        return Ok(false);
    }
    if a.matching().iter().any(|e| e.len() != a.d()) {
        return Ok(false);
    }
    let regenerated = match generate_complete_admissible(c.labels().to_vec(), a, Mode::Strict) {
        Ok(r) => r,
        Err(Error::MatchingEdgeNotAdmissible(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(regenerated.edges() == c.edges())
}

/// Lexicographic order of the edges by their matching-index vectors, with
/// the witnesses from the exchange argument: for `F_i < F_j` first
/// differing in class `t`, `F_j` loses its class-`t` vertex to the one of
/// `F_i`.
pub fn lex_shelling(c: &Clutter, a: &AdmissibleStructure) -> Result<ShellingOrder> {
    if !is_complete_admissible_uniform(c, a)? {
        return Err(Error::NotCompleteAdmissibleUniform);
    }
    let vector = |e: &VertexSet| -> Vec<usize> {
        let mut members = e.to_vec();
        members.sort_by_key(|&v| a.class_of(v));
        members.iter().map(|&v| a.matching_of(v)).collect()
    };
    let mut keyed: Vec<(Vec<usize>, VertexSet)> =
        c.edges().iter().map(|e| (vector(e), e.clone())).collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    let position: std::collections::HashMap<&VertexSet, usize> =
        keyed.iter().enumerate().map(|(k, (_, e))| (e, k)).collect();
    let member_in = |e: &VertexSet, class: usize| -> usize {
        e.intersection(&a.classes()[class])
            .first()
            .expect("uniform edges meet every class")
    };
    let mut witnesses = Vec::with_capacity(keyed.len());
    for (j, (vj, fj)) in keyed.iter().enumerate() {
        let mut row = Vec::with_capacity(j);
        for (vi, fi) in &keyed[..j] {
            let t = (0..a.d())
                .find(|&t| vi[t] != vj[t])
                .expect("distinct edges have distinct vectors");
            let v = member_in(fj, t);
            let swapped = fj.without(v).with(member_in(fi, t));
            let &l = position.get(&swapped).ok_or_else(|| {
                Error::Construction(format!(
                    "exchange {} is not an edge",
                    c.format_set(&swapped)
                ))
            })?;
            row.push(Witness {
                vertex: v,
                facet: l,
            });
        }
        witnesses.push(row);
    }
    let facets = keyed.into_iter().map(|(_, e)| e).collect();
    ShellingOrder::with_witnesses(facets, witnesses)
}

/// The blocker: the clutter whose edges are the minimal vertex covers.
pub fn alexander_dual(c: &Clutter) -> Result<Clutter> {
    alexander_dual_with(c, &Limits::default())
}

pub fn alexander_dual_with(c: &Clutter, limits: &Limits) -> Result<Clutter> {
    if c.num_edges() == 0 {
        return Err(Error::UnitDual);
    }
    Ok(c.with_edges(minimal_vertex_covers_with(c, limits)?))
}

/// Supports `X ∖ e` of the generators of the dual ideal, in edge order.
/// The list is not minimalized.
pub fn dual_ideal_generators(c: &Clutter) -> Vec<VertexSet> {
    c.edges().iter().map(VertexSet::complement).collect()
}

/// Whether each colon `(g_1, …, g_{i−1}) : g_i` is generated by variables,
/// for the generators in the given order.
pub fn is_linear_quotient_order(gens: &[VertexSet]) -> bool {
    (1..gens.len()).all(|i| {
        let placed = VertexSet::from_indices(gens.len(), 0..i);
        colon_is_linear(gens, &placed, i)
    })
}

fn colon_is_linear(gens: &[VertexSet], placed: &VertexSet, i: usize) -> bool {
    let gi = &gens[i];
    let linear: Vec<VertexSet> = placed
        .iter()
        .map(|k| gens[k].difference(gi))
        .filter(|d| d.len() == 1)
        .collect();
    placed.iter().all(|j| {
        let dj = gens[j].difference(gi);
        linear.iter().any(|v| v.is_subset(&dj))
    })
}

/// An order of `gens` with linear quotients, as indices into `gens`.
pub fn has_linear_quotients(gens: &[VertexSet]) -> Result<Option<Vec<usize>>> {
    has_linear_quotients_with(gens, &Limits::default())
}

pub fn has_linear_quotients_with(
    gens: &[VertexSet],
    limits: &Limits,
) -> Result<Option<Vec<usize>>> {
    Limits::check("generator count", gens.len(), limits.max_generators)?;
    let mut seen = HashSet::new();
    for g in gens {
        if !seen.insert(g) {
            return Err(Error::DuplicateGenerator(format!("{g:?}")));
        }
    }
    let mut search = QuotientSearch {
        gens,
        dead: HashSet::new(),
        order: Vec::new(),
    };
    if search.run(&VertexSet::empty(gens.len())) {
        Ok(Some(search.order))
    } else {
        Ok(None)
    }
}

struct QuotientSearch<'a> {
    gens: &'a [VertexSet],
    dead: HashSet<VertexSet>,
    order: Vec<usize>,
}

impl QuotientSearch<'_> {
    fn run(&mut self, placed: &VertexSet) -> bool {
        if placed.len() == self.gens.len() {
            return true;
        }
        if self.dead.contains(placed) {
            return false;
        }
        for i in 0..self.gens.len() {
            if placed.contains(i) || !colon_is_linear(self.gens, placed, i) {
                continue;
            }
            self.order.push(i);
            if self.run(&placed.with(i)) {
                return true;
            }
            self.order.pop();
        }
        self.dead.insert(placed.clone());
        false
    }
}

/// Searches for classes and an order of some König-type perfect matching
/// that make `c` an admissible uniform clutter.
///
/// For each matching order the classes are found by backtracking with
/// forward checking: inside an edge, a vertex from an earlier matching edge
/// needs a smaller class than one from a later matching edge, and all
/// classes in an edge are distinct.
pub fn find_admissible_uniform_structure(c: &Clutter) -> Result<Option<AdmissibleStructure>> {
    find_admissible_uniform_structure_with(c, &Limits::default())
}

pub fn find_admissible_uniform_structure_with(
    c: &Clutter,
    limits: &Limits,
) -> Result<Option<AdmissibleStructure>> {
    if c.num_edges() == 0 || !c.is_uniform() {
        return Ok(None);
    }
    let d = c.edges()[0].len();
    if d > 32 {
        return Err(Error::SizeGuard {
            what: "edge size for class assignment",
            value: d,
            limit: 32,
        });
    }
    let mut found = None;
    let mut failure = None;
    for_each_konig_matching(c, limits, |m| {
        let g = m.len();
        if g > 8 {
            failure = Some(Error::SizeGuard {
                what: "matching size for order enumeration",
                value: g,
                limit: 8,
            });
            return ControlFlow::Break(());
        }
        let mut order: Vec<usize> = (0..g).collect();
        loop {
            if let Some(a) = assign_classes(c, m.edges(), &order, d) {
                found = Some(a);
                return ControlFlow::Break(());
            }
            if !next_permutation(&mut order) {
                return ControlFlow::Continue(());
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(found)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `order[k]` is the matching edge placed at position `k`.
fn assign_classes(
    c: &Clutter,
    m: &[VertexSet],
    order: &[usize],
    d: usize,
) -> Option<AdmissibleStructure> {
    let n = c.n();
    let mut rank = vec![0; n];
    for (pos, &k) in order.iter().enumerate() {
        for v in &m[k] {
            rank[v] = pos;
        }
    }
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in c.edges() {
        for u in e {
            for w in e {
                if u != w {
                    neighbours[u].push(w);
                }
            }
        }
    }
    for list in &mut neighbours {
        list.sort_unstable();
        list.dedup();
    }
    let full: u32 = if d == 32 { u32::MAX } else { (1u32 << d) - 1 };
    let mut csp = ClassCsp {
        rank,
        neighbours,
        assigned: vec![None; n],
    };
    let classes = csp.solve(vec![full; n])?;
    let class_sets = (0..d)
        .map(|k| VertexSet::from_indices(n, (0..n).filter(|&v| classes[v] == k)))
        .collect();
    let matching = order.iter().map(|&k| m[k].clone()).collect();
    let a = AdmissibleStructure::new(n, class_sets, matching).ok()?;
    let all_admissible = c
        .edges()
        .iter()
        .all(|e| is_admissible_set(&a, e, Mode::Strict).unwrap_or(false));
    all_admissible.then_some(a)
}

struct ClassCsp {
    rank: Vec<usize>,
    neighbours: Vec<Vec<usize>>,
    assigned: Vec<Option<usize>>,
}

impl ClassCsp {
    fn solve(&mut self, domains: Vec<u32>) -> Option<Vec<usize>> {
        let next = (0..domains.len())
            .filter(|&v| self.assigned[v].is_none())
            .min_by_key(|&v| domains[v].count_ones());
        let Some(v) = next else {
            return Some(
                self.assigned
                    .iter()
                    .map(|k| k.expect("all assigned"))
                    .collect(),
            );
        };
        let mut options = domains[v];
        while options != 0 {
            let k = options.trailing_zeros() as usize;
            options &= options - 1;
            if let Some(reduced) = self.restrict(&domains, v, k) {
                self.assigned[v] = Some(k);
                if let Some(done) = self.solve(reduced) {
                    return Some(done);
                }
                self.assigned[v] = None;
            }
        }
        None
    }

    fn restrict(&self, domains: &[u32], v: usize, k: usize) -> Option<Vec<u32>> {
        let mut out = domains.to_vec();
        out[v] = 1 << k;
        let below = (1u32 << k) - 1;
        let above = !below & !(1u32 << k);
        for &u in &self.neighbours[v] {
            let mut mask = !(1u32 << k);
            if self.rank[u] > self.rank[v] {
                mask &= above;
            } else if self.rank[u] < self.rank[v] {
                mask &= below;
            }
            out[u] &= mask;
            if out[u] == 0 {
                return None;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shelling::verify_shelling;

    fn grid_set(g: usize, d: usize, cells: &[(usize, usize)]) -> VertexSet {
        VertexSet::from_indices(g * d, cells.iter().map(|&(i, j)| (i - 1) * g + (j - 1)))
    }

    #[test]
    fn admissible_sets_on_the_3x3_grid() {
        let a = AdmissibleStructure::grid(3, 3);
        let s = |cells: &[(usize, usize)]| grid_set(3, 3, cells);
        assert!(is_admissible_set(&a, &s(&[(1, 1), (2, 2), (3, 2)]), Mode::Strict).unwrap());
        assert!(!is_admissible_set(&a, &s(&[(1, 1), (3, 2)]), Mode::Strict).unwrap());
        assert!(is_admissible_set(&a, &s(&[(1, 1), (3, 2)]), Mode::Relaxed).unwrap());
        assert!(!is_admissible_set(&a, &s(&[(1, 2), (2, 1)]), Mode::Strict).unwrap());
        assert!(matches!(
            is_admissible_set(&a, &s(&[(1, 1), (1, 2)]), Mode::Strict),
            Err(Error::ClassCollision { class: 1 })
        ));
    }

    #[test]
    fn uniform_edge_counts() {
        for (g, d, count) in [(3, 3, 10), (2, 2, 3), (1, 4, 1), (4, 2, 10), (2, 5, 6)] {
            let (c, _) = generate_complete_admissible_uniform(g, d).unwrap();
            assert_eq!(c.num_edges(), count, "g={g} d={d}");
        }
    }

    #[test]
    fn grid_2x2_edges() {
        let (c, _) = generate_complete_admissible_uniform(2, 2).unwrap();
        let names: Vec<Vec<String>> = c.edges().iter().map(|e| c.set_names(e)).collect();
        assert_eq!(
            names,
            vec![
                vec!["x1_1", "x2_1"],
                vec!["x1_1", "x2_2"],
                vec!["x1_2", "x2_2"]
            ]
        );
    }

    #[test]
    fn lex_shelling_of_3x3_matches_listing() {
        let (c, a) = generate_complete_admissible_uniform(3, 3).unwrap();
        let s = lex_shelling(&c, &a).unwrap();
        let want: [[usize; 3]; 10] = [
            [1, 1, 1],
            [1, 1, 2],
            [1, 1, 3],
            [1, 2, 2],
            [1, 2, 3],
            [1, 3, 3],
            [2, 2, 2],
            [2, 2, 3],
            [2, 3, 3],
            [3, 3, 3],
        ];
        for (f, j) in s.facets().iter().zip(want) {
            assert_eq!(f, &grid_set(3, 3, &[(1, j[0]), (2, j[1]), (3, j[2])]));
        }
        assert!(verify_shelling(s.facets()).unwrap().is_shelling());
        assert!(s.is_pure());
    }

    #[test]
    fn lex_shelling_small_cases() {
        let (c, a) = generate_complete_admissible_uniform(2, 2).unwrap();
        let s = lex_shelling(&c, &a).unwrap();
        let names: Vec<Vec<String>> = s.facets().iter().map(|e| c.set_names(e)).collect();
        assert_eq!(
            names,
            vec![
                vec!["x1_1", "x2_1"],
                vec!["x1_1", "x2_2"],
                vec!["x1_2", "x2_2"]
            ]
        );
        let (c, a) = generate_complete_admissible_uniform(1, 2).unwrap();
        assert_eq!(lex_shelling(&c, &a).unwrap().len(), 1);
    }

    #[test]
    fn lex_shelling_rejects_other_clutters() {
        let a = AdmissibleStructure::grid(2, 2);
        let c = Clutter::new(grid_labels(2, 2), vec![grid_set(2, 2, &[(1, 1), (2, 1)])]).unwrap();
        assert_eq!(
            lex_shelling(&c, &a).unwrap_err(),
            Error::NotCompleteAdmissibleUniform
        );
    }

    #[test]
    fn duals() {
        let p4 = Clutter::from_indices(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        let dual = alexander_dual(&p4).unwrap();
        assert_eq!(dual.num_edges(), 3);
        assert_eq!(alexander_dual(&dual).unwrap(), p4);
        let single = Clutter::from_indices(2, &[&[0, 1]]).unwrap();
        assert_eq!(alexander_dual(&single).unwrap().num_edges(), 2);
        let empty = Clutter::from_indices(2, &[]).unwrap();
        assert_eq!(alexander_dual(&empty).unwrap_err(), Error::UnitDual);
    }

    #[test]
    fn dual_of_grid_swaps_roles() {
        let (c, a) = generate_complete_admissible_uniform(2, 2).unwrap();
        let dual = alexander_dual(&c).unwrap();
        let b = a.swapped().unwrap();
        assert!(is_complete_admissible_uniform(&dual, &b).unwrap());
    }

    #[test]
    fn dual_generators_and_linear_quotients() {
        let (c, a) = generate_complete_admissible_uniform(3, 3).unwrap();
        let s = lex_shelling(&c, &a).unwrap();
        let gens: Vec<VertexSet> = s.facets().iter().map(VertexSet::complement).collect();
        assert!(is_linear_quotient_order(&gens));
        assert!(has_linear_quotients(&dual_ideal_generators(&c))
            .unwrap()
            .is_some());
        let disjoint = [
            VertexSet::from_indices(4, [0, 1]),
            VertexSet::from_indices(4, [2, 3]),
        ];
        assert!(has_linear_quotients(&disjoint).unwrap().is_none());
        assert_eq!(has_linear_quotients(&disjoint[..1]).unwrap(), Some(vec![0]));
        let whole = Clutter::from_indices(2, &[&[0, 1]]).unwrap();
        assert_eq!(dual_ideal_generators(&whole), vec![VertexSet::empty(2)]);
    }

    #[test]
    fn duplicate_generators_rejected() {
        let g = VertexSet::from_indices(3, [0]);
        assert!(matches!(
            has_linear_quotients(&[g.clone(), g]),
            Err(Error::DuplicateGenerator(_))
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(3, 0), Some(1));
        assert_eq!(binomial(2, 3), Some(0));
    }

    #[test]
    fn reordering_search_recovers_a_grid() {
        let (c, _) = generate_complete_admissible_uniform(2, 3).unwrap();
        let a = find_admissible_uniform_structure(&c).unwrap().unwrap();
        assert!(c
            .edges()
            .iter()
            .all(|e| is_admissible_set(&a, e, Mode::Strict).unwrap()));
    }
}
