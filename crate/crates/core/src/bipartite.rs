//! Bipartite graphs: bipartitions, h₁-orderings, the Herzog–Hibi criterion,
//! shellings of pure skeletons, whiskers, and the unmixedness test.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::Serialize;

use crate::clutter::Clutter;
use crate::covers::covering_number;
use crate::limits::Limits;
use crate::matching::{perfect_matchings, validate_perfect, Matching};
use crate::shelling::{verify_shelling, ShellingOrder, Verification};
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// How to treat vertices that lie in no edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IsolatedPolicy {
    #[default]
    Reject,
    /// Drop them and work on the remaining graph.
    Ignore,
}

fn require_graph(c: &Clutter) -> Result<()> {
    match c.edges().iter().find(|e| e.len() != 2) {
        Some(e) => Err(Error::NotAGraph(c.format_set(e))),
        None => Ok(()),
    }
}

/// A two-coloring, with the smallest vertex of every component (and every
/// isolated vertex) on the first side.
pub fn bipartition(c: &Clutter) -> Result<Option<(VertexSet, VertexSet)>> {
    require_graph(c)?;
    let n = c.n();
    let mut adj = vec![Vec::new(); n];
    for e in c.edges() {
        let v = e.to_vec();
        adj[v[0]].push(v[1]);
        adj[v[1]].push(v[0]);
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are colored");
            for &w in &adj[u] {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return Ok(None),
                    Some(_) => {}
                }
            }
        }
    }
    let first = VertexSet::from_indices(n, (0..n).filter(|&v| side[v] == Some(false)));
    let second = first.complement();
    Ok(Some((first, second)))
}

fn require_bipartite(c: &Clutter) -> Result<(VertexSet, VertexSet)> {
    bipartition(c)?.ok_or(Error::NotBipartite)
}

/// Matching edges split as `(x_i, y_i)` with `x_i` on the first side.
fn split_matching(m: &[VertexSet], first: &VertexSet) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut xs = Vec::with_capacity(m.len());
    let mut ys = Vec::with_capacity(m.len());
    for e in m {
        let x = e.intersection(first);
        let y = e.difference(first);
        if e.len() != 2 || x.len() != 1 || y.len() != 1 {
            return Err(Error::NotPerfectMatching(format!(
                "matching edge {e:?} does not have one vertex per side"
            )));
        }
        xs.push(x.first().expect("one vertex"));
        ys.push(y.first().expect("one vertex"));
    }
    Ok((xs, ys))
}

/// Positions of the matching edges: `pair_of[v]` is the index of the
/// matching edge containing `v`.
fn pair_index(n: usize, xs: &[usize], ys: &[usize]) -> Vec<usize> {
    let mut pair_of = vec![usize::MAX; n];
    for (i, (&x, &y)) in xs.iter().zip(ys).enumerate() {
        pair_of[x] = i;
        pair_of[y] = i;
    }
    pair_of
}

/// A reordering of the matching edges (as indices into `m`) such that every
/// edge `{x_i, y_j}` has `i` no later than `j`.
pub fn h1_ordering(c: &Clutter, m: &[VertexSet]) -> Result<Option<Vec<usize>>> {
    let (first, _) = require_bipartite(c)?;
    validate_perfect(c, m)?;
    let (xs, ys) = split_matching(m, &first)?;
    Ok(topological_order(c, &first, &xs, &ys))
}

fn topological_order(
    c: &Clutter,
    first: &VertexSet,
    xs: &[usize],
    ys: &[usize],
) -> Option<Vec<usize>> {
    let g = xs.len();
    let pair_of = pair_index(c.n(), xs, ys);
    let mut out_arcs = vec![Vec::new(); g];
    let mut indegree = vec![0usize; g];
    for e in c.edges() {
        let x = e
            .intersection(first)
            .first()
            .expect("edges cross the bipartition");
        let y = e
            .difference(first)
            .first()
            .expect("edges cross the bipartition");
        let (i, j) = (pair_of[x], pair_of[y]);
        if i != j {
            out_arcs[i].push(j);
            indegree[j] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..g).filter(|&i| indegree[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(g);
    while let Some(Reverse(i)) = ready.pop() {
        order.push(i);
        for &j in &out_arcs[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(Reverse(j));
            }
        }
    }
    (order.len() == g).then_some(order)
}

/// Vertices `x[k]`, `y[k]` of the `k`-th matching edge in an order
/// satisfying (h₁) and (h₂).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HerzogHibiCertificate {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl HerzogHibiCertificate {
    pub fn matching(&self, n: usize) -> Vec<VertexSet> {
        self.x
            .iter()
            .zip(&self.y)
            .map(|(&x, &y)| VertexSet::from_indices(n, [x, y]))
            .collect()
    }
}

/// The Herzog–Hibi certificate of Cohen–Macaulayness, if one exists.
///
/// An ordering with (h₁) forces the perfect matching to be unique, so it
/// suffices to test the one perfect matching found.
pub fn herzog_hibi_cm(
    c: &Clutter,
    policy: IsolatedPolicy,
) -> Result<Option<HerzogHibiCertificate>> {
    with_isolated_policy(c, policy, |c| {
        let (first, second) = require_bipartite(c)?;
        if first.len() != second.len() {
            return Ok(None);
        }
        let Some(m) = bipartite_perfect_matching(c, &first) else {
            return Ok(None);
        };
        let (xs, ys) = split_matching(&m, &first)?;
        let Some(order) = topological_order(c, &first, &xs, &ys) else {
            return Ok(None);
        };
        let x: Vec<usize> = order.iter().map(|&i| xs[i]).collect();
        let y: Vec<usize> = order.iter().map(|&i| ys[i]).collect();
        let edge = |a: usize, b: usize| c.is_edge(&VertexSet::from_indices(c.n(), [a, b]));
        let g = x.len();
        for i in 0..g {
            for j in i + 1..g {
                if !edge(x[i], y[j]) {
                    continue;
                }
                if y[j + 1..]
                    .iter()
                    .any(|&yk| edge(x[j], yk) && !edge(x[i], yk))
                {
                    return Ok(None);
                }
            }
        }
        Ok(Some(HerzogHibiCertificate { x, y }))
    })
    .map(|(cert, map)| {
        cert.map(|h| HerzogHibiCertificate {
            x: h.x.iter().map(|&v| map[v]).collect(),
            y: h.y.iter().map(|&v| map[v]).collect(),
        })
    })
}

/// Augmenting-path matching from the first side; `None` unless perfect.
pub fn bipartite_perfect_matching(c: &Clutter, first: &VertexSet) -> Option<Vec<VertexSet>> {
    let n = c.n();
    let mut adj = vec![Vec::new(); n];
    for e in c.edges() {
        let x = e.intersection(first).first()?;
        let y = e.difference(first).first()?;
        adj[x].push(y);
    }
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for x in first {
        let mut visited = vec![false; n];
        if !augment(x, &adj, &mut mate, &mut visited) {
            return None;
        }
    }
    if 2 * first.len() != n {
        return None;
    }
    let mut m: Vec<VertexSet> = first
        .iter()
        .map(|x| {
            let y = (0..n)
                .find(|&y| mate[y] == Some(x))
                .expect("every x is matched");
            VertexSet::from_indices(n, [x, y])
        })
        .collect();
    crate::vertex_set::sort_canonical(&mut m);
    Some(m)
}

fn augment(x: usize, adj: &[Vec<usize>], mate: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &y in &adj[x] {
        if visited[y] {
            continue;
        }
        visited[y] = true;
        if mate[y].is_none_or(|other| augment(other, adj, mate, visited)) {
            mate[y] = Some(x);
            return true;
        }
    }
    false
}

/// Shells the pure skeleton `Δ_G^[g]` by splitting on `y_g`, the last
/// matching edge of an h₁-ordering: facets containing `x_g` come first,
/// then those containing `y_g`. Returns `None` when no h₁-ordering exists,
/// in which case the skeleton is not shellable.
pub fn skeleton_shelling(c: &Clutter, m: &[VertexSet]) -> Result<Option<ShellingOrder>> {
    let (first, _) = require_bipartite(c)?;
    validate_perfect(c, m)?;
    let (xs, ys) = split_matching(m, &first)?;
    let Some(order) = topological_order(c, &first, &xs, &ys) else {
        return Ok(None);
    };
    let n = c.n();
    let mut adj = vec![VertexSet::empty(n); n];
    for e in c.edges() {
        let v = e.to_vec();
        adj[v[0]].insert(v[1]);
        adj[v[1]].insert(v[0]);
    }
    let pairs: Vec<(usize, usize)> = order.iter().map(|&i| (xs[i], ys[i])).collect();
    let skeleton = SkeletonShelling { n, adj, pairs };
    let facets = skeleton.shell(&(0..order.len()).collect::<Vec<_>>());
    match verify_shelling(&facets)? {
        Verification::Shelling(s) => Ok(Some(s)),
        Verification::Fails(p) => Err(Error::Construction(format!(
            "skeleton order fails at pair ({}, {})",
            p.earlier, p.later
        ))),
    }
}

struct SkeletonShelling {
    n: usize,
    adj: Vec<VertexSet>,
    /// `(x_k, y_k)` in h₁ order.
    pairs: Vec<(usize, usize)>,
}

impl SkeletonShelling {
    /// Shelling of the skeleton of the subgraph induced by the listed
    /// pairs, which stay in h₁ order.
    fn shell(&self, live: &[usize]) -> Vec<VertexSet> {
        let Some((&last, rest)) = live.split_last() else {
            return vec![VertexSet::empty(self.n)];
        };
        let (xg, yg) = self.pairs[last];
        // B = A ∪ N(y_g), taken inside the current subgraph
        let in_b: Vec<usize> = live
            .iter()
            .copied()
            .filter(|&k| self.adj[yg].contains(self.pairs[k].0))
            .collect();
        let a = VertexSet::from_indices(self.n, in_b.iter().map(|&k| self.pairs[k].1));
        let outside: Vec<usize> = live.iter().copied().filter(|k| !in_b.contains(k)).collect();
        let mut neighbours_of_a = VertexSet::empty(self.n);
        for y in &a {
            neighbours_of_a.union_with(&self.adj[y]);
        }
        let mut order: Vec<VertexSet> = self.shell(rest).into_iter().map(|f| f.with(xg)).collect();
        for f in self.shell(&outside) {
            if !f.intersects(&neighbours_of_a) {
                order.push(f.union(&a));
            }
        }
        order
    }
}

/// Adds a pendant edge `{v, v′}` at every vertex. New vertices are labeled
/// by appending `'` until the name is unused.
pub fn whisker(c: &Clutter) -> Result<Clutter> {
    require_graph(c)?;
    let n = c.n();
    let mut labels: Vec<String> = c.labels().to_vec();
    let mut taken: std::collections::HashSet<String> = labels.iter().cloned().collect();
    for v in 0..n {
        let mut name = format!("{}'", c.label(v));
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        labels.push(name);
    }
    let widen = |s: &VertexSet| VertexSet::from_indices(2 * n, s.iter());
    let mut edges: Vec<VertexSet> = c.edges().iter().map(widen).collect();
    edges.extend(whisker_matching(n));
    Clutter::new(labels, edges)
}

/// The whisker edges `{v, v′}` of a whiskered graph on `n` original vertices.
pub fn whisker_matching(n: usize) -> Vec<VertexSet> {
    (0..n)
        .map(|v| VertexSet::from_indices(2 * n, [v, n + v]))
        .collect()
}

/// A perfect matching under which `(e∖{x}) ∪ (e′∖{y})` is an edge whenever
/// `x ∈ e`, `y ∈ e′` are distinct and lie in a common matching edge. Such a
/// matching exists iff the graph is unmixed.
pub fn unmixed_bipartite_check(c: &Clutter, policy: IsolatedPolicy) -> Result<Option<Matching>> {
    let original = c;
    with_isolated_policy(c, policy, |c| {
        require_bipartite(c)?;
        for m in perfect_matchings(c) {
            if graph_condition_b(c, &m) {
                return Ok(Some(m));
            }
        }
        Ok(None)
    })
    .and_then(|(found, map)| match found {
        None => Ok(None),
        Some(m) => {
            let lifted: Vec<VertexSet> = m
                .iter()
                .map(|e| VertexSet::from_indices(original.n(), e.iter().map(|v| map[v])))
                .collect();
            let g = covering_number(original)?;
            Matching::classify(original, lifted, g).map(Some)
        }
    })
}

fn graph_condition_b(c: &Clutter, m: &[VertexSet]) -> bool {
    let edges = c.edges();
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            for ei in m {
                for x in &e.intersection(ei) {
                    for y in &f.intersection(ei) {
                        if x != y && !c.is_edge(&e.without(x).union(&f.without(y))) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Runs `f` on `c`, or on `c` with isolated vertices removed, returning the
/// map from reduced vertex indices back to `c`.
fn with_isolated_policy<T>(
    c: &Clutter,
    policy: IsolatedPolicy,
    f: impl FnOnce(&Clutter) -> Result<Option<T>>,
) -> Result<(Option<T>, Vec<usize>)> {
    require_graph(c)?;
    let isolated = c.isolated_vertices();
    if isolated.is_empty() {
        return Ok((f(c)?, (0..c.n()).collect()));
    }
    match policy {
        IsolatedPolicy::Reject => Err(Error::IsolatedVertices(c.format_set(&isolated))),
        IsolatedPolicy::Ignore => {
            let keep: Vec<usize> = (0..c.n()).filter(|&v| !isolated.contains(v)).collect();
            let mut new_index = vec![usize::MAX; c.n()];
            for (k, &v) in keep.iter().enumerate() {
                new_index[v] = k;
            }
            let labels = keep.iter().map(|&v| c.label(v).to_string()).collect();
            let edges = c
                .edges()
                .iter()
                .map(|e| VertexSet::from_indices(keep.len(), e.iter().map(|v| new_index[v])))
                .collect();
            let reduced = Clutter::new(labels, edges)?;
            Ok((f(&reduced)?, keep))
        }
    }
}

/// Facets of `Δ_G^[g]` for a graph with a perfect matching of size `g`.
pub fn skeleton_facets(c: &Clutter, g: usize, limits: &Limits) -> Result<Vec<VertexSet>> {
    let facets = crate::covers::stanley_reisner_facets_with(c, limits)?;
    Ok(crate::shelling::pure_skeleton(&facets, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::is_unmixed;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied())
    }

    fn p4() -> Clutter {
        Clutter::from_indices(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap()
    }

    fn k22() -> Clutter {
        Clutter::from_names(
            &["x1", "x2", "y1", "y2"],
            &[&["x1", "y1"], &["x1", "y2"], &["x2", "y1"], &["x2", "y2"]],
        )
        .unwrap()
    }

    fn path_with_chord() -> Clutter {
        // x1y1, x2y2, x1y2
        Clutter::from_names(
            &["x1", "x2", "y1", "y2"],
            &[&["x1", "y1"], &["x2", "y2"], &["x1", "y2"]],
        )
        .unwrap()
    }

    #[test]
    fn bipartitions() {
        assert_eq!(
            bipartition(&p4()).unwrap(),
            Some((set(4, &[0, 2]), set(4, &[1, 3])))
        );
        let k3 = Clutter::from_indices(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        assert_eq!(bipartition(&k3).unwrap(), None);
        assert_eq!(
            bipartition(&k22()).unwrap(),
            Some((set(4, &[0, 1]), set(4, &[2, 3])))
        );
        let hyper = Clutter::from_indices(3, &[&[0, 1, 2]]).unwrap();
        assert!(matches!(bipartition(&hyper), Err(Error::NotAGraph(_))));
    }

    #[test]
    fn h1_examples() {
        let c = path_with_chord();
        let m = [set(4, &[0, 2]), set(4, &[1, 3])];
        assert_eq!(h1_ordering(&c, &m).unwrap(), Some(vec![0, 1]));
        assert_eq!(h1_ordering(&k22(), &m).unwrap(), None);
        let disjoint = Clutter::from_indices(4, &[&[0, 1], &[2, 3]]).unwrap();
        let m = [set(4, &[0, 1]), set(4, &[2, 3])];
        assert_eq!(h1_ordering(&disjoint, &m).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn herzog_hibi_examples() {
        let cert = herzog_hibi_cm(&path_with_chord(), IsolatedPolicy::Reject)
            .unwrap()
            .unwrap();
        assert_eq!(cert.x, vec![0, 1]);
        assert_eq!(cert.y, vec![2, 3]);
        assert!(herzog_hibi_cm(&k22(), IsolatedPolicy::Reject)
            .unwrap()
            .is_none());
        let k3 = Clutter::from_indices(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        assert_eq!(
            herzog_hibi_cm(&k3, IsolatedPolicy::Reject),
            Err(Error::NotBipartite)
        );
    }

    #[test]
    fn isolated_vertex_policy() {
        let c = Clutter::from_indices(3, &[&[0, 1]]).unwrap();
        assert!(matches!(
            herzog_hibi_cm(&c, IsolatedPolicy::Reject),
            Err(Error::IsolatedVertices(_))
        ));
        let cert = herzog_hibi_cm(&c, IsolatedPolicy::Ignore).unwrap().unwrap();
        assert_eq!((cert.x, cert.y), (vec![0], vec![1]));
        let m = unmixed_bipartite_check(&c, IsolatedPolicy::Ignore)
            .unwrap()
            .unwrap();
        assert_eq!(m.edges(), &[set(3, &[0, 1])]);
    }

    #[test]
    fn skeleton_examples() {
        let m = [set(4, &[0, 2]), set(4, &[1, 3])];
        assert!(skeleton_shelling(&k22(), &m).unwrap().is_none());
        let disjoint = Clutter::from_indices(4, &[&[0, 1], &[2, 3]]).unwrap();
        let s = skeleton_shelling(&disjoint, &[set(4, &[0, 1]), set(4, &[2, 3])])
            .unwrap()
            .unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.is_pure());
        let s = skeleton_shelling(&path_with_chord(), &m).unwrap().unwrap();
        let mut got = s.facets().to_vec();
        crate::vertex_set::sort_canonical(&mut got);
        assert_eq!(
            got,
            skeleton_facets(&path_with_chord(), 2, &Limits::default()).unwrap()
        );
    }

    #[test]
    fn whisker_examples() {
        let k3 = Clutter::from_indices(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        let w = whisker(&k3).unwrap();
        assert_eq!((w.n(), w.num_edges()), (6, 6));
        let ab = Clutter::from_names(&["a", "b"], &[&["a", "b"]]).unwrap();
        let w = whisker(&ab).unwrap();
        assert_eq!(w.labels(), &["a", "b", "a'", "b'"]);
        assert_eq!(w.num_edges(), 3);
        let p3 = Clutter::from_indices(3, &[&[0, 1], &[1, 2]]).unwrap();
        let w = whisker(&p3).unwrap();
        assert_eq!((w.n(), w.num_edges()), (6, 5));
        assert!(is_unmixed(&w).unwrap());
        let clash = Clutter::from_names(&["a", "a'"], &[&["a", "a'"]]).unwrap();
        assert_eq!(
            whisker(&clash).unwrap().labels(),
            &["a", "a'", "a''", "a'''"]
        );
    }

    #[test]
    fn unmixed_bipartite_examples() {
        let m = unmixed_bipartite_check(&k22(), IsolatedPolicy::Reject)
            .unwrap()
            .unwrap();
        assert_eq!(m.edges(), &[set(4, &[0, 2]), set(4, &[1, 3])]);
        let p3 = Clutter::from_indices(3, &[&[0, 1], &[1, 2]]).unwrap();
        assert!(unmixed_bipartite_check(&p3, IsolatedPolicy::Reject)
            .unwrap()
            .is_none());
        assert!(unmixed_bipartite_check(&p4(), IsolatedPolicy::Reject)
            .unwrap()
            .is_some());
    }

    #[test]
    fn augmenting_paths_agree_with_backtracking() {
        let c = path_with_chord();
        let (first, _) = bipartition(&c).unwrap().unwrap();
        let m = bipartite_perfect_matching(&c, &first).unwrap();
        assert_eq!(
            m.len(),
            crate::matching::maximum_edge_matching(&c).unwrap().len()
        );
    }
}
