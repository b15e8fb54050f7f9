//! Contractions, deletions, c-minors, free vertices, and cover intersections.

use std::collections::HashSet;

use crate::clutter::Clutter;
use crate::limits::Limits;
use crate::vertex_set::{minimalize, VertexSet};
use crate::{Error, Result};

/// Outcome of a contraction. `Improper` is the unit ideal, reached when an
/// edge shrinks to the empty set; it is distinct from the edgeless clutter,
/// which stands for the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Minor {
    Proper(Clutter),
    Improper,
}

impl Minor {
    pub fn is_improper(&self) -> bool {
        matches!(self, Minor::Improper)
    }

    pub fn as_proper(&self) -> Option<&Clutter> {
        match self {
            Minor::Proper(c) => Some(c),
            Minor::Improper => None,
        }
    }

    pub fn into_proper(self) -> Option<Clutter> {
        match self {
            Minor::Proper(c) => Some(c),
            Minor::Improper => None,
        }
    }
}

fn check_vertex(c: &Clutter, v: usize) -> Result<()> {
    if v >= c.n() {
        return Err(Error::VertexOutOfRange { index: v, n: c.n() });
    }
    Ok(())
}

/// The clutter of `(I : x_v)`. The vertex stays in the universe, isolated.
pub fn contract(c: &Clutter, v: usize) -> Result<Minor> {
    check_vertex(c, v)?;
    Ok(contract_unchecked(c, &c.empty_set().with(v)))
}

/// Edges avoiding `v`; the universe is unchanged.
pub fn delete(c: &Clutter, v: usize) -> Result<Clutter> {
    check_vertex(c, v)?;
    let edges = c
        .edges()
        .iter()
        .filter(|e| !e.contains(v))
        .cloned()
        .collect();
    Ok(c.with_edges(edges))
}

/// Contracts every vertex of `s`, i.e. sets those variables to 1.
pub fn contract_set(c: &Clutter, s: &VertexSet) -> Result<Minor> {
    if s.capacity() != c.n() {
        return Err(Error::Malformed(format!(
            "set capacity {} does not match {} vertices",
            s.capacity(),
            c.n()
        )));
    }
    Ok(contract_unchecked(c, s))
}

pub(crate) fn contract_unchecked(c: &Clutter, s: &VertexSet) -> Minor {
    let mut shrunk = Vec::with_capacity(c.num_edges());
    for e in c.edges() {
        let r = e.difference(s);
        if r.is_empty() {
            return Minor::Improper;
        }
        shrunk.push(r);
    }
    Minor::Proper(c.with_edges(minimalize(shrunk)))
}

/// Vertices lying in exactly one edge.
pub fn free_vertices(c: &Clutter) -> VertexSet {
    let degrees = c.degrees();
    VertexSet::from_indices(c.n(), (0..c.n()).filter(|&v| degrees[v] == 1))
}

/// Free vertices that lie in an edge with at least two vertices.
pub fn nontrivial_free_vertices(c: &Clutter) -> VertexSet {
    let mut free = free_vertices(c);
    for e in c.edges() {
        if e.len() == 1 {
            free = free.difference(e);
        }
    }
    free
}

/// Whether every proper clutter reachable by contractions, `c` included,
/// has a free vertex in an edge of size at least two whenever it has such
/// an edge at all.
pub fn all_cminors_have_free_vertex(c: &Clutter) -> Result<bool> {
    all_cminors_have_free_vertex_with(c, &Limits::default())
}

pub fn all_cminors_have_free_vertex_with(c: &Clutter, limits: &Limits) -> Result<bool> {
    Limits::check("vertex count", c.n(), limits.max_vertices)?;
    let mut seen = HashSet::new();
    Ok(cminor_dfs(c, &mut seen))
}

fn cminor_dfs(c: &Clutter, seen: &mut HashSet<Vec<VertexSet>>) -> bool {
    let mut support = c.empty_set();
    for e in c.edges().iter().filter(|e| e.len() >= 2) {
        support.union_with(e);
    }
    if support.is_empty() || !seen.insert(c.edges().to_vec()) {
        return true;
    }
    if nontrivial_free_vertices(c).is_empty() {
        return false;
    }
    for v in &support {
        if let Minor::Proper(minor) = contract_unchecked(c, &c.empty_set().with(v)) {
            if !cminor_dfs(&minor, seen) {
                return false;
            }
        }
    }
    true
}

/// The clutter of `(C_1) ∩ ⋯ ∩ (C_r)`: the minimal transversals of the
/// given covers.
pub fn intersect_covers(c: &Clutter, covers: &[VertexSet]) -> Result<Clutter> {
    if covers.is_empty() {
        return Err(Error::Malformed("empty cover list".into()));
    }
    for s in covers {
        if s.capacity() != c.n() {
            return Err(Error::Malformed(
                "cover capacity does not match the clutter".into(),
            ));
        }
    }
    let family = minimalize(covers.to_vec());
    if family.iter().any(VertexSet::is_empty) {
        return Err(Error::Malformed(
            "the empty set is not a cover of this clutter".into(),
        ));
    }
    Ok(c.with_edges(minimal_transversals(c.n(), &family)))
}

/// Inclusion-minimal sets meeting every member of `family`, by the same
/// branching scheme as cover enumeration.
pub(crate) fn minimal_transversals(n: usize, family: &[VertexSet]) -> Vec<VertexSet> {
    let probe = Clutter::from_antichain(
        std::sync::Arc::new((0..n).map(|i| i.to_string()).collect()),
        minimalize(family.to_vec()),
    );
    crate::covers::minimal_vertex_covers_with(&probe, &Limits::default().with_max_vertices(n))
        .expect("limit raised to the universe size")
}
