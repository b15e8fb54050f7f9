//! Shelling verification, exhaustive shelling search, and the recursive
//! free-vertex construction for unmixed clutters.

use std::collections::HashSet;

use serde::Serialize;

use crate::clutter::Clutter;
use crate::covers::is_unmixed_with;
use crate::limits::Limits;
use crate::matching::validate_konig_with;
use crate::minors::{contract_unchecked, nontrivial_free_vertices, Minor};
use crate::vertex_set::{sort_canonical, VertexSet};
use crate::{Error, Result};

/// Certificate for a pair `i < j`: `F_j ∖ F_facet = {vertex}` and
/// `vertex ∉ F_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertex: usize,
    pub facet: usize,
}

/// A facet order together with a witness for every earlier facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingOrder {
    facets: Vec<VertexSet>,
    witnesses: Vec<Vec<Witness>>,
}

impl ShellingOrder {
    /// Accepts externally constructed witnesses after checking each one.
    pub fn with_witnesses(facets: Vec<VertexSet>, witnesses: Vec<Vec<Witness>>) -> Result<Self> {
        check_antichain(&facets)?;
        if witnesses.len() != facets.len() {
            return Err(Error::Construction(
                "one witness row per facet required".into(),
            ));
        }
        for (j, row) in witnesses.iter().enumerate() {
            if row.len() != j {
                return Err(Error::Construction(format!(
                    "facet {j} needs {j} witnesses"
                )));
            }
            for (i, w) in row.iter().enumerate() {
                let ok = w.facet < j
                    && facets[j].contains(w.vertex)
                    && !facets[i].contains(w.vertex)
                    && facets[j].difference(&facets[w.facet])
                        == VertexSet::empty(facets[j].capacity()).with(w.vertex);
                if !ok {
                    return Err(Error::Construction(format!(
                        "witness {w:?} does not certify pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(ShellingOrder { facets, witnesses })
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn into_facets(self) -> Vec<VertexSet> {
        self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Witnesses for facet `j`, indexed by the earlier facet `i < j`.
    pub fn witnesses(&self, j: usize) -> &[Witness] {
        &self.witnesses[j]
    }

    pub fn witness(&self, i: usize, j: usize) -> Witness {
        self.witnesses[j][i]
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }
}

/// The first pair `(earlier, later)` admitting no witness, by `later` then
/// `earlier`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FailingPair {
    pub earlier: usize,
    pub later: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Shelling(ShellingOrder),
    Fails(FailingPair),
}

impl Verification {
    pub fn is_shelling(&self) -> bool {
        matches!(self, Verification::Shelling(_))
    }

    pub fn shelling(self) -> Option<ShellingOrder> {
        match self {
            Verification::Shelling(s) => Some(s),
            Verification::Fails(_) => None,
        }
    }
}

fn check_antichain(facets: &[VertexSet]) -> Result<()> {
    for (j, b) in facets.iter().enumerate() {
        for a in &facets[..j] {
            if a.capacity() != b.capacity() {
                return Err(Error::Malformed("facets over different universes".into()));
            }
            let (inner, outer) = if a.is_subset(b) {
                (a, b)
            } else if b.is_subset(a) {
                (b, a)
            } else {
                continue;
            };
            return Err(Error::FacetContainment {
                inner: format!("{inner:?}"),
                outer: format!("{outer:?}"),
            });
        }
    }
    Ok(())
}

/// Checks the given order and records, for each pair, the smallest
/// witnessing vertex and then the smallest witnessing facet.
pub fn verify_shelling(facets: &[VertexSet]) -> Result<Verification> {
    check_antichain(facets)?;
    let mut witnesses = Vec::with_capacity(facets.len());
    for (j, fj) in facets.iter().enumerate() {
        let mut via = vec![None; fj.capacity()];
        let mut available = VertexSet::empty(fj.capacity());
        for (l, fl) in facets[..j].iter().enumerate() {
            let d = fj.difference(fl);
            if d.len() == 1 {
                let v = d.first().expect("one element");
                if available.insert(v) {
                    via[v] = Some(l);
                }
            }
        }
        let mut row = Vec::with_capacity(j);
        for (i, fi) in facets[..j].iter().enumerate() {
            let Some(v) = fj.difference(fi).intersection(&available).first() else {
                return Ok(Verification::Fails(FailingPair {
                    earlier: i,
                    later: j,
                }));
            };
            row.push(Witness {
                vertex: v,
                facet: via[v].expect("available vertices have a facet"),
            });
        }
        witnesses.push(row);
    }
    Ok(Verification::Shelling(ShellingOrder {
        facets: facets.to_vec(),
        witnesses,
    }))
}

/// Some shelling order of the given facets, if one exists.
pub fn bruteforce_shelling(facets: &[VertexSet]) -> Result<Option<ShellingOrder>> {
    bruteforce_shelling_with(facets, &Limits::default())
}

pub fn bruteforce_shelling_with(
    facets: &[VertexSet],
    limits: &Limits,
) -> Result<Option<ShellingOrder>> {
    Limits::check("facet count", facets.len(), limits.max_shelling_facets)?;
    check_antichain(facets)?;
    let pure = facets.windows(2).all(|w| w[0].len() == w[1].len());
    if pure && !ridge_connected(facets) {
        return Ok(None);
    }
    let mut search = ShellingSearch::new(facets);
    let placed = VertexSet::empty(facets.len());
    if !search.run(&placed) {
        return Ok(None);
    }
    let ordered: Vec<VertexSet> = search.order.iter().map(|&k| facets[k].clone()).collect();
    match verify_shelling(&ordered)? {
        Verification::Shelling(s) => Ok(Some(s)),
        Verification::Fails(p) => Err(Error::Construction(format!(
            "search produced an order failing at {p:?}"
        ))),
    }
}

/// Facets of a pure shellable complex are connected through shared ridges.
fn ridge_connected(facets: &[VertexSet]) -> bool {
    if facets.is_empty() {
        return true;
    }
    let mut reached = VertexSet::empty(facets.len()).with(0);
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        for b in 0..facets.len() {
            if !reached.contains(b) && facets[b].difference_len(&facets[a]) == 1 {
                reached.insert(b);
                stack.push(b);
            }
        }
    }
    reached.len() == facets.len()
}

struct ShellingSearch<'a> {
    facets: &'a [VertexSet],
    /// `single[j][l]` is the vertex `v` with `F_j ∖ F_l = {v}`, if any.
    single: Vec<Vec<Option<usize>>>,
    dead: HashSet<VertexSet>,
    order: Vec<usize>,
}

impl<'a> ShellingSearch<'a> {
    fn new(facets: &'a [VertexSet]) -> Self {
        let single = facets
            .iter()
            .map(|fj| {
                facets
                    .iter()
                    .map(|fl| {
                        let d = fj.difference(fl);
                        if d.len() == 1 {
                            d.first()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        ShellingSearch {
            facets,
            single,
            dead: HashSet::new(),
            order: Vec::new(),
        }
    }

    // addability of a facet depends only on the set already placed
    fn addable(&self, j: usize, placed: &VertexSet) -> bool {
        if placed.is_empty() {
            return true;
        }
        let fj = &self.facets[j];
        let mut available = VertexSet::empty(fj.capacity());
        for l in placed {
            if let Some(v) = self.single[j][l] {
                available.insert(v);
            }
        }
        !available.is_empty()
            && placed
                .iter()
                .all(|i| fj.difference(&self.facets[i]).intersects(&available))
    }

    fn run(&mut self, placed: &VertexSet) -> bool {
        if placed.len() == self.facets.len() {
            return true;
        }
        if self.dead.contains(placed) {
            return false;
        }
        // larger facets may always be moved ahead of smaller ones
        let size = (0..self.facets.len())
            .filter(|&k| !placed.contains(k))
            .map(|k| self.facets[k].len())
            .max()
            .expect("some facet remains");
        for k in 0..self.facets.len() {
            if placed.contains(k) || self.facets[k].len() != size || !self.addable(k, placed) {
                continue;
            }
            self.order.push(k);
            if self.run(&placed.with(k)) {
                return true;
            }
            self.order.pop();
        }
        self.dead.insert(placed.clone());
        false
    }
}

/// Shells the Stanley–Reisner complex of an unmixed clutter by splitting on
/// free vertices of matching edges. Facets containing the chosen vertex
/// `z` come from `C/z`, the rest from `C/(e_m ∖ {z})`.
///
/// Returns `None` when some c-minor met along the way has no free vertex in
/// an edge of size at least two.
pub fn recursive_shelling(c: &Clutter, m: &[VertexSet]) -> Result<Option<ShellingOrder>> {
    recursive_shelling_with(c, m, &Limits::default())
}

pub fn recursive_shelling_with(
    c: &Clutter,
    m: &[VertexSet],
    limits: &Limits,
) -> Result<Option<ShellingOrder>> {
    validate_konig_with(c, m, limits)?;
    if !is_unmixed_with(c, limits)? {
        return Err(Error::Mixed);
    }
    let Some(facets) = shell_minor(c, m)? else {
        return Ok(None);
    };
    match verify_shelling(&facets)? {
        Verification::Shelling(s) => Ok(Some(s)),
        Verification::Fails(p) => Err(Error::Construction(format!(
            "recursive order fails at pair ({}, {})",
            p.earlier, p.later
        ))),
    }
}

fn shell_minor(c: &Clutter, m: &[VertexSet]) -> Result<Option<Vec<VertexSet>>> {
    if c.edges().iter().all(|e| e.len() == 1) {
        let mut union = c.empty_set();
        for e in c.edges() {
            union.union_with(e);
        }
        return Ok(Some(vec![union.complement()]));
    }
    let free = nontrivial_free_vertices(c);
    let Some(em) = m.iter().find(|e| e.len() >= 2 && e.intersects(&free)) else {
        return Ok(None);
    };
    let z = em
        .intersection(&free)
        .first()
        .expect("edge meets the free set");
    let with_z = proper_minor(c, &c.empty_set().with(z))?;
    let without_z = proper_minor(c, &em.without(z))?;
    let Some(mut order) = shell_minor(&with_z, &minor_matching(&with_z, m)?)? else {
        return Ok(None);
    };
    let Some(rest) = shell_minor(&without_z, &minor_matching(&without_z, m)?)? else {
        return Ok(None);
    };
    order.extend(rest);
    Ok(Some(order))
}

fn proper_minor(c: &Clutter, s: &VertexSet) -> Result<Clutter> {
    match contract_unchecked(c, s) {
        Minor::Proper(minor) => Ok(minor),
        Minor::Improper => Err(Error::Construction(
            "contraction reached the unit ideal".into(),
        )),
    }
}

/// In a c-minor each matching edge contains exactly one edge of the minor.
fn minor_matching(minor: &Clutter, m: &[VertexSet]) -> Result<Vec<VertexSet>> {
    m.iter()
        .map(|ei| {
            let mut inside = minor.edges().iter().filter(|f| f.is_subset(ei));
            match (inside.next(), inside.next()) {
                (Some(f), None) => Ok(f.clone()),
                _ => Err(Error::Construction(format!(
                    "matching edge {} does not contain exactly one edge of the minor",
                    minor.format_set(ei)
                ))),
            }
        })
        .collect()
}

/// Facets of the subcomplex generated by the `k`-element faces.
pub fn pure_skeleton(facets: &[VertexSet], k: usize) -> Vec<VertexSet> {
    let mut faces = HashSet::new();
    for f in facets {
        if f.len() >= k {
            let members = f.to_vec();
            let mut current = VertexSet::empty(f.capacity());
            k_subsets(&members, k, &mut current, &mut faces);
        }
    }
    let mut out: Vec<VertexSet> = faces.into_iter().collect();
    sort_canonical(&mut out);
    out
}

fn k_subsets(members: &[usize], k: usize, current: &mut VertexSet, out: &mut HashSet<VertexSet>) {
    if k == 0 {
        out.insert(current.clone());
        return;
    }
    for (i, &v) in members.iter().enumerate() {
        if members.len() - i < k {
            break;
        }
        current.insert(v);
        k_subsets(&members[i + 1..], k - 1, current, out);
        current.remove(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::stanley_reisner_facets;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied())
    }

    #[test]
    fn disjoint_facets_fail_at_first_pair() {
        // x1=0, y1=1, y2=2, z2=3
        let v = verify_shelling(&[set(4, &[0, 3]), set(4, &[1, 2])]).unwrap();
        assert_eq!(
            v,
            Verification::Fails(FailingPair {
                earlier: 0,
                later: 1
            })
        );
        assert!(bruteforce_shelling(&[set(4, &[0, 3]), set(4, &[1, 2])])
            .unwrap()
            .is_none());
    }

    #[test]
    fn single_facet_is_vacuous() {
        let s = verify_shelling(&[set(3, &[0, 1])])
            .unwrap()
            .shelling()
            .unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.is_pure());
        assert!(bruteforce_shelling(&[set(3, &[0, 1])]).unwrap().is_some());
    }

    #[test]
    fn containment_is_rejected() {
        let err = verify_shelling(&[set(3, &[0]), set(3, &[0, 1])]).unwrap_err();
        assert!(matches!(err, Error::FacetContainment { .. }));
    }

    #[test]
    fn witnesses_are_recorded() {
        // {x1,x3} < {x1,x4} < {x2,x4}
        let order = [set(4, &[0, 2]), set(4, &[0, 3]), set(4, &[1, 3])];
        let s = verify_shelling(&order).unwrap().shelling().unwrap();
        assert_eq!(
            s.witness(0, 1),
            Witness {
                vertex: 3,
                facet: 0
            }
        );
        assert_eq!(
            s.witness(0, 2),
            Witness {
                vertex: 1,
                facet: 1
            }
        );
        assert_eq!(
            s.witness(1, 2),
            Witness {
                vertex: 1,
                facet: 1
            }
        );
    }

    #[test]
    fn p4_complex_is_shellable() {
        let facets = [set(4, &[0, 3]), set(4, &[0, 2]), set(4, &[1, 3])];
        let s = bruteforce_shelling(&facets).unwrap().unwrap();
        assert!(verify_shelling(s.facets()).unwrap().is_shelling());
    }

    #[test]
    fn facet_limit_is_enforced() {
        let facets: Vec<VertexSet> = (0..10).map(|v| set(10, &[v])).collect();
        assert!(bruteforce_shelling(&facets).unwrap_err().is_size_guard());
        let limits = Limits::default().with_max_shelling_facets(10);
        assert!(bruteforce_shelling_with(&facets, &limits)
            .unwrap()
            .is_some());
    }

    #[test]
    fn non_pure_shelling() {
        // a triangle with a pendant edge: {a,b,c}, {c,d}
        let facets = [set(4, &[2, 3]), set(4, &[0, 1, 2])];
        assert!(!verify_shelling(&facets).unwrap().is_shelling());
        let s = bruteforce_shelling(&facets).unwrap().unwrap();
        assert_eq!(s.facets(), &[set(4, &[0, 1, 2]), set(4, &[2, 3])]);
        assert!(!s.is_pure());
    }

    #[test]
    fn recursive_shelling_of_p4() {
        let c = Clutter::from_indices(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        let m = [set(4, &[0, 1]), set(4, &[2, 3])];
        let s = recursive_shelling(&c, &m).unwrap().unwrap();
        assert!(s.is_pure());
        let mut got = s.facets().to_vec();
        sort_canonical(&mut got);
        let mut want = stanley_reisner_facets(&c).unwrap();
        sort_canonical(&mut want);
        assert_eq!(got, want);
    }

    #[test]
    fn recursive_shelling_of_single_edge() {
        let c = Clutter::from_indices(2, &[&[0, 1]]).unwrap();
        let s = recursive_shelling(&c, &[set(2, &[0, 1])]).unwrap().unwrap();
        assert_eq!(s.facets(), &[set(2, &[0]), set(2, &[1])]);
    }

    #[test]
    fn recursive_shelling_needs_free_vertices() {
        let k22 = Clutter::from_indices(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]).unwrap();
        let m = [set(4, &[0, 2]), set(4, &[1, 3])];
        assert!(recursive_shelling(&k22, &m).unwrap().is_none());
        let p3 = Clutter::from_indices(3, &[&[0, 1], &[1, 2]]).unwrap();
        assert!(recursive_shelling(&p3, &[set(3, &[0, 1])]).is_err());
    }

    #[test]
    fn skeleton_examples() {
        let facets = [set(4, &[0, 1, 2]), set(4, &[2, 3])];
        assert_eq!(
            pure_skeleton(&facets, 2),
            vec![
                set(4, &[0, 1]),
                set(4, &[0, 2]),
                set(4, &[1, 2]),
                set(4, &[2, 3])
            ]
        );
        let pure = [set(4, &[0, 1]), set(4, &[2, 3])];
        assert_eq!(pure_skeleton(&pure, 2), pure.to_vec());
        assert_eq!(pure_skeleton(&pure, 0), vec![VertexSet::empty(4)]);
    }
}
