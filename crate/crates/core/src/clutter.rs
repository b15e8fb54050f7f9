//! The clutter data model and its JSON document format.
//!
//! A clutter is a labeled vertex universe together with an antichain of
//! nonempty edges. It doubles as the generator set of a square-free
//! monomial ideal: edge `e` stands for the monomial `x_e`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::vertex_set::{sort_canonical, VertexSet};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Clutter {
    labels: Arc<Vec<String>>,
    edges: Vec<VertexSet>,
}

impl Clutter {
    /// Validates and canonicalizes a clutter.
    ///
    /// Edges must be nonempty, distinct, within range, and pairwise
    /// incomparable under inclusion.
    pub fn new(labels: Vec<String>, edges: Vec<VertexSet>) -> Result<Self> {
        validate_labels(&labels)?;
        let n = labels.len();
        let labels = Arc::new(labels);
        for e in &edges {
            if e.capacity() != n {
                return Err(Error::Malformed(format!(
                    "edge capacity {} does not match {} vertices",
                    e.capacity(),
                    n
                )));
            }
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
        }
        let mut edges = edges;
        sort_canonical(&mut edges);
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(format_set(&labels, &w[0])));
            }
        }
        // canonical order lists every proper subset before its superset
        for (j, outer) in edges.iter().enumerate() {
            for inner in &edges[..j] {
                if inner.is_subset(outer) {
                    return Err(Error::Containment {
                        inner: format_set(&labels, inner),
                        outer: format_set(&labels, outer),
                    });
                }
            }
        }
        Ok(Clutter { labels, edges })
    }

    /// Builds a clutter from vertex names, e.g. for tests and fixtures.
    pub fn from_names(vertices: &[&str], edges: &[&[&str]]) -> Result<Self> {
        let labels: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let index = label_index(&labels)?;
        let edges = edges
            .iter()
            .map(|e| names_to_set(&index, labels.len(), e.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Clutter::new(labels, edges)
    }

    /// Builds a clutter on vertices labeled `x1..xn` from index lists.
    pub fn from_indices(n: usize, edges: &[&[usize]]) -> Result<Self> {
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { index: bad, n });
            }
            sets.push(VertexSet::from_indices(n, e.iter().copied()));
        }
        Clutter::new(labels, sets)
    }

    /// Builds a clutter from a family already known to be an antichain of
    /// nonempty sets.
    pub(crate) fn from_antichain(labels: Arc<Vec<String>>, mut edges: Vec<VertexSet>) -> Self {
        sort_canonical(&mut edges);
        debug_assert!(edges.iter().all(|e| !e.is_empty()));
        debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));
        Clutter { labels, edges }
    }

    /// A clutter on the same labeled universe with different edges.
    pub(crate) fn with_edges(&self, edges: Vec<VertexSet>) -> Self {
        Clutter::from_antichain(Arc::clone(&self.labels), edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n())
    }

    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn set_from_names(&self, names: &[&str]) -> Result<VertexSet> {
        let index = label_index(&self.labels)?;
        names_to_set(&index, self.n(), names.iter().copied())
    }

    pub fn is_edge(&self, s: &VertexSet) -> bool {
        self.edges.binary_search_by(|e| e.canonical_cmp(s)).is_ok()
    }

    pub fn edge_index(&self, s: &VertexSet) -> Option<usize> {
        self.edges.binary_search_by(|e| e.canonical_cmp(s)).ok()
    }

    /// Whether some edge is a subset of `s`.
    pub fn contains_edge(&self, s: &VertexSet) -> bool {
        self.edges.iter().any(|e| e.is_subset(s))
    }

    /// Number of edges containing each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for e in &self.edges {
            for v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Vertices occurring in no edge.
    pub fn isolated_vertices(&self) -> VertexSet {
        let mut covered = self.empty_set();
        for e in &self.edges {
            covered.union_with(e);
        }
        covered.complement()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        !self.isolated_vertices().is_empty()
    }

    pub fn is_uniform(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Whether every edge has exactly two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let entries = (0..self.n())
            .map(|v| self.edges.iter().map(|e| u8::from(e.contains(v))).collect())
            .collect();
        IncidenceMatrix { entries }
    }

    /// Renders a set with vertex labels, e.g. `{a,b}`.
    pub fn format_set(&self, s: &VertexSet) -> String {
        format_set(&self.labels, s)
    }

    pub fn set_names(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn to_document(&self) -> ClutterDocument {
        ClutterDocument {
            vertices: self.labels.to_vec(),
            edges: self.edges.iter().map(|e| self.set_names(e)).collect(),
            matching: None,
            classes: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("documents always serialize")
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|e| self.format_set(e)).collect();
        write!(f, "Clutter({} vertices; {})", self.n(), edges.join(" "))
    }
}

/// Vertex-by-edge 0/1 matrix: entry `(i, j)` is 1 iff vertex `i` lies in edge `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    entries: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.entries[row][col]
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.entries[row]
    }
}

/// True iff no edge of `c` is contained in `s`.
pub fn is_independent(c: &Clutter, s: &VertexSet) -> bool {
    assert_eq!(s.capacity(), c.n(), "set capacity must match the clutter");
    !c.contains_edge(s)
}

/// The JSON clutter format. `matching` and `classes` are optional
/// annotations consumed by the matching, shelling and admissible modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClutterDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<String>>>,
}

/// A parsed document: the clutter plus its optional annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub clutter: Clutter,
    pub matching: Option<Vec<VertexSet>>,
    pub classes: Option<Vec<VertexSet>>,
}

impl Instance {
    pub fn new(clutter: Clutter) -> Self {
        Instance {
            clutter,
            matching: None,
            classes: None,
        }
    }

    pub fn to_document(&self) -> ClutterDocument {
        let c = &self.clutter;
        let names = |sets: &Vec<VertexSet>| sets.iter().map(|s| c.set_names(s)).collect();
        ClutterDocument {
            matching: self.matching.as_ref().map(names),
            classes: self.classes.as_ref().map(names),
            ..c.to_document()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("documents always serialize")
    }
}

/// Parses the JSON clutter format. Vertex order follows the `vertices` array.
pub fn parse_clutter(text: &str) -> Result<Clutter> {
    parse_instance(text).map(|i| i.clutter)
}

/// Parses the JSON clutter format, keeping the `matching` and `classes`
/// annotations.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc: ClutterDocument =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    instance_from_document(doc)
}

pub fn instance_from_document(doc: ClutterDocument) -> Result<Instance> {
    let index = label_index(&doc.vertices)?;
    let n = doc.vertices.len();
    let to_sets = |lists: &[Vec<String>]| -> Result<Vec<VertexSet>> {
        lists
            .iter()
            .map(|l| names_to_set(&index, n, l.iter().map(String::as_str)))
            .collect()
    };
    let edges = to_sets(&doc.edges)?;
    let matching = doc.matching.as_deref().map(to_sets).transpose()?;
    let classes = doc.classes.as_deref().map(to_sets).transpose()?;
    let clutter = Clutter::new(doc.vertices, edges)?;
    Ok(Instance {
        clutter,
        matching,
        classes,
    })
}

fn validate_labels(labels: &[String]) -> Result<()> {
    label_index(labels).map(|_| ())
}

fn label_index(labels: &[String]) -> Result<HashMap<&str, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() {
            return Err(Error::EmptyVertexName);
        }
        if index.insert(l.as_str(), i).is_some() {
            return Err(Error::DuplicateVertex(l.clone()));
        }
    }
    Ok(index)
}

fn names_to_set<'a>(
    index: &HashMap<&str, usize>,
    n: usize,
    names: impl Iterator<Item = &'a str>,
) -> Result<VertexSet> {
    let mut s = VertexSet::empty(n);
    for name in names {
        let v = *index
            .get(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
        if !s.insert(v) {
            return Err(Error::Malformed(format!(
                "vertex `{name}` repeated in a set"
            )));
        }
    }
    Ok(s)
}

pub(crate) fn format_set(labels: &[String], s: &VertexSet) -> String {
    let names: Vec<&str> = s.iter().map(|v| labels[v].as_str()).collect();
    format!("{{{}}}", names.join(","))
}
