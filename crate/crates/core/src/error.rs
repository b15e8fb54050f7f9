use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed clutter document: {0}")]
    Malformed(String),

    #[error("vertex name must be a nonempty string")]
    EmptyVertexName,

    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("empty edge")]
    EmptyEdge,

    #[error("duplicate edge {0}")]
    DuplicateEdge(String),

    #[error("edge {inner} ⊂ {outer} violates clutter condition")]
    Containment { inner: String, outer: String },

    #[error("{what} is {value}, above the configured limit of {limit}")]
    SizeGuard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),

    #[error("not a perfect matching of König type: {0}")]
    NotKonigType(String),

    #[error("clutter is mixed (minimal vertex covers of different sizes)")]
    Mixed,

    #[error("isolated vertices present: {0}")]
    IsolatedVertices(String),

    #[error("not a graph: edge {0} does not have two vertices")]
    NotAGraph(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("facet {inner} is contained in facet {outer}")]
    FacetContainment { inner: String, outer: String },

    #[error("invalid admissible structure: {0}")]
    InvalidStructure(String),

    #[error("set meets color class {class} more than once")]
    ClassCollision { class: usize },

    #[error("matching edge {0} is not admissible")]
    MatchingEdgeNotAdmissible(String),

    #[error("clutter is not the complete admissible uniform clutter of the given structure")]
    NotCompleteAdmissibleUniform,

    #[error("the dual of the edgeless clutter is the unit ideal")]
    UnitDual,

    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),

    #[error("constructed order failed verification: {0}")]
    Construction(String),
}

impl Error {
    /// Resource refusals, as opposed to bad input.
    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::SizeGuard { .. })
    }
}
