/// Size guards for the exponential searches.
///
/// Exceeding a guard produces [`crate::Error::SizeGuard`], which callers
/// should treat as a refusal to compute rather than as bad input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex universe for cover enumeration and the searches built on it.
    pub max_vertices: usize,
    /// Largest edge count for matching and cycle searches.
    pub max_edges: usize,
    /// Largest facet count accepted by the exhaustive shelling search.
    pub max_shelling_facets: usize,
    /// Largest generator count for the linear-quotients search.
    pub max_generators: usize,
    /// Largest edge count a complete admissible clutter may be generated with.
    pub max_generated_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 28,
            max_edges: 128,
            max_shelling_facets: 9,
            max_generators: 64,
            max_generated_edges: 20_000,
        }
    }
}

impl Limits {
    pub fn with_max_shelling_facets(mut self, facets: usize) -> Self {
        self.max_shelling_facets = facets;
        self
    }

    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.max_vertices = n;
        self
    }

    pub(crate) fn check(what: &'static str, value: usize, limit: usize) -> crate::Result<()> {
        if value > limit {
            Err(crate::Error::SizeGuard { what, value, limit })
        } else {
            Ok(())
        }
    }
}
