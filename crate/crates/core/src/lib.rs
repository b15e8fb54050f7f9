//! Combinatorial tools for clutters and their square-free monomial edge
//! ideals: vertex covers, König-type matchings, minors, cycle detection,
//! shellings, admissible clutters, and Alexander duality.
//!
//! Every algorithm works on edge supports only; no polynomial arithmetic
//! is performed. The exponential searches are guarded by [`Limits`].

pub mod admissible;
pub mod bipartite;
pub mod clutter;
pub mod covers;
mod error;
pub mod fixtures;
pub mod generators;
mod limits;
pub mod matching;
pub mod minors;
pub mod monomial;
pub mod oracle;
pub mod selftest;
pub mod shelling;
pub mod structure;
pub mod vertex_set;

pub use clutter::{is_independent, parse_clutter, parse_instance, Clutter, Instance};
pub use covers::{covering_number, minimal_vertex_covers, stanley_reisner_facets};
pub use error::{Error, Result};
pub use limits::Limits;
pub use matching::Matching;
pub use minors::Minor;
pub use shelling::ShellingOrder;
pub use vertex_set::VertexSet;
