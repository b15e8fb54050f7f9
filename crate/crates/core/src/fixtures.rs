//! Named example instances shipped with the crate.

use crate::clutter::{parse_instance, Instance};
use crate::Result;

/// `(name, JSON document)` for every bundled instance.
pub const ALL: &[(&str, &str)] = &[
    ("p4", include_str!("../fixtures/p4.json")),
    ("k22", include_str!("../fixtures/k22.json")),
    (
        "konig_without_matching",
        include_str!("../fixtures/konig_without_matching.json"),
    ),
    (
        "gap_admissible",
        include_str!("../fixtures/gap_admissible.json"),
    ),
    (
        "balanced_not_admissible",
        include_str!("../fixtures/balanced_not_admissible.json"),
    ),
    (
        "bipartite_skeleton",
        include_str!("../fixtures/bipartite_skeleton.json"),
    ),
    (
        "balanced_admissible",
        include_str!("../fixtures/balanced_admissible.json"),
    ),
    (
        "uniform_admissible",
        include_str!("../fixtures/uniform_admissible.json"),
    ),
    (
        "complete_admissible_3_3",
        include_str!("../fixtures/complete_admissible_3_3.json"),
    ),
];

/// Parses the bundled instance `name`.
///
/// # Panics
/// If no fixture has that name.
pub fn load(name: &str) -> Result<Instance> {
    let (_, text) = ALL
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture named `{name}`"));
    parse_instance(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        for (name, _) in ALL {
            let inst = load(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(inst.clutter.num_edges() > 0, "{name}");
        }
    }

    #[test]
    fn konig_example_has_seven_edges() {
        assert_eq!(
            load("konig_without_matching").unwrap().clutter.num_edges(),
            7
        );
    }
}
