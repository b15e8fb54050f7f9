//! The acceptance suite, runnable from tests and from the command line.

use std::time::Instant;

use serde::Serialize;

use crate::admissible::{
    alexander_dual, find_admissible_uniform_structure, generate_complete_admissible_uniform,
    is_complete_admissible_uniform, lex_shelling,
};
use crate::bipartite::{
    h1_ordering, herzog_hibi_cm, skeleton_facets, skeleton_shelling, whisker, whisker_matching,
    IsolatedPolicy,
};
use crate::clutter::Clutter;
use crate::covers::{covering_number, is_unmixed, minimal_vertex_covers, stanley_reisner_facets};
use crate::fixtures;
use crate::generators::{self, KonigInstance};
use crate::limits::Limits;
use crate::matching::{find_perfect_matching_konig, has_konig_property, maximum_edge_matching};
use crate::oracle;
use crate::shelling::{
    bruteforce_shelling_with, recursive_shelling, verify_shelling, ShellingOrder,
};
use crate::structure::{
    char_tbc_condition_b, has_cycle_of_length, is_balanced, matching_edges_have_free_vertex,
    ordering_condition, theorem25_equivalence_report,
};
use crate::vertex_set::{sort_canonical, VertexSet};

type Check = std::result::Result<String, String>;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

struct Criterion {
    name: &'static str,
    run: fn(u64) -> Check,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        name: "konig property without a konig-type perfect matching",
        run: konig_without_matching,
    },
    Criterion {
        name: "lexicographic shelling of the (3,3) complete admissible clutter",
        run: lex_order_3_3,
    },
    Criterion {
        name: "alexander duality of complete admissible uniform clutters",
        run: duality_suite,
    },
    Criterion {
        name: "five-way equivalence fuzz",
        run: equivalence_fuzz,
    },
    Criterion {
        name: "ordering condition implies unmixed and shellable",
        run: ordering_implies_shellable,
    },
    Criterion {
        name: "no short cycles implies ordering and free vertices",
        run: no_short_cycles,
    },
    Criterion {
        name: "bipartite skeleton example",
        run: bipartite_skeleton_example,
    },
    Criterion {
        name: "unmixed clutter that is not shellable",
        run: gap_example,
    },
    Criterion {
        name: "balanced clutter with no admissible uniform reordering",
        run: balanced_not_admissible,
    },
    Criterion {
        name: "bipartite three-way agreement",
        run: bipartite_agreement,
    },
    Criterion {
        name: "whiskered graphs are ordered and shellable",
        run: whisker_suite,
    },
    Criterion {
        name: "oracle equivalences",
        run: oracle_equivalences,
    },
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

/// Runs criterion `id` (1-based). Each randomized criterion draws from its
/// own stream derived from `seed`.
///
/// # Panics
/// If `id` is out of range.
pub fn run_criterion(id: usize, seed: u64) -> CriterionOutcome {
    let criterion = &CRITERIA[id - 1];
    let start = Instant::now();
    let result = (criterion.run)(seed.wrapping_add(id as u64));
    let elapsed_ms = start.elapsed().as_millis();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionOutcome {
        id,
        name: criterion.name,
        passed,
        detail,
        elapsed_ms,
    }
}

pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    (1..=CRITERIA.len())
        .map(|id| run_criterion(id, seed))
        .collect()
}

impl std::fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {:>2}. {}: {}",
            self.id, self.name, self.detail
        )
    }
}

fn ok<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sorted(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sort_canonical(&mut sets);
    sets
}

fn instance(name: &str) -> std::result::Result<(Clutter, Option<Vec<VertexSet>>), String> {
    let inst = ok(fixtures::load(name))?;
    Ok((inst.clutter, inst.matching))
}

fn konig_without_matching(_: u64) -> Check {
    let (c, _) = instance("konig_without_matching")?;
    let konig = ok(has_konig_property(&c))?;
    let height = ok(covering_number(&c))?;
    let perfect = ok(find_perfect_matching_konig(&c))?;
    ensure(konig && height == 4 && perfect.is_none(), || {
        format!(
            "konig={konig} height={height} perfect={}",
            perfect.is_some()
        )
    })?;
    Ok("konig=true, height=4, no konig-type perfect matching".into())
}

/// The lexicographic order, classes written as letters and matching indices as digits.
const EXPECTED_LEX_ORDER: [&str; 10] = [
    "x1y1z1", "x1y1z2", "x1y1z3", "x1y2z2", "x1y2z3", "x1y3z3", "x2y2z2", "x2y2z3", "x2y3z3",
    "x3y3z3",
];

fn expected_facet(c: &Clutter, word: &str) -> std::result::Result<VertexSet, String> {
    let chars: Vec<char> = word.chars().collect();
    let names: Vec<String> = chars
        .chunks(2)
        .map(|p| {
            let class = "xyz".find(p[0]).expect("class letter") + 1;
            format!("x{class}_{}", p[1])
        })
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    ok(c.set_from_names(&refs))
}

fn lex_order_3_3(_: u64) -> Check {
    let (c, a) = ok(generate_complete_admissible_uniform(3, 3))?;
    ensure(c.num_edges() == 10, || format!("{} edges", c.num_edges()))?;
    let order = ok(lex_shelling(&c, &a))?;
    let expected = EXPECTED_LEX_ORDER
        .iter()
        .map(|w| expected_facet(&c, w))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    ensure(order.facets() == expected.as_slice(), || {
        let got: Vec<String> = order.facets().iter().map(|f| c.format_set(f)).collect();
        format!("order differs: {}", got.join(" < "))
    })?;
    let verified = ok(verify_shelling(order.facets()))?;
    ensure(verified.is_shelling(), || {
        "verify_shelling rejects the order".into()
    })?;
    let fixture = ok(fixtures::load("complete_admissible_3_3"))?;
    ensure(fixture.clutter == c, || {
        "generated clutter differs from the fixture".into()
    })?;
    Ok("10 edges in lexicographic order, verified".into())
}

fn duality_suite(_: u64) -> Check {
    let mut cases = 0;
    for g in 1..=4 {
        for d in 1..=4 {
            let (c, a) = ok(generate_complete_admissible_uniform(g, d))?;
            let dual = ok(alexander_dual(&c))?;
            let swapped = ok(a.swapped())?;
            ensure(ok(is_complete_admissible_uniform(&dual, &swapped))?, || {
                format!("(g,d)=({g},{d}): dual is not the swapped complete clutter")
            })?;
            let back = ok(alexander_dual(&dual))?;
            ensure(back == c, || {
                format!("(g,d)=({g},{d}): double dual differs")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} grids, 0 failures"))
}

fn equivalence_fuzz(seed: u64) -> Check {
    let mut rng = generators::rng(seed);
    let mut holding = 0;
    for k in 0..1000 {
        let inst = if k % 2 == 0 {
            generators::random_konig_instance(&mut rng, 12)
        } else {
            generators::random_ordering_instance(&mut rng, 12)
        };
        let report = ok(theorem25_equivalence_report(&inst.clutter, &inst.matching))?;
        ensure(report.all_agree(), || {
            format!(
                "instance {k} disagrees: {report:?} on {}",
                inst.clutter.to_json()
            )
        })?;
        holding += usize::from(report.unmixed);
    }
    Ok(format!(
        "1000 instances agree ({holding} unmixed, {} mixed)",
        1000 - holding
    ))
}

fn check_shelling_of_facets(c: &Clutter, order: &ShellingOrder) -> std::result::Result<(), String> {
    ensure(ok(verify_shelling(order.facets()))?.is_shelling(), || {
        format!("invalid shelling for {}", c.to_json())
    })?;
    ensure(order.is_pure(), || {
        format!("shelling not pure for {}", c.to_json())
    })?;
    let facets = ok(stanley_reisner_facets(c))?;
    ensure(sorted(order.facets().to_vec()) == sorted(facets), || {
        format!("shelled facets differ from the complex of {}", c.to_json())
    })
}

fn ordering_implies_shellable(seed: u64) -> Check {
    let mut rng = generators::rng(seed);
    let mut extra_edges = 0;
    for _ in 0..500 {
        let KonigInstance {
            clutter: c,
            matching: m,
        } = generators::random_ordering_instance(&mut rng, 12);
        ensure(ok(ordering_condition(&c, &m))?, || {
            format!("generator produced an unordered instance {}", c.to_json())
        })?;
        ensure(ok(is_unmixed(&c))?, || format!("mixed: {}", c.to_json()))?;
        let order = ok(recursive_shelling(&c, &m))?
            .ok_or_else(|| format!("no shelling for {}", c.to_json()))?;
        check_shelling_of_facets(&c, &order)?;
        extra_edges += c.num_edges() - m.len();
    }
    Ok(format!(
        "500 instances shelled ({extra_edges} non-matching edges in total)"
    ))
}

fn no_short_cycles(seed: u64) -> Check {
    let mut rng = generators::rng(seed);
    let (mut found, mut attempts, mut extra_edges) = (0, 0u64, 0);
    while found < 500 {
        attempts += 1;
        ensure(attempts <= 2_000_000, || {
            format!("only {found} qualifying instances in {attempts} draws")
        })?;
        let inst = if attempts % 2 == 0 {
            generators::random_konig_instance(&mut rng, 10)
        } else {
            generators::random_ordering_instance(&mut rng, 10)
        };
        let (c, m) = (&inst.clutter, &inst.matching);
        if c.num_edges() == m.len()
            || ok(has_cycle_of_length(c, 3))?
            || ok(has_cycle_of_length(c, 4))?
            || !ok(is_unmixed(c))?
        {
            continue;
        }
        found += 1;
        extra_edges += c.num_edges() - m.len();
        ensure(ok(ordering_condition(c, m))?, || {
            format!("ordering fails: {}", c.to_json())
        })?;
        ensure(ok(matching_edges_have_free_vertex(c, m))?, || {
            format!("matching edge without free vertex: {}", c.to_json())
        })?;
        let order = ok(recursive_shelling(c, m))?
            .ok_or_else(|| format!("no shelling for {}", c.to_json()))?;
        check_shelling_of_facets(c, &order)?;
    }
    Ok(format!(
        "500 instances with {extra_edges} non-matching edges in total, from {attempts} draws"
    ))
}

const EXPECTED_SKELETON: [[&str; 5]; 6] = [
    ["x1", "x2", "x3", "x4", "x5"],
    ["x2", "x3", "x4", "x5", "y1"],
    ["x3", "x4", "x5", "y1", "y2"],
    ["x4", "x5", "y1", "y2", "y3"],
    ["x5", "y1", "y2", "y3", "y4"],
    ["y1", "y2", "y3", "y4", "y5"],
];

fn bipartite_skeleton_example(_: u64) -> Check {
    let (c, m) = instance("bipartite_skeleton")?;
    let m = m.ok_or("fixture has no matching")?;
    let facets = ok(skeleton_facets(&c, 5, &Limits::default()))?;
    let expected = EXPECTED_SKELETON
        .iter()
        .map(|f| ok(c.set_from_names(f)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    ensure(sorted(facets.clone()) == sorted(expected.clone()), || {
        let got: Vec<String> = facets.iter().map(|f| c.format_set(f)).collect();
        format!("skeleton facets {}", got.join(", "))
    })?;
    let order = ok(skeleton_shelling(&c, &m))?.ok_or("skeleton_shelling found nothing")?;
    ensure(
        ok(verify_shelling(order.facets()))?.is_shelling() && order.is_pure(),
        || "skeleton shelling invalid".into(),
    )?;
    ensure(sorted(order.facets().to_vec()) == sorted(expected), || {
        "skeleton shelling has the wrong facets".into()
    })?;
    ensure(ok(h1_ordering(&c, &m))?.is_some(), || {
        "no h1 ordering".into()
    })?;
    ensure(!ok(is_unmixed(&c))?, || "reported unmixed".into())?;
    ensure(
        ok(herzog_hibi_cm(&c, IsolatedPolicy::Reject))?.is_none(),
        || "certificate produced for a mixed graph".into(),
    )?;
    Ok("6 skeleton facets, valid shelling, h1 ordering exists, mixed, no certificate".into())
}

fn gap_example(_: u64) -> Check {
    let (c, _) = instance("gap_admissible")?;
    ensure(ok(is_unmixed(&c))?, || "reported mixed".into())?;
    let m = ok(find_perfect_matching_konig(&c))?.ok_or("no konig-type matching")?;
    let expected_m = vec![
        ok(c.set_from_names(&["x1", "y1"]))?,
        ok(c.set_from_names(&["y2", "z2"]))?,
    ];
    ensure(sorted(m.edges().to_vec()) == sorted(expected_m), || {
        let got: Vec<String> = m.edges().iter().map(|e| c.format_set(e)).collect();
        format!("matching {}", got.join(", "))
    })?;
    let facets = ok(stanley_reisner_facets(&c))?;
    let expected = vec![
        ok(c.set_from_names(&["x1", "z2"]))?,
        ok(c.set_from_names(&["y1", "y2"]))?,
    ];
    ensure(sorted(facets.clone()) == sorted(expected), || {
        "unexpected facets".into()
    })?;
    ensure(
        ok(crate::shelling::bruteforce_shelling(&facets))?.is_none(),
        || "found a shelling".into(),
    )?;
    Ok("unmixed, matching {x1,y1},{y2,z2}, facets {x1,z2},{y1,y2}, not shellable".into())
}

fn balanced_not_admissible(_: u64) -> Check {
    let (c, _) = instance("balanced_not_admissible")?;
    ensure(ok(is_balanced(&c))?, || "not balanced".into())?;
    ensure(ok(char_tbc_condition_b(&c))?.is_some(), || {
        "no witness matching".into()
    })?;
    ensure(ok(find_admissible_uniform_structure(&c))?.is_none(), || {
        "found an admissible uniform structure".into()
    })?;
    Ok("balanced, witness matching found, no admissible uniform structure".into())
}

fn bipartite_agreement(seed: u64) -> Check {
    let mut rng = generators::rng(seed);
    let limits = Limits::default().with_max_shelling_facets(usize::MAX);
    let (mut shellable, mut cm) = (0, 0);
    for _ in 0..300 {
        let KonigInstance {
            clutter: c,
            matching: m,
        } = generators::random_bipartite_with_perfect_matching(&mut rng, 14);
        let g = m.len();
        let h1 = ok(h1_ordering(&c, &m))?.is_some();
        let constructed = ok(skeleton_shelling(&c, &m))?;
        let facets = ok(skeleton_facets(&c, g, &limits))?;
        let searched = ok(bruteforce_shelling_with(&facets, &limits))?.is_some();
        ensure(h1 == constructed.is_some() && h1 == searched, || {
            format!(
                "h1={h1} constructed={} searched={searched} on {}",
                constructed.is_some(),
                c.to_json()
            )
        })?;
        if let Some(order) = &constructed {
            ensure(ok(verify_shelling(order.facets()))?.is_shelling(), || {
                format!("invalid skeleton shelling on {}", c.to_json())
            })?;
            ensure(sorted(order.facets().to_vec()) == sorted(facets), || {
                format!("skeleton shelling has the wrong facets on {}", c.to_json())
            })?;
        }
        let certificate = ok(herzog_hibi_cm(&c, IsolatedPolicy::Reject))?.is_some();
        let unmixed = ok(is_unmixed(&c))?;
        ensure(certificate == (unmixed && h1), || {
            format!(
                "certificate={certificate} unmixed={unmixed} shellable={h1} on {}",
                c.to_json()
            )
        })?;
        shellable += usize::from(h1);
        cm += usize::from(certificate);
    }
    Ok(format!(
        "300 graphs agree ({shellable} shellable skeletons, {cm} certified)"
    ))
}

fn whisker_suite(seed: u64) -> Check {
    let mut rng = generators::rng(seed);
    for _ in 0..200 {
        let g = generators::random_graph(&mut rng, 6);
        let w = ok(whisker(&g))?;
        let m = whisker_matching(g.n());
        ensure(ok(ordering_condition(&w, &m))?, || {
            format!("ordering fails on {}", w.to_json())
        })?;
        let order = ok(recursive_shelling(&w, &m))?
            .ok_or_else(|| format!("no shelling for {}", w.to_json()))?;
        check_shelling_of_facets(&w, &order)?;
    }
    Ok("200 whiskered graphs ordered and shelled".into())
}

fn oracle_equivalences(seed: u64) -> Check {
    let mut rng = generators::rng(seed);
    for _ in 0..100 {
        let c = generators::random_clutter(&mut rng, 16, 20);
        ensure(
            ok(minimal_vertex_covers(&c))? == oracle::covers_by_subset_scan(&c),
            || format!("covers differ on {}", c.to_json()),
        )?;
    }
    for _ in 0..300 {
        let c = generators::random_clutter(&mut rng, 8, 8);
        for r in 3..=8 {
            let fast = ok(has_cycle_of_length(&c, r))?;
            ensure(fast == oracle::cycle_by_submatrix_scan(&c, r), || {
                format!("cycle of length {r} disagrees on {}", c.to_json())
            })?;
        }
    }
    for _ in 0..300 {
        let c = generators::random_clutter(&mut rng, 12, 15);
        let m = ok(maximum_edge_matching(&c))?;
        let mut got: Vec<usize> = m.edges().iter().filter_map(|e| c.edge_index(e)).collect();
        got.sort_unstable();
        ensure(got == oracle::max_matching_by_subset_scan(&c), || {
            format!("maximum matching differs on {}", c.to_json())
        })?;
    }
    Ok("100 cover, 300 cycle and 300 matching comparisons agree".into())
}
