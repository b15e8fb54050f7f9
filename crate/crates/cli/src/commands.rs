use clutterkit::admissible::{
    alexander_dual_with, dual_ideal_generators, generate_complete_admissible_uniform_with,
    generate_complete_admissible_with, grid_labels, has_linear_quotients_with, lex_shelling,
    AdmissibleStructure, Mode,
};
use clutterkit::bipartite::{
    bipartite_perfect_matching, bipartition, h1_ordering, herzog_hibi_cm, skeleton_shelling,
    unmixed_bipartite_check, whisker, IsolatedPolicy,
};
use clutterkit::covers::{
    covering_number_with, minimal_vertex_covers_with, stanley_reisner_facets_with,
};
use clutterkit::matching::{
    find_perfect_matching_konig_with, has_konig_property_with, maximum_edge_matching_with,
};
use clutterkit::minors::{all_cminors_have_free_vertex_with, contract, delete};
use clutterkit::selftest;
use clutterkit::shelling::{bruteforce_shelling_with, recursive_shelling_with, ShellingOrder};
use clutterkit::structure::{
    char_tbc_condition_b_with, find_cycle_of_length_with, ordering_condition_with,
    theorem25_equivalence_report_with, CycleWitness,
};
use clutterkit::{Clutter, Instance, Limits, Minor, VertexSet};
use serde_json::{json, Value};

use crate::report::{name_list, names, shelling_witness, Failure, Outcome};

type Run = Result<Outcome, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Property {
    Unmixed,
    Konig,
    Ordering,
    Balanced,
    TotallyBalanced,
    FreeVertex,
    Theorem25,
    CharTbc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Recursive,
    Bruteforce,
    Lex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Criterion {
    HerzogHibi,
    H1,
    Unmixed,
    SkeletonShelling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum QuotientSource {
    /// Complements of the edges.
    Dual,
    /// The edges themselves.
    Edges,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorStep {
    Contract(String),
    Delete(String),
}

fn required_matching(inst: &Instance) -> Result<&[VertexSet], Failure> {
    inst.matching
        .as_deref()
        .ok_or_else(|| Failure::Usage("this check needs a \"matching\" in the input".into()))
}

fn cycle_json(c: &Clutter, w: &CycleWitness) -> Value {
    json!({
        "vertices": w.vertices.iter().map(|&v| c.label(v)).collect::<Vec<_>>(),
        "edges": w.edges.iter().map(|&e| names(c, &c.edges()[e])).collect::<Vec<_>>(),
    })
}

/// The first cycle whose length passes `accept`, trying lengths from 3 up.
fn first_cycle(
    c: &Clutter,
    limits: &Limits,
    accept: impl Fn(usize) -> bool,
) -> Result<Option<CycleWitness>, Failure> {
    for r in (3..=c.n().min(c.num_edges())).filter(|&r| accept(r)) {
        if let Some(w) = find_cycle_of_length_with(c, r, limits)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub fn check(inst: &Instance, property: Property, limits: &Limits) -> Run {
    let c = &inst.clutter;
    Ok(match property {
        Property::Unmixed => {
            let covers = minimal_vertex_covers_with(c, limits)?;
            let smallest = covers.iter().min_by_key(|s| s.len());
            let largest = covers.iter().max_by_key(|s| s.len());
            match (smallest, largest) {
                (Some(a), Some(b)) if a.len() != b.len() => Outcome::flag(
                    false,
                    json!({"smaller_cover": names(c, a), "larger_cover": names(c, b)}),
                ),
                _ => Outcome::flag(true, Value::Null),
            }
        }
        Property::Konig => {
            let m = maximum_edge_matching_with(c, limits)?;
            let g = covering_number_with(c, limits)?;
            let holds = has_konig_property_with(c, limits)?;
            Outcome::flag(
                holds,
                json!({"matching": name_list(c, m.edges()), "covering_number": g}),
            )
        }
        Property::Ordering => Outcome::flag(
            ordering_condition_with(c, required_matching(inst)?, limits)?,
            Value::Null,
        ),
        Property::Balanced => match first_cycle(c, limits, |r| r % 2 == 1)? {
            Some(w) => Outcome::flag(false, json!({"odd_cycle": cycle_json(c, &w)})),
            None => Outcome::flag(true, Value::Null),
        },
        Property::TotallyBalanced => match first_cycle(c, limits, |_| true)? {
            Some(w) => Outcome::flag(false, json!({"cycle": cycle_json(c, &w)})),
            None => Outcome::flag(true, Value::Null),
        },
        Property::FreeVertex => {
            Outcome::flag(all_cminors_have_free_vertex_with(c, limits)?, Value::Null)
        }
        Property::Theorem25 => {
            let report = theorem25_equivalence_report_with(c, required_matching(inst)?, limits)?;
            let agree = report.all_agree();
            Outcome::flag(
                agree && report.unmixed,
                json!({"conditions": report, "all_agree": agree}),
            )
        }
        Property::CharTbc => match char_tbc_condition_b_with(c, limits)? {
            Some(m) => Outcome::flag(true, json!({"matching": name_list(c, m.edges())})),
            None => Outcome::flag(false, Value::Null),
        },
    })
}

pub fn covers(inst: &Instance, limits: &Limits) -> Run {
    let c = &inst.clutter;
    let covers = minimal_vertex_covers_with(c, limits)?;
    let facets = stanley_reisner_facets_with(c, limits)?;
    let g = covering_number_with(c, limits)?;
    Ok(Outcome::holds(
        name_list(c, &covers),
        json!({"covering_number": g, "facets": name_list(c, &facets)}),
    ))
}

pub fn matching(inst: &Instance, konig_type: bool, limits: &Limits) -> Run {
    let c = &inst.clutter;
    let g = covering_number_with(c, limits)?;
    if konig_type {
        return Ok(match find_perfect_matching_konig_with(c, limits)? {
            Some(m) => Outcome::holds(name_list(c, m.edges()), json!({"covering_number": g})),
            None => Outcome::absent(json!({"covering_number": g})),
        });
    }
    let m = maximum_edge_matching_with(c, limits)?;
    Ok(Outcome::holds(
        name_list(c, m.edges()),
        json!({
            "covering_number": g,
            "konig_property": m.len() == g,
            "perfect": m.is_perfect(),
            "konig_type": m.is_konig_type(),
        }),
    ))
}

pub fn minor(inst: &Instance, steps: &[MinorStep]) -> Run {
    let mut current = Minor::Proper(inst.clutter.clone());
    for step in steps {
        let Minor::Proper(c) = &current else {
            break;
        };
        let (name, contracting) = match step {
            MinorStep::Contract(v) => (v, true),
            MinorStep::Delete(v) => (v, false),
        };
        let v = c
            .vertex_index(name)
            .ok_or_else(|| Failure::Library(clutterkit::Error::UnknownVertex(name.clone())))?;
        current = if contracting {
            contract(c, v)?
        } else {
            Minor::Proper(delete(c, v)?)
        };
    }
    Ok(match current {
        Minor::Proper(c) => Outcome::holds(json!(c.to_document()), json!({"improper": false})),
        Minor::Improper => Outcome::holds(json!("improper"), json!({"improper": true})),
    })
}

fn shelling_outcome(c: &Clutter, order: Option<ShellingOrder>) -> Outcome {
    match order {
        Some(order) => Outcome::holds(name_list(c, order.facets()), shelling_witness(c, &order)),
        None => Outcome::absent(Value::Null),
    }
}

pub fn shell(inst: &Instance, method: Method, limits: &Limits) -> Run {
    let c = &inst.clutter;
    match method {
        Method::Bruteforce => {
            let facets = stanley_reisner_facets_with(c, limits)?;
            Ok(shelling_outcome(
                c,
                bruteforce_shelling_with(&facets, limits)?,
            ))
        }
        Method::Recursive => {
            let m = match &inst.matching {
                Some(m) => m.clone(),
                None => match find_perfect_matching_konig_with(c, limits)? {
                    Some(m) => m.into_edges(),
                    None => {
                        return Ok(Outcome::absent(
                            json!({"reason": "no perfect matching of König type"}),
                        ))
                    }
                },
            };
            Ok(shelling_outcome(c, recursive_shelling_with(c, &m, limits)?))
        }
        Method::Lex => {
            let (Some(classes), Some(m)) = (&inst.classes, &inst.matching) else {
                return Err(Failure::Usage(
                    "lex shelling needs \"classes\" and \"matching\" in the input".into(),
                ));
            };
            let a = AdmissibleStructure::new(c.n(), classes.clone(), m.clone())?;
            Ok(shelling_outcome(c, Some(lex_shelling(c, &a)?)))
        }
    }
}

pub fn gen_complete_admissible(g: usize, d: usize, relaxed: bool, limits: &Limits) -> Run {
    let (clutter, a) = if relaxed {
        let a = AdmissibleStructure::grid(g, d);
        let c = generate_complete_admissible_with(grid_labels(g, d), &a, Mode::Relaxed, limits)?;
        (c, a)
    } else {
        generate_complete_admissible_uniform_with(g, d, limits)?
    };
    let inst = Instance {
        clutter,
        matching: Some(a.matching().to_vec()),
        classes: Some(a.classes().to_vec()),
    };
    let edges = inst.clutter.num_edges();
    Ok(Outcome::holds(
        json!(inst.to_document()),
        json!({"edges": edges}),
    ))
}

pub fn dual(inst: &Instance, limits: &Limits) -> Run {
    let dual = alexander_dual_with(&inst.clutter, limits)?;
    Ok(Outcome::holds(json!(dual.to_document()), Value::Null))
}

pub fn dual_ideal(inst: &Instance) -> Run {
    let c = &inst.clutter;
    Ok(Outcome::holds(
        name_list(c, &dual_ideal_generators(c)),
        Value::Null,
    ))
}

pub fn linear_quotients(inst: &Instance, source: QuotientSource, limits: &Limits) -> Run {
    let c = &inst.clutter;
    let gens = match source {
        QuotientSource::Dual => dual_ideal_generators(c),
        QuotientSource::Edges => c.edges().to_vec(),
    };
    Ok(match has_linear_quotients_with(&gens, limits)? {
        Some(order) => {
            let ordered: Vec<VertexSet> = order.iter().map(|&k| gens[k].clone()).collect();
            Outcome::holds(name_list(c, &ordered), json!({"order": order}))
        }
        None => Outcome::absent(Value::Null),
    })
}

/// The input matching, or the perfect matching found by augmenting paths.
fn bipartite_matching(inst: &Instance) -> Result<Option<Vec<VertexSet>>, Failure> {
    if let Some(m) = &inst.matching {
        return Ok(Some(m.clone()));
    }
    let c = &inst.clutter;
    let (first, _) = bipartition(c)?.ok_or(Failure::Library(clutterkit::Error::NotBipartite))?;
    Ok(bipartite_perfect_matching(c, &first))
}

pub fn bipartite(inst: &Instance, criterion: Criterion, policy: IsolatedPolicy) -> Run {
    let c = &inst.clutter;
    let no_matching = || Outcome::absent(json!({"reason": "no perfect matching"}));
    Ok(match criterion {
        Criterion::HerzogHibi => match herzog_hibi_cm(c, policy)? {
            Some(cert) => {
                let pairs: Vec<Value> = cert
                    .x
                    .iter()
                    .zip(&cert.y)
                    .map(|(&x, &y)| json!([c.label(x), c.label(y)]))
                    .collect();
                Outcome::flag(true, json!({"ordered_pairs": pairs}))
            }
            None => Outcome::flag(false, Value::Null),
        },
        Criterion::H1 => {
            let Some(m) = bipartite_matching(inst)? else {
                return Ok(no_matching());
            };
            match h1_ordering(c, &m)? {
                Some(order) => {
                    let ordered: Vec<VertexSet> = order.iter().map(|&k| m[k].clone()).collect();
                    Outcome::flag(true, json!({"ordered_matching": name_list(c, &ordered)}))
                }
                None => Outcome::flag(false, Value::Null),
            }
        }
        Criterion::Unmixed => match unmixed_bipartite_check(c, policy)? {
            Some(m) => Outcome::flag(true, json!({"matching": name_list(c, m.edges())})),
            None => Outcome::flag(false, Value::Null),
        },
        Criterion::SkeletonShelling => {
            let Some(m) = bipartite_matching(inst)? else {
                return Ok(no_matching());
            };
            shelling_outcome(c, skeleton_shelling(c, &m)?)
        }
    })
}

pub fn whiskered(inst: &Instance) -> Run {
    let w = whisker(&inst.clutter)?;
    let n = inst.clutter.n();
    let m = clutterkit::bipartite::whisker_matching(n);
    let doc = Instance {
        clutter: w,
        matching: Some(m),
        classes: None,
    }
    .to_document();
    Ok(Outcome::holds(json!(doc), Value::Null))
}

pub fn run_selftest(seed: u64, timing: bool) -> Run {
    let outcomes = selftest::run_all(seed);
    let passed = outcomes.iter().all(|o| o.passed);
    for o in &outcomes {
        eprintln!("{o}");
    }
    let rows: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            let mut row =
                json!({"id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail});
            if timing {
                row["elapsed_ms"] = json!(o.elapsed_ms);
            }
            row
        })
        .collect();
    Ok(Outcome {
        result: Value::Bool(passed),
        witness: json!({"seed": seed, "criteria": rows}),
        holds: passed,
    })
}
