//! Belief and plausibility on a concept lattice as inner and outer measures,
//! through both constructions.
//!
//! cargo run --example concept_representation

use conceptual_ds::rational::format_exact;
use conceptual_ds::represent::{represent_concepts, represent_concepts_frame};
use conceptual_ds::{
    bel, combine_many, parse_json_context, pl, verify_representation, Construction,
};

fn main() -> conceptual_ds::Result<()> {
    let doc = parse_json_context(include_str!("../fixtures/music.json"))?;
    let lattice = doc.build_lattice()?;
    let masses: Vec<_> = ["m1", "m2", "m3"]
        .iter()
        .map(|name| doc.resolve_named(&lattice, name))
        .collect::<conceptual_ds::Result<_>>()?;
    let combined = combine_many(&masses)?.result;

    // The algebraic construction: one atom d* per concept.
    let algebraic = represent_concepts(&combined)?;
    for c in lattice.ids() {
        println!(
            "{:<8} bel {:>5} = {:>5}   pl {:>5} = {:>5}",
            lattice.label(c),
            format_exact(&bel(&combined, c)),
            format_exact(&algebraic.inner_measure(c)),
            format_exact(&pl(&combined, c)),
            format_exact(&algebraic.outer_measure(c)),
        );
    }

    // The frame construction: a derived context whose extents form the space.
    let frame = represent_concepts_frame(&combined)?;
    let derived = frame.derived_context();
    println!(
        "derived context: {} objects, {} attributes",
        derived.num_objects(),
        derived.num_attributes()
    );

    for construction in [Construction::Algebraic, Construction::Frame] {
        let report = verify_representation(&combined, construction)?;
        println!(
            "{construction}: {}",
            if report.passed() {
                "verified"
            } else {
                "FAILED"
            }
        );
    }
    Ok(())
}
