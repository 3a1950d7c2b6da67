//! Dempster's rule on concepts: two conflicting opinions, once over three
//! unrelated movies and once over a context where the movies share a viewer.
//!
//! cargo run --example combine

use conceptual_ds::golden::Case;
use conceptual_ds::rational::format_exact;
use conceptual_ds::{combine, combine_many, parse_json_context, Error};

fn main() -> conceptual_ds::Result<()> {
    for case in [Case::Movies1, Case::Movies3] {
        let doc = parse_json_context(case.fixture())?;
        let lattice = doc.build_lattice()?;
        let m1 = doc.resolve_named(&lattice, "m1")?;
        let m2 = doc.resolve_named(&lattice, "m2")?;
        let report = combine(&m1, &m2)?;
        println!("{}", case.title());
        println!("  conflict {}", format_exact(&report.conflict));
        for (c, v) in report.result.support() {
            println!("  {:<6} {}", lattice.label(c), format_exact(v));
        }
    }

    // Two masses with disjoint focal elements cannot be combined.
    let doc = parse_json_context(
        r#"{"objects": ["a", "b"], "attributes": ["x", "y"],
            "incidence": [["a", "x"], ["b", "y"]],
            "masses": {"left": {"{a}": "1"}, "right": {"{b}": "1"}}}"#,
    )?;
    let lattice = doc.build_lattice()?;
    let left = doc.resolve_named(&lattice, "left")?;
    let right = doc.resolve_named(&lattice, "right")?;
    match combine_many(&[left.clone(), left, right]) {
        Err(Error::TotalConflict { step }) => println!("total conflict at step {step}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
