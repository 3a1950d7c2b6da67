//! Belief and plausibility of every concept, and recovering the mass from
//! the belief values.
//!
//! cargo run --example belief

use conceptual_ds::rational::format_exact;
use conceptual_ds::{bel, belief_table, mass_from_bel_lattice, parse_json_context, pl};

fn main() -> conceptual_ds::Result<()> {
    let doc = parse_json_context(include_str!("../fixtures/music.json"))?;
    let lattice = doc.build_lattice()?;
    let m3 = doc.resolve_named(&lattice, "m3")?;

    println!("{:<8} {:>6} {:>6} {:>6}", "concept", "m", "bel", "pl");
    for c in lattice.ids() {
        println!(
            "{:<8} {:>6} {:>6} {:>6}",
            lattice.label(c),
            format_exact(m3.value(c)),
            format_exact(&bel(&m3, c)),
            format_exact(&pl(&m3, c)),
        );
    }

    let table = belief_table(&m3);
    let back = mass_from_bel_lattice(lattice.clone(), &table.bel)?;
    println!("mass recovered from bel: {}", back == m3);
    Ok(())
}
