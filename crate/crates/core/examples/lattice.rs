//! Parse a Burmeister context and walk its concept lattice.
//!
//! cargo run --example lattice

use conceptual_ds::{parse_cxt, ConceptLattice};

fn main() -> conceptual_ds::Result<()> {
    let text = include_str!("../fixtures/music.cxt");
    let lattice = ConceptLattice::from_context(parse_cxt(text)?)?;

    println!("{} concepts", lattice.len());
    for c in lattice.ids() {
        println!("  {}: {}", lattice.label(c), lattice.describe(c));
    }

    let ids: Vec<_> = lattice.ids().collect();
    let (a, b) = (ids[1], ids[2]);
    println!(
        "{} ∧ {} = {}, {} ∨ {} = {}",
        lattice.label(a),
        lattice.label(b),
        lattice.label(lattice.meet(a, b)),
        lattice.label(a),
        lattice.label(b),
        lattice.label(lattice.join(a, b)),
    );

    println!("covers:");
    for (lower, upper) in lattice.covers() {
        println!("  {} < {}", lattice.label(lower), lattice.label(upper));
    }
    Ok(())
}
