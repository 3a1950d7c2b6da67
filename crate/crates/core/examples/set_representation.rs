//! A belief function on a powerset as the inner measure of a probability
//! space: every subset `X` gets a block `X*` of pairs `(X, u)`.
//!
//! cargo run --example set_representation

use conceptual_ds::evidence::powerset::{bel_set, format_subset, SetMass};
use conceptual_ds::rational::{format_exact, ratio};
use conceptual_ds::represent::represent_set;

fn main() -> conceptual_ds::Result<()> {
    let m = SetMass::from_entries(
        3,
        [
            (0b001, ratio(1, 2)),
            (0b110, ratio(1, 4)),
            (0b111, ratio(1, 4)),
        ],
    )?;
    let rep = represent_set(&m)?;
    println!(
        "|S′| = {}, {} blocks",
        rep.points().len(),
        rep.space().blocks().len()
    );

    for x in 0..=m.full() {
        println!(
            "{:<8} bel {:>4}  inner {:>4}",
            format_subset(x),
            format_exact(&bel_set(&m, x)),
            format_exact(&rep.space().inner_measure(&rep.embed(x))),
        );
    }

    let report = rep.verify();
    for check in &report.checks {
        println!(
            "{}: {}",
            check.name,
            if check.passed() { "ok" } else { "failed" }
        );
    }
    println!("verified: {}", report.passed());
    Ok(())
}
