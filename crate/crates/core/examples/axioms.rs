//! The belief and plausibility inequalities, checked exhaustively on small
//! powersets.
//!
//! cargo run --example axioms

use conceptual_ds::evidence::powerset::SetTable;
use conceptual_ds::oracle::{
    check_belief_axioms_set, check_plausibility_axioms_set, inner_measure_table,
    outer_measure_table,
};
use conceptual_ds::rational::ratio;
use conceptual_ds::ProbabilitySpace;

fn main() -> conceptual_ds::Result<()> {
    let space = ProbabilitySpace::from_blocks(
        4,
        vec![vec![0], vec![1, 2], vec![3]],
        vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)],
    )?;

    let inner = check_belief_axioms_set(&inner_measure_table(&space), 3)?;
    let outer = check_plausibility_axioms_set(&outer_measure_table(&space), 3)?;
    println!(
        "inner measure is a belief function: {} ({} tuples)",
        inner.passed(),
        inner.checked_tuples
    );
    println!(
        "outer measure is a plausibility function: {} ({} tuples)",
        outer.passed(),
        outer.checked_tuples
    );

    // f(X) = 1 for every nonempty X is not a belief function on two points.
    let f = SetTable::new(2, vec![ratio(0, 1), ratio(1, 1), ratio(1, 1), ratio(1, 1)])?;
    let report = check_belief_axioms_set(&f, 2)?;
    if let Some(v) = report.first_violation {
        println!("violated at ({}): {} < {}", v.sets.join(", "), v.lhs, v.rhs);
    }
    Ok(())
}
