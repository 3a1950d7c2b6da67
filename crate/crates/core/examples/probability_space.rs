//! Inner and outer measures of a finite probability space given by a
//! partition of its carrier.
//!
//! cargo run --example probability_space

use conceptual_ds::rational::{format_exact, ratio};
use conceptual_ds::sets::CarrierSet;
use conceptual_ds::ProbabilitySpace;

fn main() -> conceptual_ds::Result<()> {
    // Carrier {0,1,2,3} with measurable blocks {0,1} and {2,3}.
    let space = ProbabilitySpace::from_blocks(
        4,
        vec![vec![0, 1], vec![2, 3]],
        vec![ratio(1, 3), ratio(2, 3)],
    )?;

    for points in [vec![0], vec![0, 1], vec![0, 1, 2], vec![1, 2]] {
        let y = CarrierSet::from_indices(4, points.iter().copied());
        println!(
            "Y = {:?}: ι(Y) = {:?}, γ(Y) = {:?}, inner {}, outer {}, measurable {}",
            points,
            space.iota(&y).iter().collect::<Vec<_>>(),
            space.gamma(&y).iter().collect::<Vec<_>>(),
            format_exact(&space.inner_measure(&y)),
            format_exact(&space.outer_measure(&y)),
            space.is_measurable(&y),
        );
    }
    Ok(())
}
