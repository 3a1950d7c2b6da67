//! Compare bel and pl against brute-force scans on random lattices.
//!
//! cargo run --example differential

use std::sync::Arc;

use conceptual_ds::oracle::{brute_bel, brute_pl, random_lattice, random_mass};
use conceptual_ds::{bel, pl};

fn main() {
    let mut checked = 0;
    for seed in 0..200u64 {
        let lattice = Arc::new(random_lattice(seed, 12));
        let m = random_mass(seed, &lattice);
        for c in lattice.ids() {
            assert_eq!(bel(&m, c), brute_bel(&m, c), "seed {seed}");
            assert_eq!(pl(&m, c), brute_pl(&m, c), "seed {seed}");
            checked += 1;
        }
    }
    println!("{checked} concepts agree");
}
