//! Partition a quiver's vertices and arrows into the ordered lists
//! (a; b; f; g; h) and check the result against the declared invariants.
//!
//! Run with: cargo run --example partition

use bw1::cli::{gen_example, render_partition, Family};
use bw1::partition::{algorithm_a, validate_partition};
use bw1::quiver::Quiver;

fn main() {
    for (label, q) in [
        ("chain 4", gen_example(Family::Chain, 4).unwrap()),
        ("directed circle 4", gen_example(Family::Cycle, 4).unwrap()),
        ("bidirected circle 3", gen_example(Family::Bicycle, 3).unwrap()),
        (
            "a quiver with a loop",
            Quiver::new(
                vec!["p", "q"],
                vec![("e", "p", "p"), ("f", "p", "q"), ("g", "q", "p")],
            )
            .unwrap(),
        ),
    ] {
        let t = algorithm_a(&q).unwrap();
        println!("{}: {}", label, render_partition(&q, &t));
        println!("  validation: {}", validate_partition(&q, &t));
    }
}
