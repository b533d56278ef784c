//! Compute dim H^1 with the free module as coefficients, for the acyclic
//! families: the chain vanishes, the star gives n(n-1) - 1, the zigzag
//! circle gives 2n.
//!
//! Run with: cargo run --example h1_regular

use bw1::cli::{gen_example, Family};
use bw1::cohomology::h1;
use bw1::linalg::Field;
use bw1::representation::regular_rep;

fn main() {
    for family in [Family::Chain, Family::Star, Family::Zigzag] {
        for n in 2..=5 {
            let q = gen_example(family, n).unwrap();
            let r = regular_rep(&q, Field::Rationals).unwrap();
            let res = h1(&q, &r).unwrap();
            println!(
                "{} n={}: dim H^1 = {} (ambient {}, inner-derivation rank {})",
                family.name(),
                n,
                res.dim,
                res.ambient.total_dim,
                res.ider_rank
            );
        }
    }
}
