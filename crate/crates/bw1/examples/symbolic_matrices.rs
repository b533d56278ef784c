//! Build the matrices V and W over the path algebra for a few quivers.
//! These stay symbolic: no module is chosen yet, so the output makes sense
//! even for quivers whose free module is infinite-dimensional.
//!
//! Run with: cargo run --example symbolic_matrices

use bw1::cli::{gen_example, render_matrices_text, Family};
use bw1::partition::algorithm_a;
use bw1::path_algebra::algorithm_b;

fn main() {
    for (family, n) in [(Family::Chain, 3), (Family::Star, 3), (Family::Cycle, 3)] {
        let q = gen_example(family, n).unwrap();
        let t = algorithm_a(&q).unwrap();
        let vw = algorithm_b(&q, &t).unwrap();
        println!("--- {} (n = {}) ---", family.name(), n);
        print!("{}", render_matrices_text(&q, &vw));
    }
}
