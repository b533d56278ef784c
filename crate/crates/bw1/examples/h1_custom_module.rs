//! Cohomology of a cyclic quiver needs an explicit finite-dimensional
//! module; the free module is infinite there. This example puts a line at
//! every vertex of the directed circle with every arrow acting as 1, and
//! compares the main route with the brute-force one.
//!
//! Run with: cargo run --example h1_custom_module

use bw1::cli::{gen_example, Family};
use bw1::cohomology::{check_equivalence, h1, oracle_h1};
use bw1::linalg::{DenseMatrix, Field};
use bw1::representation::QuiverRep;

fn main() {
    for n in 2..=6 {
        let q = gen_example(Family::Cycle, n).unwrap();
        let field = Field::Rationals;
        let mats = q.arrow_ids().map(|_| DenseMatrix::identity(field, 1)).collect();
        let r = QuiverRep { field, dims: vec![1; n], mats };

        let main = h1(&q, &r).unwrap();
        let oracle = oracle_h1(&q, &r);
        let eq = check_equivalence(&q, &r).unwrap();
        println!(
            "circle n={}: main dim {} | oracle dim {} | {}",
            n,
            main.dim,
            oracle.dim,
            if eq.pass() { "routes agree" } else { "ROUTES DISAGREE" }
        );
        let labels: Vec<String> = main
            .basis_labels
            .iter()
            .map(|(arrow, idx)| format!("({}, {})", arrow, idx))
            .collect();
        println!("  class representatives: {}", labels.join(", "));
    }
}
