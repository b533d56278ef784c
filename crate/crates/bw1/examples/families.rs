//! Generate the built-in quiver families and print their documents.
//!
//! Run with: cargo run --example families

use bw1::cli::{gen_example, serialize_quiver, Family};

fn main() {
    for family in [Family::Chain, Family::Star, Family::Zigzag, Family::Cycle, Family::Bicycle] {
        let q = gen_example(family, 3).unwrap();
        println!("--- {} (n = 3) ---", family.name());
        print!("{}", serialize_quiver(&q));
    }
}
