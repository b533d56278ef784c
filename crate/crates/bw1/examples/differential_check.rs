//! Seeded random quivers and modules, each checked two ways: the quotient
//! route must match the brute-force inner-derivation route in dimension and
//! span. This is the library's primary self-check, also available as the
//! `fuzz` subcommand.
//!
//! Run with: cargo run --example differential_check

use bw1::cli::{run_fuzz, FuzzConfig};
use bw1::linalg::Field;

fn main() {
    for field in [Field::Rationals, Field::Prime(101)] {
        let report = run_fuzz(FuzzConfig { count: 50, field, ..FuzzConfig::default() });
        print!("{}", report.render());
        assert!(report.all_passed());
    }
}
