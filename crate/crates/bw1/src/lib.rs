//! First Baues-Wirsching cohomology of the free category on a finite
//! quiver, for coefficient systems induced by a finite-dimensional module
//! over the path algebra.
//!
//! The crate partitions the quiver, builds a pair of matrices over the path
//! algebra whose evaluated columns span the inner derivations, and reads the
//! cohomology off as a quotient of an explicit cochain space. An independent
//! brute-force route through the inner-derivation map is included and the
//! two are compared on demand, including by a seeded randomized harness.
//!
//! Start with the runnable programs under `examples/`; the `bw1` binary
//! exposes the same functionality as subcommands.

pub mod cli;
pub mod cohomology;
pub mod linalg;
pub mod partition;
pub mod path_algebra;
pub mod quiver;
pub mod representation;

pub use cohomology::{check_equivalence, h1, oracle_h1, H1Result};
pub use linalg::{DenseMatrix, Field, Scalar};
pub use partition::{algorithm_a, validate_partition, Partition};
pub use path_algebra::{algorithm_b, MatrixPair, PathAlgebraElement};
pub use quiver::{ArrowSet, Path, Quiver, VertexSet};
pub use representation::{regular_rep, QuiverRep};
