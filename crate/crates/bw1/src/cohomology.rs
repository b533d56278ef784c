//! First cohomology of the free category on a quiver, with coefficients
//! induced by a module over the path algebra.
//!
//! Two independent routes are implemented. The main route partitions the
//! quiver, builds the symbolic matrices `V`, `W`, evaluates their columns in
//! the module and quotients the cochain space by their span. The oracle
//! route writes down the inner-derivation map `(n_x) -> (f.n_{s(f)} -
//! n_{t(f)})_f` directly and takes its cokernel. The two must agree, with
//! equal spans after reordering coordinates; `check_equivalence` verifies
//! exactly that.

use thiserror::Error;

use crate::linalg::{quotient_basis, rank, same_column_span, DenseMatrix};
use crate::partition::{algorithm_a, Partition, PartitionError};
use crate::path_algebra::{algorithm_b, AlgebraError, MatrixPair};
use crate::quiver::{ArrowId, Quiver, VertexId};
use crate::representation::{eval_element, QuiverRep, RepError};

/// One coordinate block of a cochain space: the summand `N_{t(arrow)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Block {
    pub arrow: ArrowId,
    pub target: VertexId,
    pub dim: usize,
    pub offset: usize,
}

/// The space `⊕ N_{t(f_i)} ⊕ N_{t(g_i)} ⊕ N_{t(h_i)}` (or the same sum in
/// quiver order for the oracle), with offsets for coordinate lookups.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CochainSpace {
    pub blocks: Vec<Block>,
    pub total_dim: usize,
}

impl CochainSpace {
    pub fn from_arrows<I: IntoIterator<Item = ArrowId>>(
        q: &Quiver,
        r: &QuiverRep,
        arrows: I,
    ) -> Self {
        let mut blocks = Vec::new();
        let mut offset = 0usize;
        for arrow in arrows {
            let target = q.target(arrow);
            let dim = r.dim(target);
            blocks.push(Block { arrow, target, dim, offset });
            offset += dim;
        }
        CochainSpace { blocks, total_dim: offset }
    }

    /// Block and local index owning a global coordinate.
    pub fn locate(&self, coord: usize) -> (&Block, usize) {
        let block = self
            .blocks
            .iter()
            .rev()
            .find(|b| b.offset <= coord)
            .expect("coordinate within total_dim");
        (block, coord - block.offset)
    }
}

/// Dimension and labelled basis representatives of the first cohomology.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct H1Result {
    pub ambient: CochainSpace,
    pub ider_rank: usize,
    pub dim: usize,
    /// `(arrow name, basis index inside N_{t(arrow)})` per representative.
    pub basis_labels: Vec<(String, usize)>,
}

#[derive(Error, Debug, PartialEq)]
pub enum CohomologyError {
    #[error("{0}")]
    Partition(#[from] PartitionError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Rep(#[from] RepError),
}

/// Stacks the evaluated columns of `V` and `W`: one generator column per
/// basis vector of `N_{a_j}` (then `N_{b_j}`), each the tuple
/// `(entry_{i,j} . e)_i` over the partition's row arrows.
pub fn build_generators(
    q: &Quiver,
    t: &Partition,
    vw: &MatrixPair,
    r: &QuiverRep,
) -> Result<DenseMatrix, CohomologyError> {
    let ambient = CochainSpace::from_arrows(q, r, t.row_arrows());
    let col_sources = vw
        .col_vertices_v
        .iter()
        .map(|v| (*v, true))
        .chain(vw.col_vertices_w.iter().map(|v| (*v, false)))
        .collect::<Vec<_>>();
    let total_cols: usize = col_sources.iter().map(|(v, _)| r.dim(*v)).sum();

    let mut gens = DenseMatrix::zeros(r.field, ambient.total_dim, total_cols);
    let mut col_base = 0usize;
    for (j, &(src, from_v)) in col_sources.iter().enumerate() {
        let j = if from_v { j } else { j - vw.col_vertices_v.len() };
        for (i, block) in ambient.blocks.iter().enumerate() {
            let entry = if from_v { &vw.v[i][j] } else { &vw.w[i][j] };
            if entry.is_zero() {
                continue;
            }
            let m = eval_element(q, r, entry, src, block.target)?;
            for row in 0..m.rows() {
                for col in 0..m.cols() {
                    gens.set(block.offset + row, col_base + col, m.get(row, col).clone());
                }
            }
        }
        col_base += r.dim(src);
    }
    Ok(gens)
}

fn labels_for(q: &Quiver, ambient: &CochainSpace, representatives: &[usize]) -> Vec<(String, usize)> {
    representatives
        .iter()
        .map(|&coord| {
            let (block, local) = ambient.locate(coord);
            (q.arrow(block.arrow).name.clone(), local)
        })
        .collect()
}

/// Computes the first cohomology along the main route: partition, symbolic
/// matrices, generator span, quotient.
pub fn h1(q: &Quiver, r: &QuiverRep) -> Result<H1Result, CohomologyError> {
    let t = algorithm_a(q)?;
    let vw = algorithm_b(q, &t)?;
    let gens = build_generators(q, &t, &vw, r)?;
    let ambient = CochainSpace::from_arrows(q, r, t.row_arrows());
    let (dim, representatives) = quotient_basis(ambient.total_dim, &gens);
    let ider_rank = ambient.total_dim - dim;
    let basis_labels = labels_for(q, &ambient, &representatives);
    Ok(H1Result { ambient, ider_rank, dim, basis_labels })
}

/// The inner-derivation map as a matrix: columns indexed by `⊕_x N_x` in
/// vertex input order, rows by `⊕_f N_{t(f)}` in arrow input order. The
/// block at `(f, x)` collects `+mats(f)` when `s(f) = x` and `-I` when
/// `t(f) = x`; a loop contributes their sum.
pub fn oracle_ider_matrix(q: &Quiver, r: &QuiverRep) -> DenseMatrix {
    let ambient = CochainSpace::from_arrows(q, r, q.arrow_ids());
    let mut col_offsets = Vec::with_capacity(q.vertex_count());
    let mut total_cols = 0usize;
    for v in q.vertex_ids() {
        col_offsets.push(total_cols);
        total_cols += r.dim(v);
    }

    let mut m = DenseMatrix::zeros(r.field, ambient.total_dim, total_cols);
    for block in &ambient.blocks {
        let f = block.arrow;
        let src = q.source(f);
        let mat = &r.mats[f.0];
        for row in 0..block.dim {
            for col in 0..r.dim(src) {
                let cur = m
                    .get(block.offset + row, col_offsets[src.0] + col)
                    .add(mat.get(row, col));
                m.set(block.offset + row, col_offsets[src.0] + col, cur);
            }
            let tgt_col = col_offsets[q.target(f).0] + row;
            let cur = m.get(block.offset + row, tgt_col).sub(&r.field.one());
            m.set(block.offset + row, tgt_col, cur);
        }
    }
    m
}

/// The brute-force route: cokernel of the inner-derivation map, ambient in
/// quiver arrow order.
pub fn oracle_h1(q: &Quiver, r: &QuiverRep) -> H1Result {
    let ambient = CochainSpace::from_arrows(q, r, q.arrow_ids());
    let m = oracle_ider_matrix(q, r);
    let (dim, representatives) = quotient_basis(ambient.total_dim, &m);
    let ider_rank = ambient.total_dim - dim;
    let basis_labels = labels_for(q, &ambient, &representatives);
    H1Result { ambient, ider_rank, dim, basis_labels }
}

/// Outcome of comparing the two routes on one instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivalenceReport {
    pub main_dim: usize,
    pub oracle_dim: usize,
    pub dims_agree: bool,
    pub spans_agree: bool,
    pub generator_rank: usize,
    pub oracle_rank: usize,
}

impl EquivalenceReport {
    pub fn pass(&self) -> bool {
        self.dims_agree && self.spans_agree
    }
}

impl std::fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "main dim {} (rank {}), oracle dim {} (rank {}), dims {}, spans {}",
            self.main_dim,
            self.generator_rank,
            self.oracle_dim,
            self.oracle_rank,
            if self.dims_agree { "agree" } else { "DISAGREE" },
            if self.spans_agree { "agree" } else { "DISAGREE" },
        )
    }
}

/// Verifies that both routes give the same dimension and that, after
/// permuting the oracle coordinates from quiver order into partition order,
/// the generator span equals the image of the inner-derivation map.
pub fn check_equivalence(q: &Quiver, r: &QuiverRep) -> Result<EquivalenceReport, CohomologyError> {
    let t = algorithm_a(q)?;
    let vw = algorithm_b(q, &t)?;
    let gens = build_generators(q, &t, &vw, r)?;
    let part_ambient = CochainSpace::from_arrows(q, r, t.row_arrows());

    let oracle = oracle_h1(q, r);
    let oracle_mat = oracle_ider_matrix(q, r);

    // Row permutation: partition coordinate -> oracle coordinate.
    let mut perm = Vec::with_capacity(part_ambient.total_dim);
    for block in &part_ambient.blocks {
        let oracle_block = &oracle.ambient.blocks[block.arrow.0];
        debug_assert_eq!(oracle_block.dim, block.dim);
        perm.extend(oracle_block.offset..oracle_block.offset + block.dim);
    }
    let oracle_permuted = oracle_mat.select_rows(&perm);

    let generator_rank = rank(&gens);
    let oracle_rank = rank(&oracle_mat);
    let main_dim = part_ambient.total_dim - generator_rank;
    let spans_agree = same_column_span(&gens, &oracle_permuted);

    Ok(EquivalenceReport {
        main_dim,
        oracle_dim: oracle.dim,
        dims_agree: main_dim == oracle.dim,
        spans_agree,
        generator_rank,
        oracle_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::{gen_example, Family};
    use crate::linalg::Field;
    use crate::representation::regular_rep;

    fn regular(family: Family, n: usize) -> (Quiver, QuiverRep) {
        let q = gen_example(family, n).unwrap();
        let r = regular_rep(&q, Field::Rationals).unwrap();
        (q, r)
    }

    fn one_dim_cycle(n: usize) -> (Quiver, QuiverRep) {
        let q = gen_example(Family::Cycle, n).unwrap();
        let field = Field::Rationals;
        let mats = q.arrow_ids().map(|_| DenseMatrix::identity(field, 1)).collect();
        let r = QuiverRep { field, dims: vec![1; n], mats };
        (q, r)
    }

    #[test]
    fn chain_generators_fill_the_ambient() {
        let (q, r) = regular(Family::Chain, 3);
        let t = algorithm_a(&q).unwrap();
        let vw = algorithm_b(&q, &t).unwrap();
        let gens = build_generators(&q, &t, &vw, &r).unwrap();
        assert_eq!(gens.rows(), 5);
        assert_eq!(rank(&gens), 5);
    }

    #[test]
    fn star_generator_count_and_rank() {
        let (q, r) = regular(Family::Star, 3);
        let t = algorithm_a(&q).unwrap();
        let vw = algorithm_b(&q, &t).unwrap();
        let gens = build_generators(&q, &t, &vw, &r).unwrap();
        assert_eq!(gens.rows(), 12);
        assert_eq!(gens.cols(), 7);
        assert_eq!(rank(&gens), 7);
    }

    #[test]
    fn zero_representation_gives_empty_everything() {
        let q = gen_example(Family::Chain, 3).unwrap();
        let field = Field::Rationals;
        let mats = q.arrow_ids().map(|_| DenseMatrix::zeros(field, 0, 0)).collect();
        let r = QuiverRep { field, dims: vec![0; 3], mats };
        let t = algorithm_a(&q).unwrap();
        let vw = algorithm_b(&q, &t).unwrap();
        let gens = build_generators(&q, &t, &vw, &r).unwrap();
        assert_eq!((gens.rows(), gens.cols()), (0, 0));
        assert_eq!(h1(&q, &r).unwrap().dim, 0);
    }

    #[test]
    fn chain_family_vanishes() {
        for n in 2..=6 {
            let (q, r) = regular(Family::Chain, n);
            assert_eq!(h1(&q, &r).unwrap().dim, 0, "chain {}", n);
        }
    }

    #[test]
    fn star_three_has_dimension_five() {
        let (q, r) = regular(Family::Star, 3);
        assert_eq!(h1(&q, &r).unwrap().dim, 5);
        assert_eq!(oracle_h1(&q, &r).dim, 5);
    }

    #[test]
    fn zigzag_two_has_dimension_four() {
        let (q, r) = regular(Family::Zigzag, 2);
        assert_eq!(h1(&q, &r).unwrap().dim, 4);
    }

    #[test]
    fn oracle_matrix_shapes_and_ranks() {
        let (q, r) = regular(Family::Chain, 3);
        let m = oracle_ider_matrix(&q, &r);
        assert_eq!((m.rows(), m.cols()), (5, 6));
        assert_eq!(rank(&m), 5);
        assert_eq!(oracle_h1(&q, &r).dim, 0);

        let (c, one) = one_dim_cycle(3);
        let m = oracle_ider_matrix(&c, &one);
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(rank(&m), 2);
        assert_eq!(oracle_h1(&c, &one).dim, 1);

        let empty = Quiver::new(vec!["x", "y"], vec![]).unwrap();
        let field = Field::Rationals;
        let rep = QuiverRep { field, dims: vec![2, 1], mats: vec![] };
        let m = oracle_ider_matrix(&empty, &rep);
        assert_eq!((m.rows(), m.cols()), (0, 3));
        assert_eq!(rank(&m), 0);
    }

    #[test]
    fn equivalence_on_fixtures() {
        for n in 2..=4 {
            let (q, r) = regular(Family::Chain, n);
            assert!(check_equivalence(&q, &r).unwrap().pass(), "chain {}", n);
        }
        let (q, r) = regular(Family::Star, 3);
        assert!(check_equivalence(&q, &r).unwrap().pass());
        let (q, r) = regular(Family::Zigzag, 2);
        assert!(check_equivalence(&q, &r).unwrap().pass());
        let (q, r) = one_dim_cycle(3);
        let report = check_equivalence(&q, &r).unwrap();
        assert!(report.pass());
        assert_eq!(report.main_dim, 1);
    }

    #[test]
    fn h1_labels_point_into_blocks() {
        let (q, r) = regular(Family::Star, 3);
        let res = h1(&q, &r).unwrap();
        assert_eq!(res.basis_labels.len(), res.dim);
        for (arrow, idx) in &res.basis_labels {
            let a = q.arrow_by_name(arrow).unwrap();
            assert!(*idx < r.dim(q.target(a)));
        }
        assert_eq!(res.ambient.total_dim, res.dim + res.ider_rank);
    }
}
