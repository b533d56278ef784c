//! Finite-dimensional modules over the category algebra, presented as
//! quiver representations: a vector space per vertex and a matrix per arrow.
//! Paths act by matrix products, the free module by left multiplication on
//! its path basis.

use thiserror::Error;

use crate::linalg::{DenseMatrix, Field, Scalar};
use crate::partition::ValidityReport;
use crate::path_algebra::PathAlgebraElement;
use crate::quiver::{is_acyclic, ArrowSet, Path, Quiver, VertexId};

/// A representation of a quiver over a fixed field: `dims[x]` is the
/// dimension at vertex `x` and `mats[f]` the matrix of shape
/// `dims[t(f)] x dims[s(f)]` acting along arrow `f`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuiverRep {
    pub field: Field,
    pub dims: Vec<usize>,
    pub mats: Vec<DenseMatrix>,
}

#[derive(Error, Debug, PartialEq)]
pub enum RepError {
    #[error("quiver has a cycle; the free module is infinite-dimensional")]
    CyclicQuiver,
    #[error("entry of shape {rows}x{cols} is not homogeneous from `{src}` to `{tgt}`")]
    NonHomogeneous { rows: usize, cols: usize, src: String, tgt: String },
    #[error("invalid representation: {0}")]
    Invalid(String),
}

impl QuiverRep {
    pub fn dim(&self, v: VertexId) -> usize {
        self.dims[v.0]
    }

    /// Total dimension over all vertices.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Shape and field checks for a representation against its quiver.
pub fn rep_validate(q: &Quiver, r: &QuiverRep) -> ValidityReport {
    let mut report = ValidityReport::default();
    if r.dims.len() != q.vertex_count() {
        report.push(format!(
            "dims covers {} vertices, quiver has {}",
            r.dims.len(),
            q.vertex_count()
        ));
        return report;
    }
    if r.mats.len() != q.arrow_count() {
        report.push(format!(
            "matrices cover {} arrows, quiver has {}",
            r.mats.len(),
            q.arrow_count()
        ));
        return report;
    }
    for a in q.arrow_ids() {
        let m = &r.mats[a.0];
        let want = (r.dim(q.target(a)), r.dim(q.source(a)));
        if (m.rows(), m.cols()) != want {
            report.push(format!(
                "shape mismatch at arrow `{}`: {}x{} instead of {}x{}",
                q.arrow(a).name,
                m.rows(),
                m.cols(),
                want.0,
                want.1
            ));
        }
        if m.field() != r.field {
            report.push(format!("field mismatch at arrow `{}`", q.arrow(a).name));
        }
        for e in m.entries() {
            match (r.field, e) {
                (Field::Prime(p), Scalar::Fp { value, modulus }) => {
                    if *modulus != p || *value >= p {
                        report.push(format!("scalar out of range at arrow `{}`", q.arrow(a).name));
                        break;
                    }
                }
                (Field::Rationals, Scalar::Rational(_)) => {}
                _ => {
                    report.push(format!("scalar of wrong field at arrow `{}`", q.arrow(a).name));
                    break;
                }
            }
        }
    }
    report
}

/// The matrix of a path: the ordered product of its arrow matrices, the
/// identity for length 0.
pub fn eval_path(r: &QuiverRep, p: &Path) -> DenseMatrix {
    let mut acc = DenseMatrix::identity(r.field, r.dim(p.target()));
    for a in p.arrows() {
        acc = acc.matmul(&r.mats[a.0]);
    }
    acc
}

/// Evaluates a homogeneous path-algebra element as a matrix from `src` to
/// `tgt`. A path with other endpoints signals a corrupted matrix pair.
pub fn eval_element(
    q: &Quiver,
    r: &QuiverRep,
    e: &PathAlgebraElement,
    src: VertexId,
    tgt: VertexId,
) -> Result<DenseMatrix, RepError> {
    let mut acc = DenseMatrix::zeros(r.field, r.dim(tgt), r.dim(src));
    for (p, c) in e.terms() {
        if p.source() != src || p.target() != tgt {
            return Err(RepError::NonHomogeneous {
                rows: acc.rows(),
                cols: acc.cols(),
                src: q.vertex_name(src).to_string(),
                tgt: q.vertex_name(tgt).to_string(),
            });
        }
        let m = eval_path(r, p).scale(&r.field.from_i64(c));
        acc = acc.add_matrix(&m);
    }
    Ok(acc)
}

/// All paths of an acyclic quiver, identities included, ordered by length
/// and then lexicographically on arrow indices (identities by vertex index).
pub fn enumerate_paths(q: &Quiver) -> Result<Vec<Path>, RepError> {
    if !is_acyclic(q, &ArrowSet::full(q)) {
        return Err(RepError::CyclicQuiver);
    }
    let mut all: Vec<Path> = q.vertex_ids().map(Path::identity).collect();
    let mut level: Vec<Path> = q.arrow_ids().map(|a| Path::single(q, a)).collect();
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next = Vec::new();
        for a in q.arrow_ids() {
            for p in &level {
                if p.target() == q.source(a) {
                    let mut arrows = vec![a];
                    arrows.extend_from_slice(p.arrows());
                    next.push(Path::from_arrows(q, arrows).expect("extension chains"));
                }
            }
        }
        level = next;
    }
    Ok(all)
}

/// The free module `kC` acting on itself by left multiplication, for an
/// acyclic quiver: the basis at vertex `x` is the set of paths with target
/// `x` in enumeration order, and an arrow acts by concatenation.
pub fn regular_rep(q: &Quiver, field: Field) -> Result<QuiverRep, RepError> {
    let paths = enumerate_paths(q)?;
    let basis: Vec<Vec<&Path>> = q
        .vertex_ids()
        .map(|x| paths.iter().filter(|p| p.target() == x).collect())
        .collect();
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();

    let mut mats = Vec::with_capacity(q.arrow_count());
    for a in q.arrow_ids() {
        let src = q.source(a);
        let tgt = q.target(a);
        let mut m = DenseMatrix::zeros(field, dims[tgt.0], dims[src.0]);
        let fa = Path::single(q, a);
        for (col, p) in basis[src.0].iter().enumerate() {
            let fp = crate::quiver::compose(&fa, p).expect("targets match the arrow source");
            let row = basis[tgt.0]
                .iter()
                .position(|b| **b == fp)
                .expect("concatenation lands in the target basis");
            m.set(row, col, field.one());
        }
        mats.push(m);
    }
    Ok(QuiverRep { field, dims, mats })
}

/// Index of a path inside the basis of its target vertex, in the order used
/// by [`regular_rep`].
pub fn regular_basis_index(q: &Quiver, p: &Path) -> Result<usize, RepError> {
    let paths = enumerate_paths(q)?;
    paths
        .iter()
        .filter(|r| r.target() == p.target())
        .position(|r| r == p)
        .ok_or_else(|| RepError::Invalid(format!("path {} not in basis", p.render(q))))
}
