//! Exact elements of the path algebra and the symbolic matrices `V`, `W`
//! attached to a partition.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::partition::{validate_partition, Partition, PartitionError};
use crate::quiver::{compose, q1_path, ArrowId, Path, Quiver, QuiverError, VertexId};

/// A finite formal sum of paths with integer coefficients. The empty sum is
/// the zero element; stored coefficients are never zero.
///
/// Coefficients stay integral here: the partition matrices only ever produce
/// ±1, and evaluation embeds them into whichever field the module uses.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PathAlgebraElement {
    terms: BTreeMap<Path, i64>,
}

impl PathAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::with_coeff(p, 1)
    }

    pub fn with_coeff(p: Path, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(p, c);
        }
        PathAlgebraElement { terms }
    }

    pub fn identity(x: VertexId) -> Self {
        Self::from_path(Path::identity(x))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, i64)> {
        self.terms.iter().map(|(p, c)| (p, *c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, p: Path, c: i64) {
        use std::collections::btree_map::Entry;
        if c == 0 {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }
}

/// `a*x + b*y` with zero coefficients pruned.
pub fn pa_linear(
    a: i64,
    x: &PathAlgebraElement,
    b: i64,
    y: &PathAlgebraElement,
) -> PathAlgebraElement {
    let mut out = PathAlgebraElement::zero();
    for (p, c) in x.terms() {
        out.add_term(p.clone(), a * c);
    }
    for (p, c) in y.terms() {
        out.add_term(p.clone(), b * c);
    }
    out
}

/// Bilinear extension of path concatenation; non-composable products vanish.
pub fn pa_mul(x: &PathAlgebraElement, y: &PathAlgebraElement) -> PathAlgebraElement {
    let mut out = PathAlgebraElement::zero();
    for (p, c) in x.terms() {
        for (r, d) in y.terms() {
            if let Some(pr) = compose(p, r) {
                out.add_term(pr, c * d);
            }
        }
    }
    out
}

/// The pair of matrices over the path algebra produced by
/// [`algorithm_b`]: `V` is `(l+n+r) x l`, `W` is `(l+n+r) x m`, rows
/// labelled by the partition's arrow order and columns by `a` resp. `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixPair {
    pub v: Vec<Vec<PathAlgebraElement>>,
    pub w: Vec<Vec<PathAlgebraElement>>,
    pub row_arrows: Vec<ArrowId>,
    pub col_vertices_v: Vec<VertexId>,
    pub col_vertices_w: Vec<VertexId>,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0}")]
    Partition(#[from] PartitionError),
    #[error("quiver error: {0}")]
    Quiver(#[from] QuiverError),
}

/// Fills the matrices `V` and `W` for a valid partition.
///
/// Column `j` of `V` carries `id_{a_j}` on the diagonal of the top block;
/// each lower row (for an arrow `e` in `g` or `h`) gains `+p` when the
/// unique `Q1`-path `p : a_j -> t(e)` exists and `-e*p` when
/// `p : a_j -> s(e)` exists. `W` does the same over the `b` columns with a
/// zero top block. Length-0 `Q1`-paths participate.
pub fn algorithm_b(q: &Quiver, t: &Partition) -> Result<MatrixPair, AlgebraError> {
    let report = validate_partition(q, t);
    if !report.is_valid() {
        return Err(AlgebraError::Partition(PartitionError::Invalid(report.to_string())));
    }

    let q1 = t.q1(q);
    let l = t.f.len();
    let rows: Vec<ArrowId> = t.row_arrows().collect();

    let fill_column = |col_vertex: VertexId, diagonal: Option<usize>| {
        let mut col = vec![PathAlgebraElement::zero(); rows.len()];
        if let Some(i) = diagonal {
            col[i] = PathAlgebraElement::identity(col_vertex);
        }
        for (i, &e) in rows.iter().enumerate().skip(l) {
            let mut entry = PathAlgebraElement::zero();
            if let Some(p) = q1_path(q, &q1, col_vertex, q.target(e))? {
                entry = pa_linear(1, &entry, 1, &PathAlgebraElement::from_path(p));
            }
            if let Some(p) = q1_path(q, &q1, col_vertex, q.source(e))? {
                let ep = pa_mul(
                    &PathAlgebraElement::from_path(Path::single(q, e)),
                    &PathAlgebraElement::from_path(p),
                );
                entry = pa_linear(1, &entry, -1, &ep);
            }
            col[i] = entry;
        }
        Ok::<_, QuiverError>(col)
    };

    let mut v_cols = Vec::with_capacity(l);
    for (j, &aj) in t.a.iter().enumerate() {
        v_cols.push(fill_column(aj, Some(j))?);
    }
    let mut w_cols = Vec::with_capacity(t.b.len());
    for &bj in &t.b {
        w_cols.push(fill_column(bj, None)?);
    }

    let transpose = |cols: &[Vec<PathAlgebraElement>]| -> Vec<Vec<PathAlgebraElement>> {
        (0..rows.len())
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    };

    Ok(MatrixPair {
        v: transpose(&v_cols),
        w: transpose(&w_cols),
        row_arrows: rows,
        col_vertices_v: t.a.clone(),
        col_vertices_w: t.b.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::{gen_example, Family};
    use crate::partition::algorithm_a;

    fn path(q: &Quiver, names: &[&str]) -> Path {
        let arrows = names.iter().map(|n| q.arrow_by_name(n).unwrap()).collect();
        Path::from_arrows(q, arrows).unwrap()
    }

    fn id(q: &Quiver, v: &str) -> PathAlgebraElement {
        PathAlgebraElement::identity(q.vertex_by_name(v).unwrap())
    }

    #[test]
    fn linear_combinations() {
        let q = gen_example(Family::Chain, 3).unwrap();
        let a1 = PathAlgebraElement::from_path(path(&q, &["a1"]));
        assert!(pa_linear(1, &a1, -1, &a1).is_zero());

        let sum = pa_linear(1, &id(&q, "1"), 1, &a1);
        assert_eq!(sum.term_count(), 2);

        let scaled = pa_linear(2, &a1, 3, &a1);
        assert_eq!(scaled.terms().next().unwrap().1, 5);
    }

    #[test]
    fn multiplication_follows_concatenation() {
        let q = gen_example(Family::Chain, 3).unwrap();
        let a1 = PathAlgebraElement::from_path(path(&q, &["a1"]));
        let a2 = PathAlgebraElement::from_path(path(&q, &["a2"]));
        assert_eq!(pa_mul(&a1, &a2), PathAlgebraElement::from_path(path(&q, &["a1", "a2"])));
        assert!(pa_mul(&a2, &a1).is_zero());

        // id at the target acts as a left unit.
        let e = pa_linear(1, &a1, 2, &PathAlgebraElement::from_path(path(&q, &["a1", "a2"])));
        assert_eq!(pa_mul(&id(&q, "1"), &e), e);
    }

    #[test]
    fn chain_matrices_are_identity_and_zero() {
        let q = gen_example(Family::Chain, 3).unwrap();
        let t = algorithm_a(&q).unwrap();
        let vw = algorithm_b(&q, &t).unwrap();
        assert_eq!(vw.v.len(), 2);
        assert_eq!(vw.w[0].len(), 1);
        for (i, row) in vw.v.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(*entry, id(&q, q.vertex_name(t.a[j])));
                } else {
                    assert!(entry.is_zero());
                }
            }
        }
        assert!(vw.w.iter().all(|row| row[0].is_zero()));
    }

    #[test]
    fn star_matrices_under_hand_partition() {
        // Partition with f1 = a3, g = (a1, a2); the worked output is
        // v1 = (id_x, id_x, id_x), w1 = (0, -a1, 0), w2 = (0, 0, -a2),
        // w3 = (0, a3, a3).
        let q = gen_example(Family::Star, 3).unwrap();
        let t = Partition {
            a: vec![q.vertex_by_name("x").unwrap()],
            b: ["1", "2", "3"].iter().map(|v| q.vertex_by_name(v).unwrap()).collect(),
            f: vec![q.arrow_by_name("a3").unwrap()],
            g: vec![q.arrow_by_name("a1").unwrap(), q.arrow_by_name("a2").unwrap()],
            h: vec![],
        };
        let vw = algorithm_b(&q, &t).unwrap();

        let idx = id(&q, "x");
        for i in 0..3 {
            assert_eq!(vw.v[i][0], idx);
        }
        let neg = |name: &str| PathAlgebraElement::with_coeff(path(&q, &[name]), -1);
        let pos = |name: &str| PathAlgebraElement::from_path(path(&q, &[name]));
        assert!(vw.w[0].iter().all(|e| e.is_zero()));
        assert_eq!(vw.w[1], vec![neg("a1"), PathAlgebraElement::zero(), pos("a3")]);
        assert_eq!(vw.w[2], vec![PathAlgebraElement::zero(), neg("a2"), pos("a3")]);
    }

    #[test]
    fn circle_matrices() {
        // v1 = (id_1, 0, -a3), v2 = (0, id_2, -a3*a1),
        // w1 = (0, 0, id_3 - a3*a1*a2).
        let q = gen_example(Family::Cycle, 3).unwrap();
        let t = algorithm_a(&q).unwrap();
        let vw = algorithm_b(&q, &t).unwrap();

        assert_eq!(vw.v[0][0], id(&q, "1"));
        assert!(vw.v[0][1].is_zero());
        assert_eq!(vw.v[1][1], id(&q, "2"));
        assert_eq!(vw.v[2][0], PathAlgebraElement::with_coeff(path(&q, &["a3"]), -1));
        assert_eq!(vw.v[2][1], PathAlgebraElement::with_coeff(path(&q, &["a3", "a1"]), -1));
        assert!(vw.w[0][0].is_zero() && vw.w[1][0].is_zero());
        assert_eq!(
            vw.w[2][0],
            pa_linear(
                1,
                &id(&q, "3"),
                -1,
                &PathAlgebraElement::from_path(path(&q, &["a3", "a1", "a2"]))
            )
        );
    }

    #[test]
    fn rejects_invalid_partition() {
        let q = gen_example(Family::Chain, 3).unwrap();
        let mut t = algorithm_a(&q).unwrap();
        t.f.swap(0, 1);
        assert!(matches!(
            algorithm_b(&q, &t),
            Err(AlgebraError::Partition(PartitionError::Invalid(_)))
        ));
    }
}
