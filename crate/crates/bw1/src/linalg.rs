//! Exact dense linear algebra over the rationals or a prime field: column
//! echelon form, rank and quotient-space bases. No floating point anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The coefficient field: exact rationals or `Z/p` for a prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let value = (n as i128).rem_euclid(*p as i128) as u64;
                Scalar::Fp { value, modulus: *p }
            }
        }
    }

    pub fn from_ratio(&self, numer: i64, denom: i64) -> Option<Scalar> {
        if denom == 0 {
            return None;
        }
        match self {
            Field::Rationals => Some(Scalar::Rational(BigRational::new(
                BigInt::from(numer),
                BigInt::from(denom),
            ))),
            Field::Prime(_) => {
                let d = self.from_i64(denom);
                d.inverse().map(|inv| self.from_i64(numer).mul(&inv))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rationals"),
            Field::Prime(p) => write!(f, "prime field F_{}", p),
        }
    }
}

/// A field element. Rational values are kept reduced with positive
/// denominator (the representation `BigRational` maintains); prime-field
/// values lie in `[0, p)` and carry their modulus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Fp { value: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Fp { value: ((*a as u128 * *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Fp { value, modulus } => {
                Scalar::Fp { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Fp { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    // Fermat: value^(p-2) mod p.
                    let mut base = *value as u128;
                    let p = *modulus as u128;
                    let mut exp = p - 2;
                    let mut acc: u128 = 1;
                    while exp > 0 {
                        if exp & 1 == 1 {
                            acc = acc * base % p;
                        }
                        base = base * base % p;
                        exp >>= 1;
                    }
                    Some(Scalar::Fp { value: acc as u64, modulus: *modulus })
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{}", value),
        }
    }
}

/// A dense matrix in row-major order; all entries share one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        DenseMatrix { rows: nrows, cols: ncols, field, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|n| field.from_i64(*n)).collect())
            .collect();
        Self::from_rows(field, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = DenseMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add_matrix(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e = e.add(o);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> DenseMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.mul(s);
        }
        out
    }

    /// Side-by-side concatenation; both matrices must have equal row count.
    pub fn hconcat(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = DenseMatrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// New matrix whose row `i` is row `perm[i]` of `self`.
    pub fn select_rows(&self, perm: &[usize]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.field, perm.len(), self.cols);
        for (i, &src) in perm.iter().enumerate() {
            for j in 0..self.cols {
                out.set(i, j, self.get(src, j).clone());
            }
        }
        out
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }
}

/// Column echelon form by exact Gaussian elimination on columns.
///
/// Returns `(echelon, rank, pivot_rows)`. The echelon matrix has the same
/// column span as the input, its first `rank` columns are nonzero with
/// strictly increasing pivot rows, and all later columns are zero.
pub fn column_echelon(m: &DenseMatrix) -> (DenseMatrix, usize, Vec<usize>) {
    let mut e = m.clone();
    let mut pivot_rows = Vec::new();
    let mut next_col = 0usize;

    for row in 0..e.rows() {
        if next_col == e.cols() {
            break;
        }
        // Columns < next_col are fixed; the rest have zeros above this row.
        let Some(found) = (next_col..e.cols()).find(|c| !e.get(row, *c).is_zero()) else {
            continue;
        };
        if found != next_col {
            for r in 0..e.rows() {
                let tmp = e.get(r, found).clone();
                e.set(r, found, e.get(r, next_col).clone());
                e.set(r, next_col, tmp);
            }
        }
        let pivot_inv = e
            .get(row, next_col)
            .inverse()
            .expect("pivot entry is nonzero");
        for c in next_col + 1..e.cols() {
            if e.get(row, c).is_zero() {
                continue;
            }
            let factor = e.get(row, c).mul(&pivot_inv);
            for r in row..e.rows() {
                let sub = e.get(r, next_col).mul(&factor);
                let val = e.get(r, c).sub(&sub);
                e.set(r, c, val);
            }
        }
        pivot_rows.push(row);
        next_col += 1;
    }

    (e, next_col, pivot_rows)
}

/// Rank of a matrix.
pub fn rank(m: &DenseMatrix) -> usize {
    column_echelon(m).1
}

/// Basis data for `ambient / span(generators)`: the quotient dimension and
/// the coordinate indices whose standard basis vectors represent a basis.
pub fn quotient_basis(ambient_dim: usize, generators: &DenseMatrix) -> (usize, Vec<usize>) {
    assert_eq!(generators.rows(), ambient_dim, "generator rows must match ambient dimension");
    let (_, rk, pivot_rows) = column_echelon(generators);
    let representatives = (0..ambient_dim)
        .filter(|i| !pivot_rows.contains(i))
        .collect::<Vec<_>>();
    (ambient_dim - rk, representatives)
}

/// True iff the column spans coincide, decided by mutual rank checks.
pub fn same_column_span(a: &DenseMatrix, b: &DenseMatrix) -> bool {
    assert_eq!(a.rows(), b.rows(), "ambient mismatch");
    let ra = rank(a);
    let rb = rank(b);
    ra == rb && rank(&a.hconcat(b)) == ra
}
