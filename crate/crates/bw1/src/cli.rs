//! Document formats, built-in example families, rendering, and the
//! randomized differential-test harness. The binary in `main.rs` is a thin
//! dispatcher over the `cmd_*` functions here.
//!
//! Quivers and representations travel as JSON documents; the schemas are
//! described in the repository README. Array order in a quiver document is
//! semantic: it fixes every tie-break downstream.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::{check_equivalence, h1, oracle_h1, CohomologyError, H1Result};
use crate::linalg::{DenseMatrix, Field, Scalar};
use crate::partition::{algorithm_a, validate_partition, Partition, PartitionError};
use crate::path_algebra::{algorithm_b, AlgebraError, MatrixPair, PathAlgebraElement};
use crate::quiver::{Path, Quiver, QuiverError};
use crate::representation::{regular_rep, rep_validate, QuiverRep, RepError};

#[derive(Error, Debug)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for usage and parse problems, 2 for mathematical validation
    /// failures; success is 0.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Validation(_) => 2,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<PartitionError> for CliError {
    fn from(e: PartitionError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        CliError::Validation(e.to_string())
    }
}

// ---------------------------------------------------------------------------
// Quiver documents

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ArrowDocument {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// JSON form of a quiver. Vertex and arrow order is preserved and
/// significant.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct QuiverDocument {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDocument>,
}

pub fn quiver_document(q: &Quiver) -> QuiverDocument {
    QuiverDocument {
        vertices: q.vertex_names().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowDocument {
                name: a.name.clone(),
                source: q.vertex_name(a.source).to_string(),
                target: q.vertex_name(a.target).to_string(),
            })
            .collect(),
    }
}

pub fn parse_quiver(text: &str) -> Result<Quiver, CliError> {
    let doc: QuiverDocument = serde_json::from_str(text)?;
    let arrows = doc
        .arrows
        .into_iter()
        .map(|a| (a.name, a.source, a.target))
        .collect();
    Ok(Quiver::new(doc.vertices, arrows)?)
}

pub fn serialize_quiver(q: &Quiver) -> String {
    let mut s = serde_json::to_string_pretty(&quiver_document(q)).expect("document serializes");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Representation documents

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum FieldDocument {
    Name(String),
    Prime { prime: u64 },
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
#[serde(untagged)]
pub enum EntryDocument {
    Int(i64),
    Text(String),
}

/// JSON form of a representation: either the free module (`"module":
/// "regular"`, acyclic quivers only) or explicit dimensions and matrices.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct RepDocument {
    pub field: FieldDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<BTreeMap<String, Vec<Vec<EntryDocument>>>>,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn parse_field(doc: &FieldDocument) -> Result<Field, CliError> {
    match doc {
        FieldDocument::Name(n) if n == "rationals" => Ok(Field::Rationals),
        FieldDocument::Name(n) => Err(CliError::Parse(format!("unknown field `{}`", n))),
        FieldDocument::Prime { prime } => {
            if is_prime(*prime) {
                Ok(Field::Prime(*prime))
            } else {
                Err(CliError::Parse(format!("{} is not prime", prime)))
            }
        }
    }
}

/// Parses `--field q` or `--field p:<prime>`.
pub fn parse_field_flag(text: &str) -> Result<Field, CliError> {
    if text == "q" {
        return Ok(Field::Rationals);
    }
    if let Some(p) = text.strip_prefix("p:") {
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::Usage(format!("bad prime `{}`", p)))?;
        return parse_field(&FieldDocument::Prime { prime: p });
    }
    Err(CliError::Usage(format!("unknown field `{}`; expected `q` or `p:<prime>`", text)))
}

fn parse_entry(field: Field, e: &EntryDocument) -> Result<Scalar, CliError> {
    let ratio = |n: i64, d: i64| {
        field
            .from_ratio(n, d)
            .ok_or_else(|| CliError::Parse(format!("bad scalar {}/{}", n, d)))
    };
    match e {
        EntryDocument::Int(n) => Ok(field.from_i64(*n)),
        EntryDocument::Text(t) => {
            let (n, d) = match t.split_once('/') {
                Some((n, d)) => (
                    n.trim().parse().map_err(|_| CliError::Parse(format!("bad scalar `{}`", t)))?,
                    d.trim().parse().map_err(|_| CliError::Parse(format!("bad scalar `{}`", t)))?,
                ),
                None => (
                    t.trim().parse().map_err(|_| CliError::Parse(format!("bad scalar `{}`", t)))?,
                    1,
                ),
            };
            ratio(n, d)
        }
    }
}

fn entry_document(s: &Scalar) -> EntryDocument {
    match s {
        Scalar::Rational(_) => EntryDocument::Text(s.to_string()),
        Scalar::Fp { value, .. } => EntryDocument::Int(*value as i64),
    }
}

pub fn parse_rep(text: &str, q: &Quiver) -> Result<QuiverRep, CliError> {
    let doc: RepDocument = serde_json::from_str(text)?;
    let field = parse_field(&doc.field)?;
    rep_from_document(&doc, field, q)
}

fn rep_from_document(doc: &RepDocument, field: Field, q: &Quiver) -> Result<QuiverRep, CliError> {
    if let Some(module) = &doc.module {
        if module != "regular" {
            return Err(CliError::Parse(format!("unknown module `{}`", module)));
        }
        if doc.dims.is_some() || doc.matrices.is_some() {
            return Err(CliError::Parse(
                "`module: regular` excludes explicit dims/matrices".into(),
            ));
        }
        return regular_rep(q, field).map_err(|e| CliError::Validation(e.to_string()));
    }

    let dims_doc = doc
        .dims
        .as_ref()
        .ok_or_else(|| CliError::Parse("representation needs `module` or `dims`".into()))?;
    let mut dims = vec![0usize; q.vertex_count()];
    for (name, d) in dims_doc {
        let v = q
            .vertex_by_name(name)
            .ok_or_else(|| CliError::Parse(format!("dims references unknown vertex `{}`", name)))?;
        dims[v.0] = *d;
    }
    for v in q.vertex_ids() {
        if !dims_doc.contains_key(q.vertex_name(v)) {
            return Err(CliError::Parse(format!(
                "dims misses vertex `{}`",
                q.vertex_name(v)
            )));
        }
    }

    let empty = BTreeMap::new();
    let mats_doc = doc.matrices.as_ref().unwrap_or(&empty);
    for name in mats_doc.keys() {
        if q.arrow_by_name(name).is_none() {
            return Err(CliError::Parse(format!("matrices references unknown arrow `{}`", name)));
        }
    }
    let mut mats = Vec::with_capacity(q.arrow_count());
    for a in q.arrow_ids() {
        let arrow = q.arrow(a);
        let shape = (dims[arrow.target.0], dims[arrow.source.0]);
        match mats_doc.get(&arrow.name) {
            None if shape.0 == 0 || shape.1 == 0 => {
                mats.push(DenseMatrix::zeros(field, shape.0, shape.1));
            }
            None => {
                return Err(CliError::Parse(format!("matrix for arrow `{}` missing", arrow.name)));
            }
            Some(rows) => {
                if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
                    return Err(CliError::Parse(format!(
                        "matrix for arrow `{}` must be {}x{}",
                        arrow.name, shape.0, shape.1
                    )));
                }
                let mut m = DenseMatrix::zeros(field, shape.0, shape.1);
                for (i, row) in rows.iter().enumerate() {
                    for (j, e) in row.iter().enumerate() {
                        m.set(i, j, parse_entry(field, e)?);
                    }
                }
                mats.push(m);
            }
        }
    }

    let rep = QuiverRep { field, dims, mats };
    let report = rep_validate(q, &rep);
    if !report.is_valid() {
        return Err(CliError::Validation(report.to_string()));
    }
    Ok(rep)
}

pub fn rep_document(q: &Quiver, r: &QuiverRep) -> RepDocument {
    let field = match r.field {
        Field::Rationals => FieldDocument::Name("rationals".into()),
        Field::Prime(p) => FieldDocument::Prime { prime: p },
    };
    let dims = q
        .vertex_ids()
        .map(|v| (q.vertex_name(v).to_string(), r.dim(v)))
        .collect();
    let matrices = q
        .arrow_ids()
        .filter(|a| {
            let m = &r.mats[a.0];
            m.rows() > 0 && m.cols() > 0
        })
        .map(|a| {
            let m = &r.mats[a.0];
            let rows = (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| entry_document(m.get(i, j))).collect())
                .collect();
            (q.arrow(a).name.clone(), rows)
        })
        .collect();
    RepDocument { field, module: None, dims: Some(dims), matrices: Some(matrices) }
}

pub fn serialize_rep(q: &Quiver, r: &QuiverRep) -> String {
    let mut s = serde_json::to_string_pretty(&rep_document(q, r)).expect("document serializes");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Built-in families

/// The built-in quiver families.
#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Family {
    /// Linear chain: arrows `a_i : i+1 -> i`.
    Chain,
    /// All arrows into a hub: `a_i : i -> x`.
    Star,
    /// Zigzag circle on `x_j`, `y_j` with `a_j : y_j -> x_j`, `b_j : y_{j-1} -> x_j`.
    Zigzag,
    /// Directed circle: `a_j : j+1 -> j` cyclically.
    Cycle,
    /// Circle with both orientations: `a_j : j+1 -> j` and `b_j : j -> j+1`.
    Bicycle,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Chain => "chain",
            Family::Star => "star",
            Family::Zigzag => "zigzag",
            Family::Cycle => "cycle",
            Family::Bicycle => "bicycle",
        }
    }
}

/// Builds the `n`-th member of a family, names matching the source
/// examples: numeric vertices, `x`/`x_j`/`y_j` hubs, arrows `a_i`, `b_i`.
pub fn gen_example(family: Family, n: usize) -> Result<Quiver, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("family size must be at least 2, got {}", n)));
    }
    let num = |i: usize| i.to_string();
    let q = match family {
        Family::Chain => Quiver::new(
            (1..=n).map(num).collect(),
            (1..n)
                .map(|i| (format!("a{}", i), num(i + 1), num(i)))
                .collect(),
        ),
        Family::Star => {
            let mut vertices = vec!["x".to_string()];
            vertices.extend((1..=n).map(num));
            Quiver::new(
                vertices,
                (1..=n)
                    .map(|i| (format!("a{}", i), num(i), "x".to_string()))
                    .collect(),
            )
        }
        Family::Zigzag => {
            let x = |j: usize| format!("x{}", j);
            let y = |j: usize| format!("y{}", j);
            let mut vertices: Vec<String> = (1..=n).map(x).collect();
            vertices.extend((1..=n).map(y));
            let mut arrows = Vec::new();
            for j in 1..=n {
                arrows.push((format!("a{}", j), y(j), x(j)));
            }
            for j in 1..=n {
                let prev = if j == 1 { n } else { j - 1 };
                arrows.push((format!("b{}", j), y(prev), x(j)));
            }
            Quiver::new(vertices, arrows)
        }
        Family::Cycle => Quiver::new(
            (1..=n).map(num).collect(),
            (1..=n)
                .map(|j| (format!("a{}", j), num(j % n + 1), num(j)))
                .collect(),
        ),
        Family::Bicycle => {
            let mut arrows: Vec<(String, String, String)> = (1..=n)
                .map(|j| (format!("a{}", j), num(j % n + 1), num(j)))
                .collect();
            arrows.extend((1..=n).map(|j| (format!("b{}", j), num(j), num(j % n + 1))));
            Quiver::new((1..=n).map(num).collect(), arrows)
        }
    };
    Ok(q?)
}

// ---------------------------------------------------------------------------
// Rendering

/// Signed-sum grammar: terms joined by ` + `/` - `, paths as arrow names
/// joined by `*` in composition order (leftmost applied last), identities as
/// `id_<vertex>`, coefficient magnitudes other than 1 as a leading factor.
pub fn render_element(q: &Quiver, e: &PathAlgebraElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (p, c)) in e.terms().enumerate() {
        if i == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if c.abs() != 1 {
            out.push_str(&format!("{}*", c.abs()));
        }
        out.push_str(&p.render(q));
    }
    out
}

pub fn render_partition(q: &Quiver, t: &Partition) -> String {
    let vs = |list: &[crate::quiver::VertexId]| -> String {
        if list.is_empty() {
            "-".into()
        } else {
            list.iter().map(|v| q.vertex_name(*v)).collect::<Vec<_>>().join(",")
        }
    };
    let arrows = |list: &[crate::quiver::ArrowId]| -> String {
        if list.is_empty() {
            "-".into()
        } else {
            list.iter().map(|a| q.arrow(*a).name.as_str()).collect::<Vec<_>>().join(",")
        }
    };
    format!(
        "a: {} | b: {} | f: {} | g: {} | h: {}",
        vs(&t.a),
        vs(&t.b),
        arrows(&t.f),
        arrows(&t.g),
        arrows(&t.h)
    )
}

pub fn render_matrices_text(q: &Quiver, vw: &MatrixPair) -> String {
    let mut out = String::new();
    let row_names: Vec<&str> = vw.row_arrows.iter().map(|a| q.arrow(*a).name.as_str()).collect();
    let col = |vs: &[crate::quiver::VertexId]| {
        vs.iter().map(|v| q.vertex_name(*v)).collect::<Vec<_>>().join(",")
    };
    out.push_str(&format!("rows: {}\n", row_names.join(",")));
    out.push_str(&format!("V columns: {}\n", col(&vw.col_vertices_v)));
    for (name, row) in row_names.iter().zip(&vw.v) {
        let entries: Vec<String> = row.iter().map(|e| render_element(q, e)).collect();
        out.push_str(&format!("  {}: [{}]\n", name, entries.join(", ")));
    }
    out.push_str(&format!("W columns: {}\n", col(&vw.col_vertices_w)));
    for (name, row) in row_names.iter().zip(&vw.w) {
        let entries: Vec<String> = row.iter().map(|e| render_element(q, e)).collect();
        out.push_str(&format!("  {}: [{}]\n", name, entries.join(", ")));
    }
    out
}

// Structured matrix output: entries as lists of terms.

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum TermDocument {
    Identity { coeff: i64, id: String },
    Composite { coeff: i64, arrows: Vec<String> },
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct MatrixPairDocument {
    pub row_arrows: Vec<String>,
    pub col_vertices_v: Vec<String>,
    pub col_vertices_w: Vec<String>,
    pub v: Vec<Vec<Vec<TermDocument>>>,
    pub w: Vec<Vec<Vec<TermDocument>>>,
}

fn element_terms(q: &Quiver, e: &PathAlgebraElement) -> Vec<TermDocument> {
    e.terms()
        .map(|(p, coeff)| {
            if p.is_identity() {
                TermDocument::Identity { coeff, id: q.vertex_name(p.source()).to_string() }
            } else {
                TermDocument::Composite {
                    coeff,
                    arrows: p.arrows().iter().map(|a| q.arrow(*a).name.clone()).collect(),
                }
            }
        })
        .collect()
}

pub fn matrix_pair_document(q: &Quiver, vw: &MatrixPair) -> MatrixPairDocument {
    let grid = |m: &Vec<Vec<PathAlgebraElement>>| {
        m.iter()
            .map(|row| row.iter().map(|e| element_terms(q, e)).collect())
            .collect()
    };
    MatrixPairDocument {
        row_arrows: vw.row_arrows.iter().map(|a| q.arrow(*a).name.clone()).collect(),
        col_vertices_v: vw.col_vertices_v.iter().map(|v| q.vertex_name(*v).to_string()).collect(),
        col_vertices_w: vw.col_vertices_w.iter().map(|v| q.vertex_name(*v).to_string()).collect(),
        v: grid(&vw.v),
        w: grid(&vw.w),
    }
}

pub fn parse_matrix_pair(q: &Quiver, text: &str) -> Result<MatrixPair, CliError> {
    let doc: MatrixPairDocument = serde_json::from_str(text)?;
    let arrow = |name: &str| {
        q.arrow_by_name(name)
            .ok_or_else(|| CliError::Parse(format!("unknown arrow `{}`", name)))
    };
    let vertex = |name: &str| {
        q.vertex_by_name(name)
            .ok_or_else(|| CliError::Parse(format!("unknown vertex `{}`", name)))
    };
    let element = |terms: &[TermDocument]| -> Result<PathAlgebraElement, CliError> {
        let mut acc = PathAlgebraElement::zero();
        for term in terms {
            let (coeff, path) = match term {
                TermDocument::Identity { coeff, id } => (*coeff, Path::identity(vertex(id)?)),
                TermDocument::Composite { coeff, arrows } => {
                    let ids = arrows.iter().map(|a| arrow(a)).collect::<Result<Vec<_>, _>>()?;
                    let p = Path::from_arrows(q, ids)
                        .map_err(|e| CliError::Parse(e.to_string()))?;
                    (*coeff, p)
                }
            };
            acc = crate::path_algebra::pa_linear(
                1,
                &acc,
                1,
                &PathAlgebraElement::with_coeff(path, coeff),
            );
        }
        Ok(acc)
    };
    let grid = |rows: &[Vec<Vec<TermDocument>>]| -> Result<Vec<Vec<PathAlgebraElement>>, CliError> {
        rows.iter()
            .map(|row| row.iter().map(|e| element(e)).collect())
            .collect()
    };
    Ok(MatrixPair {
        v: grid(&doc.v)?,
        w: grid(&doc.w)?,
        row_arrows: doc.row_arrows.iter().map(|a| arrow(a)).collect::<Result<_, _>>()?,
        col_vertices_v: doc.col_vertices_v.iter().map(|v| vertex(v)).collect::<Result<_, _>>()?,
        col_vertices_w: doc.col_vertices_w.iter().map(|v| vertex(v)).collect::<Result<_, _>>()?,
    })
}

fn render_h1(label: &str, res: &H1Result) -> String {
    let basis = if res.basis_labels.is_empty() {
        "-".into()
    } else {
        res.basis_labels
            .iter()
            .map(|(arrow, idx)| format!("({}, {})", arrow, idx))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!(
        "{}: dim H^1 = {}\n  ambient dim {}, inner-derivation rank {}\n  basis: {}\n",
        label, res.dim, res.ambient.total_dim, res.ider_rank, basis
    )
}

// ---------------------------------------------------------------------------
// Commands

pub fn cmd_gen(family: Family, n: usize) -> Result<String, CliError> {
    Ok(serialize_quiver(&gen_example(family, n)?))
}

pub fn cmd_partition(quiver_text: &str) -> Result<String, CliError> {
    let q = parse_quiver(quiver_text)?;
    let t = algorithm_a(&q)?;
    let report = validate_partition(&q, &t);
    if !report.is_valid() {
        return Err(CliError::Validation(format!("partition invalid: {}", report)));
    }
    Ok(format!("{}\n", render_partition(&q, &t)))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixFormat {
    Text,
    Structured,
}

pub fn cmd_matrices(quiver_text: &str, format: MatrixFormat) -> Result<String, CliError> {
    let q = parse_quiver(quiver_text)?;
    let t = algorithm_a(&q)?;
    let vw = algorithm_b(&q, &t)?;
    match format {
        MatrixFormat::Text => {
            let mut out = format!("partition: {}\n", render_partition(&q, &t));
            out.push_str(&render_matrices_text(&q, &vw));
            Ok(out)
        }
        MatrixFormat::Structured => {
            let mut s = serde_json::to_string_pretty(&matrix_pair_document(&q, &vw))?;
            s.push('\n');
            Ok(s)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepSource {
    Regular(Field),
    Document(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    Main,
    Oracle,
    Both,
}

pub fn cmd_h1(quiver_text: &str, rep: RepSource, route: Route) -> Result<String, CliError> {
    let q = parse_quiver(quiver_text)?;
    let r = match rep {
        RepSource::Regular(field) => regular_rep(&q, field).map_err(|e| match e {
            RepError::CyclicQuiver => {
                CliError::Validation("regular module requires acyclic quiver".into())
            }
            other => CliError::Validation(other.to_string()),
        })?,
        RepSource::Document(text) => parse_rep(&text, &q)?,
    };
    let report = rep_validate(&q, &r);
    if !report.is_valid() {
        return Err(CliError::Validation(format!("representation invalid: {}", report)));
    }

    match route {
        Route::Main => Ok(render_h1("main", &h1(&q, &r)?)),
        Route::Oracle => Ok(render_h1("oracle", &oracle_h1(&q, &r))),
        Route::Both => {
            let main = h1(&q, &r)?;
            let oracle = oracle_h1(&q, &r);
            let eq = check_equivalence(&q, &r)?;
            let mut out = render_h1("main", &main);
            out.push_str(&render_h1("oracle", &oracle));
            out.push_str(&format!("check: {}\n", eq));
            if eq.pass() {
                Ok(out)
            } else {
                Err(CliError::Validation(format!("routes disagree\n{}", out)))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Randomized differential testing

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FuzzConfig {
    pub count: usize,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_dim: usize,
    pub seed: u64,
    pub field: Field,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            count: 200,
            max_vertices: 6,
            max_arrows: 10,
            max_dim: 3,
            seed: 1,
            field: Field::Rationals,
        }
    }
}

/// Fresh generator for instance `index` of a seeded run. Instances sit on
/// separate streams, so the quiver sequence does not depend on how many
/// draws each representation consumed.
pub fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64 + 1);
    rng
}

/// Random quiver within bounds; loops and parallel arrows occur with
/// positive probability.
pub fn random_quiver(rng: &mut ChaCha8Rng, max_vertices: usize, max_arrows: usize) -> Quiver {
    let nv = rng.gen_range(1..=max_vertices.max(1));
    let na = rng.gen_range(0..=max_arrows);
    let vertices: Vec<String> = (1..=nv).map(|i| format!("v{}", i)).collect();
    let arrows = (1..=na)
        .map(|i| {
            let s = rng.gen_range(0..nv);
            let t = rng.gen_range(0..nv);
            (format!("e{}", i), vertices[s].clone(), vertices[t].clone())
        })
        .collect();
    Quiver::new(vertices, arrows).expect("generated names are distinct")
}

/// Random representation with per-vertex dimension up to `max_dim`.
pub fn random_rep(rng: &mut ChaCha8Rng, q: &Quiver, field: Field, max_dim: usize) -> QuiverRep {
    let dims: Vec<usize> = q.vertex_ids().map(|_| rng.gen_range(0..=max_dim)).collect();
    let scalar = |rng: &mut ChaCha8Rng| match field {
        Field::Rationals => field
            .from_ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))
            .expect("denominator positive"),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
    };
    let mats = q
        .arrow_ids()
        .map(|a| {
            let rows = dims[q.target(a).0];
            let cols = dims[q.source(a).0];
            let mut m = DenseMatrix::zeros(field, rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, scalar(rng));
                }
            }
            m
        })
        .collect();
    QuiverRep { field, dims, mats }
}

#[derive(Clone, PartialEq, Debug)]
pub struct FuzzFailure {
    pub index: usize,
    pub detail: String,
    pub quiver_json: String,
    pub rep_json: String,
}

#[derive(Clone, PartialEq, Debug)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub passed: usize,
    pub first_failure: Option<FuzzFailure>,
}

impl FuzzReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.config.count
    }

    pub fn render(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "fuzz: count={} seed={} field={} max_vertices={} max_arrows={} max_dim={}\n",
            c.count,
            c.seed,
            match c.field {
                Field::Rationals => "q".to_string(),
                Field::Prime(p) => format!("p:{}", p),
            },
            c.max_vertices,
            c.max_arrows,
            c.max_dim
        );
        out.push_str(&format!("passed {}/{}\n", self.passed, c.count));
        if let Some(f) = &self.first_failure {
            out.push_str(&format!("first failure at instance {}: {}\n", f.index, f.detail));
            out.push_str("quiver document:\n");
            out.push_str(&f.quiver_json);
            out.push_str("representation document:\n");
            out.push_str(&f.rep_json);
        }
        out
    }
}

/// Runs `count` random instances, checking on each that the partition is
/// valid and that the two cohomology routes agree in dimension and span.
pub fn run_fuzz(config: FuzzConfig) -> FuzzReport {
    let mut passed = 0usize;
    let mut first_failure = None;
    for index in 0..config.count {
        let mut rng = instance_rng(config.seed, index);
        let q = random_quiver(&mut rng, config.max_vertices, config.max_arrows);
        let r = random_rep(&mut rng, &q, config.field, config.max_dim);
        match fuzz_instance(&q, &r) {
            Ok(()) => passed += 1,
            Err(detail) => {
                if first_failure.is_none() {
                    first_failure = Some(FuzzFailure {
                        index,
                        detail,
                        quiver_json: serialize_quiver(&q),
                        rep_json: serialize_rep(&q, &r),
                    });
                }
            }
        }
    }
    FuzzReport { config, passed, first_failure }
}

fn fuzz_instance(q: &Quiver, r: &QuiverRep) -> Result<(), String> {
    let t = algorithm_a(q).map_err(|e| e.to_string())?;
    let report = validate_partition(q, &t);
    if !report.is_valid() {
        return Err(format!("partition invalid: {}", report));
    }
    let eq = check_equivalence(q, r).map_err(|e| e.to_string())?;
    if !eq.pass() {
        return Err(eq.to_string());
    }
    Ok(())
}

pub fn cmd_fuzz(config: FuzzConfig) -> Result<String, CliError> {
    let report = run_fuzz(config);
    let text = report.render();
    if report.all_passed() {
        Ok(text)
    } else {
        Err(CliError::Validation(text))
    }
}
