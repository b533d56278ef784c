//! Finite quivers, paths and the combinatorial set operations used by the
//! partition algorithm.
//!
//! A quiver is a finite directed multigraph: vertices `P`, arrows `Q` and
//! source/target maps `s, t : Q -> P`. Loops and parallel arrows are allowed.
//! Input order of vertices and arrows is significant: every nondeterministic
//! choice downstream resolves to the smallest index in that order.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Index of a vertex in its quiver's vertex list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

/// Index of an arrow in its quiver's arrow list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArrowId(pub usize);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate vertex identifier `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` references unknown vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("arrow sequence breaks the chaining condition at position {0}")]
    BrokenChain(usize),
    #[error("vertex `{0}` has more than one incoming arrow in the given Q1")]
    SharedTarget(String),
    #[error("arrow set expected to be acyclic contains a cycle")]
    CyclicArrowSet,
}

/// A finite quiver with a fixed input order on vertices and arrows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from named vertices and `(name, source, target)`
    /// arrow triples, validating distinctness and vertex membership.
    pub fn new<S: Into<String>>(
        vertices: Vec<S>,
        arrows: Vec<(S, S, S)>,
    ) -> Result<Self, QuiverError> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let lookup = |name: &str, arrow: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .map(VertexId)
                .ok_or_else(|| QuiverError::UnknownVertex {
                    arrow: arrow.to_string(),
                    vertex: name.to_string(),
                })
        };
        let mut built = Vec::with_capacity(arrows.len());
        for (name, src, tgt) in arrows {
            let (name, src, tgt): (String, String, String) = (name.into(), src.into(), tgt.into());
            if built.iter().any(|a: &Arrow| a.name == name) {
                return Err(QuiverError::DuplicateArrow(name));
            }
            let source = lookup(&src, &name)?;
            let target = lookup(&tgt, &name)?;
            built.push(Arrow { name, source, target });
        }
        Ok(Quiver { vertices, arrows: built })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name).map(VertexId)
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).map(ArrowId)
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    pub fn is_loop(&self, a: ArrowId) -> bool {
        self.source(a) == self.target(a)
    }
}

/// A path in a quiver: either the length-0 identity at a vertex, or a
/// composable arrow sequence `f1 .. fl` with `s(f_i) = t(f_{i+1})`.
///
/// Storage order follows composition order: `arrows[0]` is applied last, so
/// the path runs from `s(f_l)` to `t(f_1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn identity(x: VertexId) -> Self {
        Path { source: x, target: x, arrows: Vec::new() }
    }

    pub fn single(q: &Quiver, a: ArrowId) -> Self {
        Path { source: q.source(a), target: q.target(a), arrows: vec![a] }
    }

    /// Builds a path from a composition-ordered arrow sequence, checking the
    /// chaining condition `s(f_i) = t(f_{i+1})`.
    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self, QuiverError> {
        let last = *arrows.last().expect("identity paths need a vertex; use Path::identity");
        for (i, pair) in arrows.windows(2).enumerate() {
            if q.source(pair[0]) != q.target(pair[1]) {
                return Err(QuiverError::BrokenChain(i));
            }
        }
        Ok(Path { source: q.source(last), target: q.target(arrows[0]), arrows })
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_identity(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Arrow sequence in composition order (leftmost applied last).
    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// A path is a cycle when its overall target equals its overall source.
    /// Identity paths count as degenerate cycles.
    pub fn is_cycle(&self) -> bool {
        self.source == self.target
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.is_identity() {
            format!("id_{}", q.vertex_name(self.source))
        } else {
            self.arrows
                .iter()
                .map(|a| q.arrow(*a).name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

// Ordered by length, then lexicographically on arrow indices, then by
// endpoint; this is the basis order used everywhere downstream.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.arrows.len(), &self.arrows, self.source, self.target).cmp(&(
            other.arrows.len(),
            &other.arrows,
            other.source,
            other.target,
        ))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Composition `p` after `q`: defined iff `s(p) = t(q)`.
pub fn compose(p: &Path, q: &Path) -> Option<Path> {
    if p.source != q.target {
        return None;
    }
    let mut arrows = p.arrows.clone();
    arrows.extend_from_slice(&q.arrows);
    Some(Path { source: q.source, target: p.target, arrows })
}

/// A subset of a quiver's arrows; the induced subquiver keeps the full
/// vertex set. Iteration order is the quiver's input order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArrowSet {
    present: Vec<bool>,
}

impl ArrowSet {
    pub fn empty(q: &Quiver) -> Self {
        ArrowSet { present: vec![false; q.arrow_count()] }
    }

    pub fn full(q: &Quiver) -> Self {
        ArrowSet { present: vec![true; q.arrow_count()] }
    }

    pub fn from_arrows<I: IntoIterator<Item = ArrowId>>(q: &Quiver, arrows: I) -> Self {
        let mut s = ArrowSet::empty(q);
        for a in arrows {
            s.insert(a);
        }
        s
    }

    pub fn contains(&self, a: ArrowId) -> bool {
        self.present[a.0]
    }

    pub fn insert(&mut self, a: ArrowId) {
        self.present[a.0] = true;
    }

    pub fn remove(&mut self, a: ArrowId) {
        self.present[a.0] = false;
    }

    pub fn iter(&self) -> impl Iterator<Item = ArrowId> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter(|(_, p)| **p)
            .map(|(i, _)| ArrowId(i))
    }

    pub fn len(&self) -> usize {
        self.present.iter().filter(|p| **p).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.present.iter().any(|p| *p)
    }

    pub fn union(&self, other: &ArrowSet) -> ArrowSet {
        assert_eq!(self.present.len(), other.present.len());
        ArrowSet {
            present: self
                .present
                .iter()
                .zip(&other.present)
                .map(|(a, b)| *a || *b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &ArrowSet) -> ArrowSet {
        assert_eq!(self.present.len(), other.present.len());
        ArrowSet {
            present: self
                .present
                .iter()
                .zip(&other.present)
                .map(|(a, b)| *a && !*b)
                .collect(),
        }
    }
}

/// A subset of a quiver's vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    present: Vec<bool>,
}

impl VertexSet {
    pub fn empty(q: &Quiver) -> Self {
        VertexSet { present: vec![false; q.vertex_count()] }
    }

    pub fn full(q: &Quiver) -> Self {
        VertexSet { present: vec![true; q.vertex_count()] }
    }

    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(q: &Quiver, vs: I) -> Self {
        let mut s = VertexSet::empty(q);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.present[v.0]
    }

    pub fn insert(&mut self, v: VertexId) {
        self.present[v.0] = true;
    }

    pub fn remove(&mut self, v: VertexId) {
        self.present[v.0] = false;
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter(|(_, p)| **p)
            .map(|(i, _)| VertexId(i))
    }

    pub fn len(&self) -> usize {
        self.present.iter().filter(|p| **p).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.present.iter().any(|p| *p)
    }
}

/// True iff a path of length >= 0 inside `s` runs from `from` to `to`.
pub fn reachable(q: &Quiver, s: &ArrowSet, from: VertexId, to: VertexId) -> bool {
    if from == to {
        return true;
    }
    let mut visited = vec![false; q.vertex_count()];
    let mut stack = vec![from];
    visited[from.0] = true;
    while let Some(v) = stack.pop() {
        for a in s.iter() {
            if q.source(a) == v {
                let w = q.target(a);
                if w == to {
                    return true;
                }
                if !visited[w.0] {
                    visited[w.0] = true;
                    stack.push(w);
                }
            }
        }
    }
    false
}

/// True iff the subquiver `s` contains no cycle of length >= 1.
pub fn is_acyclic(q: &Quiver, s: &ArrowSet) -> bool {
    // Three-color DFS over the arrows of `s`.
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;
    let mut color = vec![WHITE; q.vertex_count()];
    let out: Vec<Vec<ArrowId>> = {
        let mut out = vec![Vec::new(); q.vertex_count()];
        for a in s.iter() {
            out[q.source(a).0].push(a);
        }
        out
    };
    fn visit(q: &Quiver, out: &[Vec<ArrowId>], color: &mut [u8], v: VertexId) -> bool {
        color[v.0] = GRAY;
        for &a in &out[v.0] {
            let w = q.target(a);
            if color[w.0] == GRAY {
                return false;
            }
            if color[w.0] == WHITE && !visit(q, out, color, w) {
                return false;
            }
        }
        color[v.0] = BLACK;
        true
    }
    for v in q.vertex_ids() {
        if color[v.0] == WHITE && !visit(q, &out, &mut color, v) {
            return false;
        }
    }
    true
}

/// The unique path inside `q1` from `from` to `to`, found by walking
/// backward from `to` along the unique incoming `q1` arrow at each vertex.
///
/// Requires every vertex to have at most one incoming arrow in `q1` (a
/// violation is a contract error, reported distinctly from "no path") and
/// `q1` acyclic. Returns `Ok(None)` when no path exists; `from == to` yields
/// the identity path.
pub fn q1_path(
    q: &Quiver,
    q1: &ArrowSet,
    from: VertexId,
    to: VertexId,
) -> Result<Option<Path>, QuiverError> {
    let mut incoming: Vec<Option<ArrowId>> = vec![None; q.vertex_count()];
    for a in q1.iter() {
        let t = q.target(a);
        if incoming[t.0].replace(a).is_some() {
            return Err(QuiverError::SharedTarget(q.vertex_name(t).to_string()));
        }
    }
    if from == to {
        return Ok(Some(Path::identity(from)));
    }
    let mut arrows = Vec::new();
    let mut current = to;
    let mut steps = 0usize;
    loop {
        let Some(a) = incoming[current.0] else {
            return Ok(None);
        };
        arrows.push(a);
        current = q.source(a);
        if current == from {
            return Ok(Some(Path::from_arrows(q, arrows).expect("backward walk chains")));
        }
        steps += 1;
        if steps > q1.len() {
            // Only possible when q1 has a cycle, violating the contract.
            return Err(QuiverError::CyclicArrowSet);
        }
    }
}

/// Greedy maximal acyclic extension of `qp`: scan the remaining arrows in
/// input order, adding `f` iff it is not a loop and no path from `t(f)` to
/// `s(f)` exists yet.
pub fn max_acyclic_extension(q: &Quiver, qp: &ArrowSet) -> Result<ArrowSet, QuiverError> {
    if !is_acyclic(q, qp) {
        return Err(QuiverError::CyclicArrowSet);
    }
    let mut out = qp.clone();
    for a in q.arrow_ids() {
        if out.contains(a) || q.is_loop(a) {
            continue;
        }
        if !reachable(q, &out, q.target(a), q.source(a)) {
            out.insert(a);
        }
    }
    Ok(out)
}

/// The set `H`: arrows `h` of `q3` with `t(h)` in `phat` such that no
/// `q1`-path (length 0 included) runs from `t(h)` back to `s(h)`. The
/// length-0 convention means a loop is never eligible.
pub fn hset(q: &Quiver, phat: &VertexSet, q1: &ArrowSet, q3: &ArrowSet) -> ArrowSet {
    let mut out = ArrowSet::empty(q);
    for h in q3.iter() {
        if phat.contains(q.target(h)) && !reachable(q, q1, q.target(h), q.source(h)) {
            out.insert(h);
        }
    }
    out
}

/// The set `G`: arrows `g` of `q2` lying on some cycle of
/// `q1 ∪ q2 ∪ {h}` that also contains `h`.
///
/// With `q1 ∪ q2` acyclic every such cycle is `h` followed by a
/// `(q1 ∪ q2)`-path from `t(h)` to `s(h)`, so membership reduces to the two
/// reachability conditions below.
pub fn gset(
    q: &Quiver,
    q1: &ArrowSet,
    q2: &ArrowSet,
    h: ArrowId,
) -> Result<ArrowSet, QuiverError> {
    let s = q1.union(q2);
    if !is_acyclic(q, &s) {
        return Err(QuiverError::CyclicArrowSet);
    }
    let mut out = ArrowSet::empty(q);
    for g in q2.iter() {
        if reachable(q, &s, q.target(h), q.source(g)) && reachable(q, &s, q.target(g), q.source(h))
        {
            out.insert(g);
        }
    }
    Ok(out)
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quiver({} vertices, {} arrows)", self.vertex_count(), self.arrow_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::gen_example;
    use crate::cli::Family;

    fn chain3() -> Quiver {
        gen_example(Family::Chain, 3).unwrap()
    }

    fn cycle3() -> Quiver {
        gen_example(Family::Cycle, 3).unwrap()
    }

    #[test]
    fn builder_rejects_duplicates_and_unknowns() {
        assert_eq!(
            Quiver::new(vec!["x", "x"], vec![]),
            Err(QuiverError::DuplicateVertex("x".into()))
        );
        assert_eq!(
            Quiver::new(vec!["x"], vec![("a", "x", "x"), ("a", "x", "x")]),
            Err(QuiverError::DuplicateArrow("a".into()))
        );
        assert_eq!(
            Quiver::new(vec!["x"], vec![("a", "x", "y")]),
            Err(QuiverError::UnknownVertex { arrow: "a".into(), vertex: "y".into() })
        );
    }

    #[test]
    fn compose_identity_is_neutral() {
        let q = chain3();
        let x = q.vertex_by_name("1").unwrap();
        let id = Path::identity(x);
        assert_eq!(compose(&id, &id), Some(id.clone()));
        let a1 = Path::single(&q, q.arrow_by_name("a1").unwrap());
        assert_eq!(compose(&id, &a1).as_ref(), Some(&a1));
        let id2 = Path::identity(a1.source());
        assert_eq!(compose(&a1, &id2).as_ref(), Some(&a1));
    }

    #[test]
    fn compose_chain_arrows() {
        // a1: 2 -> 1, a2: 3 -> 2; a1 after a2 runs 3 -> 1.
        let q = chain3();
        let a1 = Path::single(&q, q.arrow_by_name("a1").unwrap());
        let a2 = Path::single(&q, q.arrow_by_name("a2").unwrap());
        let p = compose(&a1, &a2).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(q.vertex_name(p.source()), "3");
        assert_eq!(q.vertex_name(p.target()), "1");
        assert_eq!(compose(&a2, &a1), None);
    }

    #[test]
    fn cycle_predicate() {
        let c2 = gen_example(Family::Cycle, 2).unwrap();
        let a1 = Path::single(&c2, c2.arrow_by_name("a1").unwrap());
        let a2 = Path::single(&c2, c2.arrow_by_name("a2").unwrap());
        assert!(compose(&a1, &a2).unwrap().is_cycle());

        let q = chain3();
        let a1 = Path::single(&q, q.arrow_by_name("a1").unwrap());
        let a2 = Path::single(&q, q.arrow_by_name("a2").unwrap());
        assert!(!compose(&a1, &a2).unwrap().is_cycle());
        assert!(Path::identity(VertexId(0)).is_cycle());
    }

    #[test]
    fn acyclicity() {
        let q = chain3();
        assert!(is_acyclic(&q, &ArrowSet::full(&q)));
        let c = cycle3();
        assert!(!is_acyclic(&c, &ArrowSet::full(&c)));
        assert!(is_acyclic(&c, &ArrowSet::empty(&c)));
        let lq = Quiver::new(vec!["x"], vec![("e", "x", "x")]).unwrap();
        assert!(!is_acyclic(&lq, &ArrowSet::full(&lq)));
    }

    #[test]
    fn q1_path_walks_backward() {
        let q = chain3();
        let q1 = ArrowSet::full(&q);
        let v1 = q.vertex_by_name("1").unwrap();
        let v3 = q.vertex_by_name("3").unwrap();
        assert_eq!(q1_path(&q, &q1, v1, v1).unwrap(), Some(Path::identity(v1)));

        let p = q1_path(&q, &q1, v3, v1).unwrap().unwrap();
        assert_eq!(p.arrows(), &[ArrowId(0), ArrowId(1)]);
        assert_eq!(p.len(), 2);

        assert_eq!(q1_path(&q, &q1, v1, v3).unwrap(), None);
    }

    #[test]
    fn q1_path_contract_error_is_distinct() {
        // Two arrows targeting the same vertex.
        let q = Quiver::new(vec!["x", "y"], vec![("a", "x", "y"), ("b", "x", "y")]).unwrap();
        let err = q1_path(&q, &ArrowSet::full(&q), VertexId(0), VertexId(1)).unwrap_err();
        assert_eq!(err, QuiverError::SharedTarget("y".into()));
    }

    #[test]
    fn reachability() {
        let q = chain3();
        let v1 = q.vertex_by_name("1").unwrap();
        let v3 = q.vertex_by_name("3").unwrap();
        assert!(reachable(&q, &ArrowSet::empty(&q), v1, v1));
        assert!(!reachable(&q, &ArrowSet::full(&q), v1, v3));

        let c = cycle3();
        let s = ArrowSet::from_arrows(&c, [ArrowId(0), ArrowId(1)]);
        assert!(reachable(&c, &s, c.vertex_by_name("3").unwrap(), c.vertex_by_name("1").unwrap()));
    }

    #[test]
    fn max_acyclic_extension_examples() {
        let q = chain3();
        let qp = ArrowSet::from_arrows(&q, [ArrowId(0)]);
        assert_eq!(max_acyclic_extension(&q, &qp).unwrap(), ArrowSet::full(&q));

        let c = cycle3();
        let qp = ArrowSet::from_arrows(&c, [ArrowId(0)]);
        let ext = max_acyclic_extension(&c, &qp).unwrap();
        assert_eq!(ext, ArrowSet::from_arrows(&c, [ArrowId(0), ArrowId(1)]));

        let lq = Quiver::new(vec!["x"], vec![("e", "x", "x")]).unwrap();
        assert!(max_acyclic_extension(&lq, &ArrowSet::empty(&lq)).unwrap().is_empty());

        assert_eq!(
            max_acyclic_extension(&c, &ArrowSet::full(&c)),
            Err(QuiverError::CyclicArrowSet)
        );
    }

    #[test]
    fn hset_examples() {
        let c = cycle3();
        let all = ArrowSet::full(&c);
        let everyone = hset(&c, &VertexSet::full(&c), &ArrowSet::empty(&c), &all);
        assert_eq!(everyone, all);

        // With q1 the two chain arrows, a3 closes a cycle and drops out.
        let q1 = ArrowSet::from_arrows(&c, [ArrowId(0), ArrowId(1)]);
        let phat = VertexSet::from_vertices(&c, [c.vertex_by_name("3").unwrap()]);
        let q3 = ArrowSet::from_arrows(&c, [ArrowId(2)]);
        assert!(hset(&c, &phat, &q1, &q3).is_empty());

        let none = hset(&c, &VertexSet::empty(&c), &ArrowSet::empty(&c), &all);
        assert!(none.is_empty());
    }

    #[test]
    fn hset_excludes_loops() {
        let q = Quiver::new(vec!["x"], vec![("e", "x", "x")]).unwrap();
        let h = hset(&q, &VertexSet::full(&q), &ArrowSet::empty(&q), &ArrowSet::full(&q));
        assert!(h.is_empty());
    }

    #[test]
    fn gset_examples() {
        let q = Quiver::new(
            vec!["1", "2"],
            vec![("a", "1", "2"), ("b", "2", "1"), ("c", "2", "1")],
        )
        .unwrap();
        let q1 = ArrowSet::from_arrows(&q, [ArrowId(2)]);
        let q2 = ArrowSet::from_arrows(&q, [ArrowId(1)]);
        let g = gset(&q, &q1, &q2, ArrowId(0)).unwrap();
        assert_eq!(g, ArrowSet::from_arrows(&q, [ArrowId(1)]));

        assert!(gset(&q, &q1, &ArrowSet::empty(&q), ArrowId(0)).unwrap().is_empty());

        let chain = chain3();
        let q1 = ArrowSet::from_arrows(&chain, [ArrowId(0)]);
        let q2 = ArrowSet::from_arrows(&chain, [ArrowId(1)]);
        assert!(gset(&chain, &q1, &q2, ArrowId(0)).unwrap().is_empty());

        let c = cycle3();
        assert_eq!(
            gset(&c, &ArrowSet::full(&c), &ArrowSet::empty(&c), ArrowId(0)),
            Err(QuiverError::CyclicArrowSet)
        );
    }
}
