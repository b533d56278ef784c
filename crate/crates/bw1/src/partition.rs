//! The quiver partition: vertices split into an ordered list `a` and a rest
//! list `b`, arrows into `f`/`g`/`h`, with `t(f_i) = a_i` and `{f} ∪ {g}` a
//! maximal acyclic subquiver.

use thiserror::Error;

use crate::quiver::{
    gset, hset, is_acyclic, max_acyclic_extension, reachable, ArrowId, ArrowSet, Quiver,
    QuiverError, VertexId, VertexSet,
};

/// Output of the partition algorithm: the five ordered lists
/// `((a_i); (b_i); (f_i); (g_i); (h_i))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
    pub f: Vec<ArrowId>,
    pub g: Vec<ArrowId>,
    pub h: Vec<ArrowId>,
}

impl Partition {
    /// Row arrows in block order `f1..fl, g1..gn, h1..hr`; this is the
    /// coordinate order of the cochain spaces built downstream.
    pub fn row_arrows(&self) -> impl Iterator<Item = ArrowId> + '_ {
        self.f.iter().chain(&self.g).chain(&self.h).copied()
    }

    pub fn q1(&self, q: &Quiver) -> ArrowSet {
        ArrowSet::from_arrows(q, self.f.iter().copied())
    }
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum PartitionError {
    #[error("quiver error: {0}")]
    Quiver(#[from] QuiverError),
    #[error("internal: loop guard tripped after {0} iterations")]
    TerminationGuard(usize),
    #[error("internal: checked vertex set stopped growing at iteration {0}")]
    MonotonicityViolated(usize),
    #[error("internal: ordering step found no sink vertex")]
    NoSinkVertex,
    #[error("internal: vertex `{0}` has {1} incoming arrows in Q1")]
    IncomingCount(String, usize),
    #[error("invalid partition: {0}")]
    Invalid(String),
}

/// Partitions the quiver. Nondeterministic choices in the source procedure
/// resolve to the smallest index in input order: the arrow `h`, the greedy
/// acyclic extension, the arrow `f_a` per target, and the vertex `x` in the
/// ordering step.
pub fn algorithm_a(q: &Quiver) -> Result<Partition, PartitionError> {
    let mut phat = VertexSet::full(q);
    let mut q1 = ArrowSet::empty(q);
    let mut q2 = ArrowSet::empty(q);
    let mut q3 = ArrowSet::full(q);
    let mut pcheck = VertexSet::empty(q);

    let guard = q.vertex_count() + q.arrow_count() + 1;
    let mut iterations = 0usize;
    loop {
        let eligible = hset(q, &phat, &q1, &q3);
        let Some(h) = eligible.iter().next() else {
            break;
        };
        iterations += 1;
        if iterations > guard {
            return Err(PartitionError::TerminationGuard(iterations));
        }

        let dropped = gset(q, &q1, &q2, h)?;
        let mut qprime = q1.union(&q2).difference(&dropped);
        qprime.insert(h);
        let qbar = max_acyclic_extension(q, &qprime)?;

        let mut new_pcheck = VertexSet::empty(q);
        for a in qbar.iter() {
            new_pcheck.insert(q.target(a));
        }
        // Termination rests on this: t(h) moves over and no checked vertex
        // slips back.
        let grew = new_pcheck.contains(q.target(h))
            && pcheck.iter().all(|v| new_pcheck.contains(v));
        if !grew {
            return Err(PartitionError::MonotonicityViolated(iterations));
        }
        pcheck = new_pcheck;
        phat = VertexSet::full(q);
        for v in pcheck.iter() {
            phat.remove(v);
        }

        q1 = ArrowSet::empty(q);
        for v in pcheck.iter() {
            let fa = qbar
                .iter()
                .find(|a| q.target(*a) == v)
                .expect("checked vertices are targets of qbar arrows");
            q1.insert(fa);
        }
        q2 = qbar.difference(&q1);
        q3 = ArrowSet::full(q).difference(&qbar);
    }

    // Ordering step: repeatedly pick the smallest remaining checked vertex
    // with no outgoing Q1 arrow; its unique incoming Q1 arrow becomes f_i.
    let mut a = Vec::with_capacity(pcheck.len());
    let mut f = Vec::with_capacity(pcheck.len());
    let mut remaining = pcheck.clone();
    let mut q1_rest = q1.clone();
    while !remaining.is_empty() {
        let x = remaining
            .iter()
            .find(|v| !q1_rest.iter().any(|arr| q.source(arr) == *v))
            .ok_or(PartitionError::NoSinkVertex)?;
        let incoming: Vec<ArrowId> =
            q1_rest.iter().filter(|arr| q.target(*arr) == x).collect();
        if incoming.len() != 1 {
            return Err(PartitionError::IncomingCount(
                q.vertex_name(x).to_string(),
                incoming.len(),
            ));
        }
        a.push(x);
        f.push(incoming[0]);
        remaining.remove(x);
        q1_rest.remove(incoming[0]);
    }

    Ok(Partition {
        a,
        b: phat.iter().collect(),
        f,
        g: q2.iter().collect(),
        h: q3.iter().collect(),
    })
}

/// Report from [`validate_partition`]: empty means valid.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidityReport {
    pub violations: Vec<String>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: impl Into<String>) {
        self.violations.push(v.into());
    }
}

impl std::fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            write!(f, "{}", self.violations.join("; "))
        }
    }
}

/// Checks every invariant of the partition type against its quiver and
/// reports all violated clauses.
pub fn validate_partition(q: &Quiver, t: &Partition) -> ValidityReport {
    let mut report = ValidityReport::default();

    // a ⊔ b exhausts the vertices.
    let mut seen = vec![0usize; q.vertex_count()];
    for v in t.a.iter().chain(&t.b) {
        seen[v.0] += 1;
    }
    if seen.iter().any(|c| *c != 1) {
        report.push("vertex lists a, b are not a disjoint exhaustive decomposition");
    }

    // f ⊔ g ⊔ h exhausts the arrows.
    let mut seen = vec![0usize; q.arrow_count()];
    for arr in t.row_arrows() {
        seen[arr.0] += 1;
    }
    if seen.iter().any(|c| *c != 1) {
        report.push("arrow lists f, g, h are not a disjoint exhaustive decomposition");
    }

    if t.f.len() != t.a.len() {
        report.push("lists a and f differ in length");
    }
    for (i, (&fi, &ai)) in t.f.iter().zip(&t.a).enumerate() {
        if q.target(fi) != ai {
            report.push(format!(
                "target mismatch: t(f{}) = {} but a{} = {}",
                i + 1,
                q.vertex_name(q.target(fi)),
                i + 1,
                q.vertex_name(ai)
            ));
        }
    }

    let q1 = t.q1(q);
    let q12 = q1.union(&ArrowSet::from_arrows(q, t.g.iter().copied()));
    if !is_acyclic(q, &q12) {
        report.push("f ∪ g contains a cycle");
    } else {
        for arr in t.h.iter().copied() {
            if !q.is_loop(arr) && !reachable(q, &q12, q.target(arr), q.source(arr)) {
                report.push(format!(
                    "f ∪ g is not maximal: arrow `{}` extends it acyclically",
                    q.arrow(arr).name
                ));
            }
        }
    }

    let mut incoming = vec![0usize; q.vertex_count()];
    for &fi in &t.f {
        incoming[q.target(fi).0] += 1;
    }
    if let Some((v, c)) = incoming.iter().enumerate().find(|(_, c)| **c > 1) {
        report.push(format!(
            "vertex `{}` has {} incoming arrows in f",
            q.vertex_name(VertexId(v)),
            c
        ));
    }

    // Ordering: a Q1-path from a_j to a_i of length >= 1 forces i < j.
    for (i, &ai) in t.a.iter().enumerate() {
        for (j, &aj) in t.a.iter().enumerate() {
            if i > j && reachable(q, &q1, aj, ai) {
                report.push(format!(
                    "ordering violated: Q1-path from a{} to a{}",
                    j + 1,
                    i + 1
                ));
            }
        }
    }

    if is_acyclic(q, &ArrowSet::full(q)) && !t.h.is_empty() {
        report.push("quiver is acyclic but h is nonempty");
    }

    // Every h with target outside the checked vertices closes a cycle
    // against some Q1-path (length 0 included).
    let in_b = VertexSet::from_vertices(q, t.b.iter().copied());
    for (i, &hi) in t.h.iter().enumerate() {
        if in_b.contains(q.target(hi)) && !reachable(q, &q1, q.target(hi), q.source(hi)) {
            report.push(format!("h{} has target in b but closes no cycle through Q1", i + 1));
        }
    }

    report
}
