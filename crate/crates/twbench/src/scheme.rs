//! Association schemes: validation, intersection numbers, valencies,
//! complex products and the standard counting identities.
//!
//! A scheme on a point set X is stored as the n-by-n relation table
//! t(x, y) = index of the relation containing (x, y).  Validation checks the
//! three axioms: the diagonal is relation 0 (S1), the transpose of every
//! relation is a relation (S2), and the intersection numbers p_ij^l are
//! independent of the representative pair (S3).

use crate::verify::Counterexample;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A violated scheme axiom, with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    NotSquare {
        n: usize,
        row: usize,
        len: usize,
    },
    /// More relation labels than could possibly occur (max label too large).
    EntryOutOfRange {
        max_seen: usize,
        cells: usize,
    },
    /// Some index in 0..=d never occurs.
    MissingRelation {
        index: usize,
        d: usize,
    },
    S1 {
        x: usize,
        y: usize,
        value: usize,
    },
    S2 {
        relation: usize,
        pair: (usize, usize),
        expected_transpose: usize,
        got: usize,
    },
    S3 {
        i: usize,
        j: usize,
        l: usize,
        reference_pair: (usize, usize),
        reference_count: usize,
        pair: (usize, usize),
        count: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "table is empty"),
            Violation::NotSquare { n, row, len } => {
                write!(f, "table is not square: row {row} has {len} entries, expected {n}")
            }
            Violation::EntryOutOfRange { max_seen, cells } => write!(
                f,
                "relation label {max_seen} cannot occur in a table with {cells} cells"
            ),
            Violation::MissingRelation { index, d } => {
                write!(f, "relation index {index} never occurs (labels go up to {d})")
            }
            Violation::S1 { x, y, value } => {
                if x == y {
                    write!(f, "S1: diagonal cell ({x},{y}) holds relation {value}, expected 0")
                } else {
                    write!(f, "S1: off-diagonal cell ({x},{y}) holds the diagonal relation 0")
                }
            }
            Violation::S2 {
                relation,
                pair,
                expected_transpose,
                got,
            } => write!(
                f,
                "S2: relation {relation} has inconsistent transpose: pair ({},{}) maps to \
                 relation {got}, but an earlier pair mapped to {expected_transpose}",
                pair.0, pair.1
            ),
            Violation::S3 {
                i,
                j,
                l,
                reference_pair,
                reference_count,
                pair,
                count,
            } => write!(
                f,
                "S3: p_{{{i},{j}}}^{l} is not well defined: pair ({},{}) sees {reference_count} \
                 paths but pair ({},{}) sees {count}",
                reference_pair.0, reference_pair.1, pair.0, pair.1
            ),
        }
    }
}

/// A validated association scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scheme {
    n: usize,
    d: usize,
    table: Vec<usize>,
}

impl Scheme {
    /// Number of points.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest relation index (the scheme has d + 1 relations).
    pub fn d(&self) -> usize {
        self.d
    }

    /// Relation index of the pair (x, y).
    #[inline]
    pub fn rel(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// The points y with (x, y) in relation i, in increasing order.
    pub fn neighborhood(&self, x: usize, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.rel(x, y) == i).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.rel(x, y)).collect())
            .collect()
    }
}

/// Validate a relation table against the scheme axioms.  On failure, every
/// violated axiom is reported with a witness (one witness per relation and
/// axiom, to keep the list readable).
pub fn validate_scheme(table: &[Vec<usize>]) -> Result<Scheme, Vec<Violation>> {
    let mut violations = Vec::new();
    let n = table.len();
    if n == 0 {
        return Err(vec![Violation::Empty]);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            violations.push(Violation::NotSquare {
                n,
                row,
                len: r.len(),
            });
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    let d = *table.iter().flatten().max().expect("nonempty");
    if d + 1 > n * n {
        return Err(vec![Violation::EntryOutOfRange {
            max_seen: d,
            cells: n * n,
        }]);
    }
    let mut occurs = vec![false; d + 1];
    for r in table {
        for &v in r {
            occurs[v] = true;
        }
    }
    for (index, &seen) in occurs.iter().enumerate() {
        if !seen {
            violations.push(Violation::MissingRelation { index, d });
        }
    }
    // S1: the diagonal relation is exactly relation 0.
    let mut s1_reported = false;
    for x in 0..n {
        for y in 0..n {
            let v = table[x][y];
            let bad = if x == y { v != 0 } else { v == 0 };
            if bad && !s1_reported {
                violations.push(Violation::S1 { x, y, value: v });
                s1_reported = true;
            }
        }
    }
    // S2: transposing a relation lands in a single relation.
    let mut inv: Vec<Option<usize>> = vec![None; d + 1];
    let mut s2_reported: BTreeSet<usize> = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            let i = table[x][y];
            let j = table[y][x];
            match inv[i] {
                None => inv[i] = Some(j),
                Some(expected) if expected != j => {
                    if s2_reported.insert(i) {
                        violations.push(Violation::S2 {
                            relation: i,
                            pair: (x, y),
                            expected_transpose: expected,
                            got: j,
                        });
                    }
                }
                _ => {}
            }
        }
    }
    // S3: intersection numbers are representative independent.
    let mut s3_reported: BTreeSet<usize> = BTreeSet::new();
    let counts_for = |x: usize, y: usize| -> Vec<usize> {
        let mut c = vec![0usize; (d + 1) * (d + 1)];
        for z in 0..n {
            c[table[x][z] * (d + 1) + table[z][y]] += 1;
        }
        c
    };
    for l in 0..=d {
        let mut reference: Option<((usize, usize), Vec<usize>)> = None;
        'pairs: for x in 0..n {
            for y in 0..n {
                if table[x][y] != l {
                    continue;
                }
                let c = counts_for(x, y);
                match &reference {
                    None => reference = Some(((x, y), c)),
                    Some((rp, rc)) => {
                        if *rc != c {
                            let (i, j) = (0..(d + 1) * (d + 1))
                                .find(|&t| rc[t] != c[t])
                                .map(|t| (t / (d + 1), t % (d + 1)))
                                .expect("some count differs");
                            if s3_reported.insert(l) {
                                violations.push(Violation::S3 {
                                    i,
                                    j,
                                    l,
                                    reference_pair: *rp,
                                    reference_count: rc[i * (d + 1) + j],
                                    pair: (x, y),
                                    count: c[i * (d + 1) + j],
                                });
                            }
                            break 'pairs;
                        }
                    }
                }
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    Ok(Scheme {
        n,
        d,
        table: table.iter().flatten().copied().collect(),
    })
}

/// The full tensor of intersection numbers p_ij^l.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTensor {
    d: usize,
    p: Vec<usize>,
}

impl IntersectionTensor {
    pub fn d(&self) -> usize {
        self.d
    }

    /// p_ij^l: the number of z with (x,z) in R_i, (z,y) in R_j, for any
    /// (and hence every) pair (x,y) in R_l.
    #[inline]
    pub fn p(&self, i: usize, j: usize, l: usize) -> usize {
        self.p[(i * (self.d + 1) + j) * (self.d + 1) + l]
    }

    /// Build a tensor directly from raw numbers (test scaffolding for the
    /// bad-pair chain logic; no scheme axioms are implied).
    pub fn from_raw(d: usize, p: Vec<usize>) -> Self {
        assert_eq!(p.len(), (d + 1) * (d + 1) * (d + 1));
        IntersectionTensor { d, p }
    }
}

/// Compute all intersection numbers, re-verifying representative
/// independence across every pair while doing so.
pub fn intersection_numbers(s: &Scheme) -> Result<IntersectionTensor, Counterexample> {
    let (n, d) = (s.n(), s.d());
    let mut p = vec![0usize; (d + 1) * (d + 1) * (d + 1)];
    let mut seen = vec![false; d + 1];
    for x in 0..n {
        for y in 0..n {
            let l = s.rel(x, y);
            let mut c = vec![0usize; (d + 1) * (d + 1)];
            for z in 0..n {
                c[s.rel(x, z) * (d + 1) + s.rel(z, y)] += 1;
            }
            if !seen[l] {
                seen[l] = true;
                for i in 0..=d {
                    for j in 0..=d {
                        p[(i * (d + 1) + j) * (d + 1) + l] = c[i * (d + 1) + j];
                    }
                }
            } else {
                for i in 0..=d {
                    for j in 0..=d {
                        let stored = p[(i * (d + 1) + j) * (d + 1) + l];
                        let here = c[i * (d + 1) + j];
                        if stored != here {
                            return Err(Counterexample::new(
                                "intersection numbers",
                                format!(
                                    "p_{{{i},{j}}}^{l} differs between representative pairs: \
                                     {stored} vs {here} at pair ({x},{y})"
                                ),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(IntersectionTensor { d, p })
}

/// Valencies k_i and the transpose involution i -> i'.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valencies {
    k: Vec<usize>,
    involution: Vec<usize>,
}

impl Valencies {
    /// Assemble from raw data (test scaffolding for synthetic tensors; no
    /// scheme axioms are implied).
    pub fn from_parts(k: Vec<usize>, involution: Vec<usize>) -> Self {
        assert_eq!(k.len(), involution.len());
        Valencies { k, involution }
    }

    pub fn k(&self, i: usize) -> usize {
        self.k[i]
    }
    pub fn all(&self) -> &[usize] {
        &self.k
    }
    /// The index i' with R_{i'} = transpose of R_i.
    pub fn inv(&self, i: usize) -> usize {
        self.involution[i]
    }
}

/// Valencies via k_i = p_{i,i'}^0, cross-checked against the row counts
/// |xR_i| for every point x.
pub fn valencies(s: &Scheme, t: &IntersectionTensor) -> Result<Valencies, Counterexample> {
    let (n, d) = (s.n(), s.d());
    // The involution from the (validated) table.
    let mut involution = vec![usize::MAX; d + 1];
    for x in 0..n {
        for y in 0..n {
            involution[s.rel(x, y)] = s.rel(y, x);
        }
    }
    let k: Vec<usize> = (0..=d).map(|i| t.p(i, involution[i], 0)).collect();
    for x in 0..n {
        for i in 0..=d {
            let count = (0..n).filter(|&y| s.rel(x, y) == i).count();
            if count != k[i] {
                return Err(Counterexample::new(
                    "valencies",
                    format!(
                        "|{x}R_{i}| = {count} but p_{{{i},{}}}^0 = {}",
                        involution[i], k[i]
                    ),
                ));
            }
        }
    }
    let total: usize = k.iter().sum();
    if total != n {
        return Err(Counterexample::new(
            "valencies",
            format!("valencies sum to {total}, expected n = {n}"),
        ));
    }
    Ok(Valencies { k, involution })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SchemeKind {
    Thin,
    QuasiThin,
    Neither,
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeKind::Thin => write!(f, "thin"),
            SchemeKind::QuasiThin => write!(f, "quasi-thin"),
            SchemeKind::Neither => write!(f, "neither"),
        }
    }
}

/// Classification by valency: thin (all 1), quasi-thin (all <= 2), or
/// neither, together with the valency classes A_j = { i : k_i = j }.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: SchemeKind,
    pub valency_classes: BTreeMap<usize, Vec<usize>>,
}

pub fn classify(v: &Valencies) -> Classification {
    let mut valency_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &ki) in v.all().iter().enumerate() {
        valency_classes.entry(ki).or_default().push(i);
    }
    let max = v.all().iter().copied().max().unwrap_or(1);
    let kind = if max == 1 {
        SchemeKind::Thin
    } else if max == 2 {
        SchemeKind::QuasiThin
    } else {
        SchemeKind::Neither
    };
    Classification {
        kind,
        valency_classes,
    }
}

/// Complex product of two sets of relation indices:
/// UV = { l : p_ij^l > 0 for some i in U, j in V }.
pub fn complex_product(
    t: &IntersectionTensor,
    u: &BTreeSet<usize>,
    v: &BTreeSet<usize>,
) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for l in 0..=t.d() {
        'search: for &i in u {
            for &j in v {
                if t.p(i, j, l) > 0 {
                    out.insert(l);
                    break 'search;
                }
            }
        }
    }
    out
}

/// Product of two single relations as a set of relation indices.
pub fn relation_product(t: &IntersectionTensor, i: usize, j: usize) -> BTreeSet<usize> {
    let mut u = BTreeSet::new();
    u.insert(i);
    let mut v = BTreeSet::new();
    v.insert(j);
    complex_product(t, &u, &v)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The standard counting identities tying intersection numbers to
/// valencies, plus the complex-product bound |R_i R_j| <= gcd(k_i, k_j).
/// A failure here on a validated scheme indicates an internal error.
pub fn check_valency_identities(
    t: &IntersectionTensor,
    v: &Valencies,
) -> Result<(), Counterexample> {
    let d = t.d();
    let fail = |witness: String| Err(Counterexample::new("valency identities", witness));
    for i in 0..=d {
        if v.k(i) != v.k(v.inv(i)) {
            return fail(format!("k_{i} = {} but k_{i}' = {}", v.k(i), v.k(v.inv(i))));
        }
    }
    for i in 0..=d {
        for j in 0..=d {
            for l in 0..=d {
                // (1) p_ji^l = p_{i'j'}^{l'}
                let lhs = t.p(j, i, l);
                let rhs = t.p(v.inv(i), v.inv(j), v.inv(l));
                if lhs != rhs {
                    return fail(format!(
                        "p_{{{j},{i}}}^{l} = {lhs} but p_{{{}',{}'}}^{{{}'}} = {rhs}",
                        i, j, l
                    ));
                }
                // (4) k_l p_ij^l = k_i p_{l,j'}^i = k_j p_{i',l}^j
                let a = v.k(l) * t.p(i, j, l);
                let b = v.k(i) * t.p(l, v.inv(j), i);
                let c = v.k(j) * t.p(v.inv(i), l, j);
                if a != b || a != c {
                    return fail(format!(
                        "triple count at (i,j,l)=({i},{j},{l}): k_l p_ij^l = {a}, \
                         k_i p_{{l,j'}}^i = {b}, k_j p_{{i',l}}^j = {c}"
                    ));
                }
            }
            // (2) sum_l p_il^j = k_i
            let row: usize = (0..=d).map(|l| t.p(i, l, j)).sum();
            if row != v.k(i) {
                return fail(format!("sum_l p_{{{i},l}}^{j} = {row}, expected k_{i} = {}", v.k(i)));
            }
            // (3) k_i k_j = sum_l p_ij^l k_l
            let lhs = v.k(i) * v.k(j);
            let rhs: usize = (0..=d).map(|l| t.p(i, j, l) * v.k(l)).sum();
            if lhs != rhs {
                return fail(format!(
                    "k_{i} k_{j} = {lhs} but sum_l p_{{{i},{j}}}^l k_l = {rhs}"
                ));
            }
            // Complex product bound.
            let size = relation_product(t, i, j).len();
            let bound = gcd(v.k(i), v.k(j));
            if size > bound {
                return fail(format!(
                    "|R_{i} R_{j}| = {size} exceeds gcd(k_{i}, k_{j}) = {bound}"
                ));
            }
        }
    }
    Ok(())
}
