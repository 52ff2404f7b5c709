//! Exact linear algebra over a `Field`: reduced row echelon form, canonical
//! subspaces, subalgebra closure, ideal products, nilpotency indices and the
//! trace-form radical.
//!
//! A `Subspace` always stores its basis in reduced row echelon form, so two
//! subspaces are equal as sets if and only if they compare equal
//! structurally.  Vectors of length n*n are used throughout the crate as
//! row-major flattenings of n-by-n matrices.

use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("vector length {got} does not match ambient dimension {ambient}")]
    AmbientMismatch { ambient: usize, got: usize },
}

/// Row reduce a matrix; returns (rref, rank, pivot columns).
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, usize, Vec<usize>) {
    let f = m.field().clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Find a row at or below r with a nonzero entry in column c.
        let Some(pr) = (r..rows).find(|&i| !f.is_zero(a.get(i, c))) else {
            continue;
        };
        // Swap into position.
        if pr != r {
            for j in 0..cols {
                let x = a.get(r, j).clone();
                let y = a.get(pr, j).clone();
                a.set(r, j, y);
                a.set(pr, j, x);
            }
        }
        // Normalize the pivot row.
        let inv = f.inv(a.get(r, c)).expect("pivot is nonzero");
        for j in 0..cols {
            let v = f.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        // Eliminate the column everywhere else.
        for i in 0..rows {
            if i == r || f.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in 0..cols {
                let delta = f.mul(&factor, a.get(r, j));
                let v = f.sub(a.get(i, j), &delta);
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots.len(), pivots)
}

/// Null space of a matrix: { v : m v = 0 }, as a canonical subspace of F^cols.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let f = m.field().clone();
    let cols = m.cols();
    let (r, _rank, pivots) = rref(m);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    for &fc in &free {
        let mut v = vec![f.zero(); cols];
        v[fc] = f.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r.get(row, fc));
        }
        basis.push(v);
    }
    Subspace::span(f, cols, basis.into_iter()).expect("kernel vectors have ambient length")
}

/// A linear subspace of F^ambient with a canonical (RREF) basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span<I>(field: F, ambient: usize, vecs: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let mut s = Subspace::zero(field, ambient);
        for v in vecs {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
    /// The canonical RREF basis rows.
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of v after eliminating against the basis.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&w[p]) {
                continue;
            }
            let c = w[p].clone();
            for j in 0..self.ambient {
                let delta = f.mul(&c, &row[j]);
                w[j] = f.sub(&w[j], &delta);
            }
        }
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let f = &self.field;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Insert a vector, keeping the basis in RREF.  Returns true when the
    /// dimension grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::AmbientMismatch {
                ambient: self.ambient,
                got: v.len(),
            });
        }
        let f = self.field.clone();
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return Ok(false);
        };
        // Normalize the new row.
        let inv = f.inv(&w[p]).expect("leading entry nonzero");
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // Eliminate the new pivot column from existing rows.
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for j in 0..self.ambient {
                let delta = f.mul(&c, &w[j]);
                row[j] = f.sub(&row[j], &delta);
            }
        }
        // Keep rows sorted by pivot column.
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        Ok(true)
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone()).expect("same ambient");
        }
        s
    }

    pub fn intersect_dim(&self, other: &Subspace<F>) -> usize {
        // dim(U) + dim(V) - dim(U + V)
        self.dim() + other.dim() - self.sum(other).dim()
    }
}

/// Expresses vectors in the coordinates of a fixed independent spanning list.
///
/// Built once from a list of linearly independent vectors; `solve` then
/// returns the unique coefficient vector for anything inside the span.
pub struct SpanSolver<F: Field> {
    field: F,
    ambient: usize,
    /// Echelonized rows together with their expressions in the original list.
    rows: Vec<(Vec<F::Elem>, Vec<F::Elem>)>,
    pivots: Vec<usize>,
    n_vectors: usize,
}

impl<F: Field> SpanSolver<F> {
    /// `vectors` must be linearly independent (panics otherwise, since every
    /// caller in this crate passes a verified basis).
    pub fn new(field: F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Self {
        let mut s = SpanSolver {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            n_vectors: vectors.len(),
        };
        for (k, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), ambient, "span solver ambient mismatch");
            let mut track = vec![field.zero(); vectors.len()];
            track[k] = field.one();
            let mut w = v.clone();
            // Reduce (w, track) against existing rows.
            s.eliminate(&mut w, &mut track);
            let p = w
                .iter()
                .position(|x| !field.is_zero(x))
                .expect("span solver requires independent vectors");
            let inv = field.inv(&w[p]).unwrap();
            for x in w.iter_mut() {
                *x = field.mul(x, &inv);
            }
            for x in track.iter_mut() {
                *x = field.mul(x, &inv);
            }
            s.rows.push((w, track));
            s.pivots.push(p);
        }
        s
    }

    fn eliminate(&self, w: &mut [F::Elem], track: &mut [F::Elem]) {
        let f = &self.field;
        for ((row, t), &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&w[p]) {
                continue;
            }
            let c = w[p].clone();
            for j in 0..self.ambient {
                let delta = f.mul(&c, &row[j]);
                w[j] = f.sub(&w[j], &delta);
            }
            for j in 0..t.len() {
                let delta = f.mul(&c, &t[j]);
                track[j] = f.sub(&track[j], &delta);
            }
        }
    }

    /// Coefficients of v in terms of the original vectors, or None when v is
    /// outside the span.
    pub fn solve(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut coeffs = vec![f.zero(); self.n_vectors];
        for ((row, t), &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&w[p]) {
                continue;
            }
            let c = w[p].clone();
            for j in 0..self.ambient {
                let delta = f.mul(&c, &row[j]);
                w[j] = f.sub(&w[j], &delta);
            }
            for j in 0..t.len() {
                let delta = f.mul(&c, &t[j]);
                coeffs[j] = f.add(&coeffs[j], &delta);
            }
        }
        if w.iter().all(|x| f.is_zero(x)) {
            Some(coeffs)
        } else {
            None
        }
    }
}

/// Flattened matrix product: treats length n*n vectors as n-by-n matrices.
pub fn matrix_product_map<F: Field>(
    field: F,
    n: usize,
) -> impl Fn(&[F::Elem], &[F::Elem]) -> Vec<F::Elem> {
    move |a, b| {
        let ma = Matrix::from_flat(field.clone(), n, n, a);
        let mb = Matrix::from_flat(field.clone(), n, n, b);
        ma.mul(&mb).flatten()
    }
}

/// Smallest unital subalgebra of M_n(F) containing the generators, as a
/// subspace of F^(n*n).
///
/// Saturation: seed with the identity and the generators, then repeatedly
/// multiply all current representative pairs and insert the products until
/// the dimension stabilizes.
pub fn subalgebra_closure<F: Field>(field: &F, gens: &[Matrix<F>], n: usize) -> Subspace<F> {
    let mut space = Subspace::zero(field.clone(), n * n);
    let mut reps: Vec<Matrix<F>> = Vec::new();
    let mut candidates: Vec<Matrix<F>> = vec![Matrix::identity(field.clone(), n)];
    candidates.extend(gens.iter().cloned());
    for m in candidates {
        assert_eq!((m.rows(), m.cols()), (n, n), "generator size mismatch");
        if space.insert(m.flatten()).expect("ambient fixed") {
            reps.push(m);
        }
    }
    loop {
        let before = space.dim();
        let mut new_reps = Vec::new();
        for a in &reps {
            for b in &reps {
                let p = a.mul(b);
                if space.insert(p.flatten()).expect("ambient fixed") {
                    new_reps.push(p);
                }
            }
        }
        reps.extend(new_reps);
        if space.dim() == before {
            break;
        }
    }
    space
}

/// Span of all products mult(a_i, b_j) of basis vectors of the two spaces.
pub fn ideal_product<F, M>(a: &Subspace<F>, b: &Subspace<F>, mult: M) -> Subspace<F>
where
    F: Field,
    M: Fn(&[F::Elem], &[F::Elem]) -> Vec<F::Elem>,
{
    assert_eq!(a.ambient(), b.ambient());
    let mut out = Subspace::zero(a.field().clone(), a.ambient());
    for x in a.basis() {
        for y in b.basis() {
            out.insert(mult(x, y)).expect("product has ambient length");
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    /// Least t >= 1 with N^t = 0.
    Nilpotent(usize),
    NotNilpotent,
}

/// Nilpotency index of a subspace under the given bilinear product, with
/// N^1 = N and N^(t+1) = N^t * N.  The zero subspace has index 1.  Stops
/// early when the power sequence becomes stationary and nonzero, and never
/// searches past ambient + 1.
pub fn nilpotency_index<F, M>(n: &Subspace<F>, mult: M) -> Nilpotency
where
    F: Field,
    M: Fn(&[F::Elem], &[F::Elem]) -> Vec<F::Elem>,
{
    let mut cur = n.clone();
    for t in 1..=(n.ambient() + 1) {
        if cur.is_zero() {
            return Nilpotency::Nilpotent(t);
        }
        let next = ideal_product(&cur, n, &mult);
        if next == cur {
            return Nilpotency::NotNilpotent;
        }
        cur = next;
    }
    Nilpotency::NotNilpotent
}

/// Kernel of the trace bilinear form (x, y) -> trace(xy) restricted to the
/// span of the given (independent) matrices, returned as a subspace of the
/// flattened ambient matrix space.
///
/// Over a field of characteristic 0 this equals the Jacobson radical of the
/// spanned algebra.  Over characteristic p a zero kernel still certifies
/// semisimplicity, while a nonzero kernel is inconclusive.
pub fn trace_form_radical<F: Field>(basis: &[Matrix<F>]) -> Subspace<F> {
    assert!(!basis.is_empty(), "need at least one basis matrix");
    let field = basis[0].field().clone();
    let n = basis[0].rows();
    let m = basis.len();
    let mut gram = Matrix::zeros(field.clone(), m, m);
    for i in 0..m {
        for j in 0..m {
            gram.set(i, j, basis[i].mul(&basis[j]).trace());
        }
    }
    let null = kernel(&gram);
    let mut rad = Subspace::zero(field.clone(), n * n);
    for coeffs in null.basis() {
        let mut v = vec![field.zero(); n * n];
        for (c, b) in coeffs.iter().zip(basis) {
            if field.is_zero(c) {
                continue;
            }
            let flat = b.flatten();
            for (vi, bi) in v.iter_mut().zip(&flat) {
                let delta = field.mul(c, bi);
                *vi = field.add(vi, &delta);
            }
        }
        rad.insert(v).expect("ambient fixed");
    }
    rad
}
