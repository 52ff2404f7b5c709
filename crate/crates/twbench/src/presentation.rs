//! Algebras given by structure constants: validation, verified radicals,
//! Cartan matrices, projective classification, the corner (basic) algebra
//! of the Terwilliger algebra in characteristic 2, the star-quiver algebra
//! with its dual arrows, and the label bijection identifying the two.

use crate::field::Field;
use crate::matrix::Matrix;
use crate::scheme::Valencies;
use crate::subspace::{nilpotency_index, Nilpotency, Subspace};
use crate::terwilliger::{ClassData, MultTable, StructuredBasis, TAlgebra};
use crate::verify::Counterexample;
use std::collections::BTreeMap;

/// A finite-dimensional unital algebra presented by structure constants on
/// a labeled basis.  Construction verifies associativity and the unit laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation<F: Field> {
    field: F,
    labels: Vec<String>,
    /// structure[a * dim + b] lists the nonzero (coefficient, position)
    /// terms of the product of basis elements a and b.
    structure: Vec<Vec<(F::Elem, usize)>>,
    one: Vec<F::Elem>,
}

impl<F: Field> AlgebraPresentation<F> {
    pub fn new(
        field: F,
        labels: Vec<String>,
        structure: Vec<Vec<(F::Elem, usize)>>,
        one: Vec<F::Elem>,
    ) -> Result<Self, Counterexample> {
        let dim = labels.len();
        let fail = |w: String| Err(Counterexample::new("algebra presentation", w));
        if structure.len() != dim * dim || one.len() != dim {
            return fail("structure table or unit vector has the wrong size".to_string());
        }
        for terms in &structure {
            for &(_, target) in terms {
                if target >= dim {
                    return fail(format!("structure target {target} out of range"));
                }
            }
        }
        let pres = AlgebraPresentation {
            field,
            labels,
            structure,
            one,
        };
        for a in 0..dim {
            let ea = pres.basis_vector(a);
            if pres.multiply(&pres.one, &ea) != ea || pres.multiply(&ea, &pres.one) != ea {
                return fail(format!("unit laws fail on basis element {}", pres.labels[a]));
            }
            for b in 0..dim {
                let eb = pres.basis_vector(b);
                let ab = pres.multiply(&ea, &eb);
                for c in 0..dim {
                    let ec = pres.basis_vector(c);
                    let left = pres.multiply(&ab, &ec);
                    let right = pres.multiply(&ea, &pres.multiply(&eb, &ec));
                    if left != right {
                        return fail(format!(
                            "associativity fails on ({}, {}, {})",
                            pres.labels[a], pres.labels[b], pres.labels[c]
                        ));
                    }
                }
            }
        }
        Ok(pres)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn one(&self) -> &[F::Elem] {
        &self.one
    }

    pub fn basis_vector(&self, k: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[k] = self.field.one();
        v
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let dim = self.dim();
        let mut out = vec![self.field.zero(); dim];
        for (a, xa) in x.iter().enumerate() {
            if self.field.is_zero(xa) {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if self.field.is_zero(yb) {
                    continue;
                }
                let c = self.field.mul(xa, yb);
                for (coeff, target) in &self.structure[a * dim + b] {
                    let term = self.field.mul(&c, coeff);
                    out[*target] = self.field.add(&out[*target], &term);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by x on coordinates (columns map basis
    /// vectors to x * basis).
    pub fn left_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let dim = self.dim();
        let mut m = Matrix::zeros(self.field.clone(), dim, dim);
        for b in 0..dim {
            let col = self.multiply(x, &self.basis_vector(b));
            for (r, val) in col.into_iter().enumerate() {
                m.set(r, b, val);
            }
        }
        m
    }

    /// Matrix of right multiplication by x on coordinates.
    pub fn right_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let dim = self.dim();
        let mut m = Matrix::zeros(self.field.clone(), dim, dim);
        for b in 0..dim {
            let col = self.multiply(&self.basis_vector(b), x);
            for (r, val) in col.into_iter().enumerate() {
                m.set(r, b, val);
            }
        }
        m
    }

    pub fn is_idempotent(&self, x: &[F::Elem]) -> bool {
        self.multiply(x, x) == x
    }
}

/// A verified radical: a nilpotent two-sided ideal whose quotient is
/// spanned by orthogonal idempotent residues, which pins it down as the
/// Jacobson radical.
#[derive(Debug, Clone)]
pub struct VerifiedRadical<F: Field> {
    /// The radical as a subspace of the coordinate space.
    pub space: Subspace<F>,
    /// Least t with radical^t = 0.
    pub nilpotency: usize,
}

/// Verify that `candidate` spans the radical.  Requirements checked: the
/// span is a two-sided ideal, it is nilpotent, the supplied idempotents are
/// orthogonal and sum to the unit, and together with the candidate they
/// span the whole algebra.  The quotient is then a product of copies of the
/// field, hence semisimple, so the candidate contains the radical; being a
/// nilpotent ideal it is contained in it.
pub fn verify_radical<F: Field>(
    pres: &AlgebraPresentation<F>,
    candidate: &[Vec<F::Elem>],
    idempotents: &[Vec<F::Elem>],
) -> Result<VerifiedRadical<F>, Counterexample> {
    let field = pres.field().clone();
    let dim = pres.dim();
    let fail = |w: String| Err(Counterexample::new("radical certificate", w));
    let mut space = Subspace::zero(field.clone(), dim);
    for v in candidate {
        space.insert(v.clone()).expect("coordinate length");
    }
    for k in 0..dim {
        let b = pres.basis_vector(k);
        for row in space.basis() {
            if !space.contains(&pres.multiply(&b, row)) || !space.contains(&pres.multiply(row, &b))
            {
                return fail(format!(
                    "the candidate span is not an ideal (fails at {})",
                    pres.labels()[k]
                ));
            }
        }
    }
    let nilpotency = match nilpotency_index(&space, |x, y| pres.multiply(x, y)) {
        Nilpotency::Nilpotent(t) => t,
        Nilpotency::NotNilpotent => return fail("the candidate span is not nilpotent".to_string()),
    };
    let mut unit = vec![field.zero(); dim];
    for (i, e) in idempotents.iter().enumerate() {
        if !pres.is_idempotent(e) {
            return fail(format!("complement element {i} is not idempotent"));
        }
        for (j, f) in idempotents.iter().enumerate() {
            if i != j {
                let zero = vec![field.zero(); dim];
                if pres.multiply(e, f) != zero {
                    return fail(format!("complement idempotents {i} and {j} do not annihilate"));
                }
            }
        }
        unit = unit
            .iter()
            .zip(e)
            .map(|(a, b)| field.add(a, b))
            .collect();
    }
    if unit != pres.one() {
        return fail("complement idempotents do not sum to the unit".to_string());
    }
    let mut full = space.clone();
    for e in idempotents {
        full.insert(e.clone()).expect("coordinate length");
    }
    if full.dim() != dim {
        return fail(format!(
            "candidate plus idempotents span dimension {}, expected {dim}",
            full.dim()
        ));
    }
    if space.dim() + idempotents.len() != dim {
        return fail("candidate overlaps the idempotent complement".to_string());
    }
    Ok(VerifiedRadical {
        space,
        nilpotency,
    })
}

/// Cartan-style corner dimensions: entry (i, j) is the dimension of
/// e_i A e_j.
pub fn cartan_matrix<F: Field>(
    pres: &AlgebraPresentation<F>,
    idempotents: &[Vec<F::Elem>],
) -> Vec<Vec<usize>> {
    let dim = pres.dim();
    idempotents
        .iter()
        .map(|ei| {
            idempotents
                .iter()
                .map(|ej| {
                    let mut corner = Subspace::zero(pres.field().clone(), dim);
                    for k in 0..dim {
                        let m = pres.multiply(ei, &pres.multiply(&pres.basis_vector(k), ej));
                        corner.insert(m).expect("coordinate length");
                    }
                    corner.dim()
                })
                .collect()
        })
        .collect()
}

/// Summary of the indecomposable projective left modules A e_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveSummary {
    /// Dimensions of the modules A e_i.
    pub dims: Vec<usize>,
    /// Corner dimensions dim e_i A e_j.
    pub cartan: Vec<Vec<usize>>,
}

/// Classify the projectives cut out by a complete set of idempotents:
/// verify completeness and orthogonality, primitivity (each corner is a
/// local algebra: its intersection with the radical has codimension 1),
/// and pairwise non-isomorphism (either the dimensions differ or all maps
/// P_i -> P_j factor through the radical).
pub fn projective_classification<F: Field>(
    pres: &AlgebraPresentation<F>,
    idempotents: &[Vec<F::Elem>],
    radical: &VerifiedRadical<F>,
) -> Result<ProjectiveSummary, Counterexample> {
    let field = pres.field().clone();
    let dim = pres.dim();
    let fail = |w: String| Err(Counterexample::new("projective classification", w));
    let mut unit = vec![field.zero(); dim];
    for e in idempotents {
        if !pres.is_idempotent(e) {
            return fail("a supplied element is not idempotent".to_string());
        }
        unit = unit.iter().zip(e).map(|(a, b)| field.add(a, b)).collect();
    }
    if unit != pres.one() {
        return fail("idempotents do not sum to the unit".to_string());
    }
    for (i, e) in idempotents.iter().enumerate() {
        for (j, f) in idempotents.iter().enumerate() {
            if i != j && pres.multiply(e, f).iter().any(|c| !field.is_zero(c)) {
                return fail(format!("idempotents {i} and {j} are not orthogonal"));
            }
        }
    }

    let corner_span = |ei: &[F::Elem], ej: &[F::Elem]| -> Subspace<F> {
        let mut s = Subspace::zero(field.clone(), dim);
        for k in 0..dim {
            s.insert(pres.multiply(ei, &pres.multiply(&pres.basis_vector(k), ej)))
                .expect("coordinate length");
        }
        s
    };

    // Primitivity: rad(e A e) = e rad(A) e, so the corner must meet the
    // radical in codimension 1.
    for (i, e) in idempotents.iter().enumerate() {
        let corner = corner_span(e, e);
        let meet = corner.intersect_dim(&radical.space);
        if meet + 1 != corner.dim() {
            return fail(format!(
                "idempotent {i} is not primitive: its corner has dimension {} and meets \
                 the radical in dimension {meet}",
                corner.dim()
            ));
        }
    }

    let dims: Vec<usize> = idempotents
        .iter()
        .map(|e| {
            let mut s = Subspace::zero(field.clone(), dim);
            for k in 0..dim {
                s.insert(pres.multiply(&pres.basis_vector(k), e))
                    .expect("coordinate length");
            }
            s.dim()
        })
        .collect();

    for (i, ei) in idempotents.iter().enumerate() {
        for (j, ej) in idempotents.iter().enumerate() {
            if i == j || dims[i] != dims[j] {
                continue;
            }
            // Same dimension: rule out an isomorphism by showing every
            // homomorphism P_i -> P_j (right multiplication by e_i A e_j)
            // lands in the radical.
            let corner = corner_span(ei, ej);
            if !corner.is_subspace_of(&radical.space) {
                return fail(format!(
                    "cannot separate the projectives of idempotents {i} and {j}"
                ));
            }
        }
    }

    Ok(ProjectiveSummary {
        dims,
        cartan: cartan_matrix(pres, idempotents),
    })
}

/// An algebra with the star shape: one presentation together with the slot
/// bookkeeping — a corner element for every ordered pair of vertices and a
/// loop element for every outer vertex.
#[derive(Debug, Clone)]
pub struct StarAlgebra<F: Field> {
    pub pres: AlgebraPresentation<F>,
    pub r: usize,
    /// (u, v) -> basis position of the corner element, u, v in 0..=r.
    pub corner: BTreeMap<(usize, usize), usize>,
    /// u -> basis position of the loop element, u in 1..=r.
    pub loops: BTreeMap<usize, usize>,
}

impl<F: Field> StarAlgebra<F> {
    /// The complete orthogonal idempotents: corner (0,0) plus the loops.
    pub fn idempotents(&self) -> Vec<Vec<F::Elem>> {
        let mut out = vec![self.pres.basis_vector(self.corner[&(0, 0)])];
        for u in 1..=self.r {
            out.push(self.pres.basis_vector(self.loops[&u]));
        }
        out
    }

    /// Candidate radical: every basis element except the idempotents.
    pub fn radical_candidate(&self) -> Vec<Vec<F::Elem>> {
        let idem: Vec<usize> = std::iter::once(self.corner[&(0, 0)])
            .chain((1..=self.r).map(|u| self.loops[&u]))
            .collect();
        (0..self.pres.dim())
            .filter(|k| !idem.contains(k))
            .map(|k| self.pres.basis_vector(k))
            .collect()
    }
}

/// Build the corner (basic) algebra of the Terwilliger algebra in
/// characteristic 2.  The corner is cut out by the diagonal basis elements
/// at the minimal one-valent relation and the minimal member of each class;
/// its basis consists of the layer-0 elements connecting those minima plus
/// the upper-layer diagonal elements.  Everything is verified: the cutting
/// elements form part of a complete orthogonal idempotent set, the corner
/// of every algebra element lands in the selected span, and the structure
/// constants close on the selected basis.
pub fn basic_algebra<F: Field>(
    field: &F,
    alg: &TAlgebra<F>,
    basis: &StructuredBasis<F>,
    table: &MultTable,
    v: &Valencies,
    cd: &ClassData,
) -> Result<StarAlgebra<F>, Counterexample> {
    let fail = |w: String| Err(Counterexample::new("corner algebra", w));
    if field.characteristic() != 2 {
        return fail(format!(
            "the corner construction needs characteristic 2, got {}",
            field.label()
        ));
    }
    let r = cd.r();
    let n = alg.n();
    // The full orthogonal idempotent set of the algebra: diagonal layer-0
    // elements at one-valent relations and diagonal elements of each upper
    // layer.  Verify completeness against the identity matrix.
    let mut identity_sum = Matrix::zeros(field.clone(), n, n);
    let mut idempotent_positions = Vec::new();
    for (pos, label) in basis.labels.iter().enumerate() {
        let diagonal_unit = label.row == label.col
            && ((label.layer == 0 && v.k(label.row) == 1) || label.layer > 0);
        if diagonal_unit {
            idempotent_positions.push(pos);
            identity_sum = identity_sum.add(&basis.matrices[pos]);
        }
    }
    if identity_sum != Matrix::identity(field.clone(), n) {
        return fail("diagonal elements do not sum to the identity".to_string());
    }
    for &a in &idempotent_positions {
        for &b in &idempotent_positions {
            let product = basis.matrices[a].mul(&basis.matrices[b]);
            let expected = if a == b {
                basis.matrices[a].clone()
            } else {
                Matrix::zeros(field.clone(), n, n)
            };
            if product != expected {
                return fail("diagonal elements are not orthogonal idempotents".to_string());
            }
        }
    }

    // Representative minima: the one-valent side is represented by relation
    // 0 (always one-valent); class l by its least member.
    let mut minima = vec![0usize];
    for class in &cd.classes {
        minima.push(class[0]);
    }
    let mut corner = BTreeMap::new();
    let mut loops = BTreeMap::new();
    let mut selected: Vec<usize> = Vec::new();
    for u in 0..=r {
        for w in 0..=r {
            let pos = basis.position[&(0, minima[u], minima[w])];
            corner.insert((u, w), selected.len());
            selected.push(pos);
        }
    }
    for u in 1..=r {
        let pos = basis.position[&(u, minima[u], minima[u])];
        loops.insert(u, selected.len());
        selected.push(pos);
    }

    // The cutting idempotent e: corner (0,0) plus the loops.
    let mut e = basis.matrices[basis.position[&(0, 0, 0)]].clone();
    for u in 1..=r {
        e = e.add(&basis.matrices[basis.position[&(u, minima[u], minima[u])]]);
    }
    let mut corner_span = Subspace::zero(field.clone(), n * n);
    for &pos in &selected {
        let m = &basis.matrices[pos];
        if e.mul(m).mul(&e) != *m {
            return fail(format!(
                "{} is not fixed by the cutting idempotent",
                basis.labels[pos]
            ));
        }
        if !corner_span.insert(m.flatten()).expect("fixed ambient") {
            return fail("selected corner elements are dependent".to_string());
        }
    }
    for m in &basis.matrices {
        if !corner_span.contains(&e.mul(m).mul(&e).flatten()) {
            return fail("the corner of the algebra exceeds the selected span".to_string());
        }
    }

    // Structure constants through the verified multiplication table.
    let dim = selected.len();
    let slot_of: BTreeMap<usize, usize> = selected
        .iter()
        .enumerate()
        .map(|(slot, &pos)| (pos, slot))
        .collect();
    let mut structure = vec![Vec::new(); dim * dim];
    for (sa, &pa) in selected.iter().enumerate() {
        for (sb, &pb) in selected.iter().enumerate() {
            if let Some((coeff, target)) = table.rule(pa, pb) {
                let c = field.from_int(coeff as i64);
                if field.is_zero(&c) {
                    continue;
                }
                match slot_of.get(&target) {
                    Some(&slot) => structure[sa * dim + sb].push((c, slot)),
                    None => {
                        return fail(format!(
                            "product of corner elements leaves the corner: {} * {}",
                            basis.labels[pa], basis.labels[pb]
                        ))
                    }
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(dim);
    for u in 0..=r {
        for w in 0..=r {
            labels.push(format!("g0[{u},{w}]"));
        }
    }
    for u in 1..=r {
        labels.push(format!("g{u}"));
    }
    let mut one = vec![field.zero(); dim];
    one[corner[&(0, 0)]] = field.one();
    for u in 1..=r {
        one[loops[&u]] = field.one();
    }
    let pres = AlgebraPresentation::new(field.clone(), labels, structure, one)?;
    Ok(StarAlgebra {
        pres,
        r,
        corner,
        loops,
    })
}

/// The star-quiver algebra with dual arrows over any field: vertices
/// 0..=r, arrows into the center from each outer vertex and back out, with
/// the center-passing compositions from an outer vertex to itself through
/// its own arrow pair set to zero.  Basis: vertex idempotents e_u, inward
/// arrows a_v (slot (0, v)), outward arrows b_u (slot (u, 0)), and the
/// two-step paths c_uv = b_u a_v (slot (u, v)).
pub fn lambda_algebra<F: Field>(field: &F, r: usize) -> StarAlgebra<F> {
    // Basis layout: e_0..e_r, a_1..a_r, b_1..b_r, c_11..c_rr (row-major).
    let dim = (r + 1) + 2 * r + r * r;
    let e = |u: usize| u;
    let a = |v: usize| r + 1 + (v - 1);
    let b = |u: usize| r + 1 + r + (u - 1);
    let c = |u: usize, v: usize| r + 1 + 2 * r + (u - 1) * r + (v - 1);

    // Slot of each basis element: (left vertex, right vertex).
    let mut slot = vec![(0usize, 0usize); dim];
    let mut labels = vec![String::new(); dim];
    for u in 0..=r {
        slot[e(u)] = (u, u);
        labels[e(u)] = format!("e{u}");
    }
    for v in 1..=r {
        slot[a(v)] = (0, v);
        labels[a(v)] = format!("a{v}");
    }
    for u in 1..=r {
        slot[b(u)] = (u, 0);
        labels[b(u)] = format!("b{u}");
    }
    for u in 1..=r {
        for v in 1..=r {
            slot[c(u, v)] = (u, v);
            labels[c(u, v)] = format!("c[{u},{v}]");
        }
    }

    let is_vertex = |k: usize| k <= r;
    let mut structure: Vec<Vec<(F::Elem, usize)>> = vec![Vec::new(); dim * dim];
    for x in 0..dim {
        for y in 0..dim {
            let (lx, rx) = slot[x];
            let (ly, ry) = slot[y];
            if rx != ly {
                continue;
            }
            let product: Option<usize> = if is_vertex(x) {
                Some(y)
            } else if is_vertex(y) {
                Some(x)
            } else if lx >= 1 && ry >= 1 && x == b(lx) && y == a(ry) {
                // Outward then inward composes to a two-step path.
                Some(c(lx, ry))
            } else {
                // Inward-then-outward passes a zero relation at the outer
                // vertex; longer paths already contain one.
                None
            };
            if let Some(t) = product {
                structure[x * dim + y].push((field.one(), t));
            }
        }
    }
    let mut one = vec![field.zero(); dim];
    for u in 0..=r {
        one[e(u)] = field.one();
    }
    let pres = AlgebraPresentation::new(field.clone(), labels, structure, one)
        .expect("the star algebra satisfies the algebra axioms");
    let mut corner = BTreeMap::new();
    corner.insert((0, 0), e(0));
    for v in 1..=r {
        corner.insert((0, v), a(v));
    }
    for u in 1..=r {
        corner.insert((u, 0), b(u));
    }
    for u in 1..=r {
        for v in 1..=r {
            corner.insert((u, v), c(u, v));
        }
    }
    let mut loops = BTreeMap::new();
    for u in 1..=r {
        loops.insert(u, e(u));
    }
    StarAlgebra {
        pres,
        r,
        corner,
        loops,
    }
}

/// Verify that the slot-preserving label bijection between two star-shaped
/// algebras is an algebra isomorphism: it must match dimensions, carry the
/// unit to the unit, and transport every structure constant.
pub fn verify_iso_psi<F: Field>(
    from: &StarAlgebra<F>,
    to: &StarAlgebra<F>,
) -> Result<(), Counterexample> {
    let fail = |w: String| Err(Counterexample::new("slot bijection", w));
    if from.r != to.r {
        return fail(format!("different star sizes: {} vs {}", from.r, to.r));
    }
    let dim = from.pres.dim();
    if dim != to.pres.dim() {
        return fail(format!(
            "different dimensions: {} vs {}",
            dim,
            to.pres.dim()
        ));
    }
    let r = from.r;
    // Position-to-position map through the slot bookkeeping.
    let mut image = vec![usize::MAX; dim];
    for u in 0..=r {
        for w in 0..=r {
            image[from.corner[&(u, w)]] = to.corner[&(u, w)];
        }
    }
    for u in 1..=r {
        image[from.loops[&u]] = to.loops[&u];
    }
    if image.iter().any(|&i| i == usize::MAX) {
        return fail("slot maps do not cover the basis".to_string());
    }
    let field = from.pres.field().clone();
    let transport = |x: &[F::Elem]| -> Vec<F::Elem> {
        let mut out = vec![field.zero(); dim];
        for (k, val) in x.iter().enumerate() {
            out[image[k]] = val.clone();
        }
        out
    };
    if transport(from.pres.one()) != to.pres.one() {
        return fail("the bijection does not carry the unit to the unit".to_string());
    }
    for x in 0..dim {
        for y in 0..dim {
            let lhs = transport(&from.pres.multiply(
                &from.pres.basis_vector(x),
                &from.pres.basis_vector(y),
            ));
            let rhs = to.pres.multiply(
                &to.pres.basis_vector(image[x]),
                &to.pres.basis_vector(image[y]),
            );
            if lhs != rhs {
                return fail(format!(
                    "structure constants differ at {} * {}",
                    from.pres.labels()[x],
                    from.pres.labels()[y]
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_scheme;
    use crate::field::{PrimeField, Rationals};
    use crate::scheme::{intersection_numbers, valencies};
    use crate::terwilliger::{
        class_data, generate, multiplication_table, structured_basis,
    };

    fn corner_of(name: &str) -> StarAlgebra<PrimeField> {
        let f2 = PrimeField::new(2).unwrap();
        let s = catalog_scheme(name).unwrap();
        let t = intersection_numbers(&s).unwrap();
        let v = valencies(&s, &t).unwrap();
        let cd = class_data(&t, &v).unwrap();
        let alg = generate(&f2, &s, 0).unwrap();
        let basis = structured_basis(&f2, &s, 0, &cd);
        let table = multiplication_table(&f2, &basis, &v).unwrap();
        basic_algebra(&f2, &alg, &basis, &table, &v, &cd).unwrap()
    }

    #[test]
    fn presentation_rejects_broken_associativity() {
        let q = Rationals;
        // Basis {1, x, y} with x*x = y and all other non-unit products zero
        // is the truncated polynomial ring, hence associative.
        let labels = vec!["one".to_string(), "x".to_string(), "y".to_string()];
        let unit_row = |k: usize| vec![(q.one(), k)];
        let mut structure = vec![Vec::new(); 9];
        for k in 0..3 {
            structure[k] = unit_row(k);
            structure[3 * k] = unit_row(k);
        }
        structure[4] = unit_row(2); // x * x = y
        let one = vec![q.one(), q.zero(), q.zero()];
        assert!(AlgebraPresentation::new(
            q.clone(),
            labels.clone(),
            structure.clone(),
            one.clone()
        )
        .is_ok());
        // Setting x*y = 1 while y*x stays 0 makes (x*x)*x = 0 but
        // x*(x*x) = 1.
        structure[5] = unit_row(0); // x * y = 1
        let err = AlgebraPresentation::new(q, labels, structure, one).unwrap_err();
        assert!(
            err.to_string().contains("associativity"),
            "unexpected failure: {err}"
        );
    }

    #[test]
    fn star_algebra_dimensions() {
        let q = Rationals;
        for (r, dim) in [(0, 1), (1, 5), (2, 11), (3, 19), (4, 29)] {
            let star = lambda_algebra(&q, r);
            assert_eq!(star.pres.dim(), dim, "r = {r}");
        }
    }

    #[test]
    fn star_algebra_defining_relations() {
        let q = Rationals;
        let star = lambda_algebra(&q, 2);
        let p = &star.pres;
        let a1 = p.basis_vector(star.corner[&(0, 1)]);
        let b1 = p.basis_vector(star.corner[&(1, 0)]);
        let c11 = p.basis_vector(star.corner[&(1, 1)]);
        // Outward after inward hits the zero relation.
        assert!(p.multiply(&a1, &b1).iter().all(|c| q.is_zero(c)));
        // Inward after outward is the two-step path.
        assert_eq!(p.multiply(&b1, &a1), c11);
        // Two-step paths annihilate each other.
        let c12 = p.basis_vector(star.corner[&(1, 2)]);
        assert!(p.multiply(&c11, &c12).iter().all(|c| q.is_zero(c)));
    }

    #[test]
    fn star_algebra_radical_is_cube_zero() {
        for r in [1usize, 2, 3] {
            let q = Rationals;
            let star = lambda_algebra(&q, r);
            let rad = verify_radical(&star.pres, &star.radical_candidate(), &star.idempotents())
                .unwrap();
            assert_eq!(rad.space.dim(), star.pres.dim() - (r + 1));
            assert_eq!(rad.nilpotency, 3, "r = {r}");
        }
        // The one-vertex star is just the field.
        let q = Rationals;
        let star = lambda_algebra(&q, 0);
        let rad =
            verify_radical(&star.pres, &star.radical_candidate(), &star.idempotents()).unwrap();
        assert_eq!(rad.space.dim(), 0);
        assert_eq!(rad.nilpotency, 1);
    }

    #[test]
    fn star_algebra_cartan_matrix() {
        let q = Rationals;
        let star = lambda_algebra(&q, 2);
        let cartan = cartan_matrix(&star.pres, &star.idempotents());
        assert_eq!(cartan, vec![vec![1, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
    }

    #[test]
    fn corner_algebra_of_cycle4_over_gf2() {
        let star = corner_of("cycle-4");
        assert_eq!(star.r, 1);
        assert_eq!(star.pres.dim(), 5);
        let rad = verify_radical(&star.pres, &star.radical_candidate(), &star.idempotents())
            .unwrap();
        assert_eq!(rad.space.dim(), 3);
        assert_eq!(rad.nilpotency, 3);
        let cartan = cartan_matrix(&star.pres, &star.idempotents());
        assert_eq!(cartan, vec![vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn corner_algebra_matches_star_algebra() {
        let f2 = PrimeField::new(2).unwrap();
        for name in ["cycle-4", "cycle-6", "cycle-8", "affine-8"] {
            let star = corner_of(name);
            let lambda = lambda_algebra(&f2, star.r);
            verify_iso_psi(&lambda, &star).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn corner_construction_requires_characteristic_2() {
        let q = Rationals;
        let s = catalog_scheme("cycle-4").unwrap();
        let t = intersection_numbers(&s).unwrap();
        let v = valencies(&s, &t).unwrap();
        let cd = class_data(&t, &v).unwrap();
        let alg = generate(&q, &s, 0).unwrap();
        let basis = structured_basis(&q, &s, 0, &cd);
        let table = multiplication_table(&q, &basis, &v).unwrap();
        assert!(basic_algebra(&q, &alg, &basis, &table, &v, &cd).is_err());
    }

    #[test]
    fn projective_classification_of_star_algebras() {
        let q = Rationals;
        for r in [1usize, 2, 3] {
            let star = lambda_algebra(&q, r);
            let rad = verify_radical(&star.pres, &star.radical_candidate(), &star.idempotents())
                .unwrap();
            let summary =
                projective_classification(&star.pres, &star.idempotents(), &rad).unwrap();
            let mut expected_dims = vec![r + 1];
            expected_dims.extend(std::iter::repeat(r + 2).take(r));
            assert_eq!(summary.dims, expected_dims, "r = {r}");
        }
    }

    #[test]
    fn projective_classification_on_the_gf2_corner() {
        let star = corner_of("affine-8");
        let rad = verify_radical(&star.pres, &star.radical_candidate(), &star.idempotents())
            .unwrap();
        let summary = projective_classification(&star.pres, &star.idempotents(), &rad).unwrap();
        assert_eq!(summary.dims, vec![2, 3]);
        assert_eq!(summary.cartan, vec![vec![1, 1], vec![1, 2]]);
    }
}
