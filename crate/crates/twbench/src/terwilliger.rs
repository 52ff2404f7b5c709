//! The Terwilliger algebra of a scheme at a base point: adjacency matrices,
//! dual idempotents, the generated subalgebra of M_X, and — for quasi-thin
//! schemes — the combinatorial pair sets, the equivalence classes of
//! two-valent relations, the structured basis with its closed-form
//! multiplication table, the characteristic-2 radical, and base-point
//! invariance.
//!
//! Everything here is verified numerically: each closed-form claim is
//! recomputed from actual matrix arithmetic and any mismatch is returned as
//! a counterexample with a witness.

use crate::field::Field;
use crate::matrix::Matrix;
use crate::scheme::{relation_product, IntersectionTensor, Scheme, Valencies};
use crate::subspace::{
    matrix_product_map, nilpotency_index, subalgebra_closure, trace_form_radical, Nilpotency,
    Subspace,
};
use crate::verify::Counterexample;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Adjacency matrices A_0, ..., A_d of the scheme's relations.
pub fn adjacency_matrices<F: Field>(field: &F, s: &Scheme) -> Vec<Matrix<F>> {
    let n = s.n();
    (0..=s.d())
        .map(|i| {
            let mut m = Matrix::zeros(field.clone(), n, n);
            for x in 0..n {
                for y in 0..n {
                    if s.rel(x, y) == i {
                        m.set(x, y, field.one());
                    }
                }
            }
            m
        })
        .collect()
}

/// Check the defining identities of the adjacency matrices: A_0 = I,
/// sum A_i = J, transpose(A_i) = A_{i'}, and A_i A_j = sum_l p_ij^l A_l.
pub fn check_adjacency_algebra<F: Field>(
    field: &F,
    s: &Scheme,
    t: &IntersectionTensor,
    v: &Valencies,
    a: &[Matrix<F>],
) -> Result<(), Counterexample> {
    let n = s.n();
    let d = s.d();
    let fail = |w: String| Err(Counterexample::new("adjacency algebra", w));
    if a.len() != d + 1 {
        return fail(format!("expected {} matrices, got {}", d + 1, a.len()));
    }
    if a[0] != Matrix::identity(field.clone(), n) {
        return fail("A_0 is not the identity matrix".to_string());
    }
    let mut total = Matrix::zeros(field.clone(), n, n);
    for m in a {
        total = total.add(m);
    }
    if total != Matrix::ones(field.clone(), n, n) {
        return fail("the adjacency matrices do not sum to the all-ones matrix".to_string());
    }
    for i in 0..=d {
        if a[i].transpose() != a[v.inv(i)] {
            return fail(format!("transpose of A_{i} is not A_{}", v.inv(i)));
        }
    }
    for i in 0..=d {
        for j in 0..=d {
            let product = a[i].mul(&a[j]);
            let mut expected = Matrix::zeros(field.clone(), n, n);
            for l in 0..=d {
                expected = expected.add(&a[l].scale(&field.from_int(t.p(i, j, l) as i64)));
            }
            if product != expected {
                return fail(format!(
                    "A_{i} A_{j} does not expand as sum_l p_{{{i},{j}}}^l A_l"
                ));
            }
        }
    }
    Ok(())
}

/// Dual idempotents E_0*, ..., E_d* at base point x: E_i* is the diagonal
/// 0/1 matrix supported on the i-neighborhood of x.
pub fn dual_idempotents<F: Field>(field: &F, s: &Scheme, x: usize) -> Vec<Matrix<F>> {
    let n = s.n();
    (0..=s.d())
        .map(|i| {
            let mut m = Matrix::zeros(field.clone(), n, n);
            for y in 0..n {
                if s.rel(x, y) == i {
                    m.set(y, y, field.one());
                }
            }
            m
        })
        .collect()
}

/// Check the dual-idempotent identities at base point x:
/// E_i* E_j* = delta_ij E_j*, sum E_i* = I, J E_i* J = k_i J, and each
/// compression E_i* A_l E_j* is a 0/1 matrix supported on xR_i x xR_j.
pub fn check_dual_idempotents<F: Field>(
    field: &F,
    s: &Scheme,
    v: &Valencies,
    x: usize,
) -> Result<(), Counterexample> {
    let n = s.n();
    let d = s.d();
    let fail = |w: String| Err(Counterexample::new("dual idempotents", w));
    let a = adjacency_matrices(field, s);
    let e = dual_idempotents(field, s, x);
    let mut total = Matrix::zeros(field.clone(), n, n);
    for (i, ei) in e.iter().enumerate() {
        total = total.add(ei);
        for (j, ej) in e.iter().enumerate() {
            let p = ei.mul(ej);
            let expected = if i == j {
                ej.clone()
            } else {
                Matrix::zeros(field.clone(), n, n)
            };
            if p != expected {
                return fail(format!("E_{i}* E_{j}* is not delta_{{{i}{j}}} E_{j}*"));
            }
        }
    }
    if total != Matrix::identity(field.clone(), n) {
        return fail("dual idempotents do not sum to the identity".to_string());
    }
    let j_mat = Matrix::ones(field.clone(), n, n);
    for i in 0..=d {
        let lhs = j_mat.mul(&e[i]).mul(&j_mat);
        let rhs = j_mat.scale(&field.from_int(v.k(i) as i64));
        if lhs != rhs {
            return fail(format!("J E_{i}* J is not k_{i} J"));
        }
    }
    for i in 0..=d {
        for l in 0..=d {
            for jj in 0..=d {
                let c = e[i].mul(&a[l]).mul(&e[jj]);
                if !c.is_zero_one() {
                    return fail(format!("E_{i}* A_{l} E_{jj}* is not a 0/1 matrix"));
                }
                for y in 0..n {
                    for z in 0..n {
                        if !field.is_zero(c.get(y, z))
                            && (s.rel(x, y) != i || s.rel(x, z) != jj)
                        {
                            return fail(format!(
                                "E_{i}* A_{l} E_{jj}* has support outside xR_{i} x xR_{jj} \
                                 at ({y},{z})"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The Terwilliger algebra at a base point, realized as a subspace of the
/// flattened n*n matrix space together with its generators.
#[derive(Debug, Clone)]
pub struct TAlgebra<F: Field> {
    field: F,
    n: usize,
    pub base_point: usize,
    pub adjacency: Vec<Matrix<F>>,
    pub duals: Vec<Matrix<F>>,
    pub span: Subspace<F>,
}

impl<F: Field> TAlgebra<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn contains(&self, m: &Matrix<F>) -> bool {
        self.span.contains(&m.flatten())
    }
}

/// Generate the Terwilliger algebra at base point x: close the adjacency
/// matrices and dual idempotents under products, then confirm the resulting
/// span is stable under transposition.
pub fn generate<F: Field>(field: &F, s: &Scheme, x: usize) -> Result<TAlgebra<F>, Counterexample> {
    let n = s.n();
    let adjacency = adjacency_matrices(field, s);
    let duals = dual_idempotents(field, s, x);
    let mut gens = adjacency.clone();
    gens.extend(duals.iter().cloned());
    let span = subalgebra_closure(field, &gens, n);
    for row in span.basis() {
        let m = Matrix::from_flat(field.clone(), n, n, row);
        if !span.contains(&m.transpose().flatten()) {
            return Err(Counterexample::new(
                "transpose stability",
                format!("the algebra at base point {x} is not closed under transposition"),
            ));
        }
    }
    Ok(TAlgebra {
        field: field.clone(),
        n,
        base_point: x,
        adjacency,
        duals,
        span,
    })
}

/// The two combinatorial pair sets on two-valent relations that control the
/// structured basis, together with their union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSets {
    /// Relations of valency 2, in increasing order.
    pub two_valent: Vec<usize>,
    /// Pairs (i, j) of two-valent relations whose complex product
    /// R_{i'} R_j contains two relations (the gcd bound is attained).
    pub product_pairs: BTreeSet<(usize, usize)>,
    /// Pairs (i, l) of two-valent relations joined by a chain of steps
    /// i -> m (each step witnessed by some j with p_ij^m = 1 and both ends
    /// two-valent) whose endpoint product R_{i'} R_l is a single relation.
    pub bad_pairs: BTreeSet<(usize, usize)>,
}

impl PairSets {
    /// Union of the two pair sets.
    pub fn union(&self) -> BTreeSet<(usize, usize)> {
        self.product_pairs.union(&self.bad_pairs).copied().collect()
    }
}

/// Pairs of two-valent relations whose product R_{i'} R_j has two relations.
pub fn product_pairs(t: &IntersectionTensor, v: &Valencies) -> BTreeSet<(usize, usize)> {
    let two: Vec<usize> = (0..=t.d()).filter(|&i| v.k(i) == 2).collect();
    let mut out = BTreeSet::new();
    for &i in &two {
        for &j in &two {
            if relation_product(t, v.inv(i), j).len() == 2 {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Bad pairs: (i, l) such that l is reachable from i by a nonempty chain of
/// steps a -> b with k_a = k_b = 2 and p_aj^b = 1 for some j, and the
/// endpoint product R_{i'} R_l is a single relation.
pub fn bad_pairs(t: &IntersectionTensor, v: &Valencies) -> BTreeSet<(usize, usize)> {
    let d = t.d();
    let two: Vec<usize> = (0..=d).filter(|&i| v.k(i) == 2).collect();
    // Step relation on two-valent relations.
    let edge = |a: usize, b: usize| -> bool { (0..=d).any(|j| t.p(a, j, b) == 1) };
    let mut out = BTreeSet::new();
    for &i in &two {
        // Reachability by chains of length >= 1.
        let mut reached: BTreeSet<usize> = BTreeSet::new();
        let mut frontier: Vec<usize> = two.iter().copied().filter(|&b| edge(i, b)).collect();
        while let Some(b) = frontier.pop() {
            if reached.insert(b) {
                frontier.extend(two.iter().copied().filter(|&c| edge(b, c)));
            }
        }
        for &l in &reached {
            if relation_product(t, v.inv(i), l).len() == 1 {
                out.insert((i, l));
            }
        }
    }
    out
}

/// Compute both pair sets and confirm they are disjoint (a pair's endpoint
/// product has either one or two relations, never both).
pub fn pair_sets(t: &IntersectionTensor, v: &Valencies) -> Result<PairSets, Counterexample> {
    let two_valent: Vec<usize> = (0..=t.d()).filter(|&i| v.k(i) == 2).collect();
    let product_pairs = product_pairs(t, v);
    let bad = bad_pairs(t, v);
    if let Some(p) = product_pairs.intersection(&bad).next() {
        return Err(Counterexample::new(
            "pair sets",
            format!("pair {p:?} is in both pair sets"),
        ));
    }
    Ok(PairSets {
        two_valent,
        product_pairs,
        bad_pairs: bad,
    })
}

/// The equivalence classes of two-valent relations under the union of the
/// pair sets, verified to actually be an equivalence relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    pub pairs: PairSets,
    /// Relations of valency 1, in increasing order.
    pub one_valent: Vec<usize>,
    /// Classes of two-valent relations, each sorted, ordered by minimum.
    pub classes: Vec<Vec<usize>>,
    /// Relation index -> 1-based class number.
    pub class_of: BTreeMap<usize, usize>,
}

impl ClassData {
    /// Number of classes of two-valent relations.
    pub fn r(&self) -> usize {
        self.classes.len()
    }
}

/// Build the classes, verifying that the union of the pair sets is
/// reflexive, symmetric, and transitive on the two-valent relations, and
/// that it equals the union of the squares of its classes.
pub fn class_data(t: &IntersectionTensor, v: &Valencies) -> Result<ClassData, Counterexample> {
    let pairs = pair_sets(t, v)?;
    let u = pairs.union();
    let two = &pairs.two_valent;
    let fail = |w: String| Err(Counterexample::new("relation classes", w));
    for &i in two {
        if !u.contains(&(i, i)) {
            return fail(format!("pair ({i},{i}) is missing: the relation is not reflexive"));
        }
    }
    for &(i, j) in &u {
        if !u.contains(&(j, i)) {
            return fail(format!("({i},{j}) is present but ({j},{i}) is not: not symmetric"));
        }
    }
    for &(i, j) in &u {
        for &l in two {
            if u.contains(&(j, l)) && !u.contains(&(i, l)) {
                return fail(format!(
                    "({i},{j}) and ({j},{l}) are present but ({i},{l}) is not: not transitive"
                ));
            }
        }
    }
    // Classes, ordered by minimum element.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in two {
        if class_of.contains_key(&i) {
            continue;
        }
        let members: Vec<usize> = two.iter().copied().filter(|&j| u.contains(&(i, j))).collect();
        let number = classes.len() + 1;
        for &m in &members {
            class_of.insert(m, number);
        }
        classes.push(members);
    }
    // The union must be exactly the union of class squares.
    let mut expected = BTreeSet::new();
    for c in &classes {
        for &i in c {
            for &j in c {
                expected.insert((i, j));
            }
        }
    }
    if expected != u {
        return fail("the pair-set union is not the union of class squares".to_string());
    }
    let one_valent: Vec<usize> = (0..=t.d()).filter(|&i| v.k(i) == 1).collect();
    Ok(ClassData {
        pairs,
        one_valent,
        classes,
        class_of,
    })
}

/// Predicted dimension of the Terwilliger algebra of a quasi-thin scheme:
/// |product pairs| + |bad pairs| + (d+1)^2.
pub fn predicted_dimension(d: usize, pairs: &PairSets) -> usize {
    pairs.product_pairs.len() + pairs.bad_pairs.len() + (d + 1) * (d + 1)
}

/// Label of a structured-basis element: layer 0 holds the compressions
/// E_i* J E_j* for all relations i, j; layer l >= 1 holds one element for
/// each ordered pair from the l-th class of two-valent relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasisLabel {
    pub layer: usize,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}[{},{}]", self.layer, self.row, self.col)
    }
}

/// The structured basis of the Terwilliger algebra of a quasi-thin scheme.
#[derive(Debug, Clone)]
pub struct StructuredBasis<F: Field> {
    pub labels: Vec<BasisLabel>,
    pub matrices: Vec<Matrix<F>>,
    /// (layer, row, col) -> position in `labels` / `matrices`.
    pub position: BTreeMap<(usize, usize, usize), usize>,
    /// Sizes of layers 0..=r (layer 0 first).
    pub layer_sizes: Vec<usize>,
}

impl<F: Field> StructuredBasis<F> {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn matrix_of(&self, layer: usize, row: usize, col: usize) -> &Matrix<F> {
        &self.matrices[self.position[&(layer, row, col)]]
    }
}

/// Build the structured basis at base point x.  Layer 0 consists of the
/// all-ones blocks E_i* J E_j*; layer l >= 1 places, for each ordered pair
/// (i, j) from class l, the permutation-like matrix pairing the two
/// i-neighbors of x with the two j-neighbors of x in increasing point order.
pub fn structured_basis<F: Field>(
    field: &F,
    s: &Scheme,
    x: usize,
    cd: &ClassData,
) -> StructuredBasis<F> {
    let n = s.n();
    let d = s.d();
    let mut labels = Vec::new();
    let mut matrices = Vec::new();
    let mut position = BTreeMap::new();
    let mut layer_sizes = Vec::new();

    let push = |labels: &mut Vec<BasisLabel>,
                    matrices: &mut Vec<Matrix<F>>,
                    position: &mut BTreeMap<(usize, usize, usize), usize>,
                    label: BasisLabel,
                    m: Matrix<F>| {
        position.insert((label.layer, label.row, label.col), labels.len());
        labels.push(label);
        matrices.push(m);
    };

    // Layer 0: all-ones block on xR_i x xR_j.
    for i in 0..=d {
        for j in 0..=d {
            let mut m = Matrix::zeros(field.clone(), n, n);
            for y in s.neighborhood(x, i) {
                for z in s.neighborhood(x, j) {
                    m.set(y, z, field.one());
                }
            }
            push(
                &mut labels,
                &mut matrices,
                &mut position,
                BasisLabel { layer: 0, row: i, col: j },
                m,
            );
        }
    }
    layer_sizes.push((d + 1) * (d + 1));

    // Layers 1..=r: for i, j in class l, match up the two neighbors in
    // increasing order.
    for (idx, class) in cd.classes.iter().enumerate() {
        let layer = idx + 1;
        for &i in class {
            for &j in class {
                let ys = s.neighborhood(x, i);
                let zs = s.neighborhood(x, j);
                assert_eq!(ys.len(), 2, "two-valent relation has two neighbors");
                assert_eq!(zs.len(), 2, "two-valent relation has two neighbors");
                let mut m = Matrix::zeros(field.clone(), n, n);
                m.set(ys[0], zs[0], field.one());
                m.set(ys[1], zs[1], field.one());
                push(
                    &mut labels,
                    &mut matrices,
                    &mut position,
                    BasisLabel { layer, row: i, col: j },
                    m,
                );
            }
        }
        layer_sizes.push(class.len() * class.len());
    }

    StructuredBasis {
        labels,
        matrices,
        position,
        layer_sizes,
    }
}

/// Verify that the structured basis really is a basis of the generated
/// algebra: every element lies in the algebra, the elements are linearly
/// independent, and they are as many as the algebra's dimension.
pub fn verify_basis<F: Field>(
    alg: &TAlgebra<F>,
    basis: &StructuredBasis<F>,
) -> Result<(), Counterexample> {
    let fail = |w: String| Err(Counterexample::new("structured basis", w));
    let mut independent = Subspace::zero(alg.field().clone(), alg.n() * alg.n());
    for (label, m) in basis.labels.iter().zip(&basis.matrices) {
        if !alg.contains(m) {
            return fail(format!("{label} does not lie in the generated algebra"));
        }
        if !independent.insert(m.flatten()).expect("fixed ambient") {
            return fail(format!("{label} is linearly dependent on earlier elements"));
        }
    }
    if basis.len() != alg.dim() {
        return fail(format!(
            "basis has {} elements but the algebra has dimension {}",
            basis.len(),
            alg.dim()
        ));
    }
    Ok(())
}

/// Field-independent multiplication table of the structured basis: the
/// product of two basis elements is coeff * (a third basis element), where
/// the integer coeff is 0, 1, or a valency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultTable {
    dim: usize,
    rules: Vec<Option<(u64, usize)>>,
}

impl MultTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Product rule for basis positions (a, b): None for the zero product,
    /// otherwise (integer coefficient, basis position of the target).
    pub fn rule(&self, a: usize, b: usize) -> Option<(u64, usize)> {
        self.rules[a * self.dim + b]
    }
}

/// The closed-form product of two labeled basis elements, before mapping
/// the coefficient into a field.
pub fn product_formula(
    a: &BasisLabel,
    b: &BasisLabel,
    v: &Valencies,
) -> Option<(u64, BasisLabel)> {
    if a.col != b.row {
        return None;
    }
    let target = |layer: usize| BasisLabel {
        layer,
        row: a.row,
        col: b.col,
    };
    match (a.layer, b.layer) {
        (0, 0) => Some((v.k(a.col) as u64, target(0))),
        (l, w) if l != 0 && w != 0 => {
            if l == w {
                Some((1, target(l)))
            } else {
                None
            }
        }
        _ => Some((1, target(0))),
    }
}

/// Compute the multiplication table and verify it against actual matrix
/// products: every product of two basis elements must equal the closed-form
/// scalar times the closed-form target element.
pub fn multiplication_table<F: Field>(
    field: &F,
    basis: &StructuredBasis<F>,
    v: &Valencies,
) -> Result<MultTable, Counterexample> {
    let dim = basis.len();
    let n = basis.matrices[0].rows();
    let zero = Matrix::zeros(field.clone(), n, n);
    let mut rules = vec![None; dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            let product = basis.matrices[a].mul(&basis.matrices[b]);
            let formula = product_formula(&basis.labels[a], &basis.labels[b], v);
            let expected = match &formula {
                None => zero.clone(),
                Some((coeff, label)) => {
                    let pos = basis.position[&(label.layer, label.row, label.col)];
                    basis.matrices[pos].scale(&field.from_int(*coeff as i64))
                }
            };
            if product != expected {
                return Err(Counterexample::new(
                    "multiplication table",
                    format!(
                        "{} * {} does not match the closed form {:?}",
                        basis.labels[a], basis.labels[b], formula
                    ),
                ));
            }
            rules[a * dim + b] = formula.map(|(coeff, label)| {
                (coeff, basis.position[&(label.layer, label.row, label.col)])
            });
        }
    }
    Ok(MultTable { dim, rules })
}

/// The radical of the algebra in characteristic 2, with its verified
/// structural data.
#[derive(Debug, Clone)]
pub struct RadicalData<F: Field> {
    /// Span of the layer-0 elements touching a two-valent relation.
    pub radical: Subspace<F>,
    /// Least t with radical^t = 0.
    pub nilpotency: Nilpotency,
    /// Sizes of the matrix-algebra blocks of the quotient: first the
    /// one-valent relations, then one block per class of two-valent ones.
    pub block_sizes: Vec<usize>,
}

/// In characteristic 2, the radical is spanned by the layer-0 elements
/// whose row or column relation is two-valent.  This computes that span and
/// verifies: it is a two-sided ideal, it is nilpotent (index at most 3),
/// and the quotient is a direct sum of matrix algebras whose residue basis
/// multiplies by the matrix-unit rules.
pub fn radical_char2<F: Field>(
    field: &F,
    alg: &TAlgebra<F>,
    basis: &StructuredBasis<F>,
    v: &Valencies,
    cd: &ClassData,
) -> Result<RadicalData<F>, Counterexample> {
    if field.characteristic() != 2 {
        return Err(Counterexample::new(
            "radical",
            format!("expected a field of characteristic 2, got {}", field.label()),
        ));
    }
    let n = alg.n();
    let fail = |w: String| Err(Counterexample::new("radical", w));
    let mut radical = Subspace::zero(field.clone(), n * n);
    let mut kept: Vec<usize> = Vec::new();
    for (pos, label) in basis.labels.iter().enumerate() {
        let in_radical =
            label.layer == 0 && (v.k(label.row) == 2 || v.k(label.col) == 2);
        if in_radical {
            radical
                .insert(basis.matrices[pos].flatten())
                .expect("fixed ambient");
        } else {
            kept.push(pos);
        }
    }
    // Two-sided ideal: products with every basis element stay inside.
    for (pos, m) in basis.matrices.iter().enumerate() {
        for row in radical.basis() {
            let g = Matrix::from_flat(field.clone(), n, n, row);
            if !radical.contains(&m.mul(&g).flatten()) || !radical.contains(&g.mul(&m).flatten()) {
                return fail(format!(
                    "products of {} with the candidate radical leave it",
                    basis.labels[pos]
                ));
            }
        }
    }
    let nilpotency = nilpotency_index(&radical, matrix_product_map(field.clone(), n));
    match nilpotency {
        Nilpotency::Nilpotent(t) if t <= 3 => {}
        Nilpotency::Nilpotent(t) => {
            return fail(format!("nilpotency index is {t}, expected at most 3"))
        }
        Nilpotency::NotNilpotent => {
            return fail("candidate radical is not nilpotent".to_string())
        }
    }
    // Quotient block structure: residues of the kept elements multiply as
    // matrix units within blocks, and products across blocks vanish into
    // the radical.  Block 0 is indexed by one-valent relations; block l by
    // the l-th class.
    let block_of = |label: &BasisLabel| -> usize { label.layer };
    for &a in &kept {
        for &b in &kept {
            let (la, lb) = (&basis.labels[a], &basis.labels[b]);
            let product = basis.matrices[a].mul(&basis.matrices[b]);
            let expected = if block_of(la) == block_of(lb) && la.col == lb.row {
                basis
                    .matrix_of(la.layer, la.row, lb.col)
                    .clone()
            } else {
                Matrix::zeros(field.clone(), n, n)
            };
            let difference = product.sub(&expected);
            if !radical.contains(&difference.flatten()) {
                return fail(format!(
                    "residues of {la} and {lb} do not multiply as matrix units"
                ));
            }
        }
    }
    // Dimension bookkeeping: the kept residues span the quotient.
    let mut block_sizes = vec![cd.one_valent.len()];
    block_sizes.extend(cd.classes.iter().map(|c| c.len()));
    let quotient_dim: usize = block_sizes.iter().map(|s| s * s).sum();
    if radical.dim() + quotient_dim != alg.dim() {
        return fail(format!(
            "radical dim {} plus block dims {} do not add up to the algebra dim {}",
            radical.dim(),
            quotient_dim,
            alg.dim()
        ));
    }
    Ok(RadicalData {
        radical,
        nilpotency,
        block_sizes,
    })
}

/// Outcome of the semisimplicity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemisimpleVerdict {
    /// The trace form on the algebra is nondegenerate, which forces the
    /// radical to vanish over any field.
    Semisimple,
    /// A nonzero nilpotent ideal was exhibited (witness description).
    NotSemisimple(String),
    /// The trace form is degenerate, which over positive characteristic
    /// does not decide either way.
    Inconclusive,
}

/// Decide semisimplicity where possible.  A nondegenerate trace form
/// certifies semisimplicity over any field; over a characteristic-0 field a
/// degenerate one exhibits the radical.  Over positive characteristic, a
/// known nonzero nilpotent ideal certifies non-semisimplicity; otherwise
/// the test is inconclusive.
pub fn semisimplicity_check<F: Field>(
    field: &F,
    basis_matrices: &[Matrix<F>],
    known_nilpotent_ideal_dim: Option<usize>,
) -> SemisimpleVerdict {
    let kernel = trace_form_radical(basis_matrices);
    if kernel.is_zero() {
        return SemisimpleVerdict::Semisimple;
    }
    if field.characteristic() == 0 {
        return SemisimpleVerdict::NotSemisimple(format!(
            "the trace form has a {}-dimensional kernel, which in characteristic 0 \
             is the radical",
            kernel.dim()
        ));
    }
    match known_nilpotent_ideal_dim {
        Some(dim) if dim > 0 => SemisimpleVerdict::NotSemisimple(format!(
            "a nonzero nilpotent two-sided ideal of dimension {dim} exists"
        )),
        _ => SemisimpleVerdict::Inconclusive,
    }
}

/// Verify that the algebra does not depend on the base point: for every
/// point, the generated algebra admits the structured basis with the same
/// labels and the same multiplication table as at the given reference
/// point.  Matching tables make the label-preserving linear map an algebra
/// isomorphism.
pub fn basepoint_invariance<F: Field>(
    field: &F,
    s: &Scheme,
    v: &Valencies,
    cd: &ClassData,
) -> Result<(), Counterexample> {
    let mut reference: Option<(usize, MultTable)> = None;
    for x in 0..s.n() {
        let alg = generate(field, s, x)?;
        let basis = structured_basis(field, s, x, cd);
        verify_basis(&alg, &basis).map_err(|e| {
            Counterexample::new(
                "base-point invariance",
                format!("base point {x}: {e}"),
            )
        })?;
        let table = multiplication_table(field, &basis, v).map_err(|e| {
            Counterexample::new(
                "base-point invariance",
                format!("base point {x}: {e}"),
            )
        })?;
        match &reference {
            None => reference = Some((alg.dim(), table)),
            Some((dim0, table0)) => {
                if alg.dim() != *dim0 {
                    return Err(Counterexample::new(
                        "base-point invariance",
                        format!(
                            "dimension at base point {x} is {}, expected {dim0}",
                            alg.dim()
                        ),
                    ));
                }
                if table != *table0 {
                    return Err(Counterexample::new(
                        "base-point invariance",
                        format!("multiplication table at base point {x} differs"),
                    ));
                }
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
    use crate::scheme::{classify, intersection_numbers, valencies, SchemeKind};
    use crate::subspace::ideal_product;

    fn scheme_data(name: &str) -> (Scheme, IntersectionTensor, Valencies) {
        let s = catalog_scheme(name).expect("known catalog name");
        let t = intersection_numbers(&s).unwrap();
        let v = valencies(&s, &t).unwrap();
        (s, t, v)
    }

    #[test]
    fn adjacency_identities_on_cycle4_over_gf2_and_q() {
        let (s, t, v) = scheme_data("cycle-4");
        let f2 = PrimeField::new(2).unwrap();
        let a2 = adjacency_matrices(&f2, &s);
        check_adjacency_algebra(&f2, &s, &t, &v, &a2).unwrap();
        let q = Rationals;
        let aq = adjacency_matrices(&q, &s);
        check_adjacency_algebra(&q, &s, &t, &v, &aq).unwrap();
    }

    #[test]
    fn dual_idempotent_identities_on_cycle4() {
        let (s, _, v) = scheme_data("cycle-4");
        let q = Rationals;
        for x in 0..s.n() {
            check_dual_idempotents(&q, &s, &v, x).unwrap();
        }
        let f2 = PrimeField::new(2).unwrap();
        check_dual_idempotents(&f2, &s, &v, 0).unwrap();
    }

    #[test]
    fn thin_scheme_generates_the_full_matrix_algebra() {
        let (s, _, _) = scheme_data("thin-S3");
        let q = Rationals;
        let alg = generate(&q, &s, 0).unwrap();
        assert_eq!(alg.dim(), 36, "thin schemes give the whole 6x6 matrix algebra");
    }

    #[test]
    fn cycle4_algebra_dimension_is_10_over_gf2_and_q() {
        let (s, _, _) = scheme_data("cycle-4");
        for dim in [
            generate(&PrimeField::new(2).unwrap(), &s, 0).unwrap().dim(),
            generate(&Rationals, &s, 0).unwrap().dim(),
        ] {
            assert_eq!(dim, 10);
        }
    }

    #[test]
    fn cycle4_pair_sets_and_classes() {
        let (_, t, v) = scheme_data("cycle-4");
        let cd = class_data(&t, &v).unwrap();
        assert_eq!(cd.pairs.two_valent, vec![1]);
        assert_eq!(cd.pairs.product_pairs, BTreeSet::from([(1, 1)]));
        assert!(cd.pairs.bad_pairs.is_empty());
        assert_eq!(cd.classes, vec![vec![1]]);
        assert_eq!(predicted_dimension(2, &cd.pairs), 10);
    }

    #[test]
    fn polygon_pair_counts_match_closure_dimensions() {
        // (name, product pairs, algebra dimension)
        for (name, pp, dim) in [
            ("cycle-4", 1, 10),
            ("cycle-5", 4, 13),
            ("cycle-6", 4, 20),
            ("cycle-7", 9, 25),
            ("cycle-8", 9, 34),
        ] {
            let (s, t, v) = scheme_data(name);
            let cd = class_data(&t, &v).unwrap();
            assert_eq!(cd.pairs.product_pairs.len(), pp, "{name}");
            assert!(cd.pairs.bad_pairs.is_empty(), "{name}");
            assert_eq!(cd.r(), 1, "{name}");
            assert_eq!(predicted_dimension(s.d(), &cd.pairs), dim, "{name}");
            let alg = generate(&Rationals, &s, 0).unwrap();
            assert_eq!(alg.dim(), dim, "{name}");
        }
    }

    #[test]
    fn affine8_pair_sets_and_dimension() {
        let (s, t, v) = scheme_data("affine-8");
        let cd = class_data(&t, &v).unwrap();
        assert_eq!(cd.pairs.two_valent, vec![1, 3]);
        assert_eq!(cd.pairs.product_pairs.len(), 4);
        assert!(cd.pairs.bad_pairs.is_empty());
        assert_eq!(cd.classes, vec![vec![1, 3]]);
        assert_eq!(predicted_dimension(s.d(), &cd.pairs), 40);
        let alg = generate(&PrimeField::new(2).unwrap(), &s, 0).unwrap();
        assert_eq!(alg.dim(), 40);
    }

    #[test]
    fn synthetic_tensor_produces_bad_pairs() {
        // Three relations with valencies [1, 2, 2], identity involution.
        // Chain steps 1 -> 2 (p_11^2 = 1) and 2 -> 1 (p_22^1 = 1); endpoint
        // products R_1 R_2 and R_2 R_1 are singletons, R_1 R_1 and R_2 R_2
        // have two relations.
        let d = 2;
        let mut p = vec![0usize; 27];
        let mut set = |i: usize, j: usize, l: usize, val: usize| {
            p[(i * 3 + j) * 3 + l] = val;
        };
        set(1, 1, 0, 2);
        set(1, 1, 2, 1);
        set(2, 2, 0, 2);
        set(2, 2, 1, 1);
        set(1, 2, 1, 2);
        set(2, 1, 1, 2);
        let t = IntersectionTensor::from_raw(d, p);
        let v = Valencies::from_parts(vec![1, 2, 2], vec![0, 1, 2]);
        let bad = bad_pairs(&t, &v);
        assert_eq!(bad, BTreeSet::from([(1, 2), (2, 1)]));
        let cd = class_data(&t, &v).unwrap();
        assert_eq!(cd.classes, vec![vec![1, 2]]);
        assert_eq!(cd.pairs.product_pairs, BTreeSet::from([(1, 1), (2, 2)]));
    }

    #[test]
    fn structured_basis_verifies_on_cycle4() {
        let (s, t, v) = scheme_data("cycle-4");
        let cd = class_data(&t, &v).unwrap();
        for x in 0..s.n() {
            let q = Rationals;
            let alg = generate(&q, &s, x).unwrap();
            let basis = structured_basis(&q, &s, x, &cd);
            assert_eq!(basis.len(), 10);
            assert_eq!(basis.layer_sizes, vec![9, 1]);
            verify_basis(&alg, &basis).unwrap();
        }
    }

    #[test]
    fn diagonal_two_valent_basis_element_is_the_dual_idempotent() {
        let (s, t, v) = scheme_data("cycle-4");
        let cd = class_data(&t, &v).unwrap();
        let q = Rationals;
        let basis = structured_basis(&q, &s, 0, &cd);
        let duals = dual_idempotents(&q, &s, 0);
        assert_eq!(*basis.matrix_of(1, 1, 1), duals[1]);
    }

    #[test]
    fn multiplication_table_on_cycle4_both_fields() {
        let (s, t, v) = scheme_data("cycle-4");
        let cd = class_data(&t, &v).unwrap();
        let q = Rationals;
        let basis_q = structured_basis(&q, &s, 0, &cd);
        let table_q = multiplication_table(&q, &basis_q, &v).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let basis_2 = structured_basis(&f2, &s, 0, &cd);
        let table_2 = multiplication_table(&f2, &basis_2, &v).unwrap();
        // The rules are field-independent.
        assert_eq!(table_q, table_2);
        // Layer-0 diagonal product with a two-valent column picks up the
        // valency: b0[0,1] * b0[1,0] = 2 b0[0,0].
        let a = basis_q.position[&(0, 0, 1)];
        let b = basis_q.position[&(0, 1, 0)];
        assert_eq!(table_q.rule(a, b), Some((2, basis_q.position[&(0, 0, 0)])));
        // Mismatched inner relations annihilate.
        let c = basis_q.position[&(0, 2, 0)];
        assert_eq!(table_q.rule(a, c), None);
    }

    #[test]
    fn radical_on_cycle4_over_gf2() {
        let (s, t, v) = scheme_data("cycle-4");
        let cd = class_data(&t, &v).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let alg = generate(&f2, &s, 0).unwrap();
        let basis = structured_basis(&f2, &s, 0, &cd);
        let rad = radical_char2(&f2, &alg, &basis, &v, &cd).unwrap();
        assert_eq!(rad.radical.dim(), 5);
        assert_eq!(rad.nilpotency, Nilpotency::Nilpotent(3));
        assert_eq!(rad.block_sizes, vec![2, 1]);
    }

    #[test]
    fn radical_requires_characteristic_2() {
        let (s, t, v) = scheme_data("cycle-4");
        let cd = class_data(&t, &v).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        let alg = generate(&f3, &s, 0).unwrap();
        let basis = structured_basis(&f3, &s, 0, &cd);
        assert!(radical_char2(&f3, &alg, &basis, &v, &cd).is_err());
    }

    #[test]
    fn thin_scheme_has_zero_radical_in_characteristic_2() {
        let (s, t, v) = scheme_data("thin-C3");
        assert_eq!(classify(&v).kind, SchemeKind::Thin);
        let cd = class_data(&t, &v).unwrap();
        assert_eq!(cd.r(), 0);
        let f2 = PrimeField::new(2).unwrap();
        let alg = generate(&f2, &s, 0).unwrap();
        let basis = structured_basis(&f2, &s, 0, &cd);
        let rad = radical_char2(&f2, &alg, &basis, &v, &cd).unwrap();
        assert_eq!(rad.radical.dim(), 0);
        assert_eq!(rad.nilpotency, Nilpotency::Nilpotent(1));
        assert_eq!(rad.block_sizes, vec![3]);
    }

    #[test]
    fn semisimplicity_verdicts() {
        let (s, t, v) = scheme_data("cycle-4");
        let cd = class_data(&t, &v).unwrap();
        let q = Rationals;
        let basis_q = structured_basis(&q, &s, 0, &cd);
        assert_eq!(
            semisimplicity_check(&q, &basis_q.matrices, None),
            SemisimpleVerdict::Semisimple
        );
        let f3 = PrimeField::new(3).unwrap();
        let basis_3 = structured_basis(&f3, &s, 0, &cd);
        assert_eq!(
            semisimplicity_check(&f3, &basis_3.matrices, None),
            SemisimpleVerdict::Semisimple
        );
        let f2 = PrimeField::new(2).unwrap();
        let alg = generate(&f2, &s, 0).unwrap();
        let basis_2 = structured_basis(&f2, &s, 0, &cd);
        let rad = radical_char2(&f2, &alg, &basis_2, &v, &cd).unwrap();
        match semisimplicity_check(&f2, &basis_2.matrices, Some(rad.radical.dim())) {
            SemisimpleVerdict::NotSemisimple(_) => {}
            other => panic!("expected a non-semisimple verdict, got {other:?}"),
        }
    }

    #[test]
    fn radical_squared_vanishes_only_in_the_thin_case() {
        let f2 = PrimeField::new(2).unwrap();
        for (name, expect_index) in [("thin-Klein", 1), ("cycle-6", 3), ("affine-8", 3)] {
            let (s, t, v) = scheme_data(name);
            let cd = class_data(&t, &v).unwrap();
            let alg = generate(&f2, &s, 0).unwrap();
            let basis = structured_basis(&f2, &s, 0, &cd);
            let rad = radical_char2(&f2, &alg, &basis, &v, &cd).unwrap();
            assert_eq!(rad.nilpotency, Nilpotency::Nilpotent(expect_index), "{name}");
        }
    }

    #[test]
    fn base_point_invariance_on_cycle4_and_affine8() {
        for name in ["cycle-4", "affine-8"] {
            let (s, t, v) = scheme_data(name);
            let cd = class_data(&t, &v).unwrap();
            let f2 = PrimeField::new(2).unwrap();
            basepoint_invariance(&f2, &s, &v, &cd).unwrap();
        }
    }

    #[test]
    fn radical_squared_span_matches_two_valent_blocks() {
        // In characteristic 2 the square of the radical is spanned by the
        // layer-0 elements with both relations two-valent.
        let (s, t, v) = scheme_data("cycle-6");
        let cd = class_data(&t, &v).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let alg = generate(&f2, &s, 0).unwrap();
        let basis = structured_basis(&f2, &s, 0, &cd);
        let rad = radical_char2(&f2, &alg, &basis, &v, &cd).unwrap();
        let n = alg.n();
        let squared = ideal_product(
            &rad.radical,
            &rad.radical,
            matrix_product_map(f2.clone(), n),
        );
        let mut expected = Subspace::zero(f2.clone(), n * n);
        for (pos, label) in basis.labels.iter().enumerate() {
            if label.layer == 0 && v.k(label.row) == 2 && v.k(label.col) == 2 {
                expected.insert(basis.matrices[pos].flatten()).unwrap();
            }
        }
        assert_eq!(squared, expected);
        assert_eq!(squared.dim(), 4, "two two-valent relations give four blocks");
    }
}
