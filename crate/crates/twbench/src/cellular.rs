//! Cell structure of the algebra: the index datum (a poset with one bottom
//! layer and incomparable upper layers), the straightening rule that turns
//! left multiplication into layer representations, the chain of layer
//! ideals, and the heredity conditions on that chain.
//!
//! All structural claims are established numerically from matrix products;
//! nothing is taken on faith from the closed-form table.

use crate::field::Field;
use crate::matrix::Matrix;
use crate::scheme::Valencies;
use crate::subspace::{ideal_product, matrix_product_map, SpanSolver, Subspace};
use crate::terwilliger::{RadicalData, StructuredBasis, TAlgebra};
use crate::verify::Counterexample;

/// The index datum: layer 0 carries all relations; layer l >= 1 carries the
/// l-th class of two-valent relations.  The order puts layer 0 strictly
/// below every other layer, with distinct upper layers incomparable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDatum {
    /// index_sets[l] lists the relation indices in layer l, for l in 0..=r.
    pub index_sets: Vec<Vec<usize>>,
}

impl CellDatum {
    pub fn r(&self) -> usize {
        self.index_sets.len() - 1
    }

    /// Strict order: only 0 < l for l >= 1.
    pub fn strictly_below(&self, a: usize, b: usize) -> bool {
        a == 0 && b != 0
    }

    /// Total size sum of |M(l)|^2, which must equal the algebra dimension.
    pub fn square_sum(&self) -> usize {
        self.index_sets.iter().map(|m| m.len() * m.len()).sum()
    }
}

/// Build the datum from the basis layers.
pub fn cell_datum<F: Field>(d: usize, basis: &StructuredBasis<F>) -> CellDatum {
    let mut index_sets: Vec<Vec<usize>> = vec![(0..=d).collect()];
    let r = basis.layer_sizes.len() - 1;
    for layer in 1..=r {
        let mut members: Vec<usize> = basis
            .labels
            .iter()
            .filter(|l| l.layer == layer)
            .map(|l| l.row)
            .collect();
        members.sort_unstable();
        members.dedup();
        index_sets.push(members);
    }
    CellDatum { index_sets }
}

/// Check that transposition acts on the basis by swapping the two lower
/// indices within each layer.
pub fn verify_involution<F: Field>(basis: &StructuredBasis<F>) -> Result<(), Counterexample> {
    for (pos, label) in basis.labels.iter().enumerate() {
        let swapped = basis.matrix_of(label.layer, label.col, label.row);
        if basis.matrices[pos].transpose() != *swapped {
            return Err(Counterexample::new(
                "involution",
                format!("transpose of {label} is not the index-swapped element"),
            ));
        }
    }
    Ok(())
}

/// The layer representations extracted from the straightening rule:
/// reps[l][a] is the |M(l)| x |M(l)| matrix of coefficients r_a(U, S).
#[derive(Debug, Clone)]
pub struct CellReps<F: Field> {
    pub reps: Vec<Vec<Matrix<F>>>,
}

/// Verify the straightening rule and extract the layer representations.
///
/// For each basis element a, layer l, and row/column indices S, T of that
/// layer, the product a * C^l_{S,T} must be a combination of elements
/// C^l_{U,T} (same layer, same column index) plus elements of strictly
/// lower layers, with coefficients r_a(U, S) that do not depend on T.
/// The extracted matrices must multiply like the algebra does.
pub fn verify_c3<F: Field>(
    field: &F,
    basis: &StructuredBasis<F>,
    datum: &CellDatum,
    v: &Valencies,
) -> Result<CellReps<F>, Counterexample> {
    let dim = basis.len();
    let n = basis.matrices[0].rows();
    let fail = |w: String| Err(Counterexample::new("straightening rule", w));
    let flat: Vec<Vec<F::Elem>> = basis.matrices.iter().map(|m| m.flatten()).collect();
    let solver = SpanSolver::new(field.clone(), n * n, &flat);
    let r = datum.r();

    // position_in_layer[l]: relation index -> 0-based slot inside M(l).
    let slot = |l: usize, rel: usize| -> usize {
        datum.index_sets[l]
            .iter()
            .position(|&m| m == rel)
            .expect("relation belongs to its layer")
    };

    let mut reps: Vec<Vec<Matrix<F>>> = Vec::new();
    for l in 0..=r {
        let size = datum.index_sets[l].len();
        let mut layer_reps: Vec<Matrix<F>> = Vec::new();
        for a in 0..dim {
            // r_a(U, S) collected per column index T; all T must agree.
            let mut extracted: Option<Matrix<F>> = None;
            for (ti, &t_rel) in datum.index_sets[l].iter().enumerate() {
                let mut coeffs = Matrix::zeros(field.clone(), size, size);
                for (si, &s_rel) in datum.index_sets[l].iter().enumerate() {
                    let target = basis.matrix_of(l, s_rel, t_rel);
                    let product = basis.matrices[a].mul(target);
                    let coords = match solver.solve(&product.flatten()) {
                        Some(c) => c,
                        None => {
                            return fail(format!(
                                "{} * {} leaves the span of the basis",
                                basis.labels[a],
                                basis.labels[basis.position[&(l, s_rel, t_rel)]]
                            ))
                        }
                    };
                    for (pos, c) in coords.iter().enumerate() {
                        if field.is_zero(c) {
                            continue;
                        }
                        let lab = &basis.labels[pos];
                        if lab.layer == l && lab.col == t_rel {
                            coeffs.set(slot(l, lab.row), si, c.clone());
                        } else if !datum.strictly_below(lab.layer, l) {
                            return fail(format!(
                                "{} * C{l}[{s_rel},{t_rel}] has a term {lab} outside the \
                                 layer and its lower set",
                                basis.labels[a]
                            ));
                        }
                    }
                }
                match &extracted {
                    None => extracted = Some(coeffs),
                    Some(prev) => {
                        if *prev != coeffs {
                            return fail(format!(
                                "coefficients of {} in layer {l} depend on the column \
                                 index (T = {t_rel} vs earlier, ti = {ti})",
                                basis.labels[a]
                            ));
                        }
                    }
                }
            }
            layer_reps.push(extracted.expect("layers are nonempty"));
        }
        reps.push(layer_reps);
    }

    // Multiplicativity: the extracted matrices compose the way the algebra
    // multiplies, on every pair of basis elements.
    for a in 0..dim {
        for b in 0..dim {
            let product = basis.matrices[a].mul(&basis.matrices[b]);
            let coords = solver
                .solve(&product.flatten())
                .expect("the basis spans a closed algebra");
            for l in 0..=r {
                let size = datum.index_sets[l].len();
                let lhs = reps[l][a].mul(&reps[l][b]);
                let mut rhs = Matrix::zeros(field.clone(), size, size);
                for (pos, c) in coords.iter().enumerate() {
                    if !field.is_zero(c) {
                        rhs = rhs.add(&reps[l][pos].scale(c));
                    }
                }
                if lhs != rhs {
                    return fail(format!(
                        "layer {l} representation is not multiplicative on {} * {}",
                        basis.labels[a], basis.labels[b]
                    ));
                }
            }
        }
    }

    // Unitality: the identity of the algebra is the sum of the diagonal
    // one-valent layer-0 elements and the diagonal upper-layer elements;
    // its image must be the identity in every layer.
    let one_positions: Vec<usize> = basis
        .labels
        .iter()
        .enumerate()
        .filter(|(_, lab)| {
            lab.row == lab.col
                && ((lab.layer == 0 && v.k(lab.row) == 1) || lab.layer > 0)
        })
        .map(|(pos, _)| pos)
        .collect();
    for l in 0..=r {
        let size = datum.index_sets[l].len();
        let mut image = Matrix::zeros(field.clone(), size, size);
        for &pos in &one_positions {
            image = image.add(&reps[l][pos]);
        }
        if image != Matrix::identity(field.clone(), size) {
            return fail(format!("the identity does not act as identity in layer {l}"));
        }
    }

    Ok(CellReps { reps })
}

/// Dimension of the kernel of the direct sum of all layer representations.
/// A zero kernel (with matching dimension count) identifies the algebra
/// with the direct sum of full matrix algebras of the layer sizes.
pub fn cell_rep_kernel_dim<F: Field>(
    field: &F,
    basis: &StructuredBasis<F>,
    datum: &CellDatum,
    reps: &CellReps<F>,
) -> usize {
    let dim = basis.len();
    let target: usize = datum.square_sum();
    let mut rows: Vec<F::Elem> = Vec::with_capacity(dim * target);
    for a in 0..dim {
        for layer_reps in &reps.reps {
            rows.extend(layer_reps[a].flatten());
        }
    }
    // Kernel of the coefficient matrix acting on coordinate columns: we
    // want combinations sum c_a basis_a with all representations zero, so
    // transpose the basis-by-target matrix.
    let m = Matrix::from_data(field.clone(), dim, target, rows).transpose();
    crate::subspace::kernel(&m).dim()
}

/// The chain of layer ideals: J_0 = 0 and J_i spans the layers below i.
#[derive(Debug, Clone)]
pub struct CellChain<F: Field> {
    /// ideals[i] = J_i, for i in 0..=r+1.
    pub ideals: Vec<Subspace<F>>,
}

/// Build the chain and verify each member is a transpose-stable two-sided
/// ideal, strictly increasing up to the whole algebra.
pub fn build_cell_chain<F: Field>(
    field: &F,
    alg: &TAlgebra<F>,
    basis: &StructuredBasis<F>,
) -> Result<CellChain<F>, Counterexample> {
    let n = alg.n();
    let r = basis.layer_sizes.len() - 1;
    let fail = |w: String| Err(Counterexample::new("layer ideal chain", w));
    let mut ideals = vec![Subspace::zero(field.clone(), n * n)];
    for i in 1..=r + 1 {
        let mut space = ideals[i - 1].clone();
        for (pos, label) in basis.labels.iter().enumerate() {
            if label.layer == i - 1 {
                space.insert(basis.matrices[pos].flatten()).expect("fixed ambient");
            }
        }
        if space.dim() <= ideals[i - 1].dim() {
            return fail(format!("chain does not grow at step {i}"));
        }
        // Two-sided ideal and transpose stability.
        for row in space.basis() {
            let m = Matrix::from_flat(field.clone(), n, n, row);
            if !space.contains(&m.transpose().flatten()) {
                return fail(format!("step {i} is not transpose stable"));
            }
            for g in &basis.matrices {
                if !space.contains(&g.mul(&m).flatten())
                    || !space.contains(&m.mul(g).flatten())
                {
                    return fail(format!("step {i} is not a two-sided ideal"));
                }
            }
        }
        ideals.push(space);
    }
    if ideals[r + 1] != alg.span {
        return fail("the chain does not end at the whole algebra".to_string());
    }
    Ok(CellChain { ideals })
}

/// Verify that the chain is a heredity chain:
///
/// * each quotient step is idempotent — J_i^2 together with J_{i-1} spans
///   J_i, and in particular J_i^2 is not inside J_{i-1};
/// * each step kills the radical of the quotient — J_i (rad + J_{i-1}) J_i
///   lies in J_{i-1}, where rad is the algebra's radical (the radical of
///   the quotient algebra is the image of rad + J_{i-1});
/// * the number of steps equals the number of simple module classes.
pub fn verify_heredity<F: Field>(
    field: &F,
    alg: &TAlgebra<F>,
    chain: &CellChain<F>,
    radical: &Subspace<F>,
    simple_classes: usize,
) -> Result<(), Counterexample> {
    let n = alg.n();
    let fail = |w: String| Err(Counterexample::new("heredity chain", w));
    let steps = chain.ideals.len() - 1;
    if steps != simple_classes {
        return fail(format!(
            "chain has {steps} steps but the algebra has {simple_classes} simple classes"
        ));
    }
    let mult = matrix_product_map(field.clone(), n);
    for i in 1..=steps {
        let j_cur = &chain.ideals[i];
        let j_prev = &chain.ideals[i - 1];
        let squared = ideal_product(j_cur, j_cur, &mult);
        if squared.is_subspace_of(j_prev) {
            return fail(format!("step {i}: the square of the ideal falls into the previous one"));
        }
        if squared.sum(j_prev) != *j_cur {
            return fail(format!("step {i}: the ideal is not idempotent modulo the previous one"));
        }
        let middle = radical.sum(j_prev);
        let killed = ideal_product(&ideal_product(j_cur, &middle, &mult), j_cur, &mult);
        if !killed.is_subspace_of(j_prev) {
            return fail(format!(
                "step {i}: the ideal does not annihilate the quotient radical"
            ));
        }
    }
    Ok(())
}

/// Certified number of simple module classes.
///
/// In characteristic 2 the verified radical gives the quotient as a direct
/// sum of one matrix block per layer.  Otherwise a zero kernel of the
/// summed layer representations, together with the dimension count,
/// identifies the algebra with the direct sum of full matrix algebras of
/// the layer sizes.  Either certificate yields one simple class per layer.
pub fn certified_simple_count<F: Field>(
    field: &F,
    alg: &TAlgebra<F>,
    basis: &StructuredBasis<F>,
    datum: &CellDatum,
    reps: &CellReps<F>,
    radical: Option<&RadicalData<F>>,
) -> Result<usize, Counterexample> {
    if let Some(rad) = radical {
        return Ok(rad.block_sizes.len());
    }
    let kernel = cell_rep_kernel_dim(field, basis, datum, reps);
    if kernel == 0 && datum.square_sum() == alg.dim() {
        Ok(datum.index_sets.len())
    } else {
        Err(Counterexample::new(
            "simple class count",
            format!(
                "no certificate: layer representations have kernel dimension {kernel} \
                 over {}",
                field.label()
            ),
        ))
    }
}
