//! Finite-dimensional modules over a presented algebra, with the
//! homological toolkit: radicals, socles, tops, projective covers and
//! syzygies, projective and global dimension, dual-of-projective injective
//! modules, injective envelopes, and dominant dimension.

use crate::field::Field;
use crate::matrix::Matrix;
use crate::presentation::{AlgebraPresentation, VerifiedRadical};
use crate::subspace::{kernel, rref, Subspace};
use crate::verify::Counterexample;

/// A left module: one action matrix per algebra basis element.  The
/// constructor verifies that the unit acts as the identity and that the
/// action respects every structure constant.
#[derive(Debug, Clone)]
pub struct Module<F: Field> {
    field: F,
    dim: usize,
    action: Vec<Matrix<F>>,
}

impl<F: Field> Module<F> {
    pub fn new(
        pres: &AlgebraPresentation<F>,
        dim: usize,
        action: Vec<Matrix<F>>,
    ) -> Result<Self, Counterexample> {
        let field = pres.field().clone();
        let fail = |w: String| Err(Counterexample::new("module axioms", w));
        if action.len() != pres.dim() {
            return fail(format!(
                "expected {} action matrices, got {}",
                pres.dim(),
                action.len()
            ));
        }
        let m = Module { field, dim, action };
        for mat in &m.action {
            if mat.rows() != dim || mat.cols() != dim {
                return fail("an action matrix has the wrong shape".to_string());
            }
        }
        if m.apply_algebra(pres.one()) != Matrix::identity(m.field.clone(), dim) {
            return fail("the unit does not act as the identity".to_string());
        }
        for a in 0..pres.dim() {
            for b in 0..pres.dim() {
                let lhs = m.action[a].mul(&m.action[b]);
                let rhs = m.apply_algebra(&pres.multiply(
                    &pres.basis_vector(a),
                    &pres.basis_vector(b),
                ));
                if lhs != rhs {
                    return fail(format!(
                        "the action breaks the product {} * {}",
                        pres.labels()[a],
                        pres.labels()[b]
                    ));
                }
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, k: usize) -> &Matrix<F> {
        &self.action[k]
    }

    /// The matrix by which an algebra element (given in coordinates) acts.
    pub fn apply_algebra(&self, x: &[F::Elem]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.field.clone(), self.dim, self.dim);
        for (k, c) in x.iter().enumerate() {
            if !self.field.is_zero(c) {
                out = out.add(&self.action[k].scale(c));
            }
        }
        out
    }
}

/// The left regular module: the algebra acting on itself.
pub fn regular_module<F: Field>(pres: &AlgebraPresentation<F>) -> Module<F> {
    let action = (0..pres.dim())
        .map(|k| pres.left_matrix(&pres.basis_vector(k)))
        .collect();
    Module::new(pres, pres.dim(), action).expect("left multiplication satisfies the module axioms")
}

/// Coordinates of a vector inside a subspace span, read off the pivot
/// columns of the reduced basis.
fn span_coords<F: Field>(span: &Subspace<F>, v: &[F::Elem]) -> Vec<F::Elem> {
    debug_assert!(span.contains(v), "vector lies outside the span");
    span.pivots().iter().map(|&p| v[p].clone()).collect()
}

/// Block-diagonal assembly that tolerates an empty block list.
fn block_diag_or_empty<F: Field>(field: &F, blocks: &[Matrix<F>]) -> Matrix<F> {
    if blocks.is_empty() {
        Matrix::zeros(field.clone(), 0, 0)
    } else {
        Matrix::block_diag(blocks)
    }
}

/// Restrict a module to an invariant subspace, re-expressed in the span's
/// own coordinates.
pub fn submodule<F: Field>(
    pres: &AlgebraPresentation<F>,
    m: &Module<F>,
    span: &Subspace<F>,
) -> Result<Module<F>, Counterexample> {
    let field = pres.field().clone();
    let sdim = span.dim();
    let mut action = Vec::with_capacity(pres.dim());
    for k in 0..pres.dim() {
        let mut mat = Matrix::zeros(field.clone(), sdim, sdim);
        for (col, row_vec) in span.basis().iter().enumerate() {
            let image = m.action[k].apply(row_vec);
            if !span.contains(&image) {
                return Err(Counterexample::new(
                    "submodule",
                    format!("the span is not invariant under basis element {k}"),
                ));
            }
            for (r, val) in span_coords(span, &image).into_iter().enumerate() {
                mat.set(r, col, val);
            }
        }
        action.push(mat);
    }
    Module::new(pres, sdim, action)
}

/// A quotient module together with the projection and a linear section.
pub struct QuotientModule<F: Field> {
    pub module: Module<F>,
    /// Projection matrix (quotient dim x ambient dim).
    pub projection: Matrix<F>,
    /// Section matrix (ambient dim x quotient dim) with projection *
    /// section = identity.
    pub section: Matrix<F>,
}

/// Quotient of a module by an invariant subspace.  Coordinates on the
/// quotient are the non-pivot positions of the subspace's reduced basis.
pub fn quotient_module<F: Field>(
    pres: &AlgebraPresentation<F>,
    m: &Module<F>,
    span: &Subspace<F>,
) -> Result<QuotientModule<F>, Counterexample> {
    let field = pres.field().clone();
    let dim = m.dim();
    let free: Vec<usize> = (0..dim).filter(|t| !span.pivots().contains(t)).collect();
    let qdim = free.len();
    let mut projection = Matrix::zeros(field.clone(), qdim, dim);
    for col in 0..dim {
        let mut unit = vec![field.zero(); dim];
        unit[col] = field.one();
        let reduced = span.reduce(&unit);
        for (r, &t) in free.iter().enumerate() {
            projection.set(r, col, reduced[t].clone());
        }
    }
    let mut section = Matrix::zeros(field.clone(), dim, qdim);
    for (c, &t) in free.iter().enumerate() {
        section.set(t, c, field.one());
    }
    let mut action = Vec::with_capacity(pres.dim());
    for k in 0..pres.dim() {
        for row_vec in span.basis() {
            if !span.contains(&m.action[k].apply(row_vec)) {
                return Err(Counterexample::new(
                    "quotient module",
                    format!("the span is not invariant under basis element {k}"),
                ));
            }
        }
        action.push(projection.mul(&m.action[k]).mul(&section));
    }
    let module = Module::new(pres, qdim, action)?;
    Ok(QuotientModule {
        module,
        projection,
        section,
    })
}

/// The radical subspace rad(A) * M of a module.
pub fn radical_submodule<F: Field>(
    m: &Module<F>,
    radical: &VerifiedRadical<F>,
) -> Subspace<F> {
    let field = m.field.clone();
    let mut out = Subspace::zero(field, m.dim());
    for g in radical.space.basis() {
        let mat = m.apply_algebra(g);
        for c in 0..m.dim() {
            let col: Vec<F::Elem> = (0..m.dim()).map(|r| mat.get(r, c).clone()).collect();
            out.insert(col).expect("fixed ambient dimension");
        }
    }
    out
}

/// The socle: the joint kernel of the radical's action, which is the
/// largest semisimple submodule since the quotient algebra is semisimple.
pub fn socle_submodule<F: Field>(m: &Module<F>, radical: &VerifiedRadical<F>) -> Subspace<F> {
    let field = m.field.clone();
    let gens = radical.space.basis();
    if gens.is_empty() {
        let mut all = Subspace::zero(field.clone(), m.dim());
        for t in 0..m.dim() {
            let mut unit = vec![field.zero(); m.dim()];
            unit[t] = field.one();
            all.insert(unit).expect("fixed ambient dimension");
        }
        return all;
    }
    let mut stacked = Matrix::zeros(field, gens.len() * m.dim(), m.dim());
    for (i, g) in gens.iter().enumerate() {
        let mat = m.apply_algebra(g);
        for r in 0..m.dim() {
            for c in 0..m.dim() {
                stacked.set(i * m.dim() + r, c, mat.get(r, c).clone());
            }
        }
    }
    kernel(&stacked)
}

/// The projective left module A e together with its basis expressed as
/// algebra coordinate vectors.
pub struct ProjectiveModule<F: Field> {
    pub module: Module<F>,
    /// Reduced basis of A e inside the algebra's coordinate space.
    pub basis: Vec<Vec<F::Elem>>,
}

pub fn projective_module<F: Field>(
    pres: &AlgebraPresentation<F>,
    e: &[F::Elem],
) -> Result<ProjectiveModule<F>, Counterexample> {
    let field = pres.field().clone();
    let mut span = Subspace::zero(field, pres.dim());
    for k in 0..pres.dim() {
        span.insert(pres.multiply(&pres.basis_vector(k), e))
            .expect("fixed ambient dimension");
    }
    let regular = regular_module(pres);
    let module = submodule(pres, &regular, &span)?;
    Ok(ProjectiveModule {
        module,
        basis: span.basis().to_vec(),
    })
}

/// A verified projective cover: the source is a direct sum of the modules
/// A e_i, the map is a surjective homomorphism, and its kernel lies inside
/// the radical of the source (minimality).
pub struct ProjectiveCover<F: Field> {
    pub source: Module<F>,
    /// How many copies of each A e_i the source contains.
    pub multiplicities: Vec<usize>,
    /// Matrix of the cover map (target dim x source dim).
    pub map: Matrix<F>,
}

pub fn projective_cover<F: Field>(
    pres: &AlgebraPresentation<F>,
    idempotents: &[Vec<F::Elem>],
    radical: &VerifiedRadical<F>,
    m: &Module<F>,
) -> Result<ProjectiveCover<F>, Counterexample> {
    let field = pres.field().clone();
    let fail = |w: String| Err(Counterexample::new("projective cover", w));
    let rad_m = radical_submodule(m, radical);
    let top = quotient_module(pres, m, &rad_m)?;

    // Generators: lift a basis of each e_i-component of the top, then pull
    // it into e_i M.
    let mut multiplicities = vec![0usize; idempotents.len()];
    let mut generators: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    let mut covered = Subspace::zero(field.clone(), top.module.dim());
    for (i, e) in idempotents.iter().enumerate() {
        let on_top = top.module.apply_algebra(e);
        for c in 0..top.module.dim() {
            let col: Vec<F::Elem> = (0..top.module.dim())
                .map(|r| on_top.get(r, c).clone())
                .collect();
            if covered.insert(col.clone()).expect("fixed ambient") {
                multiplicities[i] += 1;
                let lifted = m.apply_algebra(e).apply(&top.section.apply(&col));
                generators.push((i, lifted));
            }
        }
    }
    if covered.dim() != top.module.dim() {
        return fail("idempotent components do not exhaust the top".to_string());
    }

    let projectives: Vec<ProjectiveModule<F>> = idempotents
        .iter()
        .map(|e| projective_module(pres, e))
        .collect::<Result<_, _>>()?;

    let source_dim: usize = generators
        .iter()
        .map(|(i, _)| projectives[*i].module.dim())
        .sum();
    let mut action = Vec::with_capacity(pres.dim());
    for k in 0..pres.dim() {
        let blocks: Vec<Matrix<F>> = generators
            .iter()
            .map(|(i, _)| projectives[*i].module.action[k].clone())
            .collect();
        action.push(block_diag_or_empty(&field, &blocks));
    }
    let source = Module::new(pres, source_dim, action)?;

    let mut map = Matrix::zeros(field.clone(), m.dim(), source_dim);
    let mut offset = 0;
    for (i, g) in &generators {
        for (j, a) in projectives[*i].basis.iter().enumerate() {
            let image = m.apply_algebra(a).apply(g);
            for (r, val) in image.into_iter().enumerate() {
                map.set(r, offset + j, val);
            }
        }
        offset += projectives[*i].module.dim();
    }

    for k in 0..pres.dim() {
        if m.action[k].mul(&map) != map.mul(&source.action[k]) {
            return fail(format!("the cover map is not linear over basis element {k}"));
        }
    }
    let (_, rank, _) = rref(&map);
    if rank != m.dim() {
        return fail(format!(
            "the cover map has rank {rank}, expected {}",
            m.dim()
        ));
    }
    let ker = kernel(&map);
    let rad_source = radical_submodule(&source, radical);
    if !ker.is_subspace_of(&rad_source) {
        return fail("the kernel escapes the radical, so the cover is not minimal".to_string());
    }
    Ok(ProjectiveCover {
        source,
        multiplicities,
        map,
    })
}

/// First syzygy: the kernel of the projective cover, as a module.
pub fn syzygy<F: Field>(
    pres: &AlgebraPresentation<F>,
    cover: &ProjectiveCover<F>,
) -> Result<Module<F>, Counterexample> {
    let ker = kernel(&cover.map);
    submodule(pres, &cover.source, &ker)
}

/// A module is projective exactly when its projective cover has the same
/// dimension (the cover map is then an isomorphism).
pub fn is_projective<F: Field>(
    pres: &AlgebraPresentation<F>,
    idempotents: &[Vec<F::Elem>],
    radical: &VerifiedRadical<F>,
    m: &Module<F>,
) -> Result<bool, Counterexample> {
    let cover = projective_cover(pres, idempotents, radical, m)?;
    Ok(cover.source.dim() == m.dim())
}

/// Length of the minimal projective resolution, with a hard cutoff.
pub fn projective_dimension<F: Field>(
    pres: &AlgebraPresentation<F>,
    idempotents: &[Vec<F::Elem>],
    radical: &VerifiedRadical<F>,
    m: &Module<F>,
    cutoff: usize,
) -> Result<usize, Counterexample> {
    let mut current = m.clone();
    let mut steps = 0;
    loop {
        let cover = projective_cover(pres, idempotents, radical, &current)?;
        if cover.source.dim() == current.dim() {
            return Ok(steps);
        }
        current = syzygy(pres, &cover)?;
        steps += 1;
        if steps > cutoff {
            return Err(Counterexample::new(
                "projective dimension",
                format!("no projective syzygy within {cutoff} steps"),
            ));
        }
    }
}

/// The simple modules: tops of the indecomposable projectives.
pub fn simple_modules<F: Field>(
    pres: &AlgebraPresentation<F>,
    idempotents: &[Vec<F::Elem>],
    radical: &VerifiedRadical<F>,
) -> Result<Vec<Module<F>>, Counterexample> {
    idempotents
        .iter()
        .map(|e| {
            let p = projective_module(pres, e)?;
            let rad_p = radical_submodule(&p.module, radical);
            Ok(quotient_module(pres, &p.module, &rad_p)?.module)
        })
        .collect()
}

/// Supremum of the projective dimensions of the simple modules.
pub fn global_dimension<F: Field>(
    pres: &AlgebraPresentation<F>,
    idempotents: &[Vec<F::Elem>],
    radical: &VerifiedRadical<F>,
    cutoff: usize,
) -> Result<usize, Counterexample> {
    let mut best = 0;
    for s in simple_modules(pres, idempotents, radical)? {
        best = best.max(projective_dimension(pres, idempotents, radical, &s, cutoff)?);
    }
    Ok(best)
}

/// The injective left module dual to the projective right module e A: the
/// action on functionals is the transpose of right multiplication.
pub struct InjectiveModule<F: Field> {
    pub module: Module<F>,
    /// Reduced basis of e A inside the algebra's coordinate space; the
    /// module coordinates are the dual basis.
    pub basis: Vec<Vec<F::Elem>>,
}

pub fn injective_module<F: Field>(
    pres: &AlgebraPresentation<F>,
    e: &[F::Elem],
) -> Result<InjectiveModule<F>, Counterexample> {
    let field = pres.field().clone();
    let mut span = Subspace::zero(field.clone(), pres.dim());
    for k in 0..pres.dim() {
        span.insert(pres.multiply(e, &pres.basis_vector(k)))
            .expect("fixed ambient dimension");
    }
    let sdim = span.dim();
    let mut action = Vec::with_capacity(pres.dim());
    for k in 0..pres.dim() {
        // Right multiplication by basis element k on the span of e A.
        let mut right = Matrix::zeros(field.clone(), sdim, sdim);
        for (col, row_vec) in span.basis().iter().enumerate() {
            let image = pres.multiply(row_vec, &pres.basis_vector(k));
            if !span.contains(&image) {
                return Err(Counterexample::new(
                    "injective module",
                    format!("e A is not stable under right multiplication by {k}"),
                ));
            }
            for (r, val) in span_coords(&span, &image).into_iter().enumerate() {
                right.set(r, col, val);
            }
        }
        action.push(right.transpose());
    }
    let module = Module::new(pres, sdim, action)?;
    Ok(InjectiveModule {
        module,
        basis: span.basis().to_vec(),
    })
}

fn matrix_inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let field = m.field().clone();
    let n = m.rows();
    if m.cols() != n {
        return None;
    }
    let augmented = Matrix::hstack(&[m.clone(), Matrix::identity(field.clone(), n)]);
    let (reduced, rank, _) = rref(&augmented);
    if rank != n {
        return None;
    }
    let mut inv = Matrix::zeros(field, n, n);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, reduced.get(r, n + c).clone());
        }
    }
    Some(inv)
}

/// A verified injective envelope: the target is a direct sum of the duals
/// of the e_i A with multiplicities given by the socle, the map is an
/// injective homomorphism, and the socles of source and target have equal
/// dimension (essentiality).
pub struct InjectiveEnvelope<F: Field> {
    pub target: Module<F>,
    pub multiplicities: Vec<usize>,
    /// Matrix of the embedding (target dim x source dim).
    pub map: Matrix<F>,
}

pub fn injective_envelope<F: Field>(
    pres: &AlgebraPresentation<F>,
    idempotents: &[Vec<F::Elem>],
    radical: &VerifiedRadical<F>,
    m: &Module<F>,
) -> Result<InjectiveEnvelope<F>, Counterexample> {
    let field = pres.field().clone();
    let fail = |w: String| Err(Counterexample::new("injective envelope", w));
    let soc = socle_submodule(m, radical);

    // Split the socle by idempotent: collect an adapted basis.
    let mut adapted: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    let mut multiplicities = vec![0usize; idempotents.len()];
    let mut seen = Subspace::zero(field.clone(), m.dim());
    for (i, e) in idempotents.iter().enumerate() {
        let act = m.apply_algebra(e);
        for v in soc.basis() {
            let w = act.apply(v);
            if seen.insert(w.clone()).expect("fixed ambient") {
                multiplicities[i] += 1;
                adapted.push((i, w));
            }
        }
    }
    if seen.dim() != soc.dim() {
        return fail("idempotent components do not exhaust the socle".to_string());
    }

    // Functionals dual to the adapted socle basis: extend to a basis of M
    // and invert.
    let mut extension = Subspace::zero(field.clone(), m.dim());
    let mut columns: Vec<Vec<F::Elem>> = Vec::new();
    for (_, v) in &adapted {
        if !extension.insert(v.clone()).expect("fixed ambient") {
            return fail("adapted socle basis is dependent".to_string());
        }
        columns.push(v.clone());
    }
    for t in 0..m.dim() {
        let mut unit = vec![field.zero(); m.dim()];
        unit[t] = field.one();
        if extension.insert(unit.clone()).expect("fixed ambient") {
            columns.push(unit);
        }
    }
    let mut basis_matrix = Matrix::zeros(field.clone(), m.dim(), m.dim());
    for (c, col) in columns.iter().enumerate() {
        for (r, val) in col.iter().enumerate() {
            basis_matrix.set(r, c, val.clone());
        }
    }
    let inverse = match matrix_inverse(&basis_matrix) {
        Some(inv) => inv,
        None => return fail("could not complete the socle basis".to_string()),
    };

    let injectives: Vec<InjectiveModule<F>> = idempotents
        .iter()
        .map(|e| injective_module(pres, e))
        .collect::<Result<_, _>>()?;

    let target_dim: usize = adapted
        .iter()
        .map(|(i, _)| injectives[*i].module.dim())
        .sum();
    let mut action = Vec::with_capacity(pres.dim());
    for k in 0..pres.dim() {
        let blocks: Vec<Matrix<F>> = adapted
            .iter()
            .map(|(i, _)| injectives[*i].module.action[k].clone())
            .collect();
        action.push(block_diag_or_empty(&field, &blocks));
    }
    let target = Module::new(pres, target_dim, action)?;

    // Component for socle vector c with functional f_c: the map sends v to
    // the functional u -> f_c(u * v) on e_i A.
    let mut map = Matrix::zeros(field.clone(), target_dim, m.dim());
    let mut offset = 0;
    for (slot, (i, _)) in adapted.iter().enumerate() {
        let f_c: Vec<F::Elem> = (0..m.dim()).map(|t| inverse.get(slot, t).clone()).collect();
        for (j, u) in injectives[*i].basis.iter().enumerate() {
            let act_u = m.apply_algebra(u);
            for col in 0..m.dim() {
                let mut unit = vec![field.zero(); m.dim()];
                unit[col] = field.one();
                let uv = act_u.apply(&unit);
                let mut val = field.zero();
                for (t, entry) in uv.iter().enumerate() {
                    val = field.add(&val, &field.mul(&f_c[t], entry));
                }
                map.set(offset + j, col, val);
            }
        }
        offset += injectives[*i].module.dim();
    }

    for k in 0..pres.dim() {
        if target.action[k].mul(&map) != map.mul(&m.action[k]) {
            return fail(format!("the envelope map is not linear over basis element {k}"));
        }
    }
    let (_, rank, _) = rref(&map);
    if rank != m.dim() {
        return fail(format!("the envelope map has rank {rank}, expected {}", m.dim()));
    }
    let target_socle = socle_submodule(&target, radical);
    if target_socle.dim() != soc.dim() {
        return fail(format!(
            "target socle has dimension {}, expected {} (extension not essential)",
            target_socle.dim(),
            soc.dim()
        ));
    }
    Ok(InjectiveEnvelope {
        target,
        multiplicities,
        map,
    })
}

/// Dominant dimension: how many initial terms of the minimal injective
/// resolution of the regular module are projective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomDim {
    Finite(usize),
    /// The resolution terminated with every term projective (the algebra
    /// is self-injective).
    Infinite,
}

impl std::fmt::Display for DomDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomDim::Finite(n) => write!(f, "{n}"),
            DomDim::Infinite => write!(f, "infinite"),
        }
    }
}

pub fn dominant_dimension<F: Field>(
    pres: &AlgebraPresentation<F>,
    idempotents: &[Vec<F::Elem>],
    radical: &VerifiedRadical<F>,
    cutoff: usize,
) -> Result<DomDim, Counterexample> {
    let field = pres.field().clone();
    let mut current = regular_module(pres);
    for step in 0..=cutoff {
        let env = injective_envelope(pres, idempotents, radical, &current)?;
        if !is_projective(pres, idempotents, radical, &env.target)? {
            return Ok(DomDim::Finite(step));
        }
        let mut image = Subspace::zero(field.clone(), env.target.dim());
        for c in 0..current.dim() {
            let col: Vec<F::Elem> = (0..env.target.dim())
                .map(|r| env.map.get(r, c).clone())
                .collect();
            image.insert(col).expect("fixed ambient dimension");
        }
        let coker = quotient_module(pres, &env.target, &image)?;
        if coker.module.dim() == 0 {
            return Ok(DomDim::Infinite);
        }
        current = coker.module;
    }
    Err(Counterexample::new(
        "dominant dimension",
        format!("resolution still projective after {cutoff} terms"),
    ))
}

/// Basis of the space of module homomorphisms M -> N, found by solving the
/// intertwining equations.
pub fn hom_space<F: Field>(
    pres: &AlgebraPresentation<F>,
    m: &Module<F>,
    n: &Module<F>,
) -> Vec<Matrix<F>> {
    let field = pres.field().clone();
    let vars = n.dim() * m.dim();
    if vars == 0 {
        return Vec::new();
    }
    let mut system = Matrix::zeros(field.clone(), pres.dim() * vars, vars);
    let var = |r: usize, c: usize| r * m.dim() + c;
    for k in 0..pres.dim() {
        for r in 0..n.dim() {
            for c in 0..m.dim() {
                let row = k * vars + var(r, c);
                // (X * act_m(k))[r][c] - (act_n(k) * X)[r][c] = 0.
                for t in 0..m.dim() {
                    let coeff = m.action[k].get(t, c).clone();
                    let prev = system.get(row, var(r, t)).clone();
                    system.set(row, var(r, t), field.add(&prev, &coeff));
                }
                for s in 0..n.dim() {
                    let coeff = field.neg(n.action[k].get(r, s));
                    let prev = system.get(row, var(s, c)).clone();
                    system.set(row, var(s, c), field.add(&prev, &coeff));
                }
            }
        }
    }
    kernel(&system)
        .basis()
        .iter()
        .map(|flat| {
            let mut mat = Matrix::zeros(field.clone(), n.dim(), m.dim());
            for r in 0..n.dim() {
                for c in 0..m.dim() {
                    mat.set(r, c, flat[var(r, c)].clone());
                }
            }
            mat
        })
        .collect()
}

/// Decide isomorphism of modules.  Dimension mismatch is conclusive; an
/// invertible hom-basis element is conclusive; otherwise, over a small
/// finite field, all combinations of the hom basis are tried.  Returns
/// None when the search space cannot be enumerated.
pub fn is_isomorphic<F: Field>(
    pres: &AlgebraPresentation<F>,
    m: &Module<F>,
    n: &Module<F>,
) -> Option<bool> {
    if m.dim() != n.dim() {
        return Some(false);
    }
    if m.dim() == 0 {
        return Some(true);
    }
    let homs = hom_space(pres, m, n);
    if homs.is_empty() {
        return Some(false);
    }
    let full_rank = |mat: &Matrix<F>| {
        let (_, rank, _) = rref(mat);
        rank == m.dim()
    };
    if homs.iter().any(full_rank) {
        return Some(true);
    }
    let field = pres.field().clone();
    let elems = field.enumerate()?;
    let total = (elems.len() as u64).checked_pow(homs.len() as u32)?;
    if total > 1 << 16 {
        return None;
    }
    let mut counters = vec![0usize; homs.len()];
    loop {
        let mut candidate = Matrix::zeros(field.clone(), n.dim(), m.dim());
        for (h, &ci) in homs.iter().zip(&counters) {
            candidate = candidate.add(&h.scale(&elems[ci]));
        }
        if full_rank(&candidate) {
            return Some(true);
        }
        let mut pos = 0;
        loop {
            if pos == counters.len() {
                return Some(false);
            }
            counters[pos] += 1;
            if counters[pos] < elems.len() {
                break;
            }
            counters[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_scheme;
    use crate::field::{PrimeField, Rationals};
    use crate::presentation::{
        basic_algebra, lambda_algebra, verify_radical, StarAlgebra,
    };
    use crate::scheme::{intersection_numbers, valencies};
    use crate::terwilliger::{class_data, generate, multiplication_table, structured_basis};

    fn star_setup<F: crate::field::Field>(
        field: &F,
        r: usize,
    ) -> (StarAlgebra<F>, Vec<Vec<F::Elem>>, VerifiedRadical<F>) {
        let star = lambda_algebra(field, r);
        let idems = star.idempotents();
        let rad = verify_radical(&star.pres, &star.radical_candidate(), &idems).unwrap();
        (star, idems, rad)
    }

    #[test]
    fn projective_modules_of_the_one_arm_star() {
        let q = Rationals;
        let (star, idems, rad) = star_setup(&q, 1);
        let p0 = projective_module(&star.pres, &idems[0]).unwrap();
        let p1 = projective_module(&star.pres, &idems[1]).unwrap();
        assert_eq!(p0.module.dim(), 2);
        assert_eq!(p1.module.dim(), 3);
        let rad_p1 = radical_submodule(&p1.module, &rad);
        assert_eq!(rad_p1.dim(), 2);
        let soc_p1 = socle_submodule(&p1.module, &rad);
        assert_eq!(soc_p1.dim(), 1);
    }

    #[test]
    fn socle_of_the_regular_module_sits_at_the_arms() {
        let q = Rationals;
        let (star, idems, rad) = star_setup(&q, 2);
        let reg = regular_module(&star.pres);
        let soc = socle_submodule(&reg, &rad);
        assert_eq!(soc.dim(), 6);
        // No socle component at the center.
        let act = reg.apply_algebra(&idems[0]);
        for v in soc.basis() {
            assert!(
                act.apply(v).iter().all(|c| q.is_zero(c)),
                "center component in the socle"
            );
        }
    }

    #[test]
    fn simple_modules_have_dimension_one() {
        let q = Rationals;
        let (star, idems, rad) = star_setup(&q, 2);
        let simples = simple_modules(&star.pres, &idems, &rad).unwrap();
        assert_eq!(simples.len(), 3);
        assert!(simples.iter().all(|s| s.dim() == 1));
    }

    #[test]
    fn projective_dimensions_of_star_simples() {
        let q = Rationals;
        let (star, idems, rad) = star_setup(&q, 1);
        let simples = simple_modules(&star.pres, &idems, &rad).unwrap();
        let pds: Vec<usize> = simples
            .iter()
            .map(|s| projective_dimension(&star.pres, &idems, &rad, s, 10).unwrap())
            .collect();
        assert_eq!(pds, vec![2, 1]);
    }

    #[test]
    fn global_dimension_of_star_algebras() {
        let q = Rationals;
        for r in [1usize, 2, 3] {
            let (star, idems, rad) = star_setup(&q, r);
            assert_eq!(
                global_dimension(&star.pres, &idems, &rad, 10).unwrap(),
                2,
                "r = {r}"
            );
        }
        let (star, idems, rad) = star_setup(&q, 0);
        assert_eq!(global_dimension(&star.pres, &idems, &rad, 10).unwrap(), 0);
    }

    #[test]
    fn the_one_way_star_is_hereditary() {
        // Keep only the inward arrows of the star.  The result is a path
        // algebra with no relations, so radicals of projectives are again
        // projective and the global dimension is 1 — half that of the
        // two-way star, whose outward arrows add one more syzygy step.
        let q = Rationals;
        for r in [1usize, 2, 3] {
            let dim = 2 * r + 1;
            let a = |v: usize| r + v;
            let mut labels: Vec<String> = (0..=r).map(|u| format!("e{u}")).collect();
            labels.extend((1..=r).map(|v| format!("a{v}")));
            let mut structure: Vec<Vec<(_, usize)>> = vec![Vec::new(); dim * dim];
            for u in 0..=r {
                structure[u * dim + u].push((q.one(), u));
            }
            for v in 1..=r {
                // Arrow a_v runs from the center vertex to arm vertex v.
                structure[a(v)].push((q.one(), a(v)));
                structure[a(v) * dim + v].push((q.one(), a(v)));
            }
            let mut one = vec![q.zero(); dim];
            for u in 0..=r {
                one[u] = q.one();
            }
            let pres = AlgebraPresentation::new(q.clone(), labels, structure, one).unwrap();
            let unit_vec = |k: usize| {
                let mut x = vec![q.zero(); dim];
                x[k] = q.one();
                x
            };
            let idems: Vec<_> = (0..=r).map(unit_vec).collect();
            let arrows: Vec<_> = (1..=r).map(|v| unit_vec(a(v))).collect();
            let rad = verify_radical(&pres, &arrows, &idems).unwrap();
            assert_eq!(rad.space.dim(), r);
            assert_eq!(rad.nilpotency, 2);
            assert_eq!(
                global_dimension(&pres, &idems, &rad, 10).unwrap(),
                1,
                "r = {r}"
            );
        }
    }

    #[test]
    fn injective_modules_dualize_the_row_spans() {
        let q = Rationals;
        let (star, idems, _) = star_setup(&q, 1);
        let i0 = injective_module(&star.pres, &idems[0]).unwrap();
        let i1 = injective_module(&star.pres, &idems[1]).unwrap();
        assert_eq!(i0.module.dim(), 2);
        assert_eq!(i1.module.dim(), 3);
    }

    #[test]
    fn injective_vs_projective_over_gf2() {
        let f2 = PrimeField::new(2).unwrap();
        let (star, idems, _) = star_setup(&f2, 1);
        let p0 = projective_module(&star.pres, &idems[0]).unwrap();
        let p1 = projective_module(&star.pres, &idems[1]).unwrap();
        let i0 = injective_module(&star.pres, &idems[0]).unwrap();
        let i1 = injective_module(&star.pres, &idems[1]).unwrap();
        assert_eq!(
            is_isomorphic(&star.pres, &i1.module, &p1.module),
            Some(true),
            "the arm injective is projective"
        );
        assert_eq!(
            is_isomorphic(&star.pres, &i0.module, &p0.module),
            Some(false),
            "the center injective is not projective"
        );
        assert_eq!(hom_space(&star.pres, &p0.module, &p1.module).len(), 1);
    }

    #[test]
    fn dominant_dimension_of_star_algebras() {
        let q = Rationals;
        let expectations = [
            (0usize, DomDim::Infinite),
            (1, DomDim::Finite(2)),
            (2, DomDim::Finite(0)),
            (3, DomDim::Finite(0)),
        ];
        for (r, expected) in expectations {
            let (star, idems, rad) = star_setup(&q, r);
            assert_eq!(
                dominant_dimension(&star.pres, &idems, &rad, 10).unwrap(),
                expected,
                "r = {r}"
            );
        }
        let f2 = PrimeField::new(2).unwrap();
        let (star, idems, rad) = star_setup(&f2, 1);
        assert_eq!(
            dominant_dimension(&star.pres, &idems, &rad, 10).unwrap(),
            DomDim::Finite(2)
        );
    }

    #[test]
    fn homological_dimensions_of_the_gf2_corner() {
        let f2 = PrimeField::new(2).unwrap();
        let s = catalog_scheme("cycle-4").unwrap();
        let t = intersection_numbers(&s).unwrap();
        let v = valencies(&s, &t).unwrap();
        let cd = class_data(&t, &v).unwrap();
        let alg = generate(&f2, &s, 0).unwrap();
        let basis = structured_basis(&f2, &s, 0, &cd);
        let table = multiplication_table(&f2, &basis, &v).unwrap();
        let star = basic_algebra(&f2, &alg, &basis, &table, &v, &cd).unwrap();
        let idems = star.idempotents();
        let rad = verify_radical(&star.pres, &star.radical_candidate(), &idems).unwrap();
        assert_eq!(global_dimension(&star.pres, &idems, &rad, 10).unwrap(), 2);
        assert_eq!(
            dominant_dimension(&star.pres, &idems, &rad, 10).unwrap(),
            DomDim::Finite(2)
        );
    }
}
