//! The acceptance gate: one test per criterion, each printing a single
//! pass line.  Every value asserted here was computed by an independent
//! path (hand counts, closures, or the combinatorial formulas) before
//! being frozen into the assertions.

use std::time::{Duration, Instant};
use twbench::catalog::catalog_scheme;
use twbench::cellular::{
    build_cell_chain, cell_datum, certified_simple_count, verify_c3, verify_heredity,
    verify_involution,
};
use twbench::field::{Field, PrimeField, Rationals};
use twbench::homology::{dominant_dimension, global_dimension, DomDim};
use twbench::matrix::Matrix;
use twbench::presentation::{
    basic_algebra, cartan_matrix, lambda_algebra, verify_iso_psi, verify_radical, StarAlgebra,
};
use twbench::scheme::{
    check_valency_identities, classify, intersection_numbers, valencies, IntersectionTensor,
    Scheme, SchemeKind, Valencies,
};
use twbench::subspace::{rref, subalgebra_closure, Nilpotency, Subspace};
use twbench::terwilliger::{
    basepoint_invariance, class_data, generate, multiplication_table, pair_sets,
    predicted_dimension, radical_char2, semisimplicity_check, structured_basis, verify_basis,
    ClassData, SemisimpleVerdict, StructuredBasis, TAlgebra,
};

const THIN: &[&str] = &["trivial", "thin-C2", "thin-C3", "thin-Klein", "thin-S3"];
const QUASI_THIN: &[&str] = &[
    "cycle-4", "cycle-5", "cycle-6", "cycle-7", "cycle-8", "affine-8",
];

fn scheme_data(name: &str) -> (Scheme, IntersectionTensor, Valencies) {
    let s = catalog_scheme(name).expect("catalog name");
    let t = intersection_numbers(&s).unwrap();
    let v = valencies(&s, &t).unwrap();
    (s, t, v)
}

fn all_names() -> Vec<&'static str> {
    THIN.iter().chain(QUASI_THIN).copied().collect()
}

struct Constructed<F: Field> {
    d: usize,
    alg: TAlgebra<F>,
    basis: StructuredBasis<F>,
    cd: ClassData,
    vals: Valencies,
}

fn construct<F: Field>(field: &F, name: &str) -> Constructed<F> {
    let (s, t, v) = scheme_data(name);
    let cd = class_data(&t, &v).unwrap();
    let alg = generate(field, &s, 0).unwrap();
    let basis = structured_basis(field, &s, 0, &cd);
    Constructed {
        d: s.d(),
        alg,
        basis,
        cd,
        vals: v,
    }
}

fn corner<F: Field>(field: &F, name: &str) -> StarAlgebra<F> {
    let c = construct(field, name);
    let table = multiplication_table(field, &c.basis, &c.vals).unwrap();
    basic_algebra(field, &c.alg, &c.basis, &table, &c.vals, &c.cd).unwrap()
}

#[test]
fn criterion_01_thin_schemes_generate_full_matrix_algebras() {
    let f2 = PrimeField::new(2).unwrap();
    let f3 = PrimeField::new(3).unwrap();
    for name in ["thin-C2", "thin-C3", "thin-Klein", "thin-S3"] {
        let s = catalog_scheme(name).unwrap();
        let expected = s.n() * s.n();
        let started = Instant::now();
        assert_eq!(generate(&f2, &s, 0).unwrap().dim(), expected, "{name}/GF(2)");
        assert_eq!(generate(&f3, &s, 0).unwrap().dim(), expected, "{name}/GF(3)");
        assert_eq!(generate(&Rationals, &s, 0).unwrap().dim(), expected, "{name}/Q");
        assert!(
            started.elapsed() < Duration::from_secs(3),
            "{name}: closures exceeded the time budget"
        );
    }
    println!("acceptance 01 thin schemes generate full matrix algebras: pass");
}

#[test]
fn criterion_02_dimension_formula_every_field_and_base_point() {
    let frozen = [
        ("cycle-4", 10),
        ("cycle-5", 13),
        ("cycle-6", 20),
        ("cycle-7", 25),
        ("cycle-8", 34),
        ("affine-8", 40),
    ];
    let f2 = PrimeField::new(2).unwrap();
    let f3 = PrimeField::new(3).unwrap();
    for (name, frozen_dim) in frozen {
        let (s, t, v) = scheme_data(name);
        let pairs = pair_sets(&t, &v).unwrap();
        let expected = predicted_dimension(s.d(), &pairs);
        assert_eq!(expected, frozen_dim, "{name}: combinatorial count");
        let started = Instant::now();
        for x in 0..s.n() {
            assert_eq!(generate(&f2, &s, x).unwrap().dim(), expected, "{name}@{x}/GF(2)");
            assert_eq!(generate(&f3, &s, x).unwrap().dim(), expected, "{name}@{x}/GF(3)");
            assert_eq!(
                generate(&Rationals, &s, x).unwrap().dim(),
                expected,
                "{name}@{x}/Q"
            );
        }
        assert!(
            started.elapsed() < Duration::from_secs(5),
            "{name}: closures exceeded the time budget"
        );
    }
    println!("acceptance 02 dimension formula across fields and base points: pass");
}

#[test]
fn criterion_03_basis_and_multiplication_table() {
    fn check<F: Field>(field: &F, name: &str) {
        let c = construct(field, name);
        verify_basis(&c.alg, &c.basis)
            .unwrap_or_else(|e| panic!("{name}/{}: {e}", field.label()));
        multiplication_table(field, &c.basis, &c.vals)
            .unwrap_or_else(|e| panic!("{name}/{}: {e}", field.label()));
    }
    for name in all_names() {
        check(&PrimeField::new(2).unwrap(), name);
        check(&PrimeField::new(3).unwrap(), name);
        check(&Rationals, name);
    }
    println!("acceptance 03 structured basis and multiplication table: pass");
}

#[test]
fn criterion_04_semisimplicity_criterion() {
    // Characteristic 0: the trace form is nondegenerate on every entry.
    for name in all_names() {
        let c = construct(&Rationals, name);
        match semisimplicity_check(&Rationals, &c.basis.matrices, None) {
            SemisimpleVerdict::Semisimple => {}
            other => panic!("{name}/Q: expected a semisimple verdict, got {other:?}"),
        }
    }
    // Characteristic 2: the radical vanishes exactly on the thin entries.
    let f2 = PrimeField::new(2).unwrap();
    for name in all_names() {
        let c = construct(&f2, name);
        let rad = radical_char2(&f2, &c.alg, &c.basis, &c.vals, &c.cd).unwrap();
        if THIN.contains(&name) {
            assert_eq!(rad.radical.dim(), 0, "{name}: thin radical");
        } else {
            assert!(rad.radical.dim() > 0, "{name}: non-thin radical");
        }
    }
    println!("acceptance 04 semisimplicity criterion: pass");
}

#[test]
fn criterion_05_characteristic_2_radical() {
    let f2 = PrimeField::new(2).unwrap();
    for name in all_names() {
        let c = construct(&f2, name);
        let rad = radical_char2(&f2, &c.alg, &c.basis, &c.vals, &c.cd).unwrap();
        // Block sizes of the semisimple quotient: one block for the
        // one-valent relations, one per class of two-valent relations.
        let mut expected_blocks = vec![c.cd.one_valent.len()];
        expected_blocks.extend(c.cd.classes.iter().map(|cl| cl.len()));
        assert_eq!(rad.block_sizes, expected_blocks, "{name}: quotient blocks");
        match rad.nilpotency {
            Nilpotency::Nilpotent(t) => {
                assert!(t <= 3, "{name}: nilpotency index {t}");
                assert_eq!(t == 3, c.cd.r() >= 1, "{name}: index 3 iff classes exist");
            }
            Nilpotency::NotNilpotent => panic!("{name}: radical not nilpotent"),
        }
        if name == "cycle-4" {
            assert_eq!(rad.radical.dim(), 5);
            assert_eq!(rad.nilpotency, Nilpotency::Nilpotent(3));
        }
    }
    println!("acceptance 05 characteristic-2 radical: pass");
}

#[test]
fn criterion_06_cellularity_and_quasi_heredity() {
    fn check<F: Field>(field: &F, name: &str, simples: usize, radical: &Subspace<F>) {
        let c = construct(field, name);
        let datum = cell_datum(c.d, &c.basis);
        verify_involution(&c.basis).unwrap();
        let reps = verify_c3(field, &c.basis, &datum, &c.vals)
            .unwrap_or_else(|e| panic!("{name}/{}: {e}", field.label()));
        let chain = build_cell_chain(field, &c.alg, &c.basis).unwrap();
        assert_eq!(chain.ideals.len() - 1, c.cd.r() + 1, "{name}: chain length");
        let certified = if field.characteristic() == 2 {
            let rad = radical_char2(field, &c.alg, &c.basis, &c.vals, &c.cd).unwrap();
            certified_simple_count(field, &c.alg, &c.basis, &datum, &reps, Some(&rad)).unwrap()
        } else {
            certified_simple_count(field, &c.alg, &c.basis, &datum, &reps, None).unwrap()
        };
        assert_eq!(certified, simples, "{name}: simple count");
        verify_heredity(field, &c.alg, &chain, radical, simples)
            .unwrap_or_else(|e| panic!("{name}/{}: {e}", field.label()));
    }
    let f2 = PrimeField::new(2).unwrap();
    for name in all_names() {
        let (s, t, v) = scheme_data(name);
        let cd = class_data(&t, &v).unwrap();
        let simples = cd.r() + 1;
        let c2 = construct(&f2, name);
        let rad2 = radical_char2(&f2, &c2.alg, &c2.basis, &c2.vals, &cd).unwrap();
        check(&f2, name, simples, &rad2.radical);
        let zero = Subspace::zero(Rationals, s.n() * s.n());
        check(&Rationals, name, simples, &zero);
    }
    println!("acceptance 06 cellularity and quasi-heredity: pass");
}

#[test]
fn criterion_07_basic_algebra_matches_the_star_presentation() {
    let f2 = PrimeField::new(2).unwrap();
    for name in all_names() {
        let star = corner(&f2, name);
        let r = star.r;
        assert_eq!(star.pres.dim(), r * r + 3 * r + 1, "{name}: corner dimension");
        let lambda = lambda_algebra(&f2, r);
        assert_eq!(
            cartan_matrix(&star.pres, &star.idempotents()),
            cartan_matrix(&lambda.pres, &lambda.idempotents()),
            "{name}: Cartan matrices"
        );
        verify_iso_psi(&lambda, &star).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    println!("acceptance 07 basic algebra is the star algebra: pass");
}

#[test]
fn criterion_08_global_dimension() {
    let f2 = PrimeField::new(2).unwrap();
    for name in all_names() {
        let star = corner(&f2, name);
        let idems = star.idempotents();
        let rad = verify_radical(&star.pres, &star.radical_candidate(), &idems).unwrap();
        let expected = if star.r == 0 { 0 } else { 2 };
        assert_eq!(
            global_dimension(&star.pres, &idems, &rad, 10).unwrap(),
            expected,
            "{name}: corner global dimension"
        );
    }
    for r in 1..=4 {
        for label in ["GF(2)", "Q"] {
            let g = if label == "Q" {
                let star = lambda_algebra(&Rationals, r);
                let idems = star.idempotents();
                let rad =
                    verify_radical(&star.pres, &star.radical_candidate(), &idems).unwrap();
                global_dimension(&star.pres, &idems, &rad, 10).unwrap()
            } else {
                let star = lambda_algebra(&f2, r);
                let idems = star.idempotents();
                let rad =
                    verify_radical(&star.pres, &star.radical_candidate(), &idems).unwrap();
                global_dimension(&star.pres, &idems, &rad, 10).unwrap()
            };
            assert_eq!(g, 2, "star algebra r = {r} over {label}");
        }
    }
    println!("acceptance 08 global dimension: pass");
}

#[test]
fn criterion_09_dominant_dimension() {
    let f2 = PrimeField::new(2).unwrap();
    for name in all_names() {
        let star = corner(&f2, name);
        let idems = star.idempotents();
        let rad = verify_radical(&star.pres, &star.radical_candidate(), &idems).unwrap();
        let dom = dominant_dimension(&star.pres, &idems, &rad, 10).unwrap();
        if star.r == 0 {
            assert_eq!(dom, DomDim::Infinite, "{name}: semisimple corner");
        } else {
            assert_eq!(star.r, 1, "{name}: catalog instances have one class");
            assert_eq!(dom, DomDim::Finite(2), "{name}: one-class corner");
        }
    }
    for r in [2usize, 3] {
        let star = lambda_algebra(&f2, r);
        let idems = star.idempotents();
        let rad = verify_radical(&star.pres, &star.radical_candidate(), &idems).unwrap();
        assert_eq!(
            dominant_dimension(&star.pres, &idems, &rad, 10).unwrap(),
            DomDim::Finite(0),
            "star algebra r = {r}"
        );
    }
    println!("acceptance 09 dominant dimension: pass");
}

#[test]
fn criterion_10_radical_nilpotency_transfers_to_the_corner() {
    let f2 = PrimeField::new(2).unwrap();
    for name in all_names() {
        let c = construct(&f2, name);
        let rad_t = radical_char2(&f2, &c.alg, &c.basis, &c.vals, &c.cd).unwrap();
        let star = corner(&f2, name);
        let idems = star.idempotents();
        let rad_g = verify_radical(&star.pres, &star.radical_candidate(), &idems).unwrap();
        let index_t = match rad_t.nilpotency {
            Nilpotency::Nilpotent(t) => t,
            Nilpotency::NotNilpotent => panic!("{name}: radical not nilpotent"),
        };
        assert_eq!(index_t, rad_g.nilpotency, "{name}: index transfer");
        assert!(index_t <= 3, "{name}: index bound");
        assert_eq!(index_t == 3, c.cd.r() >= 1, "{name}: index 3 iff classes");
    }
    println!("acceptance 10 radical nilpotency index: pass");
}

#[test]
fn criterion_11_base_point_invariance() {
    let f2 = PrimeField::new(2).unwrap();
    for name in all_names() {
        let (s, t, v) = scheme_data(name);
        let cd = class_data(&t, &v).unwrap();
        basepoint_invariance(&f2, &s, &v, &cd).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    println!("acceptance 11 base-point invariance: pass");
}

#[test]
fn criterion_12_axiom_identities_and_structural_fixpoints() {
    let f2 = PrimeField::new(2).unwrap();
    for name in all_names() {
        let (s, t, v) = scheme_data(name);
        // The four valency identities plus the gcd bound on products.
        check_valency_identities(&t, &v).unwrap_or_else(|e| panic!("{name}: {e}"));
        let kind = classify(&v).kind;
        assert_ne!(kind, SchemeKind::Neither, "{name}: catalog is quasi-thin");
        // Closure is a fixpoint: regenerating from the closed basis adds
        // nothing.
        let alg = generate(&f2, &s, 0).unwrap();
        let matrices: Vec<Matrix<PrimeField>> = alg
            .span
            .basis()
            .iter()
            .map(|row| Matrix::from_flat(f2.clone(), s.n(), s.n(), row))
            .collect();
        let reclosed = subalgebra_closure(&f2, &matrices, s.n());
        assert_eq!(reclosed.dim(), alg.dim(), "{name}: closure fixpoint");
        // Row reduction is idempotent on the flattened basis.
        let mut flat = Matrix::zeros(f2.clone(), matrices.len(), s.n() * s.n());
        for (i, m) in matrices.iter().enumerate() {
            for (j, val) in m.flatten().into_iter().enumerate() {
                flat.set(i, j, val);
            }
        }
        let (once, rank1, _) = rref(&flat);
        let (twice, rank2, _) = rref(&once);
        assert_eq!(once, twice, "{name}: row reduction idempotent");
        assert_eq!(rank1, rank2);
        // Transpose is an anti-automorphism permuting the basis.
        let cd = class_data(&t, &v).unwrap();
        let basis = structured_basis(&f2, &s, 0, &cd);
        verify_involution(&basis).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    println!("acceptance 12 axiom identities and structural fixpoints: pass");
}
