//! Generative suites: row-reduction and closure fixpoints, transpose as an
//! anti-automorphism, scheme-axiom identities over a parametrized family,
//! rejection of corrupted tables, parser round-trips, and field axioms.

use proptest::prelude::*;
use twbench::catalog::{
    cycle_scheme, cyclic_group, parse_scheme_file, render_scheme, thin_from_group,
};
use twbench::field::{Field, PrimeField, Rationals};
use twbench::matrix::Matrix;
use twbench::scheme::{
    check_valency_identities, classify, intersection_numbers, valencies, validate_scheme,
    SchemeKind,
};
use twbench::subspace::{rref, subalgebra_closure};

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).expect("prime")
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

fn small_entries(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

/// A valid relation table from the built-in families.
fn valid_table() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop_oneof![
        (3usize..=9).prop_map(|n| cycle_scheme(n)),
        (2usize..=6).prop_map(|n| thin_from_group(&cyclic_group(n))),
    ]
}

proptest! {
    #[test]
    fn row_reduction_is_idempotent(
        p in prime(),
        rows in 1usize..=4,
        cols in 1usize..=4,
        seed in small_entries(16),
    ) {
        let f = gf(p);
        let data: Vec<_> = seed.iter().cycle().take(rows * cols).map(|&x| f.from_int(x)).collect();
        let m = Matrix::from_data(f.clone(), rows, cols, data);
        let (once, rank1, pivots1) = rref(&m);
        let (twice, rank2, pivots2) = rref(&once);
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(rank1, rank2);
        prop_assert_eq!(pivots1, pivots2);
        prop_assert!(rank1 <= rows.min(cols));
    }

    #[test]
    fn row_reduction_is_idempotent_over_the_rationals(
        rows in 1usize..=4,
        cols in 1usize..=4,
        seed in small_entries(16),
    ) {
        let q = Rationals;
        let data: Vec<_> = seed.iter().cycle().take(rows * cols).map(|&x| q.from_int(x)).collect();
        let m = Matrix::from_data(q, rows, cols, data);
        let (once, rank1, _) = rref(&m);
        let (twice, rank2, _) = rref(&once);
        prop_assert_eq!(once, twice);
        prop_assert_eq!(rank1, rank2);
    }

    #[test]
    fn closing_a_closed_span_adds_nothing(
        p in prime(),
        n in 2usize..=3,
        seed_a in small_entries(9),
        seed_b in small_entries(9),
    ) {
        let f = gf(p);
        let to_matrix = |seed: &[i64]| {
            let data: Vec<_> = seed.iter().cycle().take(n * n).map(|&x| f.from_int(x)).collect();
            Matrix::from_data(f.clone(), n, n, data)
        };
        let gens = vec![to_matrix(&seed_a), to_matrix(&seed_b)];
        let closed = subalgebra_closure(&f, &gens, n);
        let basis_matrices: Vec<Matrix<PrimeField>> = closed
            .basis()
            .iter()
            .map(|row| Matrix::from_flat(f.clone(), n, n, row))
            .collect();
        let reclosed = subalgebra_closure(&f, &basis_matrices, n);
        prop_assert_eq!(reclosed.dim(), closed.dim());
    }

    #[test]
    fn transpose_reverses_products(
        p in prime(),
        n in 1usize..=4,
        seed_a in small_entries(16),
        seed_b in small_entries(16),
    ) {
        let f = gf(p);
        let to_matrix = |seed: &[i64]| {
            let data: Vec<_> = seed.iter().cycle().take(n * n).map(|&x| f.from_int(x)).collect();
            Matrix::from_data(f.clone(), n, n, data)
        };
        let a = to_matrix(&seed_a);
        let b = to_matrix(&seed_b);
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn family_schemes_satisfy_the_valency_identities(table in valid_table()) {
        let s = validate_scheme(&table).expect("family tables are valid");
        let t = intersection_numbers(&s).unwrap();
        let v = valencies(&s, &t).unwrap();
        check_valency_identities(&t, &v).unwrap();
        prop_assert_ne!(classify(&v).kind, SchemeKind::Neither);
    }

    #[test]
    fn corrupting_one_cell_invalidates_the_table(
        table in valid_table(),
        cell in (0usize..64, 0usize..64),
        bump in 1usize..8,
    ) {
        let n = table.len();
        prop_assume!(n >= 2);
        let d = *table.iter().flatten().max().unwrap();
        let (x, y) = (cell.0 % n, cell.1 % n);
        let mut corrupted = table.clone();
        // Replace one cell with a different value that stays in range.
        let replacement = (corrupted[x][y] + bump) % (d + 1);
        prop_assume!(replacement != corrupted[x][y]);
        corrupted[x][y] = replacement;
        prop_assert!(validate_scheme(&corrupted).is_err());
    }

    #[test]
    fn rendering_and_parsing_round_trip(table in valid_table()) {
        let s = validate_scheme(&table).unwrap();
        let text = render_scheme(&s);
        prop_assert_eq!(&parse_scheme_file(&text).unwrap(), &table);
        // Comments and stray blank lines do not change the result.
        let decorated = format!("# header\n\n{text}\n# trailer\n");
        prop_assert_eq!(&parse_scheme_file(&decorated).unwrap(), &table);
    }

    #[test]
    fn prime_field_axioms(
        p in prime(),
        a in -20i64..=20,
        b in -20i64..=20,
        c in -20i64..=20,
    ) {
        let f = gf(p);
        let (x, y, z) = (f.from_int(a), f.from_int(b), f.from_int(c));
        prop_assert_eq!(f.add(&f.add(&x, &y), &z), f.add(&x, &f.add(&y, &z)));
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        prop_assert_eq!(
            f.mul(&x, &f.add(&y, &z)),
            f.add(&f.mul(&x, &y), &f.mul(&x, &z))
        );
        if !f.is_zero(&x) {
            let inv = f.inv(&x).expect("nonzero elements invert");
            prop_assert!(f.is_one(&f.mul(&x, &inv)));
        }
    }
}
