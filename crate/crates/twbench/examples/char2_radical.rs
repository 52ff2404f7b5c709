//! Contrast semisimplicity over the rationals with the radical that
//! appears in characteristic 2 for every non-thin quasi-thin scheme.
//!
//! Over Q the trace form of the Terwilliger algebra is nondegenerate, so
//! the algebra is semisimple.  Over GF(2) the layer-0 elements touching a
//! two-valent relation span a nilpotent ideal; the example computes it,
//! checks the dimension formula (d+1)^2 - |A_1|^2, and prints the matrix
//! block sizes of the semisimple quotient.
//!
//! Run with: cargo run --example char2_radical

use twbench::catalog::{catalog, catalog_scheme};
use twbench::field::{PrimeField, Rationals};
use twbench::scheme::{classify, intersection_numbers, valencies, SchemeKind};
use twbench::subspace::Nilpotency;
use twbench::terwilliger::{
    class_data, generate, radical_char2, semisimplicity_check, structured_basis,
    SemisimpleVerdict,
};

fn main() {
    let gf2 = PrimeField::new(2).unwrap();
    println!(
        "{:<12} {:>5} {:>8} {:>6}  {:<14} {}",
        "name", "dim", "radical", "index", "quotient blocks", "over Q"
    );
    println!("{}", "-".repeat(72));
    for entry in catalog() {
        let s = catalog_scheme(entry.name).expect("catalog entry");
        let t = intersection_numbers(&s).expect("closed");
        let v = valencies(&s, &t).expect("regular");
        if classify(&v).kind == SchemeKind::Neither {
            continue;
        }
        let cd = class_data(&t, &v).expect("class structure");

        let alg2 = generate(&gf2, &s, 0).expect("closure");
        let basis2 = structured_basis(&gf2, &s, 0, &cd);
        let rad = radical_char2(&gf2, &alg2, &basis2, &v, &cd).expect("verified radical");
        let one_valent = cd.one_valent.len();
        let expected = (s.d() + 1) * (s.d() + 1) - one_valent * one_valent;
        assert_eq!(rad.radical.dim(), expected, "radical dimension formula");
        let index = match rad.nilpotency {
            Nilpotency::Nilpotent(t) => t,
            Nilpotency::NotNilpotent => unreachable!("verified nilpotent"),
        };

        let algq = generate(&Rationals, &s, 0).expect("closure");
        let flat: Vec<_> = algq
            .span
            .basis()
            .iter()
            .map(|row| twbench::matrix::Matrix::from_flat(Rationals, algq.n(), algq.n(), row))
            .collect();
        let verdict = match semisimplicity_check(&Rationals, &flat, None) {
            SemisimpleVerdict::Semisimple => "semisimple",
            SemisimpleVerdict::NotSemisimple(_) => "NOT semisimple",
            SemisimpleVerdict::Inconclusive => "inconclusive",
        };

        println!(
            "{:<12} {:>5} {:>8} {:>6}  {:<14} {}",
            entry.name,
            alg2.dim(),
            rad.radical.dim(),
            index,
            format!("{:?}", rad.block_sizes),
            verdict,
        );
    }
    println!();
    println!("A zero radical appears exactly at the thin schemes.  Whenever a");
    println!("two-valent class exists the nilpotency index is 3, and the");
    println!("quotient splits into one matrix block for the one-valent");
    println!("relations plus one block per class of two-valent relations.");
}
