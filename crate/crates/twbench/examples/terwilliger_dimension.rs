//! Generate the Terwilliger algebra of a catalog scheme over several exact
//! fields and compare the computed dimension with the closed-form count
//! |R| + |S| + (d+1)^2 read off from the intersection numbers.
//!
//! Run with: cargo run --example terwilliger_dimension [-- scheme-name]

use twbench::catalog::catalog_scheme;
use twbench::field::{Field, PrimeField, Rationals};
use twbench::scheme::{classify, intersection_numbers, valencies, SchemeKind};
use twbench::terwilliger::{generate, pair_sets, predicted_dimension};

fn dims_over<F: Field>(field: &F, name: &str) -> Vec<usize> {
    let s = catalog_scheme(name).expect("known scheme");
    (0..s.n())
        .map(|x| generate(field, &s, x).expect("closure is transpose-stable").dim())
        .collect()
}

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "cycle-6".to_string());
    let s = catalog_scheme(&name).unwrap_or_else(|| {
        eprintln!("unknown catalog entry '{name}'");
        std::process::exit(3);
    });
    let t = intersection_numbers(&s).expect("closed");
    let v = valencies(&s, &t).expect("regular");
    let class = classify(&v);
    println!(
        "{name}: {} points, {} classes, {} (valencies {:?})",
        s.n(),
        s.d(),
        class.kind,
        v.all()
    );

    if class.kind == SchemeKind::Neither {
        println!("a valency exceeds 2, so the closed-form dimension does not apply");
        return;
    }
    let pairs = pair_sets(&t, &v).expect("pair sets well-defined");
    let predicted = predicted_dimension(s.d(), &pairs);
    println!(
        "pair counts: |R| = {}, |S| = {}, (d+1)^2 = {}  =>  predicted dimension {}",
        pairs.product_pairs.len(),
        pairs.bad_pairs.len(),
        (s.d() + 1) * (s.d() + 1),
        predicted
    );

    let gf2 = PrimeField::new(2).unwrap();
    let gf3 = PrimeField::new(3).unwrap();
    for (label, dims) in [
        ("GF(2)", dims_over(&gf2, &name)),
        ("GF(3)", dims_over(&gf3, &name)),
        ("Q    ", dims_over(&Rationals, &name)),
    ] {
        let uniform = dims.iter().all(|&d| d == predicted);
        println!(
            "over {label}: dimensions at base points 0..{} are {:?}  ({})",
            s.n() - 1,
            dims,
            if uniform { "all match the prediction" } else { "MISMATCH" }
        );
    }
    println!();
    println!("The dimension is the same at every base point and over every");
    println!("field: the algebra is spanned by 0/1 matrices determined by");
    println!("the combinatorics alone, so the base field never matters.");
}
