//! Exhibit the cell structure of the Terwilliger algebra of a quasi-thin
//! scheme: the layer datum, the transpose involution, the straightening
//! rule with its layer representations, the ideal chain, and the heredity
//! certificates that upgrade the chain to a quasi-hereditary one.
//!
//! Run with: cargo run --example cellular_structure [-- scheme-name]

use twbench::catalog::catalog_scheme;
use twbench::cellular::{
    build_cell_chain, cell_datum, cell_rep_kernel_dim, certified_simple_count, verify_c3,
    verify_involution, verify_heredity,
};
use twbench::field::PrimeField;
use twbench::scheme::{intersection_numbers, valencies};
use twbench::subspace::Subspace;
use twbench::terwilliger::{class_data, generate, radical_char2, structured_basis};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "cycle-6".to_string());
    let s = catalog_scheme(&name).unwrap_or_else(|| {
        eprintln!("unknown catalog entry '{name}'");
        std::process::exit(3);
    });
    let t = intersection_numbers(&s).expect("closed");
    let v = valencies(&s, &t).expect("regular");
    let cd = class_data(&t, &v).expect("quasi-thin class structure");
    let gf2 = PrimeField::new(2).unwrap();
    let x = 0;

    let alg = generate(&gf2, &s, x).expect("closure");
    let basis = structured_basis(&gf2, &s, x, &cd);
    let datum = cell_datum(s.d(), &basis);
    println!("{name} over GF(2) at base point {x}: dimension {}", alg.dim());
    println!("cell layers M(0)..M({}):", datum.r());
    for (l, members) in datum.index_sets.iter().enumerate() {
        println!("  M({l}) = {:?}  ({} elements)", members, members.len());
    }
    assert_eq!(datum.square_sum(), alg.dim());
    println!("sum of |M(l)|^2 = {} = algebra dimension", datum.square_sum());
    println!();

    verify_involution(&basis).expect("transpose swaps the paired indices");
    println!("involution: transposition fixes each layer and swaps the two indices");

    let reps = verify_c3(&gf2, &basis, &datum, &v).expect("straightening rule");
    println!("straightening: products against a layer stay in the layer's column");
    println!("space modulo lower layers, with coefficients independent of the column");
    let kernel = cell_rep_kernel_dim(&gf2, &basis, &datum, &reps);
    println!("joint kernel of the layer representations: dimension {kernel}");
    println!();

    let chain = build_cell_chain(&gf2, &alg, &basis).expect("ideal chain");
    println!(
        "ideal chain 0 = J_0 < J_1 < ... < J_{} = algebra, dims {:?}",
        chain.ideals.len() - 1,
        chain.ideals.iter().map(|j| j.dim()).collect::<Vec<_>>()
    );

    let rad = radical_char2(&gf2, &alg, &basis, &v, &cd).expect("verified radical");
    let simple_count =
        certified_simple_count(&gf2, &alg, &basis, &datum, &reps, Some(&rad))
            .expect("certified count");
    println!("simple module classes: {simple_count} (one per layer)");

    let radical_space: &Subspace<_> = &rad.radical;
    verify_heredity(&gf2, &alg, &chain, radical_space, simple_count)
        .expect("heredity certificates");
    println!("heredity: each step is idempotent modulo the previous ideal and");
    println!("kills the quotient radical, so the chain is a heredity chain and");
    println!("the algebra is quasi-hereditary even where it is not semisimple.");
}
