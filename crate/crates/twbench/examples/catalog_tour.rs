//! Walk the built-in catalog: validate every entry, classify it by
//! valency, and print its basic combinatorial data.
//!
//! Run with: cargo run --example catalog_tour

use twbench::catalog::{catalog, catalog_table};
use twbench::scheme::{classify, intersection_numbers, valencies, validate_scheme};

fn main() {
    println!("{:<12} {:>4} {:>3}  {:<11} {:<18} description", "name", "n", "d", "kind", "valencies");
    println!("{}", "-".repeat(78));
    for entry in catalog() {
        let table = catalog_table(entry.name).expect("catalog entries resolve");
        let scheme = validate_scheme(&table).expect("catalog entries are valid schemes");
        let tensor = intersection_numbers(&scheme).expect("closed under composition");
        let vals = valencies(&scheme, &tensor).expect("constant row counts");
        let class = classify(&vals);
        println!(
            "{:<12} {:>4} {:>3}  {:<11} {:<18} {}",
            entry.name,
            scheme.n(),
            scheme.d(),
            class.kind.to_string(),
            format!("{:?}", vals.all()),
            entry.description,
        );
    }
    println!();
    println!("All entries validated: the relation axioms, the composition");
    println!("closure, and the row-count regularity hold for every table.");
}
