//! Validate a relation table, either from a file or from a built-in demo
//! that corrupts a good table to show what the axiom checker reports.
//!
//! Run with: cargo run --example validate_scheme [-- path/to/table.scheme]
//!
//! The text format is one row per line, whitespace-separated relation
//! indices, with `#` comments.  Entry (x, y) names the relation containing
//! the ordered pair.

use twbench::catalog::{catalog_table, parse_scheme_file, render_scheme};
use twbench::scheme::validate_scheme;

fn report(label: &str, table: &[Vec<usize>]) {
    match validate_scheme(table) {
        Ok(s) => println!(
            "{label}: valid association scheme with {} points and {} classes",
            s.n(),
            s.d()
        ),
        Err(violations) => {
            println!("{label}: NOT an association scheme");
            for v in violations {
                println!("  - {v}");
            }
        }
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable input file");
        let table = match parse_scheme_file(&text) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("cannot parse {path}: {e}");
                std::process::exit(3);
            }
        };
        report(&path, &table);
        return;
    }

    // Demo: the 6-cycle distance table is a scheme ...
    let good = catalog_table("cycle-6").expect("catalog entry");
    println!("distance table of the 6-cycle:");
    let scheme = validate_scheme(&good).expect("valid");
    print!("{}", render_scheme(&scheme));
    report("original", &good);

    // ... and single-cell corruptions are caught with a witness.
    println!();
    let mut broken = good.clone();
    broken[2][5] = 1; // true distance is 3
    report("after setting entry (2,5) to relation 1", &broken);

    let mut asymmetric = good;
    asymmetric[0][1] = 2; // pairs (0,1) and (1,0) now sit in non-paired relations
    report("after setting entry (0,1) to relation 2", &asymmetric);
}
