//! Run the whole analysis pipeline on one scheme and print the JSON
//! report — the same document the command-line tool emits.  The pipeline
//! validates the table, classifies it, builds the algebra and its
//! structured basis, checks the cell structure and heredity chain, and in
//! characteristic 2 continues through the radical, the corner algebra,
//! the star presentation, and the homological dimensions.
//!
//! Run with: cargo run --example full_report [-- scheme-name [field]]
//!
//! The field argument accepts "q" for the rationals or "p=<prime>".

use twbench::catalog::catalog_table;
use twbench::field::FieldSpec;
use twbench::report::{analyze, render_json};

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "affine-8".to_string());
    let field_arg = args.next().unwrap_or_else(|| "p=2".to_string());
    let spec = FieldSpec::parse(&field_arg).unwrap_or_else(|e| {
        eprintln!("bad field spec '{field_arg}': {e}");
        std::process::exit(3);
    });
    let table = catalog_table(&name).unwrap_or_else(|| {
        eprintln!("unknown catalog entry '{name}'");
        std::process::exit(3);
    });

    // base point 0, plus the check that every other base point gives the
    // same structure constants.
    match analyze(&table, &name, &spec, 0, true) {
        Ok(report) => print!("{}", render_json(&report)),
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(2);
        }
    }
}
