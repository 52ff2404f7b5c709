//! Command-line front end: validate relation tables, run the full
//! verification pipeline over exact fields, batch the catalog, and print
//! the built-in schemes.
//!
//! Exit codes: 0 success, 2 the table is not an association scheme,
//! 3 input could not be read or parsed, 4 a verified claim was refuted.

use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use twbench::catalog::{catalog, catalog_table, parse_scheme_file, render_scheme};
use twbench::field::FieldSpec;
use twbench::report::{analyze, render_json, AnalysisReport, AnalyzeError};
use twbench::scheme::validate_scheme;

#[derive(Parser)]
#[command(
    name = "twbench",
    version,
    about = "Exact-arithmetic workbench for Terwilliger algebras of association schemes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a relation table satisfies the scheme axioms.
    Validate {
        /// A file path, or catalog:<name> for a built-in scheme.
        source: String,
    },
    /// Run the verification pipeline on one scheme over one field.
    Analyze {
        /// A file path, or catalog:<name> for a built-in scheme.
        source: String,
        /// Field to work over: q for the rationals, p=<prime> otherwise.
        #[arg(long, default_value = "p=2")]
        field: String,
        /// Base point (row index) for the diagonal idempotents.
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
        /// Additionally verify that every base point yields the same
        /// structure constants.
        #[arg(long)]
        all_basepoints: bool,
        /// Emit the report as JSON on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Analyze several schemes over several fields.
    Batch {
        /// File paths or catalog:<name> entries; defaults to the whole
        /// catalog.
        sources: Vec<String>,
        /// Comma-separated field list; defaults to p=2,p=3,q.
        #[arg(long, value_delimiter = ',')]
        fields: Option<Vec<String>>,
        /// Write one JSON report per (scheme, field) into this directory.
        #[arg(long)]
        json_dir: Option<PathBuf>,
    },
    /// List built-in schemes, or print one as a relation table.
    Catalog {
        /// Print the table of this entry instead of the listing.
        name: Option<String>,
        /// List the available entries (the default when no name is given).
        #[arg(long)]
        list: bool,
    },
}

const EXIT_INVALID: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_REFUTED: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: String) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message,
        }
    }
}

fn load_table(source: &str) -> Result<(String, Vec<Vec<usize>>), Failure> {
    if let Some(name) = source.strip_prefix("catalog:") {
        let table = catalog_table(name).ok_or_else(|| {
            Failure::input(format!(
                "unknown catalog entry '{name}' (try 'twbench catalog --list')"
            ))
        })?;
        return Ok((name.to_string(), table));
    }
    let path = Path::new(source);
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {source}: {e}")))?;
    let table = parse_scheme_file(&text)
        .map_err(|e| Failure::input(format!("cannot parse {source}: {e}")))?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| source.to_string());
    Ok((id, table))
}

fn run_validate(source: &str) -> Result<(), Failure> {
    let (id, table) = load_table(source)?;
    match validate_scheme(&table) {
        Ok(s) => {
            println!("{id}: valid association scheme with {} points and {} classes", s.n(), s.d());
            Ok(())
        }
        Err(violations) => {
            let mut message = format!("{id}: not an association scheme");
            for v in violations {
                message.push_str(&format!("\n  - {v}"));
            }
            Err(Failure {
                code: EXIT_INVALID,
                message,
            })
        }
    }
}

fn analyze_failure(id: &str, err: AnalyzeError) -> Failure {
    match err {
        AnalyzeError::Invalid(_) => Failure {
            code: EXIT_INVALID,
            message: format!("{id}: {err}"),
        },
        AnalyzeError::Refuted(_) => Failure {
            code: EXIT_REFUTED,
            message: format!("{id}: {err}"),
        },
        AnalyzeError::Input(_) => Failure::input(format!("{id}: {err}")),
    }
}

fn print_summary(report: &AnalysisReport) {
    println!(
        "{} over {}: {} scheme on {} points with {} classes",
        report.scheme_id, report.field, report.classification, report.n, report.d
    );
    println!("  algebra dimension {} at base point {}", report.dim_t, report.base_point);
    if let (Some(rs), Some(ss), Some(r)) = (report.r_size, report.s_size, report.r) {
        println!("  pair sets: {rs} product pairs, {ss} chained pairs, {r} classes");
    }
    for (flag, label) in [
        (report.basis_verified, "structured basis"),
        (report.mult_table_verified, "multiplication table"),
        (report.cellular_verified, "cellular structure"),
        (report.heredity_verified, "heredity chain"),
    ] {
        if flag == Some(true) {
            println!("  verified: {label}");
        }
    }
    if let Some(dim) = report.radical_dim {
        println!(
            "  radical dimension {dim}, nilpotency index {}",
            report.nilpotency_index.unwrap_or(0)
        );
    }
    println!("  semisimplicity: {}", report.semisimple_verdict);
    if let Some(dim) = report.basic_dim {
        println!(
            "  corner algebra dimension {dim} (star shape verified: {})",
            report.psi_verified == Some(true)
        );
    }
    if let Some(g) = report.gldim {
        println!(
            "  global dimension {g}, dominant dimension {}",
            report.domdim.as_deref().unwrap_or("unknown")
        );
    }
    for note in &report.notes {
        println!("  note: {note}");
    }
}

fn run_analyze(
    source: &str,
    field: &str,
    basepoint: usize,
    all_basepoints: bool,
    json: bool,
) -> Result<(), Failure> {
    let (id, table) = load_table(source)?;
    let spec = FieldSpec::parse(field)
        .map_err(|e| Failure::input(format!("bad field spec '{field}': {e}")))?;
    let report = analyze(&table, &id, &spec, basepoint, all_basepoints)
        .map_err(|e| analyze_failure(&id, e))?;
    if json {
        print!("{}", render_json(&report));
    } else {
        print_summary(&report);
    }
    Ok(())
}

fn atomic_write(dir: &Path, file_name: &str, contents: &str) -> Result<(), Failure> {
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| Failure::input(format!("cannot create a file in {}: {e}", dir.display())))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| Failure::input(format!("cannot write {file_name}: {e}")))?;
    tmp.persist(dir.join(file_name))
        .map_err(|e| Failure::input(format!("cannot finish writing {file_name}: {e}")))?;
    Ok(())
}

fn run_batch(
    sources: &[String],
    fields: Option<&[String]>,
    json_dir: Option<&Path>,
) -> Result<(), Failure> {
    let default_fields = ["p=2".to_string(), "p=3".to_string(), "q".to_string()];
    let field_names: &[String] = match fields {
        Some(list) if list.is_empty() => {
            return Err(Failure::input("--fields was given but empty".to_string()))
        }
        Some(list) => list,
        None => &default_fields,
    };
    let mut specs = Vec::new();
    for name in field_names {
        let spec = FieldSpec::parse(name)
            .map_err(|e| Failure::input(format!("bad field spec '{name}': {e}")))?;
        specs.push(spec);
    }
    let catalog_sources: Vec<String>;
    let source_list: &[String] = if sources.is_empty() {
        catalog_sources = catalog()
            .iter()
            .map(|e| format!("catalog:{}", e.name))
            .collect();
        &catalog_sources
    } else {
        sources
    };
    if let Some(dir) = json_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| Failure::input(format!("cannot create {}: {e}", dir.display())))?;
    }
    let mut worst: Option<Failure> = None;
    for source in source_list {
        let (id, table) = load_table(source)?;
        for spec in &specs {
            match analyze(&table, &id, spec, 0, false) {
                Ok(report) => {
                    println!(
                        "{id} [{}]: ok ({}, dimension {})",
                        spec.label(),
                        report.classification,
                        report.dim_t
                    );
                    if let Some(dir) = json_dir {
                        let file_name = format!("{id}__{}.json", spec.slug());
                        atomic_write(dir, &file_name, &render_json(&report))?;
                    }
                }
                Err(err) => {
                    let failure = analyze_failure(&id, err);
                    eprintln!("{id} [{}]: {}", spec.label(), failure.message);
                    worst = match worst {
                        Some(w) if w.code >= failure.code => Some(w),
                        _ => Some(failure),
                    };
                }
            }
        }
    }
    match worst {
        Some(failure) => Err(Failure {
            code: failure.code,
            message: "batch finished with failures".to_string(),
        }),
        None => Ok(()),
    }
}

fn run_catalog(name: Option<&str>, list: bool) -> Result<(), Failure> {
    match (name, list) {
        (Some(n), false) => {
            let table = catalog_table(n).ok_or_else(|| {
                Failure::input(format!("unknown catalog entry '{n}'"))
            })?;
            let scheme = validate_scheme(&table).expect("catalog entries are valid");
            print!("{}", render_scheme(&scheme));
            Ok(())
        }
        _ => {
            for entry in catalog() {
                println!("{:<12} {}", entry.name, entry.description);
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate { source } => run_validate(source),
        Command::Analyze {
            source,
            field,
            basepoint,
            all_basepoints,
            json,
        } => run_analyze(source, field, *basepoint, *all_basepoints, *json),
        Command::Batch {
            sources,
            fields,
            json_dir,
        } => run_batch(sources, fields.as_deref(), json_dir.as_deref()),
        Command::Catalog { name, list } => run_catalog(name.as_deref(), *list),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
