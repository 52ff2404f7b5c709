//! End-to-end analysis: run every verification stage on a relation table
//! over a chosen field and collect the outcome in a serializable report.

use crate::cellular::{
    build_cell_chain, cell_datum, certified_simple_count, verify_c3, verify_involution,
    verify_heredity,
};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::homology::{dominant_dimension, global_dimension};
use crate::matrix::Matrix;
use crate::presentation::{
    basic_algebra, cartan_matrix, lambda_algebra, verify_iso_psi, verify_radical,
};
use crate::scheme::{
    check_valency_identities, classify, intersection_numbers, valencies, validate_scheme,
    SchemeKind, Violation,
};
use crate::subspace::{Nilpotency, Subspace};
use crate::terwilliger::{
    basepoint_invariance, class_data, generate, multiplication_table, pair_sets,
    predicted_dimension, semisimplicity_check, radical_char2, structured_basis, verify_basis,
    SemisimpleVerdict,
};
use crate::verify::Counterexample;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Outcome of a full analysis run.  Optional fields are null when the
/// corresponding stage does not apply (for example the radical block is
/// populated only in characteristic 2, and everything past the dimension
/// is skipped when the scheme is not quasi-thin).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub scheme_id: String,
    pub n: usize,
    pub d: usize,
    pub valencies: Vec<usize>,
    pub classification: String,
    pub field: String,
    pub base_point: usize,
    pub dim_t: usize,
    pub r_size: Option<usize>,
    pub s_size: Option<usize>,
    pub r: Option<usize>,
    pub class_sizes: Option<Vec<usize>>,
    pub basis_verified: Option<bool>,
    pub mult_table_verified: Option<bool>,
    pub cellular_verified: Option<bool>,
    pub heredity_verified: Option<bool>,
    pub radical_dim: Option<usize>,
    pub nilpotency_index: Option<usize>,
    pub semisimple_verdict: String,
    pub basic_dim: Option<usize>,
    pub psi_verified: Option<bool>,
    pub cartan: Option<Vec<Vec<usize>>>,
    pub gldim: Option<usize>,
    pub domdim: Option<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error("not an association scheme:\n{}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("refuted: {0}")]
    Refuted(#[from] Counterexample),
    #[error("{0}")]
    Input(String),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| format!("  - {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Stable JSON rendering of a report (pretty-printed, trailing newline).
pub fn render_json(report: &AnalysisReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

/// Validate the table and run the full analysis over the requested field.
pub fn analyze(
    table: &[Vec<usize>],
    scheme_id: &str,
    spec: &FieldSpec,
    base_point: usize,
    all_basepoints: bool,
) -> Result<AnalysisReport, AnalyzeError> {
    match spec {
        FieldSpec::Prime(p) => {
            let field = PrimeField::new(*p).map_err(|e| AnalyzeError::Input(e.to_string()))?;
            analyze_over(&field, table, scheme_id, base_point, all_basepoints)
        }
        FieldSpec::Rationals => {
            analyze_over(&Rationals, table, scheme_id, base_point, all_basepoints)
        }
    }
}

fn verdict_string(verdict: &SemisimpleVerdict) -> &'static str {
    match verdict {
        SemisimpleVerdict::Semisimple => "semisimple",
        SemisimpleVerdict::NotSemisimple(_) => "not_semisimple",
        SemisimpleVerdict::Inconclusive => "inconclusive",
    }
}

pub fn analyze_over<F: Field>(
    field: &F,
    table: &[Vec<usize>],
    scheme_id: &str,
    base_point: usize,
    all_basepoints: bool,
) -> Result<AnalysisReport, AnalyzeError> {
    let scheme = validate_scheme(table).map_err(AnalyzeError::Invalid)?;
    if base_point >= scheme.n() {
        return Err(AnalyzeError::Input(format!(
            "base point {base_point} out of range for {} points",
            scheme.n()
        )));
    }
    let tensor = intersection_numbers(&scheme)?;
    let vals = valencies(&scheme, &tensor)?;
    check_valency_identities(&tensor, &vals)?;
    let classification = classify(&vals);
    let alg = generate(field, &scheme, base_point)?;

    let mut report = AnalysisReport {
        scheme_id: scheme_id.to_string(),
        n: scheme.n(),
        d: scheme.d(),
        valencies: (0..=scheme.d()).map(|i| vals.k(i)).collect(),
        classification: classification.kind.to_string(),
        field: field.label(),
        base_point,
        dim_t: alg.dim(),
        r_size: None,
        s_size: None,
        r: None,
        class_sizes: None,
        basis_verified: None,
        mult_table_verified: None,
        cellular_verified: None,
        heredity_verified: None,
        radical_dim: None,
        nilpotency_index: None,
        semisimple_verdict: String::new(),
        basic_dim: None,
        psi_verified: None,
        cartan: None,
        gldim: None,
        domdim: None,
        notes: Vec::new(),
    };

    if classification.kind == SchemeKind::Neither {
        let matrices: Vec<Matrix<F>> = alg
            .span
            .basis()
            .iter()
            .map(|row| Matrix::from_flat(field.clone(), alg.n(), alg.n(), row))
            .collect();
        let verdict = semisimplicity_check(field, &matrices, None);
        if let SemisimpleVerdict::NotSemisimple(w) = &verdict {
            report.notes.push(format!("nonzero nilpotent ideal: {w}"));
        }
        report.semisimple_verdict = verdict_string(&verdict).to_string();
        report.notes.push(
            "some valency exceeds 2, so only the generated dimension is reported".to_string(),
        );
        return Ok(report);
    }

    let pairs = pair_sets(&tensor, &vals)?;
    let cd = class_data(&tensor, &vals)?;
    let predicted = predicted_dimension(scheme.d(), &pairs);
    if predicted != alg.dim() {
        return Err(AnalyzeError::Refuted(Counterexample::new(
            "dimension bookkeeping",
            format!("pair counts predict {predicted}, closure has {}", alg.dim()),
        )));
    }
    report.r_size = Some(pairs.product_pairs.len());
    report.s_size = Some(pairs.bad_pairs.len());
    report.r = Some(cd.r());
    report.class_sizes = Some(cd.classes.iter().map(|c| c.len()).collect());

    let basis = structured_basis(field, &scheme, base_point, &cd);
    verify_basis(&alg, &basis)?;
    report.basis_verified = Some(true);
    let mult = multiplication_table(field, &basis, &vals)?;
    report.mult_table_verified = Some(true);
    if all_basepoints {
        basepoint_invariance(field, &scheme, &vals, &cd)?;
        report
            .notes
            .push("identical structure constants at every base point".to_string());
    }

    let datum = cell_datum(scheme.d(), &basis);
    verify_involution(&basis)?;
    let reps = verify_c3(field, &basis, &datum, &vals)?;
    let chain = build_cell_chain(field, &alg, &basis)?;
    report.cellular_verified = Some(true);

    if field.characteristic() == 2 {
        let rad = radical_char2(field, &alg, &basis, &vals, &cd)?;
        report.radical_dim = Some(rad.radical.dim());
        report.nilpotency_index = Some(match rad.nilpotency {
            Nilpotency::Nilpotent(t) => t,
            Nilpotency::NotNilpotent => {
                return Err(AnalyzeError::Refuted(Counterexample::new(
                    "radical",
                    "the candidate radical is not nilpotent".to_string(),
                )))
            }
        });
        let verdict =
            semisimplicity_check(field, &basis.matrices, Some(rad.radical.dim()));
        report.semisimple_verdict = verdict_string(&verdict).to_string();
        let simples = certified_simple_count(field, &alg, &basis, &datum, &reps, Some(&rad))?;
        verify_heredity(field, &alg, &chain, &rad.radical, simples)?;
        report.heredity_verified = Some(true);

        let star = basic_algebra(field, &alg, &basis, &mult, &vals, &cd)?;
        report.basic_dim = Some(star.pres.dim());
        let lambda = lambda_algebra(field, cd.r());
        verify_iso_psi(&lambda, &star)?;
        report.psi_verified = Some(true);
        let idems = star.idempotents();
        let vrad = verify_radical(&star.pres, &star.radical_candidate(), &idems)?;
        report.cartan = Some(cartan_matrix(&star.pres, &idems));
        report.gldim = Some(global_dimension(&star.pres, &idems, &vrad, 10)?);
        report.domdim = Some(dominant_dimension(&star.pres, &idems, &vrad, 10)?.to_string());
        report.notes.push(format!(
            "homological dimensions computed on the corner algebra, a star algebra with {} arms",
            cd.r()
        ));
    } else {
        let verdict = semisimplicity_check(field, &basis.matrices, None);
        report.semisimple_verdict = verdict_string(&verdict).to_string();
        match verdict {
            SemisimpleVerdict::Semisimple => {
                let simples =
                    certified_simple_count(field, &alg, &basis, &datum, &reps, None)?;
                let zero_radical = Subspace::zero(field.clone(), alg.n() * alg.n());
                verify_heredity(field, &alg, &chain, &zero_radical, simples)?;
                report.heredity_verified = Some(true);
                report.gldim = Some(0);
                report.domdim = Some("infinite".to_string());
                report
                    .notes
                    .push("semisimple, so projectives and injectives coincide".to_string());
            }
            SemisimpleVerdict::NotSemisimple(w) => {
                report.notes.push(format!("nonzero nilpotent ideal: {w}"));
            }
            SemisimpleVerdict::Inconclusive => {
                report.notes.push(
                    "degenerate trace form in odd characteristic: semisimplicity undecided, \
                     homological dimensions omitted"
                        .to_string(),
                );
            }
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_table;
    use crate::field::FieldSpec;

    #[test]
    fn full_report_for_the_quadrilateral_over_gf2() {
        let table = catalog_table("cycle-4").unwrap();
        let report = analyze(&table, "cycle-4", &FieldSpec::Prime(2), 0, true).unwrap();
        assert_eq!(report.n, 4);
        assert_eq!(report.d, 2);
        assert_eq!(report.valencies, vec![1, 2, 1]);
        assert_eq!(report.classification, "quasi-thin");
        assert_eq!(report.dim_t, 10);
        assert_eq!(report.r_size, Some(1));
        assert_eq!(report.s_size, Some(0));
        assert_eq!(report.r, Some(1));
        assert_eq!(report.class_sizes, Some(vec![1]));
        assert_eq!(report.basis_verified, Some(true));
        assert_eq!(report.mult_table_verified, Some(true));
        assert_eq!(report.cellular_verified, Some(true));
        assert_eq!(report.heredity_verified, Some(true));
        assert_eq!(report.radical_dim, Some(5));
        assert_eq!(report.nilpotency_index, Some(3));
        assert_eq!(report.semisimple_verdict, "not_semisimple");
        assert_eq!(report.basic_dim, Some(5));
        assert_eq!(report.psi_verified, Some(true));
        assert_eq!(report.cartan, Some(vec![vec![1, 1], vec![1, 2]]));
        assert_eq!(report.gldim, Some(2));
        assert_eq!(report.domdim, Some("2".to_string()));
    }

    #[test]
    fn rational_report_for_the_quadrilateral_is_semisimple() {
        let table = catalog_table("cycle-4").unwrap();
        let report = analyze(&table, "cycle-4", &FieldSpec::Rationals, 0, false).unwrap();
        assert_eq!(report.field, "Q");
        assert_eq!(report.semisimple_verdict, "semisimple");
        assert_eq!(report.radical_dim, None);
        assert_eq!(report.heredity_verified, Some(true));
        assert_eq!(report.gldim, Some(0));
        assert_eq!(report.domdim, Some("infinite".to_string()));
        assert_eq!(report.cartan, None);
    }

    #[test]
    fn thin_scheme_report_in_characteristic_2() {
        let table = catalog_table("thin-C3").unwrap();
        let report = analyze(&table, "thin-C3", &FieldSpec::Prime(2), 0, false).unwrap();
        assert_eq!(report.classification, "thin");
        assert_eq!(report.dim_t, 9);
        assert_eq!(report.r, Some(0));
        assert_eq!(report.radical_dim, Some(0));
        assert_eq!(report.nilpotency_index, Some(1));
        assert_eq!(report.semisimple_verdict, "semisimple");
        assert_eq!(report.basic_dim, Some(1));
        assert_eq!(report.psi_verified, Some(true));
        assert_eq!(report.gldim, Some(0));
        assert_eq!(report.domdim, Some("infinite".to_string()));
    }

    #[test]
    fn wide_valency_schemes_stop_after_the_dimension() {
        let table = vec![
            vec![0, 1, 1, 1],
            vec![1, 0, 1, 1],
            vec![1, 1, 0, 1],
            vec![1, 1, 1, 0],
        ];
        for spec in [FieldSpec::Prime(2), FieldSpec::Rationals] {
            let report = analyze(&table, "complete-4", &spec, 0, false).unwrap();
            assert_eq!(report.classification, "neither");
            assert_eq!(report.dim_t, 5, "over {:?}", spec);
            assert_eq!(report.r_size, None);
            assert_eq!(report.basis_verified, None);
            assert!(report.notes.iter().any(|n| n.contains("valency")));
        }
    }

    #[test]
    fn invalid_tables_are_rejected_with_witnesses() {
        let table = vec![vec![0, 1], vec![2, 0]];
        let err = analyze(&table, "broken", &FieldSpec::Rationals, 0, false).unwrap_err();
        match err {
            AnalyzeError::Invalid(violations) => assert!(!violations.is_empty()),
            other => panic!("expected a validity failure, got {other}"),
        }
    }

    #[test]
    fn json_rendering_round_trips() {
        let table = catalog_table("cycle-6").unwrap();
        let report = analyze(&table, "cycle-6", &FieldSpec::Prime(2), 0, false).unwrap();
        let text = render_json(&report);
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(text, render_json(&back), "rendering is stable");
    }

    #[test]
    fn out_of_range_base_point_is_an_input_error() {
        let table = catalog_table("cycle-4").unwrap();
        let err = analyze(&table, "cycle-4", &FieldSpec::Rationals, 9, false).unwrap_err();
        assert!(matches!(err, AnalyzeError::Input(_)));
    }
}
