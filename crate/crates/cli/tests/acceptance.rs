//! Acceptance suite: one test per shipping criterion, each printing a
//! pass/fail line through the standard harness.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use areps_core::chartable::{self, CharacterTable};
use areps_core::grading::{alternating_in_symmetric, builtin, Builtin, GradedGroup};
use areps_core::group::DEFAULT_MAX_ORDER;
use areps_core::real::{self, DysonType, Field};
use areps_core::{alternating, verify};

fn setup(which: Builtin) -> (GradedGroup, CharacterTable, CharacterTable) {
    let gg = builtin(which).unwrap();
    let tbl = chartable::character_table(gg.even_group()).unwrap();
    let tbl_hat = chartable::character_table(gg.ghat()).unwrap();
    (gg, tbl, tbl_hat)
}

const SEEDS: [(Builtin, DysonType); 11] = [
    (Builtin::I, DysonType::I),
    (Builtin::II, DysonType::II),
    (Builtin::III, DysonType::III),
    (Builtin::IV, DysonType::IV),
    (Builtin::V, DysonType::V),
    (Builtin::VI, DysonType::VI),
    (Builtin::VII, DysonType::VII),
    (Builtin::VIII, DysonType::VIII),
    (Builtin::IX, DysonType::IX),
    (Builtin::IXPauli, DysonType::IX),
    (Builtin::X, DysonType::X),
];

/// The groups every counting/orthogonality/idempotent criterion runs on:
/// all builtins plus A_n <= S_n for n in 3..=6.
fn criterion_groups() -> Vec<(String, GradedGroup)> {
    let mut out: Vec<(String, GradedGroup)> = Builtin::all()
        .into_iter()
        .map(|b| (b.token().to_string(), builtin(b).unwrap()))
        .collect();
    for n in 3..=6 {
        out.push((
            format!("A{n}<=S{n}"),
            alternating_in_symmetric(n, DEFAULT_MAX_ORDER).unwrap(),
        ));
    }
    out
}

#[test]
fn criterion_1_fs_proof_table() {
    let start = Instant::now();
    for (which, t) in SEEDS {
        let (gg, tbl, _) = setup(which);
        let row = real::find_type_row(&gg, &tbl, t)
            .unwrap()
            .unwrap_or_else(|| panic!("{which:?} lacks a row of type {t}"));
        let ind = real::indicators(&gg, &tbl, row).unwrap();
        assert_eq!(
            (ind.fs_real_induced, ind.fs_complex, ind.fs_real),
            t.indicator_profile(),
            "indicator triple on the seed row of {which:?}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget 5 s");
    println!("criterion 1 (FS-proof indicator triples on all builtins): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_dyson_classification() {
    let start = Instant::now();
    for (which, t) in SEEDS {
        let (gg, tbl, tbl_hat) = setup(which);
        let row = real::find_type_row(&gg, &tbl, t).unwrap().unwrap();
        assert_eq!(real::dyson_type(&gg, &tbl, row).unwrap(), t);
        // field_triple and block_counts check themselves against the
        // classification table and fail on any cell mismatch
        assert_eq!(
            real::field_triple(&gg, &tbl, &tbl_hat, row).unwrap(),
            t.fields(),
            "{which:?}"
        );
        assert_eq!(
            real::block_counts(&gg, &tbl, &tbl_hat, row).unwrap(),
            t.counts(),
            "{which:?}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}, budget 10 s");
    println!("criterion 2 (tenfold classification with fields and counts): PASS in {elapsed:?}");
}

#[test]
fn criterion_3_counting_theorems() {
    for (name, gg) in criterion_groups() {
        let tbl = chartable::character_table(gg.even_group()).unwrap();
        let at = real::a_character_table(&gg, &tbl).unwrap();
        let real_classes = gg.real_conjugacy_classes().len();
        let classes = tbl.classes().count();
        assert_eq!(at.rows.len(), real_classes, "{name}: A-rows vs Real classes");
        let report = real::centre_report(&gg, &tbl, &at).unwrap();
        assert_eq!(report.centre_dim, classes, "{name}: centre dimension");
        let complex_rows = at.rows.iter().filter(|r| r.field == Field::C).count();
        assert_eq!(
            complex_rows,
            classes - real_classes,
            "{name}: complex-type rows vs class excess"
        );
    }
    println!("criterion 3 (square/centre/excess counting theorems): PASS");
}

#[test]
fn criterion_4_orthogonality() {
    for (name, gg) in criterion_groups() {
        let tbl = chartable::character_table(gg.even_group()).unwrap();
        let at = real::a_character_table(&gg, &tbl).unwrap();
        // <theta_i, theta_j> = m_i delta_ij, all pairs
        real::hom_dimensions(&tbl, &at).unwrap_or_else(|e| panic!("{name}: {e}"));
        // column orthogonality at every pair of Real classes
        real::column_orthogonality(&gg, &tbl, &at).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    println!("criterion 4 (row and column orthogonality): PASS");
}

#[test]
fn criterion_5_square_root_oracle() {
    for (name, gg) in criterion_groups() {
        let tbl = chartable::character_table(gg.even_group()).unwrap();
        // brute-force count vs character formula, every even element
        for h in gg.even_elements().to_vec() {
            real::square_root_count(&gg, &tbl, h).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        // classwise identities, plus the set-difference form where the
        // indicators allow it
        real::square_root_identities(&gg, &tbl).unwrap_or_else(|e| panic!("{name}: {e}"));
        match real::closing_identity(&gg, &tbl) {
            Ok(()) => {}
            Err(areps_core::error::Error::NotApplicable { .. }) => {}
            Err(e) => panic!("{name}: closing identity: {e}"),
        }
    }
    // the closing identity must actually apply on the alternating gradings
    for n in 3..=6 {
        let gg = alternating_in_symmetric(n, DEFAULT_MAX_ORDER).unwrap();
        let tbl = chartable::character_table(gg.even_group()).unwrap();
        real::closing_identity(&gg, &tbl).unwrap_or_else(|e| panic!("A{n}: {e}"));
    }
    println!("criterion 5 (square-root counts vs brute force, closing identity): PASS");
}

#[test]
fn criterion_6_alternating_results() {
    let exceptional = [2u64, 3, 4, 7, 8, 12];
    for n in 2..=20u64 {
        let (has, _) = alternating::has_complex_type(n);
        assert_eq!(has, !exceptional.contains(&n), "has_complex_type({n})");
    }
    for n in 1..=8u64 {
        for t in alternating::real_classes_by_cycle_type(n).unwrap() {
            assert_eq!(
                alternating::class_self_inverse(&t.cycle_type).unwrap(),
                alternating::class_self_inverse_oracle(&t.cycle_type).unwrap(),
                "self-inverse criterion vs brute force on {}",
                t.cycle_type
            );
        }
    }
    for n in 3..=7u64 {
        let gg = alternating_in_symmetric(n as usize, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(
            alternating::real_class_count(n).unwrap(),
            gg.real_conjugacy_classes().len(),
            "Real-class count of A{n}"
        );
    }
    println!("criterion 6 (alternating-group combinatorics vs oracles): PASS");
}

#[test]
fn criterion_7_idempotents() {
    for (name, gg) in criterion_groups() {
        let tbl = chartable::character_table(gg.even_group()).unwrap();
        let at = real::a_character_table(&gg, &tbl).unwrap();
        // idempotency, the conjugation symmetry, pairwise orthogonality and
        // summing to 1 are all verified inside, erroring on any failure
        real::central_idempotents(&gg, &tbl, &at).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    println!("criterion 7 (central idempotents with all four properties): PASS");
}

#[test]
fn criterion_8_determinism_and_w_independence() {
    // recomputing with a different odd element must not change types or the
    // A-rows as class functions
    for which in [Builtin::III, Builtin::V, Builtin::VII, Builtin::IX, Builtin::X] {
        let gg = builtin(which).unwrap();
        let w_alt = gg.odd_elements().max().unwrap();
        let gg_alt = gg.with_chosen_odd(w_alt).unwrap();
        assert_ne!(gg.chosen_odd(), gg_alt.chosen_odd(), "{which:?}: test needs two odd elements");
        let tbl = chartable::character_table(gg.even_group()).unwrap();
        let types: Vec<DysonType> = (0..tbl.row_count())
            .map(|r| real::dyson_type(&gg, &tbl, r).unwrap())
            .collect();
        let types_alt: Vec<DysonType> = (0..tbl.row_count())
            .map(|r| real::dyson_type(&gg_alt, &tbl, r).unwrap())
            .collect();
        assert_eq!(types, types_alt, "{which:?}: types depend on the odd element");
        let rows = |g: &GradedGroup| -> BTreeSet<Vec<String>> {
            real::a_character_table(g, &tbl)
                .unwrap()
                .rows
                .iter()
                .map(|row| row.values.iter().map(|v| v.to_string()).collect())
                .collect()
        };
        assert_eq!(rows(&gg), rows(&gg_alt), "{which:?}: A-rows depend on the odd element");
    }

    // two full binary runs are byte-identical
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_areps"))
            .args(["blocks", "--graded", "X", "--format", "json"])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run(), run(), "repeated runs differ");
    let verify_run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_areps"))
            .args(["verify", "--graded", "all-builtins", "--format", "json"])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "verify exits 0");
        out.stdout
    };
    assert_eq!(verify_run(), verify_run(), "verify runs differ");
    println!("criterion 8 (determinism and independence of the odd element): PASS");
}

/// The verify battery itself stays green on every builtin and the small
/// alternating gradings; belt-and-braces over the per-criterion checks.
#[test]
fn verify_battery_is_green() {
    for (name, gg) in criterion_groups() {
        for check in verify::run_all(&gg) {
            assert!(!check.is_failure(), "{name}: {} failed: {}", check.name, check.detail);
        }
    }
    println!("verify battery: PASS");
}
