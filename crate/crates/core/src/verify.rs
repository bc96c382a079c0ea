//! The verification battery: every theorem-check in the Real theory run
//! against one graded group, each reported as pass/fail/skip instead of
//! aborting on first error.

use crate::chartable::{self, CharacterTable};
use crate::error::Error;
use crate::grading::GradedGroup;
use crate::real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed,
    /// Hypothesis not met (quaternionic rows present, shortcut inapplicable).
    Skipped,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    pub fn is_failure(&self) -> bool {
        self.status == CheckStatus::Failed
    }

    pub fn status_token(&self) -> &'static str {
        match self.status {
            CheckStatus::Passed => "pass",
            CheckStatus::Failed => "FAIL",
            CheckStatus::Skipped => "skip",
        }
    }
}

fn outcome(name: &'static str, result: Result<String, Error>) -> CheckResult {
    match result {
        Ok(detail) => CheckResult {
            name,
            status: CheckStatus::Passed,
            detail,
        },
        Err(Error::NotApplicable { reason }) | Err(Error::HypothesisFailed { reason, .. }) => {
            CheckResult {
                name,
                status: CheckStatus::Skipped,
                detail: reason,
            }
        }
        Err(e) => CheckResult {
            name,
            status: CheckStatus::Failed,
            detail: e.to_string(),
        },
    }
}

/// Run every check against one graded group. Table construction failures
/// surface as a single failed "character-tables" entry.
pub fn run_all(gg: &GradedGroup) -> Vec<CheckResult> {
    let mut out = Vec::new();

    out.push(outcome("real-class-stabilizers", {
        let n = gg.ghat().order() as u64;
        let classes = gg.real_conjugacy_classes();
        if classes
            .iter()
            .all(|c| c.members.len() as u64 * c.real_stabilizer_order == n)
        {
            Ok(format!("{} Real classes", classes.len()))
        } else {
            Err(Error::TheoremViolation {
                reason: "members times stabiliser misses the group order".into(),
            })
        }
    }));

    out.push(outcome(
        "self-inverse-shortcut",
        gg.self_inverse_shortcut().and_then(|short| {
            if short == gg.real_conjugacy_classes() {
                Ok(String::new())
            } else {
                Err(Error::TheoremViolation {
                    reason: "shortcut classes differ from the orbit computation".into(),
                })
            }
        }),
    ));

    let (tbl, tbl_hat) = match (
        chartable::character_table(gg.even_group()),
        chartable::character_table(gg.ghat()),
    ) {
        (Ok(t), Ok(h)) => {
            out.push(outcome(
                "character-tables",
                Ok(format!("{} + {} rows", t.row_count(), h.row_count())),
            ));
            (t, h)
        }
        (a, b) => {
            out.push(outcome(
                "character-tables",
                Err(a.err().or(b.err()).expect("one side failed")),
            ));
            return out;
        }
    };

    out.push(outcome("row-orthogonality", row_orthogonality(&tbl)));

    out.push(outcome("fs-relation", {
        (0..tbl.row_count())
            .try_for_each(|row| real::fs_relation_check(gg, &tbl, row).map(|_| ()))
            .map(|()| String::new())
    }));

    out.push(outcome("induced-indicator", {
        (0..tbl.row_count())
            .try_for_each(|row| real::induced_indicator_check(gg, &tbl, &tbl_hat, row))
            .map(|()| String::new())
    }));

    out.push(outcome("dyson-classification", {
        (0..tbl.row_count())
            .try_for_each(|row| {
                real::dyson_type(gg, &tbl, row)?;
                real::field_triple(gg, &tbl, &tbl_hat, row)?;
                real::block_counts(gg, &tbl, &tbl_hat, row)?;
                Ok(())
            })
            .and_then(|()| {
                let blocks = real::blocks(gg, &tbl, &tbl_hat)?;
                Ok(format!("{} blocks", blocks.len()))
            })
    }));

    let at = match real::a_character_table(gg, &tbl) {
        Ok(at) => {
            out.push(outcome(
                "a-table-square-theorem",
                Ok(format!("{} rows", at.rows.len())),
            ));
            at
        }
        Err(e) => {
            out.push(outcome("a-table-square-theorem", Err(e)));
            return out;
        }
    };

    out.push(outcome(
        "hom-dimensions",
        real::hom_dimensions(&tbl, &at).map(|_| String::new()),
    ));
    out.push(outcome(
        "regular-decomposition",
        real::regular_decomposition(gg, &tbl, &at).map(|b| format!("{b:?}")),
    ));
    out.push(outcome(
        "centre-dimension",
        real::centre_report(gg, &tbl, &at).map(|r| {
            format!(
                "r={} s={} t={} dim={}",
                r.r, r.s, r.t, r.centre_dim
            )
        }),
    ));
    out.push(outcome(
        "column-orthogonality",
        real::column_orthogonality(gg, &tbl, &at).map(|()| String::new()),
    ));
    out.push(outcome(
        "central-idempotents",
        real::central_idempotents(gg, &tbl, &at).map(|e| format!("{} idempotents", e.len())),
    ));
    out.push(outcome(
        "square-root-identities",
        real::square_root_identities(gg, &tbl).map(|_| String::new()),
    ));
    out.push(outcome("square-root-oracle", {
        gg.even_elements()
            .to_vec()
            .into_iter()
            .try_for_each(|h| real::square_root_count(gg, &tbl, h).map(|_| ()))
            .map(|()| String::new())
    }));
    out.push(outcome(
        "max-at-identity",
        real::max_at_identity_check(gg, &tbl).and_then(|ok| {
            if ok {
                Ok(String::new())
            } else {
                Err(Error::TheoremViolation {
                    reason: "square-root count exceeds its value at the identity".into(),
                })
            }
        }),
    ));
    out.push(outcome(
        "closing-identity",
        real::closing_identity(gg, &tbl).map(|()| String::new()),
    ));
    out.push(outcome(
        "algebra-decomposition",
        real::algebra_decomposition(gg, &tbl, &at).map(|r| {
            format!("real dimension {}", r.total_real_dim)
        }),
    ));
    out.push(outcome(
        "simplicity-criterion",
        at.rows
            .iter()
            .enumerate()
            .try_for_each(|(j, row)| {
                if real::is_simple_a_character(gg, &tbl, &row.values)? {
                    Ok(())
                } else {
                    Err(Error::TheoremViolation {
                        reason: format!("A-row {j} fails the simplicity criterion"),
                    })
                }
            })
            .map(|()| String::new()),
    ));
    out.push(outcome(
        "quaternionic-absence",
        crate::alternating::quaternionic_absence_check(gg).and_then(|ok| {
            if ok {
                Ok(String::new())
            } else {
                Err(Error::TheoremViolation {
                    reason: "totally orthogonal grading carries a quaternionic module".into(),
                })
            }
        }),
    ));

    out
}

fn row_orthogonality(tbl: &CharacterTable) -> Result<String, Error> {
    for i in 0..tbl.row_count() {
        for j in 0..tbl.row_count() {
            let ip = tbl.inner_product(tbl.row(i), tbl.row(j)).to_integer()?;
            if ip != i64::from(i == j) {
                return Err(Error::TheoremViolation {
                    reason: format!("<X{i}, X{j}> = {ip}"),
                });
            }
        }
    }
    Ok(String::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{alternating_in_symmetric, builtin, Builtin};
    use crate::group::DEFAULT_MAX_ORDER;

    #[test]
    fn all_builtins_verify() {
        for which in Builtin::all() {
            let gg = builtin(which).unwrap();
            let results = run_all(&gg);
            for r in &results {
                assert!(
                    !r.is_failure(),
                    "{}: {} failed: {}",
                    which.token(),
                    r.name,
                    r.detail
                );
            }
            // every battery runs the full check list
            assert!(results.len() >= 18, "{}", which.token());
        }
    }

    #[test]
    fn alternating_gradings_verify() {
        for n in 3..=5 {
            let gg = alternating_in_symmetric(n, DEFAULT_MAX_ORDER).unwrap();
            for r in run_all(&gg) {
                assert!(!r.is_failure(), "A{n}: {} failed: {}", r.name, r.detail);
            }
        }
    }

    #[test]
    fn skips_are_reported_not_failed() {
        // II has quaternionic rows: max-at-identity and closing-identity skip
        let gg = builtin(Builtin::II).unwrap();
        let results = run_all(&gg);
        let max = results.iter().find(|r| r.name == "max-at-identity").unwrap();
        assert_eq!(max.status, CheckStatus::Skipped);
        let closing = results.iter().find(|r| r.name == "closing-identity").unwrap();
        assert_eq!(closing.status, CheckStatus::Skipped);
        let quat = results
            .iter()
            .find(|r| r.name == "quaternionic-absence")
            .unwrap();
        assert_eq!(quat.status, CheckStatus::Skipped);
    }
}
