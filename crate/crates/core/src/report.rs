//! Rendering of computation results as text tables and versioned JSON.
//!
//! Every JSON document carries `"schema": 1`. Output is deterministic:
//! orders come from the canonical class/row orders, never from hash maps.

use serde_json::{json, Value};

use crate::alternating::{self, CycleType};
use crate::chartable::CharacterTable;
use crate::error::Result;
use crate::grading::{BCase, GradedGroup, SearchWitness};
use crate::group::{ClassData, FiniteGroup};
use crate::real::{self, ATable};
use crate::verify::CheckResult;

pub const SCHEMA: u32 = 1;

fn grid(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let cols = header.len();
    let mut width = vec![0usize; cols];
    for row in std::iter::once(&header).chain(rows.iter()) {
        for (c, cell) in row.iter().enumerate() {
            width[c] = width[c].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let render = |row: &[String], out: &mut String| {
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            for _ in cell.chars().count()..width[c] {
                out.push(' ');
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    render(&header, &mut out);
    let rule: usize = width.iter().sum::<usize>() + 2 * (cols - 1);
    out.push_str(&"-".repeat(rule));
    out.push('\n');
    for row in &rows {
        render(row, &mut out);
    }
    out
}

pub fn classes_json(g: &FiniteGroup, classes: &ClassData) -> Value {
    json!({
        "schema": SCHEMA,
        "group": g.fingerprint().to_string(),
        "order": g.order(),
        "classes": classes.classes.iter().map(|c| json!({
            "rep": g.label(c.representative),
            "size": c.members.len(),
            "centralizer": c.centralizer_order,
        })).collect::<Vec<_>>(),
    })
}

pub fn classes_text(g: &FiniteGroup, classes: &ClassData) -> String {
    let rows = classes
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                format!("{i}"),
                g.label(c.representative),
                c.members.len().to_string(),
                c.centralizer_order.to_string(),
            ]
        })
        .collect();
    format!(
        "group of order {} with {} classes\n{}",
        g.order(),
        classes.count(),
        grid(
            vec!["#".into(), "rep".into(), "size".into(), "centralizer".into()],
            rows
        )
    )
}

pub fn real_classes_json(gg: &GradedGroup) -> Value {
    let classes = gg.real_conjugacy_classes();
    json!({
        "schema": SCHEMA,
        "group": gg.name(),
        "ghat_order": gg.ghat().order(),
        "real_classes": classes.iter().map(|c| json!({
            "rep": gg.ghat().label(c.representative),
            "members": c.members.len(),
            "real_stabilizer": c.real_stabilizer_order,
            "case": c.case,
            "g_classes": c.g_classes,
        })).collect::<Vec<_>>(),
    })
}

pub fn real_classes_text(gg: &GradedGroup) -> String {
    let classes = gg.real_conjugacy_classes();
    let rows = classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                format!("{i}"),
                gg.ghat().label(c.representative),
                c.members.len().to_string(),
                c.real_stabilizer_order.to_string(),
                match c.case {
                    BCase::B1 => "B1 (two G-classes)".into(),
                    BCase::B2 => "B2 (one G-class)".into(),
                },
            ]
        })
        .collect();
    format!(
        "{}: {} Real classes\n{}",
        gg.name(),
        classes.len(),
        grid(
            vec![
                "#".into(),
                "rep".into(),
                "size".into(),
                "stabilizer".into(),
                "case".into()
            ],
            rows
        )
    )
}

pub fn chartable_json(g: &FiniteGroup, tbl: &CharacterTable) -> Value {
    json!({
        "schema": SCHEMA,
        "group": g.fingerprint().to_string(),
        "order": g.order(),
        "exponent": g.exponent(),
        "classes": tbl.classes().classes.iter().map(|c| json!({
            "rep": g.label(c.representative),
            "size": c.members.len(),
            "centralizer": c.centralizer_order,
        })).collect::<Vec<_>>(),
        "rows": tbl.rows().iter().map(|row| {
            row.iter().map(|v| serde_json::to_value(v).expect("cyclotomic serialises")).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

pub fn chartable_text(g: &FiniteGroup, tbl: &CharacterTable) -> String {
    let mut header = vec!["".to_string()];
    for c in &tbl.classes().classes {
        header.push(format!(
            "{} ({})",
            g.label(c.representative),
            c.members.len()
        ));
    }
    let rows = tbl
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut line = vec![format!("X{}", i + 1)];
            line.extend(row.iter().map(|v| v.to_string()));
            line
        })
        .collect();
    format!(
        "character table: order {}, {} classes, exponent {}\n{}",
        g.order(),
        tbl.row_count(),
        g.exponent(),
        grid(header, rows)
    )
}

pub fn achartable_json(gg: &GradedGroup, tbl: &CharacterTable, at: &ATable) -> Result<Value> {
    let real_classes = gg.real_conjugacy_classes();
    let mut rows = Vec::new();
    for (j, row) in at.rows.iter().enumerate() {
        let values: Vec<Value> = real_classes
            .iter()
            .map(|rc| {
                let class = tbl.classes().class_of(gg.to_even(rc.representative)?);
                Ok(serde_json::to_value(&row.values[class]).expect("cyclotomic serialises"))
            })
            .collect::<Result<_>>()?;
        rows.push(json!({
            "degree": at.degree(j, tbl),
            "m": row.schur,
            "field": row.field,
            "constituents": row.constituents,
            "values": values,
        }));
    }
    Ok(json!({
        "schema": SCHEMA,
        "group": gg.name(),
        "real_classes": real_classes.iter().map(|c| json!({
            "rep": gg.ghat().label(c.representative),
            "size": c.members.len(),
        })).collect::<Vec<_>>(),
        "rows": rows,
    }))
}

pub fn achartable_text(gg: &GradedGroup, tbl: &CharacterTable, at: &ATable) -> Result<String> {
    let real_classes = gg.real_conjugacy_classes();
    let mut header = vec!["".to_string(), "m".into(), "F".into()];
    for c in &real_classes {
        header.push(format!(
            "{} ({})",
            gg.ghat().label(c.representative),
            c.members.len()
        ));
    }
    let mut rows = Vec::new();
    for (j, row) in at.rows.iter().enumerate() {
        let mut line = vec![
            format!("T{}", j + 1),
            row.schur.to_string(),
            row.field.to_string(),
        ];
        for rc in &real_classes {
            let class = tbl.classes().class_of(gg.to_even(rc.representative)?);
            line.push(row.values[class].to_string());
        }
        rows.push(line);
    }
    Ok(format!(
        "{}: A-character table, {} rows over {} Real classes\n{}",
        gg.name(),
        at.rows.len(),
        real_classes.len(),
        grid(header, rows)
    ))
}

pub fn indicators_json(gg: &GradedGroup, tbl: &CharacterTable) -> Result<Value> {
    let mut rows = Vec::new();
    for row in 0..tbl.row_count() {
        let ind = real::indicators(gg, tbl, row)?;
        let t = real::dyson_type(gg, tbl, row)?;
        rows.push(json!({
            "row": row,
            "degree": tbl.degree(row),
            "fs_complex": ind.fs_complex,
            "fs_real": ind.fs_real,
            "fs_real_induced": ind.fs_real_induced,
            "dyson_type": t,
        }));
    }
    Ok(json!({
        "schema": SCHEMA,
        "group": gg.name(),
        "rows": rows,
    }))
}

pub fn indicators_text(gg: &GradedGroup, tbl: &CharacterTable) -> Result<String> {
    let mut rows = Vec::new();
    for row in 0..tbl.row_count() {
        let ind = real::indicators(gg, tbl, row)?;
        let t = real::dyson_type(gg, tbl, row)?;
        rows.push(vec![
            format!("X{}", row + 1),
            tbl.degree(row).to_string(),
            ind.fs_complex.to_string(),
            ind.fs_real.to_string(),
            ind.fs_real_induced.to_string(),
            t.to_string(),
        ]);
    }
    Ok(format!(
        "{}: indicators\n{}",
        gg.name(),
        grid(
            vec![
                "row".into(),
                "deg".into(),
                "fs_C".into(),
                "fs".into(),
                "fs_hat".into(),
                "type".into()
            ],
            rows
        )
    ))
}

pub fn blocks_json(gg: &GradedGroup, tbl: &CharacterTable, tbl_hat: &CharacterTable) -> Result<Value> {
    let blocks = real::blocks(gg, tbl, tbl_hat)?;
    Ok(json!({
        "schema": SCHEMA,
        "group": gg.name(),
        "blocks": blocks.iter().map(|b| json!({
            "seed": b.seed,
            "orbit": b.orbit,
            "split": b.split,
            "dyson_type": b.dyson_type,
            "fields": b.fields,
            "counts": b.counts,
        })).collect::<Vec<_>>(),
    }))
}

pub fn blocks_text(gg: &GradedGroup, tbl: &CharacterTable, tbl_hat: &CharacterTable) -> Result<String> {
    let blocks = real::blocks(gg, tbl, tbl_hat)?;
    let rows = blocks
        .iter()
        .map(|b| {
            vec![
                b.dyson_type.to_string(),
                format!("{:?}", b.orbit),
                if b.split { "split" } else { "unsplit" }.into(),
                format!("({},{},{})", b.fields[0], b.fields[1], b.fields[2]),
                format!(
                    "|A|={} |B|={} |C|={} |D|={}",
                    b.counts[0], b.counts[1], b.counts[2], b.counts[3]
                ),
            ]
        })
        .collect();
    Ok(format!(
        "{}: {} blocks\n{}",
        gg.name(),
        blocks.len(),
        grid(
            vec![
                "type".into(),
                "orbit".into(),
                "orbit kind".into(),
                "fields".into(),
                "counts".into()
            ],
            rows
        )
    ))
}

pub fn alternating_real_classes_json(n: u64) -> Result<Value> {
    let types = alternating::real_classes_by_cycle_type(n)?;
    let total: usize = types.iter().map(|t| t.real_classes).sum();
    Ok(json!({
        "schema": SCHEMA,
        "n": n,
        "real_class_count": total,
        "types": types.iter().map(|t| json!({
            "cycle_type": t.cycle_type.parts,
            "a_classes": t.a_classes,
            "self_inverse": t.self_inverse,
            "real_classes": t.real_classes,
        })).collect::<Vec<_>>(),
    }))
}

pub fn alternating_real_classes_text(n: u64) -> Result<String> {
    let types = alternating::real_classes_by_cycle_type(n)?;
    let total: usize = types.iter().map(|t| t.real_classes).sum();
    let rows = types
        .iter()
        .map(|t| {
            vec![
                t.cycle_type.to_string(),
                t.a_classes.to_string(),
                if t.self_inverse { "yes" } else { "no" }.into(),
                t.real_classes.to_string(),
            ]
        })
        .collect();
    Ok(format!(
        "A_{n}: {total} Real classes\n{}",
        grid(
            vec![
                "cycle type".into(),
                "A-classes".into(),
                "self-inverse".into(),
                "Real classes".into()
            ],
            rows
        )
    ))
}

pub fn alternating_complex_type_json(n: u64) -> Value {
    let (has, witness) = alternating::has_complex_type(n);
    json!({
        "schema": SCHEMA,
        "n": n,
        "has_complex_type": has,
        "witness": witness.map(|t| t.parts),
    })
}

pub fn alternating_complex_type_text(n: u64) -> String {
    match alternating::has_complex_type(n) {
        (true, Some(w)) => format!("A_{n} has complex-type characters; witness {w}\n"),
        _ => format!("A_{n} has no complex-type characters\n"),
    }
}

pub fn alternating_self_inverse_json(t: &CycleType) -> Result<Value> {
    let verdict = alternating::class_self_inverse(t)?;
    Ok(json!({
        "schema": SCHEMA,
        "cycle_type": t.parts,
        "n": t.n,
        "splits": t.splits(),
        "self_inverse": verdict,
    }))
}

pub fn alternating_self_inverse_text(t: &CycleType) -> Result<String> {
    let verdict = alternating::class_self_inverse(t)?;
    Ok(format!(
        "class {t} in A_{}: {}{}\n",
        t.n,
        if verdict { "self-inverse" } else { "not self-inverse" },
        if t.splits() { " (splits from S_n)" } else { "" },
    ))
}

pub fn verify_json(name: &str, checks: &[CheckResult]) -> Value {
    json!({
        "schema": SCHEMA,
        "group": name,
        "passed": checks.iter().all(|c| !c.is_failure()),
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "status": c.status_token(),
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

pub fn verify_text(name: &str, checks: &[CheckResult]) -> String {
    let mut out = format!("verify {name}\n");
    for c in checks {
        out.push_str(&format!("  [{}] {}", c.status_token(), c.name));
        if !c.detail.is_empty() {
            out.push_str(&format!(": {}", c.detail));
        }
        out.push('\n');
    }
    let failures = checks.iter().filter(|c| c.is_failure()).count();
    if failures == 0 {
        out.push_str(&format!("all {} checks passed\n", checks.len()));
    } else {
        out.push_str(&format!("{failures} of {} checks FAILED\n", checks.len()));
    }
    out
}

pub fn search_json(w: &SearchWitness) -> Value {
    json!({
        "schema": SCHEMA,
        "description": w.description,
        "ghat_order": w.graded.ghat().order(),
        "seed_row": w.seed_row,
        "table": crate::formats::render_multiplication_table(w.graded.ghat()),
        "parities": (0..w.graded.ghat().order() as u32).map(|e| w.graded.parity(e)).collect::<Vec<_>>(),
    })
}

pub fn search_text(w: &SearchWitness) -> String {
    format!(
        "{}\nseed row {} of the even-subgroup table; |Ghat| = {}\n{}",
        w.description,
        w.seed_row,
        w.graded.ghat().order(),
        crate::formats::render_multiplication_table(w.graded.ghat()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::character_table;
    use crate::grading::{builtin, Builtin};

    #[test]
    fn json_documents_carry_schema_and_round_trip() {
        let gg = builtin(Builtin::V).unwrap();
        let tbl = character_table(gg.even_group()).unwrap();
        let tbl_hat = character_table(gg.ghat()).unwrap();
        let at = real::a_character_table(&gg, &tbl).unwrap();
        let docs = vec![
            classes_json(gg.even_group(), tbl.classes()),
            real_classes_json(&gg),
            chartable_json(gg.even_group(), &tbl),
            achartable_json(&gg, &tbl, &at).unwrap(),
            indicators_json(&gg, &tbl).unwrap(),
            blocks_json(&gg, &tbl, &tbl_hat).unwrap(),
            alternating_real_classes_json(5).unwrap(),
            alternating_complex_type_json(12),
        ];
        for doc in docs {
            assert_eq!(doc["schema"], 1);
            let text = serde_json::to_string_pretty(&doc).unwrap();
            let reparsed: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(serde_json::to_string_pretty(&reparsed).unwrap(), text);
        }
    }

    #[test]
    fn text_tables_render() {
        let gg = builtin(Builtin::IV).unwrap();
        let tbl = character_table(gg.even_group()).unwrap();
        let at = real::a_character_table(&gg, &tbl).unwrap();
        let text = achartable_text(&gg, &tbl, &at).unwrap();
        assert!(text.contains("A-character table"));
        assert!(text.contains("T1"));
        let ind = indicators_text(&gg, &tbl).unwrap();
        assert!(ind.contains("IV"));
        let grid_text = chartable_text(gg.even_group(), &tbl);
        assert!(grid_text.lines().count() >= 5);
    }
}
