//! Plain-text input formats.
//!
//! Multiplication table:
//! ```text
//! order 4
//! 0 1 2 3
//! 1 0 3 2
//! 2 3 0 1
//! 3 2 1 0
//! labels
//! e a b ab
//! ```
//! (the `labels` block is optional; labels may also be listed one per line).
//!
//! Permutation group:
//! ```text
//! degree 4
//! (1 2)
//! (1 2 3 4)
//! ```
//!
//! Grading, either form:
//! ```text
//! parity + - - + ...      # one sign per element, +1/-1 also accepted
//! subgroup 0 3 5          # generator indices (cycles allowed for perm input)
//! ```
//! Comment lines start with `#`.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| match l.find('#') {
            Some(pos) => &l[..pos],
            None => l,
        })
        .map(str::trim)
        .filter(|l| !l.is_empty())
}

pub fn parse_multiplication_table(text: &str) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Parse("empty table file".into()))?;
    let order: usize = header
        .strip_prefix("order")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected 'order n' header, got {header:?}")))?;
    let mut rows = Vec::with_capacity(order);
    let mut labels: Option<Vec<String>> = None;
    let mut in_labels = false;
    for line in lines {
        if in_labels {
            labels
                .get_or_insert_with(Vec::new)
                .extend(line.split_whitespace().map(str::to_string));
            continue;
        }
        if line == "labels" {
            in_labels = true;
            continue;
        }
        let row: Vec<u32> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad table entry {tok:?}")))
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    if rows.len() != order {
        return Err(Error::Parse(format!(
            "expected {order} table rows, found {}",
            rows.len()
        )));
    }
    if let Some(ref ls) = labels {
        if ls.len() != order {
            return Err(Error::Parse(format!(
                "expected {order} labels, found {}",
                ls.len()
            )));
        }
    }
    FiniteGroup::from_multiplication_table(rows, labels)
}

pub fn render_multiplication_table(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("order {n}\n");
    for a in 0..n as u32 {
        let row: Vec<String> = (0..n as u32).map(|b| g.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(labels) = g.labels() {
        out.push_str("labels\n");
        for l in labels {
            out.push_str(l);
            out.push('\n');
        }
    }
    out
}

pub fn parse_permutation_group(text: &str, cap: usize) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Parse("empty permutation file".into()))?;
    let degree: usize = header
        .strip_prefix("degree")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected 'degree n' header, got {header:?}")))?;
    let gens: Vec<Perm> = lines
        .map(|l| Perm::parse_cycles(l, degree))
        .collect::<Result<_>>()?;
    FiniteGroup::from_permutation_generators(degree, &gens, cap)
}

pub enum GradingSpec {
    Parity(Vec<i8>),
    Subgroup(Vec<String>),
}

pub fn parse_grading(text: &str) -> Result<GradingSpec> {
    let mut lines = content_lines(text);
    let first = lines.next().ok_or_else(|| Error::Parse("empty grading file".into()))?;
    let mut tokens: Vec<&str> = first.split_whitespace().collect();
    let kind = tokens.remove(0);
    let mut rest: Vec<String> = tokens.iter().map(|s| s.to_string()).collect();
    for line in lines {
        rest.extend(line.split_whitespace().map(str::to_string));
    }
    match kind {
        "parity" => {
            let signs = rest
                .iter()
                .map(|t| match t.as_str() {
                    "+" | "+1" | "1" => Ok(1i8),
                    "-" | "-1" => Ok(-1i8),
                    other => Err(Error::Parse(format!("bad parity sign {other:?}"))),
                })
                .collect::<Result<Vec<i8>>>()?;
            Ok(GradingSpec::Parity(signs))
        }
        "subgroup" => {
            // Cycle-notation generators may have been split on whitespace;
            // rejoin and split on ')' boundaries instead.
            let joined = rest.join(" ");
            let mut gens = Vec::new();
            let mut buf = String::new();
            for tok in joined.split_whitespace() {
                if buf.is_empty() && !tok.starts_with('(') {
                    gens.push(tok.to_string());
                    continue;
                }
                if !buf.is_empty() {
                    buf.push(' ');
                }
                buf.push_str(tok);
                if buf.matches('(').count() == buf.matches(')').count() {
                    gens.push(std::mem::take(&mut buf));
                }
            }
            if !buf.is_empty() {
                return Err(Error::Parse(format!("unbalanced cycles in {buf:?}")));
            }
            Ok(GradingSpec::Subgroup(gens))
        }
        other => Err(Error::Parse(format!(
            "grading must start with 'parity' or 'subgroup', got {other:?}"
        ))),
    }
}

/// Resolve a subgroup generator token: a plain element index, or (for groups
/// with cycle-notation labels) a cycle expression canonicalised to a label.
pub fn resolve_generator(g: &FiniteGroup, token: &str) -> Result<u32> {
    if let Ok(idx) = token.parse::<u32>() {
        if (idx as usize) < g.order() {
            return Ok(idx);
        }
        return Err(Error::Parse(format!("element index {idx} out of range")));
    }
    if token.starts_with('(') {
        // Try every degree consistent with the labels; the canonical label of
        // the parsed permutation identifies the element.
        if let Some(labels) = g.labels() {
            let max_point = token
                .split(|c: char| !c.is_ascii_digit())
                .filter(|s| !s.is_empty())
                .filter_map(|s| s.parse::<usize>().ok())
                .max()
                .unwrap_or(0);
            let perm = Perm::parse_cycles(token, max_point.max(1))?;
            let canonical = perm.cycle_notation();
            if let Some(i) = labels.iter().position(|l| *l == canonical) {
                return Ok(i as u32);
            }
        }
        return Err(Error::Parse(format!("no element with cycles {token:?}")));
    }
    g.find_label(token)
        .ok_or_else(|| Error::Parse(format!("no element labelled {token:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ClassData, DEFAULT_MAX_ORDER};

    #[test]
    fn table_round_trip() {
        let text = "order 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\nlabels\ne a b ab\n";
        let g = parse_multiplication_table(text).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.label(3), "ab");
        let rendered = render_multiplication_table(&g);
        let g2 = parse_multiplication_table(&rendered).unwrap();
        assert_eq!(g2.fingerprint(), g.fingerprint());
    }

    #[test]
    fn perm_file_builds_symmetric_group() {
        let text = "degree 3\n(1 2)\n(1 2 3)\n";
        let g = parse_permutation_group(text, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(ClassData::new(&g).count(), 3);
    }

    #[test]
    fn grading_specs_parse() {
        match parse_grading("parity + - + -\n").unwrap() {
            GradingSpec::Parity(v) => assert_eq!(v, vec![1, -1, 1, -1]),
            _ => panic!("expected parity"),
        }
        match parse_grading("subgroup 0 3 (1 2)(3 4)\n").unwrap() {
            GradingSpec::Subgroup(v) => assert_eq!(v, vec!["0", "3", "(1 2)(3 4)"]),
            _ => panic!("expected subgroup"),
        }
    }

    #[test]
    fn generator_tokens_resolve() {
        let text = "degree 4\n(1 2)\n(1 2 3 4)\n";
        let g = parse_permutation_group(text, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(resolve_generator(&g, "0").unwrap(), 0);
        let idx = resolve_generator(&g, "(2 1)").unwrap();
        assert_eq!(g.label(idx), "(1 2)");
        assert!(resolve_generator(&g, "(9 9)").is_err());
    }
}
