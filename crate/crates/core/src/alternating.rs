//! The A_n inside S_n specialisation.
//!
//! Cycle-type combinatorics decide everything: an S_n-class splits in A_n
//! exactly when its parts are distinct and odd, and a split class is
//! self-inverse in A_n exactly when the number of parts congruent to
//! 3 mod 4 is even. Real classes of the grading A_n <= S_n then follow from
//! the self-inverse shortcut, and the existence of complex-type characters
//! reduces to a partition search.

use crate::chartable;
use crate::error::{Error, Result};
use crate::grading::GradedGroup;
use crate::perm::Perm;
use crate::real;

/// A partition of n recording the disjoint-cycle shape of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct CycleType {
    /// Sorted descending, summing to n; fixed points appear as 1s.
    pub parts: Vec<u64>,
    pub n: u64,
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl CycleType {
    pub fn new(mut parts: Vec<u64>) -> Result<CycleType> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("cycle lengths must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Ok(CycleType { parts, n })
    }

    /// Accepts "5,3,1", "5 3 1" or "[5,3,1]".
    pub fn parse(text: &str) -> Result<CycleType> {
        let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad cycle length {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::Parse("empty cycle type".into()));
        }
        CycleType::new(parts)
    }

    pub fn of_permutation(p: &Perm) -> CycleType {
        let n = p.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            loop {
                seen[cur as usize] = true;
                len += 1;
                cur = p.apply(cur);
                if cur == start {
                    break;
                }
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType {
            parts,
            n: n as u64,
        }
    }

    /// Permutations of this type are even iff sum (part - 1) is even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().map(|p| p - 1).sum::<u64>() % 2 == 0
    }

    /// The S_n-class splits into two A_n-classes iff all parts are distinct
    /// and odd.
    pub fn splits(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
            && self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// A representative filling cycles left to right on {0, ..., n-1}.
    pub fn representative(&self) -> Perm {
        let mut images: Vec<u32> = (0..self.n as u32).collect();
        let mut base = 0u32;
        for &part in &self.parts {
            for i in 0..part as u32 {
                images[(base + i) as usize] = base + (i + 1) % part as u32;
            }
            base += part as u32;
        }
        Perm::from_images(images).expect("cycle fill is a permutation")
    }
}

/// Is the A_n-class of this (even) type self-inverse? Decided by the
/// criterion "not self-inverse iff parts distinct, odd, with sum (r-1)/2
/// odd", cross-checked against the mod-4 form.
pub fn class_self_inverse(t: &CycleType) -> Result<bool> {
    if !t.is_even() {
        return Err(Error::OddPermutation {
            perm: t.to_string(),
        });
    }
    let distinct_odd = t.splits();
    let half_sum_odd = t.parts.iter().map(|p| (p - 1) / 2).sum::<u64>() % 2 == 1;
    let by_half_sum = !(distinct_odd && half_sum_odd);
    let mod4_count_odd = t.parts.iter().filter(|&&p| p % 4 == 3).count() % 2 == 1;
    let by_mod4 = !(distinct_odd && mod4_count_odd);
    if by_half_sum != by_mod4 {
        return Err(Error::CriteriaMismatch {
            cycle_type: t.to_string(),
        });
    }
    Ok(by_half_sum)
}

/// One even cycle type with its Real-class bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TypeRealClasses {
    pub cycle_type: CycleType,
    /// Number of A_n-classes of this type (2 when split).
    pub a_classes: usize,
    pub self_inverse: bool,
    /// Real classes of A_n <= S_n carried by this type: a split
    /// non-self-inverse pair stays two Real classes, everything else merges
    /// or already is a single class.
    pub real_classes: usize,
}

fn partitions_of(n: u64) -> Vec<Vec<u64>> {
    // descending largest part, lexicographic within
    fn rec(n: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = max.min(n);
        while part >= 1 {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every even cycle type of degree n with its Real-class count; the total is
/// the number of Real classes of A_n <= S_n.
pub fn real_classes_by_cycle_type(n: u64) -> Result<Vec<TypeRealClasses>> {
    let mut out = Vec::new();
    for parts in partitions_of(n) {
        let t = CycleType::new(parts)?;
        if !t.is_even() {
            continue;
        }
        let self_inverse = class_self_inverse(&t)?;
        let split = t.splits();
        let a_classes = if split { 2 } else { 1 };
        let real_classes = if split && !self_inverse { 2 } else { 1 };
        out.push(TypeRealClasses {
            cycle_type: t,
            a_classes,
            self_inverse,
            real_classes,
        });
    }
    Ok(out)
}

pub fn real_class_count(n: u64) -> Result<usize> {
    Ok(real_classes_by_cycle_type(n)?
        .iter()
        .map(|t| t.real_classes)
        .sum())
}

pub fn a_class_count(n: u64) -> Result<usize> {
    Ok(real_classes_by_cycle_type(n)?
        .iter()
        .map(|t| t.a_classes)
        .sum())
}

/// Does A_n have a complex-type character under the S_n grading? True iff
/// some partition of n into distinct odd parts has an even number of parts
/// congruent to 3 mod 4; the first witness in descending-largest-part order
/// is returned. False exactly for n in {2, 3, 4, 7, 8, 12}.
pub fn has_complex_type(n: u64) -> (bool, Option<CycleType>) {
    fn rec(remaining: u64, max_part: u64, count3: usize, prefix: &mut Vec<u64>) -> Option<Vec<u64>> {
        if remaining == 0 {
            return (count3 % 2 == 0).then(|| prefix.clone());
        }
        if max_part == 0 {
            return None;
        }
        let mut part = max_part.min(remaining);
        if part % 2 == 0 {
            part -= 1;
        }
        while part >= 1 {
            prefix.push(part);
            let found = rec(
                remaining - part,
                part.saturating_sub(2),
                count3 + usize::from(part % 4 == 3),
                prefix,
            );
            prefix.pop();
            if found.is_some() {
                return found;
            }
            part = part.saturating_sub(2);
            if part == 0 {
                break;
            }
        }
        None
    }
    match rec(n, n, 0, &mut Vec::new()) {
        Some(parts) => {
            let t = CycleType::new(parts).expect("witness parts are positive");
            (true, Some(t))
        }
        None => (false, None),
    }
}

/// Every irreducible character of the full group Ghat has classical
/// indicator 1.
pub fn totally_orthogonal_check(gg: &GradedGroup) -> Result<bool> {
    let tbl_hat = chartable::character_table(gg.ghat())?;
    for row in 0..tbl_hat.row_count() {
        if real::fs_complex(gg.ghat(), &tbl_hat, tbl_hat.row(row))? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For totally orthogonal gradings, neither the Real algebra nor the group
/// algebra of the even subgroup has a quaternionic simple module.
pub fn quaternionic_absence_check(gg: &GradedGroup) -> Result<bool> {
    if !totally_orthogonal_check(gg)? {
        return Err(Error::NotApplicable {
            reason: "grading is not totally orthogonal".into(),
        });
    }
    let tbl = chartable::character_table(gg.even_group())?;
    let at = real::a_character_table(gg, &tbl)?;
    for row in &at.rows {
        if row.field == real::Field::H {
            return Ok(false);
        }
    }
    for row in 0..tbl.row_count() {
        if real::indicators(gg, &tbl, row)?.fs_complex == -1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerate all permutations of degree n (Heap's algorithm over image
/// vectors); oracle-scale n only.
fn all_perms(n: usize) -> Vec<Perm> {
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut out = Vec::new();
    fn heap(k: usize, images: &mut Vec<u32>, out: &mut Vec<Perm>) {
        if k <= 1 {
            out.push(Perm::from_images(images.clone()).expect("image vector is a permutation"));
            return;
        }
        for i in 0..k {
            heap(k - 1, images, out);
            if k % 2 == 0 {
                images.swap(i, k - 1);
            } else {
                images.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut images, &mut out);
    out
}

/// Brute-force verdict: does some even permutation conjugate a
/// representative of t to its inverse?
pub fn class_self_inverse_oracle(t: &CycleType) -> Result<bool> {
    if !t.is_even() {
        return Err(Error::OddPermutation {
            perm: t.to_string(),
        });
    }
    let n = t.n as usize;
    if n > 8 {
        return Err(Error::OrderLimitExceeded {
            requested: n,
            cap: 8,
        });
    }
    let sigma = t.representative();
    let target = sigma.inverse();
    Ok(all_perms(n)
        .into_iter()
        .filter(Perm::is_even)
        .any(|tau| tau.compose(&sigma).compose(&tau.inverse()) == target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::alternating_in_symmetric;
    use crate::group::DEFAULT_MAX_ORDER;

    #[test]
    fn parse_and_display() {
        let t = CycleType::parse("3, 1 ,5").unwrap();
        assert_eq!(t.parts, vec![5, 3, 1]);
        assert_eq!(t.n, 9);
        assert_eq!(t.to_string(), "[5,3,1]");
        assert_eq!(CycleType::parse("[2,2]").unwrap().parts, vec![2, 2]);
        assert!(CycleType::parse("0,3").is_err());
        assert!(CycleType::parse("").is_err());
    }

    #[test]
    fn representative_has_the_type() {
        let t = CycleType::new(vec![3, 2, 2]).unwrap();
        let p = t.representative();
        assert_eq!(CycleType::of_permutation(&p), t);
    }

    #[test]
    fn known_self_inverse_verdicts() {
        // five-cycles in A5 are self-inverse
        assert!(class_self_inverse(&CycleType::new(vec![5]).unwrap()).unwrap());
        // [5,3] in A8 is not: (5-1)/2 + (3-1)/2 = 3 odd
        assert!(!class_self_inverse(&CycleType::new(vec![5, 3]).unwrap()).unwrap());
        // three-cycles in A4 are not
        assert!(!class_self_inverse(&CycleType::new(vec![3, 1]).unwrap()).unwrap());
        // odd permutations are rejected
        assert!(matches!(
            class_self_inverse(&CycleType::new(vec![2, 1]).unwrap()),
            Err(Error::OddPermutation { .. })
        ));
    }

    #[test]
    fn criteria_agree_on_all_partitions_up_to_40() {
        for n in 1..=40u64 {
            for parts in partitions_of(n) {
                let t = CycleType::new(parts).unwrap();
                if t.is_even() {
                    class_self_inverse(&t).unwrap();
                }
            }
        }
    }

    #[test]
    fn oracle_agrees_with_criterion_up_to_8() {
        for n in 1..=8u64 {
            for parts in partitions_of(n) {
                let t = CycleType::new(parts).unwrap();
                if !t.is_even() {
                    continue;
                }
                assert_eq!(
                    class_self_inverse(&t).unwrap(),
                    class_self_inverse_oracle(&t).unwrap(),
                    "cycle type {t}"
                );
            }
        }
    }

    #[test]
    fn real_class_counts_small_n() {
        assert_eq!(real_class_count(3).unwrap(), 3);
        assert_eq!(real_class_count(4).unwrap(), 4);
        // the two 5-cycle classes of A5 merge into one Real class
        assert_eq!(real_class_count(5).unwrap(), 4);
    }

    #[test]
    fn counts_match_the_grading() {
        for n in 3..=6 {
            let gg = alternating_in_symmetric(n, DEFAULT_MAX_ORDER).unwrap();
            assert_eq!(
                gg.real_conjugacy_classes().len(),
                real_class_count(n as u64).unwrap(),
                "n = {n}"
            );
            let classes = crate::group::ClassData::new(gg.even_group());
            assert_eq!(classes.count(), a_class_count(n as u64).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn complex_type_exceptions() {
        let exceptional = [2u64, 3, 4, 7, 8, 12];
        for n in 2..=30u64 {
            let (has, witness) = has_complex_type(n);
            assert_eq!(has, !exceptional.contains(&n), "n = {n}");
            match witness {
                Some(t) => {
                    assert!(has);
                    assert_eq!(t.parts.iter().sum::<u64>(), n);
                    assert!(t.splits(), "witness {t} must be distinct odd");
                    assert_eq!(t.parts.iter().filter(|&&p| p % 4 == 3).count() % 2, 0);
                }
                None => assert!(!has),
            }
        }
        assert_eq!(has_complex_type(13).1.unwrap().parts, vec![13]);
        assert_eq!(has_complex_type(5).1.unwrap().parts, vec![5]);
    }

    #[test]
    fn a_row_count_matches_the_formula_up_to_seven() {
        // The A-character table of A_n <= S_n has one row per Real class,
        // and the formula side agrees without building any group.
        for n in 3..=7u64 {
            let gg = alternating_in_symmetric(n as usize, DEFAULT_MAX_ORDER).unwrap();
            let tbl = crate::chartable::character_table(gg.even_group()).unwrap();
            let atbl = crate::real::a_character_table(&gg, &tbl).unwrap();
            assert_eq!(atbl.rows.len(), real_class_count(n).unwrap(), "n = {n}");
            assert_eq!(tbl.row_count(), a_class_count(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn complex_type_matches_class_excess() {
        // complex-type characters exist iff some split class is
        // self-inverse, iff A_n has more classes than Real classes
        for n in 2..=9u64 {
            let (has, _) = has_complex_type(n);
            let excess = a_class_count(n).unwrap() != real_class_count(n).unwrap();
            assert_eq!(has, excess, "n = {n}");
        }
    }

    #[test]
    fn orthogonality_checks() {
        for n in [4usize, 5] {
            let gg = alternating_in_symmetric(n, DEFAULT_MAX_ORDER).unwrap();
            assert!(totally_orthogonal_check(&gg).unwrap());
            assert!(quaternionic_absence_check(&gg).unwrap());
        }
        let vi = crate::grading::builtin(crate::grading::Builtin::VI).unwrap();
        assert!(!totally_orthogonal_check(&vi).unwrap());
        assert!(matches!(
            quaternionic_absence_check(&vi),
            Err(Error::NotApplicable { .. })
        ));
    }
}
