//! Permutations on {0, .., degree-1} with 1-based cycle notation for display.

use crate::error::{Error, Result};

/// A permutation stored as the image vector: `map[p]` is the image of point `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    map: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            map: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(map: Vec<u32>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &im in &map {
            if (im as usize) >= n || seen[im as usize] {
                return Err(Error::Parse(format!("invalid permutation images {map:?}")));
            }
            seen[im as usize] = true;
        }
        Ok(Perm { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, p: u32) -> u32 {
        self.map[p as usize]
    }

    /// `self * other` acts as `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let map = other.map.iter().map(|&p| self.map[p as usize]).collect();
        Perm { map }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0u32; self.map.len()];
        for (p, &im) in self.map.iter().enumerate() {
            map[im as usize] = p as u32;
        }
        Perm { map }
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        let mut transpositions = 0usize;
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.map[p] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Canonical disjoint-cycle notation, 1-based: "(1 2 3)(4 5)"; identity is "()".
    /// Each cycle starts at its minimal point; cycles sorted by that point.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.map.len()];
        let mut out = String::new();
        for start in 0..self.map.len() {
            if seen[start] || self.map[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.map[p] as usize;
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Parse cycle notation like "(1 2 3)(4 5)" (commas also accepted) on the
    /// given number of points. "()" and the empty string denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut map: Vec<u32> = (0..degree as u32).collect();
        let cleaned = text.trim();
        if cleaned.is_empty() || cleaned == "()" {
            return Ok(Perm { map });
        }
        let mut rest = cleaned;
        let mut touched = vec![false; degree];
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!("stray text in {text:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced '(' in {text:?}")))?;
            let inner = &rest[open + 1..close];
            rest = &rest[close + 1..];
            let points: Vec<usize> = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<_>>()?;
            if points.is_empty() {
                continue;
            }
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(Error::Parse(format!(
                        "point {p} out of range 1..={degree} in {text:?}"
                    )));
                }
                if touched[p - 1] {
                    return Err(Error::Parse(format!("point {p} repeated in {text:?}")));
                }
                touched[p - 1] = true;
            }
            for w in 0..points.len() {
                let from = points[w] - 1;
                let to = points[(w + 1) % points.len()] - 1;
                map[from] = to as u32;
            }
        }
        Perm::from_images(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trips() {
        for text in ["()", "(1 2 3)", "(1 2)(3 4 5)", "(2 5)(3 4)"] {
            let p = Perm::parse_cycles(text, 5).unwrap();
            assert_eq!(p.cycle_notation(), text);
        }
    }

    #[test]
    fn parse_normalises_cycle_start() {
        let p = Perm::parse_cycles("(3 1 2)", 3).unwrap();
        assert_eq!(p.cycle_notation(), "(1 2 3)");
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Perm::parse_cycles("(1 2)", 3).unwrap();
        let b = Perm::parse_cycles("(2 3)", 3).unwrap();
        let c = a.compose(&b);
        // b sends 2 to 3, then a fixes 3.
        assert_eq!(c.apply(1), 2);
        assert_eq!(c.cycle_notation(), "(1 2 3)");
    }

    #[test]
    fn parity() {
        assert!(Perm::parse_cycles("(1 2 3)", 4).unwrap().is_even());
        assert!(!Perm::parse_cycles("(1 2)", 4).unwrap().is_even());
        assert!(Perm::parse_cycles("(1 2)(3 4)", 4).unwrap().is_even());
    }

    #[test]
    fn rejects_repeated_points() {
        assert!(Perm::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse_cycles("(1 9)", 3).is_err());
    }
}
