//! C2-graded groups: a finite group Ghat with a designated index-2 subgroup G.
//!
//! The grading is carried as a parity homomorphism onto {+1, -1}; odd elements
//! (parity -1) act antilinearly in the representation theory. Real conjugation
//! is the twisted action psi(z)(g) = z g^{pi(z)} z^{-1}; its orbits on G are
//! the Real conjugacy classes.

use std::collections::HashMap;

use crate::chartable;
use crate::error::{Error, Result};
use crate::group::{ClassData, FiniteGroup, DEFAULT_MAX_ORDER};
use crate::real;

#[derive(Debug, Clone)]
pub struct GradedGroup {
    ghat: FiniteGroup,
    parity: Vec<i8>,
    chosen_odd: u32,
    even_elements: Vec<u32>,
    even_group: FiniteGroup,
    to_even: Vec<Option<u32>>,
    name: String,
}

/// Ordinary-conjugation stabiliser case of an even element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ACase {
    /// No odd element commutes with g: the Ghat-class splits in two G-classes.
    A1,
    /// Some odd element commutes with g: Ghat-class = G-class.
    A2,
}

/// Real-conjugation stabiliser case of an even element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum BCase {
    /// No odd z fixes g under psi: the Real class is a union of two G-classes.
    B1,
    /// Some odd z fixes g under psi: the Real class is one G-class.
    B2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealClass {
    /// Minimal member (Ghat element index).
    pub representative: u32,
    /// Sorted Ghat element indices; all even.
    pub members: Vec<u32>,
    /// Order of the Real stabiliser; members * stabiliser = |Ghat|.
    pub real_stabilizer_order: u64,
    pub case: BCase,
    /// Indices of the G-conjugacy classes the Real class is made of (1 or 2).
    pub g_classes: Vec<usize>,
}

impl GradedGroup {
    pub fn from_parity(ghat: FiniteGroup, parity: Vec<i8>, name: impl Into<String>) -> Result<GradedGroup> {
        let n = ghat.order();
        if parity.len() != n {
            return Err(Error::NotAGrading);
        }
        if parity.iter().any(|&p| p != 1 && p != -1) {
            return Err(Error::NotAGrading);
        }
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                if parity[ghat.mul(a, b) as usize] != parity[a as usize] * parity[b as usize] {
                    return Err(Error::NotAGrading);
                }
            }
        }
        let even_elements: Vec<u32> = (0..n as u32).filter(|&e| parity[e as usize] == 1).collect();
        if even_elements.len() * 2 != n {
            return Err(Error::NotIndexTwo {
                actual: if even_elements.is_empty() { 0 } else { n / even_elements.len() },
            });
        }
        let chosen_odd = (0..n as u32)
            .find(|&e| parity[e as usize] == -1)
            .expect("index-two grading has odd elements");
        let (even_group, _, to_even) = ghat.subgroup_group(&even_elements)?;
        Ok(GradedGroup {
            ghat,
            parity,
            chosen_odd,
            even_elements,
            even_group,
            to_even,
            name: name.into(),
        })
    }

    pub fn from_subgroup(ghat: FiniteGroup, generators: &[u32], name: impl Into<String>) -> Result<GradedGroup> {
        for &g in generators {
            if g as usize >= ghat.order() {
                return Err(Error::Parse(format!("generator index {g} out of range")));
            }
        }
        let closure = ghat.subgroup_closure(generators);
        if closure.len() * 2 != ghat.order() {
            let actual = if closure.is_empty() { 0 } else { ghat.order() / closure.len() };
            return Err(Error::NotIndexTwo { actual });
        }
        let mut parity = vec![-1i8; ghat.order()];
        for &e in &closure {
            parity[e as usize] = 1;
        }
        GradedGroup::from_parity(ghat, parity, name)
    }

    /// Same grading, different designated odd element.
    pub fn with_chosen_odd(&self, w: u32) -> Result<GradedGroup> {
        if w as usize >= self.ghat.order() || self.parity[w as usize] != -1 {
            return Err(Error::NotOdd { element: w as usize });
        }
        let mut out = self.clone();
        out.chosen_odd = w;
        Ok(out)
    }

    pub fn ghat(&self) -> &FiniteGroup {
        &self.ghat
    }

    pub fn even_group(&self) -> &FiniteGroup {
        &self.even_group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn parity(&self, e: u32) -> i8 {
        self.parity[e as usize]
    }

    pub fn is_even(&self, e: u32) -> bool {
        self.parity[e as usize] == 1
    }

    pub fn chosen_odd(&self) -> u32 {
        self.chosen_odd
    }

    /// Sorted Ghat indices of the even subgroup.
    pub fn even_elements(&self) -> &[u32] {
        &self.even_elements
    }

    pub fn odd_elements(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.ghat.order() as u32).filter(|&e| !self.is_even(e))
    }

    /// Ghat index -> index in the standalone even group.
    pub fn to_even(&self, e: u32) -> Result<u32> {
        self.to_even[e as usize].ok_or(Error::NotEven { element: e as usize })
    }

    /// Index in the even group -> Ghat index.
    pub fn from_even(&self, i: u32) -> u32 {
        self.even_elements[i as usize]
    }

    /// psi(z)(g) = z g z^-1 for even z, z g^-1 z^-1 for odd z. Only defined
    /// on the even subgroup.
    pub fn real_conjugate(&self, z: u32, g: u32) -> Result<u32> {
        if !self.is_even(g) {
            return Err(Error::NotEven { element: g as usize });
        }
        Ok(self.real_conjugate_raw(z, g))
    }

    fn real_conjugate_raw(&self, z: u32, g: u32) -> u32 {
        let target = if self.is_even(z) { g } else { self.ghat.inv(g) };
        self.ghat.conjugate(z, target)
    }

    /// Does the extension split, i.e. is there an odd involution?
    pub fn is_split_structure(&self) -> bool {
        self.odd_elements()
            .any(|z| self.ghat.mul(z, z) == self.ghat.identity())
    }

    /// Orbits of the even subgroup under Real conjugation by all of Ghat,
    /// ordered by minimal member.
    pub fn real_conjugacy_classes(&self) -> Vec<RealClass> {
        let gens = self.ghat.generating_set();
        let even_classes = ClassData::new(&self.even_group);
        let n = self.ghat.order();
        let mut assigned = vec![false; n];
        let mut out = Vec::new();
        for &start in &self.even_elements {
            if assigned[start as usize] {
                continue;
            }
            let mut members = vec![start];
            assigned[start as usize] = true;
            let mut head = 0;
            while head < members.len() {
                let g = members[head];
                head += 1;
                for &z in &gens {
                    let h = self.real_conjugate_raw(z, g);
                    if !assigned[h as usize] {
                        assigned[h as usize] = true;
                        members.push(h);
                    }
                }
            }
            members.sort_unstable();
            let mut g_classes: Vec<usize> = members
                .iter()
                .map(|&m| even_classes.class_of(self.to_even[m as usize].expect("real orbit stays even")))
                .collect();
            g_classes.sort_unstable();
            g_classes.dedup();
            debug_assert!(g_classes.len() <= 2);
            let case = if g_classes.len() == 2 { BCase::B1 } else { BCase::B2 };
            out.push(RealClass {
                representative: members[0],
                real_stabilizer_order: (n / members.len()) as u64,
                members,
                case,
                g_classes,
            });
        }
        out
    }

    /// Stabiliser cases of an even element under ordinary and Real conjugation.
    pub fn classify_class_case(&self, g: u32) -> Result<(ACase, BCase)> {
        if !self.is_even(g) {
            return Err(Error::NotEven { element: g as usize });
        }
        let commuting_odd = self
            .odd_elements()
            .any(|z| self.ghat.mul(z, g) == self.ghat.mul(g, z));
        let fixing_odd = self.odd_elements().any(|z| self.real_conjugate_raw(z, g) == g);
        Ok((
            if commuting_odd { ACase::A2 } else { ACase::A1 },
            if fixing_odd { BCase::B2 } else { BCase::B1 },
        ))
    }

    /// Shortcut for groups whose Ghat-classes are all self-inverse: the Real
    /// class of g is its G-class when that is not self-inverse, and its
    /// Ghat-class otherwise. Errors with the witnessing class if the
    /// hypothesis fails.
    pub fn self_inverse_shortcut(&self) -> Result<Vec<RealClass>> {
        let ghat_classes = ClassData::new(&self.ghat);
        for (i, _) in ghat_classes.classes.iter().enumerate() {
            if !ghat_classes.is_self_inverse(i) {
                return Err(Error::HypothesisFailed {
                    class: i,
                    reason: "Ghat-class is not self-inverse".into(),
                });
            }
        }
        let even_classes = ClassData::new(&self.even_group);
        let n = self.ghat.order();
        let mut assigned = vec![false; n];
        let mut out = Vec::new();
        for &start in &self.even_elements {
            if assigned[start as usize] {
                continue;
            }
            let g_class = even_classes.class_of(self.to_even[start as usize].unwrap());
            let members: Vec<u32> = if !even_classes.is_self_inverse(g_class) {
                even_classes.classes[g_class]
                    .members
                    .iter()
                    .map(|&m| self.from_even(m))
                    .collect()
            } else {
                let hat_class = ghat_classes.class_of(start);
                ghat_classes.classes[hat_class].members.clone()
            };
            let mut g_classes: Vec<usize> = members
                .iter()
                .map(|&m| even_classes.class_of(self.to_even[m as usize].expect("class stays even")))
                .collect();
            g_classes.sort_unstable();
            g_classes.dedup();
            for &m in &members {
                assigned[m as usize] = true;
            }
            let case = if g_classes.len() == 2 { BCase::B1 } else { BCase::B2 };
            out.push(RealClass {
                representative: members[0],
                real_stabilizer_order: (n / members.len()) as u64,
                members,
                case,
                g_classes,
            });
        }
        Ok(out)
    }
}

/// The ten packaged witnesses, one per Dyson type, plus the second order-16
/// realisation of type IX.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    IXPauli,
    X,
}

impl Builtin {
    pub fn all() -> [Builtin; 11] {
        use Builtin::*;
        [I, II, III, IV, V, VI, VII, VIII, IX, IXPauli, X]
    }

    pub fn parse(text: &str) -> Option<Builtin> {
        use Builtin::*;
        match text.to_ascii_uppercase().as_str() {
            "I" => Some(I),
            "II" => Some(II),
            "III" => Some(III),
            "IV" => Some(IV),
            "V" => Some(V),
            "VI" => Some(VI),
            "VII" => Some(VII),
            "VIII" => Some(VIII),
            "IX" => Some(IX),
            "IX-PAULI" | "PAULI" => Some(IXPauli),
            "X" => Some(X),
            _ => None,
        }
    }

    pub fn token(&self) -> &'static str {
        use Builtin::*;
        match self {
            I => "I",
            II => "II",
            III => "III",
            IV => "IV",
            V => "V",
            VI => "VI",
            VII => "VII",
            VIII => "VIII",
            IX => "IX",
            IXPauli => "IX-pauli",
            X => "X",
        }
    }

    pub fn describe(&self) -> &'static str {
        use Builtin::*;
        match self {
            I => "C1 <= C2",
            II => "C2 <= C4",
            III => "K4 <= D8",
            IV => "C3 <= C6",
            V => "C3 <= D6",
            VI => "C4 <= Q8",
            VII => "C8 <= C8:C2 (x -> x^5)",
            VIII => "Q8 <= Q8 x C2",
            IX => "Q8 <= Q8:C2 (i <-> j)",
            IXPauli => "Q8 <= Pauli group",
            X => "Dic16 <= G32 (packaged order-32 extension)",
        }
    }
}

pub fn builtin(which: Builtin) -> Result<GradedGroup> {
    use crate::group::Family;
    let cap = DEFAULT_MAX_ORDER;
    let name = format!("{}: {}", which.token(), which.describe());
    match which {
        Builtin::I => {
            let c2 = FiniteGroup::family(Family::Cyclic(2), cap)?;
            GradedGroup::from_subgroup(c2, &[], name)
        }
        Builtin::II => {
            let c4 = FiniteGroup::family(Family::Cyclic(4), cap)?;
            GradedGroup::from_subgroup(c4, &[2], name)
        }
        Builtin::III => {
            let d8 = FiniteGroup::family(Family::Dihedral(8), cap)?;
            // r^2 and s generate the Klein four-subgroup.
            GradedGroup::from_subgroup(d8, &[2, 4], name)
        }
        Builtin::IV => {
            let c6 = FiniteGroup::family(Family::Cyclic(6), cap)?;
            GradedGroup::from_subgroup(c6, &[2], name)
        }
        Builtin::V => {
            let d6 = FiniteGroup::family(Family::Dihedral(6), cap)?;
            GradedGroup::from_subgroup(d6, &[1], name)
        }
        Builtin::VI => {
            let q8 = FiniteGroup::family(Family::Quaternion, cap)?;
            GradedGroup::from_subgroup(q8, &[1], name)
        }
        Builtin::VII => {
            let c8 = FiniteGroup::family(Family::Cyclic(8), cap)?;
            let c2 = FiniteGroup::family(Family::Cyclic(2), cap)?;
            let id: Vec<u32> = (0..8).collect();
            let pow5: Vec<u32> = (0..8).map(|i| i * 5 % 8).collect();
            let ghat = FiniteGroup::semidirect_product(&c8, &c2, &[id, pow5], cap)?;
            GradedGroup::from_subgroup(ghat, &[2], name)
        }
        Builtin::VIII => {
            let q8 = FiniteGroup::family(Family::Quaternion, cap)?;
            let c2 = FiniteGroup::family(Family::Cyclic(2), cap)?;
            let ghat = FiniteGroup::direct_product(&q8, &c2, cap)?;
            GradedGroup::from_subgroup(ghat, &[2, 8], name)
        }
        Builtin::IX => {
            let q8 = FiniteGroup::family(Family::Quaternion, cap)?;
            let c2 = FiniteGroup::family(Family::Cyclic(2), cap)?;
            // The automorphism swapping the two standard generators a and x.
            let swap = q8.hom_from_generator_images(&[1, 4], &q8, &[4, 1])?;
            let id: Vec<u32> = (0..8).collect();
            let ghat = FiniteGroup::semidirect_product(&q8, &c2, &[id, swap], cap)?;
            GradedGroup::from_subgroup(ghat, &[2, 8], name)
        }
        Builtin::IXPauli => pauli_graded(name),
        Builtin::X => {
            let text = include_str!("../data/g32_type_x.tbl");
            let ghat = crate::formats::parse_multiplication_table(text)?;
            let order = ghat.order();
            let parity: Vec<i8> = (0..order).map(|e| if e < order / 2 { 1 } else { -1 }).collect();
            GradedGroup::from_parity(ghat, parity, name)
        }
    }
}

/// 2x2 matrices over the Gaussian integers, entry-wise (re, im).
type GMat = [(i64, i64); 4];

fn gmul(a: &GMat, b: &GMat) -> GMat {
    let cmul = |x: (i64, i64), y: (i64, i64)| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
    let cadd = |x: (i64, i64), y: (i64, i64)| (x.0 + y.0, x.1 + y.1);
    [
        cadd(cmul(a[0], b[0]), cmul(a[1], b[2])),
        cadd(cmul(a[0], b[1]), cmul(a[1], b[3])),
        cadd(cmul(a[2], b[0]), cmul(a[3], b[2])),
        cadd(cmul(a[2], b[1]), cmul(a[3], b[3])),
    ]
}

/// The Pauli group of order 16, generated by the three Pauli matrices over
/// Z[i], graded by its quaternion subgroup <iX, iY>.
fn pauli_graded(name: String) -> Result<GradedGroup> {
    let ident: GMat = [(1, 0), (0, 0), (0, 0), (1, 0)];
    let x: GMat = [(0, 0), (1, 0), (1, 0), (0, 0)];
    let y: GMat = [(0, 0), (0, -1), (0, 1), (0, 0)];
    let z: GMat = [(1, 0), (0, 0), (0, 0), (-1, 0)];
    let gens = [x, y, z];
    let mut elements: Vec<GMat> = vec![ident];
    let mut index: HashMap<GMat, u32> = HashMap::new();
    index.insert(ident, 0);
    let mut head = 0;
    while head < elements.len() {
        for g in &gens {
            let next = gmul(&elements[head], g);
            if !index.contains_key(&next) {
                index.insert(next, elements.len() as u32);
                elements.push(next);
            }
        }
        head += 1;
    }
    let order = elements.len();
    let mut rows = vec![vec![0u32; order]; order];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            rows[i][j] = index[&gmul(a, b)];
        }
    }
    let base = [("I", ident), ("X", x), ("Y", y), ("Z", z)];
    let prefixes = ["", "i", "-", "-i"];
    let label = |m: &GMat| -> String {
        let mut scaled = *m;
        for prefix in prefixes {
            for (bn, bm) in &base {
                if scaled == *bm {
                    return format!("{prefix}{bn}");
                }
            }
            // multiply by -i to strip one factor of i
            scaled = scaled.map(|(re, im)| (im, -re));
        }
        unreachable!("Pauli element is i^k times a Pauli matrix")
    };
    let labels: Vec<String> = elements.iter().map(label).collect();
    let ghat = FiniteGroup::from_multiplication_table(rows, Some(labels))?;
    let ix = ghat.find_label("iX").expect("iX in Pauli group");
    let iy = ghat.find_label("iY").expect("iY in Pauli group");
    GradedGroup::from_subgroup(ghat, &[ix, iy], name)
}

/// Ghat = G u Gw with w g w^-1 = alpha(g) and w^2 = a; requires
/// alpha(a) = a and alpha^2 = conjugation by a. Elements of G keep their
/// indices; the odd coset occupies indices |G|..2|G|.
pub fn index_two_extension(g: &FiniteGroup, alpha: &[u32], a: u32, cap: usize) -> Result<GradedGroup> {
    let n = g.order();
    if alpha.len() != n || (a as usize) >= n {
        return Err(Error::NotAnAutomorphism {
            reason: "extension data has wrong size".into(),
        });
    }
    if alpha[a as usize] != a {
        return Err(Error::NotAnAutomorphism {
            reason: "alpha must fix w^2".into(),
        });
    }
    for x in 0..n as u32 {
        if alpha[alpha[x as usize] as usize] != g.mul(g.mul(a, x), g.inv(a)) {
            return Err(Error::NotAnAutomorphism {
                reason: "alpha^2 must be conjugation by w^2".into(),
            });
        }
    }
    if 2 * n > cap {
        return Err(Error::OrderLimitExceeded {
            requested: 2 * n,
            cap,
        });
    }
    let order = 2 * n;
    let mut rows = vec![vec![0u32; order]; order];
    for xi in 0..n {
        for yi in 0..n {
            let x = xi as u32;
            let y = yi as u32;
            rows[xi][yi] = g.mul(x, y);
            rows[xi][yi + n] = g.mul(x, y) + n as u32;
            rows[xi + n][yi] = g.mul(x, alpha[yi]) + n as u32;
            rows[xi + n][yi + n] = g.mul(g.mul(x, alpha[yi]), a);
        }
    }
    let labels = (0..order)
        .map(|e| {
            if e < n {
                g.label(e as u32)
            } else if g.identity() == (e - n) as u32 {
                "w".to_string()
            } else {
                format!("{}w", g.label((e - n) as u32))
            }
        })
        .collect();
    let ghat = FiniteGroup::from_multiplication_table(rows, Some(labels))?;
    let parity: Vec<i8> = (0..order).map(|e| if e < n { 1 } else { -1 }).collect();
    GradedGroup::from_parity(ghat, parity, "extension")
}

pub struct SearchWitness {
    pub graded: GradedGroup,
    pub seed_row: usize,
    pub description: String,
}

/// Brute-force search for a graded group with an irreducible A-block of the
/// given Dyson type: base groups from the standard families in ascending
/// order, index-2 extensions in deterministic (automorphism, square) order.
pub fn search_type(target: real::DysonType, max_order: usize) -> Result<SearchWitness> {
    use crate::group::Family;
    let half = max_order / 2;
    let mut bases: Vec<(String, FiniteGroup)> = Vec::new();
    for m in 1..=half {
        bases.push((format!("C{m}"), FiniteGroup::family(Family::Cyclic(m as u32), half)?));
        if m == 4 {
            bases.push(("K4".into(), FiniteGroup::family(Family::Klein, half)?));
        }
        if m >= 6 && m % 2 == 0 {
            bases.push((format!("D{m}"), FiniteGroup::family(Family::Dihedral(m as u32), half)?));
        }
        if m >= 8 && m % 4 == 0 {
            bases.push((format!("Dic{m}"), FiniteGroup::family(Family::Dicyclic(m as u32), half)?));
        }
        if m == 16 {
            let q8 = FiniteGroup::family(Family::Quaternion, half)?;
            let c2 = FiniteGroup::family(Family::Cyclic(2), half)?;
            bases.push(("Q8xC2".into(), FiniteGroup::direct_product(&q8, &c2, half)?));
        }
    }
    bases.sort_by_key(|(_, g)| g.order());
    for (base_name, g) in &bases {
        let tbl = match chartable::character_table(g) {
            Ok(t) => t,
            Err(_) => continue,
        };
        for (ai, alpha) in g.automorphisms().into_iter().enumerate() {
            for a in 0..g.order() as u32 {
                if alpha[a as usize] != a {
                    continue;
                }
                let conj_ok = (0..g.order() as u32)
                    .all(|x| alpha[alpha[x as usize] as usize] == g.mul(g.mul(a, x), g.inv(a)));
                if !conj_ok {
                    continue;
                }
                let gg = match index_two_extension(g, &alpha, a, max_order) {
                    Ok(gg) => gg,
                    Err(_) => continue,
                };
                for row in 0..tbl.rows().len() {
                    if let Ok(t) = real::dyson_type(&gg, &tbl, row) {
                        if t == target {
                            let description = format!(
                                "{base_name} extended by automorphism #{ai} with w^2 = {}",
                                g.label(a)
                            );
                            return Ok(SearchWitness {
                                graded: gg,
                                seed_row: row,
                                description,
                            });
                        }
                    }
                }
            }
        }
    }
    Err(Error::SearchExhausted {
        dyson_type: format!("{target:?}"),
        max_order,
    })
}


/// A_n as the even half of S_n, with the canonical S_n numbering.
pub fn alternating_in_symmetric(n: usize, cap: usize) -> Result<GradedGroup> {
    use crate::group::Family;
    let sn = FiniteGroup::family(Family::Symmetric(n as u32), cap)?;
    if n < 2 {
        return Err(Error::NotIndexTwo { actual: 1 });
    }
    let gens: Vec<u32> = if n == 2 {
        Vec::new()
    } else {
        crate::group::alternating_generators(n)?
            .iter()
            .map(|p| {
                sn.find_label(&p.cycle_notation())
                    .expect("alternating generator is in S_n")
            })
            .collect()
    };
    GradedGroup::from_subgroup(sn, &gens, format!("A{n} <= S{n}"))
}
