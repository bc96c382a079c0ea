//! Real (antilinear) representation theory of a C2-graded group.
//!
//! Everything is phrased against the character table of the even subgroup G,
//! with odd elements acting through the twisted conjugation carried by
//! `GradedGroup`. The two scalar invariants of an irreducible chi are
//!
//!   fs_complex(chi) = (1/|G|) sum_{x in G} chi(x^2)      (classical)
//!   fs_real(chi)    = (1/|G|) sum_{z odd} chi(z^2)       (antilinear)
//!
//! and the pair classifies chi into one of ten types, with the split/unsplit
//! distinction breaking the (0, 0) tie. All theorem checks return structured
//! errors carrying the counterexample instead of panicking.

use crate::chartable::{self, CharacterTable};
use crate::cyclo::{rat_int, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::grading::{ACase, GradedGroup};
use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum DysonType {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Field {
    R,
    C,
    H,
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Field::R => "R",
            Field::C => "C",
            Field::H => "H",
        })
    }
}

impl std::fmt::Display for DysonType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl DysonType {
    pub fn all() -> [DysonType; 10] {
        use DysonType::*;
        [I, II, III, IV, V, VI, VII, VIII, IX, X]
    }

    pub fn token(&self) -> &'static str {
        use DysonType::*;
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
            X => "X",
        }
    }

    pub fn parse(text: &str) -> Option<DysonType> {
        DysonType::all()
            .into_iter()
            .find(|t| t.token().eq_ignore_ascii_case(text))
    }

    /// Endomorphism fields (F_a, F_b, F_d) of the block's three module
    /// categories.
    pub fn fields(&self) -> [Field; 3] {
        use Field::*;
        match self {
            DysonType::I => [R, R, R],
            DysonType::II => [R, C, H],
            DysonType::III => [R, R, C],
            DysonType::IV => [C, C, C],
            DysonType::V => [C, R, R],
            DysonType::VI => [C, H, H],
            DysonType::VII => [C, C, C],
            DysonType::VIII => [H, H, H],
            DysonType::IX => [H, C, R],
            DysonType::X => [H, H, C],
        }
    }

    /// (|A|, |B|, |C|, |D|): conjugation pairs in the orbit, covering pairs
    /// upstairs, orbit size, Real rows met.
    pub fn counts(&self) -> [usize; 4] {
        match self {
            DysonType::I => [1, 2, 1, 1],
            DysonType::II => [1, 1, 1, 1],
            DysonType::III => [2, 1, 2, 1],
            DysonType::IV => [1, 2, 2, 1],
            DysonType::V => [1, 1, 2, 2],
            DysonType::VI => [1, 1, 2, 2],
            DysonType::VII => [2, 1, 4, 2],
            DysonType::VIII => [1, 2, 1, 1],
            DysonType::IX => [1, 1, 1, 1],
            DysonType::X => [2, 1, 2, 1],
        }
    }

    /// Column of the indicator table in the classification proof:
    /// (fs of the realified induced module, fs_complex, fs_real).
    pub fn indicator_profile(&self) -> (i64, i64, i64) {
        match self {
            DysonType::I => (4, 1, 1),
            DysonType::II => (0, 1, -1),
            DysonType::III => (2, 1, 0),
            DysonType::IV => (0, 0, 0),
            DysonType::V => (2, 0, 1),
            DysonType::VI => (-2, 0, -1),
            DysonType::VII => (0, 0, 0),
            DysonType::VIII => (-4, -1, -1),
            DysonType::IX => (0, -1, 1),
            DysonType::X => (-2, -1, 0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Indicators {
    pub fs_complex: i64,
    pub fs_real: i64,
    /// Real Frobenius-Schur indicator of the realified induced module,
    /// normalised to 4 on the trivial block; equals 2(fs_complex + fs_real).
    pub fs_real_induced: i64,
}

fn int_of(v: &Cyclotomic) -> Result<i64> {
    v.to_integer()
}

/// Number of even and odd elements squaring into each class of the even
/// subgroup; one pass over Ghat feeds every indicator afterwards.
pub fn square_class_counts(gg: &GradedGroup, tbl: &CharacterTable) -> Result<(Vec<i64>, Vec<i64>)> {
    tbl.check_same_group(gg.even_group().fingerprint())?;
    let k = tbl.classes().count();
    let mut even = vec![0i64; k];
    let mut odd = vec![0i64; k];
    for x in 0..gg.ghat().order() as u32 {
        let sq = gg.ghat().mul(x, x);
        let class = tbl.classes().class_of(gg.to_even(sq)?);
        if gg.is_even(x) {
            even[class] += 1;
        } else {
            odd[class] += 1;
        }
    }
    Ok((even, odd))
}

fn scaled_count_sum(order: usize, counts: &[i64], values: &[Cyclotomic]) -> Result<i64> {
    let mut acc = Cyclotomic::zero();
    for (c, &n) in counts.iter().enumerate() {
        if n != 0 {
            acc = acc.add(&values[c].scale(&rat_int(n)));
        }
    }
    int_of(&acc.scale(&Rational::new(1.into(), (order as i64).into())))
}

/// Classical Frobenius-Schur indicator (1/|G|) sum chi(x^2) of a character
/// of a plain finite group.
pub fn fs_complex(g: &FiniteGroup, tbl: &CharacterTable, values: &[Cyclotomic]) -> Result<i64> {
    tbl.check_same_group(g.fingerprint())?;
    let k = tbl.classes().count();
    let mut counts = vec![0i64; k];
    for x in 0..g.order() as u32 {
        counts[tbl.classes().class_of(g.mul(x, x))] += 1;
    }
    scaled_count_sum(g.order(), &counts, values)
}

/// The Real indicator (1/|G|) sum over odd z of chi(z^2).
pub fn fs_real_indicator(gg: &GradedGroup, tbl: &CharacterTable, values: &[Cyclotomic]) -> Result<i64> {
    let (_, odd) = square_class_counts(gg, tbl)?;
    scaled_count_sum(gg.even_group().order(), &odd, values)
}

pub fn indicators_of_function(
    gg: &GradedGroup,
    tbl: &CharacterTable,
    values: &[Cyclotomic],
) -> Result<Indicators> {
    let (even, odd) = square_class_counts(gg, tbl)?;
    let order = gg.even_group().order();
    let fs_complex = scaled_count_sum(order, &even, values)?;
    let fs_real = scaled_count_sum(order, &odd, values)?;
    Ok(Indicators {
        fs_complex,
        fs_real,
        fs_real_induced: 2 * (fs_complex + fs_real),
    })
}

pub fn indicators(gg: &GradedGroup, tbl: &CharacterTable, row: usize) -> Result<Indicators> {
    indicators_of_function(gg, tbl, tbl.row(row))
}

/// Verify fs_real = (2/|Ghat|) sum_{g in Ghat} chi(g^2) - fs_complex and
/// return the realified-induced indicator (4/|Ghat|) sum chi(g^2).
pub fn fs_relation_check(gg: &GradedGroup, tbl: &CharacterTable, row: usize) -> Result<i64> {
    let (even, odd) = square_class_counts(gg, tbl)?;
    let order = gg.even_group().order();
    let fs_complex = scaled_count_sum(order, &even, tbl.row(row))?;
    let fs_real = scaled_count_sum(order, &odd, tbl.row(row))?;
    let all: Vec<i64> = even.iter().zip(&odd).map(|(a, b)| 2 * (a + b)).collect();
    // (4/|Ghat|) sum over Ghat = (2/|G|) sum = (1/|G|) times doubled counts
    let fs_hat = scaled_count_sum(order, &all, tbl.row(row))?;
    if fs_hat != 2 * (fs_complex + fs_real) {
        return Err(Error::TheoremViolation {
            reason: format!(
                "(4/|Ghat|) sum chi(g^2) = {fs_hat} but 2(fs_complex + fs_real) = {}",
                2 * (fs_complex + fs_real)
            ),
        });
    }
    Ok(fs_hat)
}

/// Row index of w . chi.
pub fn twist_row(gg: &GradedGroup, tbl: &CharacterTable, row: usize) -> Result<usize> {
    let tw = chartable::twist(gg, tbl, tbl.row(row))?;
    tbl.find_row(&tw).ok_or_else(|| Error::InternalVerificationFailed {
        reason: format!("table is not closed under twisting at row {row}"),
    })
}

/// Row index of conj(chi).
pub fn conjugate_row(tbl: &CharacterTable, row: usize) -> Result<usize> {
    let cj = tbl.conjugate_row(row);
    tbl.find_row(&cj).ok_or_else(|| Error::InternalVerificationFailed {
        reason: format!("table is not closed under conjugation at row {row}"),
    })
}

/// Row index of w . conj(chi), the antilinear partner of chi.
pub fn partner_row(gg: &GradedGroup, tbl: &CharacterTable, row: usize) -> Result<usize> {
    twist_row(gg, tbl, conjugate_row(tbl, row)?)
}

/// The orbit {chi, conj chi, w.chi, w.conj chi} as sorted row indices, plus
/// the block-level split flag: unsplit means {chi, conj chi} is closed under
/// the twist.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BlockOrbit {
    pub orbit: Vec<usize>,
    pub split: bool,
}

pub fn block_of(gg: &GradedGroup, tbl: &CharacterTable, row: usize) -> Result<BlockOrbit> {
    let cj = conjugate_row(tbl, row)?;
    let tw = twist_row(gg, tbl, row)?;
    let tc = twist_row(gg, tbl, cj)?;
    let mut orbit = vec![row, cj, tw, tc];
    orbit.sort_unstable();
    orbit.dedup();
    let split = tw != row && tw != cj;
    Ok(BlockOrbit { orbit, split })
}

pub fn dyson_type(gg: &GradedGroup, tbl: &CharacterTable, row: usize) -> Result<DysonType> {
    let ind = indicators(gg, tbl, row)?;
    let partner = partner_row(gg, tbl, row)?;
    // fs_real != 0 must coincide with chi admitting an antilinear self-map
    if (ind.fs_real != 0) != (partner == row) {
        return Err(Error::InternalVerificationFailed {
            reason: format!(
                "row {row}: fs_real = {} but antilinear partner is row {partner}",
                ind.fs_real
            ),
        });
    }
    use DysonType::*;
    Ok(match (ind.fs_complex, ind.fs_real) {
        (1, 1) => I,
        (1, -1) => II,
        (1, 0) => III,
        (0, 1) => V,
        (0, -1) => VI,
        (0, 0) => {
            if block_of(gg, tbl, row)?.split {
                VII
            } else {
                IV
            }
        }
        (-1, 1) => IX,
        (-1, -1) => VIII,
        (-1, 0) => X,
        (fs_complex, fs_real) => return Err(Error::ImpossiblePair { fs_complex, fs_real }),
    })
}

/// Smallest row of the given type, if the table has one.
pub fn find_type_row(gg: &GradedGroup, tbl: &CharacterTable, t: DysonType) -> Result<Option<usize>> {
    for row in 0..tbl.row_count() {
        if dyson_type(gg, tbl, row)? == t {
            return Ok(Some(row));
        }
    }
    Ok(None)
}

fn field_of_indicator(v: i64) -> Result<Field> {
    match v {
        1 => Ok(Field::R),
        0 => Ok(Field::C),
        -1 => Ok(Field::H),
        _ => Err(Error::ImpossiblePair {
            fs_complex: v,
            fs_real: v,
        }),
    }
}

/// Classical indicator of a character of Ghat itself.
pub fn classical_fs_upstairs(gg: &GradedGroup, tbl_hat: &CharacterTable, values: &[Cyclotomic]) -> Result<i64> {
    fs_complex(gg.ghat(), tbl_hat, values)
}

/// Irreducible rows of the Ghat table whose restriction meets the orbit of
/// the given row.
fn covering_rows(
    gg: &GradedGroup,
    tbl: &CharacterTable,
    tbl_hat: &CharacterTable,
    orbit: &[usize],
) -> Result<Vec<usize>> {
    let mut covering = Vec::new();
    for psi in 0..tbl_hat.row_count() {
        let res = chartable::restrict(gg, tbl, tbl_hat, tbl_hat.row(psi))?;
        if orbit
            .iter()
            .any(|&r| !tbl.inner_product(&res, tbl.row(r)).is_zero())
        {
            covering.push(psi);
        }
    }
    Ok(covering)
}

/// (F_a, F_b, F_d): F_a from fs_complex, F_d from fs_real, F_b from the
/// classical indicator of the covering rows upstairs (which must agree).
pub fn field_triple(
    gg: &GradedGroup,
    tbl: &CharacterTable,
    tbl_hat: &CharacterTable,
    row: usize,
) -> Result<[Field; 3]> {
    let ind = indicators(gg, tbl, row)?;
    let f_a = field_of_indicator(ind.fs_complex)?;
    let f_d = field_of_indicator(ind.fs_real)?;
    let orbit = block_of(gg, tbl, row)?.orbit;
    let covering = covering_rows(gg, tbl, tbl_hat, &orbit)?;
    let mut f_b = None;
    for &psi in &covering {
        let field = field_of_indicator(classical_fs_upstairs(gg, tbl_hat, tbl_hat.row(psi))?)?;
        match f_b {
            None => f_b = Some(field),
            Some(prev) if prev == field => {}
            Some(prev) => {
                return Err(Error::BlockInconsistency {
                    reason: format!("covering rows report fields {prev} and {field}"),
                })
            }
        }
    }
    let f_b = f_b.ok_or_else(|| Error::BlockInconsistency {
        reason: "no covering row upstairs".into(),
    })?;
    let triple = [f_a, f_b, f_d];
    let expected = dyson_type(gg, tbl, row)?.fields();
    if triple != expected {
        return Err(Error::BlockInconsistency {
            reason: format!("computed fields {triple:?} differ from the classification {expected:?}"),
        });
    }
    Ok(triple)
}

/// (|A|, |B|, |C|, |D|) of the block of one row, computed from the orbit and
/// the covering rows and cross-checked against the classification table.
pub fn block_counts(
    gg: &GradedGroup,
    tbl: &CharacterTable,
    tbl_hat: &CharacterTable,
    row: usize,
) -> Result<[usize; 4]> {
    let orbit = block_of(gg, tbl, row)?.orbit;
    let ind = indicators(gg, tbl, row)?;
    for &r in &orbit {
        let other = indicators(gg, tbl, r)?;
        if other.fs_complex != ind.fs_complex || other.fs_real != ind.fs_real {
            return Err(Error::BlockInconsistency {
                reason: format!("rows {row} and {r} of one orbit have different indicators"),
            });
        }
    }
    let mut a_pairs = 0;
    for &r in &orbit {
        if conjugate_row(tbl, r)? >= r {
            a_pairs += 1;
        }
    }
    let covering = covering_rows(gg, tbl, tbl_hat, &orbit)?;
    let mut b_pairs = 0;
    for &psi in &covering {
        let cj = tbl_hat
            .find_row(&tbl_hat.conjugate_row(psi))
            .ok_or_else(|| Error::InternalVerificationFailed {
                reason: "upstairs table not closed under conjugation".into(),
            })?;
        if cj >= psi {
            b_pairs += 1;
        }
    }
    // each fs_real != 0 member is a Real row by itself; fs_real = 0 members
    // pair up inside the orbit
    let mut d_halves = 0;
    for &r in &orbit {
        d_halves += if indicators(gg, tbl, r)?.fs_real != 0 { 2 } else { 1 };
    }
    let counts = [a_pairs, b_pairs, orbit.len(), d_halves / 2];
    let expected = dyson_type(gg, tbl, row)?.counts();
    if counts != expected {
        return Err(Error::BlockInconsistency {
            reason: format!("computed counts {counts:?} differ from the classification {expected:?}"),
        });
    }
    Ok(counts)
}

/// Full per-block report; `blocks` partitions the table into these.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Block {
    pub seed: usize,
    pub orbit: Vec<usize>,
    pub split: bool,
    pub dyson_type: DysonType,
    pub fields: [Field; 3],
    pub counts: [usize; 4],
}

pub fn blocks(gg: &GradedGroup, tbl: &CharacterTable, tbl_hat: &CharacterTable) -> Result<Vec<Block>> {
    let mut seen = vec![false; tbl.row_count()];
    let mut out = Vec::new();
    for row in 0..tbl.row_count() {
        if seen[row] {
            continue;
        }
        let bo = block_of(gg, tbl, row)?;
        for &r in &bo.orbit {
            seen[r] = true;
        }
        out.push(Block {
            seed: bo.orbit[0],
            dyson_type: dyson_type(gg, tbl, row)?,
            fields: field_triple(gg, tbl, tbl_hat, row)?,
            counts: block_counts(gg, tbl, tbl_hat, row)?,
            split: bo.split,
            orbit: bo.orbit,
        });
    }
    Ok(out)
}

/// One row of the table of Real (A-module) characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ARow {
    /// Complex irreducible rows the A-character is built from.
    pub constituents: Vec<usize>,
    /// Schur multiplicity m: <theta, theta> = m.
    pub schur: u8,
    pub field: Field,
    pub values: Vec<Cyclotomic>,
}

#[derive(Debug, Clone)]
pub struct ATable {
    pub group_fingerprint: u64,
    pub chosen_odd: u32,
    pub rows: Vec<ARow>,
}

impl ATable {
    pub fn degree(&self, r: usize, tbl: &CharacterTable) -> u64 {
        self.rows[r].values[tbl.classes().identity_class]
            .to_integer()
            .expect("A-degrees are positive integers") as u64
    }
}

/// Characters of the simple Real modules, by the recipe: fs_real = 1 keeps
/// chi, fs_real = -1 doubles it, fs_real = 0 merges chi with its antilinear
/// partner w . conj(chi). Verifies the square theorem, that rows are Real
/// class functions, and that they are pairwise distinct.
pub fn a_character_table(gg: &GradedGroup, tbl: &CharacterTable) -> Result<ATable> {
    tbl.check_same_group(gg.even_group().fingerprint())?;
    let k = tbl.row_count();
    let mut consumed = vec![false; k];
    let mut rows = Vec::new();
    for j in 0..k {
        if consumed[j] {
            continue;
        }
        consumed[j] = true;
        let ind = indicators(gg, tbl, j)?;
        let row = match ind.fs_real {
            1 => ARow {
                constituents: vec![j],
                schur: 1,
                field: Field::R,
                values: tbl.row(j).to_vec(),
            },
            -1 => ARow {
                constituents: vec![j],
                schur: 4,
                field: Field::H,
                values: tbl.row(j).iter().map(|v| v.scale(&rat_int(2))).collect(),
            },
            0 => {
                // twist-then-conjugate and conjugate-then-twist must agree
                let via_conj = chartable::twist(gg, tbl, &tbl.conjugate_row(j))?;
                let via_twist: Vec<Cyclotomic> = chartable::twist(gg, tbl, tbl.row(j))?
                    .iter()
                    .map(|v| v.conjugate())
                    .collect();
                if via_conj != via_twist {
                    return Err(Error::InternalVerificationFailed {
                        reason: format!("twist and conjugation do not commute on row {j}"),
                    });
                }
                let partner = partner_row(gg, tbl, j)?;
                if partner == j || consumed[partner] {
                    return Err(Error::InternalVerificationFailed {
                        reason: format!("row {j} has fs_real = 0 but partner {partner} is unavailable"),
                    });
                }
                if indicators(gg, tbl, partner)?.fs_real != 0 {
                    return Err(Error::InternalVerificationFailed {
                        reason: format!("partner {partner} of row {j} has nonzero fs_real"),
                    });
                }
                consumed[partner] = true;
                let values = tbl
                    .row(j)
                    .iter()
                    .zip(&via_conj)
                    .map(|(a, b)| a.add(b))
                    .collect();
                ARow {
                    constituents: vec![j, partner],
                    schur: 2,
                    field: Field::C,
                    values,
                }
            }
            other => {
                return Err(Error::ImpossiblePair {
                    fs_complex: ind.fs_complex,
                    fs_real: other,
                })
            }
        };
        rows.push(row);
    }

    let real_classes = gg.real_conjugacy_classes();
    if rows.len() != real_classes.len() {
        return Err(Error::SquareTheoremViolation {
            rows: rows.len(),
            real_classes: real_classes.len(),
        });
    }
    // rows are constant on Real classes and pairwise distinct
    for (j, row) in rows.iter().enumerate() {
        for rc in &real_classes {
            let first = &row.values[rc.g_classes[0]];
            if rc.g_classes.iter().any(|&c| row.values[c] != *first) {
                return Err(Error::TheoremViolation {
                    reason: format!("A-row {j} is not constant on a Real class"),
                });
            }
        }
    }
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i].values == rows[j].values {
                return Err(Error::TheoremViolation {
                    reason: format!("A-rows {i} and {j} coincide as class functions"),
                });
            }
        }
    }
    Ok(ATable {
        group_fingerprint: tbl.group_fingerprint(),
        chosen_odd: gg.chosen_odd(),
        rows,
    })
}

/// fs_A of an A-table row: the Real indicator of its character, which lands
/// in {1, 0, -2} for simple rows.
pub fn fs_a(gg: &GradedGroup, tbl: &CharacterTable, at: &ATable, row: usize) -> Result<i64> {
    fs_real_indicator(gg, tbl, &at.rows[row].values)
}

/// dim Hom between two A-rows: the exact inner product, m_i on the diagonal.
pub fn hom_dimension(tbl: &CharacterTable, at: &ATable, i: usize, j: usize) -> Result<i64> {
    int_of(&tbl.inner_product(&at.rows[i].values, &at.rows[j].values))
}

/// Full Gram matrix of the A-rows; the theorem says diag(m_1, ..., m_r).
pub fn hom_dimensions(tbl: &CharacterTable, at: &ATable) -> Result<Vec<Vec<i64>>> {
    let r = at.rows.len();
    let mut gram = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            gram[i][j] = hom_dimension(tbl, at, i, j)?;
            let expected = if i == j { at.rows[i].schur as i64 } else { 0 };
            if gram[i][j] != expected {
                return Err(Error::TheoremViolation {
                    reason: format!("<theta_{i}, theta_{j}> = {}, expected {expected}", gram[i][j]),
                });
            }
        }
    }
    Ok(gram)
}

/// <phi, phi> + fs_A(phi) = 2 characterises the simple A-characters among
/// nonnegative integer combinations of rows.
pub fn is_simple_a_character(gg: &GradedGroup, tbl: &CharacterTable, values: &[Cyclotomic]) -> Result<bool> {
    let ip = int_of(&tbl.inner_product(values, values))?;
    let fs = fs_real_indicator(gg, tbl, values)?;
    Ok(ip + fs == 2)
}

/// Multiplicities of the simple modules in the regular A-module, computed by
/// the formula b_j = 2 deg / m and independently as <theta_j, chi_R> / m_j
/// against the doubled regular character; also checks |G| = sum deg^2 / m.
pub fn regular_decomposition(gg: &GradedGroup, tbl: &CharacterTable, at: &ATable) -> Result<Vec<u64>> {
    tbl.check_same_group(at.group_fingerprint)?;
    let k = tbl.classes().count();
    let order = gg.even_group().order() as i64;
    // chi_R: 2|G| at the identity, zero elsewhere
    let mut chi_r = vec![Cyclotomic::zero(); k];
    chi_r[tbl.classes().identity_class] = Cyclotomic::from_integer(2 * order);
    let mut mults = Vec::with_capacity(at.rows.len());
    let mut dim_sum = Rational::new(0.into(), 1.into());
    for (j, row) in at.rows.iter().enumerate() {
        let m = row.schur as i64;
        let deg = at.degree(j, tbl) as i64;
        let by_formula = Rational::new((2 * deg).into(), m.into());
        let by_pairing = tbl
            .inner_product(&row.values, &chi_r)
            .to_rational()?
            / Rational::from_integer(m.into());
        if by_formula != by_pairing {
            return Err(Error::ConsistencyFailure {
                reason: format!("b_{j} = {by_formula} by formula, {by_pairing} by pairing"),
            });
        }
        if !by_formula.is_integer() {
            return Err(Error::ConsistencyFailure {
                reason: format!("b_{j} = {by_formula} is not an integer"),
            });
        }
        let b: i64 = by_formula.to_integer().try_into().map_err(|_| Error::ConsistencyFailure {
            reason: "regular multiplicity overflows".into(),
        })?;
        mults.push(b as u64);
        dim_sum += Rational::new((deg * deg).into(), m.into());
    }
    if dim_sum != rat_int(order) {
        return Err(Error::ConsistencyFailure {
            reason: format!("sum deg^2/m = {dim_sum}, group order is {order}"),
        });
    }
    Ok(mults)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CentreReport {
    /// A-rows of type R, C, H.
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub centre_dim: usize,
    pub class_count: usize,
    /// Explicit basis cross-check: class sums of Ghat-classes inside G, plus
    /// one skew element per split class.
    pub class_sums: usize,
    pub split_classes: usize,
}

/// Centre dimension r + 2s + t of the Real group algebra equals the number
/// of G-classes, cross-checked against the explicit basis count; also checks
/// the counting corollary s = #classes - #Real classes.
pub fn centre_report(gg: &GradedGroup, tbl: &CharacterTable, at: &ATable) -> Result<CentreReport> {
    tbl.check_same_group(gg.even_group().fingerprint())?;
    let r = at.rows.iter().filter(|x| x.field == Field::R).count();
    let s = at.rows.iter().filter(|x| x.field == Field::C).count();
    let t = at.rows.iter().filter(|x| x.field == Field::H).count();
    let class_count = tbl.classes().count();

    let hat_classes = crate::group::ClassData::new(gg.ghat());
    let mut class_sums = 0;
    let mut split_classes = 0;
    for cl in &hat_classes.classes {
        if !gg.is_even(cl.representative) {
            continue;
        }
        class_sums += 1;
        if gg.classify_class_case(cl.representative)?.0 == ACase::A1 {
            split_classes += 1;
        }
    }
    let report = CentreReport {
        r,
        s,
        t,
        centre_dim: r + 2 * s + t,
        class_count,
        class_sums,
        split_classes,
    };
    if report.centre_dim != class_count || class_sums + split_classes != class_count {
        return Err(Error::TheoremViolation {
            reason: format!(
                "centre dimension {} (basis {} + {}) vs {} classes",
                report.centre_dim, class_sums, split_classes, class_count
            ),
        });
    }
    let real_classes = gg.real_conjugacy_classes().len();
    if s != class_count - real_classes {
        return Err(Error::TheoremViolation {
            reason: format!(
                "{s} complex-type rows, expected #classes - #Real classes = {}",
                class_count - real_classes
            ),
        });
    }
    Ok(report)
}

/// One cell of column orthogonality over Real classes r, s:
/// sum_j theta_j(g_r) conj(theta_j(g_s)) / m_j = delta_rs |E(g_s)| / 2.
pub fn column_orthogonality_at(
    gg: &GradedGroup,
    tbl: &CharacterTable,
    at: &ATable,
    r: usize,
    s: usize,
) -> Result<()> {
    let real_classes = gg.real_conjugacy_classes();
    let class_r = tbl.classes().class_of(gg.to_even(real_classes[r].representative)?);
    let class_s = tbl.classes().class_of(gg.to_even(real_classes[s].representative)?);
    let mut acc = Cyclotomic::zero();
    for row in &at.rows {
        let term = row.values[class_r]
            .mul(&row.values[class_s].conjugate())
            .scale(&Rational::new(1.into(), (row.schur as i64).into()));
        acc = acc.add(&term);
    }
    let expected = if r == s {
        Cyclotomic::from_rational(Rational::new(
            (real_classes[s].real_stabilizer_order as i64).into(),
            2.into(),
        ))
    } else {
        Cyclotomic::zero()
    };
    if acc != expected {
        return Err(Error::TheoremViolation {
            reason: format!("column orthogonality fails at Real classes {r}, {s}: {acc} != {expected}"),
        });
    }
    Ok(())
}

/// Column orthogonality at every pair of Real classes.
pub fn column_orthogonality(gg: &GradedGroup, tbl: &CharacterTable, at: &ATable) -> Result<()> {
    let n = gg.real_conjugacy_classes().len();
    for r in 0..n {
        for s in 0..n {
            column_orthogonality_at(gg, tbl, at, r, s)?;
        }
    }
    Ok(())
}

/// Central idempotent of one A-row in CG: coefficient of g is
/// theta(e) theta(g^-1) / (m |G|). Verified idempotent and fixed by the
/// antilinear symmetry c_{zgz^-1} = conj(c_g).
pub fn central_idempotent(
    gg: &GradedGroup,
    tbl: &CharacterTable,
    at: &ATable,
    j: usize,
) -> Result<Vec<Cyclotomic>> {
    let g = gg.even_group();
    let n = g.order();
    let row = &at.rows[j];
    let scale = Rational::new(
        (at.degree(j, tbl) as i64).into(),
        (row.schur as i64 * n as i64).into(),
    );
    let coeffs: Vec<Cyclotomic> = (0..n as u32)
        .map(|x| row.values[tbl.classes().class_of(g.inv(x))].scale(&scale))
        .collect();

    let w = gg.chosen_odd();
    for x in 0..n as u32 {
        let cx = gg.to_even(gg.ghat().conjugate(w, gg.from_even(x)))?;
        if coeffs[cx as usize] != coeffs[x as usize].conjugate() {
            return Err(Error::TheoremViolation {
                reason: format!("idempotent {j} is not fixed by the antilinear symmetry"),
            });
        }
    }
    let self_conv = convolve(g, &coeffs, &coeffs);
    if self_conv != coeffs {
        return Err(Error::TheoremViolation {
            reason: format!("e_{j} * e_{j} != e_{j}"),
        });
    }
    Ok(coeffs)
}

fn convolve(g: &FiniteGroup, a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let n = g.order();
    let mut out = vec![Cyclotomic::zero(); n];
    for h in 0..n as u32 {
        if a[h as usize].is_zero() {
            continue;
        }
        for x in 0..n as u32 {
            if b[x as usize].is_zero() {
                continue;
            }
            let hx = g.mul(h, x);
            out[hx as usize] = out[hx as usize].add(&a[h as usize].mul(&b[x as usize]));
        }
    }
    out
}

/// All central idempotents, additionally verified pairwise orthogonal and
/// summing to 1.
pub fn central_idempotents(gg: &GradedGroup, tbl: &CharacterTable, at: &ATable) -> Result<Vec<Vec<Cyclotomic>>> {
    let g = gg.even_group();
    let idempotents: Vec<Vec<Cyclotomic>> = (0..at.rows.len())
        .map(|j| central_idempotent(gg, tbl, at, j))
        .collect::<Result<_>>()?;
    for (i, ei) in idempotents.iter().enumerate() {
        for (j, ej) in idempotents.iter().enumerate() {
            if i == j {
                continue;
            }
            if convolve(g, ei, ej).iter().any(|c| !c.is_zero()) {
                return Err(Error::TheoremViolation {
                    reason: format!("e_{i} * e_{j} != 0"),
                });
            }
        }
    }
    let mut total = vec![Cyclotomic::zero(); g.order()];
    for e in &idempotents {
        for (t, c) in total.iter_mut().zip(e) {
            *t = t.add(c);
        }
    }
    for (x, c) in total.iter().enumerate() {
        let expected = if x as u32 == g.identity() {
            Cyclotomic::one()
        } else {
            Cyclotomic::zero()
        };
        if *c != expected {
            return Err(Error::TheoremViolation {
                reason: "idempotents do not sum to 1".into(),
            });
        }
    }
    Ok(idempotents)
}

/// r(h) = #{odd z : z^2 = h}, by brute force and by the character formula
/// sum_j fs_real(chi_j) chi_j(h); returns their common value.
pub fn square_root_count(gg: &GradedGroup, tbl: &CharacterTable, h: u32) -> Result<i64> {
    if !gg.is_even(h) {
        return Err(Error::NotEven { element: h as usize });
    }
    let mut oracle = 0i64;
    for z in gg.odd_elements() {
        if gg.ghat().mul(z, z) == h {
            oracle += 1;
        }
    }
    let class = tbl.classes().class_of(gg.to_even(h)?);
    let mut acc = Cyclotomic::zero();
    for row in 0..tbl.row_count() {
        let fs = indicators(gg, tbl, row)?.fs_real;
        if fs != 0 {
            acc = acc.add(&tbl.value(row, class).scale(&rat_int(fs)));
        }
    }
    let formula = int_of(&acc)?;
    if formula != oracle {
        return Err(Error::OracleMismatch {
            reason: format!("element {h}: formula gives {formula}, direct count gives {oracle}"),
        });
    }
    Ok(formula)
}

/// Both square-root counting identities, classwise:
/// sum_j fs_complex(chi_j) chi_j = #even square roots and
/// sum_j fs_real(chi_j) chi_j = #odd square roots.
pub fn square_root_identities(gg: &GradedGroup, tbl: &CharacterTable) -> Result<(Vec<i64>, Vec<i64>)> {
    let (even, odd) = square_class_counts(gg, tbl)?;
    let k = tbl.classes().count();
    let mut even_sum = vec![Cyclotomic::zero(); k];
    let mut odd_sum = vec![Cyclotomic::zero(); k];
    for row in 0..k {
        let ind = indicators(gg, tbl, row)?;
        for c in 0..k {
            if ind.fs_complex != 0 {
                even_sum[c] = even_sum[c].add(&tbl.value(row, c).scale(&rat_int(ind.fs_complex)));
            }
            if ind.fs_real != 0 {
                odd_sum[c] = odd_sum[c].add(&tbl.value(row, c).scale(&rat_int(ind.fs_real)));
            }
        }
    }
    // the bucket counts aggregate whole classes: class size times the
    // per-element root count the character sums compute
    for c in 0..k {
        let size = tbl.classes().classes[c].members.len() as i64;
        if int_of(&even_sum[c])? * size != even[c] || int_of(&odd_sum[c])? * size != odd[c] {
            return Err(Error::TheoremViolation {
                reason: format!("square-root counts disagree with the character sums on class {c}"),
            });
        }
    }
    Ok((even, odd))
}

/// Closing difference identity: on totally orthogonal-style tables (no
/// quaternionic indicators), for every even g
///   sum_{w.conj chi = chi} chi(g) - sum_{conj chi = chi} chi(g)
///     = #odd square roots of g - #even square roots of g.
pub fn closing_identity(gg: &GradedGroup, tbl: &CharacterTable) -> Result<()> {
    let k = tbl.classes().count();
    let mut inds = Vec::with_capacity(k);
    for row in 0..k {
        let ind = indicators(gg, tbl, row)?;
        if ind.fs_complex == -1 || ind.fs_real == -1 {
            return Err(Error::NotApplicable {
                reason: format!("row {row} is quaternionic; the set form of the identity needs indicators in {{0, 1}}"),
            });
        }
        inds.push(ind);
    }
    let (even, odd) = square_class_counts(gg, tbl)?;
    for c in 0..k {
        let mut twist_fixed = Cyclotomic::zero();
        let mut conj_fixed = Cyclotomic::zero();
        for row in 0..k {
            if inds[row].fs_real == 1 {
                twist_fixed = twist_fixed.add(tbl.value(row, c));
            }
            if inds[row].fs_complex == 1 {
                conj_fixed = conj_fixed.add(tbl.value(row, c));
            }
        }
        let size = tbl.classes().classes[c].members.len() as i64;
        let lhs = int_of(&twist_fixed.sub(&conj_fixed))?;
        if lhs * size != odd[c] - even[c] {
            return Err(Error::TheoremViolation {
                reason: format!(
                    "closing identity fails on class {c}: {lhs} vs {}",
                    (odd[c] - even[c]) / size
                ),
            });
        }
    }
    Ok(())
}

/// r(h) attains its maximum at the identity when no A-row is quaternionic;
/// not applicable otherwise.
pub fn max_at_identity_check(gg: &GradedGroup, tbl: &CharacterTable) -> Result<bool> {
    for row in 0..tbl.row_count() {
        if indicators(gg, tbl, row)?.fs_real == -1 {
            return Err(Error::NotApplicable {
                reason: format!("row {row} is of type H"),
            });
        }
    }
    let (_, odd) = square_class_counts(gg, tbl)?;
    let at_id = odd[tbl.classes().identity_class];
    // per-element counts: the buckets hold class size times r(h)
    Ok(odd
        .iter()
        .zip(&tbl.classes().classes)
        .all(|(&v, cl)| v <= at_id * cl.members.len() as i64))
}

/// The Real class function chi + w . conj(chi) of the realified module; for
/// an irreducible chi with fs_real = 0 this is the matching A-row.
pub fn realify_character(gg: &GradedGroup, tbl: &CharacterTable, values: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    let partner = chartable::twist(gg, tbl, &values.iter().map(|v| v.conjugate()).collect::<Vec<_>>())?;
    Ok(values.iter().zip(&partner).map(|(a, b)| a.add(b)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AlgebraFactor {
    pub field: Field,
    /// Matrix size over the field.
    pub size: u64,
    pub real_dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AlgebraReport {
    pub factors: Vec<AlgebraFactor>,
    pub total_real_dim: u64,
    /// Matrix sizes of the complex group algebra factors induced by the Real
    /// decomposition; must equal the degree multiset of G.
    pub complex_factor_sizes: Vec<u64>,
}

/// Wedderburn decomposition of the Real group algebra: per A-row of degree D
/// the factor is M_{2D}(R), M_D(C) or M_{D/2}(H). Audited against the total
/// real dimension 2|Ghat| and the complex group algebra of G.
pub fn algebra_decomposition(gg: &GradedGroup, tbl: &CharacterTable, at: &ATable) -> Result<AlgebraReport> {
    let mut factors = Vec::with_capacity(at.rows.len());
    let mut complex_sizes = Vec::new();
    for (j, row) in at.rows.iter().enumerate() {
        let d = at.degree(j, tbl);
        let (size, real_dim) = match row.field {
            Field::R => (2 * d, 4 * d * d),
            Field::C => (d, 2 * d * d),
            Field::H => {
                if d % 2 != 0 {
                    return Err(Error::ConsistencyFailure {
                        reason: format!("quaternionic A-row {j} has odd degree {d}"),
                    });
                }
                (d / 2, d * d)
            }
        };
        match row.field {
            Field::R => complex_sizes.push(d),
            Field::C => complex_sizes.extend([d / 2, d / 2]),
            Field::H => complex_sizes.push(d / 2),
        }
        factors.push(AlgebraFactor {
            field: row.field,
            size,
            real_dim,
        });
    }
    let total: u64 = factors.iter().map(|f| f.real_dim).sum();
    if total != 2 * gg.ghat().order() as u64 {
        return Err(Error::ConsistencyFailure {
            reason: format!(
                "factors sum to real dimension {total}, the algebra has {}",
                2 * gg.ghat().order()
            ),
        });
    }
    let mut degrees: Vec<u64> = (0..tbl.row_count()).map(|r| tbl.degree(r)).collect();
    degrees.sort_unstable();
    complex_sizes.sort_unstable();
    if degrees != complex_sizes {
        return Err(Error::ConsistencyFailure {
            reason: "complex factors do not match the degree multiset of G".into(),
        });
    }
    Ok(AlgebraReport {
        factors,
        total_real_dim: total,
        complex_factor_sizes: complex_sizes,
    })
}

/// Strong form of the relation check: the classical indicator of the induced
/// character computed upstairs must be half of fs_real_induced.
pub fn induced_indicator_check(
    gg: &GradedGroup,
    tbl: &CharacterTable,
    tbl_hat: &CharacterTable,
    row: usize,
) -> Result<()> {
    let ind = indicators(gg, tbl, row)?;
    let induced = chartable::induce(gg, tbl, tbl_hat, tbl.row(row))?;
    let upstairs = classical_fs_upstairs(gg, tbl_hat, &induced)?;
    if 2 * upstairs != ind.fs_real_induced {
        return Err(Error::TheoremViolation {
            reason: format!(
                "FS(Ind chi) = {upstairs} but the indicators give fs_real_induced = {}",
                ind.fs_real_induced
            ),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::grading::{builtin, Builtin};

    fn setup(which: Builtin) -> (GradedGroup, CharacterTable, CharacterTable) {
        let gg = builtin(which).unwrap();
        let tbl = chartable::character_table(gg.even_group()).unwrap();
        let tbl_hat = chartable::character_table(gg.ghat()).unwrap();
        (gg, tbl, tbl_hat)
    }

    /// Indicator triple (induced, complex, real) of the first row of the
    /// target type, checked against the classification proof's table.
    fn check_profile(which: Builtin, t: DysonType) {
        let (gg, tbl, tbl_hat) = setup(which);
        let row = find_type_row(&gg, &tbl, t)
            .unwrap()
            .unwrap_or_else(|| panic!("{which:?} has no row of type {t}"));
        let ind = indicators(&gg, &tbl, row).unwrap();
        let profile = t.indicator_profile();
        assert_eq!(
            (ind.fs_real_induced, ind.fs_complex, ind.fs_real),
            profile,
            "indicator profile of {which:?} seed row"
        );
        assert_eq!(fs_relation_check(&gg, &tbl, row).unwrap(), profile.0);
        induced_indicator_check(&gg, &tbl, &tbl_hat, row).unwrap();
        assert_eq!(field_triple(&gg, &tbl, &tbl_hat, row).unwrap(), t.fields());
        assert_eq!(block_counts(&gg, &tbl, &tbl_hat, row).unwrap(), t.counts());
    }

    #[test]
    fn builtin_seed_rows_match_the_ten_profiles() {
        check_profile(Builtin::I, DysonType::I);
        check_profile(Builtin::II, DysonType::II);
        check_profile(Builtin::III, DysonType::III);
        check_profile(Builtin::IV, DysonType::IV);
        check_profile(Builtin::V, DysonType::V);
        check_profile(Builtin::VI, DysonType::VI);
        check_profile(Builtin::VII, DysonType::VII);
        check_profile(Builtin::VIII, DysonType::VIII);
        check_profile(Builtin::IX, DysonType::IX);
        check_profile(Builtin::IXPauli, DysonType::IX);
        check_profile(Builtin::X, DysonType::X);
    }

    #[test]
    fn trivial_block_is_type_i() {
        for which in [Builtin::II, Builtin::V, Builtin::VIII] {
            let (gg, tbl, _) = setup(which);
            assert_eq!(dyson_type(&gg, &tbl, 0).unwrap(), DysonType::I);
        }
    }

    #[test]
    fn a_table_of_v_has_three_linear_real_rows() {
        // S3 over C3: both nontrivial characters of C3 fuse, trivial splits
        // off, and the fused row has m = 1 because the odd reflection already
        // realises the exchange.
        let (gg, tbl, _) = setup(Builtin::V);
        let at = a_character_table(&gg, &tbl).unwrap();
        assert_eq!(at.rows.len(), 3);
        // type V: two Real rows of multiplicity 1 from the fused pair plus
        // the trivial row
        let schurs: Vec<u8> = at.rows.iter().map(|r| r.schur).collect();
        assert_eq!(schurs, vec![1, 1, 1]);
        assert_eq!(hom_dimensions(&tbl, &at).unwrap(), vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ]);
    }

    #[test]
    fn a_table_of_iv_fuses_the_rotation_characters() {
        let (gg, tbl, _) = setup(Builtin::IV);
        let at = a_character_table(&gg, &tbl).unwrap();
        assert_eq!(at.rows.len(), 2);
        let mut schurs: Vec<u8> = at.rows.iter().map(|r| r.schur).collect();
        schurs.sort_unstable();
        assert_eq!(schurs, vec![1, 2]);
        // theta = omega + conj(omega) takes value -1 on both rotations
        let fused = at.rows.iter().find(|r| r.schur == 2).unwrap();
        let rot_class = tbl.classes().class_of(1);
        assert_eq!(fused.values[rot_class], Cyclotomic::from_integer(-1));
        // both rows have 2 deg / m = 2
        assert_eq!(regular_decomposition(&gg, &tbl, &at).unwrap(), vec![2, 2]);
    }

    #[test]
    fn a_table_of_ii_doubles_the_sign_row() {
        // C2 inside C4: sign character of C2 is quaternionic here
        let (gg, tbl, _) = setup(Builtin::II);
        let at = a_character_table(&gg, &tbl).unwrap();
        assert_eq!(at.rows.len(), 2);
        let schurs: Vec<u8> = at.rows.iter().map(|r| r.schur).collect();
        assert_eq!(schurs, vec![1, 4]);
        assert_eq!(at.degree(1, &tbl), 2);
        assert_eq!(regular_decomposition(&gg, &tbl, &at).unwrap(), vec![2, 1]);
        assert_eq!(at.rows[1].field, Field::H);
    }

    #[test]
    fn idempotents_match_hand_computations() {
        // C2 in C4: e_2 = (1/2)(e - x^2) where x^2 is the nonidentity even
        // element.
        let (gg, tbl, _) = setup(Builtin::II);
        let at = a_character_table(&gg, &tbl).unwrap();
        let e2 = central_idempotent(&gg, &tbl, &at, 1).unwrap();
        let half = Cyclotomic::from_rational(rat(1, 2));
        assert_eq!(e2[0], half);
        assert_eq!(e2[1], half.neg());

        // C3 in C6: e for the fused row is (1/3)(2e - c - c^2).
        let (gg, tbl, _) = setup(Builtin::IV);
        let at = a_character_table(&gg, &tbl).unwrap();
        let fused = (0..2).find(|&j| at.rows[j].schur == 2).unwrap();
        let e = central_idempotent(&gg, &tbl, &at, fused).unwrap();
        assert_eq!(e[0], Cyclotomic::from_rational(rat(2, 3)));
        assert_eq!(e[1], Cyclotomic::from_rational(rat(-1, 3)));
        assert_eq!(e[2], Cyclotomic::from_rational(rat(-1, 3)));
    }

    fn theorem_battery(which: Builtin) {
        let (gg, tbl, tbl_hat) = setup(which);
        let at = a_character_table(&gg, &tbl).unwrap();
        hom_dimensions(&tbl, &at).unwrap();
        regular_decomposition(&gg, &tbl, &at).unwrap();
        centre_report(&gg, &tbl, &at).unwrap();
        column_orthogonality(&gg, &tbl, &at).unwrap();
        central_idempotents(&gg, &tbl, &at).unwrap();
        square_root_identities(&gg, &tbl).unwrap();
        blocks(&gg, &tbl, &tbl_hat).unwrap();
        for h in gg.even_elements().to_vec() {
            square_root_count(&gg, &tbl, h).unwrap();
        }
        for row in 0..tbl.row_count() {
            induced_indicator_check(&gg, &tbl, &tbl_hat, row).unwrap();
            fs_relation_check(&gg, &tbl, row).unwrap();
        }
    }

    #[test]
    fn theorem_battery_on_small_builtins() {
        for which in [
            Builtin::I,
            Builtin::II,
            Builtin::III,
            Builtin::IV,
            Builtin::V,
            Builtin::VI,
            Builtin::VII,
            Builtin::VIII,
            Builtin::IX,
            Builtin::IXPauli,
            Builtin::X,
        ] {
            theorem_battery(which);
        }
    }

    #[test]
    fn simplicity_criterion() {
        let (gg, tbl, _) = setup(Builtin::V);
        let at = a_character_table(&gg, &tbl).unwrap();
        for row in &at.rows {
            assert!(is_simple_a_character(&gg, &tbl, &row.values).unwrap());
        }
        // the sum of two simples is not simple
        let sum: Vec<Cyclotomic> = at.rows[0]
            .values
            .iter()
            .zip(&at.rows[1].values)
            .map(|(a, b)| a.add(b))
            .collect();
        assert!(!is_simple_a_character(&gg, &tbl, &sum).unwrap());
    }

    #[test]
    fn realified_character_is_the_a_row() {
        let (gg, tbl, _) = setup(Builtin::IV);
        let at = a_character_table(&gg, &tbl).unwrap();
        let fused = at.rows.iter().find(|r| r.schur == 2).unwrap();
        let j = fused.constituents[0];
        let re = realify_character(&gg, &tbl, tbl.row(j)).unwrap();
        assert_eq!(re, fused.values);
    }

    #[test]
    fn max_at_identity_and_closing_identity() {
        // V has no quaternionic rows: both checks apply and pass.
        let (gg, tbl, _) = setup(Builtin::V);
        assert!(max_at_identity_check(&gg, &tbl).unwrap());
        closing_identity(&gg, &tbl).unwrap();
        // II has a quaternionic row: both report NotApplicable.
        let (gg, tbl, _) = setup(Builtin::II);
        assert!(matches!(
            max_at_identity_check(&gg, &tbl),
            Err(Error::NotApplicable { .. })
        ));
        assert!(matches!(
            closing_identity(&gg, &tbl),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn algebra_reports() {
        // C1 in C2: R + R = R[C2]
        let (gg, tbl, _) = setup(Builtin::I);
        let at = a_character_table(&gg, &tbl).unwrap();
        let rep = algebra_decomposition(&gg, &tbl, &at).unwrap();
        assert_eq!(rep.total_real_dim, 4);
        assert_eq!(rep.factors.len(), 1);
        assert_eq!(rep.factors[0].field, Field::R);
        assert_eq!(rep.factors[0].size, 2);

        // C2 in C4: M_2(R) + H, dimension 4 + 4 = 8
        let (gg, tbl, _) = setup(Builtin::II);
        let at = a_character_table(&gg, &tbl).unwrap();
        let rep = algebra_decomposition(&gg, &tbl, &at).unwrap();
        let mut dims: Vec<u64> = rep.factors.iter().map(|f| f.real_dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![4, 4]);
        assert!(rep.factors.iter().any(|f| f.field == Field::H && f.size == 1));
    }

    #[test]
    fn dyson_types_partition_the_tables() {
        // Every row of every builtin classifies, and its indicator triple is
        // exactly the column printed for its type.
        for which in Builtin::all() {
            let gg = builtin(which).unwrap();
            let tbl = chartable::character_table(gg.even_group()).unwrap();
            for row in 0..tbl.row_count() {
                let ty = dyson_type(&gg, &tbl, row).unwrap();
                let inds = indicators(&gg, &tbl, row).unwrap();
                assert_eq!(
                    (inds.fs_real_induced, inds.fs_complex, inds.fs_real),
                    ty.indicator_profile(),
                    "{} row {row}",
                    which.token()
                );
            }
        }
    }
}
