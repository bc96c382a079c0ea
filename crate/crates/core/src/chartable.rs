//! Exact complex character tables of finite groups.
//!
//! The solver splits the class algebra over a prime field GF(p) with
//! p = 1 (mod exp G) and p > 2 sqrt |G|, then lifts each central character to
//! exact cyclotomic values through eigenvalue multiplicities. The lifted
//! table is re-verified against the orthogonality relations before it is
//! returned, so a successful result is self-certifying.
//!
//! Sized for class counts in the dozens; the eigenvalue scan is linear in p,
//! so groups with huge exponent and many classes are out of scope.

use crate::cyclo::{rat_int, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::grading::GradedGroup;
use crate::group::{ClassData, FiniteGroup};
use crate::modp;

/// A class function tagged with the group it belongs to, so mixing tables of
/// different groups is caught instead of silently producing nonsense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub group_fingerprint: u64,
    pub values: Vec<Cyclotomic>,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    group_fingerprint: u64,
    group_order: usize,
    classes: ClassData,
    rows: Vec<Vec<Cyclotomic>>,
}

/// Compute the full irreducible character table, rows in a canonical order:
/// ascending degree, trivial character first, then by rendered values.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let classes = ClassData::new(g);
    let k = classes.count();
    let order = g.order() as u64;
    let exponent = g.exponent();
    let p = modp::find_splitting_prime(order, exponent);

    // Split GF(p)^k into the common eigenspaces of the class-sum operators.
    let mut spaces = vec![modp::Subspace::full(k)];
    for i in 0..k {
        if i == classes.identity_class {
            continue;
        }
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        // m[j][l] counts x in C_i with x^-1 z_l in C_j, i.e. the structure
        // constant a_{ijl}; the central characters are its eigenvectors.
        let mut m = vec![vec![0u64; k]; k];
        for &x in &classes.classes[i].members {
            let xi = g.inv(x);
            for (l, cl) in classes.classes.iter().enumerate() {
                let j = classes.class_of(g.mul(xi, cl.representative));
                m[j][l] += 1;
            }
        }
        for row in &mut m {
            for x in row {
                *x %= p;
            }
        }
        let mut next = Vec::with_capacity(spaces.len());
        for s in spaces {
            next.extend(s.split_by(&m, p)?);
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::InternalVerificationFailed {
            reason: format!("{} common eigenspaces for {k} classes", spaces.len()),
        });
    }

    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for s in &spaces {
        let v = &s.basis[0];
        let unit = v[classes.identity_class];
        if unit == 0 {
            return Err(Error::InternalVerificationFailed {
                reason: "central character vanishes on the identity class".into(),
            });
        }
        let scale = modp::inv_mod(unit, p);
        omegas.push(v.iter().map(|&x| x * scale % p).collect());
    }
    omegas.sort_unstable();
    omegas.dedup();
    if omegas.len() != k {
        return Err(Error::InternalVerificationFailed {
            reason: "central characters are not pairwise distinct".into(),
        });
    }

    // Degrees: sum_i w_i w_{i'} / |C_i| = |G| / d^2 in GF(p), and the true
    // degree is the unique square root below p/2.
    let order_mod = order % p;
    let mut rows_p: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for w in &omegas {
        let mut s = 0u64;
        for i in 0..k {
            let size = classes.classes[i].members.len() as u64 % p;
            s = (s + w[i] * w[classes.inverse_class[i]] % p * modp::inv_mod(size, p)) % p;
        }
        let d_sq = order_mod * modp::inv_mod(s, p) % p;
        let d = (1..=(p - 1) / 2)
            .find(|d| d * d % p == d_sq)
            .ok_or_else(|| Error::InternalVerificationFailed {
                reason: "degree has no square root below p/2".into(),
            })?;
        let values = (0..k)
            .map(|i| {
                let size = classes.classes[i].members.len() as u64 % p;
                d * w[i] % p * modp::inv_mod(size, p) % p
            })
            .collect();
        rows_p.push((d, values));
    }

    // Lift each value through eigenvalue multiplicities: the multiplicity of
    // zeta_e^t in rho(g) is bounded by the degree, hence below p, so its
    // residue determines it.
    let root = modp::primitive_root(p);
    let z = modp::pow_mod(root, (p - 1) / exponent, p);
    let e = exponent as usize;
    let mut z_pow = vec![1u64; e];
    for i in 1..e {
        z_pow[i] = z_pow[i - 1] * z % p;
    }
    let e_inv = modp::inv_mod(exponent % p, p);
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::with_capacity(k);
    for (d, chi_p) in &rows_p {
        let mut values = Vec::with_capacity(k);
        for cl in &classes.classes {
            let rep = cl.representative;
            let mut pow_class = Vec::with_capacity(e);
            let mut x = g.identity();
            for _ in 0..e {
                pow_class.push(classes.class_of(x));
                x = g.mul(x, rep);
            }
            let mut terms = Vec::new();
            let mut total = 0u64;
            for t in 0..e {
                let mut acc = 0u64;
                for s in 0..e {
                    let zexp = (e - s * t % e) % e;
                    acc = (acc + chi_p[pow_class[s]] * z_pow[zexp]) % p;
                }
                let mult = acc * e_inv % p;
                if mult != 0 {
                    total += mult;
                    terms.push((t as u64, rat_int(mult as i64)));
                }
            }
            if total != *d {
                return Err(Error::InternalVerificationFailed {
                    reason: format!("eigenvalue multiplicities sum to {total}, degree is {d}"),
                });
            }
            values.push(Cyclotomic::from_terms(exponent, terms)?);
        }
        rows.push(values);
    }

    // Canonical order: degree, trivial row first, then rendered values.
    let render = |row: &Vec<Cyclotomic>| -> Vec<String> { row.iter().map(|v| v.to_string()).collect() };
    let trivial: Vec<Cyclotomic> = (0..k).map(|_| Cyclotomic::one()).collect();
    rows.sort_by_cached_key(|r| {
        (
            r[classes.identity_class].to_integer().unwrap_or(i64::MAX),
            *r != trivial,
            render(r),
        )
    });

    let table = CharacterTable {
        group_fingerprint: g.fingerprint(),
        group_order: g.order(),
        classes,
        rows,
    };
    table.verify_orthogonality()?;
    Ok(table)
}

impl CharacterTable {
    pub fn group_fingerprint(&self) -> u64 {
        self.group_fingerprint
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &[Cyclotomic] {
        &self.rows[r]
    }

    pub fn value(&self, r: usize, class: usize) -> &Cyclotomic {
        &self.rows[r][class]
    }

    pub fn degree(&self, r: usize) -> u64 {
        self.rows[r][self.classes.identity_class]
            .to_integer()
            .expect("degrees are positive integers") as u64
    }

    pub fn class_function(&self, values: Vec<Cyclotomic>) -> ClassFunction {
        ClassFunction {
            group_fingerprint: self.group_fingerprint,
            values,
        }
    }

    pub fn check_same_group(&self, fingerprint: u64) -> Result<()> {
        if self.group_fingerprint != fingerprint {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// <a, b> = (1/|G|) sum_g a(g) conj(b(g)), evaluated classwise.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (i, cl) in self.classes.classes.iter().enumerate() {
            let term = a[i].mul(&b[i].conjugate()).scale(&rat_int(cl.members.len() as i64));
            acc = acc.add(&term);
        }
        acc.scale(&Rational::new(1.into(), (self.group_order as i64).into()))
    }

    /// Index of the irreducible row with exactly these values.
    pub fn find_row(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.rows.iter().position(|r| r == values)
    }

    pub fn conjugate_row(&self, r: usize) -> Vec<Cyclotomic> {
        self.rows[r].iter().map(|v| v.conjugate()).collect()
    }

    fn verify_orthogonality(&self) -> Result<()> {
        let k = self.classes.count();
        if self.rows.len() != k {
            return Err(Error::InternalVerificationFailed {
                reason: format!("{} rows for {k} classes", self.rows.len()),
            });
        }
        let mut degree_sum = 0u64;
        for r in &self.rows {
            let d = r[self.classes.identity_class]
                .to_integer()
                .map_err(|_| Error::InternalVerificationFailed {
                    reason: "degree is not a rational integer".into(),
                })?;
            degree_sum += (d * d) as u64;
        }
        if degree_sum != self.group_order as u64 {
            return Err(Error::InternalVerificationFailed {
                reason: format!("degree squares sum to {degree_sum}, group order is {}", self.group_order),
            });
        }
        for r in 0..k {
            for s in r..k {
                let ip = self.inner_product(&self.rows[r], &self.rows[s]);
                let expected = if r == s { Cyclotomic::one() } else { Cyclotomic::zero() };
                if ip != expected {
                    return Err(Error::InternalVerificationFailed {
                        reason: format!("<row {r}, row {s}> = {ip}"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// The twist (w . chi)(g) = chi(w^-1 g w) of a class function on the even
/// subgroup; independent of the chosen odd element for class functions.
pub fn twist(gg: &GradedGroup, tbl: &CharacterTable, values: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    tbl.check_same_group(gg.even_group().fingerprint())?;
    let w_inv = gg.ghat().inv(gg.chosen_odd());
    let out = tbl
        .classes()
        .classes
        .iter()
        .map(|cl| {
            let rep_hat = gg.from_even(cl.representative);
            let conj = gg.ghat().conjugate(w_inv, rep_hat);
            Ok(values[tbl.classes().class_of(gg.to_even(conj)?)].clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(out)
}

/// Restriction of a class function on Ghat to the even subgroup.
pub fn restrict(
    gg: &GradedGroup,
    tbl_even: &CharacterTable,
    tbl_hat: &CharacterTable,
    values: &[Cyclotomic],
) -> Result<Vec<Cyclotomic>> {
    tbl_even.check_same_group(gg.even_group().fingerprint())?;
    tbl_hat.check_same_group(gg.ghat().fingerprint())?;
    Ok(tbl_even
        .classes()
        .classes
        .iter()
        .map(|cl| values[tbl_hat.classes().class_of(gg.from_even(cl.representative))].clone())
        .collect())
}

/// Induction of a class function on the even subgroup up to Ghat:
/// Ind(chi)(x) = chi~(x) + chi~(w^-1 x w), zero on the odd coset.
pub fn induce(
    gg: &GradedGroup,
    tbl_even: &CharacterTable,
    tbl_hat: &CharacterTable,
    values: &[Cyclotomic],
) -> Result<Vec<Cyclotomic>> {
    tbl_even.check_same_group(gg.even_group().fingerprint())?;
    tbl_hat.check_same_group(gg.ghat().fingerprint())?;
    let w_inv = gg.ghat().inv(gg.chosen_odd());
    let mut out = Vec::with_capacity(tbl_hat.classes().count());
    for cl in &tbl_hat.classes().classes {
        let x = cl.representative;
        if !gg.is_even(x) {
            out.push(Cyclotomic::zero());
            continue;
        }
        let a = &values[tbl_even.classes().class_of(gg.to_even(x)?)];
        let conj = gg.ghat().conjugate(w_inv, x);
        let b = &values[tbl_even.classes().class_of(gg.to_even(conj)?)];
        out.push(a.add(b));
    }
    Ok(out)
}

/// Multiply a class function on Ghat by the sign of the grading.
pub fn parity_twist(gg: &GradedGroup, tbl_hat: &CharacterTable, values: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    tbl_hat.check_same_group(gg.ghat().fingerprint())?;
    Ok(tbl_hat
        .classes()
        .classes
        .iter()
        .zip(values)
        .map(|(cl, v)| if gg.is_even(cl.representative) { v.clone() } else { v.neg() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Family, DEFAULT_MAX_ORDER};

    fn table_of(f: Family) -> CharacterTable {
        character_table(&FiniteGroup::family(f, DEFAULT_MAX_ORDER).unwrap()).unwrap()
    }

    fn degrees(t: &CharacterTable) -> Vec<u64> {
        let mut d: Vec<u64> = (0..t.row_count()).map(|r| t.degree(r)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn small_groups_have_expected_degrees() {
        // every successful solve is already orthogonality-checked internally
        assert_eq!(degrees(&table_of(Family::Cyclic(1))), vec![1]);
        assert_eq!(degrees(&table_of(Family::Cyclic(12))), vec![1; 12]);
        assert_eq!(degrees(&table_of(Family::Klein)), vec![1; 4]);
        assert_eq!(degrees(&table_of(Family::Symmetric(3))), vec![1, 1, 2]);
        assert_eq!(degrees(&table_of(Family::Dihedral(8))), vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees(&table_of(Family::Quaternion)), vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees(&table_of(Family::Symmetric(4))), vec![1, 1, 2, 3, 3]);
        assert_eq!(degrees(&table_of(Family::Alternating(4))), vec![1, 1, 1, 3]);
        assert_eq!(degrees(&table_of(Family::Alternating(5))), vec![1, 3, 3, 4, 5]);
        assert_eq!(degrees(&table_of(Family::Dicyclic(12))), vec![1, 1, 1, 1, 2, 2]);
    }

    #[test]
    fn cyclic_three_values() {
        let t = table_of(Family::Cyclic(3));
        let z = Cyclotomic::root_of_unity(3, 1).unwrap();
        let zz = Cyclotomic::root_of_unity(3, 2).unwrap();
        // trivial row first
        assert!(t.row(0).iter().all(|v| *v == Cyclotomic::one()));
        // the two faithful rows carry the primitive cube roots, conjugate to
        // each other
        let x_class = t.classes().class_of(1);
        let vals = [t.value(1, x_class).clone(), t.value(2, x_class).clone()];
        assert!(vals.contains(&z) && vals.contains(&zz));
        assert_eq!(t.conjugate_row(1), *t.row(2));
    }

    #[test]
    fn quaternion_two_dimensional_row() {
        let q8 = FiniteGroup::family(Family::Quaternion, DEFAULT_MAX_ORDER).unwrap();
        let t = character_table(&q8).unwrap();
        let r2 = (0..5).find(|&r| t.degree(r) == 2).unwrap();
        // chi(-1) = -2 for the quaternionic row; -1 = a^2 is element 2
        let c = t.classes().class_of(q8.power(1, 2));
        assert_eq!(*t.value(r2, c), Cyclotomic::from_integer(-2));
    }

    #[test]
    fn symmetric_five_and_six_solve() {
        assert_eq!(degrees(&table_of(Family::Symmetric(5))), vec![1, 1, 4, 4, 5, 5, 6]);
        assert_eq!(
            degrees(&table_of(Family::Symmetric(6))),
            vec![1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16]
        );
    }

    #[test]
    fn character_values_are_algebraic_integers_shape() {
        // spot-check: C8 row values are eighth roots of unity
        let t = table_of(Family::Cyclic(8));
        for r in 0..8 {
            for c in 0..8 {
                let v = t.value(r, c);
                assert!(!v.is_zero());
                let (re, im) = v.to_float();
                assert!((re * re + im * im - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn graded_operations_on_s3() {
        use crate::grading::{alternating_in_symmetric, Builtin};
        let gg = alternating_in_symmetric(3, DEFAULT_MAX_ORDER).unwrap();
        let te = character_table(gg.even_group()).unwrap();
        let th = character_table(gg.ghat()).unwrap();
        // twisting the nontrivial A3 character by a transposition conjugates it
        let tw = twist(&gg, &te, te.row(1)).unwrap();
        assert_eq!(tw, *te.row(2));
        // Frobenius reciprocity on the induced row: it is sign + trivial or
        // the two-dimensional row
        let ind = induce(&gg, &te, &th, te.row(1)).unwrap();
        let norm = th.inner_product(&ind, &ind);
        assert_eq!(norm, Cyclotomic::one()); // omega induces irreducibly
        assert!(th.find_row(&ind).is_some());
        // restriction of the induced row back down contains omega
        let res = restrict(&gg, &te, &th, &ind).unwrap();
        let back = te.inner_product(&res, te.row(1));
        assert_eq!(back, Cyclotomic::one());
        // parity twist sends the trivial character to the sign character
        let pt = parity_twist(&gg, &th, th.row(0)).unwrap();
        let sign_row = th.find_row(&pt).unwrap();
        assert_ne!(sign_row, 0);
        assert_eq!(th.degree(sign_row), 1);
        // tables from a different group are rejected
        let other = crate::grading::builtin(Builtin::III).unwrap();
        assert!(matches!(twist(&other, &te, te.row(0)), Err(Error::GroupMismatch)));
    }

    #[test]
    fn column_orthogonality_classical() {
        // sum_chi chi(g) conj(chi(h)) = delta_{gh} |C_G(g)| at every class pair.
        for f in [Family::Symmetric(4), Family::Quaternion, Family::Dihedral(10)] {
            let tbl = table_of(f);
            let k = tbl.classes().count();
            for i in 0..k {
                for j in 0..k {
                    let mut acc = Cyclotomic::zero();
                    for r in 0..tbl.row_count() {
                        acc = acc.add(&tbl.value(r, i).mul(&tbl.value(r, j).conjugate()));
                    }
                    let expect = if i == j {
                        Cyclotomic::from_integer(tbl.classes().classes[i].centralizer_order as i64)
                    } else {
                        Cyclotomic::zero()
                    };
                    assert_eq!(acc, expect);
                }
            }
        }
    }

    #[test]
    fn conjugate_row_evaluates_at_inverses() {
        // Complex conjugation and g -> g^-1 give the same character values.
        for f in [Family::Cyclic(7), Family::Symmetric(4), Family::Quaternion] {
            let tbl = table_of(f);
            for r in 0..tbl.row_count() {
                let conj = tbl.conjugate_row(r);
                for (i, v) in conj.iter().enumerate() {
                    assert_eq!(v, tbl.value(r, tbl.classes().inverse_class[i]));
                }
            }
        }
    }

    #[test]
    fn induction_norm_splits_by_twist() {
        // <Ind chi, Ind chi>_Ghat = <chi, chi>_G + <chi, chi^w>_G for every
        // irreducible chi of the even half.
        use crate::grading::{builtin, Builtin};
        for b in Builtin::all() {
            let gg = builtin(b).unwrap();
            let te = character_table(gg.even_group()).unwrap();
            let th = character_table(gg.ghat()).unwrap();
            for r in 0..te.row_count() {
                let ind = induce(&gg, &te, &th, te.row(r)).unwrap();
                let lhs = th.inner_product(&ind, &ind);
                let tw = twist(&gg, &te, te.row(r)).unwrap();
                let rhs = te
                    .inner_product(te.row(r), te.row(r))
                    .add(&te.inner_product(te.row(r), &tw));
                assert_eq!(lhs, rhs, "{} row {r}", b.token());
            }
        }
    }
}
