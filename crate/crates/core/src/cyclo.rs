//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! Values are stored as sparse rational combinations of roots of unity over
//! the Zumbroich basis of Q(zeta_n), with n always reduced to the conductor
//! (so rationals live at order 1). This makes structural equality of the
//! representation coincide with mathematical equality.
//!
//! The basis: zeta_n^i belongs to the basis iff for every odd prime p | n
//! with maximal power q, the residue i * (n/q)^-1 mod q avoids the centered
//! interval [-(q/p-1)/2, (q/p-1)/2], and for q the maximal power of 2 it
//! avoids [q/2, q-1]. A non-basis exponent is rewritten through
//! zeta^i = -sum_{j=1}^{p-1} zeta^(i + j n/p), which fixes the component at
//! every other prime; the forbidden residues form a transversal of the shift
//! fibers, so one rewrite per prime suffices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u64,
    coeffs: BTreeMap<u64, Rational>,
}

struct PrimePower {
    p: u64,
    q: u64,
    /// (n/q)^-1 mod q
    cof_inv: u64,
}

fn prime_powers(n: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut q = 1u64;
            while rest % p == 0 {
                rest /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if rest > 1 {
        out.push((rest, rest));
    }
    out.into_iter()
        .map(|(p, q)| PrimePower {
            p,
            q,
            cof_inv: mod_inverse(n / q, q),
        })
        .collect()
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    assert_eq!(r, 1, "{a} not invertible mod {m}");
    t.rem_euclid(m as i64) as u64
}

/// Component of exponent i at the prime power q: i * (n/q)^-1 mod q.
fn component(i: u64, pp: &PrimePower) -> u64 {
    (i % pp.q) * pp.cof_inv % pp.q
}

fn component_is_bad(a: u64, pp: &PrimePower) -> bool {
    if pp.p == 2 {
        a >= pp.q / 2
    } else {
        let half = (pp.q / pp.p - 1) / 2;
        a <= half || a >= pp.q - half
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_integer(1)
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic { order: 1, coeffs }
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclotomic::from_rational(rat_int(v))
    }

    /// zeta_m^k, normalised. `m` must be at least 1; `k` may be any integer.
    pub fn root_of_unity(m: u64, k: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Parse("root of unity needs order >= 1".into()));
        }
        let e = k.rem_euclid(m as i64) as u64;
        Ok(Cyclotomic::normalised(m, vec![(e, rat_int(1))]))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    /// Build from arbitrary (exponent, coefficient) pairs at order n.
    pub fn from_terms(n: u64, terms: Vec<(u64, Rational)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("cyclotomic order must be >= 1".into()));
        }
        Ok(Cyclotomic::normalised(n, terms))
    }

    fn normalised(n: u64, terms: Vec<(u64, Rational)>) -> Self {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        if n == 1 {
            for (_, c) in terms {
                add_to(&mut acc, 0, c);
            }
            return Cyclotomic {
                order: 1,
                coeffs: acc,
            };
        }
        let pps = prime_powers(n);
        let mut work: Vec<(u64, Rational)> = terms
            .into_iter()
            .map(|(i, c)| (i % n, c))
            .collect();
        while let Some((i, c)) = work.pop() {
            if c.is_zero() {
                continue;
            }
            let bad = pps
                .iter()
                .find(|pp| component_is_bad(component(i, pp), pp));
            match bad {
                None => add_to(&mut acc, i, c),
                Some(pp) if pp.p == 2 => work.push(((i + n / 2) % n, -c)),
                Some(pp) => {
                    for j in 1..pp.p {
                        work.push(((i + j * (n / pp.p)) % n, -c.clone()));
                    }
                }
            }
        }
        Cyclotomic::reduce_order(n, acc)
    }

    /// Reduce a basis-form element to its conductor.
    fn reduce_order(mut n: u64, mut coeffs: BTreeMap<u64, Rational>) -> Self {
        if coeffs.is_empty() {
            return Cyclotomic::zero();
        }
        'outer: loop {
            if n == 1 {
                break;
            }
            let pps = prime_powers(n);
            // Drop a prime from a square: supp in pZ means the element lives
            // in Q(zeta_{n/p}), with exponents divided by p.
            for pp in &pps {
                if pp.q > pp.p && coeffs.keys().all(|&i| i % pp.p == 0) {
                    coeffs = coeffs.into_iter().map(|(i, c)| (i / pp.p, c)).collect();
                    n /= pp.p;
                    continue 'outer;
                }
            }
            // n = 2 mod 4: every basis exponent is even; halve.
            if n % 4 == 2 {
                coeffs = coeffs.into_iter().map(|(i, c)| (i / 2, c)).collect();
                n /= 2;
                continue 'outer;
            }
            // Drop an odd prime appearing to the first power: possible iff
            // within each residue group mod n/p all p-1 basis components
            // carry one equal coefficient, which then folds to its negative.
            for pp in &pps {
                if pp.p != 2 && pp.q == pp.p {
                    if let Some(reduced) = fold_simple_prime(n, pp, &coeffs) {
                        coeffs = reduced;
                        n /= pp.p;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        if coeffs.is_empty() {
            n = 1;
        }
        Cyclotomic { order: n, coeffs }
    }

    fn lift_exponents(&self, target: u64) -> Vec<(u64, Rational)> {
        let scale = target / self.order;
        self.coeffs
            .iter()
            .map(|(&i, c)| (i * scale, c.clone()))
            .collect()
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let n = self.order.lcm(&other.order);
        let mut terms = self.lift_exponents(n);
        terms.extend(other.lift_exponents(n));
        Cyclotomic::normalised(n, terms)
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        let n = self.order.lcm(&other.order);
        let a = self.lift_exponents(n);
        let b = other.lift_exponents(n);
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for (i, ci) in &a {
            for (j, cj) in &b {
                terms.push(((i + j) % n, ci * cj));
            }
        }
        Cyclotomic::normalised(n, terms)
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, c * r)).collect(),
        }
    }

    /// Multiplicative inverse via the norm: x^-1 = (prod of the nontrivial
    /// Galois conjugates) / Norm(x).
    pub fn inverse(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.order;
        let mut conj_prod = Cyclotomic::one();
        for k in 2..=n {
            if n.gcd(&k) == 1 {
                conj_prod = conj_prod.mul(&self.galois(k as i64)?);
            }
        }
        let norm = self.mul(&conj_prod);
        let norm_q = norm.to_rational().map_err(|_| Error::InternalVerificationFailed {
            reason: "norm of a cyclotomic must be rational".into(),
        })?;
        if norm_q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(conj_prod.scale(&norm_q.recip()))
    }

    pub fn div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Galois automorphism zeta -> zeta^k; k must be coprime to the order.
    pub fn galois(&self, k: i64) -> Result<Cyclotomic> {
        let n = self.order;
        let kr = k.rem_euclid(n as i64) as u64;
        if n.gcd(&kr) != 1 {
            return Err(Error::NotCoprime { k, order: n });
        }
        let terms = self
            .coeffs
            .iter()
            .map(|(&i, c)| (i * kr % n, c.clone()))
            .collect();
        Ok(Cyclotomic::normalised(n, terms))
    }

    pub fn conjugate(&self) -> Cyclotomic {
        self.galois(-1).expect("-1 is a unit mod any order")
    }

    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn to_rational(&self) -> Result<Rational> {
        if self.order != 1 {
            return Err(Error::NotRational { order: self.order });
        }
        Ok(self.coeffs.get(&0).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn to_integer(&self) -> Result<i64> {
        let r = self
            .to_rational()
            .map_err(|_| Error::NotAnInteger {
                value: self.to_string(),
            })?;
        if !r.is_integer() {
            return Err(Error::NotAnInteger {
                value: self.to_string(),
            });
        }
        r.to_integer().to_i64().ok_or_else(|| Error::NotAnInteger {
            value: self.to_string(),
        })
    }

    /// Floating-point shadow (re, im); for display and approximate tests only.
    pub fn to_float(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in &self.coeffs {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * (*i as f64) / (self.order as f64);
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }
}

fn add_to(acc: &mut BTreeMap<u64, Rational>, i: u64, c: Rational) {
    use std::collections::btree_map::Entry;
    match acc.entry(i) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Try to fold the odd prime p (appearing to the first power in n) out of a
/// basis-form element. Groups terms by exponent residue mod n/p; each group
/// must carry all p-1 allowed components with one shared coefficient c, and
/// contributes -c at the group's order-(n/p) exponent.
fn fold_simple_prime(
    n: u64,
    pp: &PrimePower,
    coeffs: &BTreeMap<u64, Rational>,
) -> Option<BTreeMap<u64, Rational>> {
    let m = n / pp.p;
    let mut groups: BTreeMap<u64, Vec<(u64, &Rational)>> = BTreeMap::new();
    for (&i, c) in coeffs {
        // Split zeta_n^i = zeta_p^a * zeta_m^b via CRT.
        let a = component(i, pp);
        let b_scaled = i % m; // i = q*b + (multiple of m), and zeta_m part has exponent b with q*b = i mod m scaled
        groups.entry(b_scaled).or_default().push((a, c));
    }
    let mut out = BTreeMap::new();
    let p_inv_mod_m = mod_inverse(pp.p % m.max(1), m.max(1));
    for (b_scaled, members) in groups {
        if members.len() != (pp.p - 1) as usize {
            return None;
        }
        let c0 = members[0].1;
        if members.iter().any(|(_, c)| *c != c0) {
            return None;
        }
        // Exponent at order m: i = p*b' mod m for the zeta_m^b' factor, i.e.
        // b' = i * p^-1 mod m (all members share i mod m).
        let b = if m == 1 { 0 } else { b_scaled * p_inv_mod_m % m };
        out.insert(b, -c0.clone());
    }
    Some(out)
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            if *i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !unit_coeff {
                    write!(f, "{mag}*")?;
                }
                if *i == 1 {
                    write!(f, "z({})", self.order)?;
                } else {
                    write!(f, "z({},{})", self.order, i)?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Cyclotomic", 2)?;
        s.serialize_field("order", &self.order)?;
        struct CoeffList<'a>(&'a BTreeMap<u64, Rational>);
        impl Serialize for CoeffList<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (k, c) in self.0 {
                    let num = c.numer().to_i64().ok_or_else(|| {
                        serde::ser::Error::custom("coefficient numerator exceeds i64")
                    })?;
                    let den = c.denom().to_i64().ok_or_else(|| {
                        serde::ser::Error::custom("coefficient denominator exceeds i64")
                    })?;
                    seq.serialize_element(&(*k, num, den))?;
                }
                seq.end()
            }
        }
        s.serialize_field("coeffs", &CoeffList(&self.coeffs))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: u64,
            coeffs: Vec<(u64, i64, i64)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be >= 1"));
        }
        let terms = raw
            .coeffs
            .into_iter()
            .map(|(k, num, den)| {
                if den == 0 {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok((k, rat(num, den)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Cyclotomic::normalised(raw.order, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zeta(m: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(m, k).unwrap()
    }

    #[test]
    fn fourth_roots_cancel() {
        let x = zeta(4, 1).add(&zeta(4, 3));
        assert!(x.is_zero());
        assert_eq!(x.to_rational().unwrap(), Rational::zero());
        assert_eq!(x.order(), 1);
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        let x = zeta(3, 1).add(&zeta(3, 2));
        assert_eq!(x.to_rational().unwrap(), rat_int(-1));
    }

    #[test]
    fn cube_of_cube_root_is_one() {
        let z = zeta(3, 1);
        let one = z.mul(&z).mul(&z);
        assert_eq!(one, Cyclotomic::one());
        assert_eq!(one.order(), 1);
    }

    #[test]
    fn inverse_of_one_plus_zeta5() {
        let x = Cyclotomic::one().add(&zeta(5, 1));
        let prod = x.mul(&x.inverse().unwrap());
        assert_eq!(prod, Cyclotomic::one());
    }

    #[test]
    fn square_root_of_two() {
        // (zeta8 + zeta8^7)^2 = 2.
        let x = zeta(8, 1).add(&zeta(8, 7));
        assert_eq!(x.mul(&x).to_rational().unwrap(), rat_int(2));
    }

    #[test]
    fn conjugation_inverts_roots() {
        assert_eq!(zeta(5, 1).conjugate(), zeta(5, 4));
        assert_eq!(zeta(8, 3).conjugate(), zeta(8, 5));
        let real = zeta(7, 2).add(&zeta(7, 5));
        assert!(real.is_real());
    }

    #[test]
    fn non_rational_values_refuse_to_collapse() {
        let x = zeta(6, 1).sub(&zeta(6, 5));
        assert!(matches!(x.to_rational(), Err(Error::NotRational { .. })));
        // zeta6 = -zeta3^2, so the conductor is 3.
        assert_eq!(zeta(6, 1).order(), 3);
        assert_eq!(zeta(6, 1), zeta(3, 2).neg());
    }

    #[test]
    fn galois_requires_coprime_k() {
        assert!(matches!(
            zeta(6, 1).galois(3),
            Err(Error::NotCoprime { .. })
        ));
        // but anything goes on rationals (order 1)
        assert_eq!(
            Cyclotomic::from_integer(7).galois(10).unwrap(),
            Cyclotomic::from_integer(7)
        );
    }

    #[test]
    fn display_formats() {
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::from_rational(rat(-3, 2)).to_string(), "-3/2");
        let x = Cyclotomic::one().add(&zeta(4, 1).scale(&rat_int(2)));
        assert_eq!(x.to_string(), "1 + 2*z(4)");
        let y = zeta(8, 1).sub(&zeta(8, 3));
        assert_eq!(y.to_string(), "z(8) - z(8,3)");
    }

    #[test]
    fn json_round_trip() {
        let x = zeta(12, 7).scale(&rat(3, 4)).add(&Cyclotomic::from_integer(1));
        let text = serde_json::to_string(&x).unwrap();
        let back: Cyclotomic = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
        let again = serde_json::to_string(&back).unwrap();
        assert_eq!(again, text);
    }

    #[test]
    fn float_shadow_tracks_roots() {
        let (re, im) = zeta(8, 1).to_float();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((re - s).abs() < 1e-12 && (im - s).abs() < 1e-12);
    }

    fn arb_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
        (1u64..=60, proptest::collection::vec((0u64..120, -6i64..=6, 1i64..=4), 0..5)).prop_map(
            |(n, terms)| {
                let terms = terms
                    .into_iter()
                    .map(|(k, num, den)| (k % n, rat(num, den)))
                    .collect();
                Cyclotomic::from_terms(n, terms).unwrap()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_cyclotomic(), b in arb_cyclotomic(), c in arb_cyclotomic()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.add(&a.neg()).is_zero());
        }

        #[test]
        fn inverses_multiply_to_one(a in arb_cyclotomic()) {
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inverse().unwrap()), Cyclotomic::one());
            }
        }

        #[test]
        fn galois_composes(a in arb_cyclotomic(), j in 1i64..=59, k in 1i64..=59) {
            let n = a.order() as i64;
            if num_integer::gcd(j, n) == 1 && num_integer::gcd(k, n) == 1 {
                let lhs = a.galois(j).unwrap().galois(k).unwrap();
                let rhs = a.galois(j * k % n.max(1)).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn conjugation_is_multiplicative(a in arb_cyclotomic(), b in arb_cyclotomic()) {
            prop_assert_eq!(a.mul(&b).conjugate(), a.conjugate().mul(&b.conjugate()));
        }

        #[test]
        fn float_shadow_is_additive(a in arb_cyclotomic(), b in arb_cyclotomic()) {
            let (re1, im1) = a.add(&b).to_float();
            let (re2, im2) = a.to_float();
            let (re3, im3) = b.to_float();
            prop_assert!((re1 - re2 - re3).abs() < 1e-6);
            prop_assert!((im1 - im2 - im3).abs() < 1e-6);
        }

        #[test]
        fn norm_is_nonnegative(a in arb_cyclotomic()) {
            let (re, im) = a.conjugate().mul(&a).to_float();
            prop_assert!(re >= -1e-9);
            prop_assert!(im.abs() < 1e-9);
        }
    }
}
