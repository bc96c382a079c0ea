//! Finite groups as validated multiplication tables.
//!
//! Every constructor funnels through the same validation: two-sided identity,
//! Latin-square rows and columns, inverses, and associativity (exhaustive up
//! to order 512, randomised spot checks with a fixed seed above that). Tables
//! index elements by `u32`; the table is the single source of truth and all
//! higher modules work with element indices.

use std::collections::HashMap;

use num_integer::Integer;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on group orders accepted by constructors.
pub const DEFAULT_MAX_ORDER: usize = 20_000;

const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;
const RANDOM_ASSOC_TRIPLES: usize = 10_000;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    identity: u32,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
    fingerprint: u64,
}

/// Families with closed-form or generator constructions.
///
/// `Dihedral` and `Dicyclic` take the group *order* (2n and 4n respectively);
/// `Symmetric`/`Alternating` take the permutation degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic(u32),
    Dihedral(u32),
    Dicyclic(u32),
    Symmetric(u32),
    Alternating(u32),
    Quaternion,
    Klein,
}

impl FiniteGroup {
    /// Validate a raw table. `rows[a][b]` is the index of `a * b`.
    pub fn from_multiplication_table(
        rows: Vec<Vec<u32>>,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::NoIdentity);
        }
        let mut mult = Vec::with_capacity(order * order);
        for row in &rows {
            if row.len() != order {
                return Err(Error::Parse(format!(
                    "table row has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x as usize >= order {
                    return Err(Error::Parse(format!("table entry {x} out of range")));
                }
                mult.push(x);
            }
        }
        if let Some(ref ls) = labels {
            if ls.len() != order {
                return Err(Error::Parse(format!(
                    "{} labels for {order} elements",
                    ls.len()
                )));
            }
        }
        FiniteGroup::from_parts(order, mult, labels)
    }

    fn from_parts(order: usize, mult: Vec<u32>, labels: Option<Vec<String>>) -> Result<FiniteGroup> {
        debug_assert_eq!(mult.len(), order * order);
        // Latin square: every row and column is a permutation.
        let mut seen = vec![false; order];
        for a in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..order {
                let v = mult[a * order + b] as usize;
                if seen[v] {
                    return Err(Error::NotLatinSquare { index: a });
                }
                seen[v] = true;
            }
        }
        for b in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for a in 0..order {
                let v = mult[a * order + b] as usize;
                if seen[v] {
                    return Err(Error::NotLatinSquare { index: b });
                }
                seen[v] = true;
            }
        }
        // Two-sided identity.
        let mut identity = None;
        'rows: for e in 0..order {
            for x in 0..order {
                if mult[e * order + x] as usize != x || mult[x * order + e] as usize != x {
                    continue 'rows;
                }
            }
            identity = Some(e as u32);
            break;
        }
        let identity = identity.ok_or(Error::NoIdentity)?;
        // Inverses.
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            let mut found = None;
            for b in 0..order {
                if mult[a * order + b] == identity && mult[b * order + a] == identity {
                    found = Some(b as u32);
                    break;
                }
            }
            inv[a] = found.ok_or(Error::NoInverse { element: a })?;
        }
        let fingerprint = fnv1a64(order, &mult);
        // Associativity.
        if order <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = mult[a * order + b] as usize;
                    for c in 0..order {
                        let bc = mult[b * order + c] as usize;
                        if mult[ab * order + c] != mult[a * order + bc] {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = SmallRng::seed_from_u64(fingerprint);
            for _ in 0..RANDOM_ASSOC_TRIPLES {
                let a = rng.gen_range(0..order);
                let b = rng.gen_range(0..order);
                let c = rng.gen_range(0..order);
                let ab = mult[a * order + b] as usize;
                let bc = mult[b * order + c] as usize;
                if mult[ab * order + c] != mult[a * order + bc] {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
        Ok(FiniteGroup {
            order,
            mult,
            identity,
            inv,
            labels,
            fingerprint,
        })
    }

    /// Close the given permutations under composition, breadth first from the
    /// identity with generators applied in the given order (this fixes the
    /// canonical element numbering). Labels are cycle notations.
    pub fn from_permutation_generators(degree: usize, gens: &[Perm], cap: usize) -> Result<FiniteGroup> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::Parse(format!(
                    "generator degree {} != {degree}",
                    g.degree()
                )));
            }
        }
        let mut elements: Vec<Perm> = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, u32> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        // parent[i] = (j, k) with element i = element j composed with gens[k].
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut head = 0usize;
        while head < elements.len() {
            for (k, g) in gens.iter().enumerate() {
                let next = elements[head].compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::OrderLimitExceeded {
                            requested: elements.len() + 1,
                            cap,
                        });
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    parent.push((head as u32, k as u32));
                    elements.push(next);
                }
            }
            head += 1;
        }
        let order = elements.len();
        let mut mult = vec![0u32; order * order];
        // Generator columns by direct composition, everything else by the
        // parent decomposition j = parent * gen, so a*j = (a*parent)*gen.
        let gen_cols: Vec<u32> = gens.iter().map(|g| index[g]).collect();
        for a in 0..order {
            mult[a * order] = a as u32;
            for &gc in &gen_cols {
                let prod = elements[a].compose(&elements[gc as usize]);
                mult[a * order + gc as usize] = index[&prod];
            }
        }
        // BFS order guarantees parents precede children.
        for j in 1..order {
            let (p, k) = parent[j];
            let gc = gen_cols[k as usize] as usize;
            if j == gc {
                continue;
            }
            for a in 0..order {
                let ap = mult[a * order + p as usize] as usize;
                mult[a * order + j] = mult[ap * order + gc];
            }
        }
        let labels = elements.iter().map(|p| p.cycle_notation()).collect();
        FiniteGroup::from_parts(order, mult, Some(labels))
    }

    pub fn family(family: Family, cap: usize) -> Result<FiniteGroup> {
        match family {
            Family::Cyclic(n) => {
                let n = n.max(1) as usize;
                check_cap(n, cap)?;
                let mut rows = vec![vec![0u32; n]; n];
                for (i, row) in rows.iter_mut().enumerate() {
                    for (j, v) in row.iter_mut().enumerate() {
                        *v = ((i + j) % n) as u32;
                    }
                }
                let labels = (0..n).map(power_label).collect();
                FiniteGroup::from_multiplication_table(rows, Some(labels))
            }
            Family::Dihedral(order) => {
                if order < 2 || order % 2 != 0 {
                    return Err(Error::Parse(format!("dihedral order must be even, got {order}")));
                }
                let n = (order / 2) as usize;
                check_cap(2 * n, cap)?;
                // Element i + n*f is r^i s^f with s r s = r^-1.
                let idx = |i: usize, f: usize| (i + n * f) as u32;
                let mut rows = vec![vec![0u32; 2 * n]; 2 * n];
                for i in 0..n {
                    for f in 0..2usize {
                        for j in 0..n {
                            for g in 0..2usize {
                                let rot = if f == 0 { (i + j) % n } else { (i + n - j % n) % n };
                                rows[idx(i, f) as usize][idx(j, g) as usize] = idx(rot, f ^ g);
                            }
                        }
                    }
                }
                let labels = (0..2 * n)
                    .map(|e| {
                        let (i, f) = (e % n, e / n);
                        match (i, f) {
                            (0, 0) => "e".into(),
                            (_, 0) => format!("r{}", sup(i)),
                            (0, _) => "s".into(),
                            (_, _) => format!("r{}s", sup(i)),
                        }
                    })
                    .collect();
                FiniteGroup::from_multiplication_table(rows, Some(labels))
            }
            Family::Dicyclic(order) => {
                if order < 4 || order % 4 != 0 {
                    return Err(Error::Parse(format!(
                        "dicyclic order must be divisible by 4, got {order}"
                    )));
                }
                let n = (order / 4) as usize; // a has order 2n, x^2 = a^n
                let m = 2 * n;
                check_cap(4 * n, cap)?;
                let idx = |i: usize, f: usize| (i + m * f) as u32;
                let mut rows = vec![vec![0u32; 4 * n]; 4 * n];
                for i in 0..m {
                    for f in 0..2usize {
                        for j in 0..m {
                            for g in 0..2usize {
                                let (pow, flip) = if f == 0 {
                                    ((i + j) % m, g)
                                } else if g == 0 {
                                    ((i + m - j) % m, 1)
                                } else {
                                    ((i + m - j + n) % m, 0)
                                };
                                rows[idx(i, f) as usize][idx(j, g) as usize] = idx(pow, flip);
                            }
                        }
                    }
                }
                let labels = (0..4 * n)
                    .map(|e| {
                        let (i, f) = (e % m, e / m);
                        match (i, f) {
                            (0, 0) => "e".into(),
                            (_, 0) => format!("a{}", sup(i)),
                            (0, _) => "x".into(),
                            (_, _) => format!("a{}x", sup(i)),
                        }
                    })
                    .collect();
                FiniteGroup::from_multiplication_table(rows, Some(labels))
            }
            Family::Quaternion => FiniteGroup::family(Family::Dicyclic(8), cap),
            Family::Klein => {
                let rows = vec![
                    vec![0, 1, 2, 3],
                    vec![1, 0, 3, 2],
                    vec![2, 3, 0, 1],
                    vec![3, 2, 1, 0],
                ];
                let labels = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
                FiniteGroup::from_multiplication_table(rows, Some(labels))
            }
            Family::Symmetric(n) => {
                let n = n as usize;
                if n <= 1 {
                    return FiniteGroup::family(Family::Cyclic(1), cap);
                }
                let mut gens = vec![Perm::parse_cycles("(1 2)", n)?];
                if n >= 3 {
                    let full: Vec<usize> = (1..=n).collect();
                    gens.push(cycle_perm(&full, n)?);
                }
                FiniteGroup::from_permutation_generators(n, &gens, cap)
            }
            Family::Alternating(n) => {
                let n = n as usize;
                if n <= 2 {
                    return FiniteGroup::family(Family::Cyclic(1), cap);
                }
                FiniteGroup::from_permutation_generators(n, &alternating_generators(n)?, cap)
            }
        }
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
        let order = a.order * b.order;
        check_cap(order, cap)?;
        let nb = b.order;
        let mut mult = vec![0u32; order * order];
        for x1 in 0..a.order {
            for y1 in 0..nb {
                let e1 = x1 * nb + y1;
                for x2 in 0..a.order {
                    for y2 in 0..nb {
                        let e2 = x2 * nb + y2;
                        let px = a.mul(x1 as u32, x2 as u32) as usize;
                        let py = b.mul(y1 as u32, y2 as u32) as usize;
                        mult[e1 * order + e2] = (px * nb + py) as u32;
                    }
                }
            }
        }
        let labels = (0..order)
            .map(|e| format!("({},{})", a.label((e / nb) as u32), b.label((e % nb) as u32)))
            .collect();
        FiniteGroup::from_parts(order, mult, Some(labels))
    }

    /// Semidirect product N x| H. `action[h]` is the automorphism of `n`
    /// (as an image vector) applied by the H-element `h`; it must be a group
    /// action by automorphisms. Element `(a, x)` has index `a * |H| + x` and
    /// `(a, x)(b, y) = (a * action[x](b), x y)`.
    pub fn semidirect_product(
        n: &FiniteGroup,
        h: &FiniteGroup,
        action: &[Vec<u32>],
        cap: usize,
    ) -> Result<FiniteGroup> {
        if action.len() != h.order {
            return Err(Error::NotAnAction {
                reason: format!("{} automorphisms for |H| = {}", action.len(), h.order),
            });
        }
        for (x, phi) in action.iter().enumerate() {
            n.check_automorphism(phi).map_err(|e| Error::NotAnAction {
                reason: format!("action[{x}]: {e}"),
            })?;
        }
        if action[h.identity as usize] != (0..n.order as u32).collect::<Vec<_>>() {
            return Err(Error::NotAnAction {
                reason: "identity of H must act trivially".into(),
            });
        }
        for x in 0..h.order {
            for y in 0..h.order {
                let xy = h.mul(x as u32, y as u32) as usize;
                for a in 0..n.order {
                    let via = action[x][action[y][a] as usize];
                    if via != action[xy][a] {
                        return Err(Error::NotAnAction {
                            reason: format!("action[{x}]action[{y}] != action[{x}{y}] at {a}"),
                        });
                    }
                }
            }
        }
        let order = n.order * h.order;
        check_cap(order, cap)?;
        let nh = h.order;
        let mut mult = vec![0u32; order * order];
        for a in 0..n.order {
            for x in 0..nh {
                let e1 = a * nh + x;
                for b in 0..n.order {
                    for y in 0..nh {
                        let e2 = b * nh + y;
                        let pn = n.mul(a as u32, action[x][b]) as usize;
                        let ph = h.mul(x as u32, y as u32) as usize;
                        mult[e1 * order + e2] = (pn * nh + ph) as u32;
                    }
                }
            }
        }
        let labels = (0..order)
            .map(|e| format!("({},{})", n.label((e / nh) as u32), h.label((e % nh) as u32)))
            .collect();
        FiniteGroup::from_parts(order, mult, Some(labels))
    }

    fn check_automorphism(&self, phi: &[u32]) -> Result<()> {
        if phi.len() != self.order {
            return Err(Error::NotAnAutomorphism {
                reason: format!("image vector length {} != {}", phi.len(), self.order),
            });
        }
        let mut seen = vec![false; self.order];
        for &im in phi {
            if im as usize >= self.order || seen[im as usize] {
                return Err(Error::NotAnAutomorphism {
                    reason: "images are not a bijection".into(),
                });
            }
            seen[im as usize] = true;
        }
        for a in 0..self.order as u32 {
            for b in 0..self.order as u32 {
                if phi[self.mul(a, b) as usize] != self.mul(phi[a as usize], phi[b as usize]) {
                    return Err(Error::NotAnAutomorphism {
                        reason: format!("phi({a}*{b}) != phi({a})*phi({b})"),
                    });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mult[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    #[inline]
    pub fn conjugate(&self, t: u32, a: u32) -> u32 {
        self.mul(self.mul(t, a), self.inv(t))
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn label(&self, a: u32) -> String {
        match &self.labels {
            Some(ls) => ls[a as usize].clone(),
            None => format!("g{a}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn find_label(&self, label: &str) -> Option<u32> {
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l == label)
            .map(|i| i as u32)
    }

    pub fn element_order(&self, a: u32) -> u64 {
        let mut x = a;
        let mut k = 1u64;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: u32, mut k: u64) -> u32 {
        let mut x = self.identity;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                x = self.mul(x, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        x
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        let mut m = 1u64;
        for a in 0..self.order as u32 {
            m = m.lcm(&self.element_order(a));
        }
        m
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn subgroup_closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut in_set = vec![false; self.order];
        in_set[self.identity as usize] = true;
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        let mut out: Vec<u32> = queue;
        out.sort_unstable();
        out
    }

    /// A small generating set, grown greedily by index order.
    pub fn generating_set(&self) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut closure = self.subgroup_closure(&gens);
        while closure.len() < self.order {
            let mut next = None;
            let mut inside = vec![false; self.order];
            for &x in &closure {
                inside[x as usize] = true;
            }
            for x in 0..self.order as u32 {
                if !inside[x as usize] {
                    next = Some(x);
                    break;
                }
            }
            gens.push(next.expect("closure smaller than group must miss an element"));
            closure = self.subgroup_closure(&gens);
        }
        gens
    }

    /// Extract the subgroup on the given sorted element list as a standalone
    /// group. Returns the group plus the index maps in both directions.
    pub fn subgroup_group(&self, elements: &[u32]) -> Result<(FiniteGroup, Vec<u32>, Vec<Option<u32>>)> {
        let k = elements.len();
        let mut to_sub: Vec<Option<u32>> = vec![None; self.order];
        for (i, &e) in elements.iter().enumerate() {
            to_sub[e as usize] = Some(i as u32);
        }
        let mut mult = vec![0u32; k * k];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                let p = self.mul(a, b);
                let sub = to_sub[p as usize].ok_or(Error::NotASubgroup)?;
                mult[i * k + j] = sub;
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| elements.iter().map(|&e| ls[e as usize].clone()).collect());
        let sub = FiniteGroup::from_parts(k, mult, labels)?;
        Ok((sub, elements.to_vec(), to_sub))
    }

    /// Extend `gens -> images` to a homomorphism into `target`, checking
    /// consistency on every (element, generator) product. Errors if the map
    /// is not well defined.
    pub fn hom_from_generator_images(
        &self,
        gens: &[u32],
        target: &FiniteGroup,
        images: &[u32],
    ) -> Result<Vec<u32>> {
        if gens.len() != images.len() {
            return Err(Error::NotAnAutomorphism {
                reason: "generator/image length mismatch".into(),
            });
        }
        let mut map: Vec<Option<u32>> = vec![None; self.order];
        map[self.identity as usize] = Some(target.identity);
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let fx = map[x as usize].unwrap();
            for (&g, &fg) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = target.mul(fx, fg);
                match map[y as usize] {
                    None => {
                        map[y as usize] = Some(fy);
                        queue.push(y);
                    }
                    Some(prev) if prev == fy => {}
                    Some(_) => {
                        return Err(Error::NotAnAutomorphism {
                            reason: format!("relations conflict at element {y}"),
                        })
                    }
                }
            }
        }
        if map.iter().any(|m| m.is_none()) {
            return Err(Error::NotAnAutomorphism {
                reason: "generators do not generate the group".into(),
            });
        }
        Ok(map.into_iter().map(|m| m.unwrap()).collect())
    }

    /// All automorphisms, as image vectors sorted lexicographically.
    /// Intended for small groups (the search utilities).
    pub fn automorphisms(&self) -> Vec<Vec<u32>> {
        let gens = self.generating_set();
        if gens.is_empty() {
            return vec![vec![self.identity]];
        }
        let orders: Vec<u64> = gens.iter().map(|&g| self.element_order(g)).collect();
        let candidates: Vec<Vec<u32>> = orders
            .iter()
            .map(|&o| {
                (0..self.order as u32)
                    .filter(|&x| self.element_order(x) == o)
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        'outer: loop {
            let images: Vec<u32> = choice
                .iter()
                .enumerate()
                .map(|(i, &c)| candidates[i][c])
                .collect();
            if let Ok(phi) = self.hom_from_generator_images(&gens, self, &images) {
                let mut seen = vec![false; self.order];
                let bijective = phi.iter().all(|&im| {
                    let fresh = !seen[im as usize];
                    seen[im as usize] = true;
                    fresh
                });
                if bijective {
                    out.push(phi);
                }
            }
            for i in (0..choice.len()).rev() {
                choice[i] += 1;
                if choice[i] < candidates[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            break;
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Conjugacy class data for one group: classes ordered by minimal member,
/// members sorted, representative = minimal member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: u32,
    pub members: Vec<u32>,
    pub centralizer_order: u64,
}

#[derive(Debug, Clone)]
pub struct ClassData {
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<u32>,
    pub inverse_class: Vec<usize>,
    pub identity_class: usize,
}

impl ClassData {
    pub fn new(g: &FiniteGroup) -> ClassData {
        let n = g.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let cls = classes.len() as u32;
            let mut members = Vec::new();
            class_of[start as usize] = cls;
            members.push(start);
            let mut head = 0;
            while head < members.len() {
                let a = members[head];
                head += 1;
                for t in 0..n as u32 {
                    let c = g.conjugate(t, a);
                    if class_of[c as usize] == u32::MAX {
                        class_of[c as usize] = cls;
                        members.push(c);
                    }
                }
            }
            members.sort_unstable();
            let centralizer_order = (n / members.len()) as u64;
            classes.push(ConjugacyClass {
                representative: members[0],
                members,
                centralizer_order,
            });
        }
        let inverse_class = classes
            .iter()
            .map(|c| class_of[g.inv(c.representative) as usize] as usize)
            .collect();
        let identity_class = class_of[g.identity() as usize] as usize;
        ClassData {
            classes,
            class_of,
            inverse_class,
            identity_class,
        }
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element: u32) -> usize {
        self.class_of[element as usize] as usize
    }

    pub fn is_self_inverse(&self, class: usize) -> bool {
        self.inverse_class[class] == class
    }
}

/// Standard generating set of the alternating group of degree n >= 3:
/// a 3-cycle plus the long even cycle.
pub fn alternating_generators(n: usize) -> Result<Vec<Perm>> {
    let mut gens = vec![Perm::parse_cycles("(1 2 3)", n)?];
    if n > 3 {
        let pts: Vec<usize> = if n % 2 == 1 {
            (1..=n).collect()
        } else {
            (2..=n).collect()
        };
        gens.push(cycle_perm(&pts, n)?);
    }
    Ok(gens)
}

fn cycle_perm(points: &[usize], degree: usize) -> Result<Perm> {
    let body = points
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    Perm::parse_cycles(&format!("({body})"), degree)
}

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        return Err(Error::OrderLimitExceeded {
            requested: order,
            cap,
        });
    }
    Ok(())
}

fn power_label(i: usize) -> String {
    match i {
        0 => "e".into(),
        _ => format!("x{}", sup(i)),
    }
}

fn sup(i: usize) -> String {
    if i == 1 {
        String::new()
    } else {
        format!("^{i}")
    }
}

fn fnv1a64(order: usize, mult: &[u32]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    let mut eat = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(order as u64);
    for &x in mult {
        eat(x as u64);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_basics() {
        let g = FiniteGroup::family(Family::Cyclic(6), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.mul(2, 5), 1);
        assert_eq!(g.inv(1), 5);
        assert_eq!(g.element_order(2), 3);
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn symmetric_three_has_three_classes() {
        let g = FiniteGroup::family(Family::Symmetric(3), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 6);
        let cd = ClassData::new(&g);
        assert_eq!(cd.count(), 3);
        let mut sizes: Vec<usize> = cd.classes.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        // Identity class first: element 0 is the BFS identity.
        assert_eq!(cd.identity_class, 0);
        for c in &cd.classes {
            assert_eq!(c.representative, c.members[0]);
            assert_eq!(c.centralizer_order as usize * c.members.len(), 6);
        }
    }

    #[test]
    fn quaternion_group_structure() {
        let q8 = FiniteGroup::family(Family::Quaternion, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(q8.order(), 8);
        let cd = ClassData::new(&q8);
        assert_eq!(cd.count(), 5);
        let mut sizes: Vec<usize> = cd.classes.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        // Exactly one element of order 2.
        let order2 = (0..8).filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(order2, 1);
        assert_eq!(q8.exponent(), 4);
    }

    #[test]
    fn dihedral_six_matches_symmetric_three() {
        let d6 = FiniteGroup::family(Family::Dihedral(6), DEFAULT_MAX_ORDER).unwrap();
        let cd = ClassData::new(&d6);
        assert_eq!(cd.count(), 3);
        assert_eq!(d6.exponent(), 6);
    }

    #[test]
    fn alternating_orders() {
        for (n, expect) in [(3usize, 3usize), (4, 12), (5, 60)] {
            let a = FiniteGroup::family(Family::Alternating(n as u32), DEFAULT_MAX_ORDER).unwrap();
            assert_eq!(a.order(), expect, "A_{n}");
        }
    }

    #[test]
    fn symmetric_class_count_matches_partitions() {
        // Classes of S_n are cycle types, i.e. partitions of n: 5 for n=4, 7 for n=5.
        for (n, parts) in [(4u32, 5usize), (5, 7)] {
            let g = FiniteGroup::family(Family::Symmetric(n), DEFAULT_MAX_ORDER).unwrap();
            assert_eq!(ClassData::new(&g).count(), parts);
        }
    }

    #[test]
    fn direct_product_and_subgroup_extraction() {
        let q8 = FiniteGroup::family(Family::Quaternion, DEFAULT_MAX_ORDER).unwrap();
        let c2 = FiniteGroup::family(Family::Cyclic(2), DEFAULT_MAX_ORDER).unwrap();
        let p = FiniteGroup::direct_product(&q8, &c2, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(p.order(), 16);
        // Q8 x {e} sits at even indices.
        let elements: Vec<u32> = (0..8).map(|i| i * 2).collect();
        let (sub, _, _) = p.subgroup_group(&elements).unwrap();
        assert_eq!(sub.order(), 8);
        assert_eq!(ClassData::new(&sub).count(), 5);
    }

    #[test]
    fn bad_tables_are_rejected() {
        // Latin square violation.
        let rows = vec![vec![0, 0], vec![1, 1]];
        assert!(matches!(
            FiniteGroup::from_multiplication_table(rows, None),
            Err(Error::NotLatinSquare { .. })
        ));
        // Latin square whose only identity-row element is not a column
        // identity.
        let rows = vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
        assert!(matches!(
            FiniteGroup::from_multiplication_table(rows, None),
            Err(Error::NoIdentity)
        ));
        // Latin square with identity but not associative: order-5 loop.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_multiplication_table(rows, None),
            Err(Error::NotAssociative { .. })
        ));
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            FiniteGroup::family(Family::Cyclic(100), 50),
            Err(Error::OrderLimitExceeded { requested: 100, cap: 50 })
        ));
    }

    #[test]
    fn semidirect_rejects_non_action() {
        let c4 = FiniteGroup::family(Family::Cyclic(4), DEFAULT_MAX_ORDER).unwrap();
        let c2 = FiniteGroup::family(Family::Cyclic(2), DEFAULT_MAX_ORDER).unwrap();
        // x -> x^2 is not an automorphism of C4.
        let bad = vec![vec![0, 1, 2, 3], vec![0, 2, 0, 2]];
        assert!(FiniteGroup::semidirect_product(&c4, &c2, &bad, DEFAULT_MAX_ORDER).is_err());
        // Inversion is: this is D8.
        let invert = vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]];
        let d8 = FiniteGroup::semidirect_product(&c4, &c2, &invert, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(ClassData::new(&d8).count(), 5);
    }

    #[test]
    fn generating_set_and_homomorphisms() {
        let q8 = FiniteGroup::family(Family::Quaternion, DEFAULT_MAX_ORDER).unwrap();
        let gens = q8.generating_set();
        assert_eq!(q8.subgroup_closure(&gens).len(), 8);
        // Q8 has |Aut| = 24 (isomorphic to S4).
        assert_eq!(q8.automorphisms().len(), 24);
        let k4 = FiniteGroup::family(Family::Klein, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(k4.automorphisms().len(), 6);
    }

    #[test]
    fn permutation_closure_canonical_order() {
        let gens = vec![
            Perm::parse_cycles("(1 2)", 3).unwrap(),
            Perm::parse_cycles("(1 2 3)", 3).unwrap(),
        ];
        let g = FiniteGroup::from_permutation_generators(3, &gens, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(0), "()");
        assert_eq!(g.label(1), "(1 2)");
        assert_eq!(g.label(2), "(1 2 3)");
        // Table agrees with permutation composition on a spot check:
        // (1 2) * (1 2 3) applies the 3-cycle first: 1->2->1, 2->3, 3->1->2 gives (2 3).
        let prod = g.mul(1, 2);
        assert_eq!(g.label(prod), "(2 3)");
    }

    #[test]
    fn inverse_classes_pair_up() {
        let c5 = FiniteGroup::family(Family::Cyclic(5), DEFAULT_MAX_ORDER).unwrap();
        let cd = ClassData::new(&c5);
        assert_eq!(cd.count(), 5);
        assert!(!cd.is_self_inverse(1));
        assert_eq!(cd.inverse_class[1], 4);
        assert!(cd.is_self_inverse(0));
    }

    #[test]
    fn class_sizes_partition_the_order() {
        for fam in [
            Family::Symmetric(4),
            Family::Quaternion,
            Family::Dihedral(6),
            Family::Alternating(5),
        ] {
            let g = FiniteGroup::family(fam, DEFAULT_MAX_ORDER).unwrap();
            let cd = ClassData::new(&g);
            let mut total = 0usize;
            for cls in &cd.classes {
                let size = cls.members.len();
                assert_eq!(g.order() % size, 0);
                assert_eq!(size as u64 * cls.centralizer_order, g.order() as u64);
                total += size;
            }
            assert_eq!(total, g.order());
        }
    }

    #[test]
    fn trivial_semidirect_action_is_the_direct_product() {
        let q8 = FiniteGroup::family(Family::Quaternion, DEFAULT_MAX_ORDER).unwrap();
        let c3 = FiniteGroup::family(Family::Cyclic(3), DEFAULT_MAX_ORDER).unwrap();
        let id: Vec<u32> = (0..q8.order() as u32).collect();
        let action = vec![id.clone(), id.clone(), id];
        let semi = FiniteGroup::semidirect_product(&q8, &c3, &action, DEFAULT_MAX_ORDER).unwrap();
        let direct = FiniteGroup::direct_product(&q8, &c3, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(semi.order(), direct.order());
        for a in 0..semi.order() as u32 {
            for b in 0..semi.order() as u32 {
                assert_eq!(semi.mul(a, b), direct.mul(a, b));
            }
        }
    }
}
