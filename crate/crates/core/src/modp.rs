//! Dense linear algebra over GF(p), sized for class-algebra computations:
//! the ambient dimension is the class count, so cubic algorithms are fine.
//!
//! p is chosen odd and well below 2^32, so products fit in u64 without
//! overflow tricks.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime p = 1 (mod exponent) with p^2 > 4 * order, so that every
/// character value and degree lifts uniquely from GF(p).
pub fn find_splitting_prime(order: u64, exponent: u64) -> u64 {
    let mut p = exponent + 1;
    loop {
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for w in 2..p {
        for &q in &factors {
            if pow_mod(w, (p - 1) / q, p) == 1 {
                continue 'outer;
            }
        }
        return w;
    }
    unreachable!("every prime field has a primitive root")
}

pub type Matrix = Vec<Vec<u64>>;

pub fn mat_vec(m: &Matrix, v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + a * b) % p)
        })
        .collect()
}

/// Row-reduce in place to reduced echelon form; returns the pivot column of
/// each surviving row. Zero rows are removed.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = inv_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..cols {
                    let sub = factor * rows[rank][c] % p;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Basis of the right kernel of a square matrix.
pub fn kernel_basis(m: &Matrix, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut rows = m.clone();
    let pivots = rref(&mut rows, p);
    let mut basis = Vec::new();
    let mut pivot_of_col = vec![None; n];
    for (r, &c) in pivots.iter().enumerate() {
        pivot_of_col[c] = Some(r);
    }
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            // x_c = -rows[r][free]
            v[c] = (p - rows[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// A subspace of GF(p)^n held as a reduced-echelon basis, so membership and
/// coordinates are direct reads off the pivot columns.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn full(n: usize) -> Subspace {
        let mut basis = vec![vec![0u64; n]; n];
        for (i, row) in basis.iter_mut().enumerate() {
            row[i] = 1;
        }
        Subspace {
            basis,
            pivots: (0..n).collect(),
        }
    }

    pub fn from_vectors(mut vecs: Vec<Vec<u64>>, p: u64) -> Subspace {
        let pivots = rref(&mut vecs, p);
        Subspace { basis: vecs, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of v in the echelon basis, if v lies in the subspace.
    pub fn coords(&self, v: &[u64], p: u64) -> Result<Vec<u64>> {
        let coords: Vec<u64> = self.pivots.iter().map(|&c| v[c]).collect();
        let mut residual = v.to_vec();
        for (x, row) in coords.iter().zip(&self.basis) {
            for (res, &b) in residual.iter_mut().zip(row) {
                *res = (*res + p - x * b % p) % p;
            }
        }
        if residual.iter().any(|&x| x != 0) {
            return Err(Error::InternalVerificationFailed {
                reason: "vector escapes the invariant subspace".into(),
            });
        }
        Ok(coords)
    }

    /// Split into the eigenspaces of an ambient-space operator that fixes
    /// this subspace. Pieces come back in increasing eigenvalue order.
    pub fn split_by(&self, op: &Matrix, p: u64) -> Result<Vec<Subspace>> {
        let d = self.dim();
        if d == 1 {
            return Ok(vec![self.clone()]);
        }
        // action[s][t]: coefficient of basis_s in op * basis_t
        let mut action = vec![vec![0u64; d]; d];
        for (t, b) in self.basis.iter().enumerate() {
            let image = mat_vec(op, b, p);
            let coords = self.coords(&image, p)?;
            for (s, &x) in coords.iter().enumerate() {
                action[s][t] = x;
            }
        }
        let mut pieces = Vec::new();
        let mut found = 0;
        for lambda in 0..p {
            if found == d {
                break;
            }
            let mut shifted = action.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = (row[i] + p - lambda) % p;
            }
            let kernel = kernel_basis(&shifted, p);
            if kernel.is_empty() {
                continue;
            }
            found += kernel.len();
            let vectors: Vec<Vec<u64>> = kernel
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; self.basis[0].len()];
                    for (x, row) in c.iter().zip(&self.basis) {
                        for (out, &b) in v.iter_mut().zip(row) {
                            *out = (*out + x * b) % p;
                        }
                    }
                    v
                })
                .collect();
            pieces.push(Subspace::from_vectors(vectors, p));
        }
        if found != d {
            return Err(Error::InternalVerificationFailed {
                reason: "class-algebra operator is not diagonalisable over GF(p)".into(),
            });
        }
        Ok(pieces)
    }
}
