//! Exact linear algebra on boundary matrices: ranks over GF(2) and the
//! rationals, and Smith normal form over the integers.
//!
//! Integer arithmetic first runs in checked `i128`; on overflow the same
//! routine is rerun over big integers.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

/// Sparse column-major integer matrix with small entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    /// Each column lists `(row, entry)` sorted by row.
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// `self · other`, used to check `∂∂ = 0`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: FxHashMap<usize, i64> = FxHashMap::default();
                for &(k, b) in col {
                    for &(i, a) in &self.cols[k] {
                        *acc.entry(i).or_default() += a * b;
                    }
                }
                let mut out: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
                out.sort_unstable();
                out
            })
            .collect();
        SparseMatrix { rows: self.rows, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

pub(crate) trait Entry: Clone + Debug + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_floor(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn abs(&self) -> Self;
    fn abs_lt(&self, other: &Self) -> bool;
}

impl Entry for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i128::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i128::checked_sub(*self, *other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn abs(&self) -> Self {
        i128::abs(*self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
}

/// Rank over GF(2) by bit-packed column reduction on lowest set rows.
pub fn rank_gf2(m: &SparseMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let low = |c: &[u64]| c.iter().rposition(|&w| w != 0).map(|i| i * 64 + 63 - c[i].leading_zeros() as usize);
    let mut pivots: FxHashMap<usize, Vec<u64>> = FxHashMap::default();
    for col in &m.cols {
        let mut bits = vec![0u64; words];
        for &(r, v) in col {
            if v % 2 != 0 {
                bits[r / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(l) = low(&bits) {
            match pivots.get(&l) {
                Some(p) => {
                    for (b, w) in bits.iter_mut().zip(p) {
                        *b ^= w;
                    }
                }
                None => {
                    pivots.insert(l, bits);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn rank_rational_generic<E: Entry>(m: &SparseMatrix) -> Option<usize> {
    let mut pivots: FxHashMap<usize, Vec<(usize, E)>> = FxHashMap::default();
    for col in &m.cols {
        let mut c: Vec<(usize, E)> = col.iter().map(|&(r, v)| (r, E::from_i64(v))).collect();
        while let Some((l, a)) = c.last().cloned() {
            let Some(p) = pivots.get(&l) else {
                pivots.insert(l, c);
                break;
            };
            let b = p.last().expect("pivot column is non-zero").1.clone();
            // c ← b·c − a·p, which clears row l; then strip the common factor.
            let mut out: Vec<(usize, E)> = Vec::with_capacity(c.len() + p.len());
            let (mut i, mut j) = (0, 0);
            while i < c.len() || j < p.len() {
                let (row, v) = match (c.get(i), p.get(j)) {
                    (Some((rc, vc)), Some((rp, _))) if rc < rp => {
                        i += 1;
                        (*rc, vc.checked_mul(&b)?)
                    }
                    (Some((rc, _)), Some((rp, vp))) if rp < rc => {
                        j += 1;
                        (*rp, E::from_i64(0).checked_sub(&vp.checked_mul(&a)?)?)
                    }
                    (Some((rc, vc)), Some((_, vp))) => {
                        i += 1;
                        j += 1;
                        (*rc, vc.checked_mul(&b)?.checked_sub(&vp.checked_mul(&a)?)?)
                    }
                    (Some((rc, vc)), None) => {
                        i += 1;
                        (*rc, vc.checked_mul(&b)?)
                    }
                    (None, Some((rp, vp))) => {
                        j += 1;
                        (*rp, E::from_i64(0).checked_sub(&vp.checked_mul(&a)?)?)
                    }
                    (None, None) => unreachable!(),
                };
                if !v.is_zero() {
                    out.push((row, v));
                }
            }
            if let Some(g) = out.iter().map(|(_, v)| v.clone()).reduce(|g, v| g.gcd(&v)) {
                if g != E::from_i64(1) {
                    for (_, v) in &mut out {
                        *v = v.div_exact(&g);
                    }
                }
            }
            c = out;
        }
    }
    Some(pivots.len())
}

/// Rank over the rationals by fraction-free sparse column reduction.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    rank_rational_generic::<i128>(m).unwrap_or_else(|| rank_rational_generic::<BigInt>(m).expect("big integers do not overflow"))
}

fn to_dense<E: Entry>(m: &SparseMatrix) -> Vec<Vec<E>> {
    let mut a = vec![vec![E::from_i64(0); m.ncols()]; m.rows];
    for (j, col) in m.cols.iter().enumerate() {
        for &(i, v) in col {
            a[i][j] = E::from_i64(v);
        }
    }
    a
}

fn diagonalize<E: Entry>(mut a: Vec<Vec<E>>) -> Option<Vec<E>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // Smallest non-zero entry of the remaining block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs_lt(&a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = a[i][j].checked_sub(&q.checked_mul(&a[t][j])?)?;
                    a[i][j] = v;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = row[j].checked_sub(&q.checked_mul(&row[t])?)?;
                    row[j] = v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // Move the smallest remainder in row or column t to the pivot.
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs_lt(&a[best.0][best.1]) {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs_lt(&a[best.0][best.1]) {
                    best = (t, j);
                }
            }
            if best.1 == t {
                a.swap(t, best.0);
            } else {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
    }
    Some(diag)
}

/// Invariant factors `d₁ | d₂ | …` of the diagonal form, obtained by
/// repeatedly replacing pairs with their gcd and lcm.
fn invariant_factors<E: Entry>(mut d: Vec<E>) -> Option<Vec<E>> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].div_exact(&g).checked_mul(&d[j])?;
            d[i] = g;
            d[j] = l;
        }
    }
    Some(d)
}

/// Non-zero invariant factors of `m` over the integers, ascending.
pub fn smith_invariants(m: &SparseMatrix) -> Vec<BigInt> {
    let small = diagonalize::<i128>(to_dense(m)).and_then(invariant_factors);
    match small {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => {
            let d = diagonalize::<BigInt>(to_dense(m)).expect("big integers do not overflow");
            invariant_factors(d).expect("big integers do not overflow")
        }
    }
}

/// Invariant factors greater than one: the torsion of `coker m`.
pub fn torsion_coefficients(m: &SparseMatrix) -> Vec<BigInt> {
    smith_invariants(m).into_iter().filter(|d| !d.is_one()).collect()
}
