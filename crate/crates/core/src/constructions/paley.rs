//! Iterated Paley complexes over prime fields `F_q`.
//!
//! With `g` a primitive root and `p` an odd prime dividing `q − 1`, the set
//! `Q = {g^α : α mod p is a square mod p (0 included)}` is a union of cosets
//! of `H = ⟨g^p⟩`. A vertex set spans a simplex when, for every subset of at
//! least two vertices, the product of pairwise differences lies in `Q`. In
//! exponents this is a sum of discrete logs mod `p`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex, Vertex, MAX_VERTEX_ID};
use crate::error::{Error, Result};

/// Largest field size for which the discrete-log table is built.
pub const MAX_PALEY_Q: u64 = 1_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn is_primitive_root(g: u64, q: u64, factors: &[u64]) -> bool {
    g % q != 0 && factors.iter().all(|&f| pow_mod(g, (q - 1) / f, q) != 1)
}

/// Least primitive root modulo the prime `q`.
pub fn least_primitive_root(q: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::InvalidParameters(format!("{q} is not prime")));
    }
    let factors = prime_factors(q - 1);
    (1..q)
        .find(|&g| is_primitive_root(g, q, &factors))
        .ok_or_else(|| Error::InvalidParameters(format!("no primitive root modulo {q}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFieldSpec {
    pub q: u64,
    pub p: u64,
    /// Primitive root; the least one is chosen when absent.
    pub g: Option<u64>,
}

impl PrimeFieldSpec {
    pub fn new(q: u64, p: u64) -> Self {
        PrimeFieldSpec { q, p, g: None }
    }

    pub fn with_generator(q: u64, p: u64, g: u64) -> Self {
        PrimeFieldSpec { q, p, g: Some(g) }
    }

    /// Validates the parameters and returns the generator in use.
    pub fn resolve(&self) -> Result<u64> {
        let PrimeFieldSpec { q, p, g } = *self;
        if !is_prime(q) {
            return Err(Error::InvalidParameters(format!("q = {q} must be prime (prime powers are not supported)")));
        }
        if q > MAX_PALEY_Q {
            return Err(Error::ResourceLimit(format!("q = {q} exceeds the table limit {MAX_PALEY_Q}")));
        }
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidParameters(format!("p = {p} must be an odd prime")));
        }
        if (q - 1) % p != 0 {
            return Err(Error::InvalidParameters(format!("p = {p} does not divide q − 1 = {}", q - 1)));
        }
        match g {
            None => least_primitive_root(q),
            Some(g) if is_primitive_root(g, q, &prime_factors(q - 1)) => Ok(g),
            Some(g) => Err(Error::InvalidParameters(format!("g = {g} is not a primitive root modulo {q}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PaleyResidueSet {
    pub q: u64,
    pub p: u64,
    pub g: u64,
    /// Sorted elements of `Q`.
    pub members: Vec<u64>,
    /// `dlog[x]` for `x ≠ 0`; `dlog[0]` is unused.
    #[serde(skip)]
    dlog: Vec<u32>,
    #[serde(skip)]
    square_mod_p: Vec<bool>,
}

impl PaleyResidueSet {
    pub fn contains(&self, x: u64) -> bool {
        let x = x % self.q;
        x != 0 && self.square_mod_p[self.dlog[x as usize] as usize % self.p as usize]
    }

    /// Discrete log of a non-zero element.
    pub fn dlog(&self, x: u64) -> Option<u32> {
        let x = x % self.q;
        (x != 0).then(|| self.dlog[x as usize])
    }

    /// `(p + 1)(q − 1) / (2p)`.
    pub fn expected_size(&self) -> u64 {
        (self.p + 1) * (self.q - 1) / (2 * self.p)
    }

    fn diff_exponent(&self, a: Vertex, b: Vertex) -> u64 {
        let d = (a as u64 + self.q - b as u64) % self.q;
        self.dlog[d as usize] as u64
    }

    /// Whether the full vertex set passes the product test; subsets are not
    /// examined.
    fn product_in_q(&self, vs: &[Vertex]) -> bool {
        let mut e = 0u64;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                e += self.diff_exponent(vs[i], vs[j]);
            }
        }
        self.square_mod_p[(e % self.p) as usize]
    }
}

pub fn paley_residues(spec: &PrimeFieldSpec) -> Result<PaleyResidueSet> {
    let g = spec.resolve()?;
    let (q, p) = (spec.q, spec.p);
    let mut dlog = vec![0u32; q as usize];
    let mut x = 1u64;
    for a in 0..q - 1 {
        dlog[x as usize] = a as u32;
        x = x * g % q;
    }
    let mut square_mod_p = vec![false; p as usize];
    for b in 0..p {
        square_mod_p[(b * b % p) as usize] = true;
    }
    let members = (1..q).filter(|&x| square_mod_p[dlog[x as usize] as usize % p as usize]).collect();
    Ok(PaleyResidueSet { q, p, g, members, dlog, square_mod_p })
}

/// The Iterated Paley complex on vertices `0..q`, truncated at `max_dim`.
/// Built one dimension at a time: a candidate simplex is kept when all its
/// facets are present (which covers every proper subset) and the full vertex
/// set passes the product test.
pub fn paley_complex(spec: &PrimeFieldSpec, max_dim: usize) -> Result<(SimplicialComplex, PaleyResidueSet)> {
    let res = paley_residues(spec)?;
    if res.q > MAX_VERTEX_ID as u64 + 1 {
        return Err(Error::ResourceLimit(format!("q = {} exceeds the vertex id limit", res.q)));
    }
    let q = res.q as Vertex;
    let mut levels: Vec<Vec<Simplex>> = vec![(0..q).map(Simplex::vertex).collect()];
    let mut neighbors: Vec<Vec<Vertex>> = vec![Vec::new(); q as usize];
    let mut present = rustc_hash::FxHashSet::default();
    for s in &levels[0] {
        present.insert(s.clone());
    }
    for d in 1..=max_dim {
        let mut next = Vec::new();
        for tau in &levels[d - 1] {
            let last = tau.last();
            let candidates: Vec<Vertex> = if d == 1 {
                (last + 1..q).collect()
            } else {
                neighbors[tau.first() as usize].iter().copied().filter(|&w| w > last).collect()
            };
            for w in candidates {
                let sigma = tau.with_vertex(w);
                if d > 1 && !sigma.facets().all(|f| present.contains(&f)) {
                    continue;
                }
                if res.product_in_q(sigma.vertices()) {
                    next.push(sigma);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        if d == 1 {
            for e in &next {
                let (a, b) = (e.vertices()[0], e.vertices()[1]);
                neighbors[a as usize].push(b);
                neighbors[b as usize].push(a);
            }
            for n in &mut neighbors {
                n.sort_unstable();
            }
        }
        present.extend(next.iter().cloned());
        levels.push(next);
    }
    let mut list: Vec<Simplex> = levels.into_iter().flatten().collect();
    list.sort_unstable();
    Ok((SimplicialComplex::from_sorted_closed(list), res))
}

/// Evaluates `p > 2^(2^r + 2r)` and `n > r²·p^(2r)` exactly.
pub fn paley_parameter_check(r: u32, p: &BigUint, n: &BigUint) -> bool {
    if r == 0 {
        return false;
    }
    let Some(k) = 2u64.checked_pow(r).and_then(|t| t.checked_add(2 * r as u64)) else {
        return false;
    };
    // p > 2^k ⟺ p ≥ 2^k + 1.
    let p_bits = p.bits();
    let p_ok = p_bits > k + 1 || (p_bits == k + 1 && p.trailing_zeros() != Some(k));
    if !p_ok {
        return false;
    }
    // r²·p^(2r) has at least 2r·(bits(p) − 1) + 1 bits.
    if 2 * r as u64 * (p_bits - 1) >= n.bits() {
        return false;
    }
    let rhs = BigUint::from(r) * BigUint::from(r) * p.pow(2 * r);
    n > &rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_thirteen() {
        let res = paley_residues(&PrimeFieldSpec::with_generator(13, 3, 2)).unwrap();
        assert_eq!(res.members, vec![1, 2, 3, 5, 8, 10, 11, 12]);
        assert_eq!(res.expected_size(), 8);
        assert!(res.contains(1));
    }

    #[test]
    fn spec_validation() {
        assert_eq!(least_primitive_root(13).unwrap(), 2);
        assert!(PrimeFieldSpec::new(13, 5).resolve().is_err());
        assert!(PrimeFieldSpec::new(15, 7).resolve().is_err());
        assert!(PrimeFieldSpec::new(13, 2).resolve().is_err());
        assert!(PrimeFieldSpec::with_generator(13, 3, 3).resolve().is_err());
    }

    #[test]
    fn paley_thirteen_regular() {
        let (x, _) = paley_complex(&PrimeFieldSpec::new(13, 3), 2).unwrap();
        assert_eq!(x.vertex_count(), 13);
        for &v in x.vertices() {
            assert_eq!(x.degree(v), 8);
        }
        assert!(x.is_downward_closed());
    }

    #[test]
    fn parameter_check() {
        let b = |v: u64| BigUint::from(v);
        assert!(paley_parameter_check(1, &b(17), &b(290)));
        assert!(!paley_parameter_check(1, &b(17), &b(289)));
        assert!(!paley_parameter_check(1, &b(16), &b(10_000)));
        assert!(!paley_parameter_check(1, &b(3), &b(10_000)));
        assert!(!paley_parameter_check(2, &b(256), &b(u64::MAX)));
        assert!(paley_parameter_check(2, &b(257), &(BigUint::from(4u32) * b(257).pow(4) + 1u32)));
    }
}
