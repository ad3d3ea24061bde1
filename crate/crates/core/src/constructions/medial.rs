//! The medial-regime measure `P(X) = 2^{−H(X)}` on subcomplexes of the full
//! simplex on `n` vertices, with `H(X) = |F(X)| + |E(X)|`.

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::complex::{AmbientContext, Simplex, SimplicialComplex, Vertex, MAX_VERTEX_ID};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MedialSample {
    pub complex: SimplicialComplex,
    pub n: usize,
    pub seed: u64,
    /// Number of fair coins flipped; the sample has probability `2^{−h}`.
    pub h: u64,
}

/// Draws from the medial measure. Vertices are kept independently with
/// probability ½; then, one dimension at a time, every simplex whose whole
/// boundary is present is kept with probability ½. Candidates of dimension
/// `d` are generated from kept `(d−1)`-simplexes extended by a larger common
/// neighbour, so work tracks the candidates rather than `C(n, d+1)`.
///
/// Every candidate is exactly a simplex of the result or an external simplex
/// of it, so `h = |F| + |E|`. With `max_dim` set, sampling stops after that
/// dimension and `h` counts only the coins actually flipped.
pub fn medial_sample(n: usize, seed: u64, max_dim: Option<usize>) -> Result<MedialSample> {
    if n == 0 {
        return Err(Error::InvalidParameters("medial_sample needs n ≥ 1".into()));
    }
    if n > MAX_VERTEX_ID as usize + 1 {
        return Err(Error::ResourceLimit(format!("n = {n} exceeds the vertex id limit")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = n as u64;
    let vertices: Vec<Vertex> = (0..n as Vertex).filter(|_| rng.gen::<bool>()).collect();
    let mut levels: Vec<Vec<Simplex>> = vec![vertices.iter().map(|&v| Simplex::vertex(v)).collect()];
    let mut present: FxHashSet<Simplex> = levels[0].iter().cloned().collect();
    let mut neighbors = vec![FixedBitSet::with_capacity(n); n];
    let cap = max_dim.unwrap_or(usize::MAX);
    let mut d = 1;
    while d <= cap {
        let mut next = Vec::new();
        for tau in &levels[d - 1] {
            let last = tau.last();
            let candidates: Vec<Vertex> = if d == 1 {
                vertices.iter().copied().filter(|&w| w > last).collect()
            } else {
                let mut common = neighbors[tau.first() as usize].clone();
                for &v in &tau.vertices()[1..] {
                    common.intersect_with(&neighbors[v as usize]);
                }
                common.ones().map(|w| w as Vertex).filter(|&w| w > last).collect()
            };
            for w in candidates {
                let sigma = tau.with_vertex(w);
                if d > 1 && !sigma.facets().all(|f| present.contains(&f)) {
                    continue;
                }
                h += 1;
                if rng.gen::<bool>() {
                    next.push(sigma);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        if d == 1 {
            for e in &next {
                let (a, b) = (e.vertices()[0] as usize, e.vertices()[1] as usize);
                neighbors[a].insert(b);
                neighbors[b].insert(a);
            }
        }
        present.extend(next.iter().cloned());
        levels.push(next);
        d += 1;
    }
    let mut list: Vec<Simplex> = levels.into_iter().flatten().collect();
    list.sort_unstable();
    Ok(MedialSample { complex: SimplicialComplex::from_sorted_closed(list), n, seed, h })
}

/// `H(X) = |F(X)| + |E(X)|` relative to the full simplex on `0..n`; the
/// probability of `X` is `2^{−H}`. External simplexes have dimension at most
/// `dim X + 1`.
pub fn medial_probability(x: &SimplicialComplex, n: usize) -> Result<u64> {
    let ctx = AmbientContext::standard(n as u32, x)?;
    let max_dim = (x.dim() + 1) as usize;
    Ok((x.simplex_count() + x.external_simplexes(&ctx, max_dim).len()) as u64)
}

/// Base-2 logarithm of `n^r · 2^{2^r} · (1 − 2^{−2^r})^{n−r}`.
pub fn ampleness_failure_log2_bound(n: u128, r: u32) -> Result<f64> {
    if r == 0 || n <= r as u128 {
        return Err(Error::InvalidParameters("the failure bound needs n > r ≥ 1".into()));
    }
    let two_r = 2f64.powi(r as i32);
    let tail = (-(2f64.powf(-two_r))).ln_1p() / std::f64::consts::LN_2;
    Ok(r as f64 * (n as f64).log2() + two_r + (n - r as u128) as f64 * tail)
}

/// Upper bound on the probability that a medial sample on `n` vertices is
/// not r-ample; values ≥ 1 carry no information. Evaluated in log space.
pub fn ampleness_failure_bound(n: u128, r: u32) -> Result<f64> {
    Ok(ampleness_failure_log2_bound(n, r)?.exp2())
}

/// `r · 2^r · 2^{2^r}`, the vertex count from which r-ample complexes are
/// guaranteed to exist by the failure bound (`None` on overflow).
pub fn existence_threshold(r: u32) -> Option<u128> {
    let two_r = 1u128.checked_shl(r)?;
    let big = 1u128.checked_shl(u32::try_from(two_r).ok()?)?;
    (r as u128).checked_mul(two_r)?.checked_mul(big)
}
