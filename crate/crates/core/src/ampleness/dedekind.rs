//! Reduced Dedekind numbers `M'(r)`: simplicial complexes on `r` labelled
//! vertices, the empty complex included.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `M'(0..=6)`. `M'(r) + 1` is the Dedekind number `M(r)`.
pub const REDUCED_DEDEKIND: [u64; 7] = [1, 2, 5, 19, 167, 7580, 7_828_353];

const MAX_DEDEKIND_R: usize = 6;

/// Counts complexes on `r` labelled vertices by depth-first enumeration of
/// antichains of non-empty vertex subsets (the maximal simplexes). Each
/// antichain is visited once, so `r = 6` takes a few seconds.
pub fn dedekind_reduced(r: usize) -> Result<u64> {
    if r > MAX_DEDEKIND_R {
        return Err(Error::ResourceLimit(format!("dedekind_reduced is limited to r ≤ {MAX_DEDEKIND_R}")));
    }
    // Subsets are the bit patterns 1..2^r; subset s has index s - 1.
    let m = (1usize << r) - 1;
    let incomparable: Vec<u64> = (1..=m)
        .map(|s| {
            (s + 1..=m)
                .filter(|&t| s & t != s && s & t != t)
                .fold(0u64, |acc, t| acc | (1 << (t - 1)))
        })
        .collect();
    fn count(allowed: u64, incomparable: &[u64]) -> u64 {
        let mut total = 1;
        let mut rest = allowed;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += count(allowed & incomparable[i], incomparable);
        }
        total
    }
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    Ok(count(all, &incomparable))
}

/// Table lookup of `M'(r)` for `r ≤ 6`.
pub fn reduced_dedekind_value(r: usize) -> Result<u64> {
    REDUCED_DEDEKIND
        .get(r)
        .copied()
        .ok_or_else(|| Error::ResourceLimit(format!("M'(r) is tabulated for r ≤ {MAX_DEDEKIND_R}")))
}

/// Fewest vertices an r-ample complex can have: `M'(r) + r`.
pub fn min_vertices_for_ample(r: usize) -> Result<u64> {
    Ok(reduced_dedekind_value(r)? + r as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DedekindTable {
    pub values: BTreeMap<usize, u64>,
}

impl DedekindTable {
    /// Enumerates `M'(0..=r_max)`.
    pub fn compute(r_max: usize) -> Result<Self> {
        let values = (0..=r_max).map(|r| Ok((r, dedekind_reduced(r)?))).collect::<Result<_>>()?;
        Ok(DedekindTable { values })
    }

    pub fn dedekind(&self, r: usize) -> Option<u64> {
        self.values.get(&r).map(|m| m + 1)
    }
}
