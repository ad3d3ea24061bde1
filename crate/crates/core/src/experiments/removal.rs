use serde::{Deserialize, Serialize};

use crate::ampleness::{reduced_dedekind_value, REDUCED_DEDEKIND};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Simplexes to delete together with everything containing them. Stored as
/// an antichain: a member containing another member is redundant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalFamily {
    simplexes: Vec<Simplex>,
}

impl RemovalFamily {
    /// Drops every member that has another member as a proper face, and
    /// duplicates.
    pub fn new<I: IntoIterator<Item = Simplex>>(simplexes: I) -> Self {
        let mut list: Vec<Simplex> = simplexes.into_iter().collect();
        list.sort_unstable();
        list.dedup();
        let kept: Vec<Simplex> =
            list.iter().filter(|s| !list.iter().any(|t| t != *s && t.is_face_of(s))).cloned().collect();
        RemovalFamily { simplexes: kept }
    }

    pub fn simplexes(&self) -> &[Simplex] {
        &self.simplexes
    }

    pub fn cardinality(&self) -> usize {
        self.simplexes.len()
    }

    /// Sum of the dimensions of the members.
    pub fn total_dimension(&self) -> usize {
        self.simplexes.iter().map(Simplex::dim).sum()
    }

    /// `|F| + dim F`, the quantity the resilience bound depends on.
    pub fn weight(&self) -> usize {
        self.cardinality() + self.total_dimension()
    }
}

/// `X` minus the upward closure of `F`.
pub fn remove_family(x: &SimplicialComplex, f: &RemovalFamily) -> Result<SimplicialComplex> {
    if let Some(s) = f.simplexes().iter().find(|s| !x.contains(s)) {
        return Err(Error::AbsentSimplex(s.vertices().to_vec()));
    }
    let kept = x.simplices().filter(|s| !f.simplexes().iter().any(|t| t.is_face_of(s))).cloned().collect();
    Ok(SimplicialComplex::from_sorted_closed(kept))
}

/// `M'(k) + k`, or the lower bound `2^{C(k, ⌊k/2⌋)} + k` beyond the table
/// (saturating). Both are valid thresholds for the resilience bound.
pub fn resilience_threshold(k: usize) -> u128 {
    if let Ok(m) = reduced_dedekind_value(k) {
        return m as u128 + k as u128;
    }
    let c = binomial(k, k / 2);
    let pow = if c >= 127 { u128::MAX } else { 1u128 << c };
    pow.saturating_add(k as u128)
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Smallest `k` with `|F| + dim F < M'(k) + k`.
pub fn resilience_k(f: &RemovalFamily) -> usize {
    let w = f.weight() as u128;
    (0..).find(|&k| w < resilience_threshold(k)).expect("thresholds grow without bound")
}

/// Ampleness still guaranteed after removing `F` from an r-ample complex:
/// `r − k` for the smallest admissible `k`, or `None` when nothing remains.
pub fn resilience_guarantee(r: usize, f: &RemovalFamily) -> Option<usize> {
    r.checked_sub(resilience_k(f)).filter(|&g| g >= 1)
}

/// Whether deleting `a0` vertices and `a1` edges from an r-ample complex
/// (`r ≥ 3`) keeps it 2-ample, hence connected: `a0 + 2a1 < M'(r−2) + r − 2`.
pub fn connectivity_after_removal_bound(r: usize, a0: u64, a1: u64) -> Result<bool> {
    if r < 3 {
        return Err(Error::InvalidParameters("the connectivity bound needs r ≥ 3".into()));
    }
    let lhs = a0 as u128 + 2 * a1 as u128;
    Ok(lhs < resilience_threshold(r - 2))
}

/// The explicit sufficient form `a0 + 2a1 < 2^{C(r−2, ⌊r/2⌋−1)} + r − 2`.
pub fn connectivity_after_removal_explicit(r: usize, a0: u64, a1: u64) -> Result<bool> {
    if r < 3 {
        return Err(Error::InvalidParameters("the connectivity bound needs r ≥ 3".into()));
    }
    let c = binomial(r - 2, r / 2 - 1);
    let pow = if c >= 127 { u128::MAX } else { 1u128 << c };
    Ok((a0 as u128 + 2 * a1 as u128) < pow.saturating_add(r as u128 - 2))
}

/// Largest tabulated `k`.
pub const TABULATED_K: usize = REDUCED_DEDEKIND.len() - 1;

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn antichain_reduction() {
        let f = RemovalFamily::new([s(&[0, 1, 2]), s(&[0, 1]), s(&[3]), s(&[3])]);
        assert_eq!(f.simplexes(), &[s(&[3]), s(&[0, 1])]);
        assert_eq!(f.weight(), 3);
    }

    #[test]
    fn removal_examples() {
        let tri = SimplicialComplex::from_maximal([[0u32, 1, 2]]).unwrap();
        let y = remove_family(&tri, &RemovalFamily::new([s(&[0, 1])])).unwrap();
        assert_eq!(y, SimplicialComplex::from_maximal([vec![0u32, 2], vec![1, 2]]).unwrap());
        let y = remove_family(&tri, &RemovalFamily::new([s(&[1])])).unwrap();
        assert_eq!(y, tri.induced(&[0, 2]).unwrap());
        assert!(remove_family(&tri, &RemovalFamily::new([s(&[5])])).is_err());
    }

    #[test]
    fn guarantees() {
        assert_eq!(resilience_guarantee(5, &RemovalFamily::new([s(&[0])])), Some(4));
        assert_eq!(resilience_guarantee(5, &RemovalFamily::new([s(&[0, 1])])), Some(4));
        assert_eq!(resilience_guarantee(1, &RemovalFamily::new([s(&[0])])), None);
        // Weight 21: 7 edges (7 + 7 = 14) and 7 vertices.
        let mut members: Vec<Simplex> = (0..7).map(|i| s(&[2 * i, 2 * i + 1])).collect();
        members.extend((100..107).map(|v| s(&[v])));
        let f = RemovalFamily::new(members);
        assert_eq!(f.weight(), 21);
        assert_eq!(resilience_guarantee(5, &f), Some(2));
        assert_eq!(resilience_threshold(7), (1 << 35) + 7);
    }

    #[test]
    fn connectivity_bounds() {
        assert!(connectivity_after_removal_bound(5, 2, 1).unwrap());
        assert!(!connectivity_after_removal_bound(3, 3, 0).unwrap());
        assert!(connectivity_after_removal_bound(3, 2, 0).unwrap());
        assert!(connectivity_after_removal_explicit(5, 2, 1).unwrap());
        assert!(connectivity_after_removal_bound(2, 0, 0).is_err());
    }
}
