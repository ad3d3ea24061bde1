//! Exact r-ampleness and r-conicity.
//!
//! A complex `X` is r-ample when for every vertex set `U` with `|U| ≤ r` and
//! every subcomplex `A ⊆ X_U` some vertex `v ∉ U` has `Lk_X(v) ∩ X_U = A`.
//! It is r-conic when every `X_U` with `|U| ≤ r` lies in a closed star.
//!
//! The ampleness check inverts the quantifiers: for a fixed `U` the restricted
//! links of all outside vertices are computed once as bitmasks, and every
//! subcomplex of `X_U` is then a set lookup.

mod dedekind;
mod embedding;
pub(crate) mod local;

use std::time::{Duration, Instant};

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, Vertex, VertexSet};
use crate::error::{Error, Result};

pub use dedekind::{dedekind_reduced, min_vertices_for_ample, reduced_dedekind_value, DedekindTable, REDUCED_DEDEKIND};
pub use embedding::{extend_embedding, Embedding};
use local::{first_subset_hit, for_each_subset, LocalFaces};

/// Largest `r` accepted without `force`.
pub const DEFAULT_AMPLE_CAP: usize = 4;
/// Hard ceiling: `X_U` must fit in 64 bits of face mask.
pub const MAX_AMPLE_R: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmpleResult {
    Ample,
    NotAmple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmpleCounterexample {
    pub u: Vec<Vertex>,
    pub a: SimplicialComplex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub u: Vec<Vertex>,
    pub a: SimplicialComplex,
    pub witness: Vertex,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AmpleVerdict {
    pub result: AmpleResult,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<AmpleCounterexample>,
    #[serde(with = "duration_ms")]
    pub elapsed: Duration,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_table: Option<Vec<WitnessEntry>>,
}

impl AmpleVerdict {
    pub fn is_ample(&self) -> bool {
        self.result == AmpleResult::Ample
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConicResult {
    Conic,
    NotConic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicVerdict {
    pub result: ConicResult,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Vec<Vertex>>,
}

impl ConicVerdict {
    pub fn is_conic(&self) -> bool {
        self.result == ConicResult::Conic
    }
}

mod duration_ms {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64() * 1e3)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let ms = f64::deserialize(d)?;
        Ok(Duration::from_secs_f64(ms.max(0.0) / 1e3))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AmpleOptions {
    /// Largest `r` accepted unless `force` is set.
    pub cap: usize,
    pub force: bool,
    pub witness_table: bool,
}

impl Default for AmpleOptions {
    fn default() -> Self {
        AmpleOptions { cap: DEFAULT_AMPLE_CAP, force: false, witness_table: false }
    }
}

fn check_vertices(x: &SimplicialComplex, u: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut u = u.to_vec();
    u.sort_unstable();
    u.dedup();
    if let Some(&v) = u.iter().find(|&&v| !x.has_vertex(v)) {
        return Err(Error::AbsentVertex(v));
    }
    Ok(u)
}

/// `Lk_X(v) ∩ X_U`: the simplexes `σ ∈ X_U` with `σ ∪ {v} ∈ X`.
pub fn link_restricted(x: &SimplicialComplex, v: Vertex, u: &[Vertex]) -> Result<SimplicialComplex> {
    if !x.has_vertex(v) {
        return Err(Error::AbsentVertex(v));
    }
    let u = check_vertices(x, u)?;
    if u.binary_search(&v).is_ok() {
        return Err(Error::InvalidQuery(format!("vertex {v} lies in U")));
    }
    let xu = x.induced(&u)?;
    let list = xu.simplices().filter(|s| x.contains(&s.with_vertex(v))).cloned().collect();
    Ok(SimplicialComplex::from_sorted_closed(list))
}

/// Least vertex `v ∉ U` with `Lk_X(v) ∩ X_U = A`.
pub fn ample_witness(x: &SimplicialComplex, u: &[Vertex], a: &SimplicialComplex) -> Result<Option<Vertex>> {
    Ok(witnesses(x, u, a)?.into_iter().next())
}

/// All vertices `v ∉ U` with `Lk_X(v) ∩ X_U = A`, ascending.
pub fn witnesses(x: &SimplicialComplex, u: &[Vertex], a: &SimplicialComplex) -> Result<Vec<Vertex>> {
    let u = check_vertices(x, u)?;
    let mut in_u = VertexSet::with_capacity(x.id_bound());
    for &v in &u {
        in_u.insert(v as usize);
    }
    let outside = x.vertices().iter().copied().filter(|&v| !in_u.contains(v as usize));
    match LocalFaces::new(x, &u) {
        Some(lf) => {
            let target = lf.mask_of(a)?;
            Ok(outside.filter(|&v| lf.link_mask(x, v) == target).collect())
        }
        None => {
            let xu = x.induced(&u)?;
            if !a.is_subcomplex_of(&xu) {
                return Err(Error::InvalidSubcomplex(format!("A is not a subcomplex of X_U for U = {u:?}")));
            }
            let mut hits = Vec::new();
            for v in outside {
                if link_restricted(x, v, &u)? == *a {
                    hits.push(v);
                }
            }
            Ok(hits)
        }
    }
}

/// Counterexample for one `U`, or `None` when every subcomplex is witnessed.
fn check_subset(x: &SimplicialComplex, u: &[Vertex], in_u: &mut VertexSet) -> Option<AmpleCounterexample> {
    let lf = LocalFaces::new(x, u).expect("|U| ≤ 6 keeps X_U within 64 simplexes");
    in_u.clear();
    for &v in u {
        in_u.insert(v as usize);
    }
    let mut achieved: FxHashSet<u64> = FxHashSet::default();
    for &v in x.vertices() {
        if !in_u.contains(v as usize) {
            achieved.insert(lf.link_mask(x, v));
        }
    }
    let mut missing = None;
    lf.for_each_subcomplex(|m| {
        if achieved.contains(&m) {
            true
        } else {
            missing = Some(m);
            false
        }
    });
    missing.map(|m| AmpleCounterexample { u: u.to_vec(), a: lf.complex_of(m) })
}

fn witness_entries(x: &SimplicialComplex, u: &[Vertex]) -> Vec<WitnessEntry> {
    let lf = LocalFaces::new(x, u).expect("small U");
    let mut first: FxHashMap<u64, Vertex> = FxHashMap::default();
    for &v in x.vertices() {
        if u.binary_search(&v).is_err() {
            first.entry(lf.link_mask(x, v)).or_insert(v);
        }
    }
    let mut out = Vec::new();
    lf.for_each_subcomplex(|m| {
        if let Some(&w) = first.get(&m) {
            out.push(WitnessEntry { u: u.to_vec(), a: lf.complex_of(m), witness: w });
        }
        true
    });
    out
}

fn check_r(r: usize, opts: &AmpleOptions) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidQuery("ampleness is defined for r ≥ 1".into()));
    }
    if r > MAX_AMPLE_R {
        return Err(Error::ResourceLimit(format!("r = {r} exceeds the hard limit {MAX_AMPLE_R}")));
    }
    if r > opts.cap && !opts.force {
        return Err(Error::ResourceLimit(format!("r = {r} exceeds the cap {} (use force to override)", opts.cap)));
    }
    Ok(())
}

/// Exact r-ampleness verdict with default options (cap 4, no witness table).
pub fn is_r_ample(x: &SimplicialComplex, r: usize) -> Result<AmpleVerdict> {
    is_r_ample_with(x, r, &AmpleOptions::default())
}

pub fn is_r_ample_with(x: &SimplicialComplex, r: usize, opts: &AmpleOptions) -> Result<AmpleVerdict> {
    check_r(r, opts)?;
    let start = Instant::now();
    let counterexample = first_subset_hit(x.vertices(), r, |u| {
        let mut scratch = VertexSet::with_capacity(x.id_bound());
        check_subset(x, u, &mut scratch)
    });
    let result = if counterexample.is_some() { AmpleResult::NotAmple } else { AmpleResult::Ample };
    let witness_table = (opts.witness_table && counterexample.is_none()).then(|| {
        let mut table = Vec::new();
        for_each_subset(x.vertices(), r, |u| table.extend(witness_entries(x, u)));
        table
    });
    Ok(AmpleVerdict { result, r, counterexample, elapsed: start.elapsed(), witness_table })
}

/// Whether `X_U ⊆ St_X(v)` for some vertex `v`; returns the least such `v`.
fn covering_star(x: &SimplicialComplex, u: &[Vertex]) -> Option<Vertex> {
    let faces: Vec<_> = x.induced(u).expect("vertices present").simplices().cloned().collect();
    x.vertices().iter().copied().find(|&v| {
        u.iter().all(|&w| w == v || x.adjacent(v, w)) && faces.iter().all(|s| x.in_closed_star(v, s))
    })
}

/// Exact r-conicity verdict. Checking induced subcomplexes suffices: any `L`
/// with vertex set inside `U` is contained in `X_U`, and stars are closed
/// under taking faces.
pub fn is_r_conic(x: &SimplicialComplex, r: usize) -> ConicVerdict {
    let counterexample = first_subset_hit(x.vertices(), r, |u| covering_star(x, u).is_none().then(|| u.to_vec()));
    let result = if counterexample.is_some() { ConicResult::NotConic } else { ConicResult::Conic };
    ConicVerdict { result, r, counterexample }
}

/// Largest `r ≤ r_cap` for which `X` is r-ample (0 when it is not 1-ample).
pub fn max_ampleness(x: &SimplicialComplex, r_cap: usize) -> Result<usize> {
    max_ampleness_with(x, r_cap, &AmpleOptions::default())
}

pub fn max_ampleness_with(x: &SimplicialComplex, r_cap: usize, opts: &AmpleOptions) -> Result<usize> {
    let opts = AmpleOptions { witness_table: false, ..*opts };
    let mut best = 0;
    for r in 1..=r_cap {
        if !is_r_ample_with(x, r, &opts)?.is_ample() {
            break;
        }
        best = r;
    }
    Ok(best)
}

/// Greedy r-ample core: while the complex is not r-ample, delete the largest
/// vertex of the canonical counterexample `U`. Returns the first r-ample
/// induced subcomplex reached, or `None` when the deletions run out.
pub fn ample_core(x: &SimplicialComplex, r: usize, opts: &AmpleOptions) -> Result<Option<SimplicialComplex>> {
    let opts = AmpleOptions { witness_table: false, ..*opts };
    let mut cur = x.clone();
    while !cur.is_empty() {
        let verdict = is_r_ample_with(&cur, r, &opts)?;
        let Some(cex) = verdict.counterexample else { return Ok(Some(cur)) };
        let Some(&drop) = cex.u.last() else { return Ok(None) };
        let keep: Vec<Vertex> = cur.vertices().iter().copied().filter(|&v| v != drop).collect();
        cur = cur.induced(&keep)?;
    }
    Ok(None)
}

/// Largest `r ≤ r_cap` for which `X` is r-conic. Every complex is r-conic for
/// negative `r`, so the empty complex reports −1.
pub fn max_conicity(x: &SimplicialComplex, r_cap: usize) -> i64 {
    if x.is_empty() {
        return -1;
    }
    let mut best = 0;
    for r in 1..=r_cap {
        if !is_r_conic(x, r).is_conic() {
            break;
        }
        best = r as i64;
    }
    best
}

/// Intersection of the closed stars of `vs`.
pub fn stars_intersection(x: &SimplicialComplex, vs: &[Vertex]) -> Result<SimplicialComplex> {
    if vs.is_empty() {
        return Err(Error::InvalidQuery("stars_intersection needs at least one vertex".into()));
    }
    if let Some(&v) = vs.iter().find(|&&v| !x.has_vertex(v)) {
        return Err(Error::AbsentVertex(v));
    }
    let list = x.simplices().filter(|s| vs.iter().all(|&v| x.in_closed_star(v, s))).cloned().collect();
    Ok(SimplicialComplex::from_sorted_closed(list))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_thirteen, sphere_join};

    fn cx(m: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_maximal(m.iter().map(|s| s.to_vec())).unwrap()
    }

    #[test]
    fn link_restricted_examples() {
        let tri = cx(&[&[0, 1, 2]]);
        assert_eq!(link_restricted(&tri, 2, &[0, 1]).unwrap(), cx(&[&[0, 1]]));
        let hollow = cx(&[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(link_restricted(&hollow, 2, &[0, 1]).unwrap(), cx(&[&[0], &[1]]));
        let x13 = example_thirteen();
        assert_eq!(link_restricted(&x13, 4, &[0, 1]).unwrap(), cx(&[&[0, 1]]));
        assert!(matches!(link_restricted(&tri, 1, &[0, 1]), Err(Error::InvalidQuery(_))));
    }

    #[test]
    fn witness_examples() {
        let x13 = example_thirteen();
        assert_eq!(ample_witness(&x13, &[], &SimplicialComplex::empty()).unwrap(), Some(0));
        let w = ample_witness(&x13, &[0], &cx(&[&[0]])).unwrap().unwrap();
        assert!(x13.adjacent(0, w));
        let tri = cx(&[&[0, 1, 2]]);
        assert_eq!(ample_witness(&tri, &[0, 1], &cx(&[&[0], &[1]])).unwrap(), None);
        assert!(matches!(ample_witness(&tri, &[0], &cx(&[&[1]])), Err(Error::InvalidSubcomplex(_))));
    }

    #[test]
    fn full_simplex_is_not_one_ample() {
        let v = is_r_ample(&cx(&[&[0, 1, 2]]), 1).unwrap();
        assert!(!v.is_ample());
        let ce = v.counterexample.unwrap();
        assert_eq!(ce.u, vec![0]);
        assert!(ce.a.is_empty());
    }

    #[test]
    fn r_cap_guard() {
        let x = cx(&[&[0]]);
        assert!(is_r_ample(&x, 5).unwrap_err().is_resource_limit());
        let forced = AmpleOptions { force: true, ..AmpleOptions::default() };
        assert!(!is_r_ample_with(&x, 5, &forced).unwrap().is_ample());
        assert!(is_r_ample(&x, 0).is_err());
    }

    #[test]
    fn cycle_is_one_ample_with_witness_table() {
        let c4 = cx(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let opts = AmpleOptions { witness_table: true, ..AmpleOptions::default() };
        let v = is_r_ample_with(&c4, 1, &opts).unwrap();
        assert!(v.is_ample());
        let table = v.witness_table.unwrap();
        // U = ∅: one entry; each singleton U: two subcomplexes.
        assert_eq!(table.len(), 1 + 4 * 2);
        for e in &table {
            assert_eq!(link_restricted(&c4, e.witness, &e.u).unwrap(), e.a);
        }
    }

    #[test]
    fn conic_examples() {
        let c4 = sphere_join(2).unwrap();
        assert!(is_r_conic(&c4, 3).is_conic());
        let v = is_r_conic(&c4, 4);
        assert!(!v.is_conic());
        assert_eq!(v.counterexample.unwrap(), vec![0, 1, 2, 3]);
        let oct = sphere_join(3).unwrap();
        assert!(is_r_conic(&oct, 5).is_conic());
        assert_eq!(max_conicity(&oct, 7), 5);
        assert_eq!(max_conicity(&SimplicialComplex::empty(), 3), -1);
        assert!(!is_r_conic(&SimplicialComplex::empty(), 0).is_conic());
        assert_eq!(max_conicity(&cx(&[&[0]]), 3), 3);
    }

    #[test]
    fn stars_intersection_examples() {
        let oct = sphere_join(3).unwrap();
        let s = stars_intersection(&oct, &[0, 1]).unwrap();
        assert_eq!(s, cx(&[&[2, 4], &[4, 3], &[3, 5], &[5, 2]]));
        assert_eq!(stars_intersection(&oct, &[2]).unwrap(), oct.closed_star(2).unwrap());
        let c4 = sphere_join(2).unwrap();
        // 0 and 2 are adjacent in the join of {0,1} with {2,3}.
        assert_eq!(stars_intersection(&c4, &[0, 2]).unwrap(), cx(&[&[0, 2]]));
        assert!(stars_intersection(&c4, &[9]).is_err());
    }

    #[test]
    fn example_thirteen_sweeps() {
        let x13 = example_thirteen();
        assert_eq!(max_ampleness(&x13, 3).unwrap(), 2);
    }

    #[test]
    fn greedy_core() {
        let x13 = example_thirteen();
        let padded = x13.union(&cx(&[&[20]])).unwrap();
        assert_eq!(ample_core(&padded, 2, &AmpleOptions::default()).unwrap(), Some(x13));
        assert_eq!(ample_core(&cx(&[&[0, 1]]), 2, &AmpleOptions::default()).unwrap(), None);
    }
}
