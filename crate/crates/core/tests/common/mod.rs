#![allow(dead_code)]

use ample_core::constructions::medial_sample;
use ample_core::{SimplicialComplex, Vertex};
use proptest::prelude::*;

/// Complex generated by up to `max_facets` random vertex sets on `0..n`.
pub fn small_complex(n: u32, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(1u32..(1 << n), 1..=max_facets).prop_map(move |masks| {
        let facets: Vec<Vec<Vertex>> = masks.iter().map(|&m| (0..n).filter(|b| m & (1 << b) != 0).collect()).collect();
        SimplicialComplex::from_maximal(facets).unwrap()
    })
}

/// Non-empty medial sample on `lo..=hi` ambient vertices.
pub fn medial(lo: usize, hi: usize) -> impl Strategy<Value = SimplicialComplex> {
    (lo..=hi, any::<u64>()).prop_filter_map("empty sample", |(n, seed)| {
        let x = medial_sample(n, seed, None).unwrap().complex;
        (!x.is_empty()).then_some(x)
    })
}

/// Every downward-closed family of non-empty subsets of `0..n` using all `n`
/// vertices, as complexes.
pub fn all_complexes_on(n: u32) -> Vec<SimplicialComplex> {
    let subsets: Vec<u32> = (1..(1u32 << n)).filter(|s| s.count_ones() >= 2).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << subsets.len()) {
        let fam: Vec<u32> = subsets.iter().enumerate().filter(|(i, _)| choice & (1 << i) != 0).map(|(_, &s)| s).collect();
        let closed = fam.iter().all(|&s| {
            (0..n).filter(|b| s & (1 << b) != 0).all(|b| {
                let f = s & !(1 << b);
                f.count_ones() < 2 || fam.contains(&f)
            })
        });
        if !closed {
            continue;
        }
        let mut facets: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
        facets.extend(fam.iter().map(|&s| (0..n).filter(|b| s & (1 << b) != 0).collect()));
        out.push(SimplicialComplex::from_maximal(facets).unwrap());
    }
    out
}
