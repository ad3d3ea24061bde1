mod common;

use ample_core::ampleness::{
    dedekind_reduced, extend_embedding, is_r_ample, is_r_conic, max_conicity, min_vertices_for_ample,
    stars_intersection, Embedding,
};
use ample_core::complex::count_subcomplexes;
use ample_core::constructions::{example_thirteen, paley_complex, search_ample, sphere_join, PrimeFieldSpec};
use ample_core::{Simplex, SimplicialComplex, Vertex};
use common::{all_complexes_on, medial, small_complex};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Ampleness verdict that also checks the vertex lower bound whenever the
/// verdict is positive.
fn ample(x: &SimplicialComplex, r: usize) -> bool {
    let yes = is_r_ample(x, r).unwrap().is_ample();
    if yes {
        assert!(x.vertex_count() as u64 >= min_vertices_for_ample(r).unwrap(), "{r}-ample on {} vertices", x.vertex_count());
    }
    yes
}

fn is_embedding(x: &SimplicialComplex, a: &SimplicialComplex, dom: &[Vertex], f: &[Vertex]) -> bool {
    let k = dom.len();
    (1u32..1 << k).all(|m| {
        let s: Vec<Vertex> = (0..k).filter(|i| m & (1 << i) != 0).map(|i| dom[i]).collect();
        let mut img: Vec<Vertex> = (0..k).filter(|i| m & (1 << i) != 0).map(|i| f[i]).collect();
        img.sort_unstable();
        a.contains_sorted(&s) == x.contains_sorted(&img)
    })
}

/// Injective maps `dom → V(X)` that are embeddings of `A_dom`.
fn embeddings(x: &SimplicialComplex, a: &SimplicialComplex, dom: &[Vertex]) -> Vec<Vec<Vertex>> {
    fn rec(x: &SimplicialComplex, a: &SimplicialComplex, dom: &[Vertex], cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if !is_embedding(x, a, &dom[..cur.len()], cur) {
            return;
        }
        if cur.len() == dom.len() {
            out.push(cur.clone());
            return;
        }
        for &v in x.vertices() {
            if !cur.contains(&v) {
                cur.push(v);
                rec(x, a, dom, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(x, a, dom, &mut Vec::new(), &mut out);
    out
}

/// Extension property: every embedding of an induced `B ⊆ A` with
/// `|V(A)| ≤ r + 1` extends to an embedding of `A`.
fn extension_oracle(x: &SimplicialComplex, r: usize) -> bool {
    for m in 1..=(r + 1) as u32 {
        for a in all_complexes_on(m) {
            for w in 0u32..(1 << m) {
                let b: Vec<Vertex> = (0..m).filter(|i| w & (1 << i) != 0).collect();
                let rest: Vec<Vertex> = (0..m).filter(|i| w & (1 << i) == 0).collect();
                let order: Vec<Vertex> = b.iter().chain(&rest).copied().collect();
                let full = embeddings(x, &a, &order);
                for fb in embeddings(x, &a, &b) {
                    if !full.iter().any(|f| f[..b.len()] == fb[..]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn extension_property_exhaustive_small() {
    for n in 1..=4 {
        for x in all_complexes_on(n) {
            for r in 1..=2 {
                assert_eq!(ample(&x, r), extension_oracle(&x, r), "{x:?} r={r}");
            }
        }
    }
}

#[test]
fn extension_property_on_example_thirteen() {
    let x = example_thirteen();
    assert!(extension_oracle(&x, 2));
    assert!(ample(&x, 2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn definition_matches_extension_property(x in small_complex(6, 6), r in 1usize..=2) {
        prop_assert_eq!(ample(&x, r), extension_oracle(&x, r));
    }

    #[test]
    fn ample_implies_conic_and_monotone(x in medial(6, 16)) {
        let mut prev_ample = true;
        let mut prev_conic = true;
        for r in 1..=4 {
            let a = ample(&x, r);
            let c = is_r_conic(&x, r).is_conic();
            if a {
                prop_assert!(c);
                prop_assert!(prev_ample);
            }
            if c {
                prop_assert!(prev_conic);
            }
            prev_ample = a;
            prev_conic = c;
        }
    }

    #[test]
    fn star_intersections_stay_conic(x in medial(5, 12), seed in any::<u64>()) {
        let r = max_conicity(&x, 4);
        prop_assume!(r >= 1);
        let r = r as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for t in 1..=r.min(x.vertex_count()) {
            let vs: Vec<Vertex> = x.vertices().choose_multiple(&mut rng, t).copied().collect();
            let st = stars_intersection(&x, &vs).unwrap();
            prop_assert!(!st.is_empty());
            prop_assert!(is_r_conic(&st, r - t).is_conic());
        }
    }

    #[test]
    fn embeddings_extend_in_example_thirteen(a in small_complex(3, 3), w in 0u32..8, pick in any::<prop::sample::Index>()) {
        let x = example_thirteen();
        let b: Vec<Vertex> = a.vertices().iter().copied().filter(|v| w & (1 << v) != 0).collect();
        let options = embeddings(&x, &a, &b);
        prop_assume!(!options.is_empty());
        let fb = &options[pick.index(options.len())];
        let f_b: Embedding = b.iter().copied().zip(fb.iter().copied()).collect();
        let f = extend_embedding(&x, &a, &b, &f_b).unwrap().expect("2-ample extends");
        let dom: Vec<Vertex> = f.keys().copied().collect();
        let img: Vec<Vertex> = f.values().copied().collect();
        prop_assert_eq!(dom.as_slice(), a.vertices());
        prop_assert!(is_embedding(&x, &a, &dom, &img));
        for (k, v) in &f_b {
            prop_assert_eq!(f[k], *v);
        }
    }
}

#[test]
fn dedekind_counts_subcomplexes_of_simplex() {
    for r in 1..=4u32 {
        let full = SimplicialComplex::from_maximal([(0..r).collect::<Vec<_>>()]).unwrap();
        assert_eq!(dedekind_reduced(r as usize).unwrap(), count_subcomplexes(&full, u64::MAX));
    }
}

fn check_link_heredity(x: &SimplicialComplex, r: usize) {
    assert!(ample(x, r));
    for &v in x.vertices() {
        let lk = x.link(&Simplex::vertex(v)).unwrap();
        assert!(ample(&lk, r - 1), "link of {v} is not {}-ample", r - 1);
    }
}

#[test]
fn links_of_ample_complexes_are_ample() {
    check_link_heredity(&example_thirteen(), 2);
    let found = search_ample(60, 2, 5000, 7, &Default::default()).unwrap();
    check_link_heredity(&found.complex.expect("a 2-ample sample at n = 60"), 2);
    let mut paley_hits = 0;
    for q in [37u64, 61, 73, 97, 109] {
        let (x, _) = paley_complex(&PrimeFieldSpec::new(q, 3), 3).unwrap();
        for r in [3, 2] {
            if ample(&x, r) {
                check_link_heredity(&x, r);
                paley_hits += 1;
                break;
            }
        }
    }
    assert!(paley_hits > 0);
}

#[test]
fn sphere_joins_are_sharp() {
    for r in 1..=3 {
        let s = sphere_join(r + 1).unwrap();
        assert!(is_r_conic(&s, 2 * r + 1).is_conic());
        assert!(!is_r_conic(&s, 2 * r + 2).is_conic());
    }
}
