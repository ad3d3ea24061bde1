mod common;

use ample_core::complex::{count_subcomplexes, is_isomorphic, AmbientContext, Format};
use ample_core::constructions::medial_sample;
use ample_core::{Simplex, SimplicialComplex, Vertex};
use common::{medial, small_complex};
use proptest::prelude::*;

fn closed(x: &SimplicialComplex) -> bool {
    x.simplices().all(|s| s.facets().all(|f| x.contains(&f)))
}

/// Antichains of the face poset, counted by brute force over simplex subsets.
fn antichain_count(x: &SimplicialComplex) -> u64 {
    let all: Vec<&Simplex> = x.simplices().collect();
    let n = all.len();
    (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|i| {
                m & (1 << i) == 0 || (0..n).all(|j| i == j || m & (1 << j) == 0 || !all[i].is_face_of(all[j]))
            })
        })
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn operations_preserve_closure(x in small_complex(7, 6), y in small_complex(5, 4), v in 0u32..7) {
        prop_assert!(closed(&x));
        let u: Vec<Vertex> = x.vertices().iter().copied().filter(|w| w % 2 == 0).collect();
        prop_assert!(closed(&x.induced(&u).unwrap()));
        prop_assert!(closed(&x.join(&y.shifted(10).unwrap()).unwrap()));
        prop_assert!(closed(&x.union(&y).unwrap()));
        prop_assert!(closed(&x.intersection(&y)));
        if x.has_vertex(v) {
            prop_assert!(closed(&x.link(&Simplex::vertex(v)).unwrap()));
            prop_assert!(closed(&x.closed_star(v).unwrap()));
        }
    }

    #[test]
    fn star_is_cone_over_link(x in small_complex(7, 6)) {
        for &v in x.vertices() {
            let lk = x.link(&Simplex::vertex(v)).unwrap();
            let cone = lk.cone(v).unwrap();
            prop_assert_eq!(x.closed_star(v).unwrap(), cone);
        }
    }

    #[test]
    fn induced_idempotent_and_monotone(x in small_complex(8, 8), wm in 0u32..256, um in 0u32..256) {
        let w: Vec<Vertex> = x.vertices().iter().copied().filter(|v| wm & (1 << v) != 0).collect();
        let u: Vec<Vertex> = w.iter().copied().filter(|v| um & (1 << v) != 0).collect();
        let xw = x.induced(&w).unwrap();
        prop_assert_eq!(xw.induced(&w).unwrap(), xw.clone());
        prop_assert_eq!(xw.induced(&u).unwrap(), x.induced(&u).unwrap());
    }

    #[test]
    fn join_commutes_and_associates(a in small_complex(3, 2), b in small_complex(3, 2), c in small_complex(2, 2)) {
        let (b, c) = (b.shifted(10).unwrap(), c.shifted(20).unwrap());
        let ab = a.join(&b).unwrap();
        let ba = b.join(&a).unwrap();
        prop_assert!(is_isomorphic(&ab, &ba).unwrap().is_some());
        let left = ab.join(&c).unwrap();
        let right = a.join(&b.join(&c).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&left, &right).unwrap().is_some());
    }

    #[test]
    fn subcomplex_count_matches_antichains(x in small_complex(5, 3)) {
        prop_assume!(x.simplex_count() <= 12);
        let oracle = antichain_count(&x);
        prop_assert_eq!(count_subcomplexes(&x, u64::MAX), oracle);
        prop_assert_eq!(x.subcomplexes().count() as u64, oracle);
    }

    #[test]
    fn external_simplexes_extend_closed(x in small_complex(6, 5)) {
        let ctx = AmbientContext::standard(8, &x).unwrap();
        for s in x.external_simplexes(&ctx, 3) {
            prop_assert!(!x.contains(&s));
            let y = SimplicialComplex::from_closed(x.simplices().cloned().chain([s.clone()]));
            prop_assert!(y.is_ok(), "{:?}", s);
        }
    }

    #[test]
    fn formats_round_trip(x in medial(1, 12)) {
        for f in [Format::Text, Format::Structured] {
            let text = x.serialize_as(f);
            let back = SimplicialComplex::parse_as(&text, f).unwrap();
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(back.serialize_as(f), text);
        }
    }

    #[test]
    fn relabelled_complexes_are_isomorphic(n in 3usize..9, seed in any::<u64>(), shift in 1u32..50) {
        let x = medial_sample(n, seed, None).unwrap().complex;
        let y = x.relabel(|v| (n as Vertex - 1 - v) + shift).unwrap();
        let f = is_isomorphic(&x, &y).unwrap();
        prop_assert!(f.is_some());
        let map = f.unwrap();
        prop_assert_eq!(x.relabel(|v| map.iter().find(|p| p.0 == v).unwrap().1).unwrap(), y);
    }
}
