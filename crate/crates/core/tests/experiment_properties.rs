mod common;

use ample_core::constructions::{
    example_thirteen, is_prime, medial_probability, medial_sample, paley_complex, paley_residues, rado_tower, PrimeFieldSpec,
    DEFAULT_TOWER_BUDGET,
};
use ample_core::experiments::{
    census_trend, empirical_dimension_and_betti, partition_experiment, remove_family, resilience_experiment,
    resilience_guarantee, CensusConfig, MedialStatsConfig, PartitionConfig, RemovalFamily, ResilienceConfig,
};
use ample_core::{Simplex, SimplicialComplex};
use common::medial;
use proptest::prelude::*;

fn pick(x: &SimplicialComplex, idx: &[prop::sample::Index]) -> Vec<Simplex> {
    let all: Vec<&Simplex> = x.simplices().collect();
    idx.iter().map(|i| all[i.index(all.len())].clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn medial_exponent_matches_measure(n in 1usize..=12, seed in any::<u64>()) {
        let s = medial_sample(n, seed, None).unwrap();
        prop_assert_eq!(s.h, medial_probability(&s.complex, n).unwrap());
        prop_assert_eq!(medial_sample(n, seed, None).unwrap().complex, s.complex);
    }

    #[test]
    fn removal_composes(x in medial(4, 12), f in prop::collection::vec(any::<prop::sample::Index>(), 1..3),
                        g in prop::collection::vec(any::<prop::sample::Index>(), 1..3)) {
        let fam_f = RemovalFamily::new(pick(&x, &f));
        let y = remove_family(&x, &fam_f).unwrap();
        prop_assert!(y.is_downward_closed());
        prop_assume!(!y.is_empty());
        let g_members = pick(&y, &g);
        let z = remove_family(&y, &RemovalFamily::new(g_members.clone())).unwrap();
        let both = RemovalFamily::new(fam_f.simplexes().iter().cloned().chain(g_members));
        prop_assert_eq!(remove_family(&x, &both).unwrap(), z);
    }

    #[test]
    fn guarantee_is_monotone(x in medial(4, 12), f in prop::collection::vec(any::<prop::sample::Index>(), 1..4), r in 1usize..6) {
        // Enlarging means adding members incomparable with the current
        // antichain; adding a face of a member would shrink the family.
        let mut members: Vec<Simplex> = Vec::new();
        let mut prev = usize::MAX;
        for s in pick(&x, &f) {
            if members.iter().any(|m| m.is_face_of(&s) || s.is_face_of(m)) {
                continue;
            }
            members.push(s);
            let g = resilience_guarantee(r, &RemovalFamily::new(members.clone())).unwrap_or(0);
            prop_assert!(g <= prev);
            prev = g;
        }
    }

    #[test]
    fn paley_residue_invariants(qi in 0usize..200, pi in 0usize..8) {
        let primes: Vec<u64> = (3..2000).filter(|&k| is_prime(k)).collect();
        let q = primes[qi % primes.len()];
        let ps: Vec<u64> = (3..q).filter(|&p| is_prime(p) && (q - 1) % p == 0).collect();
        prop_assume!(!ps.is_empty());
        let p = ps[pi % ps.len()];
        let res = paley_residues(&PrimeFieldSpec::new(q, p)).unwrap();
        prop_assert_eq!(res.members.len() as u64, (p + 1) * (q - 1) / (2 * p));
        prop_assert!(res.contains(1));
        for &m in &res.members {
            prop_assert!(res.contains(q - m));
        }
    }
}

#[test]
fn paley_complexes_are_closed() {
    for (q, p) in [(13, 3), (31, 3), (31, 5), (43, 7)] {
        let (x, _) = paley_complex(&PrimeFieldSpec::new(q, p), 3).unwrap();
        assert!(x.is_downward_closed());
        assert_eq!(x.vertex_count() as u64, q);
    }
}

#[test]
fn rado_stages_are_induced() {
    let tower = rado_tower(2, DEFAULT_TOWER_BUDGET).unwrap();
    for w in tower.stages.windows(2) {
        let prev = &w[0].complex;
        assert_eq!(w[1].complex.induced(prev.vertices()).unwrap(), *prev);
    }
}

#[test]
fn reports_reproduce_across_thread_counts() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let census = census_trend(&CensusConfig { ns: vec![10, 14], trials: 3, seed: 5, u_size: 2 }).unwrap();
            let stats = empirical_dimension_and_betti(&MedialStatsConfig { ns: vec![16, 32], trials: 3, ..Default::default() }).unwrap();
            let part = partition_experiment(&example_thirteen(), &PartitionConfig { parts: 2, r: 2, repeats: 3, ..Default::default() }).unwrap();
            (census.to_json(false).unwrap(), stats.to_csv().unwrap(), part.to_json(false).unwrap())
        })
    };
    assert_eq!(run(1), run(3));
}

#[test]
fn resilience_report_reproduces() {
    let cfg = ResilienceConfig { ns: vec![60], trials: 10, control_trials: 4, search_trials: 3000, complexes_per_n: 1, ..Default::default() };
    let a = resilience_experiment(&cfg).unwrap();
    let b = resilience_experiment(&cfg).unwrap();
    assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
    assert!(a.records.iter().filter(|r| r.weight < 3).all(|r| r.ample_after));
}

#[test]
fn partition_requires_ample_input() {
    let path = SimplicialComplex::from_maximal([[0u32, 1], [1, 2]]).unwrap();
    assert!(partition_experiment(&path, &PartitionConfig::default()).is_err());
}
