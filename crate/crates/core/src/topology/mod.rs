//! Exact simplicial homology, loop filling and topological-complexity
//! bound arithmetic.

mod chain;
mod connectivity;
mod disc;
mod homology;
mod linalg;
mod tc;

pub use chain::{boundary_matrix, ChainComplexMatrices, Field};
pub use connectivity::{connectivity_report, fundamental_cycles, ConnectivityReport, SimpleConnectivityCertificate};
pub use disc::{disc_bounds, fill_loop, DiscCertificate, FilledDisc};
pub use homology::{
    betti_numbers, betti_with_torsion, cycle_survives, integral_torsion, integral_torsion_with_guard, BettiReport,
    CycleSurvival, TORSION_GUARD,
};
pub use linalg::{rank_gf2, rank_rational, smith_invariants, torsion_coefficients, SparseMatrix};
pub use tc::{medial_tc_calculator, tc_upper_bound, TcCalculation};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{barmak_tower, example_thirteen, octahedron, projective_plane, sphere_join, BarmakOptions};
    use crate::SimplicialComplex;

    #[test]
    fn betti_examples() {
        for field in [Field::Gf2, Field::Rational] {
            assert_eq!(betti_numbers(&example_thirteen(), field).betti, vec![1, 14, 0]);
            assert_eq!(betti_numbers(&octahedron(), field).betti, vec![1, 0, 1]);
            assert_eq!(betti_numbers(&sphere_join(2).unwrap(), field).betti, vec![1, 1]);
        }
        assert_eq!(betti_numbers(&projective_plane(), Field::Rational).betti, vec![1, 0, 0]);
        assert_eq!(betti_numbers(&projective_plane(), Field::Gf2).betti, vec![1, 1, 1]);
        let empty = betti_numbers(&SimplicialComplex::empty(), Field::Rational);
        assert_eq!(empty.reduced(), vec![1]);
        assert_eq!(empty.homological_connectivity(), -2);
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(integral_torsion(&projective_plane()).unwrap(), vec![vec![], vec![2], vec![]]);
        assert!(integral_torsion(&octahedron()).unwrap().iter().all(Vec::is_empty));
        assert!(integral_torsion(&example_thirteen()).unwrap().iter().all(Vec::is_empty));
        assert!(integral_torsion_with_guard(&octahedron(), 10).unwrap_err().is_resource_limit());
    }

    #[test]
    fn chain_complexes_square_to_zero() {
        for x in [example_thirteen(), octahedron(), projective_plane()] {
            assert!(ChainComplexMatrices::of(&x).is_chain_complex());
        }
    }

    #[test]
    fn cycle_survival() {
        let c4 = sphere_join(2).unwrap();
        let cone = c4.cone(10).unwrap();
        assert_eq!(cycle_survives(&c4, &cone, 1).unwrap(), CycleSurvival { rational: false, gf2: false });
        let oct = octahedron();
        assert_eq!(cycle_survives(&oct, &oct, 2).unwrap(), CycleSurvival { rational: true, gf2: true });
        let tower = barmak_tower(1, 1, 1000, BarmakOptions::default()).unwrap();
        let k1 = &tower.stages[1].complex;
        assert_eq!(cycle_survives(&c4, k1, 1).unwrap(), CycleSurvival { rational: true, gf2: true });
        let path = SimplicialComplex::from_maximal([[0u32, 1], [1, 2]]).unwrap();
        assert!(cycle_survives(&path, &path, 1).is_err());
    }

    #[test]
    fn disc_bounds_formula() {
        assert_eq!(disc_bounds(5, 5), (1, 5));
        assert_eq!(disc_bounds(9, 5), (3, 13));
        assert_eq!(disc_bounds(4, 4), (1, 4));
    }

    #[test]
    fn fill_small_loops_in_cone() {
        // A cone over a cycle is not 4-ample, but has the witness needed for
        // the cycle itself: the apex.
        let c = SimplicialComplex::from_maximal([[0u32, 1], [1, 2], [2, 3], [0, 3]]).unwrap().cone(9).unwrap();
        let d = fill_loop(&c, &[0, 1, 2, 3], 4).unwrap();
        assert_eq!(d.internal_vertex_count, 1);
        assert_eq!(d.labels[4], 9);
        d.validate(&c).unwrap();
        assert!(d.within_bounds());
        assert!(matches!(fill_loop(&c, &[0, 2, 1], 4), Err(crate::Error::InvalidInput(_))));
        let err = fill_loop(&sphere_join(2).unwrap(), &[0, 2, 1, 3], 4).unwrap_err();
        assert!(matches!(err, crate::Error::NotAmpleEnough { .. }));
    }

    #[test]
    fn connectivity_examples() {
        let rep = connectivity_report(&example_thirteen(), Some(2));
        assert_eq!(rep.homological_connectivity, 0);
        assert!(rep.homological_only);
        let rep = connectivity_report(&octahedron(), None);
        assert_eq!(rep.homological_connectivity, 1);
        assert_eq!(connectivity_report(&sphere_join(2).unwrap(), None).homological_connectivity, 0);
        assert_eq!(fundamental_cycles(&sphere_join(2).unwrap()).unwrap().len(), 1);
    }
}
