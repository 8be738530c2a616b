mod common;

use common::{brute_max_disjoint_bases, dense_betti, fm_feasible, hull_system, q};
use mtv_core::generators::explicit_family;
use mtv_core::{
    betti_reduced, boundary_matrix, hulls_intersect, max_disjoint_bases, partition_almost_equal, FaceSet, Limits,
    Rational, SimplicialComplex,
};
use proptest::prelude::*;

fn facets() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::btree_set(0u32..7, 1..=4), 1..6)
        .prop_map(|fs| fs.into_iter().map(|s| s.into_iter().collect()).collect())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn point_sets() -> impl Strategy<Value = Vec<Vec<Vec<Rational>>>> {
    (1usize..=2, 2usize..=3).prop_flat_map(|(dim, parts)| {
        prop::collection::vec(
            prop::collection::vec(prop::collection::vec(rational(), dim), 1..=2),
            parts,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn betti_agrees_with_dense(fs in facets()) {
        let x = SimplicialComplex::from_facets(7, fs, &Limits::default()).unwrap();
        let top = x.materialized_dim().max(0) as usize;
        prop_assert_eq!(betti_reduced(&x, top).unwrap().values, dense_betti(&x, top));
    }

    #[test]
    fn boundary_of_boundary(fs in facets()) {
        let x = SimplicialComplex::from_facets(7, fs, &Limits::default()).unwrap();
        let top = x.materialized_dim().max(0) as usize;
        for d in 1..=top {
            prop_assert!(boundary_matrix(&x, d - 1).unwrap().compose_is_zero(&boundary_matrix(&x, d).unwrap()));
        }
    }

    #[test]
    fn euler_relation(fs in facets()) {
        let x = SimplicialComplex::from_facets(7, fs, &Limits::default()).unwrap();
        let top = x.materialized_dim().max(0) as usize;
        let alt: i64 = betti_reduced(&x, top).unwrap().values.iter().enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(x.f_vector().euler_characteristic() - 1, alt);
    }

    #[test]
    fn hulls_match_fourier_motzkin(sets in point_sets()) {
        let got = hulls_intersect(&sets).unwrap();
        let (a, b) = hull_system(&sets);
        prop_assert_eq!(got.is_some(), fm_feasible(&a, &b));
    }

    #[test]
    fn packing_matches_brute_force(seed in any::<u64>()) {
        for inst in explicit_family(3, seed) {
            let got = max_disjoint_bases(&inst.matroid);
            prop_assert_eq!(got.b, brute_max_disjoint_bases(&inst.matroid));
            prop_assert!(got.certificate.unwrap().holds(&inst.matroid));
        }
    }

    #[test]
    fn almost_equal_split(b in 0usize..40, k in 1usize..8) {
        let blocks = partition_almost_equal(b, k).unwrap();
        prop_assert_eq!(blocks.len(), k);
        let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        prop_assert_eq!(sizes.iter().sum::<usize>(), b);
        prop_assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
        let flat: Vec<usize> = blocks.concat();
        prop_assert_eq!(flat, (0..b).collect::<Vec<_>>());
    }

    #[test]
    fn face_set_algebra(a in prop::collection::btree_set(0usize..10, 0..6), b in prop::collection::btree_set(0usize..10, 0..6)) {
        let (x, y) = (FaceSet::new(a.clone()), FaceSet::new(b.clone()));
        prop_assert_eq!(x.union(&y).len() + x.intersection(&y).len(), a.len() + b.len());
        prop_assert_eq!(x.is_disjoint(&y), a.is_disjoint(&b));
        prop_assert!(x.difference(&y).is_subset(&x));
    }
}

#[test]
fn integer_points() {
    let sets = vec![vec![vec![q(0)], vec![q(2)]], vec![vec![q(1)]]];
    assert!(hulls_intersect(&sets).unwrap().is_some());
}
