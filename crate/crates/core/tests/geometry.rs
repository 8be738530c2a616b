mod common;

use common::{fm_feasible, hull_system, q};
use mtv_core::{find_tverberg, hulls_intersect, Limits, Matroid, PointConfig, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_sets(rng: &mut ChaCha8Rng) -> Vec<Vec<Vec<Rational>>> {
    let dim = rng.gen_range(1..=2);
    let total = rng.gen_range(2..=6);
    let parts = rng.gen_range(2..=total.min(3));
    let mut sizes = vec![1; parts];
    for _ in parts..total {
        sizes[rng.gen_range(0..parts)] += 1;
    }
    sizes
        .into_iter()
        .map(|s| {
            (0..s)
                .map(|_| (0..dim).map(|_| q(rng.gen_range(-4..=4))).collect())
                .collect()
        })
        .collect()
}

#[test]
fn simplex_agrees_with_fourier_motzkin() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let sets = random_sets(&mut rng);
        let got = hulls_intersect(&sets).unwrap();
        let (a, b) = hull_system(&sets);
        assert_eq!(got.is_some(), fm_feasible(&a, &b), "{sets:?}");
        if let Some(h) = got {
            for (set, lambda) in sets.iter().zip(&h.coefficients) {
                for c in 0..h.point.len() {
                    let v: Rational = set.iter().zip(lambda).map(|(p, l)| &p[c] * l).sum();
                    assert_eq!(v, h.point[c]);
                }
            }
        }
    }
}

#[test]
fn radon_partitions_always_exist() {
    for seed in 0..30 {
        let m = Matroid::uniform(3, 4).unwrap();
        let cfg = PointConfig::random(4, 2, seed).unwrap();
        let w = find_tverberg(&m, &cfg, 2, &Limits::default())
            .unwrap()
            .witness
            .expect("d + 2 points in the plane have a Radon partition");
        w.validate(&m, &cfg).unwrap();
    }
}

#[test]
fn tampered_witness_is_rejected() {
    let m = Matroid::uniform(2, 4).unwrap();
    let cfg = PointConfig::from_points(1, (0..4).map(|i| vec![q(i)]).collect()).unwrap();
    let mut w = find_tverberg(&m, &cfg, 2, &Limits::default()).unwrap().witness.unwrap();
    w.point[0] += q(1);
    assert!(w.validate(&m, &cfg).is_err());
}

#[test]
fn tuple_cap_is_reported() {
    let m = Matroid::uniform(2, 12).unwrap();
    let cfg = PointConfig::from_points(1, (0..12).map(|i| vec![q(i * i)]).collect()).unwrap();
    let err = find_tverberg(&m, &cfg, 6, &Limits::default().with_max_tuples(10)).unwrap_err();
    assert!(matches!(err, mtv_core::Error::ResourceLimit { .. }));
}
