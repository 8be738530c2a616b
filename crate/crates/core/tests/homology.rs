mod common;

use common::dense_betti;
use mtv_core::generators::catalogue;
use mtv_core::{
    betti_reduced, boundary_matrix, chessboard, corollary_sets, homologically_connected, is_action_free,
    matroid_deleted_join, verify_claim, verify_corollary, verify_matroid_connectivity, Error, FaceSet, Limits,
    Matroid, SimplicialComplex,
};

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn betti_matches_dense_oracle_on_joins() {
    for inst in catalogue().into_iter().filter(|i| i.matroid.ground_size() <= 5) {
        let m = &inst.matroid;
        let x = matroid_deleted_join(&[m, m], 2, &lim()).unwrap();
        let up_to = 1;
        assert_eq!(
            betti_reduced(&x, up_to).unwrap().values,
            dense_betti(&x, up_to),
            "{}",
            inst.name
        );
    }
}

#[test]
fn boundary_squares_to_zero() {
    let x = chessboard(3, 4, None, &lim()).unwrap();
    for d in 1..=2 {
        let lower = boundary_matrix(&x, d - 1).unwrap();
        let upper = boundary_matrix(&x, d).unwrap();
        assert!(lower.compose_is_zero(&upper));
    }
}

#[test]
fn euler_characteristic_matches_betti() {
    for (k, m) in [(2, 2), (2, 3), (3, 3), (3, 4), (2, 5)] {
        let x = chessboard(k, m, None, &lim()).unwrap();
        let top = x.materialized_dim().max(0) as usize;
        let betti = betti_reduced(&x, top).unwrap();
        let reduced: i64 = betti
            .values
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(x.f_vector().euler_characteristic() - 1, reduced, "C({k},{m})");
    }
}

#[test]
fn chessboards() {
    let c23 = chessboard(2, 3, None, &lim()).unwrap();
    assert!(homologically_connected(&c23, 0).unwrap().verified);
    let c34 = chessboard(3, 4, None, &lim()).unwrap();
    assert_eq!(betti_reduced(&c34, 2).unwrap().values, vec![0, 2, 1]);
    let c22 = chessboard(2, 2, None, &lim()).unwrap();
    let r = homologically_connected(&c22, 0).unwrap();
    assert!(!r.verified);
    assert_eq!(r.first_nonvanishing, Some(0));
}

#[test]
fn matroid_complexes_are_connected() {
    for inst in catalogue() {
        let r = verify_matroid_connectivity(&inst.matroid, &lim()).unwrap();
        assert!(r.verified, "{}: {:?}", inst.name, r.betti);
    }
}

#[test]
fn claim_and_corollary_on_small_catalogue() {
    let limits = Limits::default().with_max_faces(100_000);
    for inst in catalogue().into_iter().filter(|i| i.matroid.ground_size() <= 6).step_by(3) {
        let m = &inst.matroid;
        for k in [2, 3] {
            match verify_corollary(m, k, &limits) {
                Ok(r) => assert!(r.connectivity.verified, "{} k={k}", inst.name),
                Err(Error::ResourceLimit { .. }) => continue,
                Err(e) => panic!("{}: {e}", inst.name),
            }
            let (sets, parts) = corollary_sets(m, k).unwrap();
            let ms = vec![m.clone(); k];
            let r = verify_claim(&ms, &sets, parts, &limits).unwrap();
            assert!(r.connectivity.verified, "{} k={k}", inst.name);
        }
    }
}

#[test]
fn claim_rejects_violated_hypothesis() {
    let m = Matroid::uniform(1, 3).unwrap();
    let ms = vec![m.clone(), m];
    let sets = vec![FaceSet::new([0]), FaceSet::new([1, 2])];
    match verify_claim(&ms, &sets, 1, &lim()) {
        Err(Error::HypothesisViolated { index, certificate }) => {
            assert_eq!(index, 1);
            assert_eq!(certificate, FaceSet::new([1, 2]));
        }
        other => panic!("expected a violated hypothesis, got {other:?}"),
    }
    let r = verify_claim(&ms, &sets, 2, &lim()).unwrap();
    assert_eq!(r.bound, -1);
    assert!(r.connectivity.verified);
}

#[test]
fn prime_power_actions_are_free() {
    for inst in catalogue().into_iter().step_by(7) {
        let x = inst.matroid.as_complex(1, &lim()).unwrap();
        for k in [2, 3, 5] {
            assert!(is_action_free(&x, k, 2, &lim()).unwrap(), "{}", inst.name);
        }
    }
}

#[test]
fn faces_text_round_trip() {
    let x = chessboard(3, 4, None, &lim()).unwrap();
    let text = x.to_faces_text();
    let y = SimplicialComplex::from_faces_text(&text, &lim()).unwrap();
    assert_eq!(y.f_vector(), x.f_vector());
    assert_eq!(y.to_faces_text(), text);
}
