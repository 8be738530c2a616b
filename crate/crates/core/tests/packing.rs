mod common;

use common::{brute_max_disjoint_bases, brute_rank};
use mtv_core::generators::catalogue;
use mtv_core::{
    max_disjoint_bases, pack_into_independent, pack_k_bases, validate_matroid, Cover, FaceSet, Matroid, PackOutcome,
};

#[test]
fn max_packing_matches_brute_force_on_catalogue() {
    for inst in catalogue() {
        let m = &inst.matroid;
        let got = max_disjoint_bases(m);
        assert_eq!(got.b, brute_max_disjoint_bases(m), "{}", inst.name);
        assert_eq!(got.packing.bases.len(), got.b);
        let mut used = FaceSet::empty();
        for b in &got.packing.bases {
            assert_eq!(b.len(), m.full_rank(), "{}", inst.name);
            assert!(m.independent_slice(b.as_slice()));
            assert!(b.is_disjoint(&used));
            used = used.union(b);
        }
        let cert = got.certificate.expect("positive rank");
        assert_eq!(cert.target, got.b + 1);
        assert!(cert.holds(m), "{}", inst.name);
    }
}

#[test]
fn rank_oracle_matches_definition() {
    for inst in catalogue().into_iter().filter(|i| i.matroid.ground_size() <= 7) {
        let m = &inst.matroid;
        let n = m.ground_size();
        for mask in (0u32..1 << n).step_by(3) {
            let a: FaceSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            assert_eq!(m.rank(&a).unwrap(), brute_rank(m, &a), "{} {a:?}", inst.name);
        }
    }
}

#[test]
fn bases_satisfy_exchange() {
    for inst in catalogue() {
        let m = &inst.matroid;
        assert!(validate_matroid(m.ground_size(), &m.bases()).valid, "{}", inst.name);
    }
}

#[test]
fn pack_k_is_monotone() {
    for inst in catalogue().into_iter().step_by(5) {
        let m = &inst.matroid;
        let b = max_disjoint_bases(m).b;
        for k in 1..=b + 1 {
            match pack_k_bases(m, k).unwrap() {
                PackOutcome::Packed(p) => assert!(k <= b && p.bases.len() == k),
                PackOutcome::Certificate(c) => assert!(k > b && c.holds(m)),
            }
        }
    }
}

#[test]
fn covers_by_independent_sets() {
    let m = Matroid::complete_graph(4);
    let all = m.ground();
    match pack_into_independent(&m, &all, 2).unwrap() {
        Cover::Parts(parts) => {
            assert_eq!(parts.iter().map(FaceSet::len).sum::<usize>(), 6);
            assert!(parts.iter().all(|p| m.independent_slice(p.as_slice())));
        }
        Cover::Certificate(c) => panic!("K4 splits into two forests, got {c:?}"),
    }
    let m = Matroid::uniform(1, 3).unwrap();
    match pack_into_independent(&m, &FaceSet::new([0, 1, 2]), 2).unwrap() {
        Cover::Certificate(c) => assert!(2 * m.rank(&c).unwrap() < c.len()),
        Cover::Parts(p) => panic!("three points need three parts, got {p:?}"),
    }
}
