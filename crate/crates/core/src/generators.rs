//! Small-instance matroid catalogue used by tests and batch scans.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matroid::{LinearField, Matroid};

/// A named matroid from the catalogue.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub matroid: Matroid,
}

impl Instance {
    fn new(name: impl Into<String>, matroid: Matroid) -> Self {
        Instance {
            name: name.into(),
            matroid,
        }
    }
}

/// `U(r, n)` for `1 ≤ r ≤ 3`, `r ≤ n ≤ 8`.
pub fn uniform_family() -> Vec<Instance> {
    let mut out = Vec::new();
    for r in 1..=3 {
        for n in r..=8 {
            out.push(Instance::new(
                format!("U({r},{n})"),
                Matroid::uniform(r, n).expect("r ≤ n"),
            ));
        }
    }
    out
}

fn all_graphs(vertices: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..vertices)
        .flat_map(|u| (u + 1..vertices).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .filter(|edges: &Vec<(usize, usize)>| !edges.is_empty())
        .collect()
}

/// Every nonempty simple graph on 2 to 4 labelled vertices, a few 5-vertex
/// graphs, a multigraph and a graph with a self-loop.
pub fn graphic_family() -> Vec<Instance> {
    let mut out = Vec::new();
    for v in 2..=4 {
        for (i, edges) in all_graphs(v).into_iter().enumerate() {
            out.push(Instance::new(
                format!("graph{v}#{i}"),
                Matroid::graphic(v, edges).expect("valid graph"),
            ));
        }
    }
    let k5: Vec<(usize, usize)> = (0..5)
        .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
        .collect();
    let named: Vec<(&str, Vec<(usize, usize)>)> = vec![
        ("K5", k5.clone()),
        ("K5-e", k5[1..].to_vec()),
        ("C5", vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
        (
            "W4",
            vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
        ),
        (
            "K2,3",
            vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        ),
        (
            "bowtie",
            vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)],
        ),
        ("double-triangle", vec![(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]),
        ("self-loop", vec![(0, 0), (0, 1), (1, 2), (0, 2)]),
    ];
    for (name, edges) in named {
        let v = if name == "double-triangle" || name == "self-loop" { 3 } else { 5 };
        out.push(Instance::new(name, Matroid::graphic(v, edges).expect("valid graph")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for i in 0..6 {
        let mut edges = k5.clone();
        edges.shuffle(&mut rng);
        edges.truncate(rng.gen_range(4..=8));
        edges.sort_unstable();
        out.push(Instance::new(
            format!("random5#{i}"),
            Matroid::graphic(5, edges).expect("valid graph"),
        ));
    }
    out
}

/// Partition matroids with one to three blocks on at most 8 elements,
/// some with loops outside every block.
pub fn partition_family() -> Vec<Instance> {
    let shapes: Vec<(usize, Vec<Vec<usize>>, Vec<usize>)> = vec![
        (3, vec![vec![0, 1, 2]], vec![1]),
        (4, vec![vec![0, 1, 2, 3]], vec![2]),
        (4, vec![vec![0, 1], vec![2, 3]], vec![1, 1]),
        (5, vec![vec![0, 1], vec![2, 3]], vec![1, 1]),
        (6, vec![vec![0, 1, 2], vec![3, 4, 5]], vec![1, 2]),
        (6, vec![vec![0, 2, 4], vec![1, 3, 5]], vec![2, 2]),
        (6, vec![vec![0, 1], vec![2, 3], vec![4, 5]], vec![1, 1, 1]),
        (7, vec![vec![0, 1, 2], vec![3, 4], vec![5, 6]], vec![1, 1, 1]),
        (8, vec![vec![0, 1, 2, 3], vec![4, 5], vec![6, 7]], vec![2, 1, 1]),
        (8, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7]], vec![1, 1, 2]),
        (8, vec![vec![0, 1, 2, 3, 4, 5, 6, 7]], vec![3]),
        (7, vec![vec![1, 3, 5], vec![0, 2, 4, 6]], vec![1, 1]),
    ];
    shapes
        .into_iter()
        .enumerate()
        .map(|(i, (n, blocks, caps))| {
            Instance::new(
                format!("partition#{i}"),
                Matroid::partition(n, blocks, caps).expect("valid partition"),
            )
        })
        .collect()
}

/// Linear matroid over GF(2) or GF(3) with random entries, or a random
/// uniform or partition matroid, re-encoded as a list of bases.
fn random_explicit(rng: &mut ChaCha8Rng) -> Matroid {
    let n = rng.gen_range(2..=6);
    let source = match rng.gen_range(0..4) {
        0 | 1 => {
            let p = if rng.gen_bool(0.5) { 2 } else { 3 };
            let rows = rng.gen_range(1..=3);
            let columns = (0..n)
                .map(|_| {
                    (0..rows)
                        .map(|_| BigRational::from_integer(rng.gen_range(0..p as i64).into()))
                        .collect()
                })
                .collect();
            Matroid::linear(LinearField::Prime(p), rows, columns).expect("valid matrix")
        }
        2 => Matroid::uniform(rng.gen_range(0..=n.min(3)), n).expect("r ≤ n"),
        _ => {
            let cut = rng.gen_range(1..n);
            Matroid::partition(
                n,
                vec![(0..cut).collect(), (cut..n).collect()],
                vec![rng.gen_range(1..=cut), rng.gen_range(1..=n - cut)],
            )
            .expect("valid partition")
        }
    };
    let mut elements: Vec<usize> = (0..n).collect();
    elements.shuffle(rng);
    let bases = source
        .bases()
        .into_iter()
        .map(|b| b.iter().map(|e| elements[e]).collect())
        .collect();
    Matroid::explicit(n, bases).expect("ids in range")
}

/// `count` random explicit matroids on at most 6 elements, with at least
/// one basis of positive size.
pub fn explicit_family(count: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = random_explicit(&mut rng);
        if m.full_rank() == 0 {
            continue;
        }
        out.push(Instance::new(format!("explicit#{}", out.len()), m));
    }
    out
}

pub const EXPLICIT_SEED: u64 = 20_240_601;

/// The full small-instance catalogue: uniform, graphic, partition and 50
/// random explicit matroids.
pub fn catalogue() -> Vec<Instance> {
    let mut out = uniform_family();
    out.extend(graphic_family());
    out.extend(partition_family());
    out.extend(explicit_family(50, EXPLICIT_SEED));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::validate_matroid;

    #[test]
    fn catalogue_is_valid_and_small() {
        let all = catalogue();
        assert!(all.len() > 150);
        for inst in &all {
            assert!(inst.matroid.ground_size() <= 10, "{}", inst.name);
        }
        for inst in explicit_family(50, EXPLICIT_SEED) {
            assert!(inst.matroid.ground_size() <= 6);
            let n = inst.matroid.ground_size();
            assert!(validate_matroid(n, &inst.matroid.bases()).valid, "{}", inst.name);
        }
    }

    #[test]
    fn seeded() {
        let a: Vec<_> = explicit_family(5, 1).into_iter().map(|i| i.matroid.bases()).collect();
        let b: Vec<_> = explicit_family(5, 1).into_iter().map(|i| i.matroid.bases()).collect();
        assert_eq!(a, b);
    }
}
