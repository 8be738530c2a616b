//! Reduced rational homology of materialized complexes, and verifiers for
//! the connectivity bounds on matroid complexes and their deleted joins.
//!
//! Connectivity is checked through its homological consequence: a
//! c-connected complex is nonempty and has `β̃_i = 0` for `0 ≤ i ≤ c`.
//!
//! Ranks are first computed modulo a large prime. Since the rank mod p
//! never exceeds the rank over Q, a Betti number that vanishes mod p also
//! vanishes over Q; any degree with a nonzero modular Betti number is
//! recomputed with fraction-free integer elimination before it is reported.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{matroid_deleted_join, SimplicialComplex};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{sparse_field_rank, sparse_integer_rank, SparseColumn};
use crate::matroid::{FaceSet, Matroid};
use crate::packing::{max_disjoint_bases, pack_into_independent, partition_almost_equal, Cover};
use crate::scalar::Fp;

/// Prime used by the modular pre-filter (2^31 − 1).
pub type FilterField = Fp<2_147_483_647>;

/// Boundary matrix `∂_i` with rows indexed by `(i−1)`-faces and columns by
/// `i`-faces, both in lexicographic order. `∂_0` is the augmentation onto
/// the single empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<SparseColumn<i64>>,
}

impl SparseIntMatrix {
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Dense product `self · rhs`, for checking `∂∂ = 0` on small inputs.
    pub fn compose_is_zero(&self, rhs: &SparseIntMatrix) -> bool {
        assert_eq!(self.cols, rhs.rows);
        rhs.columns.par_iter().all(|col| {
            let mut acc = std::collections::BTreeMap::<u32, i64>::new();
            for &(mid, b) in col {
                for &(row, a) in &self.columns[mid as usize] {
                    *acc.entry(row).or_default() += a * b;
                }
            }
            acc.values().all(|&v| v == 0)
        })
    }

    /// Triplet export: header, `rows cols nnz`, then `row col value` lines.
    pub fn to_triplets(&self) -> String {
        let mut out = String::from("format-version=1\n");
        let _ = writeln!(out, "{} {} {}", self.rows, self.cols, self.nnz());
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                let _ = writeln!(out, "{r} {c} {v}");
            }
        }
        out
    }

    fn modular_rank(&self) -> (usize, u64) {
        let cols = self.columns.iter().map(|c| {
            c.iter()
                .map(|&(r, v)| (r, FilterField::from_i64(v)))
                .collect::<SparseColumn<FilterField>>()
        });
        let red = sparse_field_rank(self.rows, cols);
        (red.rank, red.column_ops)
    }

    /// Rank over Q by fraction-free elimination (i64, retrying with big
    /// integers on overflow).
    pub fn exact_rank(&self) -> (usize, u64) {
        if let Some(red) = sparse_integer_rank(self.rows, self.columns.iter().cloned()) {
            return (red.rank, red.column_ops);
        }
        let cols = self.columns.iter().map(|c| {
            c.iter()
                .map(|&(r, v)| (r, BigInt::from(v)))
                .collect::<SparseColumn<BigInt>>()
        });
        let red = sparse_integer_rank(self.rows, cols).expect("big integers do not overflow");
        (red.rank, red.column_ops)
    }
}

/// Builds `∂_dim`. Requires faces materialized at `dim` and `dim − 1`.
pub fn boundary_matrix(x: &SimplicialComplex, dim: usize) -> Result<SparseIntMatrix> {
    if !x.is_materialized_through(dim as isize) {
        return Err(Error::precondition(format!(
            "faces of dimension {dim} are not materialized (materialized through {})",
            x.materialized_dim()
        )));
    }
    let cols_list = x.faces(dim);
    if dim == 0 {
        return Ok(SparseIntMatrix {
            rows: 1,
            cols: cols_list.len(),
            columns: (0..cols_list.len()).map(|_| vec![(0, 1)]).collect(),
        });
    }
    let rows_list = x.faces(dim - 1);
    let columns = (0..cols_list.len())
        .into_par_iter()
        .map(|c| {
            let face = cols_list.get(c);
            let mut col: SparseColumn<i64> = (0..face.len())
                .map(|j| {
                    let facet: Vec<u32> = face
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != j)
                        .map(|(_, &v)| v)
                        .collect();
                    let row = rows_list
                        .position(&facet)
                        .expect("complex is closed under subsets");
                    (row as u32, if j % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect();
    Ok(SparseIntMatrix {
        rows: rows_list.len(),
        cols: cols_list.len(),
        columns,
    })
}

/// Reduced rational Betti numbers `β̃_0..β̃_D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct BettiVector {
    pub values: Vec<usize>,
    pub computed_up_to: isize,
}

impl BettiVector {
    pub fn get(&self, i: usize) -> usize {
        self.values.get(i).copied().unwrap_or(0)
    }
}

/// Work done by a homology computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct WorkMetrics {
    pub column_operations: u64,
    pub exact_confirmations: usize,
}

struct RankTable {
    /// `ranks[i]` = rank of `∂_i`, for `i` in `0..=top + 1`.
    ranks: Vec<usize>,
    counts: Vec<usize>,
    work: WorkMetrics,
}

fn rank_table(x: &SimplicialComplex, up_to: usize) -> Result<RankTable> {
    if !x.is_materialized_through(up_to as isize + 1) {
        return Err(Error::precondition(format!(
            "degree {up_to} needs faces through dimension {} (materialized through {})",
            up_to + 1,
            x.materialized_dim()
        )));
    }
    let mut work = WorkMetrics::default();
    let matrices = (0..=up_to + 1)
        .map(|i| boundary_matrix(x, i))
        .collect::<Result<Vec<_>>>()?;
    let modular: Vec<(usize, u64)> = matrices.par_iter().map(|m| m.modular_rank()).collect();
    let mut ranks: Vec<usize> = modular.iter().map(|&(r, _)| r).collect();
    work.column_operations += modular.iter().map(|&(_, ops)| ops).sum::<u64>();
    let counts: Vec<usize> = (0..=up_to).map(|i| x.faces(i).len()).collect();

    // Any rank that could still grow over Q is recomputed exactly.
    let suspicious: Vec<usize> = (0..=up_to)
        .filter(|&i| counts[i] - ranks[i] - ranks[i + 1] > 0)
        .flat_map(|i| [i, i + 1])
        .filter(|&j| ranks[j] < matrices[j].rows.min(matrices[j].cols))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let exact: Vec<(usize, (usize, u64))> = suspicious
        .par_iter()
        .map(|&j| (j, matrices[j].exact_rank()))
        .collect();
    for (j, (r, ops)) in exact {
        ranks[j] = r;
        work.column_operations += ops;
        work.exact_confirmations += 1;
    }
    Ok(RankTable {
        ranks,
        counts,
        work,
    })
}

fn betti_from(table: &RankTable, up_to: usize) -> Vec<usize> {
    (0..=up_to)
        .map(|i| table.counts[i] - table.ranks[i] - table.ranks[i + 1])
        .collect()
}

/// `β̃_i = dim ker ∂_i − rank ∂_{i+1}` for `0 ≤ i ≤ up_to`, exact over Q.
pub fn betti_reduced(x: &SimplicialComplex, up_to: usize) -> Result<BettiVector> {
    let table = rank_table(x, up_to)?;
    Ok(BettiVector {
        values: betti_from(&table, up_to),
        computed_up_to: up_to as isize,
    })
}

/// Homological connectivity check against a claimed bound `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ConnectivityReport {
    pub claimed: isize,
    pub nonempty: bool,
    /// `β̃_0..β̃_c`.
    pub betti: Vec<usize>,
    pub vanishing: Vec<bool>,
    pub first_nonvanishing: Option<usize>,
    pub verified: bool,
    /// `f_0..f_{c+1}` of the complex checked.
    pub face_counts: Vec<usize>,
    pub work: WorkMetrics,
}

/// Checks that `x` is nonempty (when `c ≥ −1`) and `β̃_i = 0` for
/// `0 ≤ i ≤ c`. Bounds `c ≤ −2` hold vacuously.
pub fn homologically_connected(x: &SimplicialComplex, c: isize) -> Result<ConnectivityReport> {
    let face_counts = |upto: isize| -> Vec<usize> {
        (0..=upto + 1).map(|i| x.faces(i as usize).len()).collect()
    };
    if c < 0 {
        let nonempty = x.is_nonempty();
        return Ok(ConnectivityReport {
            claimed: c,
            nonempty,
            betti: Vec::new(),
            vanishing: Vec::new(),
            first_nonvanishing: None,
            verified: c <= -2 || nonempty,
            face_counts: face_counts(c),
            work: WorkMetrics::default(),
        });
    }
    let up_to = c as usize;
    let table = rank_table(x, up_to)?;
    let betti = betti_from(&table, up_to);
    let vanishing: Vec<bool> = betti.iter().map(|&b| b == 0).collect();
    let first_nonvanishing = vanishing.iter().position(|&v| !v);
    let nonempty = x.is_nonempty();
    Ok(ConnectivityReport {
        claimed: c,
        nonempty,
        verified: nonempty && first_nonvanishing.is_none(),
        betti,
        vanishing,
        first_nonvanishing,
        face_counts: face_counts(c),
        work: table.work,
    })
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `⌈Σ|A_i| / (m+1)⌉ − 2`.
pub fn claim_bound(total: usize, m: usize) -> isize {
    ceil_div(total, m + 1) as isize - 2
}

/// Report of [`verify_claim`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ClaimReport {
    pub bound: isize,
    /// For each `A_i`, a split into at most `m` independent sets of `M_i`.
    pub covers: Vec<Vec<FaceSet>>,
    pub connectivity: ConnectivityReport,
}

/// Validates the hypotheses (disjoint `A_i`, each a union of at most `m`
/// independent sets of `M_i`), builds `(M₁ ∗ ⋯ ∗ M_k)_Δ` through dimension
/// `c + 1` and checks homological `c`-connectivity.
pub fn verify_claim(
    matroids: &[Matroid],
    sets: &[FaceSet],
    m: usize,
    limits: &Limits,
) -> Result<ClaimReport> {
    if matroids.is_empty() || matroids.len() != sets.len() {
        return Err(Error::input("need one set A_i per matroid M_i, at least one"));
    }
    if m == 0 {
        return Err(Error::input("m must be positive"));
    }
    let n = matroids[0].ground_size();
    if matroids.iter().any(|x| x.ground_size() != n) {
        return Err(Error::input("matroids must share the ground set"));
    }
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if !a.is_disjoint(b) {
                return Err(Error::input(format!("sets {a:?} and {b:?} are not disjoint")));
            }
        }
    }
    let mut covers = Vec::with_capacity(sets.len());
    for (i, (mat, a)) in matroids.iter().zip(sets).enumerate() {
        match pack_into_independent(mat, a, m)? {
            Cover::Parts(parts) => covers.push(parts),
            Cover::Certificate(certificate) => {
                return Err(Error::HypothesisViolated {
                    index: i,
                    certificate,
                })
            }
        }
    }
    let total: usize = sets.iter().map(FaceSet::len).sum();
    let bound = claim_bound(total, m);
    let refs: Vec<&Matroid> = matroids.iter().collect();
    let join = matroid_deleted_join(&refs, bound + 1, limits)?;
    Ok(ClaimReport {
        bound,
        covers,
        connectivity: homologically_connected(&join, bound)?,
    })
}

/// Report of [`verify_corollary`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct CorollaryReport {
    pub b: usize,
    pub rank: usize,
    pub k: usize,
    /// Sizes of the almost-equal split of the bases.
    pub part_sizes: Vec<usize>,
    /// `⌊b·ρ / (⌈b/k⌉ + 1)⌋ − 2`, the bound that is checked.
    pub bound: isize,
    /// The sharper ceiling form obtained by feeding the same split to the
    /// claim verifier; reported, not checked here.
    pub claim_form_bound: isize,
    pub connectivity: ConnectivityReport,
}

/// `⌊b·ρ / (⌈b/k⌉ + 1)⌋ − 2`.
pub fn corollary_bound(b: usize, rank: usize, k: usize) -> isize {
    ((b * rank) / (ceil_div(b, k) + 1)) as isize - 2
}

/// Checks the lower bound on the connectivity of `M^{∗k}_Δ` derived from
/// `b(M)` disjoint bases split into `k` almost equal groups.
pub fn verify_corollary(m: &Matroid, k: usize, limits: &Limits) -> Result<CorollaryReport> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let packing = max_disjoint_bases(m);
    let rank = m.full_rank();
    let groups = partition_almost_equal(packing.b, k)?;
    let part_sizes: Vec<usize> = groups.iter().map(Vec::len).collect();
    let bound = corollary_bound(packing.b, rank, k);
    let claim_form_bound = claim_bound(packing.b * rank, ceil_div(packing.b, k));
    let factors = vec![m; k];
    let join = matroid_deleted_join(&factors, bound + 1, limits)?;
    Ok(CorollaryReport {
        b: packing.b,
        rank,
        k,
        part_sizes,
        bound,
        claim_form_bound,
        connectivity: homologically_connected(&join, bound)?,
    })
}

/// Sets `A_i` formed from the bases of `b(M)` grouped almost equally, the
/// hypothesis data behind [`verify_corollary`].
pub fn corollary_sets(m: &Matroid, k: usize) -> Result<(Vec<FaceSet>, usize)> {
    let packing = max_disjoint_bases(m);
    let groups = partition_almost_equal(packing.b, k)?;
    let sets = groups
        .iter()
        .map(|g| g.iter().flat_map(|&j| packing.packing.bases[j].iter()).collect())
        .collect();
    Ok((sets, ceil_div(packing.b, k).max(1)))
}

/// Homological `(ρ − 2)`-connectivity of the independence complex.
pub fn verify_matroid_connectivity(m: &Matroid, limits: &Limits) -> Result<ConnectivityReport> {
    let c = m.full_rank() as isize - 2;
    let complex = m.as_complex(c + 1, limits)?;
    homologically_connected(&complex, c)
}

/// One data point for the deleted-join conjecture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ConjectureRecord {
    pub b: usize,
    pub rank: usize,
    pub k: usize,
    /// `k·ρ − 2`.
    pub target: isize,
    pub verdict: bool,
    pub first_nonvanishing: Option<usize>,
    pub connectivity: ConnectivityReport,
}

/// Tests whether `M^{∗k}_Δ` is homologically `(kρ − 2)`-connected.
pub fn conjecture_scan(m: &Matroid, k: usize, limits: &Limits) -> Result<ConjectureRecord> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let rank = m.full_rank();
    let target = (k * rank) as isize - 2;
    let factors = vec![m; k];
    let join = matroid_deleted_join(&factors, target + 1, limits)?;
    let connectivity = homologically_connected(&join, target)?;
    Ok(ConjectureRecord {
        b: max_disjoint_bases(m).b,
        rank,
        k,
        target,
        verdict: connectivity.verified,
        first_nonvanishing: connectivity.first_nonvanishing,
        connectivity,
    })
}

/// [`conjecture_scan`] over a batch, in order.
pub fn conjecture_batch(matroids: &[Matroid], k: usize, limits: &Limits) -> Result<Vec<ConjectureRecord>> {
    matroids.iter().map(|m| conjecture_scan(m, k, limits)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::chessboard;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn edge_boundary() {
        let c = SimplicialComplex::from_facets(2, vec![vec![0, 1]], &lim()).unwrap();
        let d1 = boundary_matrix(&c, 1).unwrap();
        assert_eq!(d1.columns, vec![vec![(0, -1), (1, 1)]]);
        let d0 = boundary_matrix(&c, 0).unwrap();
        assert!(d0.compose_is_zero(&d1));
    }

    #[test]
    fn triangle_boundary_composes_to_zero() {
        let c = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]], &lim()).unwrap();
        let d1 = boundary_matrix(&c, 1).unwrap();
        let d2 = boundary_matrix(&c, 2).unwrap();
        assert!(d1.compose_is_zero(&d2));
    }

    #[test]
    fn six_cycle() {
        let c = chessboard(2, 3, None, &lim()).unwrap();
        assert_eq!(boundary_matrix(&c, 1).unwrap().exact_rank().0, 5);
        assert_eq!(betti_reduced(&c, 1).unwrap().values, vec![0, 1]);
    }

    #[test]
    fn chessboard_betti() {
        let c22 = chessboard(2, 2, None, &lim()).unwrap();
        assert_eq!(betti_reduced(&c22, 1).unwrap().values, vec![1, 0]);
        let c34 = chessboard(3, 4, None, &lim()).unwrap();
        assert_eq!(betti_reduced(&c34, 2).unwrap().values, vec![0, 2, 1]);
    }

    #[test]
    fn connectivity_examples() {
        let u = Matroid::uniform(2, 4).unwrap().as_complex(1, &lim()).unwrap();
        assert!(homologically_connected(&u, 0).unwrap().verified);
        let c22 = chessboard(2, 2, None, &lim()).unwrap();
        let r = homologically_connected(&c22, 0).unwrap();
        assert!(!r.verified);
        assert_eq!(r.first_nonvanishing, Some(0));
        let c35 = chessboard(3, 5, Some(2), &lim()).unwrap();
        assert!(homologically_connected(&c35, 1).unwrap().verified);
    }

    #[test]
    fn void_complex_is_not_minus_one_connected() {
        let void = SimplicialComplex::from_facets(3, vec![], &lim()).unwrap();
        assert!(!homologically_connected(&void, -1).unwrap().verified);
        assert!(homologically_connected(&void, -2).unwrap().verified);
    }

    #[test]
    fn needs_materialized_faces() {
        let c = chessboard(3, 5, Some(1), &lim()).unwrap();
        assert!(matches!(betti_reduced(&c, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn claim_examples() {
        let u = Matroid::uniform(2, 4).unwrap();
        let r = verify_claim(std::slice::from_ref(&u), &[FaceSet::new([0, 1])], 1, &lim()).unwrap();
        assert_eq!(r.bound, -1);
        assert!(r.connectivity.verified);

        let p = Matroid::uniform(1, 3).unwrap();
        let r = verify_claim(
            &[p.clone(), p.clone()],
            &[FaceSet::new([0]), FaceSet::new([1, 2])],
            2,
            &lim(),
        )
        .unwrap();
        assert_eq!(r.bound, -1);
        assert!(r.connectivity.verified);

        let r = verify_claim(
            &[u.clone(), u.clone()],
            &[FaceSet::new([0, 1]), FaceSet::new([2, 3])],
            1,
            &lim(),
        )
        .unwrap();
        assert_eq!(r.bound, 0);
        assert!(r.connectivity.verified);
    }

    #[test]
    fn claim_hypothesis_violation() {
        let p = Matroid::uniform(1, 3).unwrap();
        let err = verify_claim(
            &[p.clone(), p.clone()],
            &[FaceSet::new([0]), FaceSet::new([1, 2])],
            1,
            &lim(),
        )
        .unwrap_err();
        match err {
            Error::HypothesisViolated { index, certificate } => {
                assert_eq!(index, 1);
                assert!(p.rank(&certificate).unwrap() < certificate.len());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn corollary_examples() {
        let r = verify_corollary(&Matroid::uniform(1, 3).unwrap(), 2, &lim()).unwrap();
        assert_eq!(r.bound, -1);
        assert!(r.connectivity.verified);
        let r = verify_corollary(&Matroid::uniform(2, 4).unwrap(), 2, &lim()).unwrap();
        assert_eq!((r.b, r.bound), (2, 0));
        assert!(r.connectivity.verified);
        let y = crate::complex::colourful_complex(2, 1).unwrap();
        let r = verify_corollary(&y, 2, &lim()).unwrap();
        assert_eq!((r.b, r.rank, r.bound), (2, 2, 0));
        assert!(r.connectivity.verified);
    }

    #[test]
    fn conjecture_examples() {
        for k in [2usize, 3] {
            let low = conjecture_scan(&Matroid::uniform(1, 2 * k - 2).unwrap(), k, &lim()).unwrap();
            assert!(!low.verdict);
            assert_eq!(low.first_nonvanishing, Some(k - 2));
            let high = conjecture_scan(&Matroid::uniform(1, 2 * k - 1).unwrap(), k, &lim()).unwrap();
            assert!(high.verdict);
        }
        let one = conjecture_scan(&Matroid::uniform(1, 1).unwrap(), 1, &lim()).unwrap();
        assert_eq!(one.target, -1);
        assert!(one.verdict);
    }
}
