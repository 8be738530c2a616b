//! Disjoint base packings and covers by independent sets, via the matroid
//! partition (matroid union) augmenting-path algorithm.
//!
//! The state is a list of pairwise disjoint independent sets ("parts").
//! An element `y` has an arc to `z` when `z` lies in a part `P` not
//! containing `y` and `P − z + y` is independent; `y` is a sink for `P`
//! when `P + y` is already independent. A shortest path from an
//! unassigned element to a sink can be applied as simultaneous exchanges.
//! When no path exists, the set `A` of elements reachable from unassigned
//! ones is spanned by each part's trace on it, which yields the
//! `k·rank(A) + |E − A|` duality certificate.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{Element, FaceSet, Matroid};

/// Pairwise disjoint bases of a matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct BasePacking {
    pub bases: Vec<FaceSet>,
}

/// Proof that `target` disjoint bases do not exist:
/// `target·rank(A) + |E − A| < target·rank(E)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct PackingCertificate {
    pub witness: FaceSet,
    pub target: usize,
}

impl PackingCertificate {
    /// Checks the certificate inequality in exact integer arithmetic.
    pub fn holds(&self, m: &Matroid) -> bool {
        let rank_a = m.rank_slice(self.witness.as_slice());
        let outside = m.ground_size() - self.witness.len();
        self.target * rank_a + outside < self.target * m.full_rank()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PackOutcome {
    Packed(BasePacking),
    Certificate(PackingCertificate),
}

/// Result of [`max_disjoint_bases`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct MaxPacking {
    pub b: usize,
    pub packing: BasePacking,
    /// Certificate that `b + 1` bases cannot be packed; absent only for
    /// rank-0 matroids.
    pub certificate: Option<PackingCertificate>,
    /// Set for rank-0 matroids, where b is defined as 0.
    pub degenerate: bool,
}

/// Result of [`pack_into_independent`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cover {
    /// Nonempty, pairwise disjoint independent sets whose union is the input.
    Parts(Vec<FaceSet>),
    /// `A'` with `m·rank(A') < |A'|`.
    Certificate(FaceSet),
}

struct Partitioner<'a> {
    matroid: &'a Matroid,
    parts: Vec<Vec<Element>>,
    owner: Vec<Option<usize>>,
    /// Elements that may be placed.
    universe: Vec<bool>,
}

enum Search {
    Augmented,
    Stuck,
}

impl<'a> Partitioner<'a> {
    fn new(matroid: &'a Matroid, parts: usize, universe: &FaceSet) -> Self {
        let n = matroid.ground_size();
        let mut allowed = vec![false; n];
        for e in universe.iter() {
            allowed[e] = true;
        }
        Partitioner {
            matroid,
            parts: vec![Vec::new(); parts],
            owner: vec![None; n],
            universe: allowed,
        }
    }

    fn from_packing(matroid: &'a Matroid, bases: &[FaceSet], parts: usize) -> Self {
        let mut p = Partitioner::new(matroid, parts, &matroid.ground());
        for (j, base) in bases.iter().enumerate() {
            for e in base.iter() {
                p.owner[e] = Some(j);
            }
            p.parts[j] = base.as_slice().to_vec();
        }
        p
    }

    fn indep_with(&self, part: usize, add: Element, drop: Option<Element>) -> bool {
        let mut set: Vec<Element> = self.parts[part]
            .iter()
            .copied()
            .filter(|&e| Some(e) != drop)
            .collect();
        let pos = set.partition_point(|&e| e < add);
        set.insert(pos, add);
        self.matroid.independent_slice(&set)
    }

    /// BFS from `sources`. Returns the path and sink part on success, or
    /// the visited set when no sink is reachable.
    fn bfs(&self, sources: &[Element]) -> std::result::Result<(Vec<Element>, usize), Vec<bool>> {
        let n = self.matroid.ground_size();
        let mut pred: Vec<Option<Element>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for &s in sources {
            seen[s] = true;
            queue.push_back(s);
        }
        while let Some(y) = queue.pop_front() {
            for j in 0..self.parts.len() {
                if self.owner[y] == Some(j) {
                    continue;
                }
                if self.indep_with(j, y, None) {
                    let mut path = vec![y];
                    let mut cur = y;
                    while let Some(p) = pred[cur] {
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    return Ok((path, j));
                }
                for &z in &self.parts[j] {
                    if !seen[z] && self.indep_with(j, y, Some(z)) {
                        seen[z] = true;
                        pred[z] = Some(y);
                        queue.push_back(z);
                    }
                }
            }
        }
        Err(seen)
    }

    fn apply(&mut self, path: &[Element], sink: usize) {
        let old_owner: Vec<Option<usize>> = path.iter().map(|&e| self.owner[e]).collect();
        for i in 0..path.len() - 1 {
            let (enter, leave) = (path[i], path[i + 1]);
            let part = old_owner[i + 1].expect("interior path nodes are assigned");
            let list = &mut self.parts[part];
            list.retain(|&e| e != leave);
            let pos = list.partition_point(|&e| e < enter);
            list.insert(pos, enter);
            self.owner[enter] = Some(part);
        }
        let last = *path.last().expect("path is nonempty");
        let list = &mut self.parts[sink];
        let pos = list.partition_point(|&e| e < last);
        list.insert(pos, last);
        self.owner[last] = Some(sink);
    }

    fn try_insert(&mut self, x: Element) -> Search {
        match self.bfs(&[x]) {
            Ok((path, sink)) => {
                self.apply(&path, sink);
                Search::Augmented
            }
            Err(_) => Search::Stuck,
        }
    }

    /// Tries every unassigned universe element once, in id order.
    fn saturate(&mut self) {
        for x in 0..self.owner.len() {
            if self.universe[x] && self.owner[x].is_none() {
                self.try_insert(x);
            }
        }
    }

    fn unassigned(&self) -> Vec<Element> {
        (0..self.owner.len())
            .filter(|&x| self.universe[x] && self.owner[x].is_none())
            .collect()
    }

    /// Elements reachable from the unassigned ones once no augmenting path
    /// remains.
    fn reachable_cut(&self) -> FaceSet {
        let sources = self.unassigned();
        if sources.is_empty() {
            return FaceSet::empty();
        }
        match self.bfs(&sources) {
            Ok(_) => unreachable!("saturated partition admits no augmenting path"),
            Err(seen) => (0..seen.len()).filter(|&e| seen[e]).collect(),
        }
    }

    fn assigned(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    fn part_sets(&self) -> Vec<FaceSet> {
        self.parts
            .iter()
            .map(|p| FaceSet::from_sorted(p.clone()).expect("parts are kept sorted"))
            .collect()
    }
}

/// Either `k` pairwise disjoint bases or a certificate that none exist.
pub fn pack_k_bases(m: &Matroid, k: usize) -> Result<PackOutcome> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let mut p = Partitioner::new(m, k, &m.ground());
    Ok(finish_bases(m, &mut p, k))
}

fn finish_bases(m: &Matroid, p: &mut Partitioner<'_>, k: usize) -> PackOutcome {
    p.saturate();
    let rank = m.full_rank();
    if p.assigned() == k * rank {
        PackOutcome::Packed(BasePacking {
            bases: p.part_sets(),
        })
    } else {
        let cert = PackingCertificate {
            witness: p.reachable_cut(),
            target: k,
        };
        debug_assert!(cert.holds(m));
        PackOutcome::Certificate(cert)
    }
}

/// The maximum number `b` of pairwise disjoint bases, a packing attaining
/// it and a certificate that `b + 1` is impossible.
///
/// `k` is increased one at a time and each round starts from the previous
/// packing plus an empty part.
pub fn max_disjoint_bases(m: &Matroid) -> MaxPacking {
    if m.full_rank() == 0 {
        return MaxPacking {
            b: 0,
            packing: BasePacking { bases: Vec::new() },
            certificate: None,
            degenerate: true,
        };
    }
    let mut best: Vec<FaceSet> = Vec::new();
    let mut k = 1;
    loop {
        let mut p = Partitioner::from_packing(m, &best, k);
        match finish_bases(m, &mut p, k) {
            PackOutcome::Packed(packing) => {
                best = packing.bases;
                k += 1;
            }
            PackOutcome::Certificate(cert) => {
                return MaxPacking {
                    b: k - 1,
                    packing: BasePacking { bases: best },
                    certificate: Some(cert),
                    degenerate: false,
                };
            }
        }
    }
}

/// Splits `a` into at most `parts` independent sets, or returns a subset
/// `A'` of `a` with `parts·rank(A') < |A'|`.
pub fn pack_into_independent(m: &Matroid, a: &FaceSet, parts: usize) -> Result<Cover> {
    if parts == 0 {
        return Err(Error::input("number of parts must be positive"));
    }
    if a.max_element().is_some_and(|e| e >= m.ground_size()) {
        return Err(Error::input(format!("set {a:?} leaves the ground set")));
    }
    let mut p = Partitioner::new(m, parts, a);
    p.saturate();
    if p.assigned() == a.len() {
        Ok(Cover::Parts(
            p.part_sets().into_iter().filter(|s| !s.is_empty()).collect(),
        ))
    } else {
        let cert = p.reachable_cut();
        debug_assert!(parts * m.rank_slice(cert.as_slice()) < cert.len());
        Ok(Cover::Certificate(cert))
    }
}

/// Splits `0..b` into `k` contiguous blocks whose sizes differ by at most
/// one, larger blocks first.
pub fn partition_almost_equal(b: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let (q, r) = (b / k, b % k);
    let mut next = 0;
    Ok((0..k)
        .map(|i| {
            let size = q + usize::from(i < r);
            let block = (next..next + size).collect();
            next += size;
            block
        })
        .collect())
}
