//! Matroids as rank/independence oracles over a dense ground set `0..n`.
//!
//! Loops are first-class. Restriction and contraction keep the original
//! index space and turn removed elements into loops, so minors of a
//! matroid can be joined with each other without relabelling.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{integer_rank, modular_rank};
use crate::scalar::Modulus;

/// Index of a ground-set element.
pub type Element = usize;

/// A finite set of elements stored as a strictly increasing list.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FaceSet(Vec<Element>);

impl FaceSet {
    /// Builds a set from arbitrary ids, sorting and removing duplicates.
    pub fn new(ids: impl IntoIterator<Item = Element>) -> Self {
        let mut v: Vec<Element> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        FaceSet(v)
    }

    /// Wraps an already sorted list; rejects anything not strictly increasing.
    pub fn from_sorted(ids: Vec<Element>) -> Result<Self> {
        if ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input(format!("face {ids:?} is not strictly increasing")));
        }
        Ok(FaceSet(ids))
    }

    pub fn empty() -> Self {
        FaceSet(Vec::new())
    }

    pub fn range(n: usize) -> Self {
        FaceSet((0..n).collect())
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Element> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &FaceSet) -> FaceSet {
        FaceSet::new(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &FaceSet) -> FaceSet {
        FaceSet(self.iter().filter(|&e| !other.contains(e)).collect())
    }

    pub fn intersection(&self, other: &FaceSet) -> FaceSet {
        FaceSet(self.iter().filter(|&e| other.contains(e)).collect())
    }

    pub fn is_disjoint(&self, other: &FaceSet) -> bool {
        self.iter().all(|e| !other.contains(e))
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    pub fn with(&self, e: Element) -> FaceSet {
        FaceSet::new(self.iter().chain(std::iter::once(e)))
    }

    pub fn without(&self, e: Element) -> FaceSet {
        FaceSet(self.iter().filter(|&x| x != e).collect())
    }

    pub fn max_element(&self) -> Option<Element> {
        self.0.last().copied()
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Element> for FaceSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        FaceSet::new(iter)
    }
}

/// Coefficient field of a linear matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearField {
    Rational,
    Prime(u64),
}

/// User-facing description of a matroid.
#[derive(Clone, Debug, PartialEq)]
pub enum MatroidSpec {
    /// Every set of at most `rank` of the `n` elements is independent.
    Uniform { rank: usize, n: usize },
    /// Cycle matroid of a multigraph; element `i` is `edges[i]`. Self-loops
    /// are matroid loops.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    /// Column matroid of a `rows x columns.len()` matrix.
    Linear {
        field: LinearField,
        rows: usize,
        columns: Vec<Vec<BigRational>>,
    },
    /// At most `capacities[i]` elements from `blocks[i]`. Elements outside
    /// every block are loops.
    Partition {
        n: usize,
        blocks: Vec<Vec<Element>>,
        capacities: Vec<usize>,
    },
    /// Down-closure of the listed sets.
    Explicit { n: usize, maximal: Vec<FaceSet> },
}

impl MatroidSpec {
    pub fn ground_size(&self) -> usize {
        match self {
            MatroidSpec::Uniform { n, .. } => *n,
            MatroidSpec::Graphic { edges, .. } => edges.len(),
            MatroidSpec::Linear { columns, .. } => columns.len(),
            MatroidSpec::Partition { n, .. } => *n,
            MatroidSpec::Explicit { n, .. } => *n,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MatroidSpec::Uniform { .. } => "uniform",
            MatroidSpec::Graphic { .. } => "graphic",
            MatroidSpec::Linear { .. } => "linear",
            MatroidSpec::Partition { .. } => "partition",
            MatroidSpec::Explicit { .. } => "explicit",
        }
    }
}

#[derive(Debug)]
enum Oracle {
    Uniform {
        rank: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Rational {
        rows: usize,
        columns: Vec<Vec<BigInt>>,
    },
    Prime {
        modulus: Modulus,
        rows: usize,
        columns: Vec<Vec<u64>>,
    },
    Partition {
        block_of: Vec<Option<usize>>,
        capacities: Vec<usize>,
    },
    Explicit {
        maximal: Vec<FaceSet>,
    },
}

impl Oracle {
    fn rank(&self, set: &[Element]) -> usize {
        match self {
            Oracle::Uniform { rank } => set.len().min(*rank),
            Oracle::Graphic { vertices, edges } => {
                let mut parent: Vec<usize> = (0..*vertices).collect();
                fn find(parent: &mut [usize], mut x: usize) -> usize {
                    while parent[x] != x {
                        parent[x] = parent[parent[x]];
                        x = parent[x];
                    }
                    x
                }
                let mut rank = 0;
                for &e in set {
                    let (u, v) = edges[e];
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru != rv {
                        parent[ru] = rv;
                        rank += 1;
                    }
                }
                rank
            }
            Oracle::Rational { rows, columns } => {
                if set.is_empty() || *rows == 0 {
                    return 0;
                }
                let m: Vec<Vec<BigInt>> = (0..*rows)
                    .map(|r| set.iter().map(|&c| columns[c][r].clone()).collect())
                    .collect();
                integer_rank(&m)
            }
            Oracle::Prime {
                modulus,
                rows,
                columns,
            } => {
                if set.is_empty() || *rows == 0 {
                    return 0;
                }
                let m: Vec<Vec<u64>> = (0..*rows)
                    .map(|r| set.iter().map(|&c| columns[c][r]).collect())
                    .collect();
                modular_rank(m, *modulus)
            }
            Oracle::Partition {
                block_of,
                capacities,
            } => {
                let mut counts = vec![0usize; capacities.len()];
                for &e in set {
                    if let Some(b) = block_of[e] {
                        counts[b] += 1;
                    }
                }
                counts
                    .iter()
                    .zip(capacities)
                    .map(|(&c, &cap)| c.min(cap))
                    .sum()
            }
            Oracle::Explicit { maximal } => maximal
                .iter()
                .map(|f| set.iter().filter(|&&e| f.contains(e)).count())
                .max()
                .unwrap_or(0),
        }
    }

    fn independent(&self, set: &[Element]) -> bool {
        match self {
            Oracle::Uniform { rank } => set.len() <= *rank,
            Oracle::Partition {
                block_of,
                capacities,
            } => {
                let mut counts = vec![0usize; capacities.len()];
                for &e in set {
                    match block_of[e] {
                        None => return false,
                        Some(b) => {
                            counts[b] += 1;
                            if counts[b] > capacities[b] {
                                return false;
                            }
                        }
                    }
                }
                true
            }
            Oracle::Explicit { maximal } => maximal
                .iter()
                .any(|f| set.iter().all(|&e| f.contains(e))),
            _ => self.rank(set) == set.len(),
        }
    }
}

/// A matroid on the ground set `0..ground_size()`, possibly a minor of a
/// built-in matroid.
#[derive(Clone, Debug)]
pub struct Matroid {
    spec: Arc<MatroidSpec>,
    oracle: Arc<Oracle>,
    /// Elements turned into loops by restriction or contraction.
    removed: Vec<bool>,
    /// Contracted elements, independent in the underlying matroid.
    contracted: Vec<Element>,
}

impl Matroid {
    pub fn new(spec: MatroidSpec) -> Result<Self> {
        let oracle = build_oracle(&spec)?;
        let n = spec.ground_size();
        Ok(Matroid {
            spec: Arc::new(spec),
            oracle: Arc::new(oracle),
            removed: vec![false; n],
            contracted: Vec::new(),
        })
    }

    pub fn uniform(rank: usize, n: usize) -> Result<Self> {
        Matroid::new(MatroidSpec::Uniform { rank, n })
    }

    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Matroid::new(MatroidSpec::Graphic { vertices, edges })
    }

    /// Cycle matroid of the complete graph on `vertices` vertices, edges in
    /// lexicographic order.
    pub fn complete_graph(vertices: usize) -> Self {
        let edges = (0..vertices)
            .flat_map(|u| (u + 1..vertices).map(move |v| (u, v)))
            .collect();
        Matroid::graphic(vertices, edges).expect("complete graph is well formed")
    }

    pub fn partition(n: usize, blocks: Vec<Vec<Element>>, capacities: Vec<usize>) -> Result<Self> {
        Matroid::new(MatroidSpec::Partition {
            n,
            blocks,
            capacities,
        })
    }

    pub fn linear(field: LinearField, rows: usize, columns: Vec<Vec<BigRational>>) -> Result<Self> {
        Matroid::new(MatroidSpec::Linear {
            field,
            rows,
            columns,
        })
    }

    /// Down-closure of `maximal`. The exchange axiom is not checked here;
    /// see [`validate_matroid`].
    pub fn explicit(n: usize, maximal: Vec<FaceSet>) -> Result<Self> {
        Matroid::new(MatroidSpec::Explicit { n, maximal })
    }

    /// The spec this matroid (or the matroid it is a minor of) was built from.
    pub fn spec(&self) -> &MatroidSpec {
        &self.spec
    }

    /// True if restriction or contraction has been applied.
    pub fn is_minor(&self) -> bool {
        !self.contracted.is_empty() || self.removed.iter().any(|&r| r)
    }

    pub fn ground_size(&self) -> usize {
        self.removed.len()
    }

    pub fn ground(&self) -> FaceSet {
        FaceSet::range(self.ground_size())
    }

    fn check(&self, set: &FaceSet) -> Result<()> {
        match set.max_element() {
            Some(e) if e >= self.ground_size() => Err(Error::input(format!(
                "element {e} out of range for ground set of size {}",
                self.ground_size()
            ))),
            _ => Ok(()),
        }
    }

    pub fn is_independent(&self, set: &FaceSet) -> Result<bool> {
        self.check(set)?;
        Ok(self.independent_slice(set.as_slice()))
    }

    pub fn rank(&self, set: &FaceSet) -> Result<usize> {
        self.check(set)?;
        Ok(self.rank_slice(set.as_slice()))
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        let all: Vec<Element> = (0..self.ground_size()).collect();
        self.rank_slice(&all)
    }

    /// Independence of a strictly increasing, in-range slice.
    pub fn independent_slice(&self, set: &[Element]) -> bool {
        if set.iter().any(|&e| self.removed[e]) {
            return false;
        }
        if self.contracted.is_empty() {
            return self.oracle.independent(set);
        }
        let mut all = self.contracted.clone();
        all.extend_from_slice(set);
        self.oracle.independent(&all)
    }

    /// Rank of a duplicate-free, in-range slice.
    pub fn rank_slice(&self, set: &[Element]) -> usize {
        let mut all = self.contracted.clone();
        all.extend(set.iter().copied().filter(|&e| !self.removed[e]));
        self.oracle.rank(&all) - self.contracted.len()
    }

    pub fn is_loop(&self, e: Element) -> bool {
        !self.independent_slice(&[e])
    }

    pub fn loops(&self) -> FaceSet {
        (0..self.ground_size()).filter(|&e| self.is_loop(e)).collect()
    }

    pub fn non_loops(&self) -> FaceSet {
        (0..self.ground_size()).filter(|&e| !self.is_loop(e)).collect()
    }

    /// Restriction to `keep`, on the original index space: every element
    /// outside `keep` becomes a loop.
    pub fn restrict(&self, keep: &FaceSet) -> Result<Matroid> {
        self.check(keep)?;
        let mut out = self.clone();
        for (e, removed) in out.removed.iter_mut().enumerate() {
            if !keep.contains(e) {
                *removed = true;
            }
        }
        Ok(out)
    }

    /// Contraction by a non-loop `v`; this is the link of `v` in the
    /// independence complex. `v` itself becomes a loop.
    pub fn contract_link(&self, v: Element) -> Result<Matroid> {
        if v >= self.ground_size() {
            return Err(Error::input(format!("element {v} out of range")));
        }
        if self.is_loop(v) {
            return Err(Error::precondition(format!(
                "cannot contract element {v}: it is a loop"
            )));
        }
        let mut out = self.clone();
        out.contracted.push(v);
        out.removed[v] = true;
        Ok(out)
    }

    /// All independent sets with at most `max_size` elements, in
    /// lexicographic order of their sorted element lists (the empty set first).
    pub fn independent_sets(&self, max_size: usize) -> Vec<FaceSet> {
        let n = self.ground_size();
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn dfs(
            m: &Matroid,
            n: usize,
            max_size: usize,
            start: usize,
            stack: &mut Vec<Element>,
            out: &mut Vec<FaceSet>,
        ) {
            out.push(FaceSet(stack.clone()));
            if stack.len() == max_size {
                return;
            }
            for e in start..n {
                stack.push(e);
                if m.independent_slice(stack) {
                    dfs(m, n, max_size, e + 1, stack, out);
                }
                stack.pop();
            }
        }
        dfs(self, n, max_size, 0, &mut stack, &mut out);
        out
    }

    /// Every basis, in lexicographic order.
    pub fn bases(&self) -> Vec<FaceSet> {
        let r = self.full_rank();
        self.independent_sets(r)
            .into_iter()
            .filter(|s| s.len() == r)
            .collect()
    }

    /// Explicit description listing every basis. Exponential; meant for
    /// small ground sets.
    pub fn to_explicit(&self) -> MatroidSpec {
        MatroidSpec::Explicit {
            n: self.ground_size(),
            maximal: self.bases(),
        }
    }

    /// The independence complex, materialized through dimension `max_dim`.
    /// Its vertices are the non-loops.
    pub fn as_complex(&self, max_dim: isize, limits: &Limits) -> Result<SimplicialComplex> {
        as_complex(self, max_dim, limits)
    }
}

/// Independence complex of `m` through dimension `max_dim` (≥ −1).
pub fn as_complex(m: &Matroid, max_dim: isize, limits: &Limits) -> Result<SimplicialComplex> {
    if max_dim < -1 {
        return Err(Error::input("max_dim must be at least -1"));
    }
    let oracle = m.clone();
    let top = m.full_rank() as isize - 1;
    SimplicialComplex::from_oracle(
        m.ground_size(),
        None,
        top,
        move |face: &[u32]| {
            let set: Vec<Element> = face.iter().map(|&v| v as Element).collect();
            oracle.independent_slice(&set)
        },
        max_dim,
        limits,
    )
}

/// Outcome of [`validate_matroid`]. `violation` is a pair `(I, J)` of
/// independent sets with `|I| < |J|` such that no `x ∈ J − I` extends `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct Validation {
    pub valid: bool,
    pub violation: Option<(FaceSet, FaceSet)>,
}

/// Checks the exchange axiom on the down-closure of `maximal`.
///
/// It suffices to test pairs with `|J| = |I| + 1`: a violating pair with a
/// larger `J` restricts to one of these. Pairs are scanned with `I` in
/// (size, lexicographic) order, then `J` likewise, so the witness is
/// deterministic.
pub fn validate_matroid(n: usize, maximal: &[FaceSet]) -> Validation {
    let in_range = maximal
        .iter()
        .all(|f| f.max_element().is_none_or(|e| e < n));
    if !in_range {
        return Validation {
            valid: false,
            violation: None,
        };
    }
    let m = Matroid {
        spec: Arc::new(MatroidSpec::Explicit {
            n,
            maximal: maximal.to_vec(),
        }),
        oracle: Arc::new(Oracle::Explicit {
            maximal: maximal.to_vec(),
        }),
        removed: vec![false; n],
        contracted: Vec::new(),
    };
    let top = maximal.iter().map(FaceSet::len).max().unwrap_or(0);
    let mut by_size: Vec<Vec<FaceSet>> = vec![Vec::new(); top + 1];
    for s in m.independent_sets(top) {
        by_size[s.len()].push(s);
    }
    for size in 0..top {
        for small in &by_size[size] {
            for large in &by_size[size + 1] {
                let extends = large
                    .iter()
                    .filter(|&x| !small.contains(x))
                    .any(|x| m.independent_slice(small.with(x).as_slice()));
                if !extends {
                    return Validation {
                        valid: false,
                        violation: Some((small.clone(), large.clone())),
                    };
                }
            }
        }
    }
    Validation {
        valid: true,
        violation: None,
    }
}

fn build_oracle(spec: &MatroidSpec) -> Result<Oracle> {
    Ok(match spec {
        MatroidSpec::Uniform { rank, n } => {
            if rank > n {
                return Err(Error::input(format!("uniform rank {rank} exceeds n = {n}")));
            }
            Oracle::Uniform { rank: *rank }
        }
        MatroidSpec::Graphic { vertices, edges } => {
            if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= *vertices || v >= *vertices) {
                return Err(Error::input(format!(
                    "edge ({u},{v}) uses a vertex outside 0..{vertices}"
                )));
            }
            Oracle::Graphic {
                vertices: *vertices,
                edges: edges.clone(),
            }
        }
        MatroidSpec::Linear {
            field,
            rows,
            columns,
        } => {
            if let Some(i) = columns.iter().position(|c| c.len() != *rows) {
                return Err(Error::input(format!(
                    "column {i} has {} entries, expected {rows}",
                    columns[i].len()
                )));
            }
            match field {
                LinearField::Rational => Oracle::Rational {
                    rows: *rows,
                    columns: columns.iter().map(|c| clear_denominators(c)).collect(),
                },
                LinearField::Prime(p) => {
                    let modulus = Modulus::new(*p)
                        .ok_or_else(|| Error::input(format!("{p} is not a prime below 2^32")))?;
                    let columns = columns
                        .iter()
                        .map(|c| c.iter().map(|q| reduce_mod(q, modulus)).collect())
                        .collect::<Result<_>>()?;
                    Oracle::Prime {
                        modulus,
                        rows: *rows,
                        columns,
                    }
                }
            }
        }
        MatroidSpec::Partition {
            n,
            blocks,
            capacities,
        } => {
            if blocks.len() != capacities.len() {
                return Err(Error::input("partition needs one capacity per block"));
            }
            let mut block_of = vec![None; *n];
            for (b, block) in blocks.iter().enumerate() {
                for &e in block {
                    if e >= *n {
                        return Err(Error::input(format!("element {e} out of range 0..{n}")));
                    }
                    if block_of[e].replace(b).is_some() {
                        return Err(Error::input(format!("element {e} lies in two blocks")));
                    }
                }
            }
            Oracle::Partition {
                block_of,
                capacities: capacities.clone(),
            }
        }
        MatroidSpec::Explicit { n, maximal } => {
            if let Some(f) = maximal.iter().find(|f| f.max_element().is_some_and(|e| e >= *n)) {
                return Err(Error::input(format!("set {f:?} leaves the ground set 0..{n}")));
            }
            Oracle::Explicit {
                maximal: maximal.clone(),
            }
        }
    })
}

/// Scales a rational column to a primitive integer column; rank is unchanged.
fn clear_denominators(col: &[BigRational]) -> Vec<BigInt> {
    let lcm = col
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    col.iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect()
}

fn reduce_mod(q: &BigRational, modulus: Modulus) -> Result<u64> {
    let p = BigInt::from(modulus.get());
    let den = q.denom().mod_floor(&p);
    if den.is_zero() {
        return Err(Error::input(format!(
            "entry {q} has denominator divisible by {}",
            modulus.get()
        )));
    }
    let num = q.numer().mod_floor(&p);
    let num = u64::try_from(num.abs()).expect("reduced below modulus");
    let den = u64::try_from(den).expect("reduced below modulus");
    Ok(modulus.mul(num, modulus.inverse(den)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> FaceSet {
        FaceSet::new(ids.iter().copied())
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn triangle() -> Matroid {
        Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn independence_examples() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert!(u.is_independent(&set(&[0, 1])).unwrap());
        assert!(!triangle().is_independent(&set(&[0, 1, 2])).unwrap());
        let gf2 = Matroid::linear(
            LinearField::Prime(2),
            2,
            vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)]],
        )
        .unwrap();
        assert!(!gf2.is_independent(&set(&[0, 1, 2])).unwrap());
        assert!(gf2.is_independent(&set(&[0, 2])).unwrap());
    }

    #[test]
    fn out_of_range_is_input_error() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert!(matches!(u.is_independent(&set(&[4])), Err(Error::Input(_))));
        assert!(matches!(u.rank(&set(&[0, 9])), Err(Error::Input(_))));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().full_rank(), 2);
        assert_eq!(Matroid::complete_graph(4).full_rank(), 3);
        let p = Matroid::partition(4, vec![vec![0, 1], vec![2, 3]], vec![1, 1]).unwrap();
        assert_eq!(p.rank(&set(&[0, 1])).unwrap(), 1);
    }

    #[test]
    fn rational_linear_matroid() {
        let half = BigRational::new(1.into(), 2.into());
        let m = Matroid::linear(
            LinearField::Rational,
            2,
            vec![vec![q(1), q(2)], vec![half.clone(), q(1)], vec![q(0), q(0)]],
        )
        .unwrap();
        assert_eq!(m.full_rank(), 1);
        assert!(m.is_loop(2));
        // same columns over GF(3) stay parallel
        let m3 = Matroid::linear(
            LinearField::Prime(3),
            2,
            vec![vec![q(1), q(2)], vec![half, q(1)], vec![q(1), q(0)]],
        )
        .unwrap();
        assert_eq!(m3.full_rank(), 2);
        assert_eq!(m3.rank(&set(&[0, 1])).unwrap(), 1);
    }

    #[test]
    fn restriction() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.restrict(&set(&[0, 1])).unwrap().full_rank(), 2);
        let k4 = Matroid::complete_graph(4);
        // edges 01, 02, 12 form a triangle
        let tri = k4.restrict(&set(&[0, 1, 3])).unwrap();
        assert_eq!(tri.full_rank(), 2);
        assert!(tri.is_loop(2));
        for m in [u, k4] {
            assert_eq!(m.restrict(&FaceSet::empty()).unwrap().full_rank(), 0);
        }
    }

    #[test]
    fn contraction() {
        let u = Matroid::uniform(2, 4).unwrap();
        let c = u.contract_link(0).unwrap();
        assert_eq!(c.full_rank(), 1);
        assert!(c.is_loop(0));
        for e in 1..4 {
            assert!(c.is_independent(&set(&[e])).unwrap());
        }
        assert!(!c.is_independent(&set(&[1, 2])).unwrap());

        let t = triangle().contract_link(0).unwrap();
        assert_eq!(t.rank(&set(&[1, 2])).unwrap(), 1);
        assert!(t.is_independent(&set(&[1])).unwrap());
        assert!(t.is_independent(&set(&[2])).unwrap());
        assert_eq!(t.full_rank(), triangle().full_rank() - 1);
    }

    #[test]
    fn contracting_a_loop_fails() {
        let p = Matroid::partition(3, vec![vec![0, 1]], vec![1]).unwrap();
        assert!(matches!(p.contract_link(2), Err(Error::Precondition(_))));
    }

    #[test]
    fn validation_examples() {
        let u24: Vec<FaceSet> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| set(&[a, b])))
            .collect();
        assert!(validate_matroid(4, &u24).valid);

        let bad = validate_matroid(4, &[set(&[0, 1]), set(&[2])]);
        assert!(!bad.valid);
        assert_eq!(bad.violation, Some((set(&[2]), set(&[0, 1]))));

        assert!(validate_matroid(3, &[FaceSet::empty()]).valid);
    }

    #[test]
    fn complex_examples() {
        let lim = Limits::default();
        let c = Matroid::uniform(1, 3).unwrap().as_complex(0, &lim).unwrap();
        assert_eq!(c.f_vector().counts(), &[1, 3]);
        let c = Matroid::uniform(2, 3).unwrap().as_complex(1, &lim).unwrap();
        assert_eq!(c.f_vector().counts(), &[1, 3, 3]);
        let c = Matroid::complete_graph(4).as_complex(2, &lim).unwrap();
        assert_eq!(c.f_vector().counts(), &[1, 6, 15, 16]);
    }

    #[test]
    fn loops_are_not_vertices() {
        let m = Matroid::graphic(2, vec![(0, 1), (1, 1), (0, 1)]).unwrap();
        assert_eq!(m.loops(), set(&[1]));
        let c = m.as_complex(1, &Limits::default()).unwrap();
        assert_eq!(c.vertices(), &[0, 2]);
        assert_eq!(c.f_vector().counts(), &[1, 2]);
    }
}
