//! Tverberg witnesses for affine maps of matroid complexes.
//!
//! An affine map on the independence complex is fixed by the images of the
//! non-loop elements, given here as exact rational points. A witness is a
//! tuple of pairwise disjoint nonempty independent sets together with a
//! common point and the convex coefficients expressing it in each set.
//! Only affine maps are representable; they are special continuous maps,
//! so any affine instance is a valid (weaker) test of a bound stated for
//! continuous maps.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::lp::feasible_point;
use crate::matroid::{Element, FaceSet, Matroid};
use crate::packing::max_disjoint_bases;
use crate::scalar::{is_prime, OrderedField};

/// Exact rational scalar used for point coordinates.
pub type Rational = BigRational;

/// Number of first-face branches searched per parallel batch. Fixed so that
/// results and counters do not depend on the thread count.
const BRANCH_BATCH: usize = 16;

fn rational_strings<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

fn nested_rational_strings<S: Serializer>(
    v: &[Vec<Rational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        v.iter()
            .map(|row| row.iter().map(|q| q.to_string()).collect::<Vec<_>>()),
    )
}

/// Images of ground elements in `R^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    dim: usize,
    coords: Vec<Option<Vec<Rational>>>,
}

impl PointConfig {
    pub fn new(dim: usize, coords: Vec<Option<Vec<Rational>>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::input("point dimension must be at least 1"));
        }
        if let Some(i) = coords
            .iter()
            .position(|c| c.as_ref().is_some_and(|v| v.len() != dim))
        {
            return Err(Error::input(format!("point {i} does not have {dim} coordinates")));
        }
        Ok(PointConfig { dim, coords })
    }

    /// Every element gets a point.
    pub fn from_points(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        PointConfig::new(dim, points.into_iter().map(Some).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, e: Element) -> Option<&[Rational]> {
        self.coords.get(e).and_then(|c| c.as_deref())
    }

    /// Parses the `.pts` format: optional `format-version=1`, then `d=<dim>`,
    /// then `id: r₁ … r_d` lines with rationals written `p/q` or as integers.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .peekable();
        if let Some(&first) = lines.peek() {
            if let Some(v) = first.strip_prefix("format-version=") {
                if v.trim() != "1" {
                    return Err(Error::input(format!("unsupported point format version {v}")));
                }
                lines.next();
            }
        }
        let header = lines
            .next()
            .ok_or_else(|| Error::input("missing d=<dim> header"))?;
        let dim: usize = header
            .strip_prefix("d=")
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| Error::input(format!("bad header {header:?}, expected d=<dim>")))?;
        let mut coords: Vec<Option<Vec<Rational>>> = Vec::new();
        for line in lines {
            let (id, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::input(format!("bad point line {line:?}")))?;
            let id: usize = id
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("bad element id in {line:?}")))?;
            let values = rest
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            if values.len() != dim {
                return Err(Error::input(format!(
                    "element {id} has {} coordinates, expected {dim}",
                    values.len()
                )));
            }
            if id >= coords.len() {
                coords.resize(id + 1, None);
            }
            if coords[id].replace(values).is_some() {
                return Err(Error::input(format!("element {id} listed twice")));
            }
        }
        PointConfig::new(dim, coords)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("format-version=1\nd={}\n", self.dim);
        for (i, c) in self.coords.iter().enumerate() {
            if let Some(v) = c {
                let vals: Vec<String> = v.iter().map(|q| q.to_string()).collect();
                let _ = writeln!(out, "{i}: {}", vals.join(" "));
            }
        }
        out
    }

    /// Seeded random configuration: `n` points with coordinates `p/q`,
    /// `|p| ≤ 64`, `1 ≤ q ≤ 8`.
    pub fn random(n: usize, dim: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = (0..n)
            .map(|_| {
                (0..dim)
                    .map(|_| {
                        let num: i64 = rng.gen_range(-64..=64);
                        let den: i64 = rng.gen_range(1..=8);
                        Rational::new(num.into(), den.into())
                    })
                    .collect()
            })
            .collect();
        PointConfig::from_points(dim, points)
    }
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::input(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s.trim()).map_err(|_| bad())?,
        )),
    }
}

/// A common point of several convex hulls with its convex coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct HullIntersection<F> {
    pub point: Vec<F>,
    /// `coefficients[i][j]` weighs the `j`-th point of set `i`.
    pub coefficients: Vec<Vec<F>>,
}

/// Decides whether the convex hulls of the given point sets share a point,
/// by exact linear feasibility over the convex coefficients.
pub fn hulls_intersect<F: OrderedField>(sets: &[Vec<Vec<F>>]) -> Result<Option<HullIntersection<F>>> {
    let Some(first) = sets.first() else {
        return Err(Error::input("need at least one point set"));
    };
    let Some(dim) = first.first().map(Vec::len) else {
        return Err(Error::input("point sets must be nonempty"));
    };
    for s in sets {
        if s.is_empty() {
            return Err(Error::input("point sets must be nonempty"));
        }
        if s.iter().any(|p| p.len() != dim) {
            return Err(Error::input("points must share one dimension"));
        }
    }
    let offsets: Vec<usize> = sets
        .iter()
        .scan(0, |acc, s| {
            let start = *acc;
            *acc += s.len();
            Some(start)
        })
        .collect();
    let nvars: usize = sets.iter().map(Vec::len).sum();
    let mut a: Vec<Vec<F>> = Vec::new();
    let mut b: Vec<F> = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let mut row = vec![F::zero(); nvars];
        for j in 0..s.len() {
            row[offsets[i] + j] = F::one();
        }
        a.push(row);
        b.push(F::one());
    }
    for (i, s) in sets.iter().enumerate().skip(1) {
        for c in 0..dim {
            let mut row = vec![F::zero(); nvars];
            for (j, p) in first.iter().enumerate() {
                row[j] = p[c].clone();
            }
            for (j, p) in s.iter().enumerate() {
                row[offsets[i] + j] = -p[c].clone();
            }
            a.push(row);
            b.push(F::zero());
        }
    }
    let Some(sol) = feasible_point(&a, &b) else {
        return Ok(None);
    };
    let coefficients: Vec<Vec<F>> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| sol.x[offsets[i]..offsets[i] + s.len()].to_vec())
        .collect();
    let point = (0..dim)
        .map(|c| {
            first
                .iter()
                .zip(&coefficients[0])
                .fold(F::zero(), |acc, (p, l)| acc + p[c].clone() * l.clone())
        })
        .collect();
    Ok(Some(HullIntersection {
        point,
        coefficients,
    }))
}

/// Disjoint independent sets whose images share `point`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct TverbergWitness {
    pub faces: Vec<FaceSet>,
    #[serde(serialize_with = "rational_strings")]
    pub point: Vec<Rational>,
    /// One coefficient per vertex of each face, in face order.
    #[serde(serialize_with = "nested_rational_strings")]
    pub coefficients: Vec<Vec<Rational>>,
}

impl TverbergWitness {
    /// Re-checks every witness invariant exactly.
    pub fn validate(&self, m: &Matroid, cfg: &PointConfig) -> std::result::Result<(), String> {
        if self.faces.len() != self.coefficients.len() {
            return Err("one coefficient list per face required".into());
        }
        if self.point.len() != cfg.dim() {
            return Err("common point has the wrong dimension".into());
        }
        for (i, face) in self.faces.iter().enumerate() {
            if face.is_empty() {
                return Err(format!("face {i} is empty"));
            }
            if face.max_element().is_some_and(|e| e >= m.ground_size())
                || !m.independent_slice(face.as_slice())
            {
                return Err(format!("face {face:?} is not independent"));
            }
            for other in &self.faces[i + 1..] {
                if !face.is_disjoint(other) {
                    return Err(format!("faces {face:?} and {other:?} intersect"));
                }
            }
            let lambda = &self.coefficients[i];
            if lambda.len() != face.len() {
                return Err(format!("face {i} has {} coefficients", lambda.len()));
            }
            if lambda.iter().any(|l| l.is_negative()) {
                return Err(format!("face {i} has a negative coefficient"));
            }
            if lambda.iter().fold(Rational::zero(), |a, l| a + l) != Rational::one() {
                return Err(format!("coefficients of face {i} do not sum to 1"));
            }
            for c in 0..cfg.dim() {
                let mut acc = Rational::zero();
                for (e, l) in face.iter().zip(lambda) {
                    let p = cfg
                        .point(e)
                        .ok_or_else(|| format!("element {e} has no point"))?;
                    acc += &p[c] * l;
                }
                if acc != self.point[c] {
                    return Err(format!("face {i} misses the common point in coordinate {c}"));
                }
            }
        }
        Ok(())
    }

    /// The witness for the first `t` faces.
    pub fn restrict(&self, t: usize) -> TverbergWitness {
        TverbergWitness {
            faces: self.faces[..t].to_vec(),
            point: self.point.clone(),
            coefficients: self.coefficients[..t].to_vec(),
        }
    }
}

/// Result of [`find_tverberg`].
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct TverbergSearch {
    pub witness: Option<TverbergWitness>,
    /// Candidate tuples (including pruned prefixes) whose hulls were tested.
    /// On exhaustion this certifies the search covered everything.
    pub examined: u64,
    /// Set when the matroid rank differs from `d + 1`.
    pub warning: Option<String>,
}

fn check_config(m: &Matroid, cfg: &PointConfig) -> Result<()> {
    if let Some(e) = m.non_loops().iter().find(|&e| cfg.point(e).is_none()) {
        return Err(Error::input(format!("element {e} has no point")));
    }
    Ok(())
}

struct Search<'a> {
    faces: Vec<FaceSet>,
    points: Vec<Vec<Vec<Rational>>>,
    t: usize,
    limits: &'a Limits,
}

enum Branch {
    Found(TverbergWitness, u64),
    Exhausted(u64),
    OverBudget(u64),
}

impl Search<'_> {
    fn hull_check(&self, chosen: &[usize]) -> Option<HullIntersection<Rational>> {
        let sets: Vec<Vec<Vec<Rational>>> = chosen.iter().map(|&i| self.points[i].clone()).collect();
        hulls_intersect(&sets).expect("point sets are validated")
    }

    fn branch(&self, first: usize, budget: u64) -> Result<Branch> {
        let mut chosen = vec![first];
        let mut examined = 0u64;
        if self.t == 1 {
            let h = self.hull_check(&chosen).expect("a single hull is nonempty");
            return Ok(Branch::Found(self.witness(&chosen, h), 1));
        }
        match self.dfs(&mut chosen, budget, &mut examined)? {
            Some(w) => Ok(Branch::Found(w, examined)),
            None if examined > budget => Ok(Branch::OverBudget(examined)),
            None => Ok(Branch::Exhausted(examined)),
        }
    }

    fn dfs(
        &self,
        chosen: &mut Vec<usize>,
        budget: u64,
        examined: &mut u64,
    ) -> Result<Option<TverbergWitness>> {
        let last = *chosen.last().expect("nonempty prefix");
        for next in last + 1..self.faces.len() {
            let disjoint = chosen.iter().all(|&c| self.faces[c].is_disjoint(&self.faces[next]));
            if !disjoint {
                continue;
            }
            *examined += 1;
            if *examined > budget {
                return Ok(None);
            }
            if (*examined).is_multiple_of(4096) {
                self.limits.check_time(*examined)?;
            }
            chosen.push(next);
            if let Some(h) = self.hull_check(chosen) {
                if chosen.len() == self.t {
                    return Ok(Some(self.witness(chosen, h)));
                }
                if let Some(w) = self.dfs(chosen, budget, examined)? {
                    return Ok(Some(w));
                }
                if *examined > budget {
                    return Ok(None);
                }
            }
            chosen.pop();
        }
        Ok(None)
    }

    fn witness(&self, chosen: &[usize], h: HullIntersection<Rational>) -> TverbergWitness {
        TverbergWitness {
            faces: chosen.iter().map(|&i| self.faces[i].clone()).collect(),
            point: h.point,
            coefficients: h.coefficients,
        }
    }
}

/// Searches unordered `t`-tuples of pairwise disjoint nonempty independent
/// sets (each of size at most `d + 1`) in lexicographic order and returns
/// the first whose images have intersecting convex hulls.
///
/// Prefixes whose hulls already miss each other are pruned, which does not
/// change which tuple comes first. `None` is returned only after the
/// whole space has been covered.
pub fn find_tverberg(m: &Matroid, cfg: &PointConfig, t: usize, limits: &Limits) -> Result<TverbergSearch> {
    if t == 0 {
        return Err(Error::input("t must be positive"));
    }
    check_config(m, cfg)?;
    let rank = m.full_rank();
    let warning = (rank != cfg.dim() + 1).then(|| {
        format!("matroid rank {rank} differs from d + 1 = {}", cfg.dim() + 1)
    });
    let faces: Vec<FaceSet> = m
        .independent_sets(cfg.dim() + 1)
        .into_iter()
        .filter(|f| !f.is_empty())
        .collect();
    let points = faces
        .iter()
        .map(|f| {
            f.iter()
                .map(|e| cfg.point(e).expect("checked above").to_vec())
                .collect()
        })
        .collect();
    let search = Search {
        faces,
        points,
        t,
        limits,
    };

    let mut examined = 0u64;
    let firsts: Vec<usize> = (0..search.faces.len()).collect();
    for batch in firsts.chunks(BRANCH_BATCH) {
        limits.check_time(examined)?;
        let budget = limits.max_tuples.saturating_sub(examined);
        let results = batch
            .par_iter()
            .map(|&i| search.branch(i, budget))
            .collect::<Result<Vec<_>>>()?;
        for r in results {
            match r {
                Branch::Found(w, n) => {
                    return Ok(TverbergSearch {
                        witness: Some(w),
                        examined: examined + n,
                        warning,
                    })
                }
                Branch::Exhausted(n) => examined += n,
                Branch::OverBudget(n) => examined += n,
            }
            if examined > limits.max_tuples {
                return Err(Error::ResourceLimit {
                    what: format!("more than {} tuples examined", limits.max_tuples),
                    progress: limits.max_tuples,
                });
            }
        }
    }
    Ok(TverbergSearch {
        witness: None,
        examined,
        warning,
    })
}

/// Largest prime `p` with `√b/4 ≤ p ≤ √b/2`, compared exactly as
/// `16p² ≥ b` and `4p² ≤ b`.
pub fn choose_prime(b: u64) -> Option<u64> {
    let b = b as u128;
    let mut p = 0u128;
    while 4 * (p + 1) * (p + 1) <= b {
        p += 1;
    }
    while p >= 2 && 16 * p * p >= b {
        if is_prime(p as u64) {
            return Some(p as u64);
        }
        p -= 1;
    }
    None
}

/// Exact comparison behind the prime choice:
/// `b(d+1)/(⌈b/p⌉+1) − 2` against `(d+1)(p−1) − 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct InequalityCheck {
    #[serde(serialize_with = "rational_string")]
    pub lhs: Rational,
    pub rhs: i64,
    pub holds: bool,
}

fn rational_string<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn dold_inequality(b: u64, d: u64, p: u64) -> Result<InequalityCheck> {
    if b == 0 || d == 0 {
        return Err(Error::input("b and d must be positive"));
    }
    if !is_prime(p) {
        return Err(Error::input(format!("{p} is not prime")));
    }
    let q = b.div_ceil(p) + 1;
    let lhs = Rational::new(BigInt::from(b) * BigInt::from(d + 1), BigInt::from(q))
        - Rational::from_integer(2.into());
    let rhs = ((d + 1) * (p - 1)) as i64 - 1;
    let holds = lhs >= Rational::from_integer(rhs.into());
    Ok(InequalityCheck { lhs, rhs, holds })
}

pub fn dold_inequality_holds(b: u64, d: u64, p: u64) -> Result<bool> {
    dold_inequality(b, d, p).map(|c| c.holds)
}

/// Smallest integer `t` with `t ≥ √b / 4`, i.e. `16t² ≥ b`.
pub fn target_t(b: u64) -> u64 {
    let b = b as u128;
    let mut t = 0u128;
    while 16 * t * t < b {
        t += 1;
    }
    t as u64
}

/// End-to-end check of the lower bound `√b(M)/4` on one affine map.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct TheoremReport {
    pub b: usize,
    pub rank: usize,
    pub dimension: usize,
    pub target_t: u64,
    pub prime: Option<u64>,
    pub inequality: Option<InequalityCheck>,
    pub witness: Option<TverbergWitness>,
    pub examined: u64,
    /// No witness at `target_t` after exhaustive search.
    pub falsification_candidate: bool,
    pub scope: &'static str,
}

pub const AFFINE_SCOPE: &str =
    "affine maps only: each instance tests the continuous-map bound on one special map";

/// Computes `b(M)`, the target `t* = ⌈√b/4⌉`, the prime sub-report and
/// searches for a witness at `t*`. Requires `rank(M) = d + 1`.
pub fn verify_theorem(m: &Matroid, cfg: &PointConfig, limits: &Limits) -> Result<TheoremReport> {
    let rank = m.full_rank();
    if rank != cfg.dim() + 1 {
        return Err(Error::precondition(format!(
            "matroid rank {rank} must equal d + 1 = {}",
            cfg.dim() + 1
        )));
    }
    let b = max_disjoint_bases(m).b;
    let prime = choose_prime(b as u64);
    let inequality = prime
        .map(|p| dold_inequality(b as u64, cfg.dim() as u64, p))
        .transpose()?;
    let t = target_t(b as u64).max(1);
    let search = find_tverberg(m, cfg, t as usize, limits)?;
    Ok(TheoremReport {
        b,
        rank,
        dimension: cfg.dim(),
        target_t: t,
        prime,
        inequality,
        falsification_candidate: search.witness.is_none(),
        witness: search.witness,
        examined: search.examined,
        scope: AFFINE_SCOPE,
    })
}

/// Result of [`max_affine_t`].
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct MaxAffine {
    pub t: usize,
    pub witness: Option<TverbergWitness>,
    /// Exhaustion counts of the failed searches above `t`, highest first.
    pub exhausted: Vec<(usize, u64)>,
}

/// Largest `t ≤ cap` admitting a witness for this configuration, searched
/// downwards. Every returned witness is re-validated, together with its
/// restrictions to fewer faces.
pub fn max_affine_t(m: &Matroid, cfg: &PointConfig, cap: usize, limits: &Limits) -> Result<MaxAffine> {
    let mut exhausted = Vec::new();
    for t in (1..=cap).rev() {
        let search = find_tverberg(m, cfg, t, limits)?;
        match search.witness {
            Some(w) => {
                for s in 1..=t {
                    w.restrict(s).validate(m, cfg).map_err(|e| {
                        Error::Precondition(format!("witness restriction to {s} faces invalid: {e}"))
                    })?;
                }
                return Ok(MaxAffine {
                    t,
                    witness: Some(w),
                    exhausted,
                });
            }
            None => exhausted.push((t, search.examined)),
        }
    }
    Ok(MaxAffine {
        t: 0,
        witness: None,
        exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qq(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn line(xs: &[i64]) -> PointConfig {
        PointConfig::from_points(1, xs.iter().map(|&x| vec![q(x)]).collect()).unwrap()
    }

    #[test]
    fn overlapping_segments() {
        let sets = vec![vec![vec![q(0)], vec![q(2)]], vec![vec![q(1)], vec![q(3)]]];
        let h = hulls_intersect(&sets).unwrap().unwrap();
        assert!(h.point[0] >= q(1) && h.point[0] <= q(2));
        let disjoint = vec![vec![vec![q(0)], vec![q(1)]], vec![vec![q(2)], vec![q(3)]]];
        assert!(hulls_intersect(&disjoint).unwrap().is_none());
    }

    #[test]
    fn triangle_contains_point() {
        let tri = vec![vec![q(0), q(0)], vec![q(2), q(0)], vec![q(1), q(2)]];
        let inner = vec![vec![q(1), qq(1, 2)]];
        let h = hulls_intersect(&[tri, inner]).unwrap().unwrap();
        // 1/2 = 2·λ₂ → λ₂ = 1/4; x: 2λ₁ + λ₂ = 1 → λ₁ = 3/8; λ₀ = 3/8
        assert_eq!(h.coefficients[0], vec![qq(3, 8), qq(3, 8), qq(1, 4)]);
        assert_eq!(h.point, vec![q(1), qq(1, 2)]);
    }

    #[test]
    fn dimension_mismatch() {
        let sets = vec![vec![vec![q(0)]], vec![vec![q(0), q(1)]]];
        assert!(matches!(hulls_intersect(&sets), Err(Error::Input(_))));
    }

    #[test]
    fn distinct_points_rank_one() {
        let m = Matroid::uniform(1, 3).unwrap();
        let r = find_tverberg(&m, &line(&[0, 1, 2]), 2, &Limits::default()).unwrap();
        assert!(r.witness.is_none());
        assert_eq!(r.examined, 3);
    }

    #[test]
    fn nested_segments() {
        let m = Matroid::uniform(2, 4).unwrap();
        let cfg = line(&[0, 1, 2, 3]);
        let r = find_tverberg(&m, &cfg, 2, &Limits::default()).unwrap();
        let w = r.witness.unwrap();
        w.validate(&m, &cfg).unwrap();
        assert!(r.warning.is_none());
    }

    #[test]
    fn radon_in_the_plane() {
        let m = Matroid::uniform(3, 4).unwrap();
        let cfg = PointConfig::from_points(
            2,
            vec![vec![q(0), q(0)], vec![q(4), q(0)], vec![q(0), q(4)], vec![q(1), q(1)]],
        )
        .unwrap();
        let w = find_tverberg(&m, &cfg, 2, &Limits::default()).unwrap().witness.unwrap();
        w.validate(&m, &cfg).unwrap();
    }

    #[test]
    fn primes() {
        assert_eq!(choose_prime(64), Some(3));
        assert_eq!(choose_prime(16), Some(2));
        assert_eq!(choose_prime(4), None);
        assert_eq!(choose_prime(15), None);
    }

    #[test]
    fn inequality_examples() {
        let c = dold_inequality(64, 1, 3).unwrap();
        assert_eq!(c.lhs, qq(82, 23));
        assert!(c.holds);
        assert_eq!(dold_inequality(64, 1, 2).unwrap().lhs, qq(62, 33));
        assert_eq!(dold_inequality(16, 1, 2).unwrap().lhs, qq(14, 9));
        assert!(dold_inequality_holds(16, 1, 2).unwrap());
        assert!(dold_inequality(16, 1, 4).is_err());
    }

    #[test]
    fn targets() {
        assert_eq!(target_t(16), 1);
        assert_eq!(target_t(17), 2);
        assert_eq!(target_t(64), 2);
        assert_eq!(target_t(65), 3);
        assert_eq!(target_t(4), 1);
    }

    #[test]
    fn max_t_examples() {
        let lim = Limits::default();
        let m = Matroid::uniform(2, 4).unwrap();
        assert_eq!(max_affine_t(&m, &line(&[0, 1, 2, 3]), 4, &lim).unwrap().t, 2);
        let m = Matroid::uniform(3, 3).unwrap();
        let cfg = PointConfig::from_points(
            2,
            vec![vec![q(0), q(0)], vec![q(1), q(0)], vec![q(0), q(1)]],
        )
        .unwrap();
        assert_eq!(max_affine_t(&m, &cfg, 3, &lim).unwrap().t, 1);
        let m = Matroid::uniform(2, 5).unwrap();
        assert!(max_affine_t(&m, &line(&[0, 1, 2, 3, 4]), 3, &lim).unwrap().t >= 3);
    }

    #[test]
    fn theorem_small() {
        let m = Matroid::uniform(2, 32).unwrap();
        let cfg = PointConfig::random(32, 1, 7).unwrap();
        let r = verify_theorem(&m, &cfg, &Limits::default()).unwrap();
        assert_eq!((r.b, r.target_t, r.prime), (16, 1, Some(2)));
        assert!(r.inequality.as_ref().unwrap().holds);
        r.witness.unwrap().validate(&m, &cfg).unwrap();

        let y = crate::complex::colourful_complex(4, 1).unwrap();
        let cfg = PointConfig::random(8, 1, 3).unwrap();
        let r = verify_theorem(&y, &cfg, &Limits::default()).unwrap();
        assert_eq!((r.b, r.target_t), (4, 1));
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        let m = Matroid::uniform(3, 5).unwrap();
        let err = verify_theorem(&m, &line(&[0, 1, 2, 3, 4]), &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn points_text() {
        let text = "d=2\n0: 1/2 3\n2: -4 0/5\n";
        let cfg = PointConfig::parse(text).unwrap();
        assert_eq!(cfg.point(0).unwrap(), &[qq(1, 2), q(3)]);
        assert!(cfg.point(1).is_none());
        assert_eq!(PointConfig::parse(&cfg.to_text()).unwrap(), cfg);
        assert!(PointConfig::parse("d=1\n0: 1/0\n").is_err());
        assert!(PointConfig::parse("d=2\n0: 1\n").is_err());
        assert!(PointConfig::parse("0: 1\n").is_err());
    }

    #[test]
    fn missing_points_are_input_errors() {
        let m = Matroid::uniform(2, 4).unwrap();
        let cfg = line(&[0, 1]);
        assert!(matches!(
            find_tverberg(&m, &cfg, 2, &Limits::default()),
            Err(Error::Input(_))
        ));
    }
}
