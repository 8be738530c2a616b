//! Simplicial complexes given by a membership oracle and materialized
//! face lists up to a chosen dimension.
//!
//! Vertices are `u32` ids in an index space `0..index_space`. Join-type
//! complexes label vertex `copy·n + e` as element `e` in copy `copy`
//! (zero-based internally). Faces are sorted id lists; every face list is
//! kept in lexicographic order.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::{Element, Matroid};

/// Membership test for a sorted face.
pub type Membership = Arc<dyn Fn(&[u32]) -> bool + Send + Sync>;

/// Vertex `(copy, element)` of a join. `copy` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct LabeledVertex {
    pub copy: usize,
    pub element: Element,
}

/// Encoding of labeled vertices: `k` copies of an `n`-element set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct JoinLabels {
    pub copies: usize,
    pub elements: usize,
}

impl JoinLabels {
    pub fn encode(&self, v: LabeledVertex) -> u32 {
        ((v.copy - 1) * self.elements + v.element) as u32
    }

    pub fn decode(&self, id: u32) -> LabeledVertex {
        let id = id as usize;
        LabeledVertex {
            copy: id / self.elements + 1,
            element: id % self.elements,
        }
    }
}

/// Faces of a single dimension, stored flat with a fixed width.
#[derive(Clone, PartialEq, Eq)]
pub struct FaceList {
    width: usize,
    data: Vec<u32>,
}

impl FaceList {
    fn new(width: usize) -> Self {
        FaceList {
            width,
            data: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.data.len().checked_div(self.width).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        self.data.chunks_exact(self.width.max(1))
    }

    /// Position of `face`, by binary search in the lexicographic order.
    pub fn position(&self, face: &[u32]) -> Option<usize> {
        debug_assert_eq!(face.len(), self.width);
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

impl fmt::Debug for FaceList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

/// Face counts `f₋₁ = 1, f₀, f₁, …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(Vec<usize>);

impl FVector {
    /// Counts starting with `f₋₁`.
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// `f_i` for `i ≥ −1`; zero beyond the stored range.
    pub fn f(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|j| self.0.get(j).copied())
            .unwrap_or(0)
    }

    /// `Σ_{i≥0} (−1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .skip(1)
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// f-vector of a join: convolution including `f₋₁`.
    pub fn convolve(&self, other: &FVector) -> FVector {
        let mut out = vec![0usize; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        FVector(out)
    }
}

/// A simplicial complex with faces materialized through dimension
/// [`SimplicialComplex::materialized_dim`].
#[derive(Clone)]
pub struct SimplicialComplex {
    index_space: usize,
    labels: Option<JoinLabels>,
    membership: Membership,
    /// Upper bound on the dimension of any face.
    dim_bound: isize,
    vertices: Vec<u32>,
    faces: Vec<FaceList>,
    truncated: bool,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("index_space", &self.index_space)
            .field("labels", &self.labels)
            .field("f_vector", &self.f_vector())
            .field("truncated", &self.truncated)
            .finish()
    }
}

impl SimplicialComplex {
    /// Materializes the complex defined by `member` through dimension
    /// `max_dim` (clamped to `dim_bound`). `member` must be closed under
    /// taking subsets and accept the empty face.
    pub fn from_oracle<F>(
        index_space: usize,
        labels: Option<JoinLabels>,
        dim_bound: isize,
        member: F,
        max_dim: isize,
        limits: &Limits,
    ) -> Result<Self>
    where
        F: Fn(&[u32]) -> bool + Send + Sync + 'static,
    {
        Self::from_membership(index_space, labels, dim_bound, Arc::new(member), max_dim, limits)
    }

    fn from_membership(
        index_space: usize,
        labels: Option<JoinLabels>,
        dim_bound: isize,
        membership: Membership,
        max_dim: isize,
        limits: &Limits,
    ) -> Result<Self> {
        if max_dim < -1 {
            return Err(Error::input("materialization dimension must be at least -1"));
        }
        let vertices: Vec<u32> = (0..index_space as u32)
            .filter(|&v| membership(&[v]))
            .collect();
        let dim_bound = dim_bound.min(vertices.len() as isize - 1).max(-1);
        let mut complex = SimplicialComplex {
            index_space,
            labels,
            membership,
            dim_bound,
            vertices,
            faces: Vec::new(),
            truncated: false,
        };
        complex.materialize(max_dim, limits)?;
        Ok(complex)
    }

    /// Complex generated by a list of facets.
    pub fn from_facets(index_space: usize, facets: Vec<Vec<u32>>, limits: &Limits) -> Result<Self> {
        let mut facets: Vec<Vec<u32>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        if let Some(&v) = facets.iter().flatten().find(|&&v| v as usize >= index_space) {
            return Err(Error::input(format!("vertex {v} outside 0..{index_space}")));
        }
        facets.sort();
        facets.dedup();
        let top = facets.iter().map(Vec::len).max().unwrap_or(0) as isize - 1;
        let member = move |face: &[u32]| {
            face.is_empty() || facets.iter().any(|f| is_sorted_subset(face, f))
        };
        Self::from_oracle(index_space, None, top, member, top, limits)
    }

    /// Re-enumerates faces through `max_dim` (clamped to the dimension bound).
    pub fn materialize(&mut self, max_dim: isize, limits: &Limits) -> Result<()> {
        let target = max_dim.min(self.dim_bound);
        let mut faces = Vec::new();
        if target >= 0 {
            let mut layer = FaceList::new(1);
            layer.data = self.vertices.clone();
            limits.check_faces(0, layer.len())?;
            faces.push(layer);
            for dim in 1..=target as usize {
                limits.check_time(dim as u64)?;
                let next = self.extend_layer(faces.last().expect("nonempty"), limits, dim)?;
                let done = next.is_empty();
                faces.push(next);
                if done {
                    break;
                }
            }
        }
        let top_materialized = faces.len() as isize - 1;
        self.truncated = top_materialized < self.dim_bound
            && top_materialized == max_dim
            && match faces.last() {
                Some(last) => self.has_extension(last),
                None => !self.vertices.is_empty(),
            };
        while faces.last().is_some_and(FaceList::is_empty) {
            faces.pop();
        }
        self.faces = faces;
        Ok(())
    }

    fn candidates<'a>(&'a self, face: &'a [u32]) -> impl Iterator<Item = Vec<u32>> + 'a {
        let last = *face.last().expect("faces of dimension ≥ 0 are nonempty");
        let start = self.vertices.partition_point(|&v| v <= last);
        self.vertices[start..].iter().filter_map(move |&v| {
            let mut cand = Vec::with_capacity(face.len() + 1);
            cand.extend_from_slice(face);
            cand.push(v);
            (self.membership)(&cand).then_some(cand)
        })
    }

    fn extend_layer(&self, prev: &FaceList, limits: &Limits, dim: usize) -> Result<FaceList> {
        let chunks: Vec<Vec<u32>> = (0..prev.len())
            .into_par_iter()
            .map(|i| self.candidates(prev.get(i)).flatten().collect())
            .collect();
        let total: usize = chunks.iter().map(Vec::len).sum::<usize>() / (dim + 1);
        limits.check_faces(dim, total)?;
        let mut out = FaceList::new(dim + 1);
        out.data.reserve(total * (dim + 1));
        for c in chunks {
            out.data.extend(c);
        }
        Ok(out)
    }

    fn has_extension(&self, layer: &FaceList) -> bool {
        (0..layer.len())
            .into_par_iter()
            .any(|i| self.candidates(layer.get(i)).next().is_some())
    }

    pub fn index_space(&self) -> usize {
        self.index_space
    }

    pub fn labels(&self) -> Option<JoinLabels> {
        self.labels
    }

    pub fn label(&self, v: u32) -> Option<LabeledVertex> {
        self.labels.map(|l| l.decode(v))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn contains(&self, face: &[u32]) -> bool {
        (self.membership)(face)
    }

    pub fn membership(&self) -> Membership {
        self.membership.clone()
    }

    /// Highest dimension with materialized faces (−1 for the void complex).
    pub fn materialized_dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// Upper bound on face dimension used to stop enumeration.
    pub fn dim_bound(&self) -> isize {
        self.dim_bound
    }

    /// True if faces exist above the materialized dimension.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// True if every face of dimension ≤ `dim` is materialized.
    pub fn is_materialized_through(&self, dim: isize) -> bool {
        !self.truncated || dim <= self.materialized_dim()
    }

    pub fn is_nonempty(&self) -> bool {
        !self.vertices.is_empty()
    }

    /// Faces of dimension `dim`; empty if none or not materialized.
    pub fn faces(&self, dim: usize) -> &FaceList {
        static EMPTY: FaceList = FaceList {
            width: 0,
            data: Vec::new(),
        };
        self.faces.get(dim).unwrap_or(&EMPTY)
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![1];
        counts.extend(self.faces.iter().map(FaceList::len));
        FVector(counts)
    }

    /// All materialized faces (nonempty), by dimension then lexicographically.
    pub fn all_faces(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.faces.iter().flat_map(FaceList::iter)
    }

    fn derived(
        &self,
        labels: Option<JoinLabels>,
        dim_bound: isize,
        membership: Membership,
        max_dim: isize,
        limits: &Limits,
    ) -> Result<SimplicialComplex> {
        Self::from_membership(self.index_space, labels, dim_bound, membership, max_dim, limits)
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if self.vertices.binary_search(&v).is_err() {
            return Err(Error::precondition(format!("{v} is not a vertex")));
        }
        Ok(())
    }

    /// `st(X, v) = {σ : σ ∪ {v} ∈ X}`, on the same index space and
    /// materialized to the same dimension as `self`.
    pub fn star(&self, v: u32, limits: &Limits) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let inner = self.membership.clone();
        let member: Membership = Arc::new(move |face: &[u32]| inner(&insert_sorted(face, v)));
        self.derived(self.labels, self.dim_bound, member, self.materialized_dim(), limits)
    }

    /// `lk(X, v) = {σ ∈ st(X, v) : v ∉ σ}`.
    pub fn link(&self, v: u32, limits: &Limits) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let inner = self.membership.clone();
        let member: Membership = Arc::new(move |face: &[u32]| {
            face.binary_search(&v).is_err() && inner(&insert_sorted(face, v))
        });
        self.derived(self.labels, self.dim_bound - 1, member, self.materialized_dim(), limits)
    }

    /// `X[V'] = {σ ⊆ V' : σ ∈ X}`.
    pub fn induced(&self, keep: &[u32], limits: &Limits) -> Result<SimplicialComplex> {
        let mut allowed = vec![false; self.index_space];
        for &v in keep {
            if v as usize >= self.index_space {
                return Err(Error::input(format!("vertex {v} outside the index space")));
            }
            allowed[v as usize] = true;
        }
        let inner = self.membership.clone();
        let member: Membership = Arc::new(move |face: &[u32]| {
            face.iter().all(|&u| allowed[u as usize]) && inner(face)
        });
        self.derived(self.labels, self.dim_bound, member, self.materialized_dim(), limits)
    }

    /// Faces with at most `d + 1` vertices.
    pub fn skeleton(&self, d: isize, limits: &Limits) -> Result<SimplicialComplex> {
        if d < -1 {
            return Err(Error::input("skeleton dimension must be at least -1"));
        }
        let inner = self.membership.clone();
        let width = (d + 1) as usize;
        let member: Membership =
            Arc::new(move |face: &[u32]| face.len() <= width && inner(face));
        self.derived(self.labels, self.dim_bound.min(d), member, d, limits)
    }

    /// Export: one face per line, vertex ids ascending, after a
    /// `format-version=1` header. The empty face is omitted.
    pub fn to_faces_text(&self) -> String {
        let mut out = String::from("format-version=1\n");
        for face in self.all_faces() {
            let line: Vec<String> = face.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses [`Self::to_faces_text`] output; the listed faces generate the
    /// complex.
    pub fn from_faces_text(text: &str, limits: &Limits) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        match lines.next().map(str::trim) {
            Some("format-version=1") => {}
            other => {
                return Err(Error::input(format!(
                    "expected format-version=1 header, found {other:?}"
                )))
            }
        }
        let mut facets = Vec::new();
        let mut max_id = 0usize;
        for line in lines {
            let face = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::input(format!("bad vertex id {t:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            for &v in &face {
                max_id = max_id.max(v as usize + 1);
            }
            facets.push(face);
        }
        Self::from_facets(max_id, facets, limits)
    }
}

fn insert_sorted(face: &[u32], v: u32) -> Vec<u32> {
    let mut out = face.to_vec();
    if let Err(pos) = out.binary_search(&v) {
        out.insert(pos, v);
    }
    out
}

fn is_sorted_subset(small: &[u32], large: &[u32]) -> bool {
    let mut it = large.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

/// Splits an encoded join face into per-copy element lists.
fn split_parts(face: &[u32], labels: JoinLabels) -> Vec<Vec<u32>> {
    let mut parts = vec![Vec::new(); labels.copies];
    for &id in face {
        let lv = labels.decode(id);
        parts[lv.copy - 1].push(lv.element as u32);
    }
    parts
}

fn join_impl(
    factors: &[&SimplicialComplex],
    deleted: bool,
    max_dim: isize,
    limits: &Limits,
) -> Result<SimplicialComplex> {
    let Some(first) = factors.first() else {
        return Err(Error::input("a join needs at least one factor"));
    };
    let n = first.index_space;
    if factors.iter().any(|f| f.index_space != n) {
        return Err(Error::input("join factors must share the element index space"));
    }
    let labels = JoinLabels {
        copies: factors.len(),
        elements: n,
    };
    let members: Vec<Membership> = factors.iter().map(|f| f.membership.clone()).collect();
    let mut bound: isize = factors.iter().map(|f| f.dim_bound + 1).sum::<isize>() - 1;
    if deleted {
        bound = bound.min(n as isize - 1);
    }
    let member: Membership = Arc::new(move |face: &[u32]| {
        let parts = split_parts(face, labels);
        if deleted {
            let mut used = vec![false; labels.elements];
            for &e in parts.iter().flatten() {
                if std::mem::replace(&mut used[e as usize], true) {
                    return false;
                }
            }
        }
        parts.iter().zip(&members).all(|(p, m)| m(p))
    });
    SimplicialComplex::from_membership(n * factors.len(), Some(labels), bound, member, max_dim, limits)
}

/// `X₁ ∗ ⋯ ∗ X_k` with vertex `(i, v)` encoded as `(i−1)·n + v`.
pub fn join(factors: &[&SimplicialComplex], max_dim: isize, limits: &Limits) -> Result<SimplicialComplex> {
    join_impl(factors, false, max_dim, limits)
}

/// `(X₁ ∗ ⋯ ∗ X_k)_Δ`: faces of the join whose parts are pairwise disjoint
/// as subsets of the shared element set, materialized through `max_dim`.
pub fn deleted_join(
    factors: &[&SimplicialComplex],
    max_dim: isize,
    limits: &Limits,
) -> Result<SimplicialComplex> {
    join_impl(factors, true, max_dim, limits)
}

/// `X^{∗k}_Δ`.
pub fn power_deleted_join(
    x: &SimplicialComplex,
    k: usize,
    max_dim: isize,
    limits: &Limits,
) -> Result<SimplicialComplex> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let factors = vec![x; k];
    deleted_join(&factors, max_dim, limits)
}

/// Deleted join of matroid independence complexes.
pub fn matroid_deleted_join(
    matroids: &[&Matroid],
    max_dim: isize,
    limits: &Limits,
) -> Result<SimplicialComplex> {
    let factors = matroids
        .iter()
        .map(|m| m.as_complex(0, limits))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&SimplicialComplex> = factors.iter().collect();
    deleted_join(&refs, max_dim, limits)
}

/// Chessboard complex `C(k, m)`: vertex `(row, column)` is encoded as
/// `row·m + column`; faces are placements with distinct rows and columns.
/// `max_dim = None` materializes everything.
pub fn chessboard(k: usize, m: usize, max_dim: Option<isize>, limits: &Limits) -> Result<SimplicialComplex> {
    if k == 0 || m == 0 {
        return Err(Error::input("chessboard dimensions must be positive"));
    }
    let labels = JoinLabels {
        copies: k,
        elements: m,
    };
    let top = k.min(m) as isize - 1;
    let member = move |face: &[u32]| {
        let mut rows = vec![false; k];
        let mut cols = vec![false; m];
        face.iter().all(|&id| {
            let (r, c) = (id as usize / m, id as usize % m);
            !std::mem::replace(&mut rows[r], true) && !std::mem::replace(&mut cols[c], true)
        })
    };
    SimplicialComplex::from_oracle(k * m, Some(labels), top, member, max_dim.unwrap_or(top), limits)
}

/// Colourful complex `Y_{r,d}`: the partition matroid with `d + 1` classes
/// of `r` consecutive elements and capacity one per class.
pub fn colourful_complex(r: usize, d: usize) -> Result<Matroid> {
    if r == 0 {
        return Err(Error::input("r must be positive"));
    }
    let blocks = (0..=d).map(|c| (c * r..(c + 1) * r).collect()).collect();
    Matroid::partition(r * (d + 1), blocks, vec![1; d + 1])
}

/// Cyclic shift `(copy i, v) ↦ (copy i mod k + 1, v)` applied `times`
/// times to an encoded face.
pub fn cyclic_shift(face: &[u32], labels: JoinLabels, times: usize) -> Vec<u32> {
    let mut out: Vec<u32> = face
        .iter()
        .map(|&id| {
            let lv = labels.decode(id);
            labels.encode(LabeledVertex {
                copy: (lv.copy - 1 + times) % labels.copies + 1,
                element: lv.element,
            })
        })
        .collect();
    out.sort_unstable();
    out
}

/// True iff no materialized nonempty face is setwise fixed by a
/// nontrivial power of the cyclic shift.
pub fn is_action_free_on(complex: &SimplicialComplex) -> Result<bool> {
    let Some(labels) = complex.labels() else {
        return Err(Error::input("cyclic shifts need a labeled (join) complex"));
    };
    let fixed = complex.all_faces().any(|face| {
        (1..labels.copies).any(|s| cyclic_shift(face, labels, s) == face)
    });
    Ok(!fixed)
}

/// Builds `X^{∗k}_Δ` through dimension `max_dim` and checks freeness of
/// the shift action on it.
pub fn is_action_free(x: &SimplicialComplex, k: usize, max_dim: isize, limits: &Limits) -> Result<bool> {
    is_action_free_on(&power_deleted_join(x, k, max_dim, limits)?)
}
