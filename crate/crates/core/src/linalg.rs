//! Exact rank computations: dense Bareiss elimination, dense elimination
//! over a field, and sparse column reduction in both fraction-free and
//! field flavours.

use num_bigint::BigInt;

use crate::scalar::{ExactInteger, Field, Modulus};

/// Sparse column: `(row, coefficient)` pairs, strictly increasing rows,
/// no stored zeros.
pub type SparseColumn<T> = Vec<(u32, T)>;

/// Rank of a dense integer matrix (row-major) by Bareiss' fraction-free
/// elimination. Returns `None` if an intermediate value overflows `T`.
pub fn bareiss_rank<T: ExactInteger>(mut m: Vec<Vec<T>>) -> Option<usize> {
    let rows = m.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = m[0].len();
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let lead = m[r][col].clone();
            for c in col + 1..cols {
                let lhs = pivot.checked_mul(&m[r][c])?;
                let rhs = lead.checked_mul(&m[rank][c])?;
                m[r][c] = lhs.checked_sub(&rhs)? / prev.clone();
            }
            m[r][col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Bareiss rank, trying `i64` first and falling back to big integers.
pub fn integer_rank(m: &[Vec<BigInt>]) -> usize {
    let small: Option<Vec<Vec<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|v| i64::try_from(v).ok()).collect())
        .collect();
    if let Some(rank) = small.and_then(bareiss_rank) {
        return rank;
    }
    bareiss_rank(m.to_vec()).expect("big integers do not overflow")
}

/// Rank of a dense matrix over any field by Gauss-Jordan elimination.
pub fn field_rank<F: Field>(mut m: Vec<Vec<F>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = F::one() / m[rank][col].clone();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * inv.clone();
            for c in col..cols {
                let delta = factor.clone() * m[rank][c].clone();
                m[r][c] = m[r][c].clone() - delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a dense matrix over Z/p with a run-time modulus.
pub fn modular_rank(mut m: Vec<Vec<u64>>, modulus: Modulus) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = modulus.inverse(m[rank][col]);
        for r in rank + 1..rows {
            if m[r][col] == 0 {
                continue;
            }
            let factor = modulus.mul(m[r][col], inv);
            for c in col..cols {
                let delta = modulus.mul(factor, m[rank][c]);
                m[r][c] = modulus.sub(m[r][c], delta);
            }
        }
        rank += 1;
    }
    rank
}

/// Outcome of a sparse column reduction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Reduction {
    pub rank: usize,
    /// Number of column additions performed.
    pub column_ops: u64,
}

/// Column reduction over a field. Columns are processed in the given
/// order; pivots are lowest (largest) row indices.
pub fn sparse_field_rank<F, I>(rows: usize, columns: I) -> Reduction
where
    F: Field,
    I: IntoIterator<Item = SparseColumn<F>>,
{
    let mut owner: Vec<Option<u32>> = vec![None; rows];
    let mut reduced: Vec<SparseColumn<F>> = Vec::new();
    let mut ops = 0u64;
    for mut col in columns {
        while let Some((low, coeff)) = col.last().cloned() {
            let Some(idx) = owner[low as usize] else {
                owner[low as usize] = Some(reduced.len() as u32);
                reduced.push(col);
                break;
            };
            let piv = &reduced[idx as usize];
            let factor = coeff / piv.last().expect("reduced columns are nonempty").1.clone();
            col = axpy(&col, &factor, piv);
            ops += 1;
        }
    }
    Reduction {
        rank: reduced.len(),
        column_ops: ops,
    }
}

/// `x - factor * y` on sparse columns.
fn axpy<F: Field>(x: &SparseColumn<F>, factor: &F, y: &SparseColumn<F>) -> SparseColumn<F> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(factor.clone() * y[j].1.clone())));
            j += 1;
        } else {
            let v = x[i].1.clone() - factor.clone() * y[j].1.clone();
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Fraction-free column reduction over the integers, computing the rank
/// over Q. Each step replaces a column by an integer combination with a
/// nonzero multiplier on itself and removes the common content, so the
/// column space over Q is preserved. Returns `None` on overflow of `T`.
pub fn sparse_integer_rank<T, I>(rows: usize, columns: I) -> Option<Reduction>
where
    T: ExactInteger,
    I: IntoIterator<Item = SparseColumn<T>>,
{
    let mut owner: Vec<Option<u32>> = vec![None; rows];
    let mut reduced: Vec<SparseColumn<T>> = Vec::new();
    let mut ops = 0u64;
    for mut col in columns {
        while let Some((low, coeff)) = col.last().cloned() {
            let Some(idx) = owner[low as usize] else {
                owner[low as usize] = Some(reduced.len() as u32);
                reduced.push(col);
                break;
            };
            let piv = &reduced[idx as usize];
            let piv_coeff = piv.last().expect("reduced columns are nonempty").1.clone();
            let g = piv_coeff.gcd(&coeff);
            let a = piv_coeff / g.clone();
            let b = coeff / g;
            col = combine(&col, &a, piv, &b)?;
            normalize(&mut col);
            ops += 1;
        }
    }
    Some(Reduction {
        rank: reduced.len(),
        column_ops: ops,
    })
}

/// `a * x - b * y` with overflow checks.
fn combine<T: ExactInteger>(
    x: &SparseColumn<T>,
    a: &T,
    y: &SparseColumn<T>,
    b: &T,
) -> Option<SparseColumn<T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a.checked_mul(&x[i].1)?));
            i += 1;
        } else if take_y {
            out.push((y[j].0, T::zero().checked_sub(&b.checked_mul(&y[j].1)?)?));
            j += 1;
        } else {
            let v = a.checked_mul(&x[i].1)?.checked_sub(&b.checked_mul(&y[j].1)?)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn normalize<T: ExactInteger>(col: &mut SparseColumn<T>) {
    let mut g = T::zero();
    for (_, v) in col.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, v) in col.iter_mut() {
        *v = v.clone() / g.clone();
    }
}
