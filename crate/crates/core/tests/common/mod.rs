//! Slow, independent reference implementations used to cross-check the
//! library in integration tests and the acceptance runner.
#![allow(dead_code)]

use mtv_core::linalg::field_rank;
use mtv_core::{FaceSet, Matroid, Rational, SimplicialComplex};
use num_traits::{Signed, Zero};

/// Largest number of pairwise disjoint bases, by exhaustive search over the
/// basis list. Rank-0 matroids give 0.
pub fn brute_max_disjoint_bases(m: &Matroid) -> usize {
    if m.full_rank() == 0 {
        return 0;
    }
    let bases = m.bases();
    fn grow(bases: &[FaceSet], start: usize, used: &FaceSet, depth: usize, best: &mut usize) {
        *best = (*best).max(depth);
        for i in start..bases.len() {
            if bases[i].is_disjoint(used) {
                grow(bases, i + 1, &used.union(&bases[i]), depth + 1, best);
            }
        }
    }
    let mut best = 0;
    grow(&bases, 0, &FaceSet::empty(), 0, &mut best);
    best
}

/// Rank by the definition: the largest independent subset, searched over
/// all subsets of `a`.
pub fn brute_rank(m: &Matroid, a: &FaceSet) -> usize {
    let elems = a.as_slice();
    (0u32..1 << elems.len())
        .filter_map(|mask| {
            let s: Vec<usize> = (0..elems.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| elems[i])
                .collect();
            m.independent_slice(&s).then_some(s.len())
        })
        .max()
        .unwrap_or(0)
}

/// Feasibility of `{x ≥ 0, A x = b}`: the equalities are solved by
/// Gauss–Jordan elimination, the pivot variables substituted into `x ≥ 0`,
/// and the remaining inequalities decided by Fourier–Motzkin elimination.
pub fn fm_feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| r.iter().cloned().chain([rhs.clone()]).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v = &*v - &f * pv;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return false;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    // inequalities coeffs·y ≤ rhs over the free variables y
    let mut ineq: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for &(pr, _) in &pivots {
        // x_p = rhs − Σ row[f]·y_f ≥ 0  ⇔  Σ row[f]·y_f ≤ rhs
        ineq.push((free.iter().map(|&f| rows[pr][f].clone()).collect(), rows[pr][n].clone()));
    }
    for j in 0..free.len() {
        let mut unit = vec![Rational::zero(); free.len()];
        unit[j] = -Rational::from_integer(1.into());
        ineq.push((unit, Rational::zero()));
    }
    for j in 0..free.len() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in ineq {
            if row.0[j].is_positive() {
                pos.push(row);
            } else if row.0[j].is_negative() {
                neg.push(row);
            } else {
                rest.push(row);
            }
        }
        for (pc, pr) in &pos {
            for (nc, nr) in &neg {
                let (sp, sn) = (-&nc[j], pc[j].clone());
                let coeffs: Vec<Rational> = pc.iter().zip(nc).map(|(x, y)| x * &sp + y * &sn).collect();
                rest.push(normalized(coeffs, pr * &sp + nr * &sn));
            }
        }
        rest.sort();
        rest.dedup();
        ineq = rest;
    }
    ineq.iter().all(|(_, rhs)| !rhs.is_negative())
}

fn normalized(coeffs: Vec<Rational>, rhs: Rational) -> (Vec<Rational>, Rational) {
    match coeffs.iter().find(|v| !v.is_zero()) {
        Some(lead) => {
            let s = lead.abs().recip();
            (coeffs.iter().map(|v| v * &s).collect(), rhs * s)
        }
        None => (coeffs, rhs),
    }
}

/// Linear system whose nonnegative solutions are convex coefficients
/// placing one common point in every hull.
pub fn hull_system(sets: &[Vec<Vec<Rational>>]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let dim = sets[0][0].len();
    let n: usize = sets.iter().map(Vec::len).sum();
    let one = Rational::from_integer(1.into());
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut offset = 0;
    let starts: Vec<usize> = sets
        .iter()
        .map(|s| {
            let o = offset;
            offset += s.len();
            o
        })
        .collect();
    for (i, s) in sets.iter().enumerate() {
        let mut row = vec![Rational::zero(); n];
        for j in 0..s.len() {
            row[starts[i] + j] = one.clone();
        }
        a.push(row);
        b.push(one.clone());
    }
    for i in 1..sets.len() {
        for c in 0..dim {
            let mut row = vec![Rational::zero(); n];
            for (j, p) in sets[0].iter().enumerate() {
                row[j] = p[c].clone();
            }
            for (j, p) in sets[i].iter().enumerate() {
                row[starts[i] + j] = -p[c].clone();
            }
            a.push(row);
            b.push(Rational::zero());
        }
    }
    (a, b)
}

/// Reduced Betti numbers through `up_to` from dense rational boundary
/// matrices, built directly from the face lists.
pub fn dense_betti(x: &SimplicialComplex, up_to: usize) -> Vec<usize> {
    let faces: Vec<Vec<Vec<u32>>> = (0..=up_to + 1)
        .map(|d| x.faces(d).iter().map(<[u32]>::to_vec).collect())
        .collect();
    let count = |d: isize| if d < 0 { 1 } else { faces[d as usize].len() };
    let rank = |d: usize| -> usize {
        let cols = &faces[d];
        if cols.is_empty() {
            return 0;
        }
        let lower: Vec<Vec<u32>> = if d == 0 { vec![Vec::new()] } else { faces[d - 1].clone() };
        let mut m = vec![vec![Rational::zero(); cols.len()]; lower.len()];
        for (c, face) in cols.iter().enumerate() {
            for j in 0..face.len() {
                let mut f = face.clone();
                f.remove(j);
                let r = lower.iter().position(|g| *g == f).expect("closed under faces");
                m[r][c] = Rational::from_integer(if j % 2 == 0 { 1 } else { -1 }.into());
            }
        }
        field_rank(m)
    };
    let ranks: Vec<usize> = (0..=up_to + 1).map(rank).collect();
    (0..=up_to)
        .map(|i| count(i as isize) - ranks[i] - ranks[i + 1])
        .collect()
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
