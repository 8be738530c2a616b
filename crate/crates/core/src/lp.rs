//! Phase-1 simplex for feasibility of `A x = b, x ≥ 0`, with Bland's
//! smallest-index rule. Generic over the scalar; use an exact type when the
//! answer is a certificate.

use crate::scalar::OrderedField;

/// A nonnegative solution of `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Feasible<F> {
    pub x: Vec<F>,
    pub pivots: usize,
}

/// Finds `x ≥ 0` with `A x = b`, or `None` if the system is infeasible.
/// `a` is row-major with `b.len()` rows.
pub fn feasible_point<F: OrderedField>(a: &[Vec<F>], b: &[F]) -> Option<Feasible<F>> {
    let m = b.len();
    assert_eq!(a.len(), m, "one right-hand side per row");
    let n = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|row| row.len() == n), "ragged constraint matrix");
    let width = n + m;

    // Tableau rows: [A | I | rhs], rows negated so rhs ≥ 0.
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = *rhs < F::zero();
        let mut t: Vec<F> = row
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        t.extend((0..m).map(|j| if j == i { F::one() } else { F::zero() }));
        t.push(if flip { -rhs.clone() } else { rhs.clone() });
        rows.push(t);
    }
    let mut basis: Vec<usize> = (n..width).collect();

    // Reduced costs of the phase-1 objective (sum of artificials), with the
    // negated objective value in the last slot.
    let mut cost: Vec<F> = vec![F::zero(); width + 1];
    for row in &rows {
        for j in 0..n {
            cost[j] = cost[j].clone() - row[j].clone();
        }
        cost[width] = cost[width].clone() - row[width].clone();
    }

    let mut pivots = 0;
    while let Some(enter) = (0..width).find(|&j| cost[j] < F::zero()) {
        let mut leave: Option<(usize, F)> = None;
        for (i, row) in rows.iter().enumerate() {
            if row[enter] > F::zero() {
                let ratio = row[width].clone() / row[enter].clone();
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // The phase-1 objective is bounded below by zero.
        let (pr, _) = leave.expect("phase-1 problem is bounded");
        pivot(&mut rows, &mut cost, pr, enter);
        basis[pr] = enter;
        pivots += 1;
    }

    if !cost[width].is_zero() {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            x[var] = rows[i][width].clone();
        }
    }
    Some(Feasible { x, pivots })
}

fn pivot<F: OrderedField>(rows: &mut [Vec<F>], cost: &mut [F], pr: usize, pc: usize) {
    let inv = F::one() / rows[pr][pc].clone();
    for v in rows[pr].iter_mut() {
        *v = v.clone() * inv.clone();
    }
    let pivot_row = rows[pr].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let factor = row[pc].clone();
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
    }
    if !cost[pc].is_zero() {
        let factor = cost[pc].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn simple_feasible_system() {
        // x + y = 1, x − y = 1/2
        let a = vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)]];
        let b = vec![q(1, 1), q(1, 2)];
        let sol = feasible_point(&a, &b).unwrap();
        assert_eq!(sol.x, vec![q(3, 4), q(1, 4)]);
    }

    #[test]
    fn infeasible_system() {
        // x + y = 1, x + y = 2
        let a = vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(1, 1)]];
        let b = vec![q(1, 1), q(2, 1)];
        assert!(feasible_point(&a, &b).is_none());
        // x = −1
        assert!(feasible_point(&[vec![q(1, 1)]], &[q(-1, 1)]).is_none());
    }

    #[test]
    fn redundant_rows_and_floats() {
        let a = vec![vec![1.0, 1.0, 0.0], vec![2.0, 2.0, 0.0], vec![0.0, 1.0, 1.0]];
        let b = vec![1.0, 2.0, 0.5];
        let sol = feasible_point(&a, &b).unwrap();
        assert!(sol.x.iter().all(|&v| v >= 0.0));
        assert_eq!(sol.x[0] + sol.x[1], 1.0);
        assert_eq!(sol.x[1] + sol.x[2], 0.5);
    }

    #[test]
    fn empty_system_is_feasible() {
        let sol = feasible_point::<BigRational>(&[], &[]).unwrap();
        assert!(sol.x.is_empty());
    }
}
