//! Exact phase-one simplex for `M y = b, y >= 0` with `b >= 0`.
//!
//! Bland's rule is used throughout, so the method terminates on degenerate
//! problems. On infeasibility the optimal phase-one duals give a Farkas
//! vector `z` with `z^T M >= 0` and `z^T b < 0`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhaseOne {
    Feasible(Vec<Rational>),
    Infeasible(Vec<Rational>),
}

/// Decides `rows * y = rhs, y >= 0`. Every `rhs` entry must be nonnegative.
pub fn phase_one(rows: &[Vec<Rational>], rhs: &[Rational]) -> PhaseOne {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    assert_eq!(rhs.len(), m);
    assert!(rhs.iter().all(|b| !b.is_negative()), "phase one needs b >= 0");

    // columns: structural 0..n, artificial n..n+m, rhs at n+m
    let width = n + m + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, row) in rows.iter().enumerate() {
        let mut t = vec![Rational::zero(); width];
        t[..n].clone_from_slice(row);
        t[n + i] = Rational::one();
        t[width - 1] = rhs[i].clone();
        tab.push(t);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs of min sum(artificials)
    let mut cost = vec![Rational::zero(); width];
    for t in &tab {
        for j in 0..n {
            cost[j] -= &t[j];
        }
        cost[width - 1] -= &t[width - 1];
    }

    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for (i, t) in tab.iter().enumerate() {
            if t[enter].is_positive() {
                let ratio = &t[width - 1] / &t[enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // the phase-one objective is bounded below by zero
        let (pivot_row, _) = leave.expect("phase one is never unbounded");
        pivot(&mut tab, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    let objective = -&cost[width - 1];
    if objective.is_zero() {
        let mut y = vec![Rational::zero(); n];
        for (i, &b) in basis.iter().enumerate() {
            if b < n {
                y[b] = tab[i][width - 1].clone();
            }
        }
        PhaseOne::Feasible(y)
    } else {
        // reduced cost of artificial i is 1 - z_i; return -z
        let farkas = (0..m).map(|i| &cost[n + i] - Rational::one()).collect();
        PhaseOne::Infeasible(farkas)
    }
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], row: usize, col: usize) {
    let p = tab[row][col].clone();
    for v in tab[row].iter_mut() {
        *v /= &p;
    }
    let pivot_row = tab[row].clone();
    for (i, t) in tab.iter_mut().enumerate() {
        if i == row || t[col].is_zero() {
            continue;
        }
        let f = t[col].clone();
        for (v, pr) in t.iter_mut().zip(&pivot_row) {
            if !pr.is_zero() {
                *v -= &f * pr;
            }
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for (v, pr) in cost.iter_mut().zip(&pivot_row) {
            if !pr.is_zero() {
                *v -= &f * pr;
            }
        }
    }
}
