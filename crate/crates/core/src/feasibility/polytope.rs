//! Vertices and recession rays of the closure `{beta : f_i(beta) >= 0}`.
//!
//! Vertices are enumerated over bases: every `dim`-subset of constraints
//! whose hyperplanes meet in one point is solved exactly and the point is
//! kept when it satisfies all closed constraints. This is only meant for the
//! small dimensions where bodies are drawn.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::linalg::{nullspace, rank, solve_unique};
use crate::constraints::StrictInequality;
use crate::forms::LinearForm;
use crate::rational::{primitive_integer_vector, Rational};

fn distinct_forms(constraints: &[StrictInequality]) -> Vec<LinearForm> {
    let mut seen: BTreeMap<Vec<Rational>, ()> = BTreeMap::new();
    let mut out = Vec::new();
    let dim = constraints.iter().map(|c| c.form.dimension_hint()).max().unwrap_or(0);
    for c in constraints {
        let mut key = c.form.dense_coefficients(dim);
        key.push(c.form.constant_term().clone());
        let key = primitive_integer_vector(&key);
        if seen.insert(key, ()).is_none() {
            out.push(c.form.clone());
        }
    }
    out
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn closed_ok(forms: &[LinearForm], point: &[Rational]) -> bool {
    forms.iter().all(|f| !f.eval(point).is_negative())
}

/// Vertices of the closure, sorted and without repetition.
pub fn closure_vertices(constraints: &[StrictInequality], dim: usize) -> Vec<Vec<Rational>> {
    let forms = distinct_forms(constraints);
    let mut found = BTreeSet::new();
    if dim == 0 {
        return Vec::new();
    }
    for_each_subset(forms.len(), dim, |subset| {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| forms[i].dense_coefficients(dim)).collect();
        let rhs: Vec<Rational> = subset.iter().map(|&i| -forms[i].constant_term()).collect();
        if let Some(x) = solve_unique(&rows, &rhs) {
            if !found.contains(&x) && closed_ok(&forms, &x) {
                found.insert(x);
            }
        }
    });
    found.into_iter().collect()
}

/// Extreme rays of the recession cone `{d : lin(f_i)(d) >= 0}` as primitive
/// integer vectors. Empty when the closure is bounded.
pub fn closure_rays(constraints: &[StrictInequality], dim: usize) -> Vec<Vec<Rational>> {
    let homogeneous: Vec<StrictInequality> = constraints
        .iter()
        .filter(|c| !c.form.is_constant())
        .map(|c| StrictInequality::new(c.form.homogeneous_part(), c.provenance.clone()))
        .collect();
    let forms = distinct_forms(&homogeneous);
    let mut found = BTreeSet::new();
    if dim == 0 {
        return Vec::new();
    }
    for_each_subset(forms.len(), dim - 1, |subset| {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| forms[i].dense_coefficients(dim)).collect();
        let ns = nullspace(&rows, dim);
        if ns.len() != 1 {
            return;
        }
        let d = primitive_integer_vector(&ns[0]);
        let neg: Vec<Rational> = d.iter().map(|x| -x).collect();
        for cand in [d, neg] {
            if closed_ok(&forms, &cand) {
                found.insert(cand);
            }
        }
    });
    found.into_iter().collect()
}

/// The point satisfies every closed constraint and is tight on `dim`
/// linearly independent ones.
pub fn vertex_is_sound(vertex: &[Rational], constraints: &[StrictInequality], dim: usize) -> bool {
    let forms: Vec<&LinearForm> = constraints.iter().map(|c| &c.form).collect();
    if vertex.len() != dim || forms.iter().any(|f| f.eval(vertex).is_negative()) {
        return false;
    }
    let tight: Vec<Vec<Rational>> = forms
        .iter()
        .filter(|f| f.eval(vertex).is_zero())
        .map(|f| f.dense_coefficients(dim))
        .collect();
    rank(&tight) == dim
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::Provenance;
    use crate::rational::{int, ratio};

    fn row(constant: i64, coeffs: &[i64]) -> StrictInequality {
        let c: Vec<Rational> = coeffs.iter().map(|&v| int(v)).collect();
        StrictInequality::new(LinearForm::dense(int(constant), &c), Provenance::Derived)
    }

    #[test]
    fn subsets_are_enumerated() {
        let mut all = Vec::new();
        for_each_subset(4, 2, |s| all.push(s.to_vec()));
        assert_eq!(all.len(), 6);
        assert_eq!(all[5], [2, 3]);
        let mut none = 0;
        for_each_subset(2, 3, |_| none += 1);
        assert_eq!(none, 0);
        let mut empty = 0;
        for_each_subset(3, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }

    #[test]
    fn triangle() {
        let rows = [row(0, &[1, 0]), row(0, &[0, 1]), row(1, &[-1, -1])];
        let v = closure_vertices(&rows, 2);
        assert_eq!(v, [vec![int(0), int(0)], vec![int(0), int(1)], vec![int(1), int(0)]]);
        for p in &v {
            assert!(vertex_is_sound(p, &rows, 2));
        }
        assert!(closure_rays(&rows, 2).is_empty());
    }

    #[test]
    fn interval_endpoint() {
        let rows = [row(0, &[1]), row(2, &[-3]), row(1, &[-1])];
        assert_eq!(closure_vertices(&rows, 1), [vec![int(0)], vec![ratio(2, 3)]]);
    }

    #[test]
    fn unbounded_quadrant() {
        let rows = [row(0, &[1, 0]), row(0, &[0, 1]), row(-1, &[1, 1])];
        let v = closure_vertices(&rows, 2);
        assert_eq!(v, [vec![int(0), int(1)], vec![int(1), int(0)]]);
        let r = closure_rays(&rows, 2);
        assert_eq!(r, [vec![int(0), int(1)], vec![int(1), int(0)]]);
        assert!(!vertex_is_sound(&[ratio(1, 2), ratio(1, 2)], &rows, 2));
    }
}
