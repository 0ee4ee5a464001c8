//! Fourier–Motzkin elimination for strict systems `f(beta) > 0`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::HomogeneousSystem;
use crate::constraints::{Provenance, StrictInequality};
use crate::forms::LinearForm;
use crate::rational::Rational;

/// Projects the strict system onto the remaining variables by pairing every
/// lower bound on `var` with every upper bound. Rows without `var` pass
/// through; a row is dropped when a row with proportional linear part and
/// no larger constant comes from a subset of the same input rows. If `var`
/// occurs nowhere the input is returned unchanged.
pub fn fourier_motzkin_eliminate(rows: &[StrictInequality], var: usize) -> Vec<StrictInequality> {
    if rows.iter().all(|r| r.form.coefficient(var).is_zero()) {
        return rows.to_vec();
    }
    let tracked: Vec<Tracked> = rows
        .iter()
        .map(|r| Tracked { form: r.form.clone(), history: BTreeSet::new() })
        .collect();
    // with empty histories the pruning is plain dominance
    eliminate(tracked, var, None)
        .into_iter()
        .map(|t| StrictInequality::new(t.form, Provenance::Derived))
        .collect()
}

#[derive(Debug, Clone)]
struct Tracked {
    form: LinearForm,
    history: BTreeSet<usize>,
}

fn eliminate(rows: Vec<Tracked>, var: usize, history_limit: Option<usize>) -> Vec<Tracked> {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut out = Vec::new();
    for r in rows {
        let c = r.form.coefficient(var);
        if c.is_positive() {
            lower.push((c, r));
        } else if c.is_negative() {
            upper.push((-c, r));
        } else {
            out.push(r);
        }
    }
    for (a, lo) in &lower {
        for (b, up) in &upper {
            let history: BTreeSet<usize> = lo.history.union(&up.history).copied().collect();
            if history_limit.is_some_and(|limit| history.len() > limit) {
                continue;
            }
            let form = &lo.form.scale(b) + &up.form.scale(a);
            out.push(Tracked { form, history });
        }
    }
    prune(out)
}

/// Drops a row when a parallel row has a normalized constant no larger and
/// a history contained in its own. Any later combination of the dropped row
/// is then dominated by the same combination of the kept one, whose history
/// is no larger, so the history bound stays valid.
fn prune(rows: Vec<Tracked>) -> Vec<Tracked> {
    let mut order: Vec<BTreeMap<usize, Rational>> = Vec::new();
    let mut classes: BTreeMap<BTreeMap<usize, Rational>, Vec<(Rational, Tracked)>> = BTreeMap::new();
    for r in rows {
        let (key, constant) = normalize(&r.form);
        let class = classes.entry(key.clone()).or_insert_with(|| {
            order.push(key);
            Vec::new()
        });
        let dominated = class
            .iter()
            .any(|(c, t)| *c <= constant && t.history.is_subset(&r.history));
        if dominated {
            continue;
        }
        class.retain(|(c, t)| !(constant <= *c && r.history.is_subset(&t.history)));
        class.push((constant, r));
    }
    order
        .into_iter()
        .flat_map(|k| classes.remove(&k).expect("key recorded"))
        .map(|(_, t)| t)
        .collect()
}

/// Linear part scaled so its first nonzero coefficient has absolute value 1,
/// with the constant scaled alike. Constant rows keep their constant.
fn normalize(form: &LinearForm) -> (BTreeMap<usize, Rational>, Rational) {
    let Some((_, lead)) = form.terms().next() else {
        return (BTreeMap::new(), form.constant_term().clone());
    };
    let s = lead.abs();
    let key = form.terms().map(|(i, c)| (i, c / &s)).collect();
    (key, form.constant_term() / &s)
}

/// Decides `exists beta: every row > 0` by eliminating all `dim` variables,
/// with Kohler's history bound `|H| <= t + 1` after `t` eliminations.
pub fn fm_feasible(rows: &[StrictInequality], dim: usize) -> bool {
    let mut current: Vec<Tracked> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| Tracked { form: r.form.clone(), history: BTreeSet::from([i]) })
        .collect();
    let mut remaining: Vec<usize> = (0..dim).collect();
    let mut eliminated = 0;
    loop {
        if current.iter().any(|r| r.form.is_constant() && !r.form.constant_term().is_positive()) {
            return false;
        }
        current.retain(|r| !r.form.is_constant());
        if current.is_empty() || remaining.is_empty() {
            return current.is_empty();
        }
        // cheapest variable first: fewest generated pairs
        let (pos, &var) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| {
                let p = current.iter().filter(|r| r.form.coefficient(v).is_positive()).count();
                let n = current.iter().filter(|r| r.form.coefficient(v).is_negative()).count();
                (p * n, v)
            })
            .expect("nonempty");
        remaining.remove(pos);
        eliminated += 1;
        current = eliminate(current, var, Some(eliminated + 1));
    }
}

/// Fourier–Motzkin decision of `x . A > 0`.
pub fn fm_homogeneous_feasible(sys: &HomogeneousSystem) -> bool {
    let k = sys.row_count();
    let rows: Vec<StrictInequality> = sys
        .columns()
        .iter()
        .map(|c| StrictInequality::new(LinearForm::dense(Rational::zero(), c), Provenance::Derived))
        .collect();
    debug_assert!(rows.iter().all(|r| r.form.dimension_hint() <= k));
    fm_feasible(&rows, k)
}
