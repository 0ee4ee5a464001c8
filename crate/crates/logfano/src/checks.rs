//! The self-verification suite behind `logfano verify` and the acceptance
//! test target. Every check is exact; the only tolerances are wall-clock
//! limits, pinned per check.

use std::time::{Duration, Instant};

use logfano_core::constraints::{
    classify_quadratic, nm_system, quadratic_constraint, BoxBound, ConstraintSystem, QuadraticVerdict,
    StrictInequality, SystemOptions,
};
use logfano_core::feasibility::{
    ample_angle_body, convexity_check, fm_homogeneous_feasible, fourier_motzkin_eliminate, gordan_feasible,
    origin_in_closure, BodyOptions, HomogeneousSystem,
};
use logfano_core::forms::LinearForm;
use logfano_core::lattice::{CenterSpec, DivisorClass, SurfaceModel};
use logfano_core::logpair::{tail_sequence, verify_pullback_formula, LogPair};
use logfano_core::rational::{format_rational, int, primitive_integer_vector, ratio, Rational};
use logfano_core::tailblowup::{
    borderline_shape, budget, classify_tail, cross_derive, verify_tail_lp, verify_tail_lp_uncoupled, LpMatrix,
    TailOptions, TailSequenceSpec, TailVerdict,
};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed of the random solver corpus.
pub const CORPUS_SEED: u64 = 0x6c6f_6766_616e_6f31;
pub const CORPUS_SIZE: usize = 1000;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self { passed, detail: detail.into() }
    }
}

pub struct Check {
    pub number: Option<u8>,
    pub id: &'static str,
    pub statement: &'static str,
    pub limit: Option<Duration>,
    run: fn() -> CheckOutcome,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub number: Option<u8>,
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl CheckResult {
    pub fn line(&self) -> String {
        let tag = self.number.map_or_else(|| "[inv]".to_string(), |n| format!("[{n:>2}]"));
        let limit = self
            .limit
            .map_or_else(String::new, |l| format!(", limit {:.0} s", l.as_secs_f64()));
        format!(
            "{} {tag} {:<18} {} ({:.2} s{limit}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.statement,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

impl Check {
    pub fn run(&self) -> CheckResult {
        let start = Instant::now();
        let outcome = (self.run)();
        let elapsed = start.elapsed();
        let in_time = self.limit.map_or(true, |l| elapsed <= l);
        let mut detail = outcome.detail;
        if !in_time {
            detail.push_str("; over the time limit");
        }
        CheckResult {
            number: self.number,
            id: self.id,
            statement: self.statement,
            passed: outcome.passed && in_time,
            detail,
            elapsed,
            limit: self.limit,
        }
    }
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

pub fn all_checks() -> Vec<Check> {
    vec![
        Check {
            number: Some(1),
            id: "hirzebruch",
            statement: "F_n with boundary Z: closure endpoints {0, 2/n}, n = 1..10",
            limit: secs(1),
            run: hirzebruch_interval,
        },
        Check {
            number: Some(2),
            id: "blowup-plane",
            statement: "Bl_p P2 with L = pullback of H, boundary E: endpoints {0, 1}",
            limit: secs(1),
            run: blown_up_plane,
        },
        Check {
            number: Some(3),
            id: "budget",
            statement: "(K_S + C)^2 = n + 2 - x on (F_n, Z + F), n <= 3, x <= 8",
            limit: secs(1),
            run: budget_law,
        },
        Check {
            number: Some(4),
            id: "adjunction",
            statement: "c_i . (K_S + C) is 0 inside the chain and -1 at its ends",
            limit: None,
            run: adjunction,
        },
        Check {
            number: Some(5),
            id: "pullback",
            statement: "pull-back formula for K_beta, h, v <= 4, n <= 3",
            limit: secs(5),
            run: pullback,
        },
        Check {
            number: Some(6),
            id: "cross-derivation",
            statement: "lattice near-origin rows equal the block matrix, r <= 4, h + v <= 5",
            limit: None,
            run: cross_derivation,
        },
        Check {
            number: Some(7),
            id: "tail-lp",
            statement: "block matrix admits a positive ray, r <= 4, h + v <= 6, c^2 in -3..1",
            limit: secs(30),
            run: tail_lp_sweep,
        },
        Check {
            number: Some(8),
            id: "borderline",
            statement: "at x = budget the square has zero constant, positive only on the ends",
            limit: None,
            run: borderline,
        },
        Check {
            number: Some(9),
            id: "gordan-fm",
            statement: "Gordan solver agrees with Fourier-Motzkin on 1000 random systems",
            limit: secs(60),
            run: gordan_vs_fm,
        },
        Check {
            number: Some(10),
            id: "grid-oracle",
            statement: "origin verdicts agree with a step-1/100 grid scan, dim <= 3",
            limit: secs(30),
            run: grid_oracle,
        },
        Check {
            number: Some(11),
            id: "convexity",
            statement: "500 midpoint trials on 31 bodies",
            limit: None,
            run: convexity,
        },
        Check {
            number: None,
            id: "monotonicity",
            statement: "NotALF_Budget persists under one more tail blow-up",
            limit: None,
            run: monotonicity,
        },
        Check {
            number: None,
            id: "interpolation",
            statement: "ALF endpoints force ALF on every prefix of the sequence",
            limit: None,
            run: interpolation,
        },
    ]
}

/// Runs the checks whose id is in `only` (all when empty). Unknown ids are
/// returned as the error.
pub fn run_checks(only: &[String]) -> Result<Vec<CheckResult>, Vec<String>> {
    let checks = all_checks();
    let unknown: Vec<String> = only
        .iter()
        .filter(|id| !checks.iter().any(|c| c.id == id.as_str()))
        .cloned()
        .collect();
    if !unknown.is_empty() {
        return Err(unknown);
    }
    Ok(checks
        .iter()
        .filter(|c| only.is_empty() || only.iter().any(|id| id == c.id))
        .map(Check::run)
        .collect())
}

fn fn_pair(n: u32) -> LogPair {
    LogPair::from_labels(SurfaceModel::hirzebruch(n), &["Z", "F"]).expect("Z and F are tracked")
}

/// `Z + F + S` on `F_n` with `S ~ Z + nF` the section disjoint from `Z`.
fn three_chain(n: u32) -> LogPair {
    let mut s = SurfaceModel::hirzebruch(n);
    let class = DivisorClass::from_ints(s.tag(), &[1, i64::from(n)]).expect("rank 2");
    s.add_curve("S", class).expect("fresh label");
    LogPair::from_labels(s, &["Z", "F", "S"]).expect("tracked")
}

fn tail_cells(max_total: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=max_total).flat_map(move |t| (0..=t).map(move |v| (t - v, v)))
}

fn hirzebruch_system(n: u32) -> ConstraintSystem {
    let pair = LogPair::from_labels(SurfaceModel::hirzebruch(n), &["Z"]).expect("Z is tracked");
    let options = SystemOptions { box_bound: BoxBound::Orthant, ..SystemOptions::default() };
    nm_system(&pair, &options).expect("valid pair")
}

fn plane_system() -> ConstraintSystem {
    let plane = SurfaceModel::projective_plane();
    let h = plane.curve_by_label("H").expect("tracked");
    let line = plane.curves()[h.0].class.clone();
    let s = plane.blow_up(CenterSpec::smooth_point_of(h)).expect("valid center");
    let bundle = s.pullback(&line).expect("same lattice");
    let pair = LogPair::from_labels(s, &["E1"]).expect("exceptional is tracked");
    let options = SystemOptions { bundle: Some(bundle), box_bound: BoxBound::Orthant, ..SystemOptions::default() };
    nm_system(&pair, &options).expect("valid pair")
}

fn endpoints(sys: &ConstraintSystem) -> Option<Vec<Rational>> {
    ample_angle_body(sys, &BodyOptions::default()).closure_endpoints()
}

fn hirzebruch_interval() -> CheckOutcome {
    for n in 1..=10u32 {
        let got = endpoints(&hirzebruch_system(n));
        let want = vec![int(0), ratio(2, i64::from(n))];
        if got.as_ref() != Some(&want) {
            let shown = got.map_or_else(|| "none".to_string(), |e| e.iter().map(format_rational).collect::<Vec<_>>().join(", "));
            return CheckOutcome::new(false, format!("n = {n}: got {{{shown}}}"));
        }
    }
    CheckOutcome::new(true, "10 intervals exact")
}

fn blown_up_plane() -> CheckOutcome {
    let got = endpoints(&plane_system());
    let ok = got.as_ref() == Some(&vec![int(0), int(1)]);
    let shown = got.map_or_else(|| "none".to_string(), |e| e.iter().map(format_rational).collect::<Vec<_>>().join(", "));
    CheckOutcome::new(ok, format!("endpoints {{{shown}}}"))
}

fn budget_law() -> CheckOutcome {
    let mut cells = 0;
    for n in 0..=3u32 {
        let base = fn_pair(n);
        for (h, v) in tail_cells(8) {
            let pair = tail_sequence(&base, h, v).expect("chain base");
            let got = pair.log_canonical_square();
            let want = int(i64::from(n) + 2 - (h + v) as i64);
            if got != want || budget(&pair) != want {
                return CheckOutcome::new(false, format!("n = {n}, (h, v) = ({h}, {v}): {got}"));
            }
            cells += 1;
        }
    }
    CheckOutcome::new(true, format!("{cells} sequences"))
}

/// Oracle: a chain component meeting one other component is an end.
fn neighbour_counts(pair: &LogPair) -> Vec<usize> {
    let s = pair.surface();
    let classes = pair.classes();
    (0..classes.len())
        .map(|i| {
            (0..classes.len())
                .filter(|&j| j != i && !s.intersect(&classes[i], &classes[j]).expect("same surface").is_zero())
                .count()
        })
        .collect()
}

fn adjunction() -> CheckOutcome {
    let mut cells = 0;
    for n in 0..=3u32 {
        for base in [fn_pair(n), three_chain(n)] {
            for (h, v) in tail_cells(6) {
                let pair = tail_sequence(&base, h, v).expect("chain base");
                let ledger = pair.adjunction_ledger();
                let expected: Vec<Rational> = neighbour_counts(&pair)
                    .into_iter()
                    .map(|c| if c == 1 { int(-1) } else { int(0) })
                    .collect();
                let ends_ok = ledger.first() == Some(&int(-1)) && ledger.last() == Some(&int(-1));
                if ledger != expected || !ends_ok {
                    return CheckOutcome::new(false, format!("n = {n}, (h, v) = ({h}, {v}): {ledger:?}"));
                }
                cells += 1;
            }
        }
    }
    CheckOutcome::new(true, format!("{cells} chains"))
}

fn pullback() -> CheckOutcome {
    let mut cells = 0;
    for n in 0..=3u32 {
        let base = fn_pair(n);
        for h in 0..=4 {
            for v in 0..=4 {
                if !verify_pullback_formula(&base, h, v).unwrap_or(false) {
                    return CheckOutcome::new(false, format!("n = {n}, (h, v) = ({h}, {v})"));
                }
                cells += 1;
            }
        }
    }
    CheckOutcome::new(true, format!("{cells} sequences"))
}

fn cross_bases() -> Vec<(String, LogPair)> {
    let mut out = Vec::new();
    for n in 0..=3u32 {
        let b = fn_pair(n);
        out.push((format!("F_{n}: Z+F"), b.clone()));
        for (h, v) in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)] {
            let rebased = tail_sequence(&b, h, v).expect("chain").rebased();
            out.push((format!("F_{n}: Z+F after ({h}, {v})"), rebased));
        }
        out.push((format!("F_{n}: Z+F+S"), three_chain(n)));
    }
    out
}

/// `delta_2 > (1 - 2 c_r^2) beta_r` after eliminating `delta_1` from the
/// uncoupled matrix with two right tails; the coupled matrix adds
/// `2 beta_{r-1}`.
fn two_right_projection(r: usize, cr: i64, coupled: bool) -> bool {
    let m = if coupled {
        logfano_core::tailblowup::build_lp_matrix(r, 2, 0, cr, cr)
    } else {
        LpMatrix::uncoupled(r, 2, 0, cr, cr)
    }
    .expect("valid shape");
    let layout = m.layout();
    let rows: Vec<StrictInequality> = m
        .forms()
        .into_iter()
        .map(|f| StrictInequality::new(f, logfano_core::constraints::Provenance::Derived))
        .collect();
    let projected = fourier_motzkin_eliminate(&rows, layout.eta(1));
    let k = layout.len();
    let mut want = vec![int(0); k];
    want[layout.eta(2)] = int(1);
    want[layout.beta(r)] = int(2 * cr - 1);
    if coupled && r >= 2 {
        want[layout.beta(r - 1)] += int(2);
    }
    let want = primitive_integer_vector(&want);
    projected
        .iter()
        .any(|row| row.form.constant_term().is_zero() && primitive_integer_vector(&row.form.dense_coefficients(k)) == want)
}

fn cross_derivation() -> CheckOutcome {
    let mut cells = 0;
    for (name, base) in cross_bases() {
        for (h, v) in tail_cells(5).filter(|&(h, v)| h + v > 0) {
            match cross_derive(&base, h, v) {
                Ok(d) if d.matches => cells += 1,
                Ok(d) => {
                    return CheckOutcome::new(false, format!("{name}, (h, v) = ({h}, {v}): {:?}", d.lattice));
                }
                Err(e) => return CheckOutcome::new(false, format!("{name}, (h, v) = ({h}, {v}): {e}")),
            }
        }
    }
    for r in 1..=4 {
        for cr in -3..=1 {
            if !two_right_projection(r, cr, false) || !two_right_projection(r, cr, true) {
                return CheckOutcome::new(false, format!("two right tails, r = {r}, c_r^2 = {cr}"));
            }
        }
    }
    CheckOutcome::new(true, format!("{cells} cells incl. the seven small (h, v); projection for 20 (r, c_r^2)"))
}

fn tail_lp_sweep() -> CheckOutcome {
    let mut cells = 0;
    for r in 1..=4usize {
        for (h, v) in tail_cells(6).filter(|&(h, v)| h + v > 0) {
            for c1 in -3..=1i64 {
                for cr in -3..=1i64 {
                    if r == 1 && c1 != cr {
                        continue;
                    }
                    let coupled = verify_tail_lp(r, h, v, c1, cr).map(|c| c.verified).unwrap_or(false);
                    let uncoupled = verify_tail_lp_uncoupled(r, h, v, c1, cr).map(|c| c.verified).unwrap_or(false);
                    if !coupled || !uncoupled {
                        return CheckOutcome::new(false, format!("r = {r}, (h, v) = ({h}, {v}), c = ({c1}, {cr})"));
                    }
                    cells += 2;
                }
            }
        }
    }
    CheckOutcome::new(true, format!("{cells} matrices with verified witnesses"))
}

fn borderline() -> CheckOutcome {
    let mut cells = 0;
    for n in 0..=3u32 {
        let base = fn_pair(n);
        let x = n as usize + 2;
        for v in 0..=x {
            let h = x - v;
            let pair = tail_sequence(&base, h, v).expect("chain");
            let q = quadratic_constraint(&pair);
            let l = pair.layout();
            let ends = [l.eta(h), l.nu(v)];
            if !borderline_shape(&q, &ends) || classify_quadratic(&q) != QuadraticVerdict::Critical {
                return CheckOutcome::new(false, format!("n = {n}, (h, v) = ({h}, {v}): {}", q.render(|i| l.name(i))));
            }
            cells += 1;
        }
    }
    CheckOutcome::new(true, format!("{cells} sequences at full budget"))
}

/// The deterministic corpus: `k` in 1..=6, `m` in 0..=12, entries in -5..=5.
pub fn random_corpus() -> Vec<HomogeneousSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..CORPUS_SIZE)
        .map(|_| {
            let k = rng.gen_range(1..=6usize);
            let m = rng.gen_range(0..=12usize);
            let cols: Vec<Vec<Rational>> = (0..m)
                .map(|_| (0..k).map(|_| int(rng.gen_range(-5..=5))).collect())
                .collect();
            HomogeneousSystem::from_columns(k, &cols)
        })
        .collect()
}

fn gordan_vs_fm() -> CheckOutcome {
    let mut feasible = 0;
    for (i, sys) in random_corpus().iter().enumerate() {
        let cert = gordan_feasible(sys);
        if !cert.verify(sys) {
            return CheckOutcome::new(false, format!("system {i}: certificate does not verify"));
        }
        if cert.is_feasible() != fm_homogeneous_feasible(sys) {
            return CheckOutcome::new(false, format!("system {i}: solvers disagree"));
        }
        feasible += usize::from(cert.is_feasible());
    }
    CheckOutcome::new(true, format!("{CORPUS_SIZE} agree, {feasible} feasible"))
}

fn homogeneous_constraints(sys: &HomogeneousSystem) -> ConstraintSystem {
    let k = sys.row_count();
    let forms = sys.columns().iter().map(|c| LinearForm::dense(int(0), c));
    ConstraintSystem::from_forms(k, forms)
}

const GRID: i64 = 100;

/// Whether some point of `{1..99}^k / 100` satisfies every row `a . x > 0`.
fn grid_feasible(cols: &[Vec<i64>], k: usize) -> bool {
    let mut g = vec![1i64; k];
    loop {
        if cols.iter().all(|c| c.iter().zip(&g).map(|(a, x)| a * x).sum::<i64>() > 0) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == k {
                return false;
            }
            g[i] += 1;
            if g[i] < GRID {
                break;
            }
            g[i] = 1;
            i += 1;
        }
    }
}

fn to_i64(q: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    q.to_integer().to_i64().expect("small integer entry")
}

/// Scales `x` into the open unit cube.
fn into_unit_cube(x: &[Rational]) -> Vec<Rational> {
    let max = x.iter().map(Signed::abs).max().unwrap_or_else(|| int(0));
    let s = max + int(1);
    x.iter().map(|v| v / &s).collect()
}

fn grid_oracle() -> CheckOutcome {
    let mut homogeneous = 0;
    for (i, hs) in random_corpus().iter().enumerate().filter(|(_, s)| s.row_count() <= 3) {
        let sys = homogeneous_constraints(hs);
        let report = origin_in_closure(&sys);
        if report.contains() {
            let point = report.certificate.as_ref().and_then(|c| c.point()).map(|p| p[..hs.row_count()].to_vec());
            let ok = point.is_some_and(|p| sys.contains(&into_unit_cube(&p)));
            if !ok {
                return CheckOutcome::new(false, format!("system {i}: certificate point fails"));
            }
        }
        let cols: Vec<Vec<i64>> = hs.columns().iter().map(|c| c.iter().map(to_i64).collect()).collect();
        if grid_feasible(&cols, hs.row_count()) && !report.contains() {
            return CheckOutcome::new(false, format!("system {i}: grid point found, verdict false"));
        }
        homogeneous += 1;
    }
    // pair systems: the witness must lie in the open body
    let mut pairs: Vec<(String, ConstraintSystem)> =
        (1..=10).map(|n| (format!("F_{n}: Z"), hirzebruch_system(n))).collect();
    pairs.push(("Bl_p P2: E1".into(), plane_system()));
    for n in 0..=3u32 {
        for (h, v) in [(1, 0), (0, 1)] {
            let pair = tail_sequence(&fn_pair(n), h, v).expect("chain");
            pairs.push((format!("F_{n}: Z+F, ({h}, {v})"), nm_system(&pair, &SystemOptions::default()).expect("valid")));
        }
    }
    for (name, sys) in &pairs {
        let report = origin_in_closure(sys);
        if !report.contains() {
            return CheckOutcome::new(false, format!("{name}: verdict {}", report.verdict.as_str()));
        }
        let ok = report.witness.as_ref().is_some_and(|w| {
            w.iter().all(|x| x.is_positive() && *x < int(1)) && sys.contains(w)
        });
        if !ok {
            return CheckOutcome::new(false, format!("{name}: witness outside the body"));
        }
    }
    CheckOutcome::new(true, format!("{homogeneous} homogeneous systems, {} pair systems", pairs.len()))
}

fn sweep_bodies(count: usize) -> Vec<(String, ConstraintSystem)> {
    let mut out = Vec::new();
    for n in 0..=3u32 {
        let base = fn_pair(n);
        for (h, v) in tail_cells(n as usize + 2).filter(|&(h, v)| h + v > 0) {
            if out.len() == count {
                return out;
            }
            let pair = tail_sequence(&base, h, v).expect("chain");
            out.push((format!("F_{n}: Z+F, ({h}, {v})"), nm_system(&pair, &SystemOptions::default()).expect("valid")));
        }
    }
    out
}

fn convexity() -> CheckOutcome {
    let mut bodies: Vec<(String, ConstraintSystem)> =
        (1..=10).map(|n| (format!("F_{n}: Z"), hirzebruch_system(n))).collect();
    bodies.push(("Bl_p P2: E1".into(), plane_system()));
    bodies.extend(sweep_bodies(20));
    let mut smallest_pool = usize::MAX;
    for (name, sys) in &bodies {
        let report = convexity_check(sys, 500);
        if !report.passed || report.trials != 500 || report.pool_size < 2 {
            return CheckOutcome::new(
                false,
                format!("{name}: passed {}, trials {}, pool {}", report.passed, report.trials, report.pool_size),
            );
        }
        smallest_pool = smallest_pool.min(report.pool_size);
    }
    CheckOutcome::new(true, format!("{} bodies, smallest pool {smallest_pool}", bodies.len()))
}

fn disjoint_sections(n: u32) -> LogPair {
    let mut s = SurfaceModel::hirzebruch(n);
    let class = DivisorClass::from_ints(s.tag(), &[1, i64::from(n)]).expect("rank 2");
    s.add_curve("S", class).expect("fresh label");
    LogPair::from_labels(s, &["Z", "S"]).expect("tracked")
}

fn verdict(base: &LogPair, h: usize, v: usize) -> Result<TailVerdict, String> {
    classify_tail(&TailSequenceSpec::new(base.clone(), h, v), &[], &TailOptions::default())
        .map(|r| r.verdict)
        .map_err(|e| e.to_string())
}

fn monotonicity() -> CheckOutcome {
    let mut rejected = 0;
    for n in 0..=3u32 {
        for base in [fn_pair(n), disjoint_sections(n)] {
            for (h, v) in tail_cells(6) {
                match verdict(&base, h, v) {
                    Ok(TailVerdict::NotAlfBudget) => {}
                    Ok(_) => continue,
                    Err(e) => return CheckOutcome::new(false, e),
                }
                for (a, b) in [(h + 1, v), (h, v + 1)] {
                    if verdict(&base, a, b) != Ok(TailVerdict::NotAlfBudget) {
                        return CheckOutcome::new(false, format!("n = {n}: ({h}, {v}) rejected but ({a}, {b}) not"));
                    }
                }
                rejected += 1;
            }
        }
    }
    CheckOutcome::new(true, format!("{rejected} rejected cells stay rejected"))
}

fn interpolation() -> CheckOutcome {
    let mut checked = 0;
    for n in 0..=3u32 {
        let base = fn_pair(n);
        let x = n as usize + 2;
        let mut table = std::collections::BTreeMap::new();
        for (h, v) in tail_cells(x) {
            match verdict(&base, h, v) {
                Ok(t) => table.insert((h, v), t.is_alf()),
                Err(e) => return CheckOutcome::new(false, e),
            };
        }
        if !table[&(0, 0)] {
            continue;
        }
        for (&(h, v), &alf) in &table {
            if !alf {
                continue;
            }
            let prefixes = (0..=h).map(|i| (i, 0)).chain((0..=v).map(|j| (h, j)));
            for p in prefixes {
                if !table[&p] {
                    return CheckOutcome::new(false, format!("n = {n}: ({h}, {v}) ALF but prefix {p:?} not"));
                }
            }
            checked += 1;
        }
    }
    CheckOutcome::new(true, format!("{checked} ALF sequences"))
}
