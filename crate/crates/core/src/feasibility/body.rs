//! Near-origin verdicts, bodies of ample angles and the convexity check.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::polytope::{closure_rays, closure_vertices};
use super::sampling::{dyadic, halton_point};
use super::{gordan_feasible, FeasibilityCertificate, HomogeneousSystem};
use crate::constraints::{
    classify_quadratic, near_origin_reduce, ConstraintSystem, NearOrigin, QuadraticVerdict,
    StrictInequality,
};
use crate::forms::QuadraticForm;
use crate::rational::{format_rational, int, primitive_integer_vector, sign, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureVerdict {
    Contains,
    Excludes,
    /// The quadratic could not be resolved along any tried ray.
    Undetermined,
}

impl ClosureVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ClosureVerdict::Contains => "contains",
            ClosureVerdict::Excludes => "excludes",
            ClosureVerdict::Undetermined => "undetermined",
        }
    }
}

/// Evidence for `0` lying (or not) in the closure of a constraint system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OriginReport {
    pub verdict: ClosureVerdict,
    /// The homogeneous near-origin system with orthant columns; the
    /// certificate refers to it.
    pub system: Option<HomogeneousSystem>,
    pub kept: Vec<StrictInequality>,
    pub certificate: Option<FeasibilityCertificate>,
    /// A row with negative (or zero) constant and no way around it.
    pub blocking_row: Option<StrictInequality>,
    pub quadratic: Option<QuadraticVerdict>,
    /// Direction along which the verdict was established.
    pub ray: Option<Vec<Rational>>,
    /// A point of the open body on that ray, if one was found.
    pub witness: Option<Vec<Rational>>,
    pub dropped: usize,
    pub note: String,
}

impl OriginReport {
    pub fn contains(&self) -> bool {
        self.verdict == ClosureVerdict::Contains
    }

    fn excluded(note: String) -> Self {
        Self {
            verdict: ClosureVerdict::Excludes,
            system: None,
            kept: Vec::new(),
            certificate: None,
            blocking_row: None,
            quadratic: None,
            ray: None,
            witness: None,
            dropped: 0,
            note,
        }
    }
}

fn perturbed_rays(base: &[Rational], count: usize) -> Vec<Vec<Rational>> {
    let k = base.len();
    if k == 0 {
        return Vec::new();
    }
    (0..count)
        .map(|i| {
            let mut d = base.to_vec();
            let step = dyadic((1 + i / k) as u32);
            d[i % k] += &step;
            primitive_integer_vector(&d)
        })
        .collect()
}

/// Decides whether the origin lies in the closure of the open body.
///
/// Rows with positive constants are dropped; the remaining homogeneous rows
/// plus the orthant go to the Gordan solver. A quadratic with zero constant
/// term is resolved along rays: first by asking for a ray on which its
/// linear part is positive, then by checking the second-order term on the
/// certificate ray and up to eight perturbations of it.
pub fn origin_in_closure(sys: &ConstraintSystem) -> OriginReport {
    let (hs, kept, dropped) = match near_origin_reduce(sys) {
        NearOrigin::Infeasible(row) => {
            let note = format!("{} fails near the origin", row.provenance.describe());
            let mut report = OriginReport::excluded(note);
            report.blocking_row = Some(row);
            return report;
        }
        NearOrigin::Reduced { system, kept, dropped } => (system.with_orthant(), kept, dropped),
    };
    let cert = gordan_feasible(&hs);
    let mut report = OriginReport {
        verdict: ClosureVerdict::Excludes,
        system: Some(hs.clone()),
        kept,
        certificate: Some(cert.clone()),
        blocking_row: None,
        quadratic: None,
        ray: None,
        witness: None,
        dropped,
        note: String::new(),
    };
    let Some(x) = cert.point().map(<[Rational]>::to_vec) else {
        report.note = String::from("homogeneous rows admit no common positive ray");
        return report;
    };

    let ray = match &sys.quadratic {
        None => Some(x.clone()),
        Some(q) => {
            let verdict = classify_quadratic(q);
            report.quadratic = Some(verdict);
            match verdict {
                QuadraticVerdict::Subcritical | QuadraticVerdict::Critical => Some(x.clone()),
                QuadraticVerdict::Supercritical => {
                    report.note = String::from("self-intersection is negative at the origin");
                    return report;
                }
                QuadraticVerdict::General => resolve_general(&hs, q, &x, &mut report.note),
            }
        }
    };
    let Some(ray) = ray else {
        report.verdict = ClosureVerdict::Undetermined;
        report.ray = Some(x);
        return report;
    };
    report.verdict = ClosureVerdict::Contains;
    report.witness = witness_on_ray(sys, &ray);
    report.ray = Some(ray);
    if report.note.is_empty() {
        report.note = interval_note(sys).unwrap_or_default();
    }
    report
}

fn resolve_general(
    hs: &HomogeneousSystem,
    q: &QuadraticForm,
    x: &[Rational],
    note: &mut String,
) -> Option<Vec<Rational>> {
    let k = hs.row_count();
    let linear = q.linear_part();
    if !linear.is_constant() {
        let mut extended = hs.clone();
        extended.push_column(linear.dense_coefficients(k));
        if let FeasibilityCertificate::Feasible { point } = gordan_feasible(&extended) {
            *note = String::from("linear part of the self-intersection is positive along the ray");
            return Some(point);
        }
    }
    let mut rays = vec![x.to_vec()];
    rays.extend(perturbed_rays(x, 8));
    for d in rays {
        if !hs.is_satisfied_by(&d) {
            continue;
        }
        let [_, c1, c2] = q.along_ray(&d);
        if c1.is_positive() || (c1.is_zero() && c2.is_positive()) {
            *note = String::from("self-intersection positive to second order along the ray");
            return Some(d);
        }
    }
    *note = String::from("self-intersection unresolved along the certificate ray and 8 perturbations");
    None
}

/// Halves `t` until `t * ray` (scaled into the box) lies in the open body.
fn witness_on_ray(sys: &ConstraintSystem, ray: &[Rational]) -> Option<Vec<Rational>> {
    let top = ray.iter().cloned().fold(Rational::one(), |a, b| if b > a { b } else { a });
    let unit = &int(1) / &(top + int(1));
    for j in 0..=256u32 {
        let t = &unit * dyadic(j);
        let p: Vec<Rational> = ray.iter().map(|x| x * &t).collect();
        if sys.contains(&p) {
            return Some(p);
        }
    }
    None
}

/// For one angle, renders the closure of the linear part as an interval
/// when the quadratic does not cut it.
fn interval_note(sys: &ConstraintSystem) -> Option<String> {
    if sys.angle_count() != 1 {
        return None;
    }
    let rows = sys.full_linear();
    let ends = closure_vertices(&rows, 1);
    let lo = ends.first()?[0].clone();
    let hi = if closure_rays(&rows, 1).iter().any(|r| r[0].is_positive()) {
        None
    } else {
        Some(ends.last()?[0].clone())
    };
    let hi_text = hi.as_ref().map_or_else(|| String::from("inf"), format_rational);
    if let (Some(q), Some(hi)) = (&sys.quadratic, &hi) {
        let concave = !q.quadratic_terms().any(|(_, c)| c.is_positive());
        let ql = q.eval(&[lo.clone()]);
        let qh = q.eval(&[hi.clone()]);
        if !(concave && !ql.is_negative() && !qh.is_negative() && !(ql.is_zero() && qh.is_zero())) {
            return Some(format!(
                "linear closure [{}, {}]; the self-intersection cuts it",
                format_rational(&lo),
                hi_text
            ));
        }
    }
    Some(format!("interval ({}, {})", format_rational(&lo), hi_text))
}

/// A point with the sign of the quadratic there (`None` without quadratic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedPoint {
    pub point: Vec<Rational>,
    pub quadratic_sign: Option<i8>,
}

impl AnnotatedPoint {
    fn new(point: Vec<Rational>, q: Option<&QuadraticForm>) -> Self {
        let quadratic_sign = q.map(|q| sign(&q.eval(&point)));
        Self { point, quadratic_sign }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BodyOptions {
    /// Largest dimension for exact vertex enumeration.
    pub vertex_dimension_limit: usize,
    /// Number of sample points kept in higher dimensions.
    pub sample_count: usize,
    /// Sampling scales `1/2^j` for `j < sample_levels`.
    pub sample_levels: u32,
}

impl Default for BodyOptions {
    fn default() -> Self {
        Self { vertex_dimension_limit: 4, sample_count: 64, sample_levels: 8 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmpleAngleBody {
    pub dimension: usize,
    /// Strict H-description: system rows, orthant and box.
    pub constraints: Vec<StrictInequality>,
    pub quadratic: Option<QuadraticForm>,
    /// Whether the open linear body is nonempty.
    pub nonempty: bool,
    /// Gordan certificate for the system homogenized by `t > 0` (last
    /// coordinate).
    pub open_certificate: FeasibilityCertificate,
    pub homogenized: HomogeneousSystem,
    /// Vertices of the closure, for small dimensions.
    pub vertices: Option<Vec<AnnotatedPoint>>,
    /// Recession rays of the closure (nonempty only without a box).
    pub rays: Vec<Vec<Rational>>,
    /// Points of the open linear body.
    pub samples: Vec<AnnotatedPoint>,
}

impl AmpleAngleBody {
    pub fn is_empty(&self) -> bool {
        !self.nonempty
    }

    /// Sorted vertex coordinates of a one-dimensional body.
    pub fn closure_endpoints(&self) -> Option<Vec<Rational>> {
        if self.dimension != 1 {
            return None;
        }
        self.vertices
            .as_ref()
            .map(|vs| vs.iter().map(|v| v.point[0].clone()).collect())
    }
}

/// Encodes `f_i(beta) > 0` as `x . A > 0` in `x = (beta, t)` with `t > 0`.
pub fn homogenize(rows: &[StrictInequality], dim: usize) -> HomogeneousSystem {
    let mut hs = HomogeneousSystem::new(dim + 1);
    for r in rows {
        let mut col = r.form.dense_coefficients(dim);
        col.push(r.form.constant_term().clone());
        hs.push_column(col);
    }
    let mut t = vec![Rational::zero(); dim + 1];
    t[dim] = Rational::one();
    hs.push_column(t);
    hs
}

pub fn ample_angle_body(sys: &ConstraintSystem, options: &BodyOptions) -> AmpleAngleBody {
    let k = sys.angle_count();
    let constraints = sys.full_linear();
    let homogenized = homogenize(&constraints, k);
    let open_certificate = gordan_feasible(&homogenized);
    let q = sys.quadratic.as_ref();
    let mut body = AmpleAngleBody {
        dimension: k,
        constraints,
        quadratic: sys.quadratic.clone(),
        nonempty: open_certificate.is_feasible(),
        open_certificate: open_certificate.clone(),
        homogenized,
        vertices: None,
        rays: Vec::new(),
        samples: Vec::new(),
    };
    let Some(x) = open_certificate.point() else {
        return body;
    };
    if k <= options.vertex_dimension_limit {
        body.vertices = Some(
            closure_vertices(&body.constraints, k)
                .into_iter()
                .map(|v| AnnotatedPoint::new(v, q))
                .collect(),
        );
        body.rays = closure_rays(&body.constraints, k);
        return body;
    }
    let interior: Vec<Rational> = x[..k].iter().map(|v| v / &x[k]).collect();
    body.samples.push(AnnotatedPoint::new(interior, q));
    for p in sample_pool(sys, options.sample_levels, options.sample_count, false) {
        if body.samples.len() >= options.sample_count {
            break;
        }
        body.samples.push(AnnotatedPoint::new(p, q));
    }
    body
}

/// Up to `per_level` Halton points of the open body at each scale
/// `upper / 2^j`, with the quadratic enforced when `with_quadratic` is set.
fn sample_levels(sys: &ConstraintSystem, levels: u32, per_level: usize, with_quadratic: bool) -> Vec<Vec<Vec<Rational>>> {
    let k = sys.angle_count();
    let upper = sys.box_bound.upper().unwrap_or_else(|| int(1));
    let attempts = per_level * 8;
    (0..levels)
        .map(|j| {
            let scale = &upper * dyadic(j);
            let mut level = Vec::new();
            for i in 0..attempts {
                if level.len() == per_level {
                    break;
                }
                let index = (j as usize * attempts + i) as u64;
                let p: Vec<Rational> = halton_point(index, k).into_iter().map(|v| v * &scale).collect();
                let ok = if with_quadratic { sys.contains(&p) } else { sys.contains_linear(&p) };
                if ok {
                    level.push(p);
                }
            }
            level
        })
        .collect()
}

fn sample_pool(sys: &ConstraintSystem, levels: u32, per_level: usize, with_quadratic: bool) -> Vec<Vec<Rational>> {
    sample_levels(sys, levels, per_level, with_quadratic).into_iter().flatten().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityReport {
    pub passed: bool,
    pub trials: usize,
    /// Number of feasible points the pairs were drawn from.
    pub pool_size: usize,
    pub counterexample: Option<(Vec<Rational>, Vec<Rational>)>,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Checks midpoints of `trials` pairs of feasible points (quadratic
/// included). Points come from a Halton pool at several scales; most pairs
/// are drawn within one scale, every fourth across the whole pool.
pub fn convexity_check(sys: &ConstraintSystem, trials: usize) -> ConvexityReport {
    let levels: Vec<Vec<Vec<Rational>>> = sample_levels(sys, 8, 48, true)
        .into_iter()
        .filter(|l| l.len() >= 2)
        .collect();
    let pool: Vec<&Vec<Rational>> = levels.iter().flatten().collect();
    let mut report = ConvexityReport { passed: true, trials: 0, pool_size: pool.len(), counterexample: None };
    if levels.is_empty() {
        return report;
    }
    let half = Rational::new(1.into(), 2.into());
    for t in 0..trials {
        let r = splitmix(t as u64);
        let (a, b) = if t % 4 == 3 {
            let n = pool.len() as u64;
            (pool[(r % n) as usize], pool[((r >> 32) % n) as usize])
        } else {
            let level = &levels[(t / 4 * 3 + t % 4) % levels.len()];
            let n = level.len() as u64;
            (&level[(r % n) as usize], &level[((r >> 32) % n) as usize])
        };
        report.trials += 1;
        let mid: Vec<Rational> = a.iter().zip(b).map(|(u, v)| (u + v) * &half).collect();
        if !sys.contains(&mid) {
            report.passed = false;
            report.counterexample = Some((a.clone(), b.clone()));
            return report;
        }
    }
    report
}
