//! Nakai–Moishezon constraint systems in the angle vector.
//!
//! A class `P_beta` (usually `-K_beta`) is ample iff `P_beta^2 > 0` and
//! `P_beta . Z > 0` for every irreducible curve `Z`. The curve side is
//! truncated to the boundary components, a built-in catalog of tracked curves
//! and whatever the caller supplies; every system records which curves it
//! was built from.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::feasibility::HomogeneousSystem;
use crate::forms::{AngleLayout, LinearForm, QuadraticForm};
use crate::lattice::{CurveKind, DivisorClass, LatticeError};
use crate::logpair::{AngleClass, LogPair};
use crate::rational::{int, Rational};

/// Where an inequality came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Intersection with the boundary component carrying this angle.
    Boundary { angle: usize, label: String },
    /// Intersection with a built-in catalog curve.
    Catalog(String),
    /// Intersection with a caller-supplied curve.
    UserCurve(String),
    /// `bound - beta_i > 0`.
    Box(usize),
    /// `beta_i > 0`.
    Orthant(usize),
    /// Positive combination produced by elimination.
    Derived,
}

impl Provenance {
    pub fn describe(&self) -> String {
        match self {
            Provenance::Boundary { label, .. } => alloc::format!("boundary:{label}"),
            Provenance::Catalog(l) => alloc::format!("catalog:{l}"),
            Provenance::UserCurve(l) => alloc::format!("curve:{l}"),
            Provenance::Box(i) => alloc::format!("box:{i}"),
            Provenance::Orthant(i) => alloc::format!("orthant:{i}"),
            Provenance::Derived => "derived".to_string(),
        }
    }
}

/// `form(beta) > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictInequality {
    pub form: LinearForm,
    pub provenance: Provenance,
}

impl StrictInequality {
    pub fn new(form: LinearForm, provenance: Provenance) -> Self {
        Self { form, provenance }
    }

    pub fn holds_at(&self, beta: &[Rational]) -> bool {
        self.form.eval(beta).is_positive()
    }
}

/// Upper bound on each angle for full-body computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoxBound {
    /// `beta_i < 1`.
    Unit,
    /// `beta_i < b`.
    Bound(Rational),
    /// No upper bound: the whole positive orthant.
    Orthant,
}

impl BoxBound {
    pub fn upper(&self) -> Option<Rational> {
        match self {
            BoxBound::Unit => Some(int(1)),
            BoxBound::Bound(b) => Some(b.clone()),
            BoxBound::Orthant => None,
        }
    }
}

/// Strict linear inequalities plus an optional quadratic `q > 0`.
///
/// Positivity `beta_i > 0` is always implied; box constraints are generated
/// from `box_bound` on demand and never enter near-origin questions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub layout: AngleLayout,
    pub linear: Vec<StrictInequality>,
    pub quadratic: Option<QuadraticForm>,
    pub box_bound: BoxBound,
    /// Labels of the non-boundary curves the system was built against.
    pub curve_list: Vec<String>,
}

impl ConstraintSystem {
    pub fn new(layout: AngleLayout) -> Self {
        Self {
            layout,
            linear: Vec::new(),
            quadratic: None,
            box_bound: BoxBound::Unit,
            curve_list: Vec::new(),
        }
    }

    /// A linear-only system in `count` plain angles.
    pub fn from_forms(count: usize, forms: impl IntoIterator<Item = LinearForm>) -> Self {
        let mut sys = Self::new(AngleLayout::plain(count));
        sys.linear = forms
            .into_iter()
            .map(|f| StrictInequality::new(f, Provenance::Derived))
            .collect();
        sys
    }

    pub fn angle_count(&self) -> usize {
        self.layout.len()
    }

    pub fn with_box(mut self, bound: BoxBound) -> Self {
        self.box_bound = bound;
        self
    }

    pub fn with_quadratic(mut self, q: QuadraticForm) -> Self {
        self.quadratic = Some(q);
        self
    }

    pub fn orthant_constraints(&self) -> Vec<StrictInequality> {
        (0..self.angle_count())
            .map(|i| StrictInequality::new(LinearForm::variable(i), Provenance::Orthant(i)))
            .collect()
    }

    pub fn box_constraints(&self) -> Vec<StrictInequality> {
        let Some(upper) = self.box_bound.upper() else {
            return Vec::new();
        };
        (0..self.angle_count())
            .map(|i| {
                StrictInequality::new(
                    LinearForm::from_parts(upper.clone(), [(i, int(-1))]),
                    Provenance::Box(i),
                )
            })
            .collect()
    }

    /// Linear constraints together with orthant and box constraints.
    pub fn full_linear(&self) -> Vec<StrictInequality> {
        let mut all = self.linear.clone();
        all.extend(self.orthant_constraints());
        all.extend(self.box_constraints());
        all
    }

    /// Membership in the open body: every strict constraint, the box, and
    /// the quadratic when present.
    pub fn contains(&self, beta: &[Rational]) -> bool {
        beta.len() == self.angle_count()
            && self.full_linear().iter().all(|c| c.holds_at(beta))
            && self
                .quadratic
                .as_ref()
                .is_none_or(|q| q.eval(beta).is_positive())
    }

    /// Membership ignoring the quadratic.
    pub fn contains_linear(&self, beta: &[Rational]) -> bool {
        beta.len() == self.angle_count() && self.full_linear().iter().all(|c| c.holds_at(beta))
    }
}

/// `P . C_i > 0` for every boundary component.
pub fn boundary_constraints(
    pair: &LogPair,
    positive: &AngleClass,
) -> Result<Vec<StrictInequality>, LatticeError> {
    pair.indexed_components()
        .map(|(angle, comp)| {
            let form = positive.intersect_with_class(pair.surface(), pair.component_class(comp))?;
            Ok(StrictInequality::new(
                form,
                Provenance::Boundary {
                    angle,
                    label: pair.component_label(comp).to_string(),
                },
            ))
        })
        .collect()
}

/// How a curve entered a constraint system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveSource {
    Catalog,
    User,
}

/// A labelled curve class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledCurve {
    pub label: String,
    pub class: DivisorClass,
}

impl LabeledCurve {
    pub fn new(label: impl Into<String>, class: DivisorClass) -> Self {
        Self {
            label: label.into(),
            class,
        }
    }
}

/// `P . Z > 0` for every supplied curve.
pub fn curve_constraints(
    pair: &LogPair,
    positive: &AngleClass,
    curves: &[LabeledCurve],
    source: CurveSource,
) -> Result<Vec<StrictInequality>, LatticeError> {
    curves
        .iter()
        .map(|c| {
            let form = positive.intersect_with_class(pair.surface(), &c.class)?;
            let provenance = match source {
                CurveSource::Catalog => Provenance::Catalog(c.label.clone()),
                CurveSource::User => Provenance::UserCurve(c.label.clone()),
            };
            Ok(StrictInequality::new(form, provenance))
        })
        .collect()
}

/// Built-in curve catalog: every tracked curve that is not a boundary
/// component (the section `Z_n`, the fibers or lines through blow-up
/// centers, exceptional curves), plus a general member of the base pencil.
pub fn catalog_curves(pair: &LogPair) -> Vec<LabeledCurve> {
    let surface = pair.surface();
    let mut out: Vec<LabeledCurve> = surface
        .curves()
        .iter()
        .enumerate()
        .filter(|(i, _)| !pair.contains_curve(crate::lattice::CurveId(*i)))
        .filter(|(_, c)| c.kind != CurveKind::User)
        .map(|(_, c)| LabeledCurve::new(c.label.clone(), c.class.clone()))
        .collect();
    let generic = match surface.base() {
        crate::lattice::BaseSurface::ProjectivePlane => "H(general)",
        crate::lattice::BaseSurface::Hirzebruch(_) => "F(general)",
    };
    out.push(LabeledCurve::new(generic, surface.generic_ruling()));
    out
}

/// `K_beta^2`, the self-intersection of `-K_beta` (positivity orientation).
pub fn quadratic_constraint(pair: &LogPair) -> QuadraticForm {
    pair.log_canonical_class().square(pair.surface())
}

/// Options for building a full Nakai–Moishezon system.
#[derive(Debug, Clone)]
pub struct SystemOptions {
    /// `None` means the anticanonical class.
    pub bundle: Option<DivisorClass>,
    pub include_catalog: bool,
    pub include_quadratic: bool,
    pub extra_curves: Vec<LabeledCurve>,
    pub box_bound: BoxBound,
}

impl Default for SystemOptions {
    fn default() -> Self {
        Self {
            bundle: None,
            include_catalog: true,
            include_quadratic: true,
            extra_curves: Vec::new(),
            box_bound: BoxBound::Unit,
        }
    }
}

/// Nakai–Moishezon system for `bundle - sum (1 - beta_i) C_i` (default
/// bundle `-K_S`).
pub fn nm_system(pair: &LogPair, options: &SystemOptions) -> Result<ConstraintSystem, LatticeError> {
    let positive = match &options.bundle {
        Some(l) => pair.twisted_class(l).map_err(|e| match e {
            crate::logpair::PairError::Lattice(l) => l,
            other => LatticeError::InvalidCenter(other.to_string()),
        })?,
        None => pair.log_canonical_class().negate(),
    };
    let mut sys = ConstraintSystem::new(pair.layout()).with_box(options.box_bound.clone());
    sys.linear = boundary_constraints(pair, &positive)?;
    if options.include_catalog {
        let catalog = catalog_curves(pair);
        sys.linear
            .extend(curve_constraints(pair, &positive, &catalog, CurveSource::Catalog)?);
        sys.curve_list.extend(catalog.into_iter().map(|c| c.label));
    }
    sys.linear.extend(curve_constraints(
        pair,
        &positive,
        &options.extra_curves,
        CurveSource::User,
    )?);
    sys.curve_list
        .extend(options.extra_curves.iter().map(|c| c.label.clone()));
    if options.include_quadratic {
        sys.quadratic = Some(positive.square(pair.surface()));
    }
    Ok(sys)
}

/// Near-origin behaviour of the self-intersection constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadraticVerdict {
    /// Positive constant term: vacuous near the origin.
    Subcritical,
    /// Zero constant term, linear part with a positive and no negative
    /// coefficient: satisfiable together with any linear constraints.
    Critical,
    /// Negative constant term: fails near the origin.
    Supercritical,
    /// Zero constant term with mixed linear signs; needs a ray check.
    General,
}

impl QuadraticVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            QuadraticVerdict::Subcritical => "subcritical",
            QuadraticVerdict::Critical => "critical",
            QuadraticVerdict::Supercritical => "supercritical",
            QuadraticVerdict::General => "general",
        }
    }
}

pub fn classify_quadratic(q: &QuadraticForm) -> QuadraticVerdict {
    let c = q.constant_term();
    if c.is_positive() {
        return QuadraticVerdict::Subcritical;
    }
    if c.is_negative() {
        return QuadraticVerdict::Supercritical;
    }
    let any_positive = q.linear_terms().any(|(_, v)| v.is_positive());
    let any_negative = q.linear_terms().any(|(_, v)| v.is_negative());
    if any_positive && !any_negative {
        QuadraticVerdict::Critical
    } else {
        QuadraticVerdict::General
    }
}

/// Result of discarding constraints that are vacuous near the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NearOrigin {
    /// Rows with zero constant term, as a homogeneous system (orthant not
    /// yet included), with the provenance of each column.
    Reduced {
        system: HomogeneousSystem,
        kept: Vec<StrictInequality>,
        dropped: usize,
    },
    /// A row that fails arbitrarily close to the origin.
    Infeasible(StrictInequality),
}

/// Drops rows with positive constants and reports any row whose constant is
/// negative (or a zero row, which reads `0 > 0`).
pub fn near_origin_reduce(sys: &ConstraintSystem) -> NearOrigin {
    let k = sys.angle_count();
    let mut kept = Vec::new();
    let mut dropped = 0;
    for row in &sys.linear {
        let c = row.form.constant_term();
        if c.is_positive() {
            dropped += 1;
        } else if c.is_negative() || row.form.is_constant() {
            return NearOrigin::Infeasible(row.clone());
        } else {
            kept.push(row.clone());
        }
    }
    let columns: Vec<Vec<Rational>> = kept
        .iter()
        .map(|row| row.form.dense_coefficients(k))
        .collect();
    NearOrigin::Reduced {
        system: HomogeneousSystem::from_columns(k, &columns),
        kept,
        dropped,
    }
}

/// Drops exact duplicates and rows that are positive multiples of a
/// stronger row with the same direction.
pub fn remove_duplicate_rows(rows: Vec<StrictInequality>) -> Vec<StrictInequality> {
    let mut out: Vec<StrictInequality> = Vec::new();
    for row in rows {
        if !out.iter().any(|r| r.form == row.form) {
            out.push(row);
        }
    }
    out
}

/// Sum of a row's coefficient magnitudes; handy for report ordering.
pub fn row_weight(row: &StrictInequality) -> Rational {
    row.form
        .terms()
        .fold(Rational::zero(), |acc, (_, c)| acc + c.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SurfaceModel;
    use crate::logpair::tail_sequence;
    use crate::rational::ratio;

    fn fn_pair(n: u32) -> LogPair {
        LogPair::from_labels(SurfaceModel::hirzebruch(n), &["Z", "F"]).unwrap()
    }

    fn minus_k(pair: &LogPair) -> AngleClass {
        pair.log_canonical_class().negate()
    }

    fn boundary_row(pair: &LogPair, label: &str) -> LinearForm {
        boundary_constraints(pair, &minus_k(pair))
            .unwrap()
            .into_iter()
            .find(|r| matches!(&r.provenance, Provenance::Boundary { label: l, .. } if l == label))
            .unwrap()
            .form
    }

    #[test]
    fn left_tail_rows() {
        // v = 3 left blow-ups on c_1 = Z of F_2
        let pair = tail_sequence(&fn_pair(2), 0, 3).unwrap();
        let l = pair.layout();
        let c1_sq = int(-2);
        // old tail: gamma_1 + (c_1^2 - 1) beta_1 + beta_2
        assert_eq!(
            boundary_row(&pair, "Z"),
            LinearForm::from_parts(int(0), [(l.nu(1), int(1)), (l.beta(1), &c1_sq - int(1)), (l.beta(2), int(1))])
        );
        // interior new curves V_j: gamma_{j+1} - 2 gamma_j + gamma_{j-1}
        for (label, j) in [("E1", 1), ("E2", 2)] {
            assert_eq!(
                boundary_row(&pair, label),
                LinearForm::from_parts(int(0), [(l.nu(j + 1), int(1)), (l.nu(j), int(-2)), (l.nu(j - 1), int(1))])
            );
        }
        assert_eq!(
            boundary_row(&pair, "E3"),
            LinearForm::from_parts(int(1), [(l.nu(3), int(-1)), (l.nu(2), int(1))])
        );
    }

    #[test]
    fn catalog_fiber_through_center() {
        let pair = tail_sequence(&fn_pair(1), 0, 1).unwrap();
        let sys = nm_system(&pair, &SystemOptions::default()).unwrap();
        let fiber = sys
            .linear
            .iter()
            .find(|r| r.provenance == Provenance::Catalog("F_E1".into()))
            .unwrap();
        assert!(fiber.form.is_homogeneous());
        assert_eq!(fiber.form, LinearForm::variable(pair.layout().nu(1)));
        let generic = sys
            .linear
            .iter()
            .find(|r| r.provenance == Provenance::Catalog("F(general)".into()))
            .unwrap();
        assert!(generic.form.constant_term().is_positive());
        assert!(curve_constraints(&pair, &minus_k(&pair), &[], CurveSource::User)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn quadratic_constants_follow_budget() {
        for n in 0..4u32 {
            let base = fn_pair(n);
            let budget = i64::from(n) + 2;
            assert_eq!(*quadratic_constraint(&base).constant_term(), int(budget));
            let crit = tail_sequence(&base, budget as usize, 0).unwrap();
            assert_eq!(*quadratic_constraint(&crit).constant_term(), int(0));
            let sup = tail_sequence(&base, budget as usize, 1).unwrap();
            assert_eq!(*quadratic_constraint(&sup).constant_term(), int(-1));
        }
    }

    #[test]
    fn quadratic_verdicts() {
        assert_eq!(classify_quadratic(&QuadraticForm::constant(int(3))), QuadraticVerdict::Subcritical);
        assert_eq!(classify_quadratic(&QuadraticForm::constant(int(-1))), QuadraticVerdict::Supercritical);
        let mut crit = QuadraticForm::default();
        crit.add_linear(2, int(2));
        crit.add_linear(4, int(2));
        crit.add_quadratic(0, 0, int(-3));
        assert_eq!(classify_quadratic(&crit), QuadraticVerdict::Critical);
        crit.add_linear(1, int(-1));
        assert_eq!(classify_quadratic(&crit), QuadraticVerdict::General);
    }

    #[test]
    fn near_origin_reduction() {
        let drop = LinearForm::from_parts(int(1), [(0, int(-1)), (1, int(1))]);
        let keep = LinearForm::from_parts(int(0), [(0, int(1)), (1, int(-1))]);
        let sys = ConstraintSystem::from_forms(2, [drop, keep.clone()]);
        match near_origin_reduce(&sys) {
            NearOrigin::Reduced { kept, dropped, system } => {
                assert_eq!(dropped, 1);
                assert_eq!(kept.len(), 1);
                assert_eq!(kept[0].form, keep);
                assert_eq!(system.column_count(), 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        let bad = ConstraintSystem::from_forms(1, [LinearForm::from_parts(int(-1), [(0, int(1))])]);
        assert!(matches!(near_origin_reduce(&bad), NearOrigin::Infeasible(_)));
        let zero = ConstraintSystem::from_forms(1, [LinearForm::zero()]);
        assert!(matches!(near_origin_reduce(&zero), NearOrigin::Infeasible(_)));
    }

    #[test]
    fn generated_rows_match_lattice_evaluation() {
        let pair = tail_sequence(&fn_pair(3), 2, 2).unwrap();
        let sys = nm_system(&pair, &SystemOptions::default()).unwrap();
        let beta: Vec<Rational> = (0..pair.angle_count()).map(|i| ratio(1, 3 + i as i64)).collect();
        let fixed = minus_k(&pair).eval(&beta);
        let s = pair.surface();
        for (row, comp) in sys.linear.iter().zip(pair.components()) {
            let z = pair.component_class(comp);
            assert_eq!(row.form.eval(&beta), s.intersect(&fixed, z).unwrap());
        }
        let q = sys.quadratic.unwrap();
        assert_eq!(q.eval(&beta), s.self_intersection(&fixed).unwrap());
    }
}
