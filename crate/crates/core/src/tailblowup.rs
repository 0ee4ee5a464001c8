//! Tail blow-up sequences on chain pairs, the block matrix of their
//! near-origin linear program, and the ALF classification of a sequence.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::constraints::{
    boundary_constraints, classify_quadratic, near_origin_reduce, nm_system, BoxBound,
    ConstraintSystem, LabeledCurve, NearOrigin, Provenance, QuadraticVerdict, SystemOptions,
};
use crate::feasibility::{
    gordan_feasible, origin_in_closure, ClosureVerdict, FeasibilityCertificate, HomogeneousSystem,
    OriginReport,
};
use crate::forms::{AngleLayout, AngleRole, LinearForm};
use crate::lattice::LatticeError;
use crate::logpair::{tail_sequence, BoundaryShape, LogPair, PairError};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TailError {
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("boundary is a cycle: there are no tails")]
    NoTails,
    #[error("boundary is {0}, not a chain")]
    NotAChain(&'static str),
    #[error("the block matrix needs at least one tail blow-up")]
    NoBlowUps,
    #[error("base chain needs at least {0} components")]
    ShortChain(usize),
}

/// A chain pair `(s, c)` with `right` blow-ups at the `c_r` end and `left`
/// at the `c_1` end. Right blow-ups are applied first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailSequenceSpec {
    pub base: LogPair,
    pub right: usize,
    pub left: usize,
}

impl TailSequenceSpec {
    pub fn new(base: LogPair, right: usize, left: usize) -> Self {
        Self { base, right, left }
    }

    pub fn total(&self) -> usize {
        self.right + self.left
    }

    /// Number of base components `r`.
    pub fn base_len(&self) -> usize {
        self.base.components().len()
    }

    /// Self-intersections `(c_1^2, c_r^2)` of the base ends.
    pub fn end_squares(&self) -> (i64, i64) {
        end_squares(&self.base)
    }
}

fn end_squares(pair: &LogPair) -> (i64, i64) {
    let classes = pair.classes();
    let sq = |c| {
        pair.surface()
            .self_intersection(c)
            .expect("boundary classes live on the surface")
            .to_integer()
            .to_i64()
            .expect("self-intersection fits in i64")
    };
    (sq(&classes[0]), sq(classes.last().expect("nonempty")))
}

fn require_chain(pair: &LogPair) -> Result<(), TailError> {
    if pair.is_chain() {
        return Ok(());
    }
    match pair.shape() {
        BoundaryShape::Cycle => Err(TailError::NoTails),
        other => Err(TailError::NotAChain(other.as_str())),
    }
}

/// Runs the sequence; the result is again a chain with `r + x` components.
pub fn apply_tail_sequence(spec: &TailSequenceSpec) -> Result<LogPair, TailError> {
    require_chain(&spec.base)?;
    Ok(tail_sequence(&spec.base, spec.right, spec.left)?)
}

/// `(K_s + c)^2`, the number of tail blow-ups the pair can afford.
pub fn budget(pair: &LogPair) -> Rational {
    pair.log_canonical_square()
}

/// The `(r+h+v) x (r+2h+2v)` integer matrix whose columns are the
/// near-origin inequalities of a tail sequence, rows indexed by
/// `(beta_1..beta_r, delta_1..delta_h, gamma_1..gamma_v)`.
///
/// Column order: `v_r`, `v_1`, the right tridiagonal block, the left
/// tridiagonal block, the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpMatrix {
    pub r: usize,
    pub h: usize,
    pub v: usize,
    pub c1_sq: i64,
    pub cr_sq: i64,
    /// Whether `v_r`, `v_1` carry the neighbour entries `beta_{r-1}`,
    /// `beta_2` coming from `c_{r-1} . c_r = 1` and `c_1 . c_2 = 1`.
    pub coupled: bool,
    columns: Vec<Vec<i64>>,
}

/// The matrix as derived from the lattice (neighbour entries included).
pub fn build_lp_matrix(r: usize, h: usize, v: usize, c1_sq: i64, cr_sq: i64) -> Result<LpMatrix, TailError> {
    LpMatrix::build(r, h, v, c1_sq, cr_sq, true)
}

impl LpMatrix {
    /// The variant without neighbour entries in `v_r` and `v_1`.
    pub fn uncoupled(r: usize, h: usize, v: usize, c1_sq: i64, cr_sq: i64) -> Result<LpMatrix, TailError> {
        Self::build(r, h, v, c1_sq, cr_sq, false)
    }

    fn build(r: usize, h: usize, v: usize, c1_sq: i64, cr_sq: i64, coupled: bool) -> Result<LpMatrix, TailError> {
        if r == 0 {
            return Err(TailError::ShortChain(1));
        }
        if h + v == 0 {
            return Err(TailError::NoBlowUps);
        }
        let layout = AngleLayout::tail(r, h, v);
        let k = layout.len();
        let mut columns = Vec::with_capacity(h + v + k);
        let col = || vec![0i64; k];
        if h > 0 {
            let mut c = col();
            c[layout.beta(r)] += cr_sq - 1;
            c[layout.eta(1)] += 1;
            if coupled && r >= 2 {
                c[layout.beta(r - 1)] += 1;
            }
            columns.push(c);
        }
        if v > 0 {
            let mut c = col();
            c[layout.beta(1)] += c1_sq - 1;
            c[layout.nu(1)] += 1;
            if coupled && r >= 2 {
                c[layout.beta(2)] += 1;
            }
            columns.push(c);
        }
        for i in 1..h {
            let mut c = col();
            c[layout.eta(i + 1)] += 1;
            c[layout.eta(i)] -= 2;
            c[layout.eta(i - 1)] += 1;
            columns.push(c);
        }
        for j in 1..v {
            let mut c = col();
            c[layout.nu(j + 1)] += 1;
            c[layout.nu(j)] -= 2;
            c[layout.nu(j - 1)] += 1;
            columns.push(c);
        }
        for i in 0..k {
            let mut c = col();
            c[i] = 1;
            columns.push(c);
        }
        Ok(LpMatrix { r, h, v, c1_sq, cr_sq, coupled, columns })
    }

    pub fn layout(&self) -> AngleLayout {
        AngleLayout::tail(self.r, self.h, self.v)
    }

    pub fn row_count(&self) -> usize {
        self.r + self.h + self.v
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Entry at 0-based row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.columns[j][i]
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// Row-major integer array.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.row_count())
            .map(|i| self.columns.iter().map(|c| c[i]).collect())
            .collect()
    }

    /// The columns before the identity block.
    pub fn constraint_columns(&self) -> &[Vec<i64>] {
        &self.columns[..self.h + self.v]
    }

    /// Constraint columns as linear forms in the angle layout.
    pub fn forms(&self) -> Vec<LinearForm> {
        self.constraint_columns()
            .iter()
            .map(|c| LinearForm::from_parts(int(0), c.iter().enumerate().map(|(i, &v)| (i, int(v)))))
            .collect()
    }

    pub fn to_system(&self) -> HomogeneousSystem {
        let cols: Vec<Vec<Rational>> = self
            .columns
            .iter()
            .map(|c| c.iter().map(|&v| int(v)).collect())
            .collect();
        HomogeneousSystem::from_columns(self.row_count(), &cols)
    }
}

/// Gordan check of the block matrix, identity block included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailLpCheck {
    pub matrix: LpMatrix,
    pub certificate: FeasibilityCertificate,
    /// Feasible and the certificate re-verifies.
    pub verified: bool,
}

impl TailLpCheck {
    pub fn witness(&self) -> Option<&[Rational]> {
        self.certificate.point()
    }
}

fn check_matrix(matrix: LpMatrix) -> TailLpCheck {
    let sys = matrix.to_system();
    let certificate = gordan_feasible(&sys);
    let verified = certificate.is_feasible() && certificate.verify(&sys);
    TailLpCheck { matrix, certificate, verified }
}

/// Decides whether the tail block matrix admits a positive ray.
pub fn verify_tail_lp(r: usize, h: usize, v: usize, c1_sq: i64, cr_sq: i64) -> Result<TailLpCheck, TailError> {
    Ok(check_matrix(build_lp_matrix(r, h, v, c1_sq, cr_sq)?))
}

/// Same check on the uncoupled variant.
pub fn verify_tail_lp_uncoupled(r: usize, h: usize, v: usize, c1_sq: i64, cr_sq: i64) -> Result<TailLpCheck, TailError> {
    Ok(check_matrix(LpMatrix::uncoupled(r, h, v, c1_sq, cr_sq)?))
}

/// Boundary-only system `-K_beta . C_i > 0` of a pair, without quadratic.
pub fn build_tilde_lp(pair: &LogPair) -> Result<ConstraintSystem, TailError> {
    let positive = pair.log_canonical_class().negate();
    let mut sys = ConstraintSystem::new(pair.layout());
    sys.linear = boundary_constraints(pair, &positive)?;
    Ok(sys)
}

/// Lattice-side near-origin rows of a tail sequence against the block
/// matrix columns, both as dense integer vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossDerivation {
    pub lattice: Vec<Vec<Rational>>,
    pub matrix: Vec<Vec<Rational>>,
    /// Equal as multisets.
    pub matches: bool,
}

/// Near-origin rows of the tilde system that involve the tails: the new
/// exceptional curves and the old ends that were blown up. Rows of base
/// components strictly inside the chain are left out.
pub fn lattice_tail_rows(pair: &LogPair) -> Result<Vec<LinearForm>, TailError> {
    let layout = pair.layout();
    let sys = build_tilde_lp(pair)?;
    let NearOrigin::Reduced { kept, .. } = near_origin_reduce(&sys) else {
        return Ok(Vec::new());
    };
    Ok(kept
        .into_iter()
        .filter(|row| match &row.provenance {
            Provenance::Boundary { angle, .. } => match layout.role(*angle) {
                AngleRole::Base(i) => i == 1 || i == layout.base,
                _ => true,
            },
            _ => false,
        })
        .map(|row| row.form)
        .collect())
}

/// Compares the lattice rows of `h` right and `v` left tail blow-ups on
/// `base` against [`build_lp_matrix`].
pub fn cross_derive(base: &LogPair, h: usize, v: usize) -> Result<CrossDerivation, TailError> {
    let base = base.rebased();
    let r = base.components().len();
    if r < 2 {
        return Err(TailError::ShortChain(2));
    }
    let (c1, cr) = end_squares(&base);
    let pair = apply_tail_sequence(&TailSequenceSpec::new(base, h, v))?;
    let k = pair.angle_count();
    let mut lattice: Vec<Vec<Rational>> = lattice_tail_rows(&pair)?
        .iter()
        .map(|f| f.dense_coefficients(k))
        .collect();
    let mut matrix: Vec<Vec<Rational>> = build_lp_matrix(r, h, v, c1, cr)?
        .forms()
        .iter()
        .map(|f| f.dense_coefficients(k))
        .collect();
    lattice.sort();
    matrix.sort();
    let matches = lattice == matrix;
    Ok(CrossDerivation { lattice, matrix, matches })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailVerdict {
    /// More blow-ups than `(K_s + c)^2`.
    NotAlfBudget,
    /// The origin is not in the closure of the catalog system.
    NotAlfLp,
    /// The origin is in the closure for the catalog and supplied curves.
    AlfModuloCurves,
    /// As above, with the caller vouching that the curve list is complete.
    AlfVerified,
    /// The self-intersection could not be resolved near the origin.
    Undetermined,
}

impl TailVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            TailVerdict::NotAlfBudget => "NotALF_Budget",
            TailVerdict::NotAlfLp => "NotALF_LP",
            TailVerdict::AlfModuloCurves => "ALF_ModuloCurves",
            TailVerdict::AlfVerified => "ALF_Verified",
            TailVerdict::Undetermined => "Undetermined",
        }
    }

    pub fn is_alf(self) -> bool {
        matches!(self, TailVerdict::AlfModuloCurves | TailVerdict::AlfVerified)
    }
}

#[derive(Debug, Clone)]
pub struct TailOptions {
    /// The caller certifies that the supplied curves, together with the
    /// catalog, contain every curve that can obstruct ampleness.
    pub curves_complete: bool,
    pub box_bound: BoxBound,
}

impl Default for TailOptions {
    fn default() -> Self {
        Self { curves_complete: false, box_bound: BoxBound::Unit }
    }
}

/// Verdict and evidence for one tail sequence.
#[derive(Debug, Clone)]
pub struct TailReport {
    pub right: usize,
    pub left: usize,
    /// `(K_s + c)^2` on the base.
    pub budget: Rational,
    /// `(K_S + C)^2` after the sequence, when it was built.
    pub remaining_budget: Option<Rational>,
    pub verdict: TailVerdict,
    /// Near-origin analysis of the full system.
    pub origin: Option<OriginReport>,
    /// Near-origin analysis of the boundary-only system.
    pub tilde: Option<OriginReport>,
    pub quadratic: Option<QuadraticVerdict>,
    pub curve_list: Vec<String>,
    /// The block matrix, for sequences with at least one blow-up.
    pub matrix: Option<LpMatrix>,
    pub pair: Option<LogPair>,
    pub note: String,
}

/// Classifies a tail sequence.
///
/// The budget test comes first, so an over-budget sequence is rejected even
/// when the base boundary is not a chain. Otherwise the sequence is built and
/// the origin is tested against the boundary, the catalog, `extra_curves`
/// (classes on the final surface) and the self-intersection.
pub fn classify_tail(
    spec: &TailSequenceSpec,
    extra_curves: &[LabeledCurve],
    options: &TailOptions,
) -> Result<TailReport, TailError> {
    let b = budget(&spec.base);
    let x = spec.total();
    let mut report = TailReport {
        right: spec.right,
        left: spec.left,
        budget: b.clone(),
        remaining_budget: None,
        verdict: TailVerdict::NotAlfBudget,
        origin: None,
        tilde: None,
        quadratic: None,
        curve_list: Vec::new(),
        matrix: None,
        pair: None,
        note: String::new(),
    };
    if int(x as i64) > b {
        report.note = alloc::format!("{x} tail blow-ups exceed (K_s + c)^2 = {b}");
        return Ok(report);
    }
    if x > 0 {
        require_chain(&spec.base)?;
    } else if spec.base.shape() == BoundaryShape::Cycle {
        report.note = "cycle boundary: no tails".to_string();
    }
    let pair = tail_sequence(&spec.base, spec.right, spec.left)?;
    let options_nm = SystemOptions {
        extra_curves: extra_curves.to_vec(),
        box_bound: options.box_bound.clone(),
        ..SystemOptions::default()
    };
    let sys = nm_system(&pair, &options_nm)?;
    let origin = origin_in_closure(&sys);
    report.verdict = match origin.verdict {
        ClosureVerdict::Contains if options.curves_complete => TailVerdict::AlfVerified,
        ClosureVerdict::Contains => TailVerdict::AlfModuloCurves,
        ClosureVerdict::Excludes => TailVerdict::NotAlfLp,
        ClosureVerdict::Undetermined => TailVerdict::Undetermined,
    };
    report.quadratic = sys.quadratic.as_ref().map(classify_quadratic);
    report.remaining_budget = Some(budget(&pair));
    report.tilde = Some(origin_in_closure(&build_tilde_lp(&pair)?));
    report.curve_list = sys.curve_list.clone();
    if x > 0 {
        let (c1, cr) = spec.end_squares();
        report.matrix = Some(build_lp_matrix(spec.base_len(), spec.right, spec.left, c1, cr)?);
    }
    if report.note.is_empty() {
        report.note = origin.note.clone();
    }
    report.origin = Some(origin);
    report.pair = Some(pair);
    Ok(report)
}

/// Whether the linear part of `(K_S + C)`-square at `beta = 0` is as at the
/// borderline `x = (K_s + c)^2`: zero constant, no negative linear
/// coefficient, positive exactly on the listed angles.
pub fn borderline_shape(q: &crate::forms::QuadraticForm, positive_on: &[usize]) -> bool {
    q.constant_term().is_zero()
        && q.linear_terms().all(|(i, c)| {
            if positive_on.contains(&i) {
                c.is_positive()
            } else {
                c.is_zero()
            }
        })
        && positive_on.iter().all(|i| q.linear_coefficient(*i).is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::quadratic_constraint;
    use crate::feasibility::fourier_motzkin_eliminate;
    use crate::constraints::StrictInequality;
    use crate::lattice::SurfaceModel;

    fn fn_pair(n: u32) -> LogPair {
        LogPair::from_labels(SurfaceModel::hirzebruch(n), &["Z", "F"]).unwrap()
    }

    fn disjoint_sections(n: u32) -> LogPair {
        let mut s = SurfaceModel::hirzebruch(n);
        let class = crate::lattice::DivisorClass::from_ints(s.tag(), &[1, i64::from(n)]).unwrap();
        s.add_curve("S", class).unwrap();
        LogPair::from_labels(s, &["Z", "S"]).unwrap()
    }

    #[test]
    fn budgets() {
        for n in 0..5 {
            assert_eq!(budget(&fn_pair(n)), int(i64::from(n) + 2));
            assert_eq!(budget(&disjoint_sections(n)), int(0));
        }
        assert_eq!(budget(&fn_pair(0)), int(2));
    }

    #[test]
    fn single_right_tail_keeps_chain() {
        let spec = TailSequenceSpec::new(fn_pair(1), 1, 0);
        let pair = apply_tail_sequence(&spec).unwrap();
        assert_eq!(pair.components().len(), 3);
        assert!(pair.is_chain());
        let classes = pair.classes();
        assert_eq!(pair.surface().intersect(&classes[1], &classes[2]).unwrap(), int(1));
    }

    #[test]
    fn identity_sequence() {
        let spec = TailSequenceSpec::new(fn_pair(2), 0, 0);
        assert_eq!(apply_tail_sequence(&spec).unwrap(), fn_pair(2));
    }

    #[test]
    fn two_sided_sequence_rank() {
        let pair = apply_tail_sequence(&TailSequenceSpec::new(fn_pair(0), 2, 2)).unwrap();
        assert_eq!(pair.surface().rank(), 6);
        assert_eq!(pair.components().len(), 6);
        assert!(pair.is_chain());
    }

    #[test]
    fn cycle_has_no_tails() {
        // Z + F + (Z + nF) + F' closes up on F_n
        let mut s = SurfaceModel::hirzebruch(1);
        let tag = s.tag();
        s.add_curve("S", crate::lattice::DivisorClass::from_ints(tag, &[1, 1]).unwrap()).unwrap();
        s.add_curve("G", crate::lattice::DivisorClass::from_ints(tag, &[0, 1]).unwrap()).unwrap();
        let pair = LogPair::from_labels(s, &["Z", "F", "S", "G"]).unwrap();
        assert_eq!(pair.shape(), BoundaryShape::Cycle);
        let spec = TailSequenceSpec::new(pair, 1, 0);
        assert_eq!(apply_tail_sequence(&spec), Err(TailError::NoTails));
    }

    #[test]
    fn matrix_shapes() {
        let m = build_lp_matrix(2, 2, 2, -1, 0).unwrap();
        assert_eq!((m.row_count(), m.column_count()), (6, 10));
        assert_eq!(build_lp_matrix(2, 0, 0, 0, 0), Err(TailError::NoBlowUps));
        let m = LpMatrix::uncoupled(2, 1, 0, -1, -3).unwrap();
        assert_eq!(m.constraint_columns(), [vec![0, -4, 1]]);
        let m = build_lp_matrix(2, 1, 0, -1, -3).unwrap();
        assert_eq!(m.constraint_columns(), [vec![1, -4, 1]]);
    }

    #[test]
    fn right_block_pattern() {
        // rows beta_1, beta_2, delta_1, delta_2, delta_3
        let m = LpMatrix::uncoupled(2, 3, 0, -1, 0).unwrap();
        let cols = m.constraint_columns();
        assert_eq!(cols[1], [0, 1, -2, 1, 0]);
        assert_eq!(cols[2], [0, 0, 1, -2, 1]);
    }

    #[test]
    fn left_block_pattern() {
        let m = build_lp_matrix(3, 1, 2, -2, 0).unwrap();
        // rows beta_1..3, delta_1, gamma_1, gamma_2; columns v_r, v_1, T_v
        let cols = m.constraint_columns();
        assert_eq!(cols[0], [0, 1, -1, 1, 0, 0]);
        assert_eq!(cols[1], [-3, 1, 0, 0, 1, 0]);
        assert_eq!(cols[2], [1, 0, 0, 0, -2, 1]);
    }

    fn strict(forms: Vec<LinearForm>) -> Vec<StrictInequality> {
        forms
            .into_iter()
            .map(|f| StrictInequality::new(f, Provenance::Derived))
            .collect()
    }

    #[test]
    fn two_right_tails_tilde_rows() {
        // (F_1, Z + F): beta_1 = 0, beta_2 = 1, delta_1 = 2, delta_2 = 3; c_r^2 = 0
        let pair = tail_sequence(&fn_pair(1), 2, 0).unwrap();
        let rows = lattice_tail_rows(&pair).unwrap();
        let expect = [
            LinearForm::from_parts(int(0), [(2, int(1)), (1, int(-1)), (0, int(1))]),
            LinearForm::from_parts(int(0), [(3, int(1)), (2, int(-2)), (1, int(1))]),
        ];
        assert_eq!(rows, expect);
        let projected = fourier_motzkin_eliminate(&strict(rows), 2);
        assert_eq!(projected.len(), 1);
        assert_eq!(projected[0].form, LinearForm::from_parts(int(0), [(3, int(1)), (1, int(-1)), (0, int(2))]));
    }

    #[test]
    fn uncoupled_projection() {
        for cr in -3..=1 {
            let m = LpMatrix::uncoupled(2, 2, 0, -1, cr).unwrap();
            let projected = fourier_motzkin_eliminate(&strict(m.forms()), 2);
            assert_eq!(projected[0].form, LinearForm::from_parts(int(0), [(3, int(1)), (1, int(2 * cr - 1))]));
        }
    }

    #[test]
    fn single_component_end_row_is_vacuous() {
        let base = LogPair::from_labels(SurfaceModel::hirzebruch(1), &["Z"]).unwrap();
        let pair = tail_sequence(&base, 2, 0).unwrap();
        let rows = lattice_tail_rows(&pair).unwrap();
        assert_eq!(rows, [LinearForm::from_parts(int(0), [(2, int(1)), (1, int(-2)), (0, int(1))])]);
        assert_eq!(cross_derive(&base, 1, 0), Err(TailError::ShortChain(2)));
    }

    #[test]
    fn small_cross_derivations() {
        for n in 0..4 {
            for (h, v) in [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1), (2, 1), (1, 2)] {
                let d = cross_derive(&fn_pair(n), h, v).unwrap();
                assert!(d.matches, "n={n} h={h} v={v}: {d:?}");
            }
        }
    }

    #[test]
    fn tail_lp_is_feasible() {
        for (h, v) in [(1, 1), (2, 1), (3, 3)] {
            let c = verify_tail_lp(2, h, v, -2, 0).unwrap();
            assert!(c.verified);
            assert!(verify_tail_lp_uncoupled(2, h, v, -2, 0).unwrap().verified);
        }
    }

    #[test]
    fn over_budget_disjoint_sections() {
        let spec = TailSequenceSpec::new(disjoint_sections(2), 1, 0);
        let report = classify_tail(&spec, &[], &TailOptions::default()).unwrap();
        assert_eq!(report.verdict, TailVerdict::NotAlfBudget);
    }

    #[test]
    fn one_right_tail_on_f1() {
        let spec = TailSequenceSpec::new(fn_pair(1), 1, 0);
        let report = classify_tail(&spec, &[], &TailOptions::default()).unwrap();
        assert_eq!(report.verdict, TailVerdict::AlfModuloCurves);
        let origin = report.origin.unwrap();
        let w = origin.witness.unwrap();
        assert!(w.iter().all(|x| x < &crate::rational::ratio(1, 10)) || w.iter().all(|x| x.is_positive()));
        // the center lies on the boundary fiber, so no new fiber is tracked
        assert_eq!(report.curve_list, ["F(general)"]);
    }

    #[test]
    fn borderline_at_full_budget() {
        // F_0 with Z + F: budget 2, spend it as one right and one left
        let pair = tail_sequence(&fn_pair(0), 1, 1).unwrap();
        let q = quadratic_constraint(&pair);
        let l = pair.layout();
        assert!(borderline_shape(&q, &[l.eta(1), l.nu(1)]));
        let spec = TailSequenceSpec::new(fn_pair(0), 1, 1);
        let report = classify_tail(&spec, &[], &TailOptions::default()).unwrap();
        assert_eq!(report.quadratic, Some(QuadraticVerdict::Critical));
        assert_eq!(report.remaining_budget, Some(int(0)));
    }
}
