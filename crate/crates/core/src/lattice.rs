//! Picard lattices of the projective plane, Hirzebruch surfaces and their
//! iterated point blow-ups.
//!
//! Coordinates are taken in the basis `(Z, F)` for `F_n` (or `(H)` for the
//! plane) followed by the total transforms `E_1, ..., E_x` of the exceptional
//! curves, in blow-up order. In that basis the intersection form is block
//! diagonal: `[[-n, 1], [1, 0]]` (or `[1]`) followed by `-1` on every
//! exceptional slot.
//!
//! A [`SurfaceModel`] also tracks a set of named curves (the base curves, the
//! exceptional curves and anything registered by the caller) and keeps their
//! strict transforms current across blow-ups.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("class has {found} coordinates, surface has rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("class belongs to a different surface ({found}), expected {expected}")]
    SurfaceMismatch {
        expected: LatticeTag,
        found: LatticeTag,
    },
    #[error("unknown curve {0}")]
    UnknownCurve(String),
    #[error("invalid blow-up center: {0}")]
    InvalidCenter(String),
    #[error("surface has no blow-up to pull back through")]
    NoBlowUp,
    #[error("duplicate curve label {0:?}")]
    DuplicateLabel(String),
}

/// Base surface of a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseSurface {
    ProjectivePlane,
    Hirzebruch(u32),
}

impl BaseSurface {
    pub fn rank(self) -> usize {
        match self {
            BaseSurface::ProjectivePlane => 1,
            BaseSurface::Hirzebruch(_) => 2,
        }
    }

    /// Names of the base generators.
    pub fn generator_names(self) -> &'static [&'static str] {
        match self {
            BaseSurface::ProjectivePlane => &["H"],
            BaseSurface::Hirzebruch(_) => &["Z", "F"],
        }
    }

    fn form_entry(self, i: usize, j: usize) -> i64 {
        match self {
            BaseSurface::ProjectivePlane => 1,
            BaseSurface::Hirzebruch(n) => match (i, j) {
                (0, 0) => -i64::from(n),
                (1, 1) => 0,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSurface::ProjectivePlane => write!(f, "P2"),
            BaseSurface::Hirzebruch(n) => write!(f, "F{n}"),
        }
    }
}

/// Identifies the lattice a class lives in: base plus number of blow-ups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeTag {
    pub base: BaseSurface,
    pub blowups: usize,
}

impl LatticeTag {
    pub fn rank(&self) -> usize {
        self.base.rank() + self.blowups
    }
}

impl fmt::Display for LatticeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} blown up {} times", self.base, self.blowups)
    }
}

/// A divisor class with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    tag: LatticeTag,
    coords: Vec<Rational>,
}

impl DivisorClass {
    pub fn zero(tag: LatticeTag) -> Self {
        Self {
            tag,
            coords: vec![Rational::zero(); tag.rank()],
        }
    }

    pub fn from_coords(tag: LatticeTag, coords: Vec<Rational>) -> Result<Self, LatticeError> {
        if coords.len() != tag.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: tag.rank(),
                found: coords.len(),
            });
        }
        Ok(Self { tag, coords })
    }

    pub fn from_ints(tag: LatticeTag, coords: &[i64]) -> Result<Self, LatticeError> {
        Self::from_coords(tag, coords.iter().map(|&c| int(c)).collect())
    }

    /// The `index`-th basis vector.
    pub fn basis(tag: LatticeTag, index: usize) -> Self {
        let mut class = Self::zero(tag);
        class.coords[index] = int(1);
        class
    }

    pub fn tag(&self) -> LatticeTag {
        self.tag
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            tag: self.tag,
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.tag, other.tag, "divisor classes from different surfaces");
        Self {
            tag: self.tag,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    /// Coordinates extended by zero into `tag`, which must be a later blow-up
    /// of the same base.
    fn extend_to(&self, tag: LatticeTag) -> Self {
        debug_assert!(tag.base == self.tag.base && tag.blowups >= self.tag.blowups);
        let mut coords = self.coords.clone();
        coords.resize(tag.rank(), Rational::zero());
        Self { tag, coords }
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            tag: self.tag,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&DivisorClass> for &Rational {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        rhs.scale(self)
    }
}

/// Index of a tracked curve inside its [`SurfaceModel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// `Z_n` on a Hirzebruch surface.
    Section,
    /// A member of the base pencil: a fiber of `F_n`, or a line of the plane.
    Ruling,
    /// Strict transform of the exceptional curve of the given blow-up (0-based).
    Exceptional(usize),
    /// Registered by the caller.
    User,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedCurve {
    pub label: String,
    pub kind: CurveKind,
    pub class: DivisorClass,
}

/// Where a blow-up center lies: the tracked curves through the point and the
/// multiplicity of the point on each.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CenterSpec {
    pub on: Vec<(CurveId, u32)>,
}

impl CenterSpec {
    /// A smooth point of a single curve.
    pub fn smooth_point_of(curve: CurveId) -> Self {
        Self {
            on: vec![(curve, 1)],
        }
    }

    pub fn multiplicity_on(&self, curve: CurveId) -> u32 {
        self.on
            .iter()
            .filter(|(c, _)| *c == curve)
            .map(|(_, m)| *m)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUpRecord {
    /// Effective center, including the ruling member through the point when
    /// the model had to register one.
    pub center: CenterSpec,
    /// Coordinate position of the new total-transform exceptional class.
    pub exceptional_index: usize,
    /// The ruling member (fiber or line) through the image of the center.
    pub ruling: Option<CurveId>,
    /// The tracked exceptional curve created by this blow-up.
    pub exceptional_curve: CurveId,
}

/// A base surface together with an ordered blow-up history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    base: BaseSurface,
    blowups: Vec<BlowUpRecord>,
    curves: Vec<TrackedCurve>,
}

impl SurfaceModel {
    /// The `n`-th Hirzebruch surface with tracked curves `Z` (the `-n`-section)
    /// and `F` (a fiber).
    pub fn hirzebruch(n: u32) -> Self {
        let base = BaseSurface::Hirzebruch(n);
        let tag = LatticeTag { base, blowups: 0 };
        Self {
            base,
            blowups: Vec::new(),
            curves: vec![
                TrackedCurve {
                    label: "Z".into(),
                    kind: CurveKind::Section,
                    class: DivisorClass::basis(tag, 0),
                },
                TrackedCurve {
                    label: "F".into(),
                    kind: CurveKind::Ruling,
                    class: DivisorClass::basis(tag, 1),
                },
            ],
        }
    }

    /// The projective plane with one tracked line `H`.
    pub fn projective_plane() -> Self {
        let base = BaseSurface::ProjectivePlane;
        let tag = LatticeTag { base, blowups: 0 };
        Self {
            base,
            blowups: Vec::new(),
            curves: vec![TrackedCurve {
                label: "H".into(),
                kind: CurveKind::Ruling,
                class: DivisorClass::basis(tag, 0),
            }],
        }
    }

    pub fn base(&self) -> BaseSurface {
        self.base
    }

    pub fn blowups(&self) -> &[BlowUpRecord] {
        &self.blowups
    }

    pub fn tag(&self) -> LatticeTag {
        LatticeTag {
            base: self.base,
            blowups: self.blowups.len(),
        }
    }

    pub fn rank(&self) -> usize {
        self.tag().rank()
    }

    pub fn curves(&self) -> &[TrackedCurve] {
        &self.curves
    }

    pub fn curve(&self, id: CurveId) -> Result<&TrackedCurve, LatticeError> {
        self.curves
            .get(id.0)
            .ok_or_else(|| LatticeError::UnknownCurve(format!("#{}", id.0)))
    }

    pub fn curve_by_label(&self, label: &str) -> Result<CurveId, LatticeError> {
        self.curves
            .iter()
            .position(|c| c.label == label)
            .map(CurveId)
            .ok_or_else(|| LatticeError::UnknownCurve(label.into()))
    }

    /// Registers an extra curve on the current model.
    pub fn add_curve(
        &mut self,
        label: impl Into<String>,
        class: DivisorClass,
    ) -> Result<CurveId, LatticeError> {
        let label = label.into();
        self.check(&class)?;
        if self.curves.iter().any(|c| c.label == label) {
            return Err(LatticeError::DuplicateLabel(label));
        }
        self.curves.push(TrackedCurve {
            label,
            kind: CurveKind::User,
            class,
        });
        Ok(CurveId(self.curves.len() - 1))
    }

    /// Names of all basis vectors, e.g. `["Z", "F", "E1", "E2"]`.
    pub fn basis_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .base
            .generator_names()
            .iter()
            .map(|s| String::from(*s))
            .collect();
        names.extend((1..=self.blowups.len()).map(|k| format!("E{k}")));
        names
    }

    pub fn basis(&self, index: usize) -> DivisorClass {
        DivisorClass::basis(self.tag(), index)
    }

    /// Total transform of the `k`-th exceptional curve (0-based).
    pub fn exceptional_total(&self, k: usize) -> DivisorClass {
        self.basis(self.blowups[k].exceptional_index)
    }

    /// Class of a general member of the base pencil, pulled back.
    pub fn generic_ruling(&self) -> DivisorClass {
        match self.base {
            BaseSurface::ProjectivePlane => self.basis(0),
            BaseSurface::Hirzebruch(_) => self.basis(1),
        }
    }

    /// Gram matrix entry.
    pub fn form_entry(&self, i: usize, j: usize) -> i64 {
        let b = self.base.rank();
        match (i < b, j < b) {
            (true, true) => self.base.form_entry(i, j),
            (false, false) if i == j => -1,
            _ => 0,
        }
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| self.form_entry(i, j)).collect())
            .collect()
    }

    fn check(&self, class: &DivisorClass) -> Result<(), LatticeError> {
        if class.coords.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                found: class.coords.len(),
            });
        }
        if class.tag != self.tag() {
            return Err(LatticeError::SurfaceMismatch {
                expected: self.tag(),
                found: class.tag,
            });
        }
        Ok(())
    }

    /// `A . B` under the intersection form.
    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<Rational, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        let base = self.base.rank();
        let mut total = Rational::zero();
        for i in 0..base {
            for j in 0..base {
                let g = self.base.form_entry(i, j);
                if g != 0 {
                    total += &a.coords[i] * &b.coords[j] * int(g);
                }
            }
        }
        for k in base..self.rank() {
            total -= &a.coords[k] * &b.coords[k];
        }
        Ok(total)
    }

    pub fn self_intersection(&self, a: &DivisorClass) -> Result<Rational, LatticeError> {
        self.intersect(a, a)
    }

    /// `K` of the model: `-3H` or `-2Z - (n+2)F`, plus every `E_k`.
    pub fn canonical_class(&self) -> DivisorClass {
        let tag = self.tag();
        let mut coords = match self.base {
            BaseSurface::ProjectivePlane => vec![int(-3)],
            BaseSurface::Hirzebruch(n) => vec![int(-2), int(-(i64::from(n) + 2))],
        };
        coords.resize(tag.rank(), int(1));
        DivisorClass { tag, coords }
    }

    /// Blows up a point described combinatorially by `center`.
    ///
    /// When no curve of the base pencil is known to pass through the image of
    /// the point, the pencil member through it is registered as a new tracked
    /// curve so that its strict transform stays available for constraint
    /// catalogs.
    pub fn blow_up(&self, center: CenterSpec) -> Result<SurfaceModel, LatticeError> {
        if center.on.is_empty() {
            return Err(LatticeError::InvalidCenter(
                "center must lie on at least one tracked curve".into(),
            ));
        }
        for (id, mult) in &center.on {
            self.curve(*id)?;
            if *mult == 0 {
                return Err(LatticeError::InvalidCenter(format!(
                    "multiplicity 0 on {}",
                    self.curves[id.0].label
                )));
            }
        }
        let mut model = self.clone();
        let mut center = center;

        let on_ruling = center
            .on
            .iter()
            .find(|(id, _)| self.curves[id.0].kind == CurveKind::Ruling)
            .map(|(id, _)| *id);
        let on_exceptional = center.on.iter().find_map(|(id, _)| match self.curves[id.0].kind {
            CurveKind::Exceptional(k) => Some(k),
            _ => None,
        });
        let ruling = match (on_ruling, on_exceptional) {
            (Some(id), _) => Some(id),
            (None, Some(k)) => self.blowups[k].ruling,
            (None, None) => {
                let label = format!("{}_E{}", self.ruling_prefix(), self.blowups.len() + 1);
                if self.curves.iter().any(|c| c.label == label) {
                    return Err(LatticeError::DuplicateLabel(label));
                }
                model.curves.push(TrackedCurve {
                    label,
                    kind: CurveKind::Ruling,
                    class: self.generic_ruling(),
                });
                let id = CurveId(model.curves.len() - 1);
                center.on.push((id, 1));
                Some(id)
            }
        };

        let new_tag = LatticeTag {
            base: self.base,
            blowups: self.blowups.len() + 1,
        };
        let exceptional_index = new_tag.rank() - 1;
        let e = DivisorClass::basis(new_tag, exceptional_index);
        for (idx, curve) in model.curves.iter_mut().enumerate() {
            let mult = center.multiplicity_on(CurveId(idx));
            let pulled = curve.class.extend_to(new_tag);
            curve.class = &pulled - &e.scale(&int(i64::from(mult)));
        }
        let k = self.blowups.len();
        model.curves.push(TrackedCurve {
            label: format!("E{}", k + 1),
            kind: CurveKind::Exceptional(k),
            class: e,
        });
        let exceptional_curve = CurveId(model.curves.len() - 1);
        model.blowups.push(BlowUpRecord {
            center,
            exceptional_index,
            ruling,
            exceptional_curve,
        });
        Ok(model)
    }

    fn ruling_prefix(&self) -> &'static str {
        match self.base {
            BaseSurface::ProjectivePlane => "L",
            BaseSurface::Hirzebruch(_) => "F",
        }
    }

    /// Pull-back through the last blow-up of `self` of a class living on the
    /// model just before it.
    pub fn pullback(&self, class: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        let Some(before) = self.tag().blowups.checked_sub(1) else {
            return Err(LatticeError::NoBlowUp);
        };
        let expected = LatticeTag {
            base: self.base,
            blowups: before,
        };
        if class.tag != expected {
            return Err(if class.coords.len() != expected.rank() {
                LatticeError::DimensionMismatch {
                    expected: expected.rank(),
                    found: class.coords.len(),
                }
            } else {
                LatticeError::SurfaceMismatch {
                    expected,
                    found: class.tag,
                }
            });
        }
        Ok(class.extend_to(self.tag()))
    }

    /// Pull-back through any number of trailing blow-ups.
    pub fn pullback_from(&self, class: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        if class.tag.base != self.base || class.tag.blowups > self.blowups.len() {
            return Err(LatticeError::SurfaceMismatch {
                expected: self.tag(),
                found: class.tag,
            });
        }
        Ok(class.extend_to(self.tag()))
    }

    /// `pullback(D) - mult * E` for the last blow-up.
    pub fn strict_transform(
        &self,
        class: &DivisorClass,
        mult: u32,
    ) -> Result<DivisorClass, LatticeError> {
        let pulled = self.pullback(class)?;
        let e = self.basis(self.rank() - 1);
        Ok(&pulled - &e.scale(&int(i64::from(mult))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn class(s: &SurfaceModel, coords: &[i64]) -> DivisorClass {
        DivisorClass::from_ints(s.tag(), coords).unwrap()
    }

    #[test]
    fn hirzebruch_form() {
        let f2 = SurfaceModel::hirzebruch(2);
        let z = f2.basis(0);
        let f = f2.basis(1);
        assert_eq!(f2.intersect(&z, &z).unwrap(), int(-2));
        assert_eq!(f2.intersect(&z, &f).unwrap(), int(1));
        let f0 = SurfaceModel::hirzebruch(0);
        assert_eq!(f0.intersect(&f0.basis(1), &f0.basis(1)).unwrap(), int(0));
        assert_eq!(f2.rank(), 2);
        for n in 0..6 {
            let s = SurfaceModel::hirzebruch(n);
            assert_eq!(s.intersect(&s.basis(0), &s.basis(1)).unwrap(), int(1));
        }
    }

    #[test]
    fn plane_form_and_canonical_class() {
        let p2 = SurfaceModel::projective_plane();
        assert_eq!(p2.rank(), 1);
        assert_eq!(p2.self_intersection(&p2.basis(0)).unwrap(), int(1));
        assert_eq!(p2.canonical_class(), class(&p2, &[-3]));
    }

    #[test]
    fn hirzebruch_canonical_class() {
        for n in 0..5u32 {
            let s = SurfaceModel::hirzebruch(n);
            let minus_k = -&s.canonical_class();
            assert_eq!(minus_k, class(&s, &[2, i64::from(n) + 2]));
            assert_eq!(s.self_intersection(&minus_k).unwrap(), int(8));
        }
    }

    #[test]
    fn f1_sample_square() {
        let s = SurfaceModel::hirzebruch(1);
        assert_eq!(s.self_intersection(&class(&s, &[1, 2])).unwrap(), int(3));
    }

    #[test]
    fn blow_up_extends_form() {
        let s = SurfaceModel::hirzebruch(1);
        let z = s.curve_by_label("Z").unwrap();
        let t = s.blow_up(CenterSpec::smooth_point_of(z)).unwrap();
        assert_eq!(t.rank(), 3);
        assert_eq!(
            t.intersection_matrix(),
            vec![vec![-1, 1, 0], vec![1, 0, 0], vec![0, 0, -1]]
        );
        let e = t.exceptional_total(0);
        assert_eq!(t.self_intersection(&e).unwrap(), int(-1));
        // K_{S2} = pi^* K_{S1} + E
        let k = t.canonical_class();
        assert_eq!(k, &t.pullback(&s.canonical_class()).unwrap() + &e);
        // strict transforms of Z (through the point) and F (not through it)
        let zt = &t.curve(z).unwrap().class;
        assert_eq!(zt, &t.strict_transform(&s.basis(0), 1).unwrap());
        assert_eq!(t.self_intersection(zt).unwrap(), int(-2));
        let ft = &t.curve(t.curve_by_label("F").unwrap()).unwrap().class;
        assert_eq!(ft, &t.pullback(&s.basis(1)).unwrap());
        assert_eq!(t.strict_transform(&s.basis(1), 0).unwrap(), *ft);
    }

    #[test]
    fn blow_up_registers_ruling_through_point() {
        let s = SurfaceModel::hirzebruch(2);
        let z = s.curve_by_label("Z").unwrap();
        let t = s.blow_up(CenterSpec::smooth_point_of(z)).unwrap();
        let fiber = t.blowups()[0].ruling.unwrap();
        let fc = &t.curve(fiber).unwrap().class;
        assert_eq!(fc, &class(&t, &[0, 1, -1]));
        assert_eq!(t.self_intersection(fc).unwrap(), int(-1));
        // a second blow-up on the exceptional curve reuses that fiber
        let e1 = t.blowups()[0].exceptional_curve;
        let u = t.blow_up(CenterSpec::smooth_point_of(e1)).unwrap();
        assert_eq!(u.blowups()[1].ruling, Some(fiber));
        assert_eq!(u.curves().len(), t.curves().len() + 1);
    }

    #[test]
    fn strict_transform_of_fiber_squares_to_minus_one() {
        let s = SurfaceModel::hirzebruch(3);
        let f = s.curve_by_label("F").unwrap();
        let t = s.blow_up(CenterSpec::smooth_point_of(f)).unwrap();
        let ft = t.strict_transform(&s.basis(1), 1).unwrap();
        assert_eq!(t.self_intersection(&ft).unwrap(), int(-1));
    }

    #[test]
    fn errors() {
        let s = SurfaceModel::hirzebruch(1);
        let p = SurfaceModel::projective_plane();
        assert!(matches!(
            s.intersect(&s.basis(0), &p.basis(0)),
            Err(LatticeError::DimensionMismatch { .. })
        ));
        let f2 = SurfaceModel::hirzebruch(2);
        assert!(matches!(
            s.intersect(&s.basis(0), &f2.basis(0)),
            Err(LatticeError::SurfaceMismatch { .. })
        ));
        assert!(s.blow_up(CenterSpec::smooth_point_of(CurveId(9))).is_err());
        assert!(s.blow_up(CenterSpec::default()).is_err());
        assert_eq!(s.pullback(&s.basis(0)), Err(LatticeError::NoBlowUp));
        let t = s
            .blow_up(CenterSpec::smooth_point_of(CurveId(0)))
            .unwrap();
        assert!(t.pullback(&t.basis(0)).is_err());
    }

    #[test]
    fn rational_classes() {
        let s = SurfaceModel::hirzebruch(1);
        let half = DivisorClass::from_coords(s.tag(), vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        assert!(!half.is_integral());
        assert_eq!(s.self_intersection(&half).unwrap(), ratio(1, 4));
    }
}
