//! Boundary divisors and the angle-twisted classes `K_S + sum (1 - beta_i) C_i`
//! and `L - sum (1 - beta_i) D_i`.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::forms::{AngleLayout, AngleRole, LinearForm, QuadraticForm};
use crate::lattice::{
    CenterSpec, CurveId, CurveKind, DivisorClass, LatticeError, LatticeTag, SurfaceModel,
};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PairError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("boundary is empty")]
    EmptyBoundary,
    #[error("curve {0} appears twice in the boundary")]
    RepeatedComponent(String),
    #[error("boundary is a {0:?}, not a chain in the given order")]
    NotAChain(BoundaryShape),
    #[error("angle vector has {found} entries, pair has {expected} angles")]
    AngleCount { expected: usize, found: usize },
}

/// Shape of a boundary divisor read off its incidence matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryShape {
    Chain,
    Cycle,
    DisjointChains,
    Invalid,
}

impl BoundaryShape {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryShape::Chain => "chain",
            BoundaryShape::Cycle => "cycle",
            BoundaryShape::DisjointChains => "disjoint-chains",
            BoundaryShape::Invalid => "invalid",
        }
    }
}

/// Classifies a set of boundary components.
///
/// Every component must be a smooth rational curve (`C.(C + K) = -2`) and
/// distinct components must meet in 0 or 1 points, except that two curves
/// meeting twice form a cycle of length two.
pub fn verify_chain(surface: &SurfaceModel, components: &[DivisorClass]) -> BoundaryShape {
    let r = components.len();
    if r == 0 {
        return BoundaryShape::Invalid;
    }
    let k = surface.canonical_class();
    let mut degree = alloc::vec![0usize; r];
    let mut edges = Vec::new();
    for (i, c) in components.iter().enumerate() {
        let Ok(adj) = surface.intersect(c, &(c + &k)) else {
            return BoundaryShape::Invalid;
        };
        if adj != int(-2) {
            return BoundaryShape::Invalid;
        }
        for j in i + 1..r {
            let Ok(m) = surface.intersect(c, &components[j]) else {
                return BoundaryShape::Invalid;
            };
            if m == int(2) && r == 2 {
                return BoundaryShape::Cycle;
            }
            if m == int(1) {
                degree[i] += 1;
                degree[j] += 1;
                edges.push((i, j));
            } else if !m.is_zero() {
                return BoundaryShape::Invalid;
            }
        }
    }
    if degree.iter().any(|&d| d > 2) {
        return BoundaryShape::Invalid;
    }
    // connected components via union-find
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in &edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut roots: Vec<usize> = (0..r).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    let n_components = roots.len();
    // a forest has exactly r - (#components) edges
    let acyclic = edges.len() == r - n_components;
    match (n_components, acyclic) {
        (1, true) => BoundaryShape::Chain,
        (1, false) if degree.iter().all(|&d| d == 2) => BoundaryShape::Cycle,
        (_, true) => BoundaryShape::DisjointChains,
        _ => BoundaryShape::Invalid,
    }
}

/// Whether `components` form a chain in exactly the given order.
pub fn is_ordered_chain(surface: &SurfaceModel, components: &[DivisorClass]) -> bool {
    if verify_chain(surface, components) != BoundaryShape::Chain {
        return false;
    }
    components.windows(2).all(|w| {
        surface
            .intersect(&w[0], &w[1])
            .map(|m| m == int(1))
            .unwrap_or(false)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The last component `c_r`.
    Right,
    /// The first component `c_1`.
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryComponent {
    pub curve: CurveId,
    pub role: AngleRole,
}

/// A surface with a boundary divisor whose components carry angles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogPair {
    surface: SurfaceModel,
    /// Components in boundary order (chain order for chains).
    components: Vec<BoundaryComponent>,
    layout: AngleLayout,
}

impl LogPair {
    /// Boundary given by tracked curves; angles `beta_1..beta_r` follow the
    /// given order.
    pub fn new(surface: SurfaceModel, boundary: &[CurveId]) -> Result<Self, PairError> {
        if boundary.is_empty() {
            return Err(PairError::EmptyBoundary);
        }
        for (i, id) in boundary.iter().enumerate() {
            let curve = surface.curve(*id)?;
            if boundary[..i].contains(id) {
                return Err(PairError::RepeatedComponent(curve.label.clone()));
            }
        }
        let components = boundary
            .iter()
            .enumerate()
            .map(|(i, &curve)| BoundaryComponent {
                curve,
                role: AngleRole::Base(i + 1),
            })
            .collect();
        Ok(Self {
            surface,
            components,
            layout: AngleLayout::plain(boundary.len()),
        })
    }

    /// Boundary given by curve labels.
    pub fn from_labels(surface: SurfaceModel, labels: &[&str]) -> Result<Self, PairError> {
        let ids = labels
            .iter()
            .map(|l| surface.curve_by_label(l))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(surface, &ids)
    }

    pub fn surface(&self) -> &SurfaceModel {
        &self.surface
    }

    pub fn layout(&self) -> AngleLayout {
        self.layout
    }

    pub fn angle_count(&self) -> usize {
        self.layout.len()
    }

    pub fn components(&self) -> &[BoundaryComponent] {
        &self.components
    }

    pub fn angle_index(&self, role: AngleRole) -> usize {
        match role {
            AngleRole::Base(i) => self.layout.beta(i),
            AngleRole::Right(i) => self.layout.eta(i),
            AngleRole::Left(j) => self.layout.nu(j),
        }
    }

    pub fn component_class(&self, component: &BoundaryComponent) -> &DivisorClass {
        &self.surface.curves()[component.curve.0].class
    }

    pub fn component_label(&self, component: &BoundaryComponent) -> &str {
        &self.surface.curves()[component.curve.0].label
    }

    /// Component classes in boundary order.
    pub fn classes(&self) -> Vec<DivisorClass> {
        self.components
            .iter()
            .map(|c| self.component_class(c).clone())
            .collect()
    }

    /// Components paired with their angle index, in boundary order.
    pub fn indexed_components(&self) -> impl Iterator<Item = (usize, &BoundaryComponent)> {
        self.components.iter().map(|c| (self.angle_index(c.role), c))
    }

    pub fn shape(&self) -> BoundaryShape {
        verify_chain(&self.surface, &self.classes())
    }

    pub fn is_chain(&self) -> bool {
        is_ordered_chain(&self.surface, &self.classes())
    }

    pub fn contains_curve(&self, id: CurveId) -> bool {
        self.components.iter().any(|c| c.curve == id)
    }

    /// Sum of the boundary components, `C`.
    pub fn boundary_class(&self) -> DivisorClass {
        self.classes()
            .iter()
            .fold(DivisorClass::zero(self.surface.tag()), |acc, c| &acc + c)
    }

    /// `K_S + C`.
    pub fn log_canonical_at_zero(&self) -> DivisorClass {
        &self.surface.canonical_class() + &self.boundary_class()
    }

    /// `(K_S + C)^2`.
    pub fn log_canonical_square(&self) -> Rational {
        let kc = self.log_canonical_at_zero();
        self.surface
            .self_intersection(&kc)
            .expect("log canonical class lives on its surface")
    }

    /// `c_i . (K_S + C)` for every component, in boundary order.
    pub fn adjunction_ledger(&self) -> Vec<Rational> {
        let kc = self.log_canonical_at_zero();
        self.classes()
            .iter()
            .map(|c| self.surface.intersect(c, &kc).expect("same surface"))
            .collect()
    }

    /// `base - sum_i (1 - beta_i) C_i` with `base` a fixed class.
    pub fn twisted_class(&self, base: &DivisorClass) -> Result<AngleClass, PairError> {
        self.surface.intersect(base, base)?;
        let mut class = AngleClass::from_class(base);
        for (index, comp) in self.indexed_components() {
            let one_minus_beta = LinearForm::from_parts(int(1), [(index, int(-1))]);
            class.add_scaled(self.component_class(comp), &(-&one_minus_beta));
        }
        Ok(class)
    }

    /// `K_{beta,S,C} = K_S + sum_i (1 - beta_i) C_i`.
    pub fn log_canonical_class(&self) -> AngleClass {
        self.twisted_class(&(-&self.surface.canonical_class()))
            .expect("canonical class lives on its surface")
            .negate()
    }

    /// One tail blow-up at a smooth point of the end component on `side`.
    ///
    /// The new exceptional curve becomes the new end of the chain and takes
    /// the next right (`eta`) or left (`nu`) angle.
    pub fn tail_blow_up(&self, side: Side) -> Result<LogPair, PairError> {
        if !self.is_chain() {
            return Err(PairError::NotAChain(self.shape()));
        }
        let end = match side {
            Side::Right => *self.components.last().expect("nonempty"),
            Side::Left => self.components[0],
        };
        let surface = self.surface.blow_up(CenterSpec::smooth_point_of(end.curve))?;
        let exceptional = surface
            .blowups()
            .last()
            .expect("just blew up")
            .exceptional_curve;
        let mut layout = self.layout;
        let mut components = self.components.clone();
        match side {
            Side::Right => {
                layout.right += 1;
                components.push(BoundaryComponent {
                    curve: exceptional,
                    role: AngleRole::Right(layout.right),
                });
            }
            Side::Left => {
                layout.left += 1;
                components.insert(
                    0,
                    BoundaryComponent {
                        curve: exceptional,
                        role: AngleRole::Left(layout.left),
                    },
                );
            }
        }
        Ok(LogPair {
            surface,
            components,
            layout,
        })
    }

    /// Forgets the tail bookkeeping: all current components become base
    /// components `beta_1..beta_r` in boundary order.
    pub fn rebased(&self) -> LogPair {
        let ids: Vec<CurveId> = self.components.iter().map(|c| c.curve).collect();
        LogPair::new(self.surface.clone(), &ids).expect("components already validated")
    }

    /// Lattice position of the total transform of the exceptional curve
    /// carrying the given tail angle.
    pub fn exceptional_slot(&self, role: AngleRole) -> Option<usize> {
        let comp = self.components.iter().find(|c| c.role == role)?;
        match self.surface.curves()[comp.curve.0].kind {
            CurveKind::Exceptional(k) => Some(self.surface.blowups()[k].exceptional_index),
            _ => None,
        }
    }
}

/// A divisor class whose coordinates are affine-linear in the angles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleClass {
    tag: LatticeTag,
    coords: Vec<LinearForm>,
}

impl AngleClass {
    pub fn from_class(class: &DivisorClass) -> Self {
        Self {
            tag: class.tag(),
            coords: class
                .coords()
                .iter()
                .map(|c| LinearForm::constant(c.clone()))
                .collect(),
        }
    }

    pub fn tag(&self) -> LatticeTag {
        self.tag
    }

    pub fn coords(&self) -> &[LinearForm] {
        &self.coords
    }

    /// Adds `factor * class`.
    pub fn add_scaled(&mut self, class: &DivisorClass, factor: &LinearForm) {
        assert_eq!(self.tag, class.tag(), "classes from different surfaces");
        for (slot, c) in self.coords.iter_mut().zip(class.coords()) {
            if !c.is_zero() {
                *slot = &*slot + &factor.scale(c);
            }
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            tag: self.tag,
            coords: self.coords.iter().map(|f| -f).collect(),
        }
    }

    /// Pulls back into a later blow-up of the same base.
    pub fn pulled_back_to(&self, tag: LatticeTag) -> Self {
        assert!(tag.base == self.tag.base && tag.blowups >= self.tag.blowups);
        let mut coords = self.coords.clone();
        coords.resize(tag.rank(), LinearForm::zero());
        Self { tag, coords }
    }

    /// The fixed class obtained at a concrete angle vector.
    pub fn eval(&self, beta: &[Rational]) -> DivisorClass {
        DivisorClass::from_coords(self.tag, self.coords.iter().map(|f| f.eval(beta)).collect())
            .expect("coordinate count matches tag")
    }

    /// `self . z` as a linear form in the angles.
    pub fn intersect_with_class(
        &self,
        surface: &SurfaceModel,
        z: &DivisorClass,
    ) -> Result<LinearForm, LatticeError> {
        if z.tag() != self.tag || surface.tag() != self.tag {
            return Err(LatticeError::SurfaceMismatch {
                expected: self.tag,
                found: z.tag(),
            });
        }
        let rank = surface.rank();
        let mut out = LinearForm::zero();
        for i in 0..rank {
            let mut weight = Rational::zero();
            for j in 0..rank {
                let g = surface.form_entry(i, j);
                if g != 0 {
                    weight += &z.coords()[j] * int(g);
                }
            }
            if !weight.is_zero() {
                out = &out + &self.coords[i].scale(&weight);
            }
        }
        Ok(out)
    }

    /// `self . self` as a quadratic form in the angles.
    pub fn square(&self, surface: &SurfaceModel) -> QuadraticForm {
        assert_eq!(surface.tag(), self.tag, "class lives on another surface");
        let rank = surface.rank();
        let mut out = QuadraticForm::default();
        for i in 0..rank {
            for j in 0..rank {
                let g = surface.form_entry(i, j);
                if g != 0 {
                    let prod = &self.coords[i] * &self.coords[j];
                    out = &out + &scale_quadratic(&prod, &int(g));
                }
            }
        }
        out
    }
}

fn scale_quadratic(q: &QuadraticForm, factor: &Rational) -> QuadraticForm {
    let mut out = QuadraticForm::constant(q.constant_term() * factor);
    for (i, c) in q.linear_terms() {
        out.add_linear(i, c * factor);
    }
    for ((i, j), c) in q.quadratic_terms() {
        out.add_quadratic(i, j, c * factor);
    }
    out
}

/// Applies `h` right-tail and then `v` left-tail blow-ups.
pub fn tail_sequence(base: &LogPair, right: usize, left: usize) -> Result<LogPair, PairError> {
    let mut pair = base.clone();
    for _ in 0..right {
        pair = pair.tail_blow_up(Side::Right)?;
    }
    for _ in 0..left {
        pair = pair.tail_blow_up(Side::Left)?;
    }
    Ok(pair)
}

/// The right-hand side of the iterated pull-back formula for
/// `-K_{(beta, eta, nu), S, C}` after `h` right and `v` left tail blow-ups:
///
/// `-pi^* K_{beta,s,c} - sum_i (1 - eta_i + eta_{i-1}) H_i - sum_j (1 - nu_j + nu_{j-1}) V_j`
///
/// with `H_i`, `V_j` the total transforms on `S` and `eta_0 = beta_r`,
/// `nu_0 = beta_1`.
pub fn pullback_formula_rhs(base: &LogPair, target: &LogPair) -> AngleClass {
    let layout = target.layout();
    let mut rhs = base
        .log_canonical_class()
        .negate()
        .pulled_back_to(target.surface().tag());
    let tag = target.surface().tag();
    for i in 1..=layout.right {
        let slot = target
            .exceptional_slot(AngleRole::Right(i))
            .expect("right tail curve is exceptional");
        let coeff = LinearForm::from_parts(int(1), [(layout.eta(i), int(-1)), (layout.eta(i - 1), int(1))]);
        rhs.add_scaled(&DivisorClass::basis(tag, slot), &(-&coeff));
    }
    for j in 1..=layout.left {
        let slot = target
            .exceptional_slot(AngleRole::Left(j))
            .expect("left tail curve is exceptional");
        let coeff = LinearForm::from_parts(int(1), [(layout.nu(j), int(-1)), (layout.nu(j - 1), int(1))]);
        rhs.add_scaled(&DivisorClass::basis(tag, slot), &(-&coeff));
    }
    rhs
}

/// Checks the iterated pull-back formula for `-K_beta` against the lattice
/// computation on the blown-up surface.
pub fn verify_pullback_formula(base: &LogPair, right: usize, left: usize) -> Result<bool, PairError> {
    if base.layout().right + base.layout().left != 0 {
        return verify_pullback_formula(&base.rebased(), right, left);
    }
    let target = tail_sequence(base, right, left)?;
    let lhs = target.log_canonical_class().negate();
    Ok(lhs == pullback_formula_rhs(base, &target))
}
