//! Exact strict linear feasibility: Gordan alternatives with certificates,
//! Fourier–Motzkin elimination, near-origin questions and ample-angle bodies.

mod body;
mod fourier_motzkin;
mod linalg;
mod polytope;
mod sampling;
pub mod simplex;

pub use body::{
    ample_angle_body, convexity_check, origin_in_closure, AmpleAngleBody, AnnotatedPoint,
    homogenize, BodyOptions, ClosureVerdict, ConvexityReport, OriginReport,
};
pub use fourier_motzkin::{fm_feasible, fm_homogeneous_feasible, fourier_motzkin_eliminate};
pub use linalg::{nullspace, rank, solve_unique};
pub use polytope::{closure_rays, closure_vertices, vertex_is_sound};
pub use sampling::{halton, halton_point, radical_inverse};

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::rational::{primitive_integer_vector, Rational};
use simplex::{phase_one, PhaseOne};

/// The question `exists x with x . a_j > 0` for every column `a_j` of a
/// `k x m` matrix. Orthant constraints enter as identity columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousSystem {
    dim: usize,
    columns: Vec<Vec<Rational>>,
}

impl HomogeneousSystem {
    pub fn new(dim: usize) -> Self {
        Self { dim, columns: Vec::new() }
    }

    /// Panics if a column does not have `dim` entries.
    pub fn from_columns(dim: usize, columns: &[Vec<Rational>]) -> Self {
        for c in columns {
            assert_eq!(c.len(), dim, "column length must match the dimension");
        }
        Self { dim, columns: columns.to_vec() }
    }

    /// Builds a system from row-major `k x m` data.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let dim = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let columns = (0..m)
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Self { dim, columns }
    }

    pub fn push_column(&mut self, column: Vec<Rational>) {
        assert_eq!(column.len(), self.dim);
        self.columns.push(column);
    }

    /// Appends the `k` identity columns encoding `x_i > 0`.
    pub fn with_orthant(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            let mut e = vec![Rational::zero(); self.dim];
            e[i] = Rational::one();
            out.columns.push(e);
        }
        out
    }

    /// Number of variables `k`.
    pub fn row_count(&self) -> usize {
        self.dim
    }

    /// Number of constraints `m`.
    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<Rational>] {
        &self.columns
    }

    /// Entry in row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.columns[j][i]
    }

    /// Row-major copy of the matrix.
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.dim)
            .map(|i| self.columns.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    /// `x . A`, one value per column.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.columns
            .iter()
            .map(|c| c.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `A y`, one value per row.
    pub fn combine(&self, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (c, w) in self.columns.iter().zip(y) {
            if w.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(c) {
                *o += a * w;
            }
        }
        out
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.apply(x).iter().all(Signed::is_positive)
    }
}

/// One side of the Gordan alternative, verifiable by arithmetic alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityCertificate {
    /// `x . A > 0` componentwise.
    Feasible { point: Vec<Rational> },
    /// `A y = 0`, `y >= 0`, `y != 0`.
    Infeasible { dual: Vec<Rational> },
}

impl FeasibilityCertificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityCertificate::Feasible { .. })
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            FeasibilityCertificate::Feasible { point } => Some(point),
            FeasibilityCertificate::Infeasible { .. } => None,
        }
    }

    pub fn dual(&self) -> Option<&[Rational]> {
        match self {
            FeasibilityCertificate::Infeasible { dual } => Some(dual),
            FeasibilityCertificate::Feasible { .. } => None,
        }
    }

    pub fn verify(&self, sys: &HomogeneousSystem) -> bool {
        match self {
            FeasibilityCertificate::Feasible { point } => sys.is_satisfied_by(point),
            FeasibilityCertificate::Infeasible { dual } => {
                dual.len() == sys.column_count()
                    && dual.iter().all(|y| !y.is_negative())
                    && dual.iter().any(|y| !y.is_zero())
                    && sys.combine(dual).iter().all(Zero::is_zero)
            }
        }
    }
}

/// Decides the Gordan alternative exactly.
///
/// Phase one runs on `[A; 1^T] y = (0, 1)`, `y >= 0`. A feasible basis is the
/// dual certificate; otherwise the Farkas vector `(u, w)` of the phase-one
/// problem has `A^T u >= -w > 0`, so `u` is the primal point.
pub fn gordan_feasible(sys: &HomogeneousSystem) -> FeasibilityCertificate {
    let k = sys.row_count();
    let m = sys.column_count();
    if m == 0 {
        return FeasibilityCertificate::Feasible { point: vec![Rational::one(); k] };
    }
    let mut rows = sys.rows();
    rows.push(vec![Rational::one(); m]);
    let mut rhs = vec![Rational::zero(); k];
    rhs.push(Rational::one());
    match phase_one(&rows, &rhs) {
        PhaseOne::Feasible(y) => FeasibilityCertificate::Infeasible { dual: y },
        PhaseOne::Infeasible(farkas) => {
            let point = primitive_integer_vector(&farkas[..k]);
            debug_assert!(sys.is_satisfied_by(&point));
            FeasibilityCertificate::Feasible { point }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn sys(cols: &[&[i64]]) -> HomogeneousSystem {
        let dim = cols.first().map_or(0, |c| c.len());
        let columns: Vec<Vec<Rational>> = cols
            .iter()
            .map(|c| c.iter().map(|&v| int(v)).collect())
            .collect();
        HomogeneousSystem::from_columns(dim, &columns)
    }

    #[test]
    fn identity_is_feasible() {
        let s = sys(&[&[1, 0], &[0, 1]]);
        let cert = gordan_feasible(&s);
        assert_eq!(cert, FeasibilityCertificate::Feasible { point: vec![int(1), int(1)] });
        assert!(cert.verify(&s));
    }

    #[test]
    fn opposing_columns() {
        let s = sys(&[&[1], &[-1]]);
        let cert = gordan_feasible(&s);
        let dual = cert.dual().expect("infeasible");
        assert_eq!(dual[0], dual[1]);
        assert!(cert.verify(&s));
    }

    #[test]
    fn two_right_tails() {
        // rows beta_r (index 0), delta_1, delta_2; c_r^2 = -2
        let s = sys(&[&[-3, 1, 0], &[1, -2, 1]]).with_orthant();
        let cert = gordan_feasible(&s);
        assert!(cert.is_feasible());
        assert!(cert.verify(&s));
    }

    #[test]
    fn empty_system() {
        let s = HomogeneousSystem::new(3);
        assert!(gordan_feasible(&s).verify(&s));
    }

    #[test]
    fn wrong_certificates_rejected() {
        let s = sys(&[&[1], &[-1]]);
        assert!(!FeasibilityCertificate::Feasible { point: vec![int(1)] }.verify(&s));
        assert!(!FeasibilityCertificate::Infeasible { dual: vec![int(0), int(0)] }.verify(&s));
        assert!(!FeasibilityCertificate::Infeasible { dual: vec![int(1), int(2)] }.verify(&s));
    }

    #[test]
    fn rows_and_columns_agree() {
        let s = sys(&[&[1, 2], &[3, 4], &[5, 6]]);
        let back = HomogeneousSystem::from_rows(&s.rows());
        assert_eq!(back, s);
        assert_eq!(s.entry(1, 2), &int(6));
    }
}
