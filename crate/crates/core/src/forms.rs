//! Affine-linear and quadratic polynomials in the angle vector, with exact
//! rational coefficients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, int, Rational};

/// `constant + sum_i coeff_i * beta_i`, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinearForm {
    constant: Rational,
    coeffs: BTreeMap<usize, Rational>,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(value: Rational) -> Self {
        Self {
            constant: value,
            coeffs: BTreeMap::new(),
        }
    }

    /// The coordinate function `beta_index`.
    pub fn variable(index: usize) -> Self {
        Self::term(index, int(1))
    }

    pub fn term(index: usize, coeff: Rational) -> Self {
        let mut form = Self::zero();
        form.add_term(index, coeff);
        form
    }

    pub fn from_parts(constant: Rational, coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut form = Self::constant(constant);
        for (i, c) in coeffs {
            form.add_term(i, c);
        }
        form
    }

    /// Dense constructor: `coeffs[i]` multiplies `beta_i`.
    pub fn dense(constant: Rational, coeffs: &[Rational]) -> Self {
        Self::from_parts(constant, coeffs.iter().cloned().enumerate())
    }

    pub fn add_term(&mut self, index: usize, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(index).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn coefficient(&self, index: usize) -> Rational {
        self.coeffs.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    /// Non-zero coefficients in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constant.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The form without its constant term.
    pub fn homogeneous_part(&self) -> LinearForm {
        Self {
            constant: Rational::zero(),
            coeffs: self.coeffs.clone(),
        }
    }

    /// One past the largest variable index in use.
    pub fn dimension_hint(&self) -> usize {
        self.coeffs.keys().next_back().map_or(0, |i| i + 1)
    }

    pub fn dense_coefficients(&self, dim: usize) -> Vec<Rational> {
        (0..dim).map(|i| self.coefficient(i)).collect()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            constant: &self.constant * factor,
            coeffs: self.coeffs.iter().map(|(i, c)| (*i, c * factor)).collect(),
        }
    }

    /// Evaluates at `point`; missing coordinates count as zero.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut value = self.constant.clone();
        for (i, c) in &self.coeffs {
            if let Some(x) = point.get(*i) {
                value += c * x;
            }
        }
        value
    }

    /// Substitutes `beta_index = replacement`.
    pub fn substitute(&self, index: usize, replacement: &LinearForm) -> LinearForm {
        let c = self.coefficient(index);
        if c.is_zero() {
            return self.clone();
        }
        let mut rest = self.clone();
        rest.coeffs.remove(&index);
        &rest + &replacement.scale(&c)
    }

    /// Renders with the given variable names, e.g. `1 - eta_1 + beta_2`.
    pub fn render(&self, name: impl Fn(usize) -> String) -> String {
        let mut out = String::new();
        for (i, c) in &self.coeffs {
            push_term(&mut out, c, &name(*i));
        }
        if !self.constant.is_zero() || out.is_empty() {
            push_term(&mut out, &self.constant, "");
        }
        out
    }
}

fn push_term(out: &mut String, coeff: &Rational, var: &str) {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    if var.is_empty() {
        out.push_str(&format_rational(&magnitude));
    } else if magnitude.is_one() {
        out.push_str(var);
    } else {
        out.push_str(&format!("{}*{}", format_rational(&magnitude), var));
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|i| format!("b{}", i + 1)))
    }
}

impl Add for &LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        out.constant += &rhs.constant;
        for (i, c) in &rhs.coeffs {
            out.add_term(*i, c.clone());
        }
        out
    }
}

impl Sub for &LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: &LinearForm) -> LinearForm {
        self + &(-rhs)
    }
}

impl Neg for &LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        self.scale(&int(-1))
    }
}

impl Mul for &LinearForm {
    type Output = QuadraticForm;
    fn mul(self, rhs: &LinearForm) -> QuadraticForm {
        let mut q = QuadraticForm::constant(&self.constant * &rhs.constant);
        for (i, c) in &self.coeffs {
            q.add_linear(*i, c * &rhs.constant);
        }
        for (j, d) in &rhs.coeffs {
            q.add_linear(*j, d * &self.constant);
        }
        for (i, c) in &self.coeffs {
            for (j, d) in &rhs.coeffs {
                q.add_quadratic(*i, *j, c * d);
            }
        }
        q
    }
}

/// `constant + sum linear_i beta_i + sum_{i<=j} quad_ij beta_i beta_j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuadraticForm {
    constant: Rational,
    linear: BTreeMap<usize, Rational>,
    quadratic: BTreeMap<(usize, usize), Rational>,
}

fn bump<K: Ord + Copy>(map: &mut BTreeMap<K, Rational>, key: K, value: Rational) {
    if value.is_zero() {
        return;
    }
    let slot = map.entry(key).or_insert_with(Rational::zero);
    *slot += value;
    if slot.is_zero() {
        map.remove(&key);
    }
}

impl QuadraticForm {
    pub fn constant(value: Rational) -> Self {
        Self {
            constant: value,
            ..Self::default()
        }
    }

    pub fn add_linear(&mut self, index: usize, coeff: Rational) {
        bump(&mut self.linear, index, coeff);
    }

    /// Adds `coeff * beta_i * beta_j`; the key is stored with `i <= j`.
    pub fn add_quadratic(&mut self, i: usize, j: usize, coeff: Rational) {
        let key = if i <= j { (i, j) } else { (j, i) };
        bump(&mut self.quadratic, key, coeff);
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn linear_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.linear.iter().map(|(i, c)| (*i, c))
    }

    pub fn quadratic_terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.quadratic.iter().map(|(k, c)| (*k, c))
    }

    pub fn linear_coefficient(&self, index: usize) -> Rational {
        self.linear.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    /// Homogeneous degree-one part as a linear form.
    pub fn linear_part(&self) -> LinearForm {
        LinearForm::from_parts(Rational::zero(), self.linear.iter().map(|(i, c)| (*i, c.clone())))
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let at = |i: usize| point.get(i).cloned().unwrap_or_else(Rational::zero);
        let mut value = self.constant.clone();
        for (i, c) in &self.linear {
            value += c * at(*i);
        }
        for ((i, j), c) in &self.quadratic {
            value += c * at(*i) * at(*j);
        }
        value
    }

    /// Coefficients `(c0, c1, c2)` of `t -> q(t * direction)`.
    pub fn along_ray(&self, direction: &[Rational]) -> [Rational; 3] {
        let at = |i: usize| direction.get(i).cloned().unwrap_or_else(Rational::zero);
        let mut c1 = Rational::zero();
        for (i, c) in &self.linear {
            c1 += c * at(*i);
        }
        let mut c2 = Rational::zero();
        for ((i, j), c) in &self.quadratic {
            c2 += c * at(*i) * at(*j);
        }
        [self.constant.clone(), c1, c2]
    }

    pub fn render(&self, name: impl Fn(usize) -> String) -> String {
        let mut out = String::new();
        for ((i, j), c) in &self.quadratic {
            let var = if i == j {
                format!("{}^2", name(*i))
            } else {
                format!("{}*{}", name(*i), name(*j))
            };
            push_term(&mut out, c, &var);
        }
        for (i, c) in &self.linear {
            push_term(&mut out, c, &name(*i));
        }
        if !self.constant.is_zero() || out.is_empty() {
            push_term(&mut out, &self.constant, "");
        }
        out
    }
}

impl Add for &QuadraticForm {
    type Output = QuadraticForm;
    fn add(self, rhs: &QuadraticForm) -> QuadraticForm {
        let mut out = self.clone();
        out.constant += &rhs.constant;
        for (i, c) in &rhs.linear {
            out.add_linear(*i, c.clone());
        }
        for ((i, j), c) in &rhs.quadratic {
            out.add_quadratic(*i, *j, c.clone());
        }
        out
    }
}

impl Neg for &QuadraticForm {
    type Output = QuadraticForm;
    fn neg(self) -> QuadraticForm {
        QuadraticForm {
            constant: -&self.constant,
            linear: self.linear.iter().map(|(i, c)| (*i, -c)).collect(),
            quadratic: self.quadratic.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|i| format!("b{}", i + 1)))
    }
}

/// Which geometric role an angle slot plays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleRole {
    /// `beta_i`, angle of the `i`-th original boundary component (1-based).
    Base(usize),
    /// `eta_i` (written `delta_i` in proofs), angle of the `i`-th right-tail
    /// exceptional curve.
    Right(usize),
    /// `nu_j` (written `gamma_j` in proofs), angle of the `j`-th left-tail
    /// exceptional curve.
    Left(usize),
}

/// Ordering of the angle vector `(beta_1..beta_r, eta_1..eta_h, nu_1..nu_v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AngleLayout {
    pub base: usize,
    pub right: usize,
    pub left: usize,
}

impl AngleLayout {
    pub fn plain(count: usize) -> Self {
        Self {
            base: count,
            right: 0,
            left: 0,
        }
    }

    pub fn tail(base: usize, right: usize, left: usize) -> Self {
        Self { base, right, left }
    }

    pub fn len(&self) -> usize {
        self.base + self.right + self.left
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index of `beta_i`, 1-based `i`.
    pub fn beta(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.base, "beta_{i} out of range");
        i - 1
    }

    /// Index of `eta_i`; `eta_0` resolves to `beta_r`.
    pub fn eta(&self, i: usize) -> usize {
        if i == 0 {
            return self.beta(self.base);
        }
        assert!(i <= self.right, "eta_{i} out of range");
        self.base + i - 1
    }

    /// Index of `nu_j`; `nu_0` resolves to `beta_1`.
    pub fn nu(&self, j: usize) -> usize {
        if j == 0 {
            return self.beta(1);
        }
        assert!(j <= self.left, "nu_{j} out of range");
        self.base + self.right + j - 1
    }

    pub fn role(&self, index: usize) -> AngleRole {
        if index < self.base {
            AngleRole::Base(index + 1)
        } else if index < self.base + self.right {
            AngleRole::Right(index - self.base + 1)
        } else {
            AngleRole::Left(index - self.base - self.right + 1)
        }
    }

    /// Primary name of a slot.
    pub fn name(&self, index: usize) -> String {
        match self.role(index) {
            AngleRole::Base(i) => format!("beta_{i}"),
            AngleRole::Right(i) => format!("eta_{i}"),
            AngleRole::Left(j) => format!("nu_{j}"),
        }
    }

    /// Alternative name used in proofs (`delta` for right, `gamma` for left).
    pub fn alias(&self, index: usize) -> Option<String> {
        match self.role(index) {
            AngleRole::Base(_) => None,
            AngleRole::Right(i) => Some(format!("delta_{i}")),
            AngleRole::Left(j) => Some(format!("gamma_{j}")),
        }
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.name(i)).collect()
    }
}
