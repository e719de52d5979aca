//! Sparse exact bivariate polynomials.
//!
//! Terms live in a `BTreeMap` keyed by exponent pairs `(i, j)` for `x^i y^j`;
//! zero coefficients are never stored, so structural equality is semantic
//! equality. The canonical term order for printing and matrix assembly is
//! graded lexicographic with `x` before `y`, highest first.

use crate::scalar::{rat_str, Rational, Scalar};
use crate::unipoly::UniPoly;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// The two variables of a [`BiPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("no leading form")]
    NoLeadingForm,
    #[error("non-invertible change")]
    NonInvertibleChange,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("form is not homogeneous")]
    NotHomogeneous,
}

/// Sparse bivariate polynomial over a [`Scalar`]; `Rational` by default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly<S = Rational> {
    terms: BTreeMap<(u32, u32), S>,
}

/// Graded-lex order, `x` before `y`: compare total degree, then `x`-exponent.
pub fn graded_lex(a: (u32, u32), b: (u32, u32)) -> std::cmp::Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

impl<S: Scalar> Default for BiPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> BiPoly<S> {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn var_x() -> Self {
        Self::monomial(1, 0, S::one())
    }

    pub fn var_y() -> Self {
        Self::monomial(0, 1, S::one())
    }

    /// `c * x^i * y^j`; the zero coefficient yields the zero polynomial.
    pub fn monomial(i: u32, j: u32, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), S)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: (u32, u32), c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(S::zero);
        let sum = entry.clone() + c;
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            *entry = sum;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    /// Coefficient of `x^i y^j` (zero if the term is absent).
    pub fn coeff(&self, i: u32, j: u32) -> S {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in ascending `(i, j)` map order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &S)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms sorted canonically: graded-lex descending.
    pub fn terms_graded_desc(&self) -> Vec<((u32, u32), &S)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&e, c)| (e, c)).collect();
        v.sort_by(|a, b| graded_lex(b.0, a.0));
        v
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Highest exponent of `var`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| match var {
                Var::X => i,
                Var::Y => j,
            })
            .max()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e, v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at a point.
    pub fn evaluate(&self, x: &S, y: &S) -> S {
        let mut acc = S::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t = t * x.clone();
            }
            for _ in 0..j {
                t = t * y.clone();
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes `x = x0`, leaving a univariate polynomial in `y`.
    pub fn substitute_x(&self, x0: &S) -> UniPoly<S> {
        let deg_y = self.degree_in(Var::Y).map_or(0, |d| d as usize);
        let mut coeffs = vec![S::zero(); deg_y + 1];
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t = t * x0.clone();
            }
            coeffs[j as usize] = coeffs[j as usize].clone() + t;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitutes `y = y0`, leaving a univariate polynomial in `x`.
    pub fn substitute_y(&self, y0: &S) -> UniPoly<S> {
        let deg_x = self.degree_in(Var::X).map_or(0, |d| d as usize);
        let mut coeffs = vec![S::zero(); deg_x + 1];
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..j {
                t = t * y0.clone();
            }
            coeffs[i as usize] = coeffs[i as usize].clone() + t;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Coefficients with respect to `y`: entry `k` is the `x`-polynomial
    /// multiplying `y^k`.
    pub fn coeffs_wrt_y(&self) -> Vec<UniPoly<S>> {
        let deg_y = self.degree_in(Var::Y).map_or(0, |d| d as usize);
        let mut out = vec![Vec::new(); deg_y + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut out[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, S::zero());
            }
            row[i as usize] = c.clone();
        }
        out.into_iter().map(UniPoly::from_coeffs).collect()
    }

    /// Embeds a univariate polynomial as a bivariate one in `var`.
    pub fn from_unipoly(p: &UniPoly<S>, var: Var) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let e = match var {
                Var::X => (k as u32, 0),
                Var::Y => (0, k as u32),
            };
            (e, c.clone())
        }))
    }

    /// The polynomial as univariate in `var`, if the other variable is absent.
    pub fn as_unipoly(&self, var: Var) -> Option<UniPoly<S>> {
        let other = match var {
            Var::X => Var::Y,
            Var::Y => Var::X,
        };
        if self.degree_in(other).unwrap_or(0) > 0 {
            return None;
        }
        let deg = self.degree_in(var).map_or(0, |d| d as usize);
        let mut coeffs = vec![S::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let k = match var {
                Var::X => i,
                Var::Y => j,
            };
            coeffs[k as usize] = c.clone();
        }
        Some(UniPoly::from_coeffs(coeffs))
    }

    /// Exact partial derivative of the given order.
    pub fn differentiate(&self, var: Var, order: u32) -> Self {
        let mut cur = self.clone();
        for _ in 0..order {
            cur = Self::from_terms(cur.terms.iter().filter_map(|(&(i, j), c)| {
                let (e, factor) = match var {
                    Var::X => {
                        if i == 0 {
                            return None;
                        }
                        ((i - 1, j), i)
                    }
                    Var::Y => {
                        if j == 0 {
                            return None;
                        }
                        ((i, j - 1), j)
                    }
                };
                let mut k = S::zero();
                for _ in 0..factor {
                    k = k + S::one();
                }
                Some((e, c.clone() * k))
            }));
        }
        cur
    }

    /// Affine substitution `x -> a x + b y + e`, `y -> c x + d y + f` with
    /// `matrix = [[a, b], [c, d]]`, `shift = [e, f]`. The matrix must be
    /// invertible.
    pub fn compose_linear(&self, matrix: &[[S; 2]; 2], shift: &[S; 2]) -> Result<Self, PolyError> {
        let det = matrix[0][0].clone() * matrix[1][1].clone()
            - matrix[0][1].clone() * matrix[1][0].clone();
        if det.is_zero() {
            return Err(PolyError::NonInvertibleChange);
        }
        Ok(self.substitute_affine(matrix, shift))
    }

    /// Taylor shift `x -> x + dx`, `y -> y + dy`.
    pub fn taylor_shift(&self, dx: &S, dy: &S) -> Self {
        let id = [
            [S::one(), S::zero()],
            [S::zero(), S::one()],
        ];
        self.substitute_affine(&id, &[dx.clone(), dy.clone()])
    }

    fn substitute_affine(&self, matrix: &[[S; 2]; 2], shift: &[S; 2]) -> Self {
        let image_x = Self::from_terms([
            ((1, 0), matrix[0][0].clone()),
            ((0, 1), matrix[0][1].clone()),
            ((0, 0), shift[0].clone()),
        ]);
        let image_y = Self::from_terms([
            ((1, 0), matrix[1][0].clone()),
            ((0, 1), matrix[1][1].clone()),
            ((0, 0), shift[1].clone()),
        ]);
        // Cache powers of the two images; exponents are small in practice.
        let max_i = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let pows_x = power_table(&image_x, max_i);
        let pows_y = power_table(&image_y, max_j);
        let mut acc = Self::zero();
        for (&(i, j), c) in &self.terms {
            let t = (&pows_x[i as usize] * &pows_y[j as usize]).scale(c);
            acc = &acc + &t;
        }
        acc
    }
}

fn power_table<S: Scalar>(p: &BiPoly<S>, up_to: u32) -> Vec<BiPoly<S>> {
    let mut v = Vec::with_capacity(up_to as usize + 1);
    v.push(BiPoly::one());
    for k in 1..=up_to as usize {
        let next = &v[k - 1] * p;
        v.push(next);
    }
    v
}

impl<'a, S: Scalar> Add for &'a BiPoly<S> {
    type Output = BiPoly<S>;
    fn add(self, rhs: &'a BiPoly<S>) -> BiPoly<S> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Sub for &'a BiPoly<S> {
    type Output = BiPoly<S>;
    fn sub(self, rhs: &'a BiPoly<S>) -> BiPoly<S> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Neg for &'a BiPoly<S> {
    type Output = BiPoly<S>;
    fn neg(self) -> BiPoly<S> {
        BiPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<'a, S: Scalar> Mul for &'a BiPoly<S> {
    type Output = BiPoly<S>;
    fn mul(self, rhs: &'a BiPoly<S>) -> BiPoly<S> {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl<S: Scalar> $trait for BiPoly<S> {
            type Output = BiPoly<S>;
            fn $method(self, rhs: BiPoly<S>) -> BiPoly<S> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for BiPoly<S> {
    type Output = BiPoly<S>;
    fn neg(self) -> BiPoly<S> {
        -&self
    }
}

/// Variable names used for parsing and rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarNames {
    pub x: &'static str,
    pub y: &'static str,
}

/// Algebraic variables `x`, `y`.
pub const VARS_XY: VarNames = VarNames { x: "x", y: "y" };
/// Differential-operator variables `Dx`, `Dy`.
pub const VARS_DXDY: VarNames = VarNames { x: "Dx", y: "Dy" };

impl BiPoly<Rational> {
    /// Canonical text: graded-lex descending terms, `a/b` coefficients,
    /// explicit `*` and `^`. Example: `x^2*y - 1/2*y + 3`.
    pub fn canonical_text(&self) -> String {
        self.text_with(&VARS_XY)
    }

    pub fn text_with(&self, names: &VarNames) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, ((i, j), c)) in self.terms_graded_desc().into_iter().enumerate() {
            let neg = c < &Rational::from_integer(0.into());
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if (i, j) == (0, 0) || !abs.is_one() {
                factors.push(rat_str(&abs));
            }
            if i > 0 {
                factors.push(if i == 1 {
                    names.x.to_string()
                } else {
                    format!("{}^{}", names.x, i)
                });
            }
            if j > 0 {
                factors.push(if j == 1 {
                    names.y.to_string()
                } else {
                    format!("{}^{}", names.y, j)
                });
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for BiPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn xp() -> BiPoly {
        BiPoly::var_x()
    }
    fn yp() -> BiPoly {
        BiPoly::var_y()
    }

    #[test]
    fn multiply_expands_square() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let s = &xp() + &yp();
        let sq = &s * &s;
        let expected = BiPoly::from_terms([
            ((2, 0), rat_int(1)),
            ((1, 1), rat_int(2)),
            ((0, 2), rat_int(1)),
        ]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn multiply_identity_and_fixture_product() {
        let f = BiPoly::from_terms([((1, 1), rat_int(1)), ((0, 0), rat_int(-1))]);
        assert_eq!(&f * &BiPoly::one(), f);
        // x * (x + y - 2) = x^2 + xy - 2x
        let g = BiPoly::from_terms([
            ((1, 0), rat_int(1)),
            ((0, 1), rat_int(1)),
            ((0, 0), rat_int(-2)),
        ]);
        let prod = &xp() * &g;
        let expected = BiPoly::from_terms([
            ((2, 0), rat_int(1)),
            ((1, 1), rat_int(1)),
            ((1, 0), rat_int(-2)),
        ]);
        assert_eq!(prod, expected);
    }

    #[test]
    fn evaluate_examples() {
        let f = BiPoly::from_terms([((1, 1), rat_int(1)), ((0, 0), rat_int(-1))]);
        assert_eq!(f.evaluate(&rat_int(1), &rat_int(1)), rat_int(0));
        let g = BiPoly::from_terms([
            ((2, 0), rat_int(1)),
            ((0, 2), rat_int(1)),
            ((0, 0), rat_int(-5)),
        ]);
        assert_eq!(g.evaluate(&rat_int(0), &rat_int(0)), rat_int(-5));
        assert_eq!(BiPoly::zero().evaluate(&rat(3, 2), &rat(1, 7)), rat_int(0));
    }

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(BiPoly::<Rational>::zero().total_degree(), None);
        assert_eq!(BiPoly::one().total_degree(), Some(0));
    }

    #[test]
    fn differentiate_examples() {
        // d/dx (x^2 + xy) = 2x + y
        let f = BiPoly::from_terms([((2, 0), rat_int(1)), ((1, 1), rat_int(1))]);
        let d = f.differentiate(Var::X, 1);
        let expected = BiPoly::from_terms([((1, 0), rat_int(2)), ((0, 1), rat_int(1))]);
        assert_eq!(d, expected);
        // d/dy of a constant = 0
        assert!(BiPoly::constant(rat_int(7)).differentiate(Var::Y, 1).is_zero());
        // d2/dxdy (xy) = 1
        let xy = BiPoly::monomial(1, 1, rat_int(1));
        assert_eq!(
            xy.differentiate(Var::X, 1).differentiate(Var::Y, 1),
            BiPoly::one()
        );
    }

    #[test]
    fn compose_linear_examples() {
        let id = [[rat_int(1), rat_int(0)], [rat_int(0), rat_int(1)]];
        let f = BiPoly::from_terms([((1, 1), rat_int(1)), ((0, 0), rat_int(-1))]);
        assert_eq!(
            f.compose_linear(&id, &[rat_int(0), rat_int(0)]).unwrap(),
            f
        );
        // xy with x -> x, y -> y + x gives x^2 + xy
        let m = [[rat_int(1), rat_int(0)], [rat_int(1), rat_int(1)]];
        let xy = BiPoly::monomial(1, 1, rat_int(1));
        let out = xy.compose_linear(&m, &[rat_int(0), rat_int(0)]).unwrap();
        let expected = BiPoly::from_terms([((2, 0), rat_int(1)), ((1, 1), rat_int(1))]);
        assert_eq!(out, expected);
        // x with shift x -> x - 1
        let out = BiPoly::var_x()
            .compose_linear(&id, &[rat_int(-1), rat_int(0)])
            .unwrap();
        let expected = BiPoly::from_terms([((1, 0), rat_int(1)), ((0, 0), rat_int(-1))]);
        assert_eq!(out, expected);
        // singular matrix rejected
        let sing = [[rat_int(1), rat_int(1)], [rat_int(2), rat_int(2)]];
        assert_eq!(
            BiPoly::var_x()
                .compose_linear(&sing, &[rat_int(0), rat_int(0)])
                .unwrap_err(),
            PolyError::NonInvertibleChange
        );
    }

    #[test]
    fn canonical_text_matches_fixture() {
        let f = BiPoly::from_terms([
            ((2, 1), rat_int(1)),
            ((0, 1), rat(-1, 2)),
            ((0, 0), rat_int(3)),
        ]);
        assert_eq!(f.canonical_text(), "x^2*y - 1/2*y + 3");
        assert_eq!(BiPoly::zero().canonical_text(), "0");
        let g = BiPoly::from_terms([((1, 0), rat_int(-1)), ((0, 1), rat_int(-1))]);
        assert_eq!(g.canonical_text(), "-x - y");
    }
}
