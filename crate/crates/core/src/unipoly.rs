//! Dense exact univariate polynomials.
//!
//! Coefficient index equals the exponent; the highest stored coefficient is
//! nonzero (the zero polynomial stores nothing). Used for eliminants, fibers
//! at a fixed coordinate, Sturm sequences, and gcd computations.

use crate::scalar::{rat_str, Rational, Scalar};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dense univariate polynomial over a [`Scalar`]; `Rational` by default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<S = Rational> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Default for UniPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> UniPoly<S> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn var() -> Self {
        Self::from_coeffs(vec![S::zero(), S::one()])
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: S) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from coefficients (index = exponent), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &S) -> S {
        // Horner.
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut factor = S::zero();
            for _ in 0..k {
                factor = factor + S::one();
            }
            out.push(c.clone() * factor);
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl<S: Scalar + Div<Output = S>> UniPoly<S> {
    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    /// Panics if `d` is zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let lead = d.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![S::zero(); self.coeffs.len() - dd];
        for shift in (0..quo.len()).rev() {
            let cur = rem[shift + dd].clone();
            if cur.is_zero() {
                continue;
            }
            let factor = cur / lead.clone();
            quo[shift] = factor.clone();
            for (k, c) in d.coeffs.iter().enumerate() {
                rem[shift + k] = rem[shift + k].clone() - factor.clone() * c.clone();
            }
        }
        rem.truncate(dd);
        (Self::from_coeffs(quo), Self::from_coeffs(rem))
    }

    /// Exact quotient; panics when the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic rescale; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lead) => {
                let inv = S::one() / lead.clone();
                self.scale(&inv)
            }
        }
    }
}

impl<'a, S: Scalar> Add for &'a UniPoly<S> {
    type Output = UniPoly<S>;
    fn add(self, rhs: &'a UniPoly<S>) -> UniPoly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }
}

impl<'a, S: Scalar> Sub for &'a UniPoly<S> {
    type Output = UniPoly<S>;
    fn sub(self, rhs: &'a UniPoly<S>) -> UniPoly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }
}

impl<'a, S: Scalar> Mul for &'a UniPoly<S> {
    type Output = UniPoly<S>;
    fn mul(self, rhs: &'a UniPoly<S>) -> UniPoly<S> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<'a, S: Scalar> Neg for &'a UniPoly<S> {
    type Output = UniPoly<S>;
    fn neg(self) -> UniPoly<S> {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl<S: Scalar> $trait for UniPoly<S> {
            type Output = UniPoly<S>;
            fn $method(self, rhs: UniPoly<S>) -> UniPoly<S> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for UniPoly<S> {
    type Output = UniPoly<S>;
    fn neg(self) -> UniPoly<S> {
        -&self
    }
}

impl UniPoly<Rational> {
    /// Canonical text in the named variable, graded descending.
    pub fn text_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::from_integer(0.into());
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if k == 0 || !abs.is_one() {
                factors.push(rat_str(&abs));
            }
            if k == 1 {
                factors.push(var.to_string());
            } else if k > 1 {
                factors.push(format!("{}^{}", var, k));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for UniPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text_in("x"))
    }
}
