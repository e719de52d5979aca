//! Homogeneous trivariate forms: projective closures of bivariate polynomials.

use crate::bipoly::{BiPoly, PolyError};
use crate::scalar::{Rational, Scalar};
use std::collections::BTreeMap;

/// Homogeneous polynomial in `X, Y, Z` of one total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriForm<S = Rational> {
    degree: u32,
    terms: BTreeMap<(u32, u32, u32), S>,
}

impl<S: Scalar> TriForm<S> {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &S)> {
        self.terms.iter()
    }

    /// Projective closure: each `x^i y^j` gains `z^(d-i-j)`.
    /// The zero polynomial is rejected.
    pub fn homogenize(f: &BiPoly<S>) -> Result<Self, PolyError> {
        let degree = f.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        let terms = f
            .terms()
            .map(|(&(i, j), c)| ((i, j, degree - i - j), c.clone()))
            .collect();
        Ok(TriForm { degree, terms })
    }

    /// Sets `z = 1`.
    pub fn dehomogenize(&self) -> BiPoly<S> {
        BiPoly::from_terms(self.terms.iter().map(|(&(i, j, _), c)| ((i, j), c.clone())))
    }

    /// Smallest power of `Z` appearing; positive exactly when `Z` divides the form.
    pub fn min_z_power(&self) -> u32 {
        self.terms.keys().map(|&(_, _, k)| k).min().unwrap_or(0)
    }

    /// Substitutes each variable by the linear form given by the matching row
    /// of `rows`: `X -> r00 X + r01 Y + r02 Z`, and so on.
    pub fn substitute_linear(&self, rows: &[[S; 3]; 3]) -> Self {
        let forms: Vec<TriForm<S>> = rows.iter().map(linear_form).collect();
        let max_i = self.terms.keys().map(|&(i, _, _)| i).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|&(_, j, _)| j).max().unwrap_or(0);
        let max_k = self.terms.keys().map(|&(_, _, k)| k).max().unwrap_or(0);
        let px = power_table(&forms[0], max_i);
        let py = power_table(&forms[1], max_j);
        let pz = power_table(&forms[2], max_k);
        let mut acc: BTreeMap<(u32, u32, u32), S> = BTreeMap::new();
        for (&(i, j, k), c) in &self.terms {
            let prod = px[i as usize].mul(&py[j as usize]).mul(&pz[k as usize]);
            for (&e, v) in &prod.terms {
                let add = v.clone() * c.clone();
                let entry = acc.entry(e).or_insert_with(S::zero);
                let sum = entry.clone() + add;
                if sum.is_zero() {
                    acc.remove(&e);
                } else {
                    *entry = sum;
                }
            }
        }
        TriForm {
            degree: self.degree,
            terms: acc,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<(u32, u32, u32), S> = BTreeMap::new();
        for (&(i1, j1, k1), c1) in &self.terms {
            for (&(i2, j2, k2), c2) in &other.terms {
                let e = (i1 + i2, j1 + j2, k1 + k2);
                let add = c1.clone() * c2.clone();
                let entry = acc.entry(e).or_insert_with(S::zero);
                let sum = entry.clone() + add;
                if sum.is_zero() {
                    acc.remove(&e);
                } else {
                    *entry = sum;
                }
            }
        }
        TriForm {
            degree: self.degree + other.degree,
            terms: acc,
        }
    }
}

fn linear_form<S: Scalar>(row: &[S; 3]) -> TriForm<S> {
    let mut terms = BTreeMap::new();
    for (idx, c) in row.iter().enumerate() {
        if !c.is_zero() {
            let e = match idx {
                0 => (1, 0, 0),
                1 => (0, 1, 0),
                _ => (0, 0, 1),
            };
            terms.insert(e, c.clone());
        }
    }
    TriForm { degree: 1, terms }
}

fn power_table<S: Scalar>(f: &TriForm<S>, up_to: u32) -> Vec<TriForm<S>> {
    let one = TriForm {
        degree: 0,
        terms: BTreeMap::from([((0, 0, 0), S::one())]),
    };
    let mut v = vec![one];
    for k in 1..=up_to as usize {
        let next = v[k - 1].mul(f);
        v.push(next);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    #[test]
    fn homogenize_examples() {
        // xy - 1 -> XY - Z^2
        let f = BiPoly::from_terms([((1, 1), rat_int(1)), ((0, 0), rat_int(-1))]);
        let h = TriForm::homogenize(&f).unwrap();
        assert_eq!(h.degree(), 2);
        let terms: Vec<_> = h.terms().map(|(&e, c)| (e, c.clone())).collect();
        assert_eq!(
            terms,
            vec![((0, 0, 2), rat_int(-1)), ((1, 1, 0), rat_int(1))]
        );
        // round trip
        assert_eq!(h.dehomogenize(), f);
        // x + y - 2 -> X + Y - 2Z
        let g = BiPoly::from_terms([
            ((1, 0), rat_int(1)),
            ((0, 1), rat_int(1)),
            ((0, 0), rat_int(-2)),
        ]);
        let hg = TriForm::homogenize(&g).unwrap();
        assert_eq!(hg.dehomogenize(), g);
        assert_eq!(hg.degree(), 1);
        // already homogeneous: x^2 -> X^2
        let x2 = BiPoly::monomial(2, 0, rat_int(1));
        let hx = TriForm::homogenize(&x2).unwrap();
        assert_eq!(hx.min_z_power(), 0);
        assert_eq!(hx.dehomogenize(), x2);
    }

    #[test]
    fn zero_rejected() {
        assert!(TriForm::<Rational>::homogenize(&BiPoly::zero()).is_err());
    }
}
