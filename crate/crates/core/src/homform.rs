//! Homogeneous binary forms: the top-degree parts of bivariate polynomials.

use crate::bipoly::{BiPoly, PolyError};
use crate::scalar::{Rational, Scalar};
use crate::unipoly::UniPoly;

/// A nonzero [`BiPoly`] all of whose terms share one total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomForm<S = Rational> {
    degree: u32,
    poly: BiPoly<S>,
}

impl<S: Scalar> HomForm<S> {
    /// Wraps a polynomial after checking it is nonzero and homogeneous.
    pub fn new(poly: BiPoly<S>) -> Result<Self, PolyError> {
        let degree = poly.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        if poly.terms().any(|(&(i, j), _)| i + j != degree) {
            return Err(PolyError::NotHomogeneous);
        }
        Ok(HomForm { degree, poly })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn as_bipoly(&self) -> &BiPoly<S> {
        &self.poly
    }

    pub fn into_bipoly(self) -> BiPoly<S> {
        self.poly
    }

    /// Coefficient vector from the highest power of `x` down: entry `k` is
    /// the coefficient of `x^(d-k) y^k`.
    pub fn coefficients_desc(&self) -> Vec<S> {
        (0..=self.degree)
            .map(|k| self.poly.coeff(self.degree - k, k))
            .collect()
    }

    /// The form as a univariate polynomial in the slope `t = y/x` scaled by
    /// `x^d`, i.e. coefficients from `y^d` up to `x^d`.
    pub fn dehomogenized_in_y(&self) -> UniPoly<S> {
        let mut coeffs = self.coefficients_desc();
        coeffs.reverse();
        UniPoly::from_coeffs(coeffs)
    }
}

impl<S: Scalar> BiPoly<S> {
    /// The top-total-degree homogeneous part. Errors on the zero polynomial.
    pub fn leading_form(&self) -> Result<HomForm<S>, PolyError> {
        let d = self.total_degree().ok_or(PolyError::NoLeadingForm)?;
        let top = BiPoly::from_terms(
            self.terms()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(&e, c)| (e, c.clone())),
        );
        HomForm::new(top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    #[test]
    fn leading_form_examples() {
        // xy - 1 -> xy
        let f = BiPoly::from_terms([((1, 1), rat_int(1)), ((0, 0), rat_int(-1))]);
        let lf = f.leading_form().unwrap();
        assert_eq!(lf.degree(), 2);
        assert_eq!(lf.as_bipoly(), &BiPoly::monomial(1, 1, rat_int(1)));
        // x + y - 2 -> x + y
        let g = BiPoly::from_terms([
            ((1, 0), rat_int(1)),
            ((0, 1), rat_int(1)),
            ((0, 0), rat_int(-2)),
        ]);
        let lg = g.leading_form().unwrap();
        assert_eq!(
            lg.as_bipoly(),
            &BiPoly::from_terms([((1, 0), rat_int(1)), ((0, 1), rat_int(1))])
        );
        // homogeneous input is idempotent
        let x2 = BiPoly::monomial(2, 0, rat_int(1));
        assert_eq!(x2.leading_form().unwrap().as_bipoly(), &x2);
        // zero polynomial has no leading form
        assert_eq!(
            BiPoly::<Rational>::zero().leading_form().unwrap_err(),
            PolyError::NoLeadingForm
        );
    }

    #[test]
    fn coefficients_highest_x_first() {
        // xy as a degree-2 form: [0, 1, 0]
        let xy = BiPoly::monomial(1, 1, rat_int(1));
        let form = HomForm::new(xy).unwrap();
        assert_eq!(
            form.coefficients_desc(),
            vec![rat_int(0), rat_int(1), rat_int(0)]
        );
    }

    #[test]
    fn rejects_inhomogeneous() {
        let f = BiPoly::from_terms([((1, 0), rat_int(1)), ((0, 0), rat_int(1))]);
        assert_eq!(HomForm::new(f).unwrap_err(), PolyError::NotHomogeneous);
    }
}
