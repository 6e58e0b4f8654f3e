//! Homogeneous degree-1 forms as dense coefficient vectors.

use super::{Monomial, Polynomial, RingSpec};
use crate::error::{Error, Result};
use crate::Rat;
use num_traits::Zero;
use std::sync::Arc;

/// A homogeneous linear form: one rational coefficient per weight-1 variable.
///
/// Used for roots, reflection images and the divisors of exact division.
/// Only weight-1 variables may carry a nonzero coefficient, so a linear form
/// always has weighted degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    ring: Arc<RingSpec>,
    coeffs: Vec<Rat>,
}

impl LinearForm {
    /// The zero form.
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        LinearForm {
            ring: Arc::clone(ring),
            coeffs: vec![Rat::zero(); ring.nvars()],
        }
    }

    /// Builds a form from `(variable, coefficient)` pairs.
    pub fn from_coeffs(
        ring: &Arc<RingSpec>,
        pairs: impl IntoIterator<Item = (usize, Rat)>,
    ) -> Self {
        let mut f = Self::zero(ring);
        for (i, c) in pairs {
            assert_eq!(ring.weight(i), 1, "linear form on weighted variable");
            f.coeffs[i] += c;
        }
        f
    }

    /// Builds a form from integer coefficients, one per variable.
    pub fn from_ints(ring: &Arc<RingSpec>, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), ring.nvars());
        Self::from_coeffs(
            ring,
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, Rat::from(crate::Int::from(c)))),
        )
    }

    /// Converts a polynomial that is homogeneous of degree 1 in weight-1
    /// variables.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let ring = p.ring();
        let mut f = Self::zero(ring);
        for (m, c) in p.iter() {
            let mut vars = m.vars();
            match (vars.next(), vars.next()) {
                (Some((i, 1)), None) if ring.weight(i) == 1 => {
                    f.coeffs[i] = c.clone();
                }
                _ => return Err(Error::NotLinear(p.to_string())),
            }
        }
        Ok(f)
    }

    /// The underlying ring.
    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    /// Coefficient of variable `i`.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs[i].clone()
    }

    /// Iterates `(variable, coefficient)` over the nonzero support.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c))
    }

    /// True when all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// This form with the coefficient of `i` removed.
    pub fn minus_var(&self, i: usize) -> Self {
        let mut f = self.clone();
        f.coeffs[i] = Rat::zero();
        f
    }

    /// Sum of forms.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        LinearForm {
            ring: Arc::clone(&self.ring),
            coeffs,
        }
    }

    /// Difference of forms.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        LinearForm {
            ring: Arc::clone(&self.ring),
            coeffs,
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> Self {
        LinearForm {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        LinearForm {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// View as a polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            &self.ring,
            self.support()
                .map(|(i, c)| (Monomial::var(&self.ring, i), c.clone())),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_roundtrip() {
        let r = RingSpec::uniform(["x", "y", "z"]);
        let p = Polynomial::parse(&r, "2*x - y").unwrap();
        let f = LinearForm::from_polynomial(&p).unwrap();
        assert_eq!(f.to_polynomial(), p);
        assert_eq!(f.coeff(0), Rat::from(crate::Int::from(2)));
        assert!(f.coeff(2).is_zero());
    }

    #[test]
    fn rejects_nonlinear() {
        let r = RingSpec::uniform(["x", "y"]);
        for bad in ["x^2", "x*y", "x + 1"] {
            let p = Polynomial::parse(&r, bad).unwrap();
            assert!(LinearForm::from_polynomial(&p).is_err(), "{bad}");
        }
    }

    #[test]
    fn arithmetic() {
        let r = RingSpec::uniform(["x", "y"]);
        let a = LinearForm::from_ints(&r, &[1, -1]);
        let b = LinearForm::from_ints(&r, &[1, 1]);
        assert_eq!(a.add(&b), LinearForm::from_ints(&r, &[2, 0]));
        assert_eq!(a.sub(&b), LinearForm::from_ints(&r, &[0, -2]));
        assert_eq!(a.neg(), LinearForm::from_ints(&r, &[-1, 1]));
    }
}
