//! Sparse multivariate polynomials over exact rationals.
//!
//! Monomials carry a weighted degree and are ordered by weighted-graded
//! reverse lexicographic order, so the natural map order is the term order
//! used everywhere else in the crate (Gröbner bases, canonical printing,
//! leading terms).

mod json;
mod linear;
mod monomial;
mod parse;
mod polynomial;

pub use linear::LinearForm;
pub use monomial::Monomial;
pub use polynomial::Polynomial;

use std::sync::Arc;

/// Variable names and weighted degrees of a polynomial ring.
///
/// Specs are compared by content, so two independently built specs with the
/// same variables and weights are interchangeable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<String>,
    weights: Vec<u32>,
}

impl RingSpec {
    /// Builds a ring spec from `(name, weight)` pairs.
    ///
    /// Panics on duplicate names, empty names, or zero weights; ring layouts
    /// are static data in this crate, so these are programming errors.
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Arc<Self> {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for (name, w) in vars {
            let name = name.into();
            assert!(!name.is_empty(), "empty variable name");
            assert!(w > 0, "zero weight for variable {name}");
            assert!(
                !names.contains(&name),
                "duplicate variable name {name}"
            );
            names.push(name);
            weights.push(w);
        }
        Arc::new(RingSpec {
            vars: names,
            weights,
        })
    }

    /// Builds a ring spec where every variable has weight 1.
    pub fn uniform<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Self> {
        Self::new(names.into_iter().map(|n| (n, 1)))
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Name of variable `i`.
    pub fn name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    /// Weight of variable `i`.
    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    /// All weights.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// All variable names.
    pub fn names(&self) -> &[String] {
        &self.vars
    }

    /// Index of the variable with the given name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Weighted degree of an exponent vector.
    pub fn wdeg_of(&self, exps: &[u16]) -> u32 {
        assert!(exps.len() <= self.vars.len(), "exponent vector too long");
        exps.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| u32::from(e) * w)
            .sum()
    }

    /// Short human-readable description, used in error messages.
    pub fn describe(&self) -> String {
        self.vars.join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_lookup_and_weights() {
        let r = RingSpec::new([("t", 1), ("c2", 2), ("g3", 3)]);
        assert_eq!(r.nvars(), 3);
        assert_eq!(r.index_of("c2"), Some(1));
        assert_eq!(r.index_of("x"), None);
        assert_eq!(r.wdeg_of(&[1, 2, 1]), 1 + 4 + 3);
        assert_eq!(r.wdeg_of(&[0, 0]), 0);
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_names_rejected() {
        let _ = RingSpec::uniform(["x", "x"]);
    }
}
