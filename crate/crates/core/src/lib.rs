//! Exact symbolic kernel for Schubert calculus on the complete flag varieties
//! of the exceptional groups E6, E7 and E8, and for the torsion structure of
//! the Chow rings of the groups themselves.
//!
//! The crate is organized bottom-up:
//!
//! * [`poly`] — sparse multivariate polynomials over exact rationals, with
//!   weighted-graded monomial order, linear forms, exact division by a linear
//!   form, substitution and ring morphisms.
//! * [`symfn`] — elementary symmetric polynomials, Newton identities and
//!   symmetrization of symmetric polynomials into elementary coordinates.
//! * [`root`] — the E6/E7/E8 root systems in fundamental-weight coordinates,
//!   reflection action on polynomials, and the adapted `t`-basis.
//! * [`weyl`] — Weyl group elements, reduced words, length, enumeration of
//!   the full group and of minimal coset representatives, with counts checked
//!   against the Poincaré polynomial, plus an on-disk enumeration cache.
//! * [`schubert`] — divided difference operators, the expansion of a
//!   polynomial into Schubert classes, kernel tests for invariants, and the
//!   generator dictionaries relating ring generators to Schubert classes.
//! * [`invariants`] — Weyl-invariant power sums over the three standard
//!   orbit sets, closed-form cross-checks, and the normalization constants
//!   relating power sums to presentation relations.
//! * [`groebner`] — Buchberger's algorithm over the rationals for the ideal
//!   membership tests used by [`invariants`].
//! * [`presentations`] — transcribed presentations of the cohomology rings of
//!   the flag varieties, generator representatives, and the independent
//!   free-ring identities they satisfy.
//! * [`linalg`] — Smith and Hermite normal forms over the integers.
//! * [`chow`] — derivation of the Chow rings of the groups from the flag
//!   presentations, graded structure via Smith normal form, isomorphism
//!   verification, and the mod-p analysis with p-exceptional degrees.
//! * [`report`] — serializable report types shared with the command line.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! and all linear algebra is over the integers.

pub mod chow;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod presentations;
pub mod report;
pub mod root;
pub mod schubert;
pub mod symfn;
pub mod weyl;

/// Exact rational scalar used for all polynomial coefficients.
pub type Rat = num_rational::BigRational;
/// Exact integer scalar used for all lattice linear algebra.
pub type Int = num_bigint::BigInt;

pub use error::Error;
pub use root::GroupKind;
