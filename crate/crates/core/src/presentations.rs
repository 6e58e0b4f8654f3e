//! Presentations of the torus-equivariant cohomology rings of the
//! exceptional flag varieties `E_l/T` (`l = 6, 7, 8`) by generators and
//! relations, together with the dictionary between the ring generators and
//! Schubert classes, and an alternative system of relations that is checked
//! against the primary one.
//!
//! Each ring is generated over the degree-one classes by the Chern classes
//! `c_1, ..., c_l` of the tautological bundle, the basic Weyl-line class `t`,
//! and a handful of exceptional generators `g_d` of degree `d` that are not
//! polynomials in the former.  The exceptional generators are pinned down by
//! the dictionary: for each of them there is a polynomial `delta_d` in `t`
//! and the `c_i` alone whose Schubert expansion equals `N_d` times an
//! explicit integral combination of Schubert classes, and `g_d` denotes
//! `delta_d / N_d`.
//!
//! Verification runs through the Weyl-invariant-theoretic characteristic
//! map: a relation holds exactly when its image in the polynomial ring on
//! the degree-one classes has an empty Schubert expansion.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RingSpec};
use crate::root::{GroupKind, RootSystem};
use crate::schubert;
use crate::symfn;
use crate::weyl::Element;
use crate::Rat;

/// Degrees of the exceptional generators `g_d` for each group.
pub fn exceptional_degrees(kind: GroupKind) -> &'static [u32] {
    match kind {
        GroupKind::E6 => &[3, 4],
        GroupKind::E7 => &[3, 4, 5, 9],
        GroupKind::E8 => &[3, 4, 5, 6, 9, 10, 15],
    }
}

/// The graded polynomial ring holding a presentation: variables `t`,
/// (for `E8` also the extra degree-one class `u`), the Chern classes
/// `c_1, ..., c_l`, and the exceptional generators `g_d`.
pub fn generator_ring(kind: GroupKind) -> Arc<RingSpec> {
    let mut vars: Vec<(String, u32)> = vec![("t".to_string(), 1)];
    if kind == GroupKind::E8 {
        vars.push(("u".to_string(), 1));
    }
    for i in 1..=kind.rank() {
        vars.push((format!("c{i}"), i as u32));
    }
    for &d in exceptional_degrees(kind) {
        vars.push((format!("g{d}"), d));
    }
    RingSpec::new(vars)
}

/// A named homogeneous element of a presentation ring.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub degree: u32,
    pub poly: Polynomial,
}

/// Definition of one exceptional generator: `N_d * g_d` equals the class of
/// the polynomial `delta_d` in `t` and the Chern classes.
#[derive(Debug, Clone)]
pub struct Delta {
    pub degree: u32,
    pub multiple: i64,
    pub poly: Polynomial,
}

/// A full presentation: the generator ring, the defining relations, and the
/// `delta_d` definitions of the exceptional generators.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub kind: GroupKind,
    pub ring: Arc<RingSpec>,
    pub relations: Vec<Relation>,
    pub deltas: Vec<Delta>,
}

// Relations for E6/T.  Indexing follows the invariant degrees.
const E6_RELATIONS: &[(&str, u32, &str)] = &[
    ("rho1", 1, "c1 - 3*t"),
    ("rho2", 2, "c2 - 4*t^2"),
    ("rho3", 3, "c3 - 2*g3"),
    ("rho4", 4, "c4 + 2*t^4 - 3*g4"),
    ("rho5", 5, "c5 - 3*t*g4 + 2*t^2*g3"),
    ("rho6", 6, "g3^2 + 2*c6 - 3*t^2*g4 + t^6"),
    (
        "rho8",
        8,
        "3*g4^2 - 6*t*g3*g4 - 9*t^2*c6 + 15*t^4*g4 - 6*t^5*g3 - t^8",
    ),
    ("rho9", 9, "2*c6*g3 - 3*t^3*c6"),
    (
        "rho12",
        12,
        "3*c6^2 - 2*g4^3 + 6*t*g3*g4^2 + 3*t^2*c6*g4 + 5*t^3*c6*g3 - 15*t^4*g4^2 \
         - 10*t^6*c6 + 19*t^8*g4 - 6*t^9*g3 - 2*t^12",
    ),
];

const E7_RELATIONS: &[(&str, u32, &str)] = &[
    ("rho1", 1, "c1 - 3*t"),
    ("rho2", 2, "c2 - 4*t^2"),
    ("rho3", 3, "c3 - 2*g3"),
    ("rho4", 4, "c4 + 2*t^4 - 3*g4"),
    ("rho5", 5, "c5 - 3*t*g4 + 2*t^2*g3 - 2*g5"),
    ("rho6", 6, "g3^2 + 2*c6 - 2*t*g5 - 3*t^2*g4 + t^6"),
    (
        "rho8",
        8,
        "3*g4^2 - 2*g3*g5 + t*(2*c7 - 6*g3*g4) - 9*t^2*c6 + 12*t^3*g5 \
         + 15*t^4*g4 - 6*t^5*g3 - t^8",
    ),
    ("rho9", 9, "2*c6*g3 + t^2*c7 - 3*t^3*c6 - 2*g9"),
    ("rho10", 10, "g5^2 - 2*c7*g3 + 3*t^3*c7"),
    (
        "rho12",
        12,
        "3*c6^2 - 2*g4^3 - 2*c7*g5 + 2*g3*g4*g5 \
         + t*(4*c7*g4 - 2*c6*g5 + 6*g3*g4^2) + t^2*(-3*c7*g3 + 3*c6*g4) \
         + t^3*(-12*g4*g5 + 5*c6*g3) + t^4*(-2*g3*g5 - 15*g4^2) \
         - 10*t^6*c6 + 12*t^7*g5 + 19*t^8*g4 - 6*t^9*g3 - 2*t^12",
    ),
    (
        "rho14",
        14,
        "c7^2 + 6*c7*g3*g4 - 2*c6*g3*g5 - t^2*c7*g5 + t^3*(-9*c7*g4 + 3*c6*g5) \
         - 6*t^4*c7*g3 + 9*t^7*c7",
    ),
    (
        "rho18",
        18,
        "-g9^2 + 2*c6*c7*g5 + 6*c7*g3*g4^2 - 2*c7^2*g4 - 2*c6*g3*g4*g5 + 2*c6*g3*g9 \
         + t*(-6*c7^2*g3 + 24*c6*c7*g4) + t^2*(-25*c7*g4*g5 + c7*g9 - 18*c6*c7*g3) \
         + t^3*(-45*c7*g4^2 + 20*c7*g3*g5 + 3*c6*g4*g5 - 3*c6*g9) \
         + t^4*(11*c7^2 + 2*c6*g3*g5 + 48*c7*g3*g4) + 51*t^5*c6*c7 - 53*t^6*c7*g5 \
         + t^7*(-69*c7*g4 - 3*c6*g5) + 16*t^8*c7*g3 + 15*t^11*c7",
    ),
];

const E8_RELATIONS: &[(&str, u32, &str)] = &[
    ("rho1", 1, "c1 - 3*t"),
    ("rho2", 2, "c2 - 4*t^2"),
    ("rho3", 3, "c3 - 2*g3"),
    ("rho4", 4, "c4 + 2*t^4 - 3*g4"),
    ("rho5", 5, "c5 - 3*t*g4 + 2*t^2*g3 - 2*g5"),
    ("rho6", 6, "c6 - 2*g3^2 - t*g5 + t^2*g4 - 2*t^6 - 5*g6"),
    (
        "rho8",
        8,
        "-3*c8 + 3*g4^2 - 2*g3*g5 + t*(2*c7 - 6*g3*g4) + t^2*(2*g3^2 - 5*g6) \
         + 3*t^3*g5 + 4*t^4*g4 - 6*t^5*g3 + t^8",
    ),
    ("rho9", 9, "2*c6*g3 + t*c8 + t^2*c7 - 3*t^3*c6 - 2*g9"),
    ("rho10", 10, "g5^2 - 2*c7*g3 - t^2*c8 + 3*t^3*c7 - 3*g10"),
    (
        "rho12",
        12,
        "15*g6^2 + 2*g3*g4*g5 - 2*c7*g5 + 2*g3^4 + 10*g3^2*g6 - 3*c8*g4 - 2*g4^3 \
         + t*(c8*g3 - 2*g3^2*g5 + 4*c7*g4 + 6*g3*g4^2) \
         + t^2*(3*g10 - 25*g4*g6 - c7*g3 - 16*g3^2*g4) \
         + t^3*(25*g3*g6 - 3*g4*g5 + 10*g3^3) + t^4*(3*c8 + 3*g3*g5 + 5*g4^2) \
         + t^5*(-3*c7 - 5*g3*g4) + 4*t^6*g3^2 - 7*t^8*g4 + 4*t^9*g3",
    ),
    (
        "rho14",
        14,
        "c7^2 - 3*c8*g6 + 6*g4*g10 - 4*c8*g3^2 + 6*c7*g3*g4 - 6*g3^2*g4^2 \
         - 12*g4^2*g6 - 2*g3*g5*g6 \
         + t*(24*g3*g4*g6 - 8*c7*g3^2 - 8*c7*g6 + 4*c8*g5 - 6*g3*g10 + 12*g3^3*g4) \
         + t^2*(-2*g3*g4*g5 + 6*g4^3 + 2*g3^2*g6 + 20*g6^2 - 4*g3^4 - c7*g5) \
         + t^3*(-12*g3*g4^2 + 8*c8*g3 - 5*c7*g4 + 3*g5*g6) \
         + t^4*(3*g10 - 26*g4*g6 + 6*c7*g3 - 4*g3^2*g4) \
         + t^5*(24*g3*g6 + 3*g4*g5 + 12*g3^3) + t^6*(-6*c8 + 2*g4^2) - 4*t^7*c7 \
         + t^8*(6*g6 - 6*g3^2) - 6*t^10*g4 + 12*t^11*g3 - 2*t^14",
    ),
    (
        "rho15",
        15,
        "(c8 - t^2*c6 + 2*t^3*g5 + 3*t^4*g4 - t^8)*(c7 - 3*t*c6) \
         - 2*(g3^2 + c6)*(g9 - c6*g3) - 2*g15",
    ),
    (
        "rho18",
        18,
        "g9^2 - 9*c8*g10 - 6*g4^2*g10 - 4*g3^3*g9 - 10*g3*g6*g9 + 2*g3*g5*g10 \
         - 2*g3*g4*g5*g6 - 6*c7*g3*g4^2 + 3*c8*g4*g6 + c8*g3^2*g4 + 6*g3^2*g4^3 \
         + 12*g4^3*g6 + 2*c7^2*g4 + 2*c7*g3^2*g5 - 2*g3^3*g4*g5 + 2*c7*g5*g6 \
         + 4*g3^6 - 10*g6^3 + 18*g3^4*g6 + 15*g3^2*g6^2 - 9*c7*c8*g3 \
         + t*(-2*g3*g5*g9 - 24*c7*g4*g6 + 8*c8*g4*g5 + 4*c7*g3^2*g4 + 4*c7*g10 \
              - c8*g9 + 2*c7^2*g3 + 4*c8*g3*g6 + 12*g3*g4*g10 - 36*g3*g4^2*g6 \
              + 12*g3^2*g5*g6 + c8*g3^3 + 6*g3^4*g5 - 18*g3^3*g4^2) \
         + t^2*(24*g3^4*g4 - 2*c8^2 - c7*g9 - 11*g3^2*g10 + 2*g3*g4*g9 \
                - 2*c8*g3*g5 + 16*c7*g3*g6 - 3*c7*g4*g5 + 75*g4*g6^2 - 6*g4^4 \
                - 9*c8*g4^2 + 81*g3^2*g4*g6 - 13*g6*g10 + 4*g3*g4^2*g5 - c7*g3^3) \
         + t^3*(-3*g5*g10 - 150*g3*g6^2 - 135*g3^3*g6 + 6*g3^2*g9 - 2*c7*g3*g5 \
                + 21*c7*g4^2 + 15*c7*c8 + 3*g4*g5*g6 - 3*g3^2*g4*g5 + 18*g3*g4^3 \
                + 15*g6*g9 + 14*c8*g3*g4 - 30*g3^5) \
         + t^4*(-13*c8*g6 + 2*g4*g10 - 5*c7^2 - 33*g3^2*g4^2 + 3*g5*g9 \
                - 28*g3*g5*g6 - 45*g4^2*g6 - 41*c7*g3*g4 - 13*g3^3*g5 - 9*c8*g3^2) \
         + t^5*(3*c7*g6 - 6*g4^2*g5 + 23*c7*g3^2 + 105*g3*g4*g6 - 6*c8*g5 \
                - 3*g4*g9 + 45*g3^3*g4) \
         + t^6*(11*g4^3 - 4*g3*g9 + 4*c7*g5 + 9*g3*g4*g5 + 12*g3^4 + 66*g3^2*g6 \
                + 75*g6^2 + 2*c8*g4) \
         + t^7*(-33*g3*g4^2 + 12*g3^2*g5 + 15*g5*g6) \
         + t^8*(-4*g10 + 21*g3^2*g4 - 5*c7*g3 - 3*g4*g6) \
         + t^9*(6*g9 - 42*g3^3 - 99*g3*g6) + t^10*(-4*c8 - 6*g4^2 - 13*g3*g5) \
         + t^11*(3*c7 + 27*g3*g4) + t^12*(60*g6 + 18*g3^2) + 6*t^13*g5 \
         - 9*t^14*g4 - 12*t^15*g3 + 10*t^18",
    ),
];

// The three top relations of E8 are stated in terms of auxiliary classes
// v, w, x of degrees 6, 10, 15 built from the generators, with u the extra
// degree-one class.
const E8_CLASS_V: &str = "2*g6 + g3^2 - u*g5 + g4*(-t^2 + u^2) - u^3*g3 + t^6 \
                          - t^4*u^2 + t^3*u^3 + t^2*u^4 - t*u^5";

const E8_CLASS_W: &str = "g10 + u*g9 - u^3*c7 - u*g4*g5 + 2*u^2*g4^2 - 2*u^2*g3*g5 \
                          + g3*g4*(-6*t*u^2 + 2*u^3) \
                          + g3^2*(2*t^2*u^2 + 2*t*u^3 - 2*u^4) \
                          + g6*(-5*t^2*u^2 + 5*t*u^3) \
                          + g5*(t^4*u + 3*t^3*u^2 + t^2*u^3) \
                          + g4*(6*t^4*u^2 - 3*t^3*u^3 - 2*t^2*u^4 - t*u^5 + u^6) \
                          + g3*(-6*t^5*u^2 - 2*t^4*u^3 + 4*t^3*u^4 + 6*t^2*u^5 \
                                - 4*t*u^6 + u^7) \
                          + 4*t^7*u^3 - 6*t^5*u^5 + 2*t^4*u^6 + t^3*u^7 - t^2*u^8";

const E8_CLASS_X: &str = "g15 - 20*g3*g6^2 + 3*g3^2*g9 - 23*g3^3*g6 - 6*g3^5 + 4*g6*g9 \
    + 3*u*g4*g10 - u*g5*g9 - 3*u*g3^2*g4^2 + 3*u*c7*g3*g4 - 6*u*g4^2*g6 \
    + (-3*t + 2*u)*g3^3*g5 + (-4*t + 4*u)*g3*g5*g6 + (-t^2 - u^2)*g4*g9 \
    + (t^2 + t*u - u^2)*c7*g3^2 + (9*t^2 + 12*t*u + 5*u^2)*g3*g4*g6 \
    + (5*t^2 + 6*t*u + 2*u^2)*g3^3*g4 + (3*t^2 + 4*t*u + u^2)*c7*g6 \
    + (-6*t^3 - 2*t^2*u - 6*t*u^2 + 5*u^3)*g3^4 - u^3*g3*g9 \
    + (3*t^2*u + u^3)*g4^3 + (2*t^2*u + 3*t*u^2)*c7*g5 \
    + (-45*t^3 + 10*t^2*u - 40*t*u^2)*g6^2 \
    + (t^3 - 2*t^2*u + t*u^2 - u^3)*g3*g4*g5 \
    + (-33*t^3 + t^2*u - 31*t*u^2 + 13*u^3)*g3^2*g6 \
    + (-2*t^4 - 4*t^3*u - 3*t*u^3 + 3*u^4)*c7*g4 \
    + (-9*t^4 - 6*t^3*u - 18*t^2*u^2 + 5*t*u^3 - 3*u^4)*g5*g6 \
    + (-3*t^4 - 3*t^3*u - 7*t^2*u^2 + 5*t*u^3 - 4*u^4)*g3^2*g5 \
    + (-t^4 - 6*t^3*u - t^2*u^2 - 3*t*u^3)*g3*g4^2 \
    + (-3*t^4*u - 6*t^3*u^2 + 3*t^2*u^3 + 15*t*u^4)*g10 \
    + (-3*t^4*u + t^3*u^2 + 5*t^2*u^3 + 10*t*u^4 - u^5)*c7*g3 \
    + (15*t^5 - 2*t^4*u + 3*t^3*u^2 + 14*t^2*u^3 - 16*t*u^4 + 3*u^5)*g3^2*g4 \
    + (39*t^5 - 13*t^4*u + 8*t^3*u^2 + 35*t^2*u^3 - 31*t*u^4 - 3*u^5)*g4*g6 \
    + (t^6 - t^4*u^2 - t^3*u^3 - t^2*u^4 - t*u^5 - u^6)*g9 \
    + (-13*t^6 + 12*t^5*u + 5*t^4*u^2 - 56*t^3*u^3 + 8*t^2*u^4 + 21*t*u^5 \
       + 2*u^6)*g3*g6 \
    + (6*t^6 + 3*t^5*u + 2*t^4*u^2 + 7*t^3*u^3 + t^2*u^4 - 8*t*u^5 + 3*u^6)*g4*g5 \
    + (-8*t^6 + 6*t^5*u + 2*t^4*u^2 - 22*t^3*u^3 + 6*t^2*u^4 + 8*t*u^5 \
       - 2*u^6)*g3^3 \
    + (-6*t^7 + t^6*u - 7*t^4*u^3 + 5*t^3*u^4 + 3*t^2*u^5 + 3*t*u^6 \
       - 63*u^7)*g4^2 \
    + (-t^7 + 2*t^6*u + t^5*u^2 - 11*t^4*u^3 + 6*t^3*u^4 + 5*t^2*u^5 + 6*t*u^6 \
       + 39*u^7)*g3*g5 \
    + (2*t^8 + 6*t^7*u + 3*t^6*u^2 - 4*t^5*u^3 - 15*t^4*u^4 + 6*t^3*u^5 \
       + 3*t^2*u^6 - 40*t*u^7 + 59*u^8)*c7 \
    + (3*t^8 + t^6*u^2 + 11*t^5*u^3 + 14*t^4*u^4 - 20*t^3*u^5 - 4*t^2*u^6 \
       + 118*t*u^7 + 3*u^8)*g3*g4 \
    + (-48*t^9 + 3*t^8*u - 41*t^7*u^2 + 18*t^6*u^3 + 16*t^5*u^4 - 13*t^4*u^5 \
       - 67*t^3*u^6 + 125*t^2*u^7 - 15*t*u^8 - 291*u^9)*g6 \
    + (-18*t^9 - 3*t^8*u - 16*t^7*u^2 + 10*t^6*u^3 - 4*t^5*u^4 - 8*t^4*u^5 \
       - 16*t^3*u^6 - 23*t^2*u^7 - 10*t*u^8 - 115*u^9)*g3^2 \
    + (-6*t^10 - 3*t^9*u - 9*t^8*u^2 + 5*t^7*u^3 - 5*t^6*u^4 - 14*t^4*u^6 \
       - 52*t^3*u^7 + 6*t^2*u^8 - 60*t*u^9 + 117*u^10)*g5 \
    + (18*t^11 - 3*t^10*u + 5*t^9*u^2 + 11*t^8*u^3 - 28*t^7*u^4 + 8*t^6*u^5 \
       + 20*t^5*u^6 - 64*t^4*u^7 - 15*t^3*u^8 + 54*t^2*u^9 + 178*t*u^10 \
       - 177*u^11)*g4 \
    + (-2*t^12 + 6*t^11*u + 2*t^10*u^2 - 20*t^9*u^3 + 11*t^8*u^4 + 22*t^7*u^5 \
       - 8*t^6*u^6 + 83*t^5*u^7 + 15*t^4*u^8 + 5*t^3*u^9 - 116*t^2*u^10 \
       + t*u^11 + 117*u^12)*g3 \
    - 12*t^15 - t^14*u - 10*t^13*u^2 + 6*t^12*u^3 + 7*t^11*u^4 - 13*t^10*u^5 \
    - 31*t^9*u^6 + 9*t^8*u^7 - t^7*u^8 - 118*t^6*u^9 - 18*t^5*u^10 \
    + 131*t^4*u^11 - 6*t^3*u^12 - 233*t^2*u^13 + 175*t*u^14 - 58*u^15";

// Combinations in u, v, w, x giving the three top relations.
const E8_RHO20: &str = "9*u^20 + 45*u^14*v + 12*u^10*w + 60*u^8*v^2 + 30*u^4*v*w \
                        + 10*u^2*v^3 + 3*w^2";

const E8_RHO24: &str = "11*u^24 + 60*u^18*v + 21*u^14*w + 105*u^12*v^2 + 60*u^8*v*w \
                        + 60*u^6*v^3 + 9*u^4*w^2 + 30*u^2*v^2*w + 5*v^4";

const E8_RHO30: &str = "-9*x^2 - 12*u^9*v*x - 6*u^5*w*x + 9*u^14*v*w - 10*u^12*v^3 \
                        - 3*u^10*w^2 + 30*u^8*v^2*w - 35*u^6*v^4 + 6*u^4*v*w^2 \
                        - 10*u^2*v^3*w - 4*v^5 - 2*w^3";

// Definitions of the exceptional generators: (degree, multiple, delta_d).
const E6_DELTAS: &[(u32, i64, &str)] = &[
    (3, 2, "c3"),
    (4, 3, "c4 + 2*t^4"),
];

const E7_DELTAS: &[(u32, i64, &str)] = &[
    (3, 2, "c3"),
    (4, 3, "c4 + 2*t^4"),
    (5, 2, "c5 - t*c4 + t^2*c3 - 2*t^5"),
    (9, 2, "c3*c6 + t^2*c7 - 3*t^3*c6"),
];

const E8_DELTAS: &[(u32, i64, &str)] = &[
    (3, 2, "c3"),
    (4, 3, "c4 + 2*t^4"),
    (5, 2, "c5 - t*c4 + t^2*c3 - 2*t^5"),
    (6, 5, "(6*c6 - 3*c3^2 - 3*t*c5 + 5*t^2*c4 - 3*t^3*c3 - 2*t^6)/6"),
    (9, 2, "c3*c6 + t*c8 + t^2*c7 - 3*t^3*c6"),
    (
        10,
        3,
        "((c5 - t*c4 + t^2*c3 - 2*t^5)^2 - 4*c7*c3 - 4*t^2*c8 + 12*t^3*c7)/4",
    ),
    (
        15,
        2,
        "(c8 - t^2*c6 + t^3*c5 + t^5*c3 - t^8)*(c7 - 3*t*c6) \
         - (c3^2 + 4*c6)*(t*c8 + t^2*c7 - 3*t^3*c6)/4",
    ),
];

fn parse_named(
    ring: &Arc<RingSpec>,
    table: &[(&str, u32, &str)],
) -> Result<Vec<Relation>> {
    table
        .iter()
        .map(|&(name, degree, expr)| {
            let poly = Polynomial::parse(ring, expr)?;
            poly.check_homogeneous(degree)?;
            Ok(Relation {
                name: name.to_string(),
                degree,
                poly,
            })
        })
        .collect()
}

fn uses_only_t_c(poly: &Polynomial) -> bool {
    let names = poly.ring().names();
    poly.iter().all(|(m, _)| {
        m.vars()
            .all(|(i, _)| names[i] == "t" || names[i].starts_with('c'))
    })
}

impl Presentation {
    /// Builds the presentation for one group, validating homogeneity of
    /// every relation and generator definition.
    pub fn new(kind: GroupKind) -> Result<Self> {
        let ring = generator_ring(kind);
        let (rel_table, delta_table): (&[_], &[_]) = match kind {
            GroupKind::E6 => (E6_RELATIONS, E6_DELTAS),
            GroupKind::E7 => (E7_RELATIONS, E7_DELTAS),
            GroupKind::E8 => (E8_RELATIONS, E8_DELTAS),
        };
        let mut relations = parse_named(&ring, rel_table)?;
        if kind == GroupKind::E8 {
            relations.extend(e8_top_relations(&ring)?);
        }
        let deltas = delta_table
            .iter()
            .map(|&(degree, multiple, expr)| {
                let poly = Polynomial::parse(&ring, expr)?;
                poly.check_homogeneous(degree)?;
                if !uses_only_t_c(&poly) {
                    return Err(Error::Verification(format!(
                        "delta_{degree} must involve only t and the c_i"
                    )));
                }
                Ok(Delta {
                    degree,
                    multiple,
                    poly,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation {
            kind,
            ring,
            relations,
            deltas,
        })
    }

    /// Looks up a relation by name.
    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    /// Looks up the definition of the degree-`d` exceptional generator.
    pub fn delta(&self, degree: u32) -> Option<&Delta> {
        self.deltas.iter().find(|d| d.degree == degree)
    }

    /// Images of the generator-ring variables in the polynomial ring on the
    /// degree-one classes: `t` and `u` map to the corresponding weight-one
    /// forms, `c_i` to the elementary symmetric polynomials of the weights
    /// of the tautological bundle, and `g_d` to `delta_d / N_d`.
    pub fn omega_images(&self, rs: &RootSystem) -> Result<Vec<Polynomial>> {
        if rs.kind() != self.kind {
            return Err(Error::RingMismatch(
                self.kind.to_string(),
                rs.kind().to_string(),
            ));
        }
        let omega = rs.omega_ring();
        let rank = rs.rank();
        let names = self.ring.names().to_vec();
        let mut images = vec![Polynomial::zero(omega); names.len()];
        for (slot, name) in names.iter().enumerate() {
            if name == "t" {
                images[slot] = rs.t_form(rank).to_polynomial();
            } else if name == "u" {
                images[slot] = rs.t_form(rank - 1).to_polynomial();
            } else if let Some(i) = name.strip_prefix('c') {
                let i: usize = i.parse().expect("chern index");
                images[slot] = rs.c_poly(i).clone();
            }
        }
        for delta in &self.deltas {
            let slot = self
                .ring
                .index_of(&format!("g{}", delta.degree))
                .expect("generator slot");
            let inv = Rat::new(1.into(), delta.multiple.into());
            images[slot] = delta.poly.morph(omega, &images).scale(&inv);
        }
        Ok(images)
    }
}

fn e8_top_relations(ring: &Arc<RingSpec>) -> Result<Vec<Relation>> {
    let u = Polynomial::var(ring, ring.index_of("u").expect("u slot"));
    let v = Polynomial::parse(ring, E8_CLASS_V)?;
    let w = Polynomial::parse(ring, E8_CLASS_W)?;
    let x = Polynomial::parse(ring, E8_CLASS_X)?;
    v.check_homogeneous(6)?;
    w.check_homogeneous(10)?;
    x.check_homogeneous(15)?;
    let aux = RingSpec::new([("u", 1u32), ("v", 6), ("w", 10), ("x", 15)]);
    let images = [u, v, w, x];
    [("rho20", 20u32, E8_RHO20), ("rho24", 24, E8_RHO24), ("rho30", 30, E8_RHO30)]
        .iter()
        .map(|&(name, degree, expr)| {
            let comb = Polynomial::parse(&aux, expr)?;
            comb.check_homogeneous(degree)?;
            let poly = comb.morph(ring, &images);
            poly.check_homogeneous(degree)?;
            Ok(Relation {
                name: name.to_string(),
                degree,
                poly,
            })
        })
        .collect()
}

/// Schubert expansion of one exceptional generator: the class of `delta_d`
/// equals `N_d` times the stated combination of Schubert classes `Z_w`.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub generator: String,
    pub degree: u32,
    pub terms: Vec<(String, i64)>,
}

/// A Schubert class expressed back in terms of the ring generators.
#[derive(Debug, Clone)]
pub struct Inverse {
    pub word: String,
    pub degree: u32,
    pub poly: Polynomial,
}

/// The dictionary between ring generators and Schubert classes.
#[derive(Debug, Clone)]
pub struct Dictionary {
    pub kind: GroupKind,
    pub expansions: Vec<Expansion>,
    pub inverses: Vec<Inverse>,
}

const E6_EXPANSIONS: &[(u32, &[(&str, i64)])] = &[
    (3, &[("342", 1), ("542", 2)]),
    (4, &[("1342", 1), ("3542", 2), ("6542", 2)]),
];

const E7_EXPANSIONS: &[(u32, &[(&str, i64)])] = &[
    (3, &[("342", 1), ("542", 2)]),
    (4, &[("1342", 1), ("3542", 2), ("6542", 2)]),
    (5, &[("76542", 1)]),
    (9, &[("154376542", 2), ("654376542", 1)]),
];

// The degree-10 expansion is stated in the source material with an
// eleven-letter word, which cannot index a degree-ten class; the word below
// restores the missing consistency and is confirmed by the expansion check.
const E8_EXPANSIONS: &[(u32, &[(&str, i64)])] = &[
    (3, &[("342", 1), ("542", 2)]),
    (4, &[("1342", 1), ("3542", 2), ("6542", 2)]),
    (5, &[("76542", 1)]),
    (
        6,
        &[
            ("136542", -6),
            ("143542", -5),
            ("243542", -2),
            ("376542", -5),
            ("436542", -6),
            ("876542", -1),
        ],
    ),
    (
        9,
        &[
            ("143876542", 4),
            ("154376542", 2),
            ("543876542", 4),
            ("654376542", 1),
        ],
    ),
    (10, &[("1543876542", -1)]),
    (
        15,
        &[
            ("131426543876542", 58),
            ("134231543876542", -17),
            ("134276543876542", 140),
            ("135426543876542", 30),
            ("154276543876542", 127),
            ("234231543876542", -22),
            ("242316543876542", 87),
            ("243176543876542", 271),
            ("245423143876542", -22),
            ("254316543876542", 52),
            ("314276543876542", 386),
            ("315426543876542", 82),
            ("342316543876542", 102),
            ("345423143876542", -22),
            ("354276543876542", 30),
            ("423176543876542", 470),
            ("458765423143542", -17),
            ("465423143876542", 55),
            ("542316543876542", 139),
            ("543176543876542", 62),
            ("654276543876542", 15),
            ("658765423143542", 8),
            ("765423143876542", 157),
        ],
    ),
];

const E6_INVERSES: &[(&str, &str)] = &[
    ("342", "-g3 + 2*t^3"),
    ("542", "g3 - t^3"),
    ("1342", "g4 - 2*t*g3 + 2*t^4"),
    ("3542", "-g4 + t*g3"),
    ("6542", "g4 - t^4"),
];

const E7_INVERSES: &[(&str, &str)] = &[
    ("342", "-g3 + 2*t^3"),
    ("542", "g3 - t^3"),
    ("1342", "g4 - 2*t*g3 + 2*t^4"),
    ("3542", "-g4 + t*g3"),
    ("6542", "g4 - t^4"),
    ("76542", "g5"),
    ("154376542", "g9 - g4*g5 + t^4*g5"),
    ("654376542", "-g9 + 2*g4*g5 - 2*t^4*g5"),
];

const E8_INVERSES: &[(&str, &str)] = &[
    ("542", "g3 - t^3"),
    ("6542", "g4 - t^4"),
    ("76542", "g5"),
    ("136542", "g6 - t*g5 + t^2*g4"),
    (
        "154376542",
        "g9 - 2*g3^3 - 4*g3*g6 - g4*g5 + t*(-6*g4^2 + 5*c8 + 4*g3*g5) \
         + t^2*(-4*c7 + 14*g3*g4) + t^3*(-2*g3^2 + 14*g6) - 5*t^4*g5 \
         - 10*t^5*g4 + 10*t^6*g3",
    ),
    (
        "1654376542",
        "-g10 + g5^2 - 2*g3^2*g4 - 4*g4*g6 + 2*t^2*g4^2 + t^4*(2*g3^2 + 4*g6) \
         - 4*t^6*g4 + 2*t^10",
    ),
    (
        "134276543876542",
        "g15 + 16*g6*g9 + g5*g10 + 6*g3*g6^2 + 5*g3^2*g9 - g3^3*g6 \
         + 4*g3^2*g4*g5 + g3^5 - 12*g3*g5*c7 - 29*g3*g4*c8 \
         + t*(-167*g6*c8 - 6*g5*g9 + 165*g4^2*g6 - 96*g3*g5*g6 + 32*g3*g4*c7 \
              - 258*g3^2*c8 + 276*g3^2*g4^2 - 181*g3^3*g5) \
         + t^2*(107*g6*c7 + 11*g5*c8 + 93*g4*g9 + 48*g3*g10 - 6*g4^2*g5 \
                - 945*g3*g4*g6 + 190*g3^2*c7 - 795*g3^3*g4) \
         + t^3*(3*g6^2 - 31*g5*c7 + 134*g3*g9 - 123*g4*c8 - 674*g3^2*g6 \
                - 83*g3*g4*g5) \
         + t^4*(139*g5*g6 + 31*g4*c7 + 26*g3*c8 + 117*g3*g4^2 + 130*g3^2*g5) \
         + t^5*(513*g4*g6 - 194*g3*c7 + 604*g3^2*g4) \
         + t^6*(g9 + 1094*g3*g6 + 133*g4*g5) + t^7*(3*c8 + 198*g3*g5) \
         + t^8*(22*c7 - 685*g3*g4) + t^9*(g6 + 18*g3^2) + 4*t^10*g5 \
         + 241*t^11*g4 + 382*t^12*g3",
    ),
];

impl Dictionary {
    /// Builds the dictionary for one group against its presentation.
    pub fn new(kind: GroupKind, pres: &Presentation) -> Result<Self> {
        if pres.kind != kind {
            return Err(Error::RingMismatch(
                kind.to_string(),
                pres.kind.to_string(),
            ));
        }
        let expansion_table: &[_] = match kind {
            GroupKind::E6 => E6_EXPANSIONS,
            GroupKind::E7 => E7_EXPANSIONS,
            GroupKind::E8 => E8_EXPANSIONS,
        };
        let inverse_table: &[_] = match kind {
            GroupKind::E6 => E6_INVERSES,
            GroupKind::E7 => E7_INVERSES,
            GroupKind::E8 => E8_INVERSES,
        };
        let mut expansions = Vec::new();
        for &(degree, terms) in expansion_table {
            if pres.delta(degree).is_none() {
                return Err(Error::Verification(format!(
                    "expansion of g{degree} has no matching generator definition"
                )));
            }
            for &(word, _) in terms {
                if word.len() != degree as usize {
                    return Err(Error::Verification(format!(
                        "word {word} does not have length {degree}"
                    )));
                }
            }
            let gcd = terms
                .iter()
                .fold(0i64, |acc, &(_, c)| num_integer::gcd(acc, c.abs()));
            if gcd != 1 {
                return Err(Error::Verification(format!(
                    "expansion of g{degree} is not primitive (content {gcd})"
                )));
            }
            expansions.push(Expansion {
                generator: format!("g{degree}"),
                degree,
                terms: terms.iter().map(|&(w, c)| (w.to_string(), c)).collect(),
            });
        }
        let inverses = inverse_table
            .iter()
            .map(|&(word, expr)| {
                let poly = Polynomial::parse(&pres.ring, expr)?;
                let degree = word.len() as u32;
                poly.check_homogeneous(degree)?;
                Ok(Inverse {
                    word: word.to_string(),
                    degree,
                    poly,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Dictionary {
            kind,
            expansions,
            inverses,
        })
    }
}

/// Outcome status of one verification item.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The stated identity holds exactly.
    Pass,
    /// The item holds because the tested element is identically zero.
    PassTrivial,
    /// The identity holds after reversing the overall sign of the statement.
    PassSignFlipped,
    /// The identity fails.
    Fail,
    /// Not checked (degree above the requested cap, or excluded by design).
    Skipped,
}

impl Status {
    /// True for every passing variant.
    pub fn is_pass(self) -> bool {
        matches!(
            self,
            Status::Pass | Status::PassTrivial | Status::PassSignFlipped
        )
    }
}

/// Result of one verification item, with wall-clock time in seconds.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub degree: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub seconds: f64,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, degree: u32, status: Status) -> Self {
        CheckOutcome {
            name: name.into(),
            degree,
            status,
            detail: None,
            seconds: 0.0,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Checks every relation of the presentation against the characteristic
/// map: each image up to the degree cap must have an empty Schubert
/// expansion.  Relations above the cap are reported as skipped.
pub fn verify_relations(
    rs: &RootSystem,
    pres: &Presentation,
    cap: u32,
    cache_dir: Option<&Path>,
) -> Result<Vec<CheckOutcome>> {
    let images = pres.omega_images(rs)?;
    let mut outcomes = Vec::with_capacity(pres.relations.len());
    for rel in &pres.relations {
        let start = Instant::now();
        let mut outcome = if rel.degree > cap {
            CheckOutcome::new(&rel.name, rel.degree, Status::Skipped)
                .with_detail(format!("degree {} above cap {cap}", rel.degree))
        } else {
            let image = rel.poly.morph(rs.omega_ring(), &images);
            if image.is_zero() {
                CheckOutcome::new(&rel.name, rel.degree, Status::PassTrivial)
                    .with_detail("image is identically zero")
            } else {
                let expansion = schubert::bgg_expand_cached(rs, &image, rel.degree, cache_dir)?;
                if expansion.is_zero() {
                    CheckOutcome::new(&rel.name, rel.degree, Status::Pass)
                } else {
                    CheckOutcome::new(&rel.name, rel.degree, Status::Fail)
                        .with_detail(format!("nonzero expansion: {}", expansion.display()))
                }
            }
        };
        outcome.seconds = start.elapsed().as_secs_f64();
        outcomes.push(outcome);
    }
    Ok(outcomes)
}

fn check_word_in_coset_frontier(rs: &RootSystem, word: &str) -> Result<Vec<u8>> {
    let letters = rs.parse_word(word)?;
    if !Element::word_is_reduced(rs, &letters) {
        return Err(Error::NotReduced {
            len: letters.len(),
            word: letters,
        });
    }
    let el = Element::from_word(rs, &letters);
    for i in 0..rs.rank() {
        if i != 1 && !el.right_ascent(rs, i) {
            return Err(Error::Verification(format!(
                "word {word} is not a minimal coset representative"
            )));
        }
    }
    Ok(letters)
}

fn expansion_matches(
    expansion: &schubert::SchubertExpansion,
    expected: &BTreeMap<String, Rat>,
) -> bool {
    &expansion.terms == expected
}

/// Verifies the dictionary in both directions for all entries of degree at
/// most `max_degree`: the class of `delta_d` must expand to `N_d` times the
/// stated Schubert combination, and each stated inverse must expand to the
/// single Schubert class it names.
pub fn verify_dictionary(
    rs: &RootSystem,
    pres: &Presentation,
    dict: &Dictionary,
    max_degree: u32,
    cache_dir: Option<&Path>,
) -> Result<Vec<CheckOutcome>> {
    if dict.kind != pres.kind {
        return Err(Error::RingMismatch(
            dict.kind.to_string(),
            pres.kind.to_string(),
        ));
    }
    let images = pres.omega_images(rs)?;
    let mut outcomes = Vec::new();
    for exp in &dict.expansions {
        let start = Instant::now();
        let name = format!("expansion:{}", exp.generator);
        let mut outcome = if exp.degree > max_degree {
            CheckOutcome::new(&name, exp.degree, Status::Skipped)
                .with_detail(format!("degree {} above cap {max_degree}", exp.degree))
        } else {
            for (word, _) in &exp.terms {
                check_word_in_coset_frontier(rs, word)?;
            }
            let delta = pres.delta(exp.degree).expect("validated at construction");
            let image = delta.poly.morph(rs.omega_ring(), &images);
            let expansion = schubert::bgg_expand_cached(rs, &image, exp.degree, cache_dir)?;
            let expected: BTreeMap<String, Rat> = exp
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), Rat::from_integer((c * delta.multiple).into())))
                .collect();
            if expansion_matches(&expansion, &expected) {
                CheckOutcome::new(&name, exp.degree, Status::Pass).with_detail(format!(
                    "class of delta_{} is {} times the stated combination",
                    exp.degree, delta.multiple
                ))
            } else {
                CheckOutcome::new(&name, exp.degree, Status::Fail).with_detail(format!(
                    "expected {} times the stated combination, got {}",
                    delta.multiple,
                    expansion.display()
                ))
            }
        };
        outcome.seconds = start.elapsed().as_secs_f64();
        outcomes.push(outcome);
    }
    for inv in &dict.inverses {
        let start = Instant::now();
        let name = format!("inverse:Z{}", inv.word);
        let mut outcome = if inv.degree > max_degree {
            CheckOutcome::new(&name, inv.degree, Status::Skipped)
                .with_detail(format!("degree {} above cap {max_degree}", inv.degree))
        } else {
            check_word_in_coset_frontier(rs, &inv.word)?;
            let image = inv.poly.morph(rs.omega_ring(), &images);
            let expansion = schubert::bgg_expand_cached(rs, &image, inv.degree, cache_dir)?;
            let expected: BTreeMap<String, Rat> =
                [(inv.word.clone(), Rat::one())].into_iter().collect();
            if expansion_matches(&expansion, &expected) {
                CheckOutcome::new(&name, inv.degree, Status::Pass)
            } else {
                CheckOutcome::new(&name, inv.degree, Status::Fail).with_detail(format!(
                    "expected the single class Z{}, got {}",
                    inv.word,
                    expansion.display()
                ))
            }
        };
        outcome.seconds = start.elapsed().as_secs_f64();
        outcomes.push(outcome);
    }
    Ok(outcomes)
}

/// One class of the alternative relation system, defined as a polynomial in
/// the presentation generators and equal to the Schubert class `Z_word`.
#[derive(Debug, Clone)]
pub struct YClass {
    pub name: String,
    pub word: String,
    pub poly: Polynomial,
}

/// A stated equality `r = sum of coeff * rho` between the alternative
/// relations and the primary ones, with coefficients in the y-ring.
#[derive(Debug, Clone)]
pub struct Correspondence {
    pub r_name: String,
    pub terms: Vec<(Polynomial, String)>,
}

/// The alternative relation system: relations `r_d` written in terms of
/// `t`, the Chern classes, and Schubert classes `y_d`, plus the stated
/// correspondences to the primary relations where available.
#[derive(Debug, Clone)]
pub struct DuanZhao {
    pub kind: GroupKind,
    /// The presentation ring extended by the `y_d` variables.
    pub ring: Arc<RingSpec>,
    pub ys: Vec<YClass>,
    pub relations: Vec<Relation>,
    pub correspondences: Vec<Correspondence>,
    /// Items stated in the source material that are not checked, with the
    /// reason for each.
    pub excluded: Vec<(String, String)>,
}

const E6_Y_CLASSES: &[(&str, &str, &str)] = &[
    ("y3", "542", "g3 - t^3"),
    ("y4", "6542", "g4 - t^4"),
];

const E7_Y_CLASSES: &[(&str, &str, &str)] = &[
    ("y3", "542", "g3 - t^3"),
    ("y4", "6542", "g4 - t^4"),
    ("y5", "76542", "g5"),
    ("y9", "154376542", "g9 - g4*g5 + t^4*g5"),
];

// The sign of the t*g3*g5 term in y9 is delicate: the minus variant fails
// both the Schubert-class match and the degree-nine relation below, so
// verify_duan_zhao expands both sign variants and requires exactly one to
// equal the class Z154376542. The plus variant wins and matches the
// dictionary's inverse entry.
const E8_Y_CLASSES: &[(&str, &str, &str)] = &[
    ("y3", "542", "g3 - t^3"),
    ("y4", "6542", "g4 - t^4"),
    ("y5", "76542", "g5"),
    ("y6", "136542", "g6 - t*g5 + t^2*g4"),
    (
        "y9",
        "154376542",
        "g9 - 2*g3^3 - 4*g3*g6 - g4*g5 + t*(-6*g4^2 + 5*c8 + 4*g3*g5) \
         + t^2*(-4*c7 + 14*g3*g4) + t^3*(-2*g3^2 + 14*g6) - 5*t^4*g5 \
         - 10*t^5*g4 + 10*t^6*g3",
    ),
    (
        "y10",
        "1654376542",
        "-g10 + g5^2 - 2*g3^2*g4 - 4*g4*g6 + 2*t^2*g4^2 + t^4*(2*g3^2 + 4*g6) \
         - 4*t^6*g4 + 2*t^10",
    ),
];

const E6_DZ_RELATIONS: &[(&str, u32, &str)] = &[
    ("r2", 2, "4*t^2 - c2"),
    ("r3", 3, "2*y3 + 2*t^3 - c3"),
    ("r4", 4, "3*y4 + t^4 - c4"),
    ("r5", 5, "2*t^2*y3 - t*c4 + c5"),
    ("r6", 6, "y3^2 - t*c5 + 2*c6"),
    ("r8", 8, "3*y4^2 - 2*c5*y3 - t^2*c6 + t^3*c5"),
    ("r9", 9, "2*y3*c6 - t^3*c6"),
    ("r12", 12, "y4^3 - c6^2"),
];

const E7_DZ_RELATIONS: &[(&str, u32, &str)] = &[
    ("r2", 2, "4*t^2 - c2"),
    ("r3", 3, "2*y3 + 2*t^3 - c3"),
    ("r4", 4, "3*y4 + t^4 - c4"),
    ("r5", 5, "2*y5 - 2*t^2*y3 + t*c4 - c5"),
    ("r6", 6, "y3^2 - t*c5 + 2*c6"),
    ("r8", 8, "3*y4^2 + 2*y3*y5 - 2*y3*c5 + 2*t*c7 - t^2*c6 + t^3*c5"),
    ("r9", 9, "2*y9 + 2*y4*y5 - 2*y3*c6 - t^2*c7 + t^3*c6"),
    ("r10", 10, "y5^2 - 2*y3*c7 + t^3*c7"),
    (
        "r12",
        12,
        "y4^3 - 4*y5*c7 - c6^2 - 2*y3*y9 - 2*y3*y4*y5 + 2*t*y5*c6 + 3*t*y4*c7 \
         + c5*c7",
    ),
    ("r14", 14, "c7^2 - 2*y5*y9 + 2*y3*y4*c7 - t^3*y4*c7"),
    (
        "r18",
        18,
        "y9^2 + 2*y5*c6*c7 - y4*c7^2 - 2*y4*y5*y9 + 2*y3*y5^3 - 5*t*y5^2*c7",
    ),
];

const E8_DZ_RELATIONS: &[(&str, u32, &str)] = &[
    ("r2", 2, "4*t^2 - c2"),
    ("r3", 3, "2*y3 + 2*t^3 - c3"),
    ("r4", 4, "3*y4 + t^4 - c4"),
    ("r5", 5, "2*y5 - 2*t^2*y3 + t*c4 - c5"),
    ("r6", 6, "5*y6 + 2*y3^2 + 10*t*y5 - 2*t*c5 - c6"),
    ("r8", 8, "3*c8 - 3*y4^2 - 2*y3*y5 + 2*y3*c5 - 2*t*c7 + t^2*c6 - t^3*c5"),
    (
        "r9",
        9,
        "2*y9 + 2*y4*y5 - 2*y3*y6 - 4*t*y3*y5 + t*c8 - t^2*c7 + t^3*c6",
    ),
    (
        "r10",
        10,
        "3*y10 - 2*y5^2 - 2*y3*c7 - 3*y4*y6 + 3*y4*c6 - 6*t*y4*y5 - t^2*c8 \
         + t^3*c7",
    ),
];

const E6_CORRESPONDENCES: &[(&str, &[(&str, &str)])] = &[
    ("r2", &[("-1", "rho2")]),
    ("r3", &[("-1", "rho3")]),
    ("r4", &[("-1", "rho4")]),
    ("r5", &[("-1", "rho5"), ("t", "rho4")]),
    ("r6", &[("1", "rho6"), ("-t", "rho5")]),
    (
        "r8",
        &[
            ("1", "rho8"),
            ("-2*y3", "rho5"),
            ("4*t^2", "rho6"),
            ("t^3", "rho5"),
        ],
    ),
    ("r9", &[("-1", "rho9")]),
    (
        "r12",
        &[
            ("1", "rho12"),
            ("y4", "rho8"),
            ("y3", "rho9"),
            ("-2*c6", "rho6"),
        ],
    ),
];

const E7_CORRESPONDENCES: &[(&str, &[(&str, &str)])] = &[
    ("r2", &[("-1", "rho2")]),
    ("r3", &[("-1", "rho3")]),
    ("r4", &[("-1", "rho4")]),
    ("r5", &[("-1", "rho5"), ("t", "rho4")]),
    ("r6", &[("1", "rho6"), ("-t", "rho5")]),
    (
        "r8",
        &[
            ("1", "rho8"),
            ("-2*y3", "rho5"),
            ("4*t^2", "rho6"),
            ("t^3", "rho5"),
        ],
    ),
    ("r9", &[("-1", "rho9")]),
    ("r10", &[("1", "rho10")]),
    (
        "r12",
        &[
            ("1", "rho12"),
            ("y4", "rho8"),
            ("y3", "rho9"),
            ("-2*c6", "rho6"),
            ("c7", "rho5"),
        ],
    ),
    (
        "r14",
        &[("1", "rho14"), ("y5", "rho9"), ("2*y4", "rho10")],
    ),
    (
        "r18",
        &[
            ("1", "rho18"),
            ("y4", "rho14"),
            ("3*y4^2 + 2*y3*y5 - 5*t*c7", "rho10"),
            ("y4*y5 - y9", "rho9"),
            ("-2*c7*y3 + t^3*c7", "rho8"),
            ("-12*t*c7*y4 - 24*t^5*c7", "rho6"),
        ],
    ),
];

impl DuanZhao {
    /// Builds the alternative relation system for one group.
    pub fn new(kind: GroupKind, pres: &Presentation) -> Result<Self> {
        if pres.kind != kind {
            return Err(Error::RingMismatch(
                kind.to_string(),
                pres.kind.to_string(),
            ));
        }
        let y_table: &[_] = match kind {
            GroupKind::E6 => E6_Y_CLASSES,
            GroupKind::E7 => E7_Y_CLASSES,
            GroupKind::E8 => E8_Y_CLASSES,
        };
        let r_table: &[_] = match kind {
            GroupKind::E6 => E6_DZ_RELATIONS,
            GroupKind::E7 => E7_DZ_RELATIONS,
            GroupKind::E8 => E8_DZ_RELATIONS,
        };
        let corr_table: &[(&str, &[(&str, &str)])] = match kind {
            GroupKind::E6 => E6_CORRESPONDENCES,
            GroupKind::E7 => E7_CORRESPONDENCES,
            GroupKind::E8 => &[],
        };
        let mut vars: Vec<(String, u32)> = pres
            .ring
            .names()
            .iter()
            .zip(pres.ring.weights())
            .map(|(n, &w)| (n.clone(), w))
            .collect();
        for &(name, word, _) in y_table {
            vars.push((name.to_string(), word.len() as u32));
        }
        let ring = RingSpec::new(vars);
        let ys = y_table
            .iter()
            .map(|&(name, word, expr)| {
                let poly = Polynomial::parse(&pres.ring, expr)?;
                poly.check_homogeneous(word.len() as u32)?;
                Ok(YClass {
                    name: name.to_string(),
                    word: word.to_string(),
                    poly,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let relations = parse_named(&ring, r_table)?;
        let correspondences = corr_table
            .iter()
            .map(|&(r_name, terms)| {
                let terms = terms
                    .iter()
                    .map(|&(coeff, rho)| {
                        if pres.relation(rho).is_none() {
                            return Err(Error::Verification(format!(
                                "correspondence references unknown relation {rho}"
                            )));
                        }
                        Ok((Polynomial::parse(&ring, coeff)?, rho.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Correspondence {
                    r_name: r_name.to_string(),
                    terms,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let excluded = match kind {
            GroupKind::E8 => vec![
                (
                    "r12".to_string(),
                    "stated only modulo the degree-one classes".to_string(),
                ),
                (
                    "r14".to_string(),
                    "stated only modulo the degree-one classes".to_string(),
                ),
                (
                    "r15".to_string(),
                    "stated only modulo the degree-one classes".to_string(),
                ),
                (
                    "r18".to_string(),
                    "references classes y7, y8 that are never defined".to_string(),
                ),
                (
                    "r20".to_string(),
                    "references classes y7, y8 that are never defined".to_string(),
                ),
                (
                    "r24".to_string(),
                    "references classes y7, y8 that are never defined".to_string(),
                ),
                (
                    "r30".to_string(),
                    "references classes y7, y8 that are never defined".to_string(),
                ),
                (
                    "y15".to_string(),
                    "stated only modulo the degree-one classes".to_string(),
                ),
            ],
            _ => Vec::new(),
        };
        Ok(DuanZhao {
            kind,
            ring,
            ys,
            relations,
            correspondences,
            excluded,
        })
    }

    /// Images of the y-ring variables in the presentation ring: generator
    /// variables map to themselves and each `y_d` to its polynomial.
    pub fn generator_images(&self, pres: &Presentation) -> Vec<Polynomial> {
        let mut images = Vec::with_capacity(self.ring.nvars());
        for i in 0..pres.ring.nvars() {
            images.push(Polynomial::var(&pres.ring, i));
        }
        for y in &self.ys {
            images.push(y.poly.clone());
        }
        images
    }
}

/// Builds the ring `Q[t_1, ..., t_l, t, g...]` together with the images of
/// the presentation-ring variables in it: the Chern classes map to the
/// elementary symmetric polynomials of the `t_i`, everything else to the
/// matching variable.  Identities between relations are compared in this
/// ring, which keeps the exceptional generators as free variables.
fn split_chern_ring(pres: &Presentation) -> (Arc<RingSpec>, Vec<Polynomial>) {
    let rank = pres.kind.rank();
    let mut vars: Vec<(String, u32)> = (1..=rank).map(|i| (format!("t{i}"), 1)).collect();
    vars.push(("t".to_string(), 1));
    let g_names: Vec<String> = pres
        .ring
        .names()
        .iter()
        .filter(|n| n.starts_with('g'))
        .cloned()
        .collect();
    for name in &g_names {
        let idx = pres.ring.index_of(name).expect("generator name");
        vars.push((name.clone(), pres.ring.weight(idx)));
    }
    let ring = RingSpec::new(vars);
    let t_slots: Vec<usize> = (0..rank).collect();
    let elementaries = symfn::elementary_all(&ring, &t_slots);
    let images = pres
        .ring
        .names()
        .iter()
        .map(|name| {
            if name == "t" {
                Polynomial::var(&ring, rank)
            } else if name == "u" {
                Polynomial::var(&ring, rank - 1)
            } else if let Some(i) = name.strip_prefix('c') {
                let i: usize = i.parse().expect("chern index");
                elementaries[i - 1].clone()
            } else {
                let slot = ring.index_of(name).expect("generator slot");
                Polynomial::var(&ring, slot)
            }
        })
        .collect();
    (ring, images)
}

/// Verifies the alternative relation system.  For `E6` and `E7` each stated
/// correspondence `r = sum coeff * rho` is checked as a polynomial identity
/// with the Chern classes expanded into the degree-one classes; a flipped
/// overall sign is reported separately.  For `E8`, where no correspondences
/// are stated, the relations are checked directly through the
/// characteristic map, and both sign variants of the degree-nine class are
/// expanded to adjudicate which one is the stated Schubert class.
pub fn verify_duan_zhao(
    rs: &RootSystem,
    pres: &Presentation,
    dz: &DuanZhao,
    cap: u32,
    cache_dir: Option<&Path>,
) -> Result<Vec<CheckOutcome>> {
    if dz.kind != pres.kind {
        return Err(Error::RingMismatch(
            dz.kind.to_string(),
            pres.kind.to_string(),
        ));
    }
    let mut outcomes = Vec::new();
    let to_generator = dz.generator_images(pres);
    if !dz.correspondences.is_empty() {
        let (split_ring, split_images) = split_chern_ring(pres);
        for corr in &dz.correspondences {
            let start = Instant::now();
            let rel = dz
                .relations
                .iter()
                .find(|r| r.name == corr.r_name)
                .ok_or_else(|| {
                    Error::Verification(format!(
                        "correspondence for unknown relation {}",
                        corr.r_name
                    ))
                })?;
            let lhs = rel
                .poly
                .morph(&pres.ring, &to_generator)
                .morph(&split_ring, &split_images);
            let mut rhs = Polynomial::zero(&split_ring);
            for (coeff, rho_name) in &corr.terms {
                let rho = pres.relation(rho_name).expect("validated at construction");
                let coeff_split = coeff
                    .morph(&pres.ring, &to_generator)
                    .morph(&split_ring, &split_images);
                let rho_split = rho.poly.morph(&split_ring, &split_images);
                rhs = rhs.add_ref(&coeff_split.mul_ref(&rho_split));
            }
            let name = format!("identity:{}", corr.r_name);
            let mut outcome = if lhs.sub_ref(&rhs).is_zero() {
                CheckOutcome::new(&name, rel.degree, Status::Pass)
            } else if lhs.add_ref(&rhs).is_zero() {
                CheckOutcome::new(&name, rel.degree, Status::PassSignFlipped)
                    .with_detail("holds after reversing the overall sign of the statement")
            } else {
                CheckOutcome::new(&name, rel.degree, Status::Fail)
                    .with_detail("stated combination does not reproduce the relation")
            };
            outcome.seconds = start.elapsed().as_secs_f64();
            outcomes.push(outcome);
        }
    } else {
        let images = pres.omega_images(rs)?;
        for rel in &dz.relations {
            let start = Instant::now();
            let name = format!("kernel:{}", rel.name);
            let mut outcome = if rel.degree > cap {
                CheckOutcome::new(&name, rel.degree, Status::Skipped)
                    .with_detail(format!("degree {} above cap {cap}", rel.degree))
            } else {
                let image = rel
                    .poly
                    .morph(&pres.ring, &to_generator)
                    .morph(rs.omega_ring(), &images);
                if image.is_zero() {
                    CheckOutcome::new(&name, rel.degree, Status::PassTrivial)
                        .with_detail("image is identically zero")
                } else {
                    let expansion =
                        schubert::bgg_expand_cached(rs, &image, rel.degree, cache_dir)?;
                    if expansion.is_zero() {
                        CheckOutcome::new(&name, rel.degree, Status::Pass)
                    } else {
                        CheckOutcome::new(&name, rel.degree, Status::Fail).with_detail(
                            format!("nonzero expansion: {}", expansion.display()),
                        )
                    }
                }
            };
            outcome.seconds = start.elapsed().as_secs_f64();
            outcomes.push(outcome);
        }
        if pres.kind == GroupKind::E8 && cap >= 9 {
            outcomes.extend(adjudicate_e8_y9(rs, pres, dz, cache_dir)?);
        }
    }
    for (name, reason) in &dz.excluded {
        let outcome =
            CheckOutcome::new(format!("excluded:{name}"), 0, Status::Skipped).with_detail(reason);
        outcomes.push(outcome);
    }
    Ok(outcomes)
}

/// Expands both sign variants of the degree-nine class and reports which
/// one equals the stated Schubert class.
fn adjudicate_e8_y9(
    rs: &RootSystem,
    pres: &Presentation,
    dz: &DuanZhao,
    cache_dir: Option<&Path>,
) -> Result<Vec<CheckOutcome>> {
    let images = pres.omega_images(rs)?;
    let y9 = dz
        .ys
        .iter()
        .find(|y| y.name == "y9")
        .expect("E8 has a degree-nine class");
    let flip_term = Polynomial::parse(&pres.ring, "8*t*g3*g5")?;
    let variants = [
        ("y9[+4*t*g3*g5]", y9.poly.clone()),
        ("y9[-4*t*g3*g5]", y9.poly.sub_ref(&flip_term)),
    ];
    let expected: BTreeMap<String, Rat> =
        [(y9.word.clone(), Rat::one())].into_iter().collect();
    let mut outcomes = Vec::new();
    let mut matches = 0u32;
    for (name, poly) in &variants {
        let start = Instant::now();
        let image = poly.morph(rs.omega_ring(), &images);
        let expansion = schubert::bgg_expand_cached(rs, &image, 9, cache_dir)?;
        let mut outcome = if expansion_matches(&expansion, &expected) {
            matches += 1;
            CheckOutcome::new(*name, 9, Status::Pass)
                .with_detail(format!("equals the single class Z{}", y9.word))
        } else {
            CheckOutcome::new(*name, 9, Status::Fail)
                .with_detail(format!("expansion: {}", expansion.display()))
        };
        outcome.seconds = start.elapsed().as_secs_f64();
        outcomes.push(outcome);
    }
    if matches != 1 {
        return Err(Error::Verification(format!(
            "expected exactly one sign variant of y9 to match, found {matches}"
        )));
    }
    Ok(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::RootSystem;

    fn outcome_map(outcomes: &[CheckOutcome]) -> BTreeMap<String, Status> {
        outcomes
            .iter()
            .map(|o| (o.name.clone(), o.status))
            .collect()
    }

    #[test]
    fn construction_counts() {
        for kind in GroupKind::all() {
            let pres = Presentation::new(kind).unwrap();
            let dict = Dictionary::new(kind, &pres).unwrap();
            let dz = DuanZhao::new(kind, &pres).unwrap();
            let (nrel, ndelta, nexp, ninv, nr, ncorr) = match kind {
                GroupKind::E6 => (9, 2, 2, 5, 8, 8),
                GroupKind::E7 => (12, 4, 4, 8, 11, 11),
                GroupKind::E8 => (16, 7, 7, 7, 8, 0),
            };
            assert_eq!(pres.relations.len(), nrel, "{kind} relation count");
            assert_eq!(pres.deltas.len(), ndelta, "{kind} delta count");
            assert_eq!(dict.expansions.len(), nexp, "{kind} expansion count");
            assert_eq!(dict.inverses.len(), ninv, "{kind} inverse count");
            assert_eq!(dz.relations.len(), nr, "{kind} alternative relation count");
            assert_eq!(dz.correspondences.len(), ncorr, "{kind} correspondence count");
        }
    }

    #[test]
    fn relation_term_counts() {
        let e7 = Presentation::new(GroupKind::E7).unwrap();
        assert_eq!(e7.relation("rho18").unwrap().poly.nterms(), 24);
        let e8 = Presentation::new(GroupKind::E8).unwrap();
        assert_eq!(e8.relation("rho18").unwrap().poly.nterms(), 109);
        let e6 = Presentation::new(GroupKind::E6).unwrap();
        assert_eq!(e6.relation("rho12").unwrap().poly.nterms(), 10);
    }

    #[test]
    fn e8_top_relation_composition_pins() {
        let pres = Presentation::new(GroupKind::E8).unwrap();
        let ring = &pres.ring;
        let g10_sq = Polynomial::parse(ring, "g10^2").unwrap();
        let g6_4 = Polynomial::parse(ring, "g6^4").unwrap();
        let g15_sq = Polynomial::parse(ring, "g15^2").unwrap();
        let lead = |name: &str, probe: &Polynomial| {
            let rel = pres.relation(name).unwrap();
            let m = probe.leading().expect("probe monomial").0.clone();
            rel.poly.coeff(&m)
        };
        assert_eq!(lead("rho20", &g10_sq), Rat::from_integer(3.into()));
        assert_eq!(lead("rho24", &g6_4), Rat::from_integer(80.into()));
        assert_eq!(lead("rho30", &g15_sq), Rat::from_integer((-9).into()));
    }

    #[test]
    fn deltas_use_only_t_and_c() {
        for kind in GroupKind::all() {
            let pres = Presentation::new(kind).unwrap();
            for delta in &pres.deltas {
                assert!(uses_only_t_c(&delta.poly), "{kind} delta_{}", delta.degree);
            }
        }
    }

    #[test]
    fn dictionary_words_are_minimal_coset_representatives() {
        for kind in GroupKind::all() {
            let rs = RootSystem::new(kind);
            let pres = Presentation::new(kind).unwrap();
            let dict = Dictionary::new(kind, &pres).unwrap();
            for exp in &dict.expansions {
                for (word, _) in &exp.terms {
                    check_word_in_coset_frontier(&rs, word).unwrap();
                }
            }
            for inv in &dict.inverses {
                check_word_in_coset_frontier(&rs, &inv.word).unwrap();
            }
        }
    }

    #[test]
    fn e6_relations_are_in_the_kernel() {
        let rs = RootSystem::new(GroupKind::E6);
        let pres = Presentation::new(GroupKind::E6).unwrap();
        let outcomes = verify_relations(&rs, &pres, 12, None).unwrap();
        assert_eq!(outcomes.len(), 9);
        for o in &outcomes {
            assert!(o.status.is_pass(), "{}: {:?} {:?}", o.name, o.status, o.detail);
        }
    }

    #[test]
    fn e7_low_degree_relations_are_in_the_kernel() {
        let rs = RootSystem::new(GroupKind::E7);
        let pres = Presentation::new(GroupKind::E7).unwrap();
        let outcomes = verify_relations(&rs, &pres, 9, None).unwrap();
        let map = outcome_map(&outcomes);
        for name in ["rho1", "rho2", "rho3", "rho4", "rho5", "rho6", "rho8", "rho9"] {
            assert!(map[name].is_pass(), "{name}: {:?}", map[name]);
        }
        assert_eq!(map["rho18"], Status::Skipped);
    }

    #[test]
    fn e8_low_degree_relations_are_in_the_kernel() {
        let rs = RootSystem::new(GroupKind::E8);
        let pres = Presentation::new(GroupKind::E8).unwrap();
        let outcomes = verify_relations(&rs, &pres, 8, None).unwrap();
        let map = outcome_map(&outcomes);
        for name in ["rho1", "rho2", "rho3", "rho4", "rho5", "rho6", "rho8"] {
            assert!(map[name].is_pass(), "{name}: {:?}", map[name]);
        }
        assert_eq!(map["rho30"], Status::Skipped);
    }

    #[test]
    fn e6_dictionary_holds() {
        let rs = RootSystem::new(GroupKind::E6);
        let pres = Presentation::new(GroupKind::E6).unwrap();
        let dict = Dictionary::new(GroupKind::E6, &pres).unwrap();
        let outcomes = verify_dictionary(&rs, &pres, &dict, 4, None).unwrap();
        assert_eq!(outcomes.len(), 7);
        for o in &outcomes {
            assert!(o.status.is_pass(), "{}: {:?} {:?}", o.name, o.status, o.detail);
        }
    }

    #[test]
    fn e7_dictionary_holds() {
        let rs = RootSystem::new(GroupKind::E7);
        let pres = Presentation::new(GroupKind::E7).unwrap();
        let dict = Dictionary::new(GroupKind::E7, &pres).unwrap();
        let outcomes = verify_dictionary(&rs, &pres, &dict, 9, None).unwrap();
        assert_eq!(outcomes.len(), 12);
        for o in &outcomes {
            assert!(o.status.is_pass(), "{}: {:?} {:?}", o.name, o.status, o.detail);
        }
    }

    #[test]
    fn e8_dictionary_low_degrees_hold() {
        let rs = RootSystem::new(GroupKind::E8);
        let pres = Presentation::new(GroupKind::E8).unwrap();
        let dict = Dictionary::new(GroupKind::E8, &pres).unwrap();
        let outcomes = verify_dictionary(&rs, &pres, &dict, 6, None).unwrap();
        for o in &outcomes {
            if o.degree <= 6 {
                assert!(o.status.is_pass(), "{}: {:?} {:?}", o.name, o.status, o.detail);
            } else {
                assert_eq!(o.status, Status::Skipped, "{}", o.name);
            }
        }
    }

    #[test]
    fn e6_identities_hold() {
        let rs = RootSystem::new(GroupKind::E6);
        let pres = Presentation::new(GroupKind::E6).unwrap();
        let dz = DuanZhao::new(GroupKind::E6, &pres).unwrap();
        let outcomes = verify_duan_zhao(&rs, &pres, &dz, 12, None).unwrap();
        let map = outcome_map(&outcomes);
        for r in ["r2", "r3", "r4", "r6", "r8", "r12"] {
            assert_eq!(map[&format!("identity:{r}")], Status::Pass, "{r}");
        }
        // The degree-5 and degree-9 statements hold with the overall sign
        // reversed; their counterparts for the larger groups are exact.
        assert_eq!(map["identity:r5"], Status::PassSignFlipped);
        assert_eq!(map["identity:r9"], Status::PassSignFlipped);
    }

    #[test]
    fn e7_identities_hold() {
        let rs = RootSystem::new(GroupKind::E7);
        let pres = Presentation::new(GroupKind::E7).unwrap();
        let dz = DuanZhao::new(GroupKind::E7, &pres).unwrap();
        let outcomes = verify_duan_zhao(&rs, &pres, &dz, 18, None).unwrap();
        assert_eq!(outcomes.len(), 11);
        for o in &outcomes {
            assert_eq!(o.status, Status::Pass, "{}: {:?}", o.name, o.detail);
        }
    }

    #[test]
    #[ignore = "about half a minute in release; covered by the acceptance suite"]
    fn e7_relations_full_kernel() {
        let rs = RootSystem::new(GroupKind::E7);
        let pres = Presentation::new(GroupKind::E7).unwrap();
        let outcomes = verify_relations(&rs, &pres, 18, None).unwrap();
        for o in &outcomes {
            assert!(o.status.is_pass(), "{}: {:?} {:?}", o.name, o.status, o.detail);
        }
    }

    #[test]
    #[ignore = "about twenty seconds in release; covered by the acceptance suite"]
    fn e8_relations_kernel_to_degree_15() {
        let rs = RootSystem::new(GroupKind::E8);
        let pres = Presentation::new(GroupKind::E8).unwrap();
        let outcomes = verify_relations(&rs, &pres, 15, None).unwrap();
        for o in &outcomes {
            if o.degree <= 15 {
                assert!(o.status.is_pass(), "{}: {:?} {:?}", o.name, o.status, o.detail);
            } else {
                assert_eq!(o.status, Status::Skipped, "{}", o.name);
            }
        }
    }

    #[test]
    #[ignore = "hours-scale; opt-in"]
    fn e8_relations_kernel_above_degree_15() {
        let rs = RootSystem::new(GroupKind::E8);
        let pres = Presentation::new(GroupKind::E8).unwrap();
        let images = pres.omega_images(&rs).unwrap();
        for name in ["rho18", "rho20", "rho24", "rho30"] {
            let rel = pres.relation(name).unwrap();
            let image = rel.poly.morph(rs.omega_ring(), &images);
            let expansion = schubert::bgg_expand(&rs, &image, rel.degree).unwrap();
            assert!(expansion.is_zero(), "{name}: {}", expansion.display());
        }
    }

    #[test]
    #[ignore = "about ten seconds; covered by the acceptance suite"]
    fn e8_dictionary_through_degree_10() {
        let rs = RootSystem::new(GroupKind::E8);
        let pres = Presentation::new(GroupKind::E8).unwrap();
        let dict = Dictionary::new(GroupKind::E8, &pres).unwrap();
        let outcomes = verify_dictionary(&rs, &pres, &dict, 10, None).unwrap();
        for o in &outcomes {
            if o.degree <= 10 {
                assert!(o.status.is_pass(), "{}: {:?} {:?}", o.name, o.status, o.detail);
            } else {
                assert_eq!(o.status, Status::Skipped, "{}", o.name);
            }
        }
    }

    #[test]
    #[ignore = "about ninety seconds in release; covered by the acceptance suite"]
    fn e8_dictionary_degree_15() {
        let rs = RootSystem::new(GroupKind::E8);
        let pres = Presentation::new(GroupKind::E8).unwrap();
        let dict = Dictionary::new(GroupKind::E8, &pres).unwrap();
        let outcomes = verify_dictionary(&rs, &pres, &dict, 15, None).unwrap();
        for o in &outcomes {
            assert!(o.status.is_pass(), "{}: {:?} {:?}", o.name, o.status, o.detail);
        }
    }

    #[test]
    #[ignore = "a few seconds; covered by the acceptance suite"]
    fn e8_alternative_relations_full() {
        let rs = RootSystem::new(GroupKind::E8);
        let pres = Presentation::new(GroupKind::E8).unwrap();
        let dz = DuanZhao::new(GroupKind::E8, &pres).unwrap();
        let outcomes = verify_duan_zhao(&rs, &pres, &dz, 10, None).unwrap();
        let map = outcome_map(&outcomes);
        for r in ["r2", "r3", "r4", "r5", "r6", "r8", "r9", "r10"] {
            assert!(map[&format!("kernel:{r}")].is_pass(), "{r}");
        }
        // Exactly one sign variant of the degree-nine class is the stated
        // Schubert class; the construction matches the dictionary entry.
        assert_eq!(map["y9[+4*t*g3*g5]"], Status::Pass);
        assert_eq!(map["y9[-4*t*g3*g5]"], Status::Fail);
    }

    #[test]
    fn e8_alternative_relations_low_degrees() {
        let rs = RootSystem::new(GroupKind::E8);
        let pres = Presentation::new(GroupKind::E8).unwrap();
        let dz = DuanZhao::new(GroupKind::E8, &pres).unwrap();
        let outcomes = verify_duan_zhao(&rs, &pres, &dz, 6, None).unwrap();
        let map = outcome_map(&outcomes);
        for r in ["r2", "r3", "r4", "r5", "r6"] {
            assert!(map[&format!("kernel:{r}")].is_pass(), "{r}");
        }
        assert_eq!(map["kernel:r8"], Status::Skipped);
        assert_eq!(map["excluded:r12"], Status::Skipped);
    }
}
