//! Chow rings of the exceptional groups: quotient the flag-variety
//! presentations by the ideal of all degree-one classes, canonicalize the
//! resulting finitely presented graded Z-algebras, verify the expected
//! isomorphisms degree by degree, and analyze the mod-p reductions together
//! with the p-exceptional degrees.
//!
//! Killing every degree-one class sends `t`, `u`, and every Chern class
//! `c_i` to zero, so each relation `rho_j` collapses to a polynomial in the
//! exceptional generators alone. Those raw images are then reduced against
//! the relations already derived: unit-leading relations rewrite leading
//! terms, torsion relations reduce coefficients to least non-negative
//! residues. Every reduction step is logged so the whole derivation replays
//! as a chain of exact polynomial identities.

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Monomial, Polynomial, RingSpec};
use crate::presentations::{CheckOutcome, Presentation, Relation, Status};
use crate::root::GroupKind;
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

/// A polynomial consisting of the single term `c * m`.
fn monomial_poly(ring: &Arc<RingSpec>, m: Monomial, c: Rat) -> Polynomial {
    let mut out = Polynomial::zero(ring);
    out.add_term(m, c);
    out
}

/// A finitely presented graded Z-algebra: a weighted generator ring and a
/// list of homogeneous integer relations.
#[derive(Debug, Clone)]
pub struct GradedZPresentation {
    pub ring: Arc<RingSpec>,
    pub relations: Vec<Relation>,
}

impl GradedZPresentation {
    /// The generators as `(name, degree)` pairs.
    pub fn generators(&self) -> Vec<(String, u32)> {
        (0..self.ring.nvars())
            .map(|i| (self.ring.name(i).to_string(), self.ring.weight(i)))
            .collect()
    }

    /// The additive order forced on a generator by a pure torsion relation
    /// `n * X`, when one is present.
    pub fn torsion_order(&self, var: usize) -> Option<Int> {
        let single = Monomial::var(&self.ring, var);
        self.relations.iter().find_map(|r| {
            if r.poly.nterms() != 1 {
                return None;
            }
            let (m, c) = r.poly.leading()?;
            (*m == single).then(|| c.to_integer().abs())
        })
    }

    /// All monomials of the given weighted degree, sorted descending.
    pub fn basis(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let weights = self.ring.weights().to_vec();
        let mut exps = vec![0u16; weights.len()];
        fn rec(
            ring: &RingSpec,
            weights: &[u32],
            exps: &mut Vec<u16>,
            var: usize,
            remaining: u32,
            out: &mut Vec<Monomial>,
        ) {
            if remaining == 0 {
                out.push(Monomial::from_exps(ring, exps));
                return;
            }
            if var == weights.len() {
                return;
            }
            let max = remaining / weights[var];
            for e in 0..=max {
                exps[var] = e as u16;
                rec(ring, weights, exps, var + 1, remaining - e * weights[var], out);
            }
            exps[var] = 0;
        }
        rec(&self.ring, &weights, &mut exps, 0, degree, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// The integer matrix whose column lattice spans the degree-`d` slice of
    /// the relation ideal, in the `basis(d)` coordinates. Returned row-major
    /// with one row per basis monomial.
    pub fn relation_matrix(&self, degree: u32, basis: &[Monomial]) -> Vec<Vec<Int>> {
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut columns: Vec<Vec<Int>> = Vec::new();
        for r in &self.relations {
            if r.degree > degree {
                continue;
            }
            for m in self.basis(degree - r.degree) {
                let product = r.poly.mul_term(&m, &Rat::one());
                let mut col = vec![Int::zero(); basis.len()];
                for (mono, coeff) in product.iter() {
                    let row = index[mono];
                    col[row] = coeff.to_integer();
                }
                columns.push(col);
            }
        }
        let mut rows = vec![vec![Int::zero(); columns.len()]; basis.len()];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                rows[i][j] = v.clone();
            }
        }
        rows
    }

    /// Whether the given homogeneous integral polynomial lies in the
    /// relation ideal, decided by column-lattice membership in its degree.
    pub fn ideal_contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let degree = f.degree().expect("nonzero");
        f.check_homogeneous(degree)?;
        if !f.is_integral() {
            return Err(Error::Verification(format!(
                "ideal membership needs integral input, got {f}"
            )));
        }
        let basis = self.basis(degree);
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut vector = vec![Int::zero(); basis.len()];
        for (mono, coeff) in f.iter() {
            vector[index[mono]] = coeff.to_integer();
        }
        let matrix = self.relation_matrix(degree, &basis);
        let smith = linalg::smith(&matrix, true);
        Ok(linalg::column_lattice_contains(&smith, &vector))
    }
}

/// One logged step of the reduction of a substituted relation: the earlier
/// relation used and the multiplier it was scaled by before subtraction.
#[derive(Debug, Clone)]
pub struct ReductionStep {
    pub source: String,
    pub multiplier: Polynomial,
}

/// The full record of how one flag-variety relation became a Chow relation.
#[derive(Debug, Clone)]
pub struct DerivedRelation {
    pub name: String,
    /// The relation with every degree-one class set to zero, before any
    /// reduction.
    pub raw: Polynomial,
    pub steps: Vec<ReductionStep>,
    /// Whether the reduced polynomial was negated to make its leading
    /// coefficient positive.
    pub negated: bool,
    /// The reduced polynomial; zero when the relation died.
    pub reduced: Polynomial,
}

/// A derived Chow presentation together with its replayable reduction log.
#[derive(Debug, Clone)]
pub struct ChowDerivation {
    pub kind: GroupKind,
    pub presentation: GradedZPresentation,
    pub log: Vec<DerivedRelation>,
}

impl ChowDerivation {
    /// Re-verifies every logged reduction as an exact polynomial identity:
    /// `raw - sum(multiplier_k * earlier_k) = (+/-1) * reduced`, with each
    /// `earlier_k` a relation accepted before this one.
    pub fn replay(&self) -> Result<()> {
        let mut accepted: BTreeMap<&str, &Polynomial> = BTreeMap::new();
        for entry in &self.log {
            let mut residue = entry.raw.clone();
            for step in &entry.steps {
                let earlier = accepted.get(step.source.as_str()).ok_or_else(|| {
                    Error::Verification(format!(
                        "step of {} uses {} before it was derived",
                        entry.name, step.source
                    ))
                })?;
                residue = residue.sub_ref(&step.multiplier.mul_ref(earlier));
            }
            let expected = if entry.negated {
                entry.reduced.scale_int(-1)
            } else {
                entry.reduced.clone()
            };
            if residue != expected {
                return Err(Error::Verification(format!(
                    "replay of {} does not reproduce its reduced form",
                    entry.name
                )));
            }
            if !entry.reduced.is_zero() {
                accepted.insert(&entry.name, &entry.reduced);
            }
        }
        let kept: Vec<&Polynomial> = self
            .log
            .iter()
            .filter(|e| !e.reduced.is_zero())
            .map(|e| &e.reduced)
            .collect();
        if kept.len() != self.presentation.relations.len()
            || kept
                .iter()
                .zip(&self.presentation.relations)
                .any(|(a, b)| **a != b.poly)
        {
            return Err(Error::Verification(
                "derived presentation disagrees with the reduction log".into(),
            ));
        }
        Ok(())
    }
}

/// The generator ring of the Chow quotient: the exceptional generators only.
fn chow_ring(kind: GroupKind) -> Arc<RingSpec> {
    let degrees: &[u32] = match kind {
        GroupKind::E6 => &[3, 4],
        GroupKind::E7 => &[3, 4, 5, 9],
        GroupKind::E8 => &[3, 4, 5, 6, 9, 10, 15],
    };
    RingSpec::new(degrees.iter().map(|d| (format!("g{d}"), *d)))
}

/// Reduces `f` against the accepted relations. Unit-leading relations
/// rewrite any term their leading monomial divides. Pure torsion relations
/// `n * m0` reduce the coefficient of any term divisible by `m0`; a term
/// divisible by several torsion monomials reduces modulo the gcd of their
/// orders, with the subtracted multiples read off a Bezout identity — in
/// particular a term carrying two coprime torsions vanishes outright. Every
/// subtraction is logged. Terminates because rewrites strictly lower the
/// monomial order and coefficient reductions never add monomials.
fn reduce_against(
    f: &Polynomial,
    accepted: &[(String, Polynomial)],
    steps: &mut Vec<ReductionStep>,
) -> Polynomial {
    let ring = f.ring().clone();
    let mut current = f.clone();
    let mut fuel = 100_000u32;
    'outer: loop {
        fuel = fuel.checked_sub(1).expect("reduction fuel exhausted");
        for (name, rel) in accepted {
            let (lead, lc) = rel.leading().expect("accepted relations are nonzero");
            if lc.abs() != Rat::one() {
                continue;
            }
            let hit = current.iter().find_map(|(m, c)| {
                let quot = m.try_div(lead)?;
                Some(monomial_poly(&ring, quot, c / lc))
            });
            if let Some(multiplier) = hit {
                current = current.sub_ref(&multiplier.mul_ref(rel));
                steps.push(ReductionStep {
                    source: name.clone(),
                    multiplier,
                });
                continue 'outer;
            }
        }
        // Torsion pass: for each term, combine every applicable pure
        // torsion relation.
        let torsions: Vec<(&String, &Polynomial, &Monomial, Int, Int)> = accepted
            .iter()
            .filter(|(_, rel)| rel.nterms() == 1)
            .filter_map(|(name, rel)| {
                let (m0, lc) = rel.leading()?;
                let n = lc.to_integer().abs();
                (n > Int::one()).then(|| (name, rel, m0, n, lc.to_integer().signum()))
            })
            .collect();
        let hit = current.iter().find_map(|(m, c)| {
            let applicable: Vec<(usize, Monomial)> = torsions
                .iter()
                .enumerate()
                .filter_map(|(k, (_, _, m0, _, _))| Some((k, m.try_div(m0)?)))
                .collect();
            if applicable.is_empty() {
                return None;
            }
            // Bezout chain: gcd of the applicable orders with coefficients.
            let mut g = torsions[applicable[0].0].3.clone();
            let mut coeffs: Vec<Int> = vec![Int::one()];
            for &(k, _) in &applicable[1..] {
                let e = g.extended_gcd(&torsions[k].3);
                for a in coeffs.iter_mut() {
                    *a *= &e.x;
                }
                coeffs.push(e.y);
                g = e.gcd;
            }
            let value = c.to_integer();
            let residue = value.mod_floor(&g);
            if residue == value {
                return None;
            }
            let q = (value - &residue) / &g;
            Some(
                applicable
                    .into_iter()
                    .zip(coeffs)
                    .map(|((k, quot), a)| {
                        (k, monomial_poly(&ring, quot, Rat::from_integer(&q * a * &torsions[k].4)))
                    })
                    .collect::<Vec<_>>(),
            )
        });
        if let Some(parts) = hit {
            for (k, multiplier) in parts {
                if multiplier.is_zero() {
                    continue;
                }
                current = current.sub_ref(&multiplier.mul_ref(torsions[k].1));
                steps.push(ReductionStep {
                    source: torsions[k].0.clone(),
                    multiplier,
                });
            }
            continue 'outer;
        }
        return current;
    }
}

/// Derives the Chow presentation for one group: substitute zero for every
/// degree-one class in each flag-variety relation, reduce against the
/// relations already derived, and keep what survives with its leading
/// coefficient normalized positive. The returned log replays exactly.
pub fn derive_chow(kind: GroupKind) -> Result<ChowDerivation> {
    let pres = Presentation::new(kind)?;
    let target = chow_ring(kind);
    let images: Vec<Polynomial> = (0..pres.ring.nvars())
        .map(|v| match target.index_of(pres.ring.name(v)) {
            Some(tv) => Polynomial::var(&target, tv),
            None => Polynomial::zero(&target),
        })
        .collect();
    let mut accepted: Vec<(String, Polynomial)> = Vec::new();
    let mut log = Vec::new();
    let mut relations = Vec::new();
    for r in &pres.relations {
        let raw = r.poly.morph(&target, &images);
        let mut steps = Vec::new();
        let reduced = reduce_against(&raw, &accepted, &mut steps);
        let negated = matches!(reduced.leading(), Some((_, c)) if c.is_negative());
        let reduced = if negated {
            reduced.scale_int(-1)
        } else {
            reduced
        };
        if !reduced.is_zero() {
            if !reduced.is_integral() {
                return Err(Error::Verification(format!(
                    "derived relation {} is not integral: {reduced}",
                    r.name
                )));
            }
            accepted.push((r.name.clone(), reduced.clone()));
            relations.push(Relation {
                name: r.name.clone(),
                degree: r.degree,
                poly: reduced.clone(),
            });
        }
        log.push(DerivedRelation {
            name: r.name.clone(),
            raw,
            steps,
            negated,
            reduced,
        });
    }
    Ok(ChowDerivation {
        kind,
        presentation: GradedZPresentation {
            ring: target,
            relations,
        },
        log,
    })
}

/// The canonical simplified presentation the derivation is measured
/// against, with generators written `x{d}`. For the largest group two of
/// its generators differ from the derived ones by the triangular change of
/// variables returned by `canonical_generator_map`.
pub fn canonical_chow(kind: GroupKind) -> GradedZPresentation {
    let (degrees, relations): (&[u32], &[&str]) = match kind {
        GroupKind::E6 => (&[3, 4], &["2*x3", "3*x4", "x3^2", "x4^3"]),
        GroupKind::E7 => (
            &[3, 4, 5, 9],
            &["2*x3", "3*x4", "2*x5", "x3^2", "2*x9", "x5^2", "x4^3", "x9^2"],
        ),
        GroupKind::E8 => (
            &[3, 4, 5, 6, 9, 10, 15],
            &[
                "2*x3", "3*x4", "2*x5", "5*x6", "2*x9", "3*x10", "x4^3", "2*x15", "x9^2",
                "x5^4", "x3^8", "x6^5", "x10^3", "x15^2",
            ],
        ),
    };
    let ring = RingSpec::new(degrees.iter().map(|d| (format!("x{d}"), *d)));
    let relations = relations
        .iter()
        .map(|expr| {
            let poly = Polynomial::parse(&ring, expr).expect("fixed relation parses");
            let degree = poly.degree().expect("nonzero");
            Relation {
                name: format!("deg{degree}:{expr}"),
                degree,
                poly,
            }
        })
        .collect();
    GradedZPresentation { ring, relations }
}

/// The generator map from the canonical presentation into the derived one.
/// It is triangular: every canonical generator maps to the matching derived
/// generator plus terms in generators of strictly smaller degree, so the
/// induced ring map is surjective by construction.
pub fn canonical_generator_map(
    canonical: &GradedZPresentation,
    derived: &GradedZPresentation,
) -> Result<Vec<(String, Polynomial)>> {
    canonical
        .generators()
        .into_iter()
        .map(|(name, degree)| {
            let stem = name
                .strip_prefix('x')
                .ok_or_else(|| Error::Verification(format!("unexpected generator {name}")))?;
            let image = match (canonical.ring.nvars(), stem) {
                (7, "10") => Polynomial::parse(&derived.ring, "-g10 + g5^2")?,
                (7, "15") => {
                    Polynomial::parse(&derived.ring, "g15 + g5*g10 + g3^2*g9 + g3^5")?
                }
                _ => {
                    let tv = derived.ring.index_of(&format!("g{stem}")).ok_or_else(|| {
                        Error::Verification(format!("no derived generator matches {name}"))
                    })?;
                    Polynomial::var(&derived.ring, tv)
                }
            };
            image.check_homogeneous(degree)?;
            Ok((name, image))
        })
        .collect()
}

/// The additive structure of one graded piece: monomial count, lattice rank
/// of the relation slice, invariant factors above one, and dimensions over
/// the three torsion prime fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStructure {
    pub degree: u32,
    pub basis: usize,
    pub rank: usize,
    pub torsion: Vec<Int>,
    /// Dimensions over F_2, F_3, F_5, computed by independent mod-p
    /// elimination rather than from the invariant factors.
    pub dims_mod_p: [usize; 3],
}

impl DegreeStructure {
    /// Free rank of this graded piece.
    pub fn free_rank(&self) -> usize {
        self.basis - self.rank
    }

    /// Dimension over F_p implied by the invariant factors.
    pub fn dim_mod_p_from_torsion(&self, p: u64) -> usize {
        let p = Int::from(p);
        self.free_rank()
            + self
                .torsion
                .iter()
                .filter(|f| (*f % &p).is_zero())
                .count()
    }

    /// Short human-readable form, e.g. `Z`, `Z/2 + Z/3`, `0`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank() > 0 {
            parts.push(if self.free_rank() == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank())
            });
        }
        for f in &self.torsion {
            parts.push(format!("Z/{f}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Computes the graded structure of every degree up to and including `cap`,
/// one Smith normal form per degree, degrees in parallel.
pub fn graded_structure(pres: &GradedZPresentation, cap: u32) -> Vec<DegreeStructure> {
    (0..=cap)
        .into_par_iter()
        .map(|degree| {
            let basis = pres.basis(degree);
            let matrix = pres.relation_matrix(degree, &basis);
            let smith = linalg::smith(&matrix, false);
            let torsion: Vec<Int> = smith
                .diag
                .iter()
                .filter(|d| **d > Int::one())
                .cloned()
                .collect();
            let dims_mod_p = [2u64, 3, 5]
                .map(|p| basis.len() - linalg::rank_mod_p(&matrix, p));
            DegreeStructure {
                degree,
                basis: basis.len(),
                rank: smith.rank,
                torsion,
                dims_mod_p,
            }
        })
        .collect()
}

/// Verifies that `gen_map` presents `a` and `b` as the same graded algebra
/// below the cap: every relation of `a` must land in the relation ideal of
/// `b`, and the graded structures and prime-field dimensions must agree
/// degree by degree. For a triangular generator map these checks pin down an
/// isomorphism in every degree up to the cap, because the graded pieces are
/// finite there.
pub fn verify_isomorphism(
    a: &GradedZPresentation,
    b: &GradedZPresentation,
    gen_map: &[(String, Polynomial)],
    cap: u32,
) -> Result<Vec<CheckOutcome>> {
    let mut images = Vec::with_capacity(a.ring.nvars());
    for i in 0..a.ring.nvars() {
        let name = a.ring.name(i);
        let (_, image) = gen_map
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| Error::Verification(format!("generator map misses {name}")))?;
        image.check_homogeneous(a.ring.weight(i))?;
        images.push(image.clone());
    }
    let mut outcomes = Vec::new();
    for r in &a.relations {
        let start = Instant::now();
        let name = format!("iso:relation:{}", r.name);
        let mut o = if r.degree > cap {
            CheckOutcome::new(name, r.degree, Status::Skipped)
                .with_detail("beyond the structure cap")
        } else {
            let image = r.poly.morph(&b.ring, &images);
            let status = if b.ideal_contains(&image)? {
                Status::Pass
            } else {
                Status::Fail
            };
            CheckOutcome::new(name, r.degree, status)
        };
        o.seconds = start.elapsed().as_secs_f64();
        outcomes.push(o);
    }
    let start = Instant::now();
    let sa = graded_structure(a, cap);
    let sb = graded_structure(b, cap);
    let mismatch: Vec<u32> = sa
        .iter()
        .zip(&sb)
        .filter(|(x, y)| {
            x.free_rank() != y.free_rank() || x.torsion != y.torsion
        })
        .map(|(x, _)| x.degree)
        .collect();
    let mut o = CheckOutcome::new(
        "iso:structure",
        cap,
        if mismatch.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
    )
    .with_detail(if mismatch.is_empty() {
        format!("per-degree structures agree through degree {cap}")
    } else {
        format!("structures disagree in degrees {mismatch:?}")
    });
    o.seconds = start.elapsed().as_secs_f64();
    outcomes.push(o);
    for (slot, p) in [2u64, 3, 5].into_iter().enumerate() {
        let bad: Vec<u32> = sa
            .iter()
            .zip(&sb)
            .filter(|(x, y)| x.dims_mod_p[slot] != y.dims_mod_p[slot])
            .map(|(x, _)| x.degree)
            .collect();
        outcomes.push(
            CheckOutcome::new(
                format!("iso:dims-mod-{p}"),
                cap,
                if bad.is_empty() {
                    Status::Pass
                } else {
                    Status::Fail
                },
            )
            .with_detail(if bad.is_empty() {
                format!("F_{p} dimensions agree through degree {cap}")
            } else {
                format!("F_{p} dimensions disagree in degrees {bad:?}")
            }),
        );
    }
    Ok(outcomes)
}

/// Reduces every coefficient of an integral polynomial to its least
/// non-negative residue mod `p`, dropping what vanishes.
fn poly_mod_p(f: &Polynomial, p: u64) -> Polynomial {
    let p = Int::from(p);
    let mut out = Polynomial::zero(f.ring());
    for (m, c) in f.iter() {
        let r = c.to_integer().mod_floor(&p);
        if !r.is_zero() {
            out.add_term(m.clone(), Rat::from_integer(r));
        }
    }
    out
}

fn inverse_mod_p(a: &Int, p: u64) -> Int {
    let p = Int::from(p);
    let a = a.mod_floor(&p);
    let mut x = Int::one();
    while (&a * &x).mod_floor(&p) != Int::one() {
        x += 1;
        assert!(x < p, "not invertible");
    }
    x
}

/// Report of the mod-p reduction of one Chow presentation.
#[derive(Debug, Clone)]
pub struct ModPReport {
    pub kind: GroupKind,
    pub p: u64,
    /// Generators eliminated by relations with a unit linear term, with the
    /// polynomial each one equals in the survivors.
    pub eliminated: Vec<(String, Polynomial)>,
    /// The truncation normal form: `(generator, degree, exponent)` with the
    /// relation `generator^exponent = 0`.
    pub normal_form: Vec<(String, u32, u32)>,
    /// Relations that did not shake down to a pure generator power.
    pub anomalies: Vec<String>,
    /// The degrees `p^k * d` read off the truncation exponents, sorted.
    pub exceptional_degrees: Vec<u32>,
    /// Degrees of the kernel generators: the basic invariant degrees with
    /// every exceptional degree replaced by its generator degree, sorted.
    pub ip_generator_degrees: Vec<u32>,
    /// Agreement with the stored row, when one exists for `(kind, p)`.
    pub table_match: Option<bool>,
}

/// The stored mod-p rows: `(kind, p, kernel generator degrees, exceptional
/// degrees)`.
pub fn stated_mod_p_rows() -> &'static [(GroupKind, u64, &'static [u32], &'static [u32])] {
    &[
        (GroupKind::E6, 2, &[2, 3, 5, 8, 9, 12], &[6]),
        (GroupKind::E6, 3, &[2, 4, 5, 6, 8, 9], &[12]),
        (GroupKind::E7, 2, &[2, 3, 5, 8, 9, 12, 14], &[6, 10, 18]),
        (GroupKind::E7, 3, &[2, 4, 6, 8, 10, 14, 18], &[12]),
        (GroupKind::E8, 2, &[2, 3, 5, 8, 9, 12, 14, 15], &[18, 20, 24, 30]),
        (GroupKind::E8, 3, &[2, 4, 8, 10, 14, 18, 20, 24], &[12, 30]),
        (GroupKind::E8, 5, &[2, 6, 8, 12, 14, 18, 20, 24], &[30]),
    ]
}

/// Reduces the derived Chow presentation mod `p`: eliminates generators
/// carrying a unit linear term, inter-reduces what remains over F_p, and
/// reads off the truncated-polynomial normal form, the p-exceptional
/// degrees, and the kernel generator degrees. The result is compared with
/// the stored row when one exists.
pub fn mod_p_analysis(kind: GroupKind, p: u64) -> Result<ModPReport> {
    let derivation = derive_chow(kind)?;
    let pres = derivation.presentation;
    let ring = pres.ring.clone();
    let mut relations: Vec<Polynomial> = pres
        .relations
        .iter()
        .map(|r| poly_mod_p(&r.poly, p))
        .filter(|f| !f.is_zero())
        .collect();
    let mut eliminated: Vec<(String, Polynomial)> = Vec::new();
    let mut alive: Vec<bool> = vec![true; ring.nvars()];
    let mut fuel = 10_000u32;
    loop {
        fuel = fuel.checked_sub(1).expect("mod-p elimination fuel exhausted");
        // Eliminate a generator that some relation expresses in the others.
        let mut used: Option<(usize, usize, Polynomial)> = None;
        'scan: for (ri, r) in relations.iter().enumerate() {
            for (m, c) in r.iter() {
                let mut vars = m.vars();
                let (Some((g, 1)), None) = (vars.next(), vars.next()) else {
                    continue;
                };
                if !alive[g] {
                    continue;
                }
                let inv = inverse_mod_p(&c.to_integer(), p);
                let rest = r.sub_ref(&monomial_poly(&ring, m.clone(), c.clone()));
                let image = poly_mod_p(&rest.scale(&-Rat::from_integer(inv)), p);
                used = Some((ri, g, image));
                break 'scan;
            }
        }
        if let Some((ri, g, image)) = used {
            relations.remove(ri);
            for r in relations.iter_mut() {
                *r = poly_mod_p(&r.substitute_var(g, &image), p);
            }
            for (_, old) in eliminated.iter_mut() {
                *old = poly_mod_p(&old.substitute_var(g, &image), p);
            }
            eliminated.push((ring.name(g).to_string(), image));
            alive[g] = false;
            relations.retain(|f| !f.is_zero());
            continue;
        }
        // Inter-reduce over the field: rewrite any term divisible by the
        // leading monomial of another relation.
        let mut changed = false;
        'reduce: for i in 0..relations.len() {
            for j in 0..relations.len() {
                if i == j {
                    continue;
                }
                let (lead, lc) = {
                    let (m, c) = relations[j].leading().expect("nonzero");
                    (m.clone(), c.clone())
                };
                let hit = relations[i].iter().find_map(|(m, c)| {
                    let quot = m.try_div(&lead)?;
                    let scale = Rat::from_integer(
                        (c.to_integer() * inverse_mod_p(&lc.to_integer(), p))
                            .mod_floor(&Int::from(p)),
                    );
                    Some(monomial_poly(&ring, quot, scale))
                });
                if let Some(multiplier) = hit {
                    let rj = relations[j].clone();
                    relations[i] =
                        poly_mod_p(&relations[i].sub_ref(&multiplier.mul_ref(&rj)), p);
                    changed = true;
                    break 'reduce;
                }
            }
        }
        relations.retain(|f| !f.is_zero());
        if !changed {
            break;
        }
    }
    let mut normal_form: Vec<(String, u32, u32)> = Vec::new();
    let mut anomalies: Vec<String> = Vec::new();
    for r in &relations {
        let pure = (r.nterms() == 1)
            .then(|| r.leading())
            .flatten()
            .and_then(|(m, _)| {
                let mut vars = m.vars();
                match (vars.next(), vars.next()) {
                    (Some((g, e)), None) => Some((g, e)),
                    _ => None,
                }
            });
        match pure {
            Some((g, e)) => normal_form.push((
                ring.name(g).to_string(),
                ring.weight(g),
                u32::from(e),
            )),
            None => anomalies.push(format!("relation did not normalize: {r}")),
        }
    }
    normal_form.sort_by_key(|&(_, d, _)| d);
    // Survivors without a truncation relation would make the algebra
    // infinite; flag them.
    for g in 0..ring.nvars() {
        if alive[g] && !normal_form.iter().any(|(n, _, _)| n == ring.name(g)) {
            anomalies.push(format!("generator {} has no truncation", ring.name(g)));
        }
    }
    let mut exceptional: Vec<u32> = Vec::new();
    for &(_, d, e) in &normal_form {
        let mut k = 0u32;
        let mut m = e;
        while m % u32::try_from(p).expect("small prime") == 0 {
            m /= u32::try_from(p).expect("small prime");
            k += 1;
        }
        if m != 1 || k == 0 {
            anomalies.push(format!(
                "truncation exponent {e} in degree {d} is not a positive power of {p}"
            ));
            continue;
        }
        exceptional.push(e * d);
    }
    exceptional.sort_unstable();
    let basic = crate::invariants::basic_degrees(kind);
    let mut ip: Vec<u32> = basic.to_vec();
    for &(ref _name, d, e) in &normal_form {
        let ex = e * d;
        match ip.iter().position(|&b| b == ex) {
            Some(i) => ip[i] = d,
            None => anomalies.push(format!(
                "exceptional degree {ex} is not a basic invariant degree"
            )),
        }
    }
    ip.sort_unstable();
    let table_match = stated_mod_p_rows()
        .iter()
        .find(|&&(k, q, _, _)| k == kind && q == p)
        .map(|&(_, _, ip_row, ex_row)| ip == ip_row && exceptional == ex_row);
    Ok(ModPReport {
        kind,
        p,
        eliminated,
        normal_form,
        anomalies,
        exceptional_degrees: exceptional,
        ip_generator_degrees: ip,
        table_match,
    })
}

/// Per-degree F_p dimensions of a truncated polynomial algebra
/// `F_p[X_{d_1},..]/(X_{d_1}^{m_1},..)`, by expanding the product of the
/// truncated geometric series.
pub fn normal_form_dims(normal_form: &[(String, u32, u32)], cap: u32) -> Vec<usize> {
    let mut dims = vec![0usize; cap as usize + 1];
    dims[0] = 1;
    for &(_, d, m) in normal_form {
        let mut next = vec![0usize; cap as usize + 1];
        for (deg, &count) in dims.iter().enumerate() {
            if count == 0 {
                continue;
            }
            for e in 0..m {
                let total = deg + (e * d) as usize;
                if total <= cap as usize {
                    next[total] += count;
                }
            }
        }
        dims = next;
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;

    fn normalized(p: &Polynomial) -> Polynomial {
        match p.leading() {
            Some((_, c)) if c.is_negative() => p.scale_int(-1),
            _ => p.clone(),
        }
    }

    fn assert_relations(kind: GroupKind, expected: &[&str]) {
        let derivation = derive_chow(kind).unwrap();
        derivation.replay().unwrap();
        let pres = &derivation.presentation;
        assert_eq!(
            pres.relations.len(),
            expected.len(),
            "relation count for {}: got {:?}",
            kind.name(),
            pres.relations
                .iter()
                .map(|r| format!("{}: {}", r.name, r.poly))
                .collect::<Vec<_>>()
        );
        for (r, want) in pres.relations.iter().zip(expected) {
            let want = normalized(&Polynomial::parse(&pres.ring, want).unwrap());
            assert_eq!(r.poly, want, "{}: {}", kind.name(), r.name);
        }
    }

    #[test]
    fn e6_derivation_matches_stated_quotient() {
        assert_relations(GroupKind::E6, &["2*g3", "3*g4", "g3^2", "g4^3"]);
    }

    #[test]
    fn e7_derivation_matches_stated_quotient() {
        assert_relations(
            GroupKind::E7,
            &[
                "2*g3", "3*g4", "2*g5", "g3^2", "2*g9", "g5^2", "g4^3", "g9^2",
            ],
        );
    }

    #[test]
    fn e8_derivation_matches_stated_quotient() {
        assert_relations(
            GroupKind::E8,
            &[
                "2*g3",
                "3*g4",
                "2*g5",
                "5*g6",
                "2*g9",
                "g5^2 - 3*g10",
                "g4^3",
                "2*g15",
                "g9^2",
                "3*g10^2",
                "g3^8",
                "g15^2 + g10^3 + 2*g6^5",
            ],
        );
    }

    #[test]
    fn e6_graded_structure_low_degrees() {
        let pres = derive_chow(GroupKind::E6).unwrap().presentation;
        let gs = graded_structure(&pres, 24);
        assert_eq!(gs[0].describe(), "Z");
        assert_eq!(gs[3].describe(), "Z/2");
        assert_eq!(gs[4].describe(), "Z/3");
        assert_eq!(gs[7].describe(), "0");
        assert_eq!(gs[8].describe(), "Z/3");
        for d in 1..=24u32 {
            assert_eq!(gs[d as usize].free_rank(), 0, "degree {d}");
        }
        // The only degrees with anything left are 0, 3, 4, 8.
        for (d, s) in gs.iter().enumerate() {
            let expect_nonzero = matches!(d, 0 | 3 | 4 | 8);
            assert_eq!(
                s.basis > s.rank || !s.torsion.is_empty(),
                expect_nonzero,
                "degree {d}: {}",
                s.describe()
            );
        }
    }

    #[test]
    fn structure_dims_match_torsion_dims() {
        for kind in GroupKind::all() {
            let pres = derive_chow(kind).unwrap().presentation;
            for s in graded_structure(&pres, 20) {
                for (slot, p) in [2u64, 3, 5].into_iter().enumerate() {
                    assert_eq!(
                        s.dims_mod_p[slot],
                        s.dim_mod_p_from_torsion(p),
                        "{} degree {} mod {}",
                        kind.name(),
                        s.degree,
                        p
                    );
                }
            }
        }
    }

    #[test]
    fn coprime_torsion_kills_mixed_monomials() {
        for kind in [GroupKind::E6, GroupKind::E7] {
            let pres = derive_chow(kind).unwrap().presentation;
            let orders: Vec<Option<Int>> =
                (0..pres.ring.nvars()).map(|v| pres.torsion_order(v)).collect();
            for degree in 1..=24u32 {
                for m in pres.basis(degree) {
                    let present: Vec<Int> = m
                        .vars()
                        .filter_map(|(v, _)| orders[v].clone())
                        .collect();
                    let coprime = present
                        .iter()
                        .enumerate()
                        .any(|(i, a)| present[..i].iter().any(|b| a.gcd(b) == Int::one()));
                    if !coprime {
                        continue;
                    }
                    let class = monomial_poly(&pres.ring, m.clone(), Rat::one());
                    assert!(
                        pres.ideal_contains(&class).unwrap(),
                        "{} degree {degree} monomial should die",
                        kind.name()
                    );
                }
            }
        }
    }

    #[test]
    fn e6_isomorphism_to_canonical_form() {
        let derived = derive_chow(GroupKind::E6).unwrap().presentation;
        let canonical = canonical_chow(GroupKind::E6);
        let map = canonical_generator_map(&canonical, &derived).unwrap();
        let outcomes = verify_isomorphism(&canonical, &derived, &map, 24).unwrap();
        for o in &outcomes {
            assert_eq!(o.status, Status::Pass, "{}: {:?}", o.name, o.detail);
        }
    }

    #[test]
    fn e7_isomorphism_to_canonical_form() {
        let derived = derive_chow(GroupKind::E7).unwrap().presentation;
        let canonical = canonical_chow(GroupKind::E7);
        let map = canonical_generator_map(&canonical, &derived).unwrap();
        let outcomes = verify_isomorphism(&canonical, &derived, &map, 40).unwrap();
        for o in &outcomes {
            assert_eq!(o.status, Status::Pass, "{}: {:?}", o.name, o.detail);
        }
    }

    #[test]
    fn e8_isomorphism_to_canonical_form() {
        let derived = derive_chow(GroupKind::E8).unwrap().presentation;
        let canonical = canonical_chow(GroupKind::E8);
        let map = canonical_generator_map(&canonical, &derived).unwrap();
        let outcomes = verify_isomorphism(&canonical, &derived, &map, 30).unwrap();
        for o in &outcomes {
            assert_eq!(o.status, Status::Pass, "{}: {:?}", o.name, o.detail);
        }
    }

    #[test]
    fn mod_p_rows_match_stored_table() {
        for &(kind, p, _, _) in stated_mod_p_rows() {
            let report = mod_p_analysis(kind, p).unwrap();
            assert!(report.anomalies.is_empty(), "{:?}", report.anomalies);
            assert_eq!(
                report.table_match,
                Some(true),
                "{} mod {}: ip {:?}, exceptional {:?}",
                kind.name(),
                p,
                report.ip_generator_degrees,
                report.exceptional_degrees
            );
        }
    }

    #[test]
    fn e8_mod_2_normal_form() {
        let report = mod_p_analysis(GroupKind::E8, 2).unwrap();
        let shape: Vec<(u32, u32)> = report
            .normal_form
            .iter()
            .map(|&(_, d, m)| (d, m))
            .collect();
        assert_eq!(shape, vec![(3, 8), (5, 4), (9, 2), (15, 2)]);
    }

    #[test]
    fn non_torsion_prime_gives_trivial_algebra() {
        let report = mod_p_analysis(GroupKind::E6, 5).unwrap();
        assert!(report.normal_form.is_empty());
        assert!(report.exceptional_degrees.is_empty());
        assert!(report.anomalies.is_empty());
        assert_eq!(report.eliminated.len(), 2);
    }

    #[test]
    fn poincare_series_agrees_with_elimination() {
        let cap = 30u32;
        for &(kind, p, _, _) in stated_mod_p_rows() {
            let report = mod_p_analysis(kind, p).unwrap();
            let from_form = normal_form_dims(&report.normal_form, cap);
            let pres = derive_chow(kind).unwrap().presentation;
            let slot = match p {
                2 => 0,
                3 => 1,
                _ => 2,
            };
            for s in graded_structure(&pres, cap) {
                assert_eq!(
                    s.dims_mod_p[slot],
                    from_form[s.degree as usize],
                    "{} mod {} degree {}",
                    kind.name(),
                    p,
                    s.degree
                );
            }
        }
    }
}
