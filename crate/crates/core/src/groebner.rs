//! Gröbner bases over the rationals in the weighted-grevlex term order.
//!
//! Plain Buchberger with the coprime-leading-term criterion, full normal
//! forms, and final inter-reduction. A degree bound truncates the pair queue:
//! for homogeneous input a basis truncated at degree `d` still decides ideal
//! membership for polynomials of degree at most `d`, because every reduction
//! step stays within the degree of the element being reduced.

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::Rat;
use num_traits::One;
use std::collections::BinaryHeap;

/// Fully reduces `f` against `basis`: no term of the result is divisible by
/// any leading monomial of the basis.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut rem = f.clone();
    let mut out = Polynomial::zero(&ring);
    'outer: while !rem.is_zero() {
        let (lm, lc) = {
            let (m, c) = rem.leading().expect("nonzero");
            (m.clone(), c.clone())
        };
        for g in basis {
            let (glm, glc) = g.leading().expect("basis elements are nonzero");
            if let Some(q) = lm.try_div(glm) {
                let scale = &lc / glc;
                rem = rem.sub_ref(&g.mul_term(&q, &scale));
                continue 'outer;
            }
        }
        out.add_term(lm.clone(), lc.clone());
        rem.add_term(lm, -lc);
    }
    out
}

/// The S-polynomial of `f` and `g`.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring().clone();
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let lcm = fm.lcm(gm, &ring);
    let qf = lcm.try_div(fm).expect("lcm divisible");
    let qg = lcm.try_div(gm).expect("lcm divisible");
    f.mul_term(&qf, &(Rat::one() / fc))
        .sub_ref(&g.mul_term(&qg, &(Rat::one() / gc)))
}

struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.lcm == other.lcm && self.i == other.i && self.j == other.j
    }
}
impl Eq for Pair {}
impl Ord for Pair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // BinaryHeap is a max-heap; invert so the smallest lcm pops first
        // (normal selection strategy).
        other
            .lcm
            .cmp(&self.lcm)
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A reduced Gröbner basis, optionally truncated at a weighted degree.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    gens: Vec<Polynomial>,
    degree_bound: Option<u32>,
}

impl GroebnerBasis {
    /// Runs Buchberger's algorithm on the generators. With a degree bound,
    /// pairs whose lcm exceeds the bound are discarded; membership queries
    /// are then valid only up to that degree.
    pub fn new(gens: &[Polynomial], degree_bound: Option<u32>) -> Self {
        let mut basis: Vec<Polynomial> = Vec::new();
        let mut pairs: BinaryHeap<Pair> = BinaryHeap::new();
        let add = |basis: &mut Vec<Polynomial>, pairs: &mut BinaryHeap<Pair>, f: Polynomial| {
            let (fm, fc) = f.leading().expect("nonzero");
            let monic = if fc.is_one() {
                f.clone()
            } else {
                f.scale(&(Rat::one() / fc))
            };
            let fm = fm.clone();
            for (i, g) in basis.iter().enumerate() {
                let gm = g.leading().expect("nonzero").0;
                // Coprime leading terms reduce to zero; skip the pair.
                if fm.coprime(gm) {
                    continue;
                }
                let lcm = fm.lcm(gm, f.ring());
                if degree_bound.is_some_and(|d| lcm.wdeg() > d) {
                    continue;
                }
                pairs.push(Pair {
                    lcm,
                    i,
                    j: basis.len(),
                });
            }
            basis.push(monic);
        };
        for g in gens {
            let nf = normal_form(g, &basis);
            if !nf.is_zero() {
                add(&mut basis, &mut pairs, nf);
            }
        }
        while let Some(pair) = pairs.pop() {
            let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
            let nf = normal_form(&s, &basis);
            if !nf.is_zero() {
                add(&mut basis, &mut pairs, nf);
            }
        }
        // Inter-reduce: every element fully reduced against the others.
        loop {
            let mut changed = false;
            let mut next: Vec<Polynomial> = Vec::new();
            for i in 0..basis.len() {
                let others: Vec<Polynomial> = basis
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                let nf = normal_form(&basis[i], &others);
                if nf != basis[i] {
                    changed = true;
                }
                if !nf.is_zero() {
                    let lc = nf.leading().expect("nonzero").1.clone();
                    next.push(nf.scale(&(Rat::one() / lc)));
                }
            }
            next.sort_by(|a, b| a.leading().expect("nonzero").0.cmp(b.leading().expect("nonzero").0));
            next.dedup();
            let done = !changed && next.len() == basis.len();
            basis = next;
            if done {
                break;
            }
        }
        GroebnerBasis {
            gens: basis,
            degree_bound,
        }
    }

    /// The reduced basis elements, sorted by leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Fully reduces `f` against the basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.gens)
    }

    /// Ideal membership. Errors when the query degree exceeds a truncation
    /// bound, since the basis could not decide it.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if let (Some(bound), Some(deg)) = (self.degree_bound, f.degree()) {
            if deg > bound {
                return Err(Error::CapExceeded {
                    what: "ideal membership above basis truncation degree".to_string(),
                    needed: u64::from(deg),
                    cap: u64::from(bound),
                });
            }
        }
        Ok(self.reduce(f).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RingSpec;

    fn parse(ring: &std::sync::Arc<RingSpec>, s: &str) -> Polynomial {
        Polynomial::parse(ring, s).unwrap()
    }

    #[test]
    fn linear_ideal_collapses() {
        let r = RingSpec::uniform(["x", "y"]);
        let gb = GroebnerBasis::new(&[parse(&r, "x + y"), parse(&r, "x - y")], None);
        let lms: Vec<String> = gb
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(lms, vec!["y", "x"]);
        assert!(gb.contains(&parse(&r, "x^3 - 7*x*y")).unwrap());
        assert!(!gb.contains(&parse(&r, "x + 1")).unwrap());
    }

    #[test]
    fn twisted_cubic_basis() {
        // In grevlex the ideal (x^2 - y, x^3 - z) has the classic basis
        // {x^2 - y, x*y - z, x*z - y^2}.
        let r = RingSpec::uniform(["x", "y", "z"]);
        let gb = GroebnerBasis::new(&[parse(&r, "x^2 - y"), parse(&r, "x^3 - z")], None);
        let got: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(got, vec!["y^2 - x*z", "x*y - z", "x^2 - y"]);
        assert!(gb
            .contains(&parse(&r, "x^4 - 2*x^2*y + y^2"))
            .unwrap());
    }

    #[test]
    fn combinations_reduce_to_zero() {
        let r = RingSpec::new([("t", 1), ("u", 2), ("v", 3)]);
        let g1 = parse(&r, "u - 4*t^2");
        let g2 = parse(&r, "v - 2*t^3");
        let gb = GroebnerBasis::new(&[g1.clone(), g2.clone()], None);
        let f = g1
            .mul_ref(&parse(&r, "v + t*u"))
            .add_ref(&g2.mul_ref(&parse(&r, "u - t^2")));
        assert!(gb.contains(&f).unwrap());
        assert!(!gb.contains(&parse(&r, "u^2 - v*t")).unwrap());
    }

    #[test]
    fn truncated_basis_decides_low_degrees() {
        let r = RingSpec::new([("t", 1), ("u", 2), ("v", 3)]);
        let g1 = parse(&r, "u - 4*t^2");
        let g2 = parse(&r, "v - 2*t^3");
        let full = GroebnerBasis::new(&[g1.clone(), g2.clone()], None);
        let cut = GroebnerBasis::new(&[g1.clone(), g2.clone()], Some(5));
        for s in ["u*v - 8*t^5", "t^2*v - 2*t^5 + u^2 - 16*t^4", "v - 2*t^3"] {
            let f = parse(&r, s);
            assert_eq!(cut.contains(&f).unwrap(), full.contains(&f).unwrap(), "{s}");
        }
        let too_big = parse(&r, "v^2 - 4*t^6");
        assert!(matches!(
            cut.contains(&too_big),
            Err(Error::CapExceeded { .. })
        ));
        assert!(full.contains(&too_big).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let r = RingSpec::uniform(["x", "y", "z"]);
        let gb = GroebnerBasis::new(
            &[parse(&r, "x^2 - y*z"), parse(&r, "y^2 - x*z")],
            None,
        );
        let f = parse(&r, "x^3 + y^3 - 5*x*y*z + z^3");
        let nf = gb.reduce(&f);
        assert_eq!(gb.reduce(&nf), nf);
        let g = parse(&r, "x*y - z^2");
        let sum_nf = gb.reduce(&f.add_ref(&g));
        assert_eq!(sum_nf, nf.add_ref(&gb.reduce(&g)));
    }
}
