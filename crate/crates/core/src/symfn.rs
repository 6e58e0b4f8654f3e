//! Elementary symmetric polynomials, Newton's identities, and rewriting of
//! symmetric polynomials in elementary coordinates.

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, RingSpec};
use crate::Rat;
use num_traits::One;
use std::collections::HashMap;
use std::sync::Arc;

/// All elementary symmetric polynomials `e_1 .. e_m` of the given values,
/// computed by one pass of the product recurrence.
pub fn elementary_of(values: &[Polynomial]) -> Vec<Polynomial> {
    // es[k-1] holds e_k of the values processed so far; adding x updates
    // e_k to e_k + x * e_(k-1), with e_0 = 1.
    let mut es: Vec<Polynomial> = Vec::with_capacity(values.len());
    for x in values {
        let mut next: Vec<Polynomial> = Vec::with_capacity(es.len() + 1);
        for k in 0..=es.len() {
            let mut e = if k == 0 {
                x.clone()
            } else {
                es[k - 1].mul_ref(x)
            };
            if k < es.len() {
                e = e.add_ref(&es[k]);
            }
            next.push(e);
        }
        es = next;
    }
    es
}

/// All elementary symmetric polynomials `e_1 .. e_m` of the given variables.
pub fn elementary_all(ring: &Arc<RingSpec>, vars: &[usize]) -> Vec<Polynomial> {
    let values: Vec<Polynomial> = vars.iter().map(|&v| Polynomial::var(ring, v)).collect();
    elementary_of(&values)
}

/// The `k`-th elementary symmetric polynomial of the given variables
/// (`k >= 1`).
pub fn elementary(ring: &Arc<RingSpec>, vars: &[usize], k: usize) -> Polynomial {
    assert!(k >= 1 && k <= vars.len());
    elementary_all(ring, vars).swap_remove(k - 1)
}

/// Power sums `s_1 .. s_upto` in terms of given values of the elementary
/// symmetric functions, via Newton's identities
/// `s_n = sum_(i=1..n-1) (-1)^(i-1) e_i s_(n-i) + (-1)^(n-1) n e_n`,
/// with `e_i = 0` beyond the supplied list.
pub fn newton_power_sums(elementaries: &[Polynomial], upto: usize) -> Vec<Polynomial> {
    assert!(!elementaries.is_empty());
    let ring = elementaries[0].ring().clone();
    let zero = Polynomial::zero(&ring);
    let e = |i: usize| -> &Polynomial {
        if i >= 1 && i <= elementaries.len() {
            &elementaries[i - 1]
        } else {
            &zero
        }
    };
    let mut s: Vec<Polynomial> = Vec::with_capacity(upto);
    for n in 1..=upto {
        let mut acc = Polynomial::zero(&ring);
        for i in 1..n {
            let term = e(i).mul_ref(&s[n - i - 1]);
            acc = if i % 2 == 1 {
                acc.add_ref(&term)
            } else {
                acc.sub_ref(&term)
            };
        }
        let last = e(n).scale_int(n as i64);
        acc = if n % 2 == 1 {
            acc.add_ref(&last)
        } else {
            acc.sub_ref(&last)
        };
        s.push(acc);
    }
    s
}

/// Rewrites a polynomial symmetric in `sym_vars` as a polynomial in the
/// elementary symmetric functions of those variables.
///
/// `e_images[k-1]` is the target-ring image of `e_k(sym_vars)`, and
/// `passthrough` gives the target image of every other source variable that
/// occurs in `f`. Fails when `f` is not symmetric in `sym_vars`.
///
/// Classical leading-term elimination: the lexicographic leading exponent of
/// a symmetric polynomial is a partition, and subtracting the matching
/// product of elementaries strictly lowers it.
pub fn symmetrize(
    f: &Polynomial,
    sym_vars: &[usize],
    target: &Arc<RingSpec>,
    e_images: &[Polynomial],
    passthrough: &[(usize, Polynomial)],
) -> Result<Polynomial> {
    let ring = f.ring().clone();
    assert_eq!(e_images.len(), sym_vars.len());
    let source_es = elementary_all(&ring, sym_vars);
    let pass: HashMap<usize, &Polynomial> =
        passthrough.iter().map(|(v, p)| (*v, p)).collect();

    let lex_key = |m: &Monomial| -> Vec<u16> { sym_vars.iter().map(|&v| m.exp(v)).collect() };

    let mut residue = f.clone();
    let mut out = Polynomial::zero(target);
    let mut source_pow: HashMap<(usize, u16), Polynomial> = HashMap::new();
    let mut target_pow: HashMap<(usize, u16), Polynomial> = HashMap::new();
    let power = |cache: &mut HashMap<(usize, u16), Polynomial>,
                     base: &Polynomial,
                     k: usize,
                     e: u16|
     -> Polynomial {
        if e == 1 {
            return base.clone();
        }
        cache
            .entry((k, e))
            .or_insert_with(|| base.pow(u32::from(e)))
            .clone()
    };

    while !residue.is_zero() {
        // Lexicographic leading term over the symmetric variables.
        let (m, c) = residue
            .iter()
            .max_by(|(a, _), (b, _)| lex_key(a).cmp(&lex_key(b)).then_with(|| a.cmp(b)))
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero polynomial has terms");
        let lambda = lex_key(&m);
        for w in lambda.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Verification(format!(
                    "not symmetric in the designated variables: \
                     leading exponent {lambda:?} is not a partition"
                )));
            }
        }

        // Exponent of e_k is lambda_k - lambda_(k+1).
        let mut src = Polynomial::constant(&ring, c.clone());
        let mut dst = Polynomial::constant(target, c);
        for k in 0..lambda.len() {
            let e = lambda[k] - lambda.get(k + 1).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            src = src.mul_ref(&power(&mut source_pow, &source_es[k], k, e));
            dst = dst.mul_ref(&power(&mut target_pow, &e_images[k], k, e));
        }
        for (v, e) in m.vars() {
            if sym_vars.contains(&v) {
                continue;
            }
            let img = pass.get(&v).ok_or_else(|| {
                Error::Verification(format!(
                    "no image for source variable {}",
                    ring.name(v)
                ))
            })?;
            src = src.mul_term(&Monomial::var(&ring, v).pow(e), &Rat::one());
            dst = dst.mul_ref(&img.pow(u32::from(e)));
        }
        residue = residue.sub_ref(&src);
        out = out.add_ref(&dst);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tring() -> Arc<RingSpec> {
        RingSpec::uniform(["t1", "t2", "t3", "t"])
    }

    #[test]
    fn elementary_matches_expansion() {
        let r = tring();
        let es = elementary_all(&r, &[0, 1, 2]);
        assert_eq!(es.len(), 3);
        assert_eq!(es[0], Polynomial::parse(&r, "t1 + t2 + t3").unwrap());
        assert_eq!(
            es[1],
            Polynomial::parse(&r, "t1*t2 + t1*t3 + t2*t3").unwrap()
        );
        assert_eq!(es[2], Polynomial::parse(&r, "t1*t2*t3").unwrap());
    }

    #[test]
    fn elementary_of_forms() {
        let r = tring();
        let xs = vec![
            Polynomial::parse(&r, "t1 + t").unwrap(),
            Polynomial::parse(&r, "t2 - t").unwrap(),
        ];
        let es = elementary_of(&xs);
        assert_eq!(es[0], Polynomial::parse(&r, "t1 + t2").unwrap());
        assert_eq!(es[1], Polynomial::parse(&r, "(t1 + t)*(t2 - t)").unwrap());
    }

    #[test]
    fn newton_small_cases() {
        let r = tring();
        let es = elementary_all(&r, &[0, 1, 2]);
        let s = newton_power_sums(&es, 4);
        for (n, sn) in s.iter().enumerate() {
            let direct = Polynomial::parse(
                &r,
                &format!("t1^{k} + t2^{k} + t3^{k}", k = n + 1),
            )
            .unwrap();
            assert_eq!(*sn, direct, "power sum {}", n + 1);
        }
    }

    #[test]
    fn newton_truncates_missing_elementaries() {
        // Two variables, power sums up to 4: e_3, e_4 are absent.
        let r = RingSpec::uniform(["x", "y"]);
        let es = elementary_all(&r, &[0, 1]);
        let s = newton_power_sums(&es, 4);
        assert_eq!(s[3], Polynomial::parse(&r, "x^4 + y^4").unwrap());
    }

    #[test]
    fn symmetrize_power_sum_with_passthrough() {
        let r = tring();
        let target = RingSpec::new([("t", 1), ("c1", 1), ("c2", 2), ("c3", 3)]);
        let e_images = vec![
            Polynomial::var(&target, 1),
            Polynomial::var(&target, 2),
            Polynomial::var(&target, 3),
        ];
        let pass = vec![(3, Polynomial::var(&target, 0))];
        // t * (t1^2 + t2^2 + t3^2)  ->  t * (c1^2 - 2 c2)
        let f = Polynomial::parse(&r, "t*(t1^2 + t2^2 + t3^2)").unwrap();
        let got = symmetrize(&f, &[0, 1, 2], &target, &e_images, &pass).unwrap();
        assert_eq!(got, Polynomial::parse(&target, "t*(c1^2 - 2*c2)").unwrap());
    }

    #[test]
    fn symmetrize_rejects_asymmetric() {
        let r = tring();
        let target = RingSpec::new([("t", 1), ("c1", 1), ("c2", 2), ("c3", 3)]);
        let e_images = vec![
            Polynomial::var(&target, 1),
            Polynomial::var(&target, 2),
            Polynomial::var(&target, 3),
        ];
        let f = Polynomial::parse(&r, "t1^2 + t2^2").unwrap();
        assert!(symmetrize(&f, &[0, 1, 2], &target, &e_images, &[]).is_err());
    }

    #[test]
    fn symmetrize_roundtrip_via_morph() {
        // Rewriting in elementaries and then substituting the elementaries
        // back recovers the original.
        let r = tring();
        let target = RingSpec::new([("t", 1), ("c1", 1), ("c2", 2), ("c3", 3)]);
        let e_images: Vec<_> = (1..=3).map(|i| Polynomial::var(&target, i)).collect();
        let pass = vec![(3, Polynomial::var(&target, 0))];
        let f = Polynomial::parse(&r, "(t1 + t2 + t3)^3 - 5*t*t1*t2*t3 + t^3").unwrap();
        let sym = symmetrize(&f, &[0, 1, 2], &target, &e_images, &pass).unwrap();
        let es = elementary_all(&r, &[0, 1, 2]);
        let images = vec![
            Polynomial::var(&r, 3),
            es[0].clone(),
            es[1].clone(),
            es[2].clone(),
        ];
        assert_eq!(sym.morph(&r, &images), f);
    }
}
