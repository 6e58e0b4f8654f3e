//! The sparse polynomial type and its arithmetic.

use super::{LinearForm, Monomial, RingSpec};
use crate::error::{Error, Result};
use crate::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by the monomial order, with no zero
/// coefficients, so iteration order, leading terms and printed form are all
/// canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    /// The unit polynomial.
    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, Rat::one())
    }

    /// A constant polynomial.
    pub fn constant(ring: &Arc<RingSpec>, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// An integer constant polynomial.
    pub fn int(ring: &Arc<RingSpec>, n: i64) -> Self {
        Self::constant(ring, Rat::from(BigInt::from(n)))
    }

    /// The polynomial consisting of variable `i`.
    pub fn var(ring: &Arc<RingSpec>, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring, i), Rat::one());
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Builds a polynomial from monomial/coefficient pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms(
        ring: &Arc<RingSpec>,
        terms: impl IntoIterator<Item = (Monomial, Rat)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// The ring this polynomial lives in.
    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Weighted degree (maximum over terms); `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::wdeg)
    }

    /// Leading term in the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    /// Iterates terms in ascending monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Iterates terms in descending monomial order (leading term first).
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter().rev()
    }

    /// Adds a single term in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &Self) {
        assert_eq!(
            self.ring, other.ring,
            "ring mismatch: {} vs {}",
            self.ring.describe(),
            other.ring.describe()
        );
    }

    /// `self + other`.
    pub fn add_ref(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// `self - other`.
    pub fn sub_ref(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    /// `self * other`.
    pub fn mul_ref(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let (small, large) = if self.nterms() <= other.nterms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(&self.ring);
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Scales by a rational.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Scales by an integer.
    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rat::from(BigInt::from(n)))
    }

    /// Multiplies in place by a single monomial with coefficient.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Checks that every term has weighted degree `expected`.
    pub fn check_homogeneous(&self, expected: u32) -> Result<()> {
        for m in self.terms.keys() {
            if m.wdeg() != expected {
                return Err(Error::NotHomogeneous {
                    expected,
                    found: m.wdeg(),
                    poly: self.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Substitutes polynomial `g` for variable `i`.
    ///
    /// Powers of `g` are built once up to the largest exponent of `i` that
    /// occurs, so the cost is one multiplication per distinct power plus one
    /// per term.
    pub fn substitute_var(&self, i: usize, g: &Self) -> Self {
        self.assert_same_ring(g);
        assert!(i < self.ring.nvars());
        // Group terms by the exponent of variable i.
        let mut by_exp: BTreeMap<u16, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.exp(i);
            let rest = m.without_var(i, &self.ring);
            by_exp
                .entry(k)
                .or_insert_with(|| Self::zero(&self.ring))
                .add_term(rest, c.clone());
        }
        let mut out = Self::zero(&self.ring);
        let mut power = Self::one(&self.ring);
        let mut cur: u16 = 0;
        for (k, f_k) in by_exp {
            while cur < k {
                power = power.mul_ref(g);
                cur += 1;
            }
            out = out.add_ref(&f_k.mul_ref(&power));
        }
        out
    }

    /// Substitutes several variables at once, each by a polynomial in the
    /// same ring. Assignments are applied simultaneously.
    pub fn substitute_many(&self, assign: &BTreeMap<usize, Polynomial>) -> Self {
        for g in assign.values() {
            self.assert_same_ring(g);
        }
        let mut powers: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut factor: Option<Polynomial> = None;
            for (v, e) in m.vars() {
                if assign.contains_key(&v) {
                    let p = self.power_of(&mut powers, assign, v, e);
                    factor = Some(match factor {
                        None => p.clone(),
                        Some(f) => f.mul_ref(&p),
                    });
                } else {
                    kept = kept.mul(&Monomial::var(&self.ring, v).pow(e));
                }
            }
            match factor {
                None => out.add_term(kept, c.clone()),
                Some(f) => out = out.add_ref(&f.mul_term(&kept, c)),
            }
        }
        out
    }

    fn power_of(
        &self,
        powers: &mut HashMap<(usize, u16), Polynomial>,
        assign: &BTreeMap<usize, Polynomial>,
        v: usize,
        e: u16,
    ) -> Polynomial {
        if let Some(p) = powers.get(&(v, e)) {
            return p.clone();
        }
        let p = if e == 1 {
            assign[&v].clone()
        } else {
            let half = self.power_of(powers, assign, v, e / 2);
            let p = half.mul_ref(&half);
            if e % 2 == 1 {
                p.mul_ref(&assign[&v])
            } else {
                p
            }
        };
        powers.insert((v, e), p.clone());
        p
    }

    /// Sets the listed variables to zero.
    pub fn kill_vars(&self, vars: &[usize]) -> Self {
        let mut out = Self::zero(&self.ring);
        'terms: for (m, c) in &self.terms {
            for &v in vars {
                if m.exp(v) > 0 {
                    continue 'terms;
                }
            }
            out.terms.insert(m.clone(), c.clone());
        }
        out
    }

    /// Maps this polynomial into another ring, sending variable `i` to
    /// `images[i]`. Every image must live in the target ring.
    pub fn morph(&self, target: &Arc<RingSpec>, images: &[Polynomial]) -> Self {
        assert_eq!(
            images.len(),
            self.ring.nvars(),
            "need one image per source variable"
        );
        for img in images {
            assert_eq!(
                img.ring, *target,
                "image not in target ring {}",
                target.describe()
            );
        }
        let mut powers: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut pow = |v: usize, e: u16| -> Polynomial {
            fn go(
                powers: &mut HashMap<(usize, u16), Polynomial>,
                images: &[Polynomial],
                v: usize,
                e: u16,
            ) -> Polynomial {
                if e == 1 {
                    return images[v].clone();
                }
                if let Some(p) = powers.get(&(v, e)) {
                    return p.clone();
                }
                let half = go(powers, images, v, e / 2);
                let mut p = half.mul_ref(&half);
                if e % 2 == 1 {
                    p = p.mul_ref(&images[v]);
                }
                powers.insert((v, e), p.clone());
                p
            }
            go(&mut powers, images, v, e)
        };
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(target, c.clone());
            for (v, e) in m.vars() {
                acc = acc.mul_ref(&pow(v, e));
            }
            out = out.add_ref(&acc);
        }
        out
    }

    /// Exact division by a homogeneous linear form.
    ///
    /// Synthetic division on the pivot variable: the variable with the
    /// largest absolute coefficient in `alpha` (smallest index on ties).
    /// Writing `alpha = a*x + beta` and `self = sum f_k x^k`, the quotient
    /// coefficients descend from `q_(d-1) = f_d / a` via
    /// `q_(k-1) = (f_k - beta*q_k) / a`; the remainder `f_0 - beta*q_0`
    /// must vanish.
    pub fn divide_exact_by_linear(&self, alpha: &LinearForm) -> Result<Polynomial> {
        assert_eq!(
            *alpha.ring(),
            self.ring,
            "ring mismatch in exact division"
        );
        let pivot = alpha
            .support()
            .max_by(|(i, a), (j, b)| {
                a.abs()
                    .cmp(&b.abs())
                    .then_with(|| j.cmp(i))
            })
            .map(|(i, _)| i)
            .ok_or_else(|| Error::NotLinear("zero linear form".into()))?;
        let a = alpha.coeff(pivot);
        let beta = alpha.minus_var(pivot).to_polynomial();
        if self.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        // Split into coefficients of powers of the pivot.
        let mut by_exp: BTreeMap<u16, Polynomial> = BTreeMap::new();
        let mut d: u16 = 0;
        for (m, c) in &self.terms {
            let k = m.exp(pivot);
            d = d.max(k);
            by_exp
                .entry(k)
                .or_insert_with(|| Self::zero(&self.ring))
                .add_term(m.without_var(pivot, &self.ring), c.clone());
        }
        let zero = Self::zero(&self.ring);
        let f = |k: u16| by_exp.get(&k).unwrap_or(&zero).clone();
        let mut quotient = Self::zero(&self.ring);
        let mut q_k = f(d).scale(&(Rat::one() / &a));
        let xp = Monomial::var(&self.ring, pivot);
        let mut k = d;
        while k >= 1 {
            quotient = quotient.add_ref(&q_k.mul_term(&xp.pow(k - 1), &Rat::one()));
            if k == 1 {
                break;
            }
            q_k = f(k - 1)
                .sub_ref(&beta.mul_ref(&q_k))
                .scale(&(Rat::one() / &a));
            k -= 1;
        }
        let remainder = f(0).sub_ref(&beta.mul_ref(&q_k));
        if !remainder.is_zero() {
            return Err(Error::NotDivisible {
                divisor: alpha.to_polynomial().to_string(),
                remainder: remainder.to_string(),
            });
        }
        Ok(quotient)
    }

    /// The content: `gcd(numerators) / lcm(denominators)`, with the sign of
    /// the leading coefficient. Zero for the zero polynomial.
    pub fn content(&self) -> Rat {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rat::zero();
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        content
    }

    /// Splits into `(content, primitive)` with `self = content * primitive`;
    /// the primitive part has coprime integer coefficients and positive
    /// leading coefficient.
    pub fn primitive(&self) -> (Rat, Polynomial) {
        let c = self.content();
        if c.is_zero() {
            return (c, self.clone());
        }
        let inv = Rat::one() / &c;
        (c, self.scale(&inv))
    }

    /// Clears denominators: the smallest positive integer multiple of `self`
    /// with integer coefficients, returned with the multiplier.
    pub fn clear_denominators(&self) -> (BigInt, Polynomial) {
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let m = Rat::from(den_lcm.clone());
        (den_lcm, self.scale(&m))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Parses an expression in the given ring. See the module-level parser
    /// for the grammar.
    pub fn parse(ring: &Arc<RingSpec>, input: &str) -> Result<Polynomial> {
        super::parse::parse(ring, input)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_ref(rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.sub_ref(rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_ref(rhs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.iter_desc() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            let mut lead = true;
            if !coeff_is_one {
                write!(f, "{mag}")?;
                lead = false;
            }
            for (v, e) in m.vars() {
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                write!(f, "{}", self.ring.name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<RingSpec> {
        RingSpec::uniform(["x", "y", "z"])
    }

    fn p(r: &Arc<RingSpec>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn display_canonical() {
        let r = ring();
        let f = p(&r, "y + x^2 - 3*x*y + 1/2");
        assert_eq!(f.to_string(), "x^2 - 3*x*y + y + 1/2");
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring();
        let f = p(&r, "x + y");
        let g = p(&r, "x - y");
        assert_eq!(&f * &g, p(&r, "x^2 - y^2"));
        assert_eq!(&f + &g, p(&r, "2*x"));
        assert_eq!(&f - &g, p(&r, "2*y"));
        assert_eq!(f.pow(2), p(&r, "x^2 + 2*x*y + y^2"));
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn substitute_single_var() {
        let r = ring();
        let f = p(&r, "x^2 + x*y + z");
        let g = p(&r, "y - z");
        let got = f.substitute_var(0, &g);
        assert_eq!(got, p(&r, "(y - z)^2 + (y - z)*y + z"));
    }

    #[test]
    fn substitute_many_simultaneous() {
        let r = ring();
        // x -> y and y -> x must swap, not chain.
        let f = p(&r, "x^2*y");
        let mut assign = BTreeMap::new();
        assign.insert(0, p(&r, "y"));
        assign.insert(1, p(&r, "x"));
        assert_eq!(f.substitute_many(&assign), p(&r, "y^2*x"));
    }

    #[test]
    fn kill_vars_drops_terms() {
        let r = ring();
        let f = p(&r, "x^2 + x*y + y^2 + z + 7");
        assert_eq!(f.kill_vars(&[0]), p(&r, "y^2 + z + 7"));
        assert_eq!(f.kill_vars(&[0, 1, 2]), p(&r, "7"));
    }

    #[test]
    fn exact_division_roundtrip() {
        let r = ring();
        let alpha = LinearForm::from_polynomial(&p(&r, "2*x - y - z")).unwrap();
        let f = p(&r, "x^2*y - z^3 + x*y*z");
        let prod = f.mul_ref(&alpha.to_polynomial());
        let q = prod.divide_exact_by_linear(&alpha).unwrap();
        assert_eq!(q, f);
    }

    #[test]
    fn exact_division_detects_remainder() {
        let r = ring();
        let alpha = LinearForm::from_polynomial(&p(&r, "x - y")).unwrap();
        let f = p(&r, "x^2 - y^2 + 1");
        assert!(f.divide_exact_by_linear(&alpha).is_err());
        let g = p(&r, "x^2 - y^2");
        assert_eq!(
            g.divide_exact_by_linear(&alpha).unwrap(),
            p(&r, "x + y")
        );
    }

    #[test]
    fn content_and_primitive() {
        let r = ring();
        let f = p(&r, "6*x^2 - 4*y^2");
        let (c, prim) = f.primitive();
        assert_eq!(c, Rat::from(BigInt::from(2)));
        assert_eq!(prim, p(&r, "3*x^2 - 2*y^2"));
        let g = p(&r, "-x/2 + y/3");
        let (c, prim) = g.primitive();
        // Leading term is the x term (x > y); sign follows it.
        assert_eq!(c, Rat::new(BigInt::from(-1), BigInt::from(6)));
        assert_eq!(prim, p(&r, "3*x - 2*y"));
    }

    #[test]
    fn morph_changes_ring() {
        let src = RingSpec::uniform(["u", "v"]);
        let dst = ring();
        let f = p(&src.clone(), "u^2 - v");
        let images = vec![
            Polynomial::parse(&dst, "x + y").unwrap(),
            Polynomial::parse(&dst, "x*y").unwrap(),
        ];
        let got = f.morph(&dst, &images);
        assert_eq!(got, p(&dst, "x^2 + x*y + y^2"));
    }

    #[test]
    fn homogeneity_guard() {
        let r = RingSpec::new([("t", 1), ("c2", 2)]);
        let f = Polynomial::parse(&r, "c2 - 4*t^2").unwrap();
        assert!(f.check_homogeneous(2).is_ok());
        assert!(f.check_homogeneous(3).is_err());
        let g = Polynomial::parse(&r, "c2 - t").unwrap();
        assert!(g.check_homogeneous(2).is_err());
    }

    #[test]
    fn integrality_and_denominators() {
        let r = ring();
        let f = p(&r, "x/2 + y/3");
        assert!(!f.is_integral());
        let (m, g) = f.clear_denominators();
        assert_eq!(m, BigInt::from(6));
        assert_eq!(g, p(&r, "3*x + 2*y"));
        assert!(g.is_integral());
    }
}
