//! Monomials as exponent vectors with a cached weighted degree.

use super::RingSpec;
use smallvec::SmallVec;
use std::cmp::Ordering;

type Exps = SmallVec<[u16; 8]>;

/// A monomial: an exponent vector with trailing zeros trimmed, plus the
/// weighted degree cached so ordering needs no ring context.
///
/// The order is weighted-graded reverse lexicographic: higher weighted degree
/// is greater; on equal degree the rightmost differing exponent decides, with
/// the smaller exponent winning. The maximum of a term map is therefore the
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    wdeg: u32,
    exps: Exps,
}

impl Monomial {
    /// The unit monomial.
    pub fn one() -> Self {
        Monomial {
            wdeg: 0,
            exps: Exps::new(),
        }
    }

    /// Builds a monomial from an exponent slice, trimming trailing zeros and
    /// caching the weighted degree.
    pub fn from_exps(ring: &RingSpec, exps: &[u16]) -> Self {
        let mut v: Exps = exps.into();
        while v.last() == Some(&0) {
            v.pop();
        }
        let wdeg = ring.wdeg_of(&v);
        Monomial { wdeg, exps: v }
    }

    /// The monomial of a single variable.
    pub fn var(ring: &RingSpec, i: usize) -> Self {
        assert!(i < ring.nvars());
        let mut exps = Exps::new();
        exps.resize(i + 1, 0);
        exps[i] = 1;
        Monomial {
            wdeg: ring.weight(i),
            exps,
        }
    }

    /// Cached weighted degree.
    pub fn wdeg(&self) -> u32 {
        self.wdeg
    }

    /// Exponent of variable `i` (zero beyond the stored length).
    pub fn exp(&self, i: usize) -> u16 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    /// True for the unit monomial.
    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Iterator over `(variable, exponent)` pairs with nonzero exponent.
    pub fn vars(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    /// Number of stored exponents (an upper bound on the support).
    pub fn stored_len(&self) -> usize {
        self.exps.len()
    }

    /// Raw exponent slice (trailing zeros trimmed).
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    /// Product of two monomials. Weighted degrees add, so no ring is needed.
    pub fn mul(&self, other: &Self) -> Self {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (&self.exps, &other.exps)
        } else {
            (&other.exps, &self.exps)
        };
        let mut exps = long.clone();
        for (i, &e) in short.iter().enumerate() {
            exps[i] += e;
        }
        Monomial {
            wdeg: self.wdeg + other.wdeg,
            exps,
        }
    }

    /// Exact quotient, or `None` when some exponent of `other` exceeds ours.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        if other.exps.len() > self.exps.len() {
            return None;
        }
        let mut exps = self.exps.clone();
        for (i, &e) in other.exps.iter().enumerate() {
            if exps[i] < e {
                return None;
            }
            exps[i] -= e;
        }
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Some(Monomial {
            wdeg: self.wdeg - other.wdeg,
            exps,
        })
    }

    /// Least common multiple; needs the ring to recompute the degree.
    pub fn lcm(&self, other: &Self, ring: &RingSpec) -> Self {
        let n = self.exps.len().max(other.exps.len());
        let mut exps = Exps::new();
        for i in 0..n {
            exps.push(self.exp(i).max(other.exp(i)));
        }
        let wdeg = ring.wdeg_of(&exps);
        Monomial { wdeg, exps }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Self) -> bool {
        let n = self.exps.len().min(other.exps.len());
        (0..n).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Power of this monomial.
    pub fn pow(&self, k: u16) -> Self {
        if k == 0 {
            return Monomial::one();
        }
        let mut exps = self.exps.clone();
        for e in exps.iter_mut() {
            *e *= k;
        }
        Monomial {
            wdeg: self.wdeg * u32::from(k),
            exps,
        }
    }

    /// Copy with the exponent of variable `i` set to zero.
    pub fn without_var(&self, i: usize, ring: &RingSpec) -> Self {
        if self.exp(i) == 0 {
            return self.clone();
        }
        let mut exps = self.exps.clone();
        exps[i] = 0;
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let wdeg = ring.wdeg_of(&exps);
        Monomial { wdeg, exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.wdeg.cmp(&other.wdeg).then_with(|| {
            let n = self.exps.len().max(other.exps.len());
            for i in (0..n).rev() {
                let a = self.exp(i);
                let b = other.exp(i);
                if a != b {
                    // Reverse lexicographic: at the rightmost difference the
                    // smaller exponent belongs to the greater monomial.
                    return b.cmp(&a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> std::sync::Arc<RingSpec> {
        RingSpec::uniform(["x", "y", "z"])
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let r = ring3();
        let a = Monomial::from_exps(&r, &[2, 0, 0]);
        let b = Monomial::from_exps(&r, &[2]);
        assert_eq!(a, b);
        assert_eq!(a.stored_len(), 1);
    }

    #[test]
    fn grevlex_degree_two() {
        let r = ring3();
        let x2 = Monomial::from_exps(&r, &[2, 0, 0]);
        let xy = Monomial::from_exps(&r, &[1, 1, 0]);
        let y2 = Monomial::from_exps(&r, &[0, 2, 0]);
        let xz = Monomial::from_exps(&r, &[1, 0, 1]);
        let yz = Monomial::from_exps(&r, &[0, 1, 1]);
        let z2 = Monomial::from_exps(&r, &[0, 0, 2]);
        let mut v = vec![
            z2.clone(),
            yz.clone(),
            xz.clone(),
            y2.clone(),
            xy.clone(),
            x2.clone(),
        ];
        v.sort();
        assert_eq!(v, vec![z2, yz, xz, y2, xy, x2]);
    }

    #[test]
    fn degree_dominates() {
        let r = ring3();
        let z3 = Monomial::from_exps(&r, &[0, 0, 3]);
        let x2 = Monomial::from_exps(&r, &[2, 0, 0]);
        assert!(z3 > x2);
    }

    #[test]
    fn weighted_degrees() {
        let r = RingSpec::new([("t", 1), ("c2", 2), ("g3", 3)]);
        let m = Monomial::from_exps(&r, &[1, 1, 2]);
        assert_eq!(m.wdeg(), 1 + 2 + 6);
        let t4 = Monomial::from_exps(&r, &[4, 0, 0]);
        let c22 = Monomial::from_exps(&r, &[0, 2, 0]);
        assert_eq!(t4.wdeg(), c22.wdeg());
        // Rightmost difference is at c2; the smaller exponent wins.
        assert!(t4 > c22);
    }

    #[test]
    fn mul_div_roundtrip() {
        let r = ring3();
        let a = Monomial::from_exps(&r, &[2, 1, 0]);
        let b = Monomial::from_exps(&r, &[0, 1, 3]);
        let p = a.mul(&b);
        assert_eq!(p.try_div(&b), Some(a.clone()));
        assert_eq!(p.try_div(&a), Some(b));
        let c = Monomial::from_exps(&r, &[0, 0, 4]);
        assert_eq!(p.try_div(&c), None);
    }

    #[test]
    fn lcm_and_coprime() {
        let r = ring3();
        let a = Monomial::from_exps(&r, &[2, 1, 0]);
        let b = Monomial::from_exps(&r, &[1, 0, 2]);
        let l = a.lcm(&b, &r);
        assert_eq!(l, Monomial::from_exps(&r, &[2, 1, 2]));
        assert!(!a.coprime(&b));
        let c = Monomial::from_exps(&r, &[0, 0, 5]);
        assert!(a.coprime(&c));
    }
}
