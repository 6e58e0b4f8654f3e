//! Divided-difference operators and expansion in the Schubert basis.
//!
//! For a simple root `alpha_i` the operator on the weight-coordinate ring is
//! `D_i f = (f - s_i f) / alpha_i`; the composite `D_w` along a reduced word
//! applies the last letter first and is independent of the chosen reduced
//! word. A homogeneous polynomial `f` of degree `d` maps to the cycle class
//! `sum D_w(f) Z_w` over elements of length `d`, and lies in the kernel of
//! that map exactly when every such coefficient vanishes.
//!
//! [`bgg_expand`] computes the expansion by a staged search: stage `k` holds
//! the elements `u` of length `k` with `D_u(f) != 0`, each paired with that
//! polynomial. Children are left multiplications by ascents; one parent
//! suffices because the composite is word-independent, and dropping zero
//! values is complete because a zero at any parent forces a zero at the
//! child. Elements with a right descent fixing `f` are skipped: if
//! `s_j f = f` then any `D_u` ending in `D_j` kills `f`, and the surviving
//! set (no right descent among the stabilizing letters) is closed under the
//! parent relation, so the filtered search misses nothing.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::root::{word_string, GroupKind, Mat8, RootSystem};
use crate::weyl::Element;
use crate::Rat;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

/// Default degree bound for expansions, deep enough for every generator
/// degree of the group while keeping accidental huge inputs out.
pub fn default_degree_cap(kind: GroupKind) -> u32 {
    match kind {
        GroupKind::E6 => 12,
        GroupKind::E7 => 18,
        GroupKind::E8 => 15,
    }
}

/// `D_i f = (f - s_i f) / alpha_i` on the weight-coordinate ring.
pub fn divided_difference_simple(
    rs: &RootSystem,
    i: usize,
    f: &Polynomial,
) -> Result<Polynomial> {
    let reflected = rs.reflect_poly(i, f);
    f.sub_ref(&reflected)
        .divide_exact_by_linear(&rs.alpha_form(i))
}

/// The composite `D_(i1) o D_(i2) o ... o D_(ik)` for a word `[i1, ..., ik]`
/// (0-based letters): the last letter acts first. For a non-reduced word the
/// composite is the zero operator.
pub fn divided_difference(rs: &RootSystem, word: &[u8], f: &Polynomial) -> Result<Polynomial> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        g = divided_difference_simple(rs, usize::from(i), &g)?;
    }
    Ok(g)
}

/// An expansion `sum coeff * Z_word` in the Schubert basis, keyed by the
/// canonical reduced word rendered as a 1-based digit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertExpansion {
    /// Common length of all indexing elements (the input degree).
    pub degree: u32,
    /// Nonzero coefficients only.
    pub terms: BTreeMap<String, Rat>,
}

impl SchubertExpansion {
    /// True when no class has a nonzero coefficient.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The positive rational `g` with `self / g` integral and primitive;
    /// zero for the empty expansion.
    pub fn content(&self) -> Rat {
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num_integer::Integer::gcd(&num, c.numer());
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        Rat::new(num, den).abs()
    }

    /// Renders as `a1*Z(w1) + a2*Z(w2) + ...` sorted by word.
    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (word, coeff) in &self.terms {
            if !out.is_empty() {
                out.push_str(if coeff.is_negative() { " - " } else { " + " });
            } else if coeff.is_negative() {
                out.push('-');
            }
            let a = coeff.abs();
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            out.push_str(&format!("Z({word})"));
        }
        out
    }
}

/// Expands a homogeneous polynomial on weight coordinates in the Schubert
/// basis. Fails with [`Error::CapExceeded`] when the degree exceeds `cap`.
pub fn bgg_expand(rs: &RootSystem, f: &Polynomial, cap: u32) -> Result<SchubertExpansion> {
    assert_eq!(
        f.ring().describe(),
        rs.omega_ring().describe(),
        "expansion input must live on weight coordinates"
    );
    let Some(degree) = f.degree() else {
        return Ok(SchubertExpansion {
            degree: 0,
            terms: BTreeMap::new(),
        });
    };
    f.check_homogeneous(degree)?;
    if degree > cap {
        return Err(Error::CapExceeded {
            what: format!("Schubert expansion degree for {}", rs.kind()),
            needed: u64::from(degree),
            cap: u64::from(cap),
        });
    }
    // Letters whose reflection fixes f; the search stays on elements with no
    // right descent among them.
    let stabilizer: Vec<usize> = (0..rs.rank())
        .filter(|&i| rs.reflect_poly(i, f) == *f)
        .collect();

    struct Node {
        elt: Element,
        poly: Polynomial,
    }
    let mut frontier = vec![Node {
        elt: Element::identity(),
        poly: f.clone(),
    }];
    for _ in 0..degree {
        let mut seen: HashMap<Mat8, ()> = HashMap::new();
        let mut candidates: Vec<(Element, usize, usize)> = Vec::new();
        for (parent, node) in frontier.iter().enumerate() {
            for i in 0..rs.rank() {
                if !node.elt.left_ascent(rs, i) {
                    continue;
                }
                let child = node.elt.mul_simple_left(rs, i);
                if !stabilizer.iter().all(|&j| child.right_ascent(rs, j)) {
                    continue;
                }
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(*child.matrix())
                {
                    e.insert(());
                    candidates.push((child, parent, i));
                }
            }
        }
        let polys: Vec<Polynomial> = candidates
            .par_iter()
            .map(|&(_, parent, i)| divided_difference_simple(rs, i, &frontier[parent].poly))
            .collect::<Result<_>>()?;
        frontier = candidates
            .into_iter()
            .zip(polys)
            .filter(|(_, p)| !p.is_zero())
            .map(|((elt, _, _), poly)| Node { elt, poly })
            .collect();
        log::debug!(
            "bgg {} degree {}: frontier {} elements",
            rs.kind(),
            degree,
            frontier.len()
        );
        if frontier.is_empty() {
            break;
        }
    }
    let mut terms = BTreeMap::new();
    for node in frontier {
        debug_assert_eq!(node.poly.degree(), Some(0));
        let word = word_string(&node.elt.canonical_word(rs));
        terms.insert(word, node.poly.constant_term());
    }
    Ok(SchubertExpansion { degree, terms })
}

/// True when the homogeneous polynomial maps to zero, i.e. all length-`deg`
/// divided differences vanish.
pub fn kernel_test(rs: &RootSystem, f: &Polynomial, cap: u32) -> Result<bool> {
    Ok(bgg_expand(rs, f, cap)?.is_zero())
}

/// Expansion cache file layout version.
const EXPANSION_CACHE_VERSION: u32 = 1;

/// 64-bit FNV-1a over a byte string, used to key cache files by input.
pub(crate) fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[derive(serde::Serialize, serde::Deserialize)]
struct CachedExpansion {
    format_version: u32,
    kind: String,
    degree: u32,
    input_hash: String,
    terms: Vec<(String, String)>,
}

/// Like [`bgg_expand`], but stores the result under `cache_dir` keyed by the
/// group, the degree, and a hash of the canonical serialization of the
/// input. A file whose header disagrees with the query is reported as a
/// mismatch rather than silently recomputed. With no directory this is a
/// plain [`bgg_expand`] call.
pub fn bgg_expand_cached(
    rs: &RootSystem,
    f: &Polynomial,
    cap: u32,
    cache_dir: Option<&std::path::Path>,
) -> Result<SchubertExpansion> {
    let Some(dir) = cache_dir else {
        return bgg_expand(rs, f, cap);
    };
    let degree = f.degree().unwrap_or(0);
    let input_hash = format!("{:016x}", fnv1a64(serde_json::to_string(f)?.as_bytes()));
    let name = format!(
        "bgg-{}-d{}-{}-v{}.json",
        rs.kind(),
        degree,
        input_hash,
        EXPANSION_CACHE_VERSION,
    );
    let path = dir.join(name);
    if path.exists() {
        log::debug!("bgg cache hit: {}", path.display());
        let data = std::fs::read_to_string(&path)?;
        let cached: CachedExpansion = serde_json::from_str(&data)?;
        let check = |ok: bool, why: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::CacheMismatch {
                    path: path.display().to_string(),
                    why: why.to_string(),
                })
            }
        };
        check(
            cached.format_version == EXPANSION_CACHE_VERSION,
            "format version",
        )?;
        check(cached.kind == rs.kind().name(), "group kind")?;
        check(cached.degree == degree, "degree")?;
        check(cached.input_hash == input_hash, "input hash")?;
        let mut terms = BTreeMap::new();
        for (word, coeff) in cached.terms {
            let c: Rat = coeff.parse().map_err(|_| Error::CacheMismatch {
                path: path.display().to_string(),
                why: format!("unreadable coefficient {coeff}"),
            })?;
            terms.insert(word, c);
        }
        return Ok(SchubertExpansion { degree, terms });
    }
    let expansion = bgg_expand(rs, f, cap)?;
    let cached = CachedExpansion {
        format_version: EXPANSION_CACHE_VERSION,
        kind: rs.kind().name().to_string(),
        degree: expansion.degree,
        input_hash,
        terms: expansion
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.to_string()))
            .collect(),
    };
    std::fs::create_dir_all(dir)?;
    std::fs::write(&path, serde_json::to_string(&cached)?)?;
    Ok(expansion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::root::RootSystem;

    fn omega(rs: &RootSystem, s: &str) -> Polynomial {
        Polynomial::parse(rs.omega_ring(), s).unwrap()
    }

    #[test]
    fn simple_difference_of_fundamental_weight() {
        let rs = RootSystem::new(GroupKind::E6);
        let f = omega(&rs, "w2");
        assert_eq!(
            divided_difference_simple(&rs, 1, &f).unwrap(),
            Polynomial::one(rs.omega_ring())
        );
        // Other letters annihilate w2.
        for i in [0usize, 2, 3, 4, 5] {
            assert!(divided_difference_simple(&rs, i, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn twisted_leibniz_rule() {
        let rs = RootSystem::new(GroupKind::E6);
        let f = omega(&rs, "w1^2 - 3*w3*w4");
        let g = omega(&rs, "w2 + 2*w6");
        for i in 0..6 {
            let lhs = divided_difference_simple(&rs, i, &f.mul_ref(&g)).unwrap();
            let rhs = divided_difference_simple(&rs, i, &f)
                .unwrap()
                .mul_ref(&g)
                .add_ref(&rs.reflect_poly(i, &f).mul_ref(&divided_difference_simple(&rs, i, &g).unwrap()));
            assert_eq!(lhs, rhs, "letter {i}");
        }
    }

    #[test]
    fn squares_vanish_and_commuting_letters_agree() {
        let rs = RootSystem::new(GroupKind::E6);
        let f = omega(&rs, "w1^3 + w2*w4^2 - 5*w5*w6*w1");
        for i in 0..6 {
            let once = divided_difference_simple(&rs, i, &f).unwrap();
            let twice = divided_difference_simple(&rs, i, &once).unwrap();
            assert!(twice.is_zero(), "letter {i}");
        }
        // Nodes 1 and 2 are not adjacent, so the operators commute.
        let a = divided_difference(&rs, &[0, 1], &f).unwrap();
        let b = divided_difference(&rs, &[1, 0], &f).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn non_reduced_word_gives_zero() {
        let rs = RootSystem::new(GroupKind::E6);
        let f = omega(&rs, "w1^2*w3 - w2^3");
        assert!(divided_difference(&rs, &[3, 3], &f).unwrap().is_zero());
        assert!(divided_difference(&rs, &[0, 2, 0, 2], &f).unwrap().is_zero());
    }

    #[test]
    fn expansion_of_simple_root() {
        // alpha_1 = 2 w1 - w3 expands with coefficients given by its
        // weight coordinates.
        let rs = RootSystem::new(GroupKind::E6);
        let f = omega(&rs, "2*w1 - w3");
        let e = bgg_expand(&rs, &f, 12).unwrap();
        assert_eq!(e.degree, 1);
        let coeffs: Vec<(&str, String)> = e
            .terms
            .iter()
            .map(|(w, c)| (w.as_str(), c.to_string()))
            .collect();
        assert_eq!(coeffs, vec![("1", "2".to_string()), ("3", "-1".to_string())]);
        assert!(e.is_integral());
        assert_eq!(e.content(), Rat::one());
    }

    #[test]
    fn expansion_of_t_squared() {
        // t = w2; its square expands as the single class indexed by [42].
        let rs = RootSystem::new(GroupKind::E6);
        let f = omega(&rs, "w2^2");
        let e = bgg_expand(&rs, &f, 12).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms.get("42").map(Rat::to_string).as_deref(), Some("1"));
        assert_eq!(e.display(), "Z(42)");
    }

    #[test]
    fn kernel_detects_invariants() {
        let rs = RootSystem::new(GroupKind::E6);
        // c1 = 3t holds identically, so the image of c1 - 3t is the zero
        // polynomial and trivially in the kernel.
        let f = rs
            .c_poly(1)
            .sub_ref(&rs.t_form(6).to_polynomial().scale_int(3));
        assert!(f.is_zero());
        // A nonzero quadratic that is not invariant must expand.
        let g = omega(&rs, "w2^2 - w1*w3");
        assert!(!kernel_test(&rs, &g, 12).unwrap());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let rs = RootSystem::new(GroupKind::E6);
        let f = omega(&rs, "w1^13");
        assert!(matches!(
            bgg_expand(&rs, &f, 12),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn cached_expansion_roundtrip() {
        let rs = RootSystem::new(GroupKind::E6);
        let f = omega(&rs, "w1*w2 - w3^2");
        let dir = tempfile::tempdir().unwrap();
        let a = bgg_expand_cached(&rs, &f, 12, Some(dir.path())).unwrap();
        assert_eq!(a, bgg_expand(&rs, &f, 12).unwrap());
        // Second call reads the stored file and must agree exactly.
        let b = bgg_expand_cached(&rs, &f, 12, Some(dir.path())).unwrap();
        assert_eq!(a, b);
        let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
        assert_eq!(entries.len(), 1);
        // A corrupted header is an error, not a silent recompute.
        let path = entries[0].as_ref().unwrap().path();
        let data = std::fs::read_to_string(&path)
            .unwrap()
            .replace("\"degree\":2", "\"degree\":3");
        std::fs::write(&path, data).unwrap();
        assert!(matches!(
            bgg_expand_cached(&rs, &f, 12, Some(dir.path())),
            Err(Error::CacheMismatch { .. })
        ));
    }

    #[test]
    fn stabilizer_filter_matches_unfiltered_search() {
        // Expanding a symmetric function of the t-forms exercises the
        // stabilizer path (letters other than 2 fix it); compare against the
        // composite operator evaluated directly on each coset word.
        let rs = RootSystem::new(GroupKind::E6);
        let c2 = rs.c_poly(2).clone();
        let e = bgg_expand(&rs, &c2, 12).unwrap();
        for (word, coeff) in &e.terms {
            let w = rs.parse_word(word).unwrap();
            let d = divided_difference(&rs, &w, &c2).unwrap();
            assert_eq!(d.constant_term(), *coeff, "word {word}");
            assert_eq!(d.degree(), Some(0));
        }
        // Every indexing word avoids right descents outside node 2's coset.
        for word in e.terms.keys() {
            let w = Element::from_word(&rs, &rs.parse_word(word).unwrap());
            for j in (0..6).filter(|&j| j != 1) {
                assert!(w.right_ascent(&rs, j), "word {word} letter {j}");
            }
        }
    }
}
