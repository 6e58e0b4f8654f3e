//! Weyl group elements, reduced words, enumeration and the Poincaré series.
//!
//! Elements are stored as the integer matrix of their action on weight
//! coordinates together with the inverse matrix, so left and right descent
//! tests are sign lookups of root images. The canonical reduced word of an
//! element is the lexicographically least one, produced by repeatedly
//! splitting off the smallest left descent.
//!
//! Enumeration comes in three flavors:
//!
//! * [`enumerate_coset`] — minimal-length representatives of the cosets
//!   `w W_P` for a maximal parabolic `P`, by breadth-first search on the
//!   orbit of the corresponding fundamental weight (the orbit vector is a
//!   faithful key for the coset and its depth is the representative's
//!   length);
//! * [`enumerate_full`] — all elements up to a length bound, layer by layer;
//! * [`count_by_length`] — layer sizes only, on a compact key, for counting
//!   against the Poincaré polynomial without holding words in memory.

use crate::error::{Error, Result};
use crate::root::{mat_apply, mat_identity, mat_mul, word_string, GroupKind, Mat8, RootSystem, Vec8};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::path::Path;

/// A Weyl group element: its matrix on weight coordinates and the inverse.
#[derive(Debug, Clone, Copy)]
pub struct Element {
    m: Mat8,
    minv: Mat8,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}
impl Eq for Element {}

impl std::hash::Hash for Element {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.m.hash(state);
    }
}

impl Element {
    /// The identity.
    pub fn identity() -> Self {
        Element {
            m: mat_identity(),
            minv: mat_identity(),
        }
    }

    /// Builds `s_(i1) s_(i2) ... s_(ik)` from a 0-based word, left to right.
    pub fn from_word(rs: &RootSystem, word: &[u8]) -> Self {
        let mut e = Self::identity();
        for &i in word {
            e = e.mul_simple_right(rs, usize::from(i));
        }
        e
    }

    /// `s_i * self`.
    pub fn mul_simple_left(&self, rs: &RootSystem, i: usize) -> Self {
        let si = rs.reflection_matrix(i);
        Element {
            m: mat_mul(si, &self.m),
            minv: mat_mul(&self.minv, si),
        }
    }

    /// `self * s_i`.
    pub fn mul_simple_right(&self, rs: &RootSystem, i: usize) -> Self {
        let si = rs.reflection_matrix(i);
        Element {
            m: mat_mul(&self.m, si),
            minv: mat_mul(si, &self.minv),
        }
    }

    /// Action on a weight vector.
    pub fn act(&self, v: &Vec8) -> Vec8 {
        mat_apply(&self.m, v)
    }

    /// Action of the inverse.
    pub fn act_inv(&self, v: &Vec8) -> Vec8 {
        mat_apply(&self.minv, v)
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &Mat8 {
        &self.m
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.m == mat_identity()
    }

    /// `l(s_i w) > l(w)`, i.e. `w^(-1)(alpha_i) > 0`.
    pub fn left_ascent(&self, rs: &RootSystem, i: usize) -> bool {
        rs.root_is_positive(&self.act_inv(&rs.simple_root_omega(i)))
    }

    /// `l(w s_i) > l(w)`, i.e. `w(alpha_i) > 0`.
    pub fn right_ascent(&self, rs: &RootSystem, i: usize) -> bool {
        rs.root_is_positive(&self.act(&rs.simple_root_omega(i)))
    }

    /// Length as the number of positive roots sent negative.
    pub fn length(&self, rs: &RootSystem) -> u32 {
        rs.positive_roots()
            .iter()
            .filter(|r| !rs.root_is_positive(&self.act(&r.omega)))
            .count() as u32
    }

    /// The lexicographically least reduced word (0-based letters), found by
    /// greedily taking the smallest left descent.
    pub fn canonical_word(&self, rs: &RootSystem) -> Vec<u8> {
        let mut word = Vec::new();
        let mut w = *self;
        'outer: loop {
            for i in 0..rs.rank() {
                if !w.left_ascent(rs, i) {
                    word.push(i as u8);
                    w = w.mul_simple_left(rs, i);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(w.is_identity());
        word
    }

    /// True when the word is reduced (its length equals the element length).
    pub fn word_is_reduced(rs: &RootSystem, word: &[u8]) -> bool {
        Self::from_word(rs, word).length(rs) as usize == word.len()
    }
}

/// Coefficients of the Poincaré polynomial of the full Weyl group,
/// `prod_i (1 + q + ... + q^(d_i - 1))`.
pub fn poincare_coeffs(kind: GroupKind) -> Vec<u64> {
    let mut coeffs = vec![1u64];
    for &d in kind.degrees() {
        let mut next = vec![0u64; coeffs.len() + (d as usize) - 1];
        for (i, &c) in coeffs.iter().enumerate() {
            for j in 0..d as usize {
                next[i + j] += c;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Coefficients of the Poincaré polynomial of the parabolic quotient
/// `W / W_P` where `P` drops node 2: the quotient of the full series by the
/// series of the type `A_(l-1)` subgroup (degrees `2..=l`).
pub fn coset_poincare_coeffs(kind: GroupKind) -> Vec<u64> {
    let num = poincare_coeffs(kind);
    // Denominator: Poincaré polynomial of the symmetric group on l letters.
    let mut den = vec![1u64];
    for d in 2..=kind.rank() as u64 {
        let mut next = vec![0u64; den.len() + (d as usize) - 1];
        for (i, &c) in den.iter().enumerate() {
            for j in 0..d as usize {
                next[i + j] += c;
            }
        }
        den = next;
    }
    // Exact ascending long division; both constant terms are 1.
    let qlen = num.len() - den.len() + 1;
    let mut q = vec![0u64; qlen];
    let mut rem = num;
    for k in 0..qlen {
        q[k] = rem[k];
        if q[k] == 0 {
            continue;
        }
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= q[k] * d;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "series must divide exactly");
    q
}

/// One enumerated element.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EnumeratedElement {
    /// Canonical reduced word as a 1-based digit string.
    pub word: String,
    /// Length of the element.
    pub length: u32,
    /// Matrix rows (rank by rank) of the action on weight coordinates.
    pub matrix: Vec<Vec<i64>>,
}

/// An enumeration result, sorted by `(length, word)`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Enumeration {
    pub format_version: u32,
    pub kind: String,
    /// 1-based node excluded from the parabolic, or `None` for the full
    /// group.
    pub parabolic: Option<usize>,
    /// Length bound used, or `None` for exhaustive.
    pub max_len: Option<u32>,
    pub elements: Vec<EnumeratedElement>,
}

const CACHE_FORMAT_VERSION: u32 = 1;

impl Enumeration {
    /// Reconstructs the group element for entry `i`.
    pub fn element(&self, rs: &RootSystem, i: usize) -> Result<Element> {
        let word = rs.parse_word(&self.elements[i].word)?;
        Ok(Element::from_word(rs, &word))
    }

    /// Counts elements per length.
    pub fn counts(&self) -> Vec<u64> {
        let max = self.elements.iter().map(|e| e.length).max().unwrap_or(0);
        let mut counts = vec![0u64; max as usize + 1];
        for e in &self.elements {
            counts[e.length as usize] += 1;
        }
        counts
    }
}

fn matrix_rows(rs: &RootSystem, m: &Mat8) -> Vec<Vec<i64>> {
    (0..rs.rank())
        .map(|i| m[i][..rs.rank()].to_vec())
        .collect()
}

/// Enumerates the minimal-length coset representatives of `w W_P`, where `P`
/// is the maximal parabolic dropping the 1-based node `excluded_node`,
/// optionally up to a length bound.
///
/// Breadth-first search on the orbit of the fundamental weight of the
/// excluded node: orbit vectors are in bijection with cosets, their
/// breadth-first depth is the representative's length, and the chain of
/// simple reflections reaching a vector is the representative itself.
pub fn enumerate_coset(
    rs: &RootSystem,
    excluded_node: usize,
    max_len: Option<u32>,
) -> Enumeration {
    assert!(excluded_node >= 1 && excluded_node <= rs.rank());
    let k = excluded_node - 1;
    let mut v0: Vec8 = [0; 8];
    v0[k] = 1;
    let mut seen: HashSet<Vec8> = HashSet::new();
    seen.insert(v0);
    let mut layer: Vec<(Element, Vec8)> = vec![(Element::identity(), v0)];
    let mut out: Vec<EnumeratedElement> = Vec::new();
    let mut depth: u32 = 0;
    while !layer.is_empty() {
        for (e, _) in &layer {
            out.push(EnumeratedElement {
                word: word_string(&e.canonical_word(rs)),
                length: depth,
                matrix: matrix_rows(rs, e.matrix()),
            });
        }
        if max_len.is_some_and(|m| depth >= m) {
            break;
        }
        let mut next: Vec<(Element, Vec8)> = Vec::new();
        for (e, v) in &layer {
            for i in 0..rs.rank() {
                let vi = mat_apply(rs.reflection_matrix(i), v);
                if vi != *v && seen.insert(vi) {
                    next.push((e.mul_simple_left(rs, i), vi));
                }
            }
        }
        layer = next;
        depth += 1;
    }
    out.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
    Enumeration {
        format_version: CACHE_FORMAT_VERSION,
        kind: rs.kind().name().to_string(),
        parabolic: Some(excluded_node),
        max_len,
        elements: out,
    }
}

/// Enumerates all group elements up to the length bound, erroring when the
/// element count would exceed `cap`.
pub fn enumerate_full(
    rs: &RootSystem,
    max_len: Option<u32>,
    cap: u64,
) -> Result<Enumeration> {
    let expected: u64 = match max_len {
        None => rs.kind().weyl_order(),
        Some(m) => poincare_coeffs(rs.kind())
            .iter()
            .take(m as usize + 1)
            .sum(),
    };
    if expected > cap {
        return Err(Error::CapExceeded {
            what: format!("full enumeration of W({})", rs.kind()),
            needed: expected,
            cap,
        });
    }
    let mut out: Vec<EnumeratedElement> = Vec::new();
    let mut layer: Vec<Element> = vec![Element::identity()];
    let mut depth: u32 = 0;
    while !layer.is_empty() {
        for e in &layer {
            out.push(EnumeratedElement {
                word: word_string(&e.canonical_word(rs)),
                length: depth,
                matrix: matrix_rows(rs, e.matrix()),
            });
        }
        if max_len.is_some_and(|m| depth >= m) {
            break;
        }
        let mut next: Vec<Element> = Vec::new();
        let mut seen: HashSet<Mat8> = HashSet::new();
        for e in &layer {
            for i in 0..rs.rank() {
                // Only ascents: an element of length d+1 arises exactly from
                // its left descents at length d, so no cross-layer dedup is
                // needed.
                if e.left_ascent(rs, i) {
                    let ne = e.mul_simple_left(rs, i);
                    if seen.insert(*ne.matrix()) {
                        next.push(ne);
                    }
                }
            }
        }
        layer = next;
        depth += 1;
    }
    out.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
    Ok(Enumeration {
        format_version: CACHE_FORMAT_VERSION,
        kind: rs.kind().name().to_string(),
        parabolic: None,
        max_len,
        elements: out,
    })
}

/// Counts elements per length without storing words, on a compact key: the
/// tuple of images of the simple roots, which determines the element.
/// Successors are taken on the right, so the ascent test and the key update
/// are both local to the tuple.
pub fn count_by_length(
    rs: &RootSystem,
    max_len: Option<u32>,
    cap: u64,
) -> Result<Vec<u64>> {
    type Key = [[i16; 8]; 8];
    let rank = rs.rank();
    let to_vec8 = |row: &[i16; 8]| -> Vec8 {
        let mut v = [0i64; 8];
        for (a, b) in v.iter_mut().zip(row) {
            *a = i64::from(*b);
        }
        v
    };
    let mut start: Key = [[0; 8]; 8];
    for j in 0..rank {
        let v = rs.simple_root_omega(j);
        for c in 0..rank {
            start[j][c] = i16::try_from(v[c]).expect("root coordinates are small");
        }
    }
    let mut counts: Vec<u64> = Vec::new();
    let mut total: u64 = 0;
    let mut layer: Vec<Key> = vec![start];
    let mut depth: u32 = 0;
    while !layer.is_empty() {
        total += layer.len() as u64;
        if total > cap {
            return Err(Error::CapExceeded {
                what: format!("length census of W({})", rs.kind()),
                needed: total,
                cap,
            });
        }
        counts.push(layer.len() as u64);
        if max_len.is_some_and(|m| depth >= m) {
            break;
        }
        let mut next: HashSet<Key> = HashSet::new();
        for key in &layer {
            for i in 0..rank {
                // Right ascent: w(alpha_i) > 0.
                if !rs.root_is_positive(&to_vec8(&key[i])) {
                    continue;
                }
                // w s_i (alpha_j) = w(alpha_j) - C[i][j] w(alpha_i).
                let mut nk = *key;
                for j in 0..rank {
                    let c = rs.cartan(i, j) as i16;
                    if c != 0 {
                        for t in 0..rank {
                            nk[j][t] -= c * key[i][t];
                        }
                    }
                }
                next.insert(nk);
            }
        }
        layer = next.into_iter().collect();
        depth += 1;
    }
    Ok(counts)
}

/// Loads an enumeration from the cache directory, or computes and stores it.
///
/// The file name encodes the query; a file whose header disagrees with its
/// name is reported as a mismatch rather than silently recomputed.
pub fn cached_enumerate_coset(
    rs: &RootSystem,
    excluded_node: usize,
    max_len: Option<u32>,
    cache_dir: &Path,
) -> Result<Enumeration> {
    let name = format!(
        "weyl-{}-p{}-{}-v{}.json",
        rs.kind(),
        excluded_node,
        max_len.map_or("full".to_string(), |m| format!("len{m}")),
        CACHE_FORMAT_VERSION,
    );
    let path = cache_dir.join(name);
    if path.exists() {
        log::debug!("enumeration cache hit: {}", path.display());
        let data = std::fs::read_to_string(&path)?;
        let enumeration: Enumeration = serde_json::from_str(&data)?;
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
            enumeration.format_version == CACHE_FORMAT_VERSION,
            "format version",
        )?;
        check(enumeration.kind == rs.kind().name(), "group kind")?;
        check(enumeration.parabolic == Some(excluded_node), "parabolic")?;
        check(enumeration.max_len == max_len, "length bound")?;
        return Ok(enumeration);
    }
    let enumeration = enumerate_coset(rs, excluded_node, max_len);
    std::fs::create_dir_all(cache_dir)?;
    std::fs::write(&path, serde_json::to_string(&enumeration)?)?;
    Ok(enumeration)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::RootSystem;
    use std::collections::HashMap;

    #[test]
    fn lengths_and_words_agree() {
        let rs = RootSystem::new(GroupKind::E6);
        let w = Element::from_word(&rs, &rs.parse_word("542").unwrap());
        assert_eq!(w.length(&rs), 3);
        assert_eq!(word_string(&w.canonical_word(&rs)), "542");
        // A non-reduced word: s1 s1 is the identity.
        let e = Element::from_word(&rs, &[0, 0]);
        assert!(e.is_identity());
        assert!(!Element::word_is_reduced(&rs, &[0, 0]));
        assert!(Element::word_is_reduced(&rs, &rs.parse_word("1342").unwrap()));
    }

    #[test]
    fn canonical_word_is_lex_least_among_all_reduced_words() {
        // Brute force over E6 elements of length <= 4: grow all reduced words
        // letter by letter on the left and compare each element's greedy
        // canonical word with the minimum over every reduced word found.
        let rs = RootSystem::new(GroupKind::E6);
        let mut words_by_elt: HashMap<Mat8, (Element, Vec<Vec<u8>>)> = HashMap::new();
        let mut layer: Vec<(Element, Vec<u8>)> = vec![(Element::identity(), vec![])];
        for _ in 0..4 {
            let mut next = Vec::new();
            for (e, word) in &layer {
                for i in 0..6u8 {
                    if e.left_ascent(&rs, usize::from(i)) {
                        let ne = e.mul_simple_left(&rs, usize::from(i));
                        let mut nw = vec![i];
                        nw.extend_from_slice(word);
                        words_by_elt
                            .entry(*ne.matrix())
                            .or_insert_with(|| (ne, Vec::new()))
                            .1
                            .push(nw.clone());
                        next.push((ne, nw));
                    }
                }
            }
            layer = next;
        }
        for (e, words) in words_by_elt.values() {
            let min = words.iter().min().unwrap();
            assert_eq!(&e.canonical_word(&rs), min);
        }
    }

    #[test]
    fn poincare_basics() {
        let p6 = poincare_coeffs(GroupKind::E6);
        assert_eq!(p6.iter().sum::<u64>(), 51840);
        assert_eq!(p6[0], 1);
        assert_eq!(p6[1], 6);
        // Palindromic.
        let rev: Vec<u64> = p6.iter().rev().copied().collect();
        assert_eq!(p6, rev);
        let q = coset_poincare_coeffs(GroupKind::E6);
        assert_eq!(q.iter().sum::<u64>(), 72);
        assert_eq!(q[..5], [1, 1, 1, 2, 3]);
        assert_eq!(coset_poincare_coeffs(GroupKind::E7).iter().sum::<u64>(), 576);
        assert_eq!(
            coset_poincare_coeffs(GroupKind::E8).iter().sum::<u64>(),
            17280
        );
    }

    #[test]
    fn coset_enumeration_small_lengths() {
        let rs = RootSystem::new(GroupKind::E6);
        let e = enumerate_coset(&rs, 2, Some(4));
        let words: Vec<&str> = e
            .elements
            .iter()
            .filter(|el| el.length >= 3)
            .map(|el| el.word.as_str())
            .collect();
        assert_eq!(words, vec!["342", "542", "1342", "3542", "6542"]);
    }

    #[test]
    fn coset_counts_match_quotient_series() {
        for kind in [GroupKind::E6, GroupKind::E7, GroupKind::E8] {
            let rs = RootSystem::new(kind);
            let e = enumerate_coset(&rs, 2, None);
            assert_eq!(e.counts(), coset_poincare_coeffs(kind), "{kind}");
        }
    }

    #[test]
    fn full_enumeration_e6_matches_series() {
        let rs = RootSystem::new(GroupKind::E6);
        let e = enumerate_full(&rs, None, 100_000).unwrap();
        assert_eq!(e.counts(), poincare_coeffs(GroupKind::E6));
        // Every stored word is reduced and canonical.
        for el in e.elements.iter().step_by(997) {
            let w = rs.parse_word(&el.word).unwrap();
            let elt = Element::from_word(&rs, &w);
            assert_eq!(elt.length(&rs) as usize, w.len());
            assert_eq!(word_string(&elt.canonical_word(&rs)), el.word);
        }
    }

    #[test]
    fn census_agrees_with_enumeration() {
        let rs = RootSystem::new(GroupKind::E7);
        let counts = count_by_length(&rs, Some(8), 1_000_000).unwrap();
        let p = poincare_coeffs(GroupKind::E7);
        assert_eq!(&counts[..], &p[..9]);
        let refused = count_by_length(&rs, None, 1000);
        assert!(matches!(refused, Err(Error::CapExceeded { .. })));
    }

    #[test]
    #[ignore = "walks all 2.9 million elements of W(E7)"]
    fn census_full_e7() {
        let rs = RootSystem::new(GroupKind::E7);
        let counts = count_by_length(&rs, None, 3_000_000).unwrap();
        assert_eq!(counts, poincare_coeffs(GroupKind::E7));
    }

    #[test]
    fn cache_roundtrip() {
        let rs = RootSystem::new(GroupKind::E6);
        let dir = tempfile::tempdir().unwrap();
        let a = cached_enumerate_coset(&rs, 2, Some(4), dir.path()).unwrap();
        let b = cached_enumerate_coset(&rs, 2, Some(4), dir.path()).unwrap();
        assert_eq!(a, b);
        // A tampered header is a mismatch, not a silent recompute.
        let path = dir
            .path()
            .join(format!("weyl-e6-p2-len4-v{CACHE_FORMAT_VERSION}.json"));
        let mut e: Enumeration =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        e.parabolic = Some(3);
        std::fs::write(&path, serde_json::to_string(&e).unwrap()).unwrap();
        assert!(matches!(
            cached_enumerate_coset(&rs, 2, Some(4), dir.path()),
            Err(Error::CacheMismatch { .. })
        ));
    }
}
