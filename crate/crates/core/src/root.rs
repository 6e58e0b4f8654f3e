//! Root systems of type E6, E7, E8 in fundamental-weight coordinates, the
//! reflection action on polynomials, and the adapted `t`-basis.
//!
//! Simple roots are numbered 1..l in the standard convention for the E
//! series: nodes 1,3,4,...,l form a chain and node 2 hangs off node 4.
//! Internally all indices are 0-based; only parsed and printed words use the
//! 1-based digits.
//!
//! Everything lives in the weight lattice: a vector holds the coordinates of
//! a weight in the basis of fundamental weights. The adapted basis
//!
//! ```text
//! t1 = -w1 + w2,  t2 = w1 + w2 - w3,  t3 = w2 + w3 - w4,
//! ti = wi - w(i+1) (4 <= i < l),  tl = wl,  t = w2,
//! ci = e_i(t1, ..., tl)
//! ```
//!
//! satisfies `c1 = 3t`, and the reflections act on it by
//!
//! * `s_i` (i != 2): a transposition of two adjacent `t`s, fixing `t`;
//! * `s_2`: `t_i -> t - t1 - t2 - t3 + t_i` for i <= 3, fixing `t_i` for
//!   i >= 4, and `t -> 2t - t1 - t2 - t3`.
//!
//! The transposition table and the `s_2` formulas are not assumed: they are
//! derived from the reflection matrices at construction time and verified
//! against the `t`-basis, modulo the defining relation `c1 - 3t`.

use crate::error::{Error, Result};
use crate::poly::{LinearForm, Polynomial, RingSpec};
use crate::Rat;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

/// Weight-lattice vector in fundamental-weight coordinates, padded to 8.
pub type Vec8 = [i64; 8];
/// Integer matrix acting on weight-lattice vectors, padded to 8 by 8.
pub type Mat8 = [[i64; 8]; 8];

/// The identity matrix.
pub fn mat_identity() -> Mat8 {
    let mut m = [[0; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// Matrix product `a * b`.
pub fn mat_mul(a: &Mat8, b: &Mat8) -> Mat8 {
    let mut out = [[0; 8]; 8];
    for i in 0..8 {
        for k in 0..8 {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..8 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Matrix applied to a vector.
pub fn mat_apply(m: &Mat8, v: &Vec8) -> Vec8 {
    let mut out = [0; 8];
    for i in 0..8 {
        let mut acc = 0;
        for j in 0..8 {
            acc += m[i][j] * v[j];
        }
        out[i] = acc;
    }
    out
}

/// One of the three exceptional groups handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    E6,
    E7,
    E8,
}

impl GroupKind {
    /// Rank of the group.
    pub fn rank(self) -> usize {
        match self {
            GroupKind::E6 => 6,
            GroupKind::E7 => 7,
            GroupKind::E8 => 8,
        }
    }

    /// Degrees of the basic Weyl-group invariants.
    pub fn degrees(self) -> &'static [u64] {
        match self {
            GroupKind::E6 => &[2, 5, 6, 8, 9, 12],
            GroupKind::E7 => &[2, 6, 8, 10, 12, 14, 18],
            GroupKind::E8 => &[2, 8, 12, 14, 18, 20, 24, 30],
        }
    }

    /// Order of the Weyl group (product of the degrees).
    pub fn weyl_order(self) -> u64 {
        self.degrees().iter().product()
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        self.degrees().iter().map(|d| (d - 1) as usize).sum()
    }

    /// Lower-case name, e.g. `e7`.
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::E6 => "e6",
            GroupKind::E7 => "e7",
            GroupKind::E8 => "e8",
        }
    }

    /// Parses `e6`/`E6` style names.
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e6" => Some(GroupKind::E6),
            "e7" => Some(GroupKind::E7),
            "e8" => Some(GroupKind::E8),
            _ => None,
        }
    }

    /// All three kinds.
    pub fn all() -> [GroupKind; 3] {
        [GroupKind::E6, GroupKind::E7, GroupKind::E8]
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A root, stored in both coordinate systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootVec {
    /// Coordinates in the basis of simple roots.
    pub alpha: Vec8,
    /// Coordinates in the basis of fundamental weights.
    pub omega: Vec8,
}

/// A root system of type E with everything the rest of the crate needs:
/// roots, reflection matrices, the polynomial rings in `w`- and
/// `t`-coordinates, and the derived Weyl action on the `t`-basis.
pub struct RootSystem {
    kind: GroupKind,
    rank: usize,
    cartan: Mat8,
    adjacency: Vec<Vec<usize>>,
    positive_roots: Vec<RootVec>,
    positive_omega: HashSet<Vec8>,
    reflection_matrices: Vec<Mat8>,
    omega_ring: Arc<RingSpec>,
    tfree_ring: Arc<RingSpec>,
    /// `t1..tl` then `t`, as linear forms in the `w`-ring.
    t_forms: Vec<LinearForm>,
    /// `w1..wl` as linear forms in the `t`-ring (a section of `c1 = 3t`).
    omega_in_t: Vec<LinearForm>,
    /// `c1..cl` expanded in the `w`-ring.
    c_polys: Vec<Polynomial>,
    /// Derived action of each `s_i` on the `t`-ring variables.
    t_action: Vec<Vec<LinearForm>>,
    /// For `i != 2` (0-based `i != 1`): the transposition of `t`-variables.
    t_transpositions: Vec<Option<(usize, usize)>>,
}

impl RootSystem {
    /// Builds the root system, deriving and checking all internal tables.
    pub fn new(kind: GroupKind) -> Arc<RootSystem> {
        let rank = kind.rank();

        // Chain 1-3-4-...-l with node 2 attached to node 4 (0-based below).
        let mut edges: Vec<(usize, usize)> = vec![(0, 2), (1, 3)];
        for i in 2..rank - 1 {
            edges.push((i, i + 1));
        }
        let mut adjacency = vec![Vec::new(); rank];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }

        let mut cartan = [[0i64; 8]; 8];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        for &(a, b) in &edges {
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        }

        // Close the simple roots under the simple reflections. In
        // simple-root coordinates m the reflection is
        // s_i(m) = m - (C m)_i e_i, and (C m) is the weight-coordinate form.
        let omega_of = |m: &Vec8| -> Vec8 {
            let mut o = [0; 8];
            for j in 0..rank {
                for k in 0..rank {
                    o[j] += cartan[j][k] * m[k];
                }
            }
            o
        };
        let mut seen: HashSet<Vec8> = HashSet::new();
        let mut queue: Vec<Vec8> = Vec::new();
        for i in 0..rank {
            let mut m = [0; 8];
            m[i] = 1;
            seen.insert(m);
            queue.push(m);
        }
        while let Some(m) = queue.pop() {
            let o = omega_of(&m);
            for i in 0..rank {
                let mut next = m;
                next[i] -= o[i];
                if seen.insert(next) {
                    queue.push(next);
                }
            }
        }
        let mut positive_roots: Vec<RootVec> = seen
            .iter()
            .filter(|m| m.iter().all(|&x| x >= 0))
            .map(|m| RootVec {
                alpha: *m,
                omega: omega_of(m),
            })
            .collect();
        positive_roots.sort_by_key(|r| (r.alpha.iter().sum::<i64>(), r.alpha));
        assert_eq!(seen.len(), 2 * kind.positive_root_count());
        assert_eq!(positive_roots.len(), kind.positive_root_count());
        let positive_omega: HashSet<Vec8> =
            positive_roots.iter().map(|r| r.omega).collect();

        let reflection_matrices: Vec<Mat8> = (0..rank)
            .map(|i| {
                let mut m = mat_identity();
                for j in 0..rank {
                    m[j][i] -= cartan[j][i];
                }
                m
            })
            .collect();

        let omega_ring =
            RingSpec::uniform((1..=rank).map(|i| format!("w{i}")));
        let tfree_ring = RingSpec::uniform(
            (1..=rank)
                .map(|i| format!("t{i}"))
                .chain(std::iter::once("t".to_string())),
        );

        // The adapted basis in w-coordinates.
        let mut t_forms: Vec<LinearForm> = Vec::with_capacity(rank + 1);
        for i in 0..rank {
            let mut coeffs = vec![0i64; rank];
            match i {
                0 => {
                    coeffs[0] = -1;
                    coeffs[1] = 1;
                }
                1 => {
                    coeffs[0] = 1;
                    coeffs[1] = 1;
                    coeffs[2] = -1;
                }
                2 => {
                    coeffs[1] = 1;
                    coeffs[2] = 1;
                    coeffs[3] = -1;
                }
                _ => {
                    coeffs[i] = 1;
                    if i + 1 < rank {
                        coeffs[i + 1] = -1;
                    }
                }
            }
            t_forms.push(LinearForm::from_ints(&omega_ring, &coeffs));
        }
        let mut t_coeffs = vec![0i64; rank];
        t_coeffs[1] = 1;
        t_forms.push(LinearForm::from_ints(&omega_ring, &t_coeffs));

        // Section sending each w_j to a t-expression: w2 = t, w1 = t - t1,
        // w3 = 2t - t1 - t2, w4 = 3t - t1 - t2 - t3, and w_(j+1) = w_j - t_j
        // for j >= 4.
        let tvar = |i: usize| LinearForm::from_polynomial(&Polynomial::var(&tfree_ring, i))
            .expect("variable is linear");
        let tt = tvar(rank);
        let mut omega_in_t: Vec<LinearForm> = vec![LinearForm::zero(&tfree_ring); rank];
        omega_in_t[1] = tt.clone();
        omega_in_t[0] = tt.sub(&tvar(0));
        omega_in_t[2] = tt.scale(&Rat::from(crate::Int::from(2)))
            .sub(&tvar(0))
            .sub(&tvar(1));
        omega_in_t[3] = tt.scale(&Rat::from(crate::Int::from(3)))
            .sub(&tvar(0))
            .sub(&tvar(1))
            .sub(&tvar(2));
        for j in 3..rank - 1 {
            omega_in_t[j + 1] = omega_in_t[j].sub(&tvar(j));
        }
        // Consistency: pushing each t-expression back through the t-forms
        // must recover the variable modulo nothing at all for w2, and the
        // round trip t_i -> w -> t must fix every t_i except for adding a
        // multiple of (c1 - 3t); both are checked in tests.

        // c_i expanded in the w-ring.
        let t_polys: Vec<Polynomial> =
            t_forms[..rank].iter().map(LinearForm::to_polynomial).collect();
        let c_polys = {
            let mut es: Vec<Polynomial> = Vec::with_capacity(rank);
            for tp in &t_polys {
                let mut next: Vec<Polynomial> = Vec::with_capacity(es.len() + 1);
                for k in 0..=es.len() {
                    let mut e = if k == 0 {
                        tp.clone()
                    } else {
                        es[k - 1].mul_ref(tp)
                    };
                    if k < es.len() {
                        e = e.add_ref(&es[k]);
                    }
                    next.push(e);
                }
                es = next;
            }
            es
        };
        // c1 = 3t identically in w-coordinates.
        assert_eq!(
            c_polys[0],
            t_forms[rank].to_polynomial().scale_int(3),
            "c1 - 3t must vanish identically"
        );

        let mut rs = RootSystem {
            kind,
            rank,
            cartan,
            adjacency,
            positive_roots,
            positive_omega,
            reflection_matrices,
            omega_ring,
            tfree_ring,
            t_forms,
            omega_in_t,
            c_polys,
            t_action: Vec::new(),
            t_transpositions: Vec::new(),
        };
        rs.derive_t_action();
        Arc::new(rs)
    }

    /// Derives the action of each simple reflection on the `t`-ring
    /// variables by conjugating the true `w`-ring action through the basis
    /// change, then identifies the advertised shape (transpositions away
    /// from node 2) and verifies it modulo `c1 - 3t`.
    fn derive_t_action(&mut self) {
        let rank = self.rank;
        let mut action: Vec<Vec<LinearForm>> = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut images: Vec<LinearForm> = Vec::with_capacity(rank + 1);
            for v in 0..=rank {
                // t-variable v as a w-form, reflected, then re-expressed.
                let reflected = self.reflect_linear(i, &self.t_forms[v]);
                images.push(self.omega_form_to_t(&reflected));
            }
            action.push(images);
        }

        // For i != 2 the images must be a transposition of the t-variables
        // fixing t, up to the defining relation. Identify it by orbit size.
        let mut transpositions: Vec<Option<(usize, usize)>> = vec![None; rank];
        for i in 0..rank {
            if i == 1 {
                // Node 2: check the affine-looking formulas instead.
                let tt = self.t_var_form(rank);
                let big = self.sum_t_vars(&[0, 1, 2]);
                for v in 0..3 {
                    let expect = tt.sub(&big).add(&self.t_var_form(v));
                    assert!(
                        self.t_forms_equal_mod_relation(&action[i][v], &expect),
                        "s2 action on t{} has unexpected shape",
                        v + 1
                    );
                }
                for v in 3..rank {
                    assert!(
                        self.t_forms_equal_mod_relation(&action[i][v], &self.t_var_form(v)),
                        "s2 must fix t{}",
                        v + 1
                    );
                }
                let expect_t = tt.scale(&Rat::from(crate::Int::from(2))).sub(&big);
                assert!(
                    self.t_forms_equal_mod_relation(&action[i][rank], &expect_t),
                    "s2 action on t has unexpected shape"
                );
                continue;
            }
            let mut moved: Vec<usize> = Vec::new();
            for v in 0..rank {
                if !self.t_forms_equal_mod_relation(&action[i][v], &self.t_var_form(v)) {
                    moved.push(v);
                }
            }
            assert_eq!(
                moved.len(),
                2,
                "s{} must move exactly two t-variables",
                i + 1
            );
            let (a, b) = (moved[0], moved[1]);
            assert!(
                self.t_forms_equal_mod_relation(&action[i][a], &self.t_var_form(b))
                    && self.t_forms_equal_mod_relation(&action[i][b], &self.t_var_form(a)),
                "s{} must transpose t{} and t{}",
                i + 1,
                a + 1,
                b + 1
            );
            assert!(
                self.t_forms_equal_mod_relation(&action[i][rank], &self.t_var_form(rank)),
                "s{} must fix t",
                i + 1
            );
            transpositions[i] = Some((a, b));
            // Overwrite the derived images with the exact transposition so
            // the free-ring action is literal, not merely a representative.
            action[i][a] = self.t_var_form(b);
            action[i][b] = self.t_var_form(a);
            for v in (0..rank).filter(|v| *v != a && *v != b) {
                action[i][v] = self.t_var_form(v);
            }
            action[i][rank] = self.t_var_form(rank);
        }
        // Node 2 free-ring images: use the literal advertised formulas
        // (already verified above modulo the relation).
        let tt = self.t_var_form(rank);
        let big = self.sum_t_vars(&[0, 1, 2]);
        for v in 0..3 {
            action[1][v] = tt.sub(&big).add(&self.t_var_form(v));
        }
        for v in 3..rank {
            action[1][v] = self.t_var_form(v);
        }
        action[1][rank] = tt.scale(&Rat::from(crate::Int::from(2))).sub(&big);

        self.t_action = action;
        self.t_transpositions = transpositions;
    }

    fn t_var_form(&self, v: usize) -> LinearForm {
        LinearForm::from_polynomial(&Polynomial::var(&self.tfree_ring, v))
            .expect("variable is linear")
    }

    fn sum_t_vars(&self, vs: &[usize]) -> LinearForm {
        let mut acc = LinearForm::zero(&self.tfree_ring);
        for &v in vs {
            acc = acc.add(&self.t_var_form(v));
        }
        acc
    }

    /// Equality of linear forms in the `t`-ring modulo `c1 - 3t`.
    fn t_forms_equal_mod_relation(&self, a: &LinearForm, b: &LinearForm) -> bool {
        let diff = a.sub(b);
        if diff.is_zero() {
            return true;
        }
        // diff must be a rational multiple of (t1 + ... + tl - 3t).
        let rank = self.rank;
        let lead = (0..=rank).map(|v| diff.coeff(v)).find(|c| !num_traits::Zero::is_zero(c));
        let Some(lead) = lead else { return true };
        let mut rel = vec![Rat::from(crate::Int::from(1)); rank];
        rel.push(Rat::from(crate::Int::from(-3)));
        let scaled: Vec<Rat> = rel.iter().map(|c| c * &lead).collect();
        (0..=rank).all(|v| {
            let want = if v < rank { &scaled[v] } else { &scaled[rank] };
            diff.coeff(v) == want.clone()
        })
    }

    /// Rewrites a `w`-ring linear form in the `t`-ring through the section.
    pub fn omega_form_to_t(&self, form: &LinearForm) -> LinearForm {
        let mut acc = LinearForm::zero(&self.tfree_ring);
        for (j, c) in form.support() {
            acc = acc.add(&self.omega_in_t[j].scale(c));
        }
        acc
    }

    /// Group kind.
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix entry (0-based).
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// Neighbors of node `i` in the diagram (0-based, sorted).
    pub fn adjacency(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// The positive roots.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive_roots
    }

    /// Weight coordinates of the simple root `alpha_i` (0-based `i`).
    pub fn simple_root_omega(&self, i: usize) -> Vec8 {
        let mut v = [0; 8];
        for j in 0..self.rank {
            v[j] = self.cartan[j][i];
        }
        v
    }

    /// Tests whether a weight vector is a positive root.
    pub fn is_positive_root(&self, v: &Vec8) -> bool {
        self.positive_omega.contains(v)
    }

    /// Tests the sign of a root vector. Panics if `v` is not a root.
    pub fn root_is_positive(&self, v: &Vec8) -> bool {
        if self.positive_omega.contains(v) {
            true
        } else {
            let neg: Vec8 = {
                let mut n = [0; 8];
                for (a, b) in n.iter_mut().zip(v) {
                    *a = -b;
                }
                n
            };
            assert!(
                self.positive_omega.contains(&neg),
                "vector {v:?} is not a root"
            );
            false
        }
    }

    /// The matrix of `s_i` on weight coordinates.
    pub fn reflection_matrix(&self, i: usize) -> &Mat8 {
        &self.reflection_matrices[i]
    }

    /// The ring `Q[w1..wl]` (all weights 1).
    pub fn omega_ring(&self) -> &Arc<RingSpec> {
        &self.omega_ring
    }

    /// The free ring `Q[t1..tl, t]`; the true weight ring is its quotient by
    /// `c1 - 3t`.
    pub fn tfree_ring(&self) -> &Arc<RingSpec> {
        &self.tfree_ring
    }

    /// `t_i` (`0 <= i < rank`) or `t` (`i == rank`) as a `w`-ring form.
    pub fn t_form(&self, i: usize) -> &LinearForm {
        &self.t_forms[i]
    }

    /// `w_j` as a `t`-ring form (the chosen section of `c1 = 3t`).
    pub fn omega_in_t(&self, j: usize) -> &LinearForm {
        &self.omega_in_t[j]
    }

    /// `c_i` (1-based `i`) expanded in the `w`-ring.
    pub fn c_poly(&self, i: usize) -> &Polynomial {
        &self.c_polys[i - 1]
    }

    /// `alpha_i` as a `w`-ring linear form.
    pub fn alpha_form(&self, i: usize) -> LinearForm {
        let v = self.simple_root_omega(i);
        LinearForm::from_ints(&self.omega_ring, &v[..self.rank])
    }

    /// Applies `s_i` to a `w`-ring linear form.
    pub fn reflect_linear(&self, i: usize, form: &LinearForm) -> LinearForm {
        // s_i fixes w_j for j != i and sends w_i to w_i - alpha_i, so the
        // form changes by -(coefficient of w_i) * alpha_i.
        let ci = form.coeff(i);
        if num_traits::Zero::is_zero(&ci) {
            return form.clone();
        }
        form.sub(&self.alpha_form(i).scale(&ci))
    }

    /// Applies `s_i` to a `w`-ring polynomial.
    pub fn reflect_poly(&self, i: usize, f: &Polynomial) -> Polynomial {
        assert_eq!(*f.ring(), self.omega_ring, "reflect_poly needs the w-ring");
        let image = Polynomial::var(&self.omega_ring, i)
            .sub_ref(&self.alpha_form(i).to_polynomial());
        f.substitute_var(i, &image)
    }

    /// Applies the derived `s_i` action to a `t`-ring polynomial. For
    /// `i != 2` this is the literal transposition of two `t`-variables; for
    /// `s_2` it is the literal affine-shaped formula. Both agree with the
    /// true action modulo `c1 - 3t`.
    pub fn reflect_tfree(&self, i: usize, f: &Polynomial) -> Polynomial {
        assert_eq!(
            *f.ring(),
            self.tfree_ring,
            "reflect_tfree needs the t-ring"
        );
        let assign: std::collections::BTreeMap<usize, Polynomial> = self.t_action[i]
            .iter()
            .enumerate()
            .filter(|(v, img)| {
                // Skip identity images to keep the substitution small.
                img.to_polynomial() != Polynomial::var(&self.tfree_ring, *v)
            })
            .map(|(v, img)| (v, img.to_polynomial()))
            .collect();
        f.substitute_many(&assign)
    }

    /// Applies the derived `s_i` action to a `t`-ring linear form.
    pub fn reflect_tfree_linear(&self, i: usize, form: &LinearForm) -> LinearForm {
        let mut acc = LinearForm::zero(&self.tfree_ring);
        for (v, c) in form.support() {
            acc = acc.add(&self.t_action[i][v].scale(c));
        }
        acc
    }

    /// The derived transposition `(a, b)` of `t`-variables for `s_i`
    /// (`i != 2`), 0-based.
    pub fn t_transposition(&self, i: usize) -> Option<(usize, usize)> {
        self.t_transpositions[i]
    }

    /// Maps a `t`-ring polynomial into the `w`-ring.
    pub fn tfree_to_omega(&self, f: &Polynomial) -> Polynomial {
        let images: Vec<Polynomial> = self
            .t_forms
            .iter()
            .map(LinearForm::to_polynomial)
            .collect();
        f.morph(&self.omega_ring, &images)
    }

    /// Maps a `w`-ring polynomial into the `t`-ring through the section.
    pub fn omega_to_tfree(&self, f: &Polynomial) -> Polynomial {
        let images: Vec<Polynomial> = self
            .omega_in_t
            .iter()
            .map(LinearForm::to_polynomial)
            .collect();
        f.morph(&self.tfree_ring, &images)
    }

    /// Parses a word of 1-based generator digits, e.g. `"342"`.
    pub fn parse_word(&self, s: &str) -> Result<Vec<u8>> {
        let mut out = Vec::with_capacity(s.len());
        for ch in s.chars() {
            let d = ch.to_digit(10).ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("bad word character {ch:?}"),
            })? as usize;
            if d < 1 || d > self.rank {
                return Err(Error::BadGenerator {
                    index: d,
                    rank: self.rank,
                });
            }
            out.push((d - 1) as u8);
        }
        Ok(out)
    }
}

/// Renders a 0-based word as the 1-based digit string.
pub fn word_string(word: &[u8]) -> String {
    word.iter().map(|&i| char::from(b'1' + i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_and_degrees() {
        for kind in GroupKind::all() {
            let rs = RootSystem::new(kind);
            assert_eq!(rs.positive_roots().len(), kind.positive_root_count());
        }
        assert_eq!(GroupKind::E6.weyl_order(), 51840);
        assert_eq!(GroupKind::E7.weyl_order(), 2903040);
        assert_eq!(GroupKind::E8.weyl_order(), 696729600);
        assert_eq!(GroupKind::E6.positive_root_count(), 36);
        assert_eq!(GroupKind::E7.positive_root_count(), 63);
        assert_eq!(GroupKind::E8.positive_root_count(), 120);
    }

    #[test]
    fn adjacency_shape() {
        let rs = RootSystem::new(GroupKind::E8);
        // Node 2 (0-based 1) hangs off node 4 (0-based 3).
        assert_eq!(rs.adjacency(1), &[3]);
        assert_eq!(rs.adjacency(0), &[2]);
        assert_eq!(rs.adjacency(3), &[1, 2, 4]);
        assert_eq!(rs.adjacency(7), &[6]);
    }

    #[test]
    fn simple_roots_in_weight_coordinates() {
        let rs = RootSystem::new(GroupKind::E6);
        // alpha_1 = 2w1 - w3.
        assert_eq!(rs.simple_root_omega(0), [2, 0, -1, 0, 0, 0, 0, 0]);
        // alpha_2 = 2w2 - w4.
        assert_eq!(rs.simple_root_omega(1), [0, 2, 0, -1, 0, 0, 0, 0]);
        // alpha_4 = -w2 - w3 + 2w4 - w5.
        assert_eq!(rs.simple_root_omega(3), [0, -1, -1, 2, -1, 0, 0, 0]);
    }

    #[test]
    fn reflection_matrices_are_involutions() {
        for kind in GroupKind::all() {
            let rs = RootSystem::new(kind);
            for i in 0..kind.rank() {
                let m = rs.reflection_matrix(i);
                assert_eq!(mat_mul(m, m), mat_identity(), "{kind} s{}", i + 1);
            }
        }
    }

    #[test]
    fn reflections_permute_roots() {
        let rs = RootSystem::new(GroupKind::E7);
        for i in 0..7 {
            let m = rs.reflection_matrix(i);
            for r in rs.positive_roots() {
                let image = mat_apply(m, &r.omega);
                // The image is a root; only alpha_i changes sign.
                let pos = rs.root_is_positive(&image);
                if r.omega == rs.simple_root_omega(i) {
                    assert!(!pos);
                } else {
                    assert!(pos, "s{} must permute the other positives", i + 1);
                }
            }
        }
    }

    #[test]
    fn t_basis_identity_c1_eq_3t() {
        for kind in GroupKind::all() {
            let rs = RootSystem::new(kind);
            let three_t = rs.t_form(kind.rank()).to_polynomial().scale_int(3);
            assert_eq!(rs.c_poly(1), &three_t);
        }
    }

    #[test]
    fn t_transpositions_follow_the_chain() {
        let rs = RootSystem::new(GroupKind::E8);
        // Chain nodes 1,3,4,5,6,7,8 give adjacent transpositions of
        // t1..t8; node 2 gives none.
        let expect = [
            Some((0, 1)),
            None,
            Some((1, 2)),
            Some((2, 3)),
            Some((3, 4)),
            Some((4, 5)),
            Some((5, 6)),
            Some((6, 7)),
        ];
        for i in 0..8 {
            assert_eq!(rs.t_transposition(i), expect[i], "s{}", i + 1);
        }
    }

    #[test]
    fn s2_action_spot_checks() {
        let rs = RootSystem::new(GroupKind::E6);
        // s2(t) = w4 - w2 in w-coordinates.
        let reflected = rs.reflect_linear(1, rs.t_form(6));
        let w = rs.omega_ring();
        let expect = LinearForm::from_ints(w, &[0, -1, 0, 1, 0, 0]);
        assert_eq!(reflected, expect);
        // s1(t1) = t2 in w-coordinates.
        let reflected = rs.reflect_linear(0, rs.t_form(0));
        assert_eq!(&reflected, rs.t_form(1));
    }

    #[test]
    fn tfree_action_matches_omega_action() {
        // The literal t-ring action must agree with the true action after
        // mapping to the w-ring, on polynomial (not just linear) inputs.
        let rs = RootSystem::new(GroupKind::E6);
        let f = Polynomial::parse(
            rs.tfree_ring(),
            "t1^2*t2 - 3*t*t4*t6 + t^3 - t2*t3*t5",
        )
        .unwrap();
        for i in 0..6 {
            let via_t = rs.tfree_to_omega(&rs.reflect_tfree(i, &f));
            let via_w = rs.reflect_poly(i, &rs.tfree_to_omega(&f));
            assert_eq!(via_t, via_w, "s{}", i + 1);
        }
    }

    #[test]
    fn omega_section_roundtrip() {
        let rs = RootSystem::new(GroupKind::E7);
        // w -> t -> w is the identity (the section is exact on w).
        let f = Polynomial::parse(rs.omega_ring(), "w1*w7 - 2*w2^2 + w5").unwrap();
        assert_eq!(rs.tfree_to_omega(&rs.omega_to_tfree(&f)), f);
    }

    #[test]
    fn word_parse_and_render() {
        let rs = RootSystem::new(GroupKind::E6);
        let w = rs.parse_word("342").unwrap();
        assert_eq!(w, vec![2, 3, 1]);
        assert_eq!(word_string(&w), "342");
        assert!(rs.parse_word("347").is_err());
        assert!(rs.parse_word("x").is_err());
    }
}
