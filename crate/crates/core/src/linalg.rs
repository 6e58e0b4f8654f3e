//! Integer matrix normal forms: Smith form, column-lattice membership and
//! ranks over small prime fields.
//!
//! Matrices are dense `Vec<Vec<Int>>` in row-major order; the sizes here are
//! per-degree monomial counts, small enough that dense exact arithmetic is
//! the simplest correct choice.

use crate::Int;
use num_traits::{Signed, Zero};

/// Result of the Smith reduction `U * A * V = D`.
#[derive(Debug, Clone)]
pub struct Smith {
    /// Nonzero diagonal entries `d1 | d2 | ...` of `D`, positive.
    pub diag: Vec<Int>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    /// The left transform `U` (square, unimodular), kept when requested so
    /// that column-lattice membership can be decided.
    pub u: Option<Vec<Vec<Int>>>,
}

fn find_min_nonzero(m: &[Vec<Int>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.abs() < m[bi][bj].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Computes the Smith normal form of `a`. With `want_u` the left transform
/// is tracked through the row operations.
pub fn smith(a: &[Vec<Int>], want_u: bool) -> Smith {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Int>> = a.to_vec();
    let mut u: Option<Vec<Vec<Int>>> = want_u.then(|| {
        (0..rows)
            .map(|i| {
                (0..rows)
                    .map(|j| if i == j { Int::from(1) } else { Int::zero() })
                    .collect()
            })
            .collect()
    });
    let mut t = 0usize;
    while t < rows.min(cols) {
        let Some((pi, pj)) = find_min_nonzero(&m, t) else {
            break;
        };
        m.swap(t, pi);
        if let Some(u) = u.as_mut() {
            u.swap(t, pi);
        }
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        'reduce: loop {
            // Clear the column below the pivot.
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = &m[i][t] / &m[t][t];
                if !q.is_zero() {
                    for j in t..cols {
                        let s = &q * &m[t][j];
                        m[i][j] -= s;
                    }
                    if let Some(u) = u.as_mut() {
                        for j in 0..rows {
                            let s = &q * &u[t][j];
                            u[i][j] -= s;
                        }
                    }
                }
                if !m[i][t].is_zero() {
                    // Remainder is smaller than the pivot; promote it.
                    m.swap(t, i);
                    if let Some(u) = u.as_mut() {
                        u.swap(t, i);
                    }
                    continue 'reduce;
                }
            }
            // Clear the row right of the pivot.
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = &m[t][j] / &m[t][t];
                if !q.is_zero() {
                    for row in m.iter_mut().skip(t) {
                        let s = &q * &row[t];
                        row[j] -= s;
                    }
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    continue 'reduce;
                }
            }
            // The pivot must divide every remaining entry; if not, fold the
            // offending row in and reduce again.
            let piv = m[t][t].clone();
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&m[i][j] % &piv).is_zero() {
                        for k in 0..cols {
                            let v = m[i][k].clone();
                            m[t][k] += v;
                        }
                        if let Some(u) = u.as_mut() {
                            for k in 0..rows {
                                let v = u[i][k].clone();
                                u[t][k] += v;
                            }
                        }
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        t += 1;
    }
    // Positive diagonal.
    for k in 0..t {
        if m[k][k].is_negative() {
            for j in 0..cols {
                m[k][j] = -m[k][j].clone();
            }
            if let Some(u) = u.as_mut() {
                for j in 0..rows {
                    u[k][j] = -u[k][j].clone();
                }
            }
        }
    }
    let diag: Vec<Int> = (0..t).map(|k| m[k][k].clone()).collect();
    debug_assert!(diag.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    Smith {
        diag,
        rank: t,
        u,
    }
}

/// Decides whether `b` lies in the lattice spanned by the columns of the
/// matrix whose Smith form (with transform) is given.
pub fn column_lattice_contains(s: &Smith, b: &[Int]) -> bool {
    let u = s
        .u
        .as_ref()
        .expect("membership needs the left transform");
    let rows = u.len();
    assert_eq!(b.len(), rows, "vector length must match row count");
    for (k, urow) in u.iter().enumerate() {
        let mut acc = Int::zero();
        for (uv, bv) in urow.iter().zip(b) {
            acc += uv * bv;
        }
        if k < s.rank {
            if !(&acc % &s.diag[k]).is_zero() {
                return false;
            }
        } else if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Rank of the matrix over the field with `p` elements.
pub fn rank_mod_p(a: &[Vec<Int>], p: u64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let pbig = Int::from(p);
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    let r = ((v % &pbig) + &pbig) % &pbig;
                    u64::try_from(r).expect("residue fits")
                })
                .collect()
        })
        .collect();
    let inv = |x: u64| -> u64 {
        // Fermat inverse; p is a small prime.
        let mut acc = 1u64;
        let mut base = x % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0usize;
    let mut col = 0usize;
    while rank < rows && col < cols {
        let Some(pivot) = (rank..rows).find(|&i| m[i][col] != 0) else {
            col += 1;
            continue;
        };
        m.swap(rank, pivot);
        let pi = inv(m[rank][col]);
        for j in col..cols {
            m[rank][j] = m[rank][j] * pi % p;
        }
        for i in 0..rows {
            if i != rank && m[i][col] != 0 {
                let f = m[i][col];
                for j in col..cols {
                    m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Int::from(v)).collect())
            .collect()
    }

    fn diag_i64(s: &Smith) -> Vec<i64> {
        s.diag.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn smith_of_diagonal_merges_coprime_factors() {
        let s = smith(&mat(&[&[2, 0], &[0, 3]]), false);
        assert_eq!(diag_i64(&s), vec![1, 6]);
    }

    #[test]
    fn smith_with_common_factor() {
        let s = smith(&mat(&[&[2, 4], &[6, 8]]), false);
        assert_eq!(diag_i64(&s), vec![2, 4]);
        let s = smith(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]), false);
        // d1 = gcd of entries; d1*d2 = gcd of 2x2 minors; product = |det|.
        assert_eq!(diag_i64(&s), vec![2, 2, 156]);
    }

    #[test]
    fn smith_of_rank_deficient_matrix() {
        let s = smith(&mat(&[&[1, 2], &[2, 4], &[3, 6]]), false);
        assert_eq!(diag_i64(&s), vec![1]);
        assert_eq!(s.rank, 1);
    }

    #[test]
    fn membership_in_column_lattice() {
        // Columns (2,0) and (0,2): the even sublattice.
        let s = smith(&mat(&[&[2, 0], &[0, 2]]), true);
        let b = |x: i64, y: i64| vec![Int::from(x), Int::from(y)];
        assert!(column_lattice_contains(&s, &b(4, -2)));
        assert!(!column_lattice_contains(&s, &b(1, 0)));
        // A rank-deficient example: the lattice spanned by (1,2) alone.
        let s = smith(&mat(&[&[1], &[2]]), true);
        assert!(column_lattice_contains(&s, &b(3, 6)));
        assert!(!column_lattice_contains(&s, &b(3, 5)));
    }

    #[test]
    fn transform_consistency_on_a_fixed_matrix() {
        // U*A*V = D implies membership answers match brute force over a box.
        let a = mat(&[&[2, 1, 0], &[0, 3, 3], &[2, 4, 3]]);
        let s = smith(&a, true);
        assert_eq!(s.diag.iter().product::<Int>(), Int::from(3)); // |det| = 3
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                for z in -3i64..=3 {
                    let b: Vec<Int> = (0..3)
                        .map(|r| {
                            &a[r][0] * Int::from(x)
                                + &a[r][1] * Int::from(y)
                                + &a[r][2] * Int::from(z)
                        })
                        .collect();
                    assert!(column_lattice_contains(&s, &b));
                }
            }
        }
        assert!(!column_lattice_contains(
            &s,
            &[Int::from(1), Int::from(0), Int::from(0)]
        ));
    }

    #[test]
    fn ranks_over_prime_fields() {
        let a = mat(&[&[2, 0], &[0, 3]]);
        assert_eq!(rank_mod_p(&a, 2), 1);
        assert_eq!(rank_mod_p(&a, 3), 1);
        assert_eq!(rank_mod_p(&a, 5), 2);
        let b = mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(rank_mod_p(&b, 5), 2);
    }
}
