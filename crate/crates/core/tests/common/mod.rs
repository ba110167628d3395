//! Independent reference implementations. Nothing here calls into the
//! library's algorithms; only raw entries are read out of library values.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use skewdouble::hadamard::SignMatrix;
use skewdouble::scheme::AssociationScheme;

pub type Mat = Vec<Vec<i64>>;

pub fn rows_of(h: &SignMatrix) -> Mat {
    let n = h.order();
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(h.entry(i, j))).collect())
        .collect()
}

pub fn relation_matrix(x: &AssociationScheme, i: usize) -> Mat {
    let m = x.order();
    let a = x.relation(i);
    (0..m)
        .map(|r| (0..m).map(|c| i64::from(a.get(r, c))).collect())
        .collect()
}

/// Cell colors `c[x][y]` (0-based points) read through `relation_of`.
pub fn colors_of(x: &AssociationScheme) -> Vec<Vec<usize>> {
    let m = x.order();
    (1..=m)
        .map(|p| (1..=m).map(|q| x.relation_of(p, q).unwrap()).collect())
        .collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

pub fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// `Σ c_k M_k`.
pub fn combo(terms: &[(i64, &Mat)]) -> Mat {
    let n = terms[0].1.len();
    let mut out = vec![vec![0i64; n]; n];
    for (c, m) in terms {
        for i in 0..n {
            for j in 0..n {
                out[i][j] += c * m[i][j];
            }
        }
    }
    out
}

/// `H Hᵀ = n I` by the definition.
pub fn gram_is_scalar(h: &Mat) -> bool {
    let n = h.len() as i64;
    let g = mul(h, &transpose(h));
    g == combo(&[(n, &identity(h.len()))])
}

/// Hadamard with `H + Hᵀ = 2I`.
pub fn naive_skew_hadamard(h: &Mat) -> bool {
    let n = h.len();
    gram_is_scalar(h) && (0..n).all(|i| (0..n).all(|j| h[i][j] + h[j][i] == if i == j { 2 } else { 0 }))
}

/// `[[I+S, I+S], [-I+S, I-S]]` written out entrywise.
pub fn naive_double(h: &Mat) -> Mat {
    let n = h.len();
    let s = |i: usize, j: usize| if i == j { 0 } else { h[i][j] };
    let id = |i: usize, j: usize| i64::from(i == j);
    let mut out = vec![vec![0i64; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = id(i, j) + s(i, j);
            out[i][j + n] = id(i, j) + s(i, j);
            out[i + n][j] = -id(i, j) + s(i, j);
            out[i + n][j + n] = id(i, j) - s(i, j);
        }
    }
    out
}

/// Sign changes making the first row all `+1`, then the inner block's
/// off-diagonal signs as colors 1 (`+`) and 2 (`-`).
pub fn naive_extract(h: &Mat) -> Vec<Vec<usize>> {
    let n = h.len();
    let d: Vec<i64> = (0..n).map(|j| h[0][j]).collect();
    let m = n - 1;
    let mut c = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i != j {
                let v = d[i + 1] * h[i + 1][j + 1] * d[j + 1];
                c[i][j] = if v == 1 { 1 } else { 2 };
            }
        }
    }
    c
}

/// Colors of the doubled scheme of order `2m + 1` built from the block
/// description of its first relation.
pub fn naive_doubled(c: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let m = c.len();
    let a1 = |i: usize, j: usize| c[i][j] == 1;
    let size = 2 * m + 1;
    let mut b1 = vec![vec![false; size]; size];
    for i in 0..m {
        for j in 0..m {
            b1[i][j] = a1(i, j);
            b1[i][j + m + 1] = i == j || a1(i, j);
            b1[i + m + 1][j] = a1(i, j);
            b1[i + m + 1][j + m + 1] = c[i][j] == 2;
        }
        b1[m][i] = true;
        b1[i + m + 1][m] = true;
    }
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        0
                    } else if b1[i][j] {
                        1
                    } else {
                        assert!(b1[j][i], "not a tournament at ({i}, {j})");
                        2
                    }
                })
                .collect()
        })
        .collect()
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn preserves(c: &[Vec<usize>], p: &[usize]) -> bool {
    let n = c.len();
    (0..n).all(|i| (0..n).all(|j| c[p[i]][p[j]] == c[i][j]))
}

/// All color-preserving permutations, as 1-based image lists.
pub fn brute_force_automorphisms(c: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let mut found = BTreeSet::new();
    for_each_permutation(c.len(), |p| {
        if preserves(c, p) {
            found.insert(p.iter().map(|v| v + 1).collect());
        }
    });
    found
}

/// Maps `t ↦ a t + b` over GF(q) on the Paley-scheme points, where point
/// `p` carries field element `p - 1`. Returns the 1-based images of every
/// such map (any `a ≠ 0`) that preserves the scheme.
pub fn affine_automorphisms(c: &[Vec<usize>], q: usize) -> Vec<Vec<usize>> {
    assert_eq!(c.len(), q);
    let mut out = Vec::new();
    for a in 1..q {
        for b in 0..q {
            let p: Vec<usize> = (0..q).map(|t| (a * t + b) % q).collect();
            if preserves(c, &p) {
                out.push(p.iter().map(|v| v + 1).collect());
            }
        }
    }
    out
}

pub fn quadratic_residues(q: usize) -> BTreeSet<usize> {
    (1..q).map(|t| t * t % q).collect()
}

/// Out-neighbourhoods in color 1 as hash sets, 1-based.
pub fn out_sets(c: &[Vec<usize>]) -> Vec<HashSet<usize>> {
    let mut sets = vec![HashSet::new()];
    for row in c {
        sets.push((0..row.len()).filter(|&j| row[j] == 1).map(|j| j + 1).collect());
    }
    sets
}

pub fn naive_nu(sets: &[HashSet<usize>], i: usize, j: usize, k: usize) -> usize {
    sets[i]
        .iter()
        .filter(|v| sets[j].contains(v) && sets[k].contains(v))
        .count()
}

/// Classical Paley tournament colors on GF(q): `t → u` when `u - t` is a
/// nonzero square. Point `p` carries `p - 1`.
pub fn paley_tournament(q: usize) -> Vec<Vec<usize>> {
    let qr = quadratic_residues(q);
    (0..q)
        .map(|t| {
            (0..q)
                .map(|u| {
                    if t == u {
                        0
                    } else if qr.contains(&((u + q - t) % q)) {
                        1
                    } else {
                        2
                    }
                })
                .collect()
        })
        .collect()
}
