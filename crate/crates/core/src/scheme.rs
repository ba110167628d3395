//! Association schemes in matrix form.
//!
//! A scheme of order `m` is stored both as a per-cell relation index (the
//! "coloring") and as one bitset matrix per relation. Points are labelled
//! `1..=m` at every public entry point.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitMatrix;
use crate::error::{AxiomError, Error, Result};
use crate::hadamard::SignMatrix;

/// Structure constants `p^k_ij` with `A_i A_j = sum_k p^k_ij A_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTable {
    rank: usize,
    entries: Vec<u64>,
    symmetric: bool,
    commutative: bool,
}

impl IntersectionTable {
    /// `p^k_ij`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.entries[(i * self.rank + j) * self.rank + k]
    }

    /// Number of relations, `d + 1`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self) -> usize {
        self.rank - 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// Coefficients of `A_i A_j` on `A_0..A_d`.
    pub fn product(&self, i: usize, j: usize) -> Vec<u64> {
        (0..self.rank).map(|k| self.get(i, j, k)).collect()
    }
}

/// Checks the four scheme axioms and returns the intersection numbers.
///
/// Each `p^k_ij` is read from the first cell of `A_k` and then checked
/// against every other cell of `A_k`.
pub fn verify_scheme_axioms(relations: &[BitMatrix]) -> Result<IntersectionTable, AxiomError> {
    let first = relations.first().ok_or(AxiomError::Empty)?;
    let m = first.order();
    for (r, rel) in relations.iter().enumerate() {
        if rel.order() != m {
            return Err(AxiomError::OrderMismatch {
                relation: r,
                expected: m,
                found: rel.order(),
            });
        }
    }
    if *first != BitMatrix::identity(m) {
        return Err(AxiomError::IdentityMissing);
    }
    let colors = coloring_of(relations)?;
    if let Some(relation) = relations.iter().position(|r| r.count_ones() == 0) {
        return Err(AxiomError::EmptyRelation { relation });
    }
    let transposes: Vec<BitMatrix> = relations.iter().map(BitMatrix::transpose).collect();
    let mut symmetric = true;
    for (i, t) in transposes.iter().enumerate() {
        if !relations.contains(t) {
            return Err(AxiomError::TransposeMissing { relation: i });
        }
        symmetric &= *t == relations[i];
    }

    let rank = relations.len();
    let anchors: Vec<(usize, usize)> = relations
        .iter()
        .map(|rel| {
            (0..m)
                .find_map(|x| rel.row_ones(x).next().map(|y| (x, y)))
                .expect("relations are non-empty")
        })
        .collect();
    let mut entries = vec![0u64; rank * rank * rank];
    for (i, a) in relations.iter().enumerate() {
        for (j, bt) in transposes.iter().enumerate() {
            let base = (i * rank + j) * rank;
            for (k, &(x, y)) in anchors.iter().enumerate() {
                entries[base + k] = a.product_entry(bt, x, y) as u64;
            }
            for x in 0..m {
                for y in 0..m {
                    let k = usize::from(colors[x * m + y]);
                    if a.product_entry(bt, x, y) as u64 != entries[base + k] {
                        return Err(AxiomError::ProductNotConstant { i, j, k });
                    }
                }
            }
        }
    }
    let commutative = (0..rank).all(|i| {
        (0..rank).all(|j| (0..rank).all(|k| entries[(i * rank + j) * rank + k] == entries[(j * rank + i) * rank + k]))
    });
    Ok(IntersectionTable {
        rank,
        entries,
        symmetric,
        commutative,
    })
}

fn coloring_of(relations: &[BitMatrix]) -> Result<Vec<u8>, AxiomError> {
    let m = relations[0].order();
    let mut colors = vec![u8::MAX; m * m];
    let mut counts = vec![0usize; m * m];
    for (r, rel) in relations.iter().enumerate() {
        for x in 0..m {
            for y in rel.row_ones(x) {
                counts[x * m + y] += 1;
                colors[x * m + y] = r as u8;
            }
        }
    }
    for (cell, &count) in counts.iter().enumerate() {
        if count != 1 {
            return Err(AxiomError::CellCoverage {
                row: cell / m + 1,
                col: cell % m + 1,
                count,
            });
        }
    }
    Ok(colors)
}

/// A verified association scheme `{A_0 = I, A_1, ..., A_d}`.
#[derive(Clone)]
pub struct AssociationScheme {
    order: usize,
    colors: Vec<u8>,
    relations: Vec<BitMatrix>,
    transposes: Vec<BitMatrix>,
    transpose_index: Vec<usize>,
    table: IntersectionTable,
}

/// Most relations any scheme may have, so that a cell's relation fits in a byte.
pub const MAX_RANK: usize = 256;

impl AssociationScheme {
    pub fn from_relations(relations: Vec<BitMatrix>) -> Result<Self> {
        if relations.len() > MAX_RANK {
            return Err(Error::InvalidMatrix(format!(
                "{} relations exceed the limit of {MAX_RANK}",
                relations.len()
            )));
        }
        let table = verify_scheme_axioms(&relations)?;
        let order = relations[0].order();
        let colors = coloring_of(&relations)?;
        let transposes: Vec<BitMatrix> = relations.iter().map(BitMatrix::transpose).collect();
        let transpose_index = transposes
            .iter()
            .map(|t| relations.iter().position(|r| r == t).expect("checked by axioms"))
            .collect();
        Ok(AssociationScheme {
            order,
            colors,
            relations,
            transposes,
            transpose_index,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The class `d`.
    pub fn class(&self) -> usize {
        self.relations.len() - 1
    }

    pub fn relations(&self) -> &[BitMatrix] {
        &self.relations
    }

    pub fn relation(&self, i: usize) -> &BitMatrix {
        &self.relations[i]
    }

    pub fn transpose_of(&self, i: usize) -> usize {
        self.transpose_index[i]
    }

    pub fn intersection_numbers(&self) -> &IntersectionTable {
        &self.table
    }

    pub fn is_symmetric(&self) -> bool {
        self.table.is_symmetric()
    }

    pub fn is_commutative(&self) -> bool {
        self.table.is_commutative()
    }

    /// `true` for a class-2 scheme with `A_1ᵀ = A_2`.
    pub fn is_non_symmetric_class2(&self) -> bool {
        self.class() == 2 && self.transpose_index[1] == 2
    }

    /// Index `k` of the relation containing the pair `(x, y)`, 1-based points.
    pub fn relation_of(&self, x: usize, y: usize) -> Result<usize> {
        self.check_point(x)?;
        self.check_point(y)?;
        Ok(self.color(x - 1, y - 1))
    }

    pub(crate) fn check_point(&self, p: usize) -> Result<()> {
        if p == 0 || p > self.order {
            return Err(Error::PointOutOfRange {
                point: p,
                order: self.order,
            });
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn color(&self, x: usize, y: usize) -> usize {
        usize::from(self.colors[x * self.order + y])
    }

    pub(crate) fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub(crate) fn transpose(&self, i: usize) -> &BitMatrix {
        &self.transposes[i]
    }

    pub fn to_coloring(&self) -> RelationColoring {
        RelationColoring {
            order: self.order,
            class: self.class(),
            colors: self.colors.clone(),
        }
    }

    fn require_non_symmetric_class2(&self) -> Result<()> {
        if !self.is_non_symmetric_class2() {
            return Err(Error::NotNonSymmetricClass2);
        }
        Ok(())
    }
}

impl PartialEq for AssociationScheme {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.relations == other.relations
    }
}

impl Eq for AssociationScheme {}

impl fmt::Debug for AssociationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AssociationScheme")
            .field("order", &self.order)
            .field("class", &self.class())
            .finish_non_exhaustive()
    }
}

/// Extracts `{I, A_1, A_2}` from a normalized skew-Hadamard matrix of order `n >= 4`.
///
/// After dropping the border, the remaining block is `I + A_1 - A_2`.
pub fn scheme_from_skew_hadamard(h: &SignMatrix) -> Result<AssociationScheme> {
    if !h.is_skew_hadamard() {
        return Err(Error::NotSkewHadamard);
    }
    if !h.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let n = h.order();
    if n < 4 {
        return Err(Error::HadamardTooSmall(n));
    }
    let m = n - 1;
    let a1 = BitMatrix::from_fn(m, |i, j| i != j && h.entry(i + 1, j + 1) == 1);
    let a2 = BitMatrix::from_fn(m, |i, j| h.entry(i + 1, j + 1) == -1);
    AssociationScheme::from_relations(vec![BitMatrix::identity(m), a1, a2])
}

/// Builds the order-`2m+1` scheme whose `B_1` has the block form
///
/// ```text
/// [ A_1  0  A_0+A_1 ]
/// [ 1    0  0       ]
/// [ A_1  1  A_2     ]
/// ```
///
/// Point `m + 1` is the distinguished middle point.
pub fn doubled_scheme(x: &AssociationScheme) -> Result<AssociationScheme> {
    x.require_non_symmetric_class2()?;
    let m = x.order();
    let (a1, a2) = (x.relation(1), x.relation(2));
    let mid = m;
    let b1 = BitMatrix::from_fn(2 * m + 1, |r, c| match (block(r, mid), block(c, mid)) {
        (Block::Low(i), Block::Low(j)) => a1.get(i, j),
        (Block::Low(i), Block::High(j)) => i == j || a1.get(i, j),
        (Block::Mid, Block::Low(_)) => true,
        (Block::High(i), Block::Low(j)) => a1.get(i, j),
        (Block::High(_), Block::Mid) => true,
        (Block::High(i), Block::High(j)) => a2.get(i, j),
        _ => false,
    });
    let b2 = b1.transpose();
    AssociationScheme::from_relations(vec![BitMatrix::identity(2 * m + 1), b1, b2])
}

enum Block {
    Low(usize),
    Mid,
    High(usize),
}

fn block(p: usize, mid: usize) -> Block {
    use std::cmp::Ordering::*;
    match p.cmp(&mid) {
        Less => Block::Low(p),
        Equal => Block::Mid,
        Greater => Block::High(p - mid - 1),
    }
}

/// Checks the class-2 product formulas
///
/// ```text
/// A_1^2   = (m-3)/4 A_1 + (m+1)/4 A_2
/// A_2^2   = (m+1)/4 A_1 + (m-3)/4 A_2
/// A_1 A_2 = A_2 A_1 = (m-1)/2 A_0 + (m-3)/4 (A_1 + A_2)
/// ```
///
/// entrywise, together with `(A_1 - (m-1)/2 I)(4 A_1^2 + 4 A_1 + (m+1) I) = 0`,
/// the integer form of the eigenvalue statement.
pub fn verify_class2_products(x: &AssociationScheme) -> Result<bool> {
    x.require_non_symmetric_class2()?;
    let m = x.order();
    if m % 4 != 3 {
        return Err(Error::OrderResidue(m));
    }
    let (lo, hi, diag) = ((m - 3) / 4, (m + 1) / 4, (m - 1) / 2);
    let (a1, a2) = (x.relation(1), x.relation(2));
    let (a1t, a2t) = (x.transpose(1), x.transpose(2));
    for r in 0..m {
        for c in 0..m {
            let (in1, in2) = (a1.get(r, c), a2.get(r, c));
            let pick = |on1: usize, on2: usize, on0: usize| {
                if r == c {
                    on0
                } else if in1 {
                    on1
                } else {
                    debug_assert!(in2);
                    on2
                }
            };
            if a1.product_entry(a1t, r, c) != pick(lo, hi, 0)
                || a2.product_entry(a2t, r, c) != pick(hi, lo, 0)
                || a1.product_entry(a2t, r, c) != pick(lo, lo, diag)
                || a2.product_entry(a1t, r, c) != pick(lo, lo, diag)
            {
                return Ok(false);
            }
        }
    }
    Ok(minimal_polynomial_vanishes(a1))
}

fn minimal_polynomial_vanishes(a1: &BitMatrix) -> bool {
    let m = a1.order();
    let a: Vec<i64> = (0..m * m).map(|c| i64::from(a1.get(c / m, c % m))).collect();
    let a_sq = mat_mul(&a, &a, m);
    let eigen = ((m as i64) - 1) / 2;
    let mut left = a.clone();
    let mut right: Vec<i64> = a_sq.iter().zip(&a).map(|(s, x)| 4 * s + 4 * x).collect();
    for i in 0..m {
        left[i * m + i] -= eigen;
        right[i * m + i] += m as i64 + 1;
    }
    mat_mul(&left, &right, m).iter().all(|&v| v == 0)
}

fn mat_mul(a: &[i64], b: &[i64], m: usize) -> Vec<i64> {
    let mut out = vec![0i64; m * m];
    for i in 0..m {
        for k in 0..m {
            let aik = a[i * m + k];
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                out[i * m + j] += aik * b[k * m + j];
            }
        }
    }
    out
}

/// Unverified relation coloring as read from an `.asc` file.
///
/// Cell `(x, y)` holds the index `k` with `(A_k)_xy = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationColoring {
    order: usize,
    class: usize,
    colors: Vec<u8>,
}

impl RelationColoring {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn relations(&self) -> Vec<BitMatrix> {
        let m = self.order;
        (0..=self.class)
            .map(|k| BitMatrix::from_fn(m, |x, y| usize::from(self.colors[x * m + y]) == k))
            .collect()
    }

    pub fn into_scheme(self) -> Result<AssociationScheme> {
        AssociationScheme::from_relations(self.relations())
    }
}

/// `.asc` text: `"m d"`, then `m` lines of `m` relation indices.
impl fmt::Display for RelationColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.order, self.class)?;
        for row in self.colors.chunks(self.order) {
            let line: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for RelationColoring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.split('\n').map(|l| l.trim_end_matches('\r'));
        let header = lines.next().unwrap_or_default();
        let nums: Vec<&str> = header.split(' ').collect();
        let parse_num = |t: &str| -> Result<usize> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(1, format!("invalid number {t:?}")));
            }
            t.parse().map_err(|_| Error::parse(1, format!("invalid number {t:?}")))
        };
        let [m_tok, d_tok] = nums[..] else {
            return Err(Error::parse(1, "header must be \"m d\""));
        };
        let (order, class) = (parse_num(m_tok)?, parse_num(d_tok)?);
        if order == 0 || order > crate::hadamard::MAX_ORDER {
            return Err(Error::parse(1, format!("order {order} out of range")));
        }
        if class >= MAX_RANK {
            return Err(Error::parse(1, format!("class {class} out of range")));
        }
        let mut colors = Vec::with_capacity(order * order);
        for row in 0..order {
            let lineno = row + 2;
            let line = lines.next().ok_or_else(|| Error::parse(lineno, "missing row"))?;
            let before = colors.len();
            for tok in line.split(' ') {
                let k = (!tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit()))
                    .then(|| tok.parse::<usize>().ok())
                    .flatten()
                    .filter(|&k| k <= class)
                    .ok_or_else(|| Error::parse(lineno, format!("invalid relation index {tok:?}")))?;
                colors.push(k as u8);
            }
            if colors.len() - before != order {
                return Err(Error::parse(
                    lineno,
                    format!("expected {order} entries, got {}", colors.len() - before),
                ));
            }
        }
        match (lines.next(), lines.next()) {
            (None, _) | (Some(""), None) => {}
            _ => return Err(Error::parse(order + 2, "trailing content")),
        }
        Ok(RelationColoring { order, class, colors })
    }
}

impl fmt::Display for AssociationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_coloring().fmt(f)
    }
}

impl FromStr for AssociationScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<RelationColoring>()?.into_scheme()
    }
}
