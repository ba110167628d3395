//! Skew-Hadamard matrices: Paley seeds, sign normalization and doubling.
//!
//! A [`SignMatrix`] holds entries in {+1, -1}. Everything here is exact
//! integer arithmetic; there are no tolerances.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest accepted order. Keeps every Gram entry well inside `i32`.
pub const MAX_ORDER: usize = 1 << 15;

/// Square matrix over {+1, -1}. Rows and columns are indexed from 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    /// Builds a matrix from row-major entries, each of which must be +1 or -1.
    pub fn new(order: usize, entries: Vec<i8>) -> Result<Self> {
        check_order(order)?;
        if entries.len() != order * order {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries, got {}",
                order * order,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&e| e != 1 && e != -1) {
            return Err(Error::InvalidMatrix(format!("entry {bad} is not +1 or -1")));
        }
        Ok(SignMatrix { order, entries })
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        Self::new(order, rows.concat())
    }

    fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i8) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        debug_assert!(entries.iter().all(|&e| e == 1 || e == -1));
        SignMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    /// `M Mᵀ = n I`.
    pub fn is_hadamard(&self) -> bool {
        let n = self.order as i32;
        for i in 0..self.order {
            for j in i..self.order {
                let dot: i32 = self
                    .row(i)
                    .iter()
                    .zip(self.row(j))
                    .map(|(&a, &b)| i32::from(a) * i32::from(b))
                    .sum();
                let want = if i == j { n } else { 0 };
                if dot != want {
                    return false;
                }
            }
        }
        true
    }

    /// Hadamard with `M - I` skew-symmetric: unit diagonal and `M[i][j] = -M[j][i]` off it.
    pub fn is_skew_hadamard(&self) -> bool {
        self.has_skew_shape() && self.is_hadamard()
    }

    fn has_skew_shape(&self) -> bool {
        (0..self.order)
            .all(|i| self.entry(i, i) == 1 && (i + 1..self.order).all(|j| self.entry(i, j) == -self.entry(j, i)))
    }

    /// First row all +1 and first column `(+1, -1, ..., -1)`.
    pub fn is_normalized(&self) -> bool {
        self.row(0).iter().all(|&e| e == 1) && (1..self.order).all(|i| self.entry(i, 0) == -1)
    }

    /// Returns `D H D` with `D = diag(H[0][0], ..., H[0][n-1])`.
    ///
    /// Conjugating by a diagonal sign matrix keeps `H - I` skew, and since
    /// `H[0][0] = 1` the result has an all-ones first row.
    pub fn normalize(&self) -> Result<SignMatrix> {
        if !self.is_skew_hadamard() {
            return Err(Error::NotSkewHadamard);
        }
        let d = self.row(0);
        Ok(SignMatrix::from_fn(self.order, |i, j| d[i] * self.entry(i, j) * d[j]))
    }

    /// The doubling `[[I+S, I+S], [-I+S, I-S]]` with `S = H - I`.
    pub fn double(&self) -> Result<SignMatrix> {
        if !self.is_skew_hadamard() {
            return Err(Error::NotSkewHadamard);
        }
        let n = self.order;
        check_order(2 * n)?;
        // S has zero diagonal, so I + S = H and I - S = 2I - H.
        let s = |i: usize, j: usize| if i == j { 0 } else { self.entry(i, j) };
        let doubled = SignMatrix::from_fn(2 * n, |r, c| {
            let (bi, i) = (r / n, r % n);
            let (bj, j) = (c / n, c % n);
            let id = i8::from(i == j);
            match (bi, bj) {
                (0, _) => id + s(i, j),
                (1, 0) => -id + s(i, j),
                _ => id - s(i, j),
            }
        });
        debug_assert!(doubled.is_skew_hadamard());
        Ok(doubled)
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::OrderOutOfRange { order, max: MAX_ORDER });
    }
    Ok(())
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Paley type I skew-Hadamard matrix of order `q + 1` for a prime `q = 3 (mod 4)`.
///
/// Row and column 0 form the border; index `a + 1` corresponds to the field
/// element `a`. The core is `I + Q` with `Q[a][b] = chi(b - a)`, so the result is
/// already normalized.
pub fn paley_skew_hadamard(q: u64) -> Result<SignMatrix> {
    if !is_prime(q) || q % 4 != 3 {
        return Err(Error::InvalidPaleyPrime { q });
    }
    let q = usize::try_from(q).map_err(|_| Error::InvalidPaleyPrime { q })?;
    check_order(q + 1)?;
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    Ok(SignMatrix::from_fn(q + 1, |i, j| match (i, j) {
        (0, _) => 1,
        (_, 0) => -1,
        _ if i == j => 1,
        _ => {
            let diff = (j + q - i) % q;
            if square[diff] {
                1
            } else {
                -1
            }
        }
    }))
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignMatrix {}", self)
    }
}

/// `.shm` text: the order on the first line, then one row of `+`/`-` tokens per line.
impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for i in 0..self.order {
            let mut line = String::with_capacity(2 * self.order);
            for (j, &e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    line.push(' ');
                }
                line.push(if e == 1 { '+' } else { '-' });
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl FromStr for SignMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.split('\n');
        let header = lines.next().ok_or_else(|| Error::parse(1, "missing order"))?;
        let order: usize = header
            .trim_end_matches('\r')
            .parse()
            .map_err(|_| Error::parse(1, format!("invalid order {header:?}")))?;
        check_order(order).map_err(|e| Error::parse(1, e.to_string()))?;
        let mut entries = Vec::with_capacity(order * order);
        for row in 0..order {
            let lineno = row + 2;
            let line = lines
                .next()
                .ok_or_else(|| Error::parse(lineno, "missing row"))?
                .trim_end_matches('\r');
            let before = entries.len();
            for tok in line.split(' ') {
                match tok {
                    "+" => entries.push(1),
                    "-" => entries.push(-1),
                    _ => return Err(Error::parse(lineno, format!("invalid token {tok:?}"))),
                }
            }
            if entries.len() - before != order {
                return Err(Error::parse(
                    lineno,
                    format!("expected {order} entries, got {}", entries.len() - before),
                ));
            }
        }
        // Only a single trailing newline may follow the last row.
        match (lines.next(), lines.next()) {
            (None, _) | (Some(""), None) => {}
            _ => return Err(Error::parse(order + 2, "trailing content")),
        }
        Ok(SignMatrix { order, entries })
    }
}
