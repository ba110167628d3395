//! Common out-neighbourhoods of pairs and triples in the digraph of `B_1`.
//!
//! `N(i)` is the set of `j` with `(B_1)_ij = 1`, and `nu(i, j, k)` is
//! `|N(i) ∩ N(j) ∩ N(k)|`. On a doubled scheme of order `2n - 1` with `n >= 8`
//! the maximum of `nu` is `(n - 2)/2`, attained exactly on the triples
//! `(a, n, n + a)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::bits::{and3_count, and_count};
use crate::error::{Error, Result};
use crate::scheme::AssociationScheme;

pub type Triple = (usize, usize, usize);

/// Whether [`nu_extremes`] only reports, or also enforces the extremal characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuMode {
    Survey,
    AssertExtremal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuReport {
    pub order: usize,
    /// Common out-degree `|N(i, j)|` of any two distinct points.
    pub pair_size: usize,
    pub max_nu: usize,
    /// Triples attaining `max_nu`, lexicographic.
    pub extremal_triples: Vec<Triple>,
    /// `nu` value to number of triples with that value.
    pub histogram: BTreeMap<usize, u64>,
}

fn require_class2(y: &AssociationScheme) -> Result<()> {
    if !y.is_non_symmetric_class2() {
        return Err(Error::NotNonSymmetricClass2);
    }
    Ok(())
}

/// `N(i)`, sorted, with 1-based points.
pub fn neighbor_set(y: &AssociationScheme, i: usize) -> Result<Vec<usize>> {
    require_class2(y)?;
    y.check_point(i)?;
    Ok(y.relation(1).row_ones(i - 1).map(|p| p + 1).collect())
}

/// `|N(i) ∩ N(j)|` for distinct points.
pub fn pair_intersection_size(y: &AssociationScheme, i: usize, j: usize) -> Result<usize> {
    require_class2(y)?;
    y.check_point(i)?;
    y.check_point(j)?;
    if i == j {
        return Err(Error::PointsNotIncreasing);
    }
    let b1 = y.relation(1);
    Ok(and_count(b1.row(i - 1), b1.row(j - 1)))
}

/// `nu(i, j, k)` for `1 <= i < j < k <= order`.
pub fn nu(y: &AssociationScheme, i: usize, j: usize, k: usize) -> Result<usize> {
    require_class2(y)?;
    for p in [i, j, k] {
        y.check_point(p)?;
    }
    if !(i < j && j < k) {
        return Err(Error::PointsNotIncreasing);
    }
    let b1 = y.relation(1);
    Ok(and3_count(b1.row(i - 1), b1.row(j - 1), b1.row(k - 1)))
}

/// The middle point `n` of a doubled scheme of order `2n - 1`.
pub fn middle_point(y: &AssociationScheme) -> usize {
    y.order().div_ceil(2)
}

/// Enumerates `nu` over all `C(order, 3)` triples.
///
/// In [`NuMode::AssertExtremal`] the scheme must have order `2n - 1` with
/// `n >= 8`, and the report must show `max_nu = (n - 2)/2` attained on
/// exactly the `n - 1` triples `(a, n, n + a)`.
pub fn nu_extremes(y: &AssociationScheme, mode: NuMode) -> Result<NuReport> {
    require_class2(y)?;
    let order = y.order();
    if mode == NuMode::AssertExtremal {
        require_doubled_scale(order)?;
    }
    let b1 = y.relation(1);
    let words = b1.row(0).len();
    let mut pair = vec![0u64; words];
    let mut histogram = BTreeMap::new();
    let mut max_nu = 0;
    let mut extremal = Vec::new();
    for i in 0..order {
        for j in i + 1..order {
            for (w, (a, b)) in pair.iter_mut().zip(b1.row(i).iter().zip(b1.row(j))) {
                *w = a & b;
            }
            for k in j + 1..order {
                let v = and_count(&pair, b1.row(k));
                *histogram.entry(v).or_insert(0u64) += 1;
                if v > max_nu {
                    max_nu = v;
                    extremal.clear();
                }
                if v == max_nu {
                    extremal.push((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    let pair_size = y.intersection_numbers().get(1, 2, 1) as usize;
    let report = NuReport {
        order,
        pair_size,
        max_nu,
        extremal_triples: extremal,
        histogram,
    };
    if mode == NuMode::AssertExtremal {
        check_extremal_characterization(&report)?;
    }
    Ok(report)
}

/// Order `2n - 1` with `n` a multiple of 4 and `n >= 8`.
pub fn require_doubled_scale(order: usize) -> Result<()> {
    if order < 15 || order % 8 != 7 {
        return Err(Error::NotDoubledScale { order });
    }
    Ok(())
}

/// The `n - 1` triples `(a, n, n + a)` of a doubled scheme of order `2n - 1`.
pub fn expected_extremal_triples(order: usize) -> Vec<Triple> {
    let n = order.div_ceil(2);
    (1..n).map(|a| (a, n, n + a)).collect()
}

/// Checks a report of a doubled scheme against `max_nu = (n - 2)/2` attained
/// exactly on `(a, n, n + a)`.
pub fn check_extremal_characterization(report: &NuReport) -> Result<()> {
    let n = report.order.div_ceil(2);
    let bound = (n - 2) / 2;
    if report.max_nu != bound {
        return Err(Error::ExtremalTriplesViolated(format!(
            "max nu is {}, expected {bound}",
            report.max_nu
        )));
    }
    if report.extremal_triples != expected_extremal_triples(report.order) {
        return Err(Error::ExtremalTriplesViolated(format!(
            "{} extremal triples, expected exactly (a, {n}, {n} + a) for a = 1..{}",
            report.extremal_triples.len(),
            n - 1
        )));
    }
    Ok(())
}

/// Triples through the middle point `n` that are not of the form
/// `(a, n, n + a)` all have `nu = (n - 4)/4`. Returns the first offender.
pub fn check_middle_point_triples(y: &AssociationScheme) -> Result<Option<(Triple, usize)>> {
    require_class2(y)?;
    let order = y.order();
    let n = middle_point(y);
    if n < 4 {
        return Err(Error::NotDoubledScale { order });
    }
    let expected = (n - 4) / 4;
    let b1 = y.relation(1);
    let mid = b1.row(n - 1);
    for i in 1..=order {
        for k in i + 1..=order {
            if i == n || k == n || (i < n && k == i + n) {
                continue;
            }
            let v = and3_count(b1.row(i - 1), mid, b1.row(k - 1));
            if v != expected {
                let mut t = [i, n, k];
                t.sort_unstable();
                return Ok(Some(((t[0], t[1], t[2]), v)));
            }
        }
    }
    Ok(None)
}

impl fmt::Display for NuReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {}", self.order)?;
        writeln!(f, "pair_size {}", self.pair_size)?;
        writeln!(f, "max_nu {}", self.max_nu)?;
        writeln!(f, "count_extremal {}", self.extremal_triples.len())?;
        for (i, j, k) in &self.extremal_triples {
            writeln!(f, "{i} {j} {k}")?;
        }
        for (value, count) in &self.histogram {
            writeln!(f, "{value} {count}")?;
        }
        Ok(())
    }
}

impl FromStr for NuReport {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().collect();
        let key = |idx: usize, name: &str| -> Result<usize> {
            let line = lines.get(idx).ok_or_else(|| Error::parse(idx + 1, "missing line"))?;
            line.strip_prefix(name)
                .and_then(|rest| rest.strip_prefix(' '))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::parse(idx + 1, format!("expected \"{name} <n>\"")))
        };
        let order = key(0, "order")?;
        let pair_size = key(1, "pair_size")?;
        let max_nu = key(2, "max_nu")?;
        let count = key(3, "count_extremal")?;
        let numbers = |idx: usize, want: usize| -> Result<Vec<u64>> {
            let nums: Option<Vec<u64>> = lines[idx].split(' ').map(|t| t.parse().ok()).collect();
            nums.filter(|v| v.len() == want)
                .ok_or_else(|| Error::parse(idx + 1, format!("expected {want} integers")))
        };
        if lines.len() < 4 + count {
            return Err(Error::parse(lines.len() + 1, "missing extremal triples"));
        }
        let mut extremal_triples = Vec::with_capacity(count);
        for idx in 4..4 + count {
            let v = numbers(idx, 3)?;
            extremal_triples.push((v[0] as usize, v[1] as usize, v[2] as usize));
        }
        let mut histogram = BTreeMap::new();
        for idx in 4 + count..lines.len() {
            let v = numbers(idx, 2)?;
            histogram.insert(v[0] as usize, v[1]);
        }
        Ok(NuReport {
            order,
            pair_size,
            max_nu,
            extremal_triples,
            histogram,
        })
    }
}
