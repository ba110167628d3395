//! Orbital schemes and the schurian test.
//!
//! `X` is treated as schurian iff `Aut(X)` is transitive and the 2-orbits of
//! `Aut(X)` partition the pairs exactly as the relations of `X` do. Any
//! transitive group whose orbitals give `X` is a subgroup of `Aut(X)`, and
//! enlarging a group only merges orbitals, so checking `Aut(X)` suffices.

use std::fmt;

use num_bigint::BigUint;

use crate::autgroup::{automorphism_group, certify_restriction, verify_block_closure, PermutationGroup};
use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::scheme::{doubled_scheme, verify_class2_products, AssociationScheme};
use crate::triples::{check_middle_point_triples, nu_extremes, NuMode};

/// Relations are the orbits of `G` on ordered pairs, with the diagonal first
/// and the rest in order of their first cell in row-major order.
pub fn orbital_scheme(g: &PermutationGroup) -> Result<AssociationScheme> {
    if !g.is_transitive() {
        return Err(Error::IntransitiveGroup);
    }
    let m = g.degree();
    let labels = two_orbit_labels(g);
    let rank = labels.iter().copied().max().map_or(0, |k| k + 1);
    let relations = (0..rank)
        .map(|k| BitMatrix::from_fn(m, |x, y| labels[x * m + y] == k))
        .collect();
    AssociationScheme::from_relations(relations)
}

/// Orbit index of each cell under the coordinatewise action, diagonal = 0.
fn two_orbit_labels(g: &PermutationGroup) -> Vec<usize> {
    let m = g.degree();
    let mut parent: Vec<usize> = (0..m * m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for s in g.generators() {
        for x in 0..m {
            for y in 0..m {
                let (a, b) = (find(&mut parent, x * m + y), find(&mut parent, s.at(x) * m + s.at(y)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut label_of_root = vec![usize::MAX; m * m];
    // diagonal first, so that it receives label 0
    let order = (0..m).map(|x| x * m + x).chain((0..m * m).filter(|c| c / m != c % m));
    let mut next = 0;
    for cell in order {
        let r = find(&mut parent, cell);
        if label_of_root[r] == usize::MAX {
            label_of_root[r] = next;
            next += 1;
        }
    }
    (0..m * m).map(|c| label_of_root[find(&mut parent, c)]).collect()
}

/// Whether two cell labelings induce the same set partition.
fn same_partition(a: &[usize], b: &[usize]) -> bool {
    use std::collections::HashMap;
    let mut ab = HashMap::new();
    let mut ba = HashMap::new();
    a.iter()
        .zip(b)
        .all(|(&x, &y)| *ab.entry(x).or_insert(y) == y && *ba.entry(y).or_insert(x) == x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchurianReason {
    IntransitiveGroup,
    OrbitalMismatch,
    OrbitalsCoincide,
}

impl fmt::Display for SchurianReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchurianReason::IntransitiveGroup => "intransitive_group",
            SchurianReason::OrbitalMismatch => "orbital_mismatch",
            SchurianReason::OrbitalsCoincide => "orbitals_coincide",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurianVerdict {
    pub is_schurian: bool,
    pub reason: SchurianReason,
    /// Class of the orbital scheme of `Aut(X)`; `None` when the group is
    /// intransitive and no orbital scheme was built.
    pub orbital_class_count: Option<usize>,
    pub aut_order: BigUint,
}

impl fmt::Display for SchurianVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "schurian: {}", self.is_schurian)?;
        writeln!(f, "reason: {}", self.reason)?;
        match self.orbital_class_count {
            Some(c) => writeln!(f, "orbital_class_count: {c}")?,
            None => writeln!(f, "orbital_class_count: -")?,
        }
        writeln!(f, "aut_order: {}", self.aut_order)
    }
}

pub fn is_schurian(x: &AssociationScheme) -> Result<SchurianVerdict> {
    let aut = automorphism_group(x)?;
    is_schurian_with_group(x, &aut)
}

/// [`is_schurian`] with `Aut(X)` supplied by the caller.
pub fn is_schurian_with_group(x: &AssociationScheme, aut: &PermutationGroup) -> Result<SchurianVerdict> {
    let aut_order = aut.order();
    if !aut.is_transitive() {
        return Ok(SchurianVerdict {
            is_schurian: false,
            reason: SchurianReason::IntransitiveGroup,
            orbital_class_count: None,
            aut_order,
        });
    }
    let orbitals = two_orbit_labels(aut);
    let class = orbitals.iter().copied().max().unwrap_or(0);
    let own: Vec<usize> = (0..x.order() * x.order())
        .map(|c| x.color(c / x.order(), c % x.order()))
        .collect();
    let coincide = same_partition(&orbitals, &own);
    Ok(SchurianVerdict {
        is_schurian: coincide,
        reason: if coincide {
            SchurianReason::OrbitalsCoincide
        } else {
            SchurianReason::OrbitalMismatch
        },
        orbital_class_count: Some(class),
        aut_order,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

/// Pass/fail per stage of the doubling theorem for one input scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub m: usize,
    pub stages: Vec<StageResult>,
}

impl TheoremReport {
    pub fn verified(&self) -> bool {
        self.stages.iter().all(|s| s.passed)
    }

    pub fn stage(&self, name: &str) -> Option<&StageResult> {
        self.stages.iter().find(|s| s.name == name)
    }

    fn record(&mut self, name: &'static str, passed: bool, details: String) {
        self.stages.push(StageResult { name, passed, details });
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stages {
            let status = if s.passed { "PASS" } else { "FAIL" };
            if s.details.is_empty() {
                writeln!(f, "{}: {status}", s.name)?;
            } else {
                writeln!(f, "{}: {status} {}", s.name, s.details)?;
            }
        }
        let verdict = if self.verified() { "VERIFIED" } else { "FAILED" };
        writeln!(f, "THEOREM: {verdict} for m={}", self.m)
    }
}

/// Runs the whole chain for `X` of order `m >= 7` and its doubling `Y`:
/// axioms and products of `Y`, the extremal triples of `nu`, block closure
/// and intransitivity of `Aut(Y)`, `Aut(Y) ≅ Aut(X)`, and non-schurian `Y`.
pub fn verify_main_theorem(x: &AssociationScheme) -> Result<TheoremReport> {
    if !x.is_non_symmetric_class2() {
        return Err(Error::NotNonSymmetricClass2);
    }
    let m = x.order();
    if m < 7 {
        return Err(Error::TheoremOrderTooSmall(m));
    }
    let mut report = TheoremReport { m, stages: Vec::new() };

    let y = match doubled_scheme(x) {
        Ok(y) => {
            report.record("doubled_scheme", true, format!("order={}", y.order()));
            y
        }
        Err(e) => {
            report.record("doubled_scheme", false, e.to_string());
            return Ok(report);
        }
    };

    let table = y.intersection_numbers();
    report.record(
        "scheme_axioms",
        y.is_non_symmetric_class2() && table.is_commutative(),
        format!(
            "class={} symmetric={} commutative={}",
            y.class(),
            table.is_symmetric(),
            table.is_commutative()
        ),
    );

    let products = verify_class2_products(x).and_then(|px| Ok(px && verify_class2_products(&y)?));
    let p = |i, j| table.product(i, j);
    let (b11, b12) = (p(1, 1), p(1, 2));
    match products {
        Ok(ok) => report.record(
            "class2_products",
            ok,
            format!(
                "B1^2={}B1+{}B2 B1B2={}B0+{}B1+{}B2",
                b11[1], b11[2], b12[0], b12[1], b12[2]
            ),
        ),
        Err(e) => report.record("class2_products", false, e.to_string()),
    }

    match nu_extremes(&y, NuMode::AssertExtremal) {
        Ok(nu) => {
            let middle = check_middle_point_triples(&y);
            let passed = matches!(middle, Ok(None));
            report.record(
                "nu_extremes",
                passed,
                format!(
                    "max_nu={} extremal={} middle_point_triples={}",
                    nu.max_nu,
                    nu.extremal_triples.len(),
                    if passed { "ok" } else { "mismatch" }
                ),
            );
        }
        Err(e) => report.record("nu_extremes", false, e.to_string()),
    }

    let groups = automorphism_group(x).and_then(|gx| Ok((gx, automorphism_group(&y)?)));
    let (aut_x, aut_y) = match groups {
        Ok((gx, gy)) => {
            report.record(
                "automorphism_group",
                true,
                format!(
                    "aut_x_order={} aut_y_order={} aut_y_generators={}",
                    gx.order(),
                    gy.order(),
                    gy.generators().len()
                ),
            );
            (gx, gy)
        }
        Err(e) => {
            report.record("automorphism_group", false, e.to_string());
            for name in ["block_closure", "intransitivity", "restriction_isomorphism", "schurian"] {
                report.record(name, false, "skipped".into());
            }
            return Ok(report);
        }
    };

    let orbits = aut_y.orbits();
    report.record(
        "block_closure",
        verify_block_closure(&y, &aut_y),
        format!("fixed_point={} orbits={}", m + 1, orbits.len()),
    );
    report.record(
        "intransitivity",
        !aut_y.is_transitive(),
        format!("orbits={}", orbits.len()),
    );

    let cert = certify_restriction(x, &y, &aut_x, &aut_y);
    report.record(
        "restriction_isomorphism",
        cert.holds(),
        format!(
            "coupled={} restrictions={} lifts={} orders={}/{}",
            cert.coupled, cert.restrictions_in_aut_x, cert.lifts_in_aut_y, cert.order_x, cert.order_y
        ),
    );

    match is_schurian_with_group(&y, &aut_y) {
        Ok(v) => report.record(
            "schurian",
            !v.is_schurian && v.reason == SchurianReason::IntransitiveGroup,
            format!("schurian={} reason={}", v.is_schurian, v.reason),
        ),
        Err(e) => report.record("schurian", false, e.to_string()),
    }
    Ok(report)
}
