//! Automorphism groups of association schemes.
//!
//! `Aut(X)` is the set of permutations `σ` with `(A_i)_{xσ yσ} = (A_i)_{xy}` for
//! every relation. For a non-symmetric class-2 scheme it is enough to test
//! `A_1`, since `A_2 = A_1ᵀ` and `A_0 = I`.

mod chain;
mod perm;
mod search;

use num_bigint::BigUint;

pub use chain::StabilizerChain;
pub use perm::{Permutation, PermutationGroup};

use crate::error::{Error, Result};
use crate::scheme::{doubled_scheme, AssociationScheme};

/// Largest degree accepted by [`automorphism_group`].
pub const MAX_DEGREE: usize = 512;

/// Checks the defining condition of an automorphism directly.
pub fn is_automorphism(x: &AssociationScheme, sigma: &Permutation) -> bool {
    let m = x.order();
    if sigma.degree() != m {
        return false;
    }
    if x.is_non_symmetric_class2() {
        let a1 = x.relation(1);
        (0..m).all(|i| (0..m).all(|j| a1.get(sigma.at(i), sigma.at(j)) == a1.get(i, j)))
    } else {
        (0..m).all(|i| (0..m).all(|j| x.color(sigma.at(i), sigma.at(j)) == x.color(i, j)))
    }
}

/// Generators of `Aut(X)`, found by refinement and backtracking.
///
/// The generator list is deterministic for a given labelled scheme. Every
/// generator is re-checked against [`is_automorphism`] before it is returned.
pub fn automorphism_group(x: &AssociationScheme) -> Result<PermutationGroup> {
    let m = x.order();
    if m > MAX_DEGREE {
        return Err(Error::DegreeCap {
            degree: m,
            cap: MAX_DEGREE,
        });
    }
    let graph = search::ColoredDigraph::new(m, x.class() + 1, x.colors());
    let generators: Vec<Permutation> = search::automorphism_generators(&graph)
        .into_iter()
        .map(Permutation::from_zero_based)
        .collect();
    for g in &generators {
        assert!(is_automorphism(x, g), "search produced a non-automorphism {g}");
    }
    PermutationGroup::new(m, generators)
}

/// Exact group order from a stabilizer chain with the natural base.
pub fn group_order(g: &PermutationGroup) -> BigUint {
    g.order()
}

pub fn orbits(g: &PermutationGroup) -> Vec<Vec<usize>> {
    g.orbits()
}

pub fn is_transitive(g: &PermutationGroup) -> bool {
    g.is_transitive()
}

/// Every generator fixes the middle point `n` of an order-`2n - 1` scheme and
/// maps `{1..n-1}` and `{n+1..2n-1}` onto themselves.
pub fn verify_block_closure(y: &AssociationScheme, g: &PermutationGroup) -> bool {
    let order = y.order();
    if g.degree() != order || order.is_multiple_of(2) {
        return false;
    }
    let n = order.div_ceil(2);
    g.generators()
        .iter()
        .all(|s| s.apply(n) == n && (1..n).all(|a| s.apply(a) < n) && (n + 1..=order).all(|a| s.apply(a) > n))
}

/// `τ ↦ (τ, fixed middle point, τ shifted by m + 1)`.
pub fn lift_to_doubled(tau: &Permutation) -> Permutation {
    let m = tau.degree();
    let mut images: Vec<usize> = Vec::with_capacity(2 * m + 1);
    images.extend((0..m).map(|i| tau.at(i)));
    images.push(m);
    images.extend((0..m).map(|i| tau.at(i) + m + 1));
    Permutation::from_zero_based(images)
}

/// Evidence that restriction to `{1..m}` is an isomorphism `Aut(Y) → Aut(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionCertificate {
    /// Every generator of `Aut(Y)` fixes `m + 1` and satisfies `σ(a + m + 1) = σ(a) + m + 1`.
    pub coupled: bool,
    /// Every restriction `σ|{1..m}` lies in `Aut(X)`.
    pub restrictions_in_aut_x: bool,
    /// Every lifted generator of `Aut(X)` lies in `Aut(Y)`.
    pub lifts_in_aut_y: bool,
    pub order_x: BigUint,
    pub order_y: BigUint,
}

impl RestrictionCertificate {
    pub fn holds(&self) -> bool {
        self.coupled && self.restrictions_in_aut_x && self.lifts_in_aut_y && self.order_x == self.order_y
    }
}

/// Computes both groups and certifies `Aut(Y) ≅ Aut(X)` for `Y` the doubling of `X`.
pub fn verify_restriction_isomorphism(x: &AssociationScheme, y: &AssociationScheme) -> Result<RestrictionCertificate> {
    if doubled_scheme(x)? != *y {
        return Err(Error::NotDoubling);
    }
    let aut_x = automorphism_group(x)?;
    let aut_y = automorphism_group(y)?;
    Ok(certify_restriction(x, y, &aut_x, &aut_y))
}

/// As [`verify_restriction_isomorphism`], with the groups already computed.
/// `y` must be the doubling of `x`.
pub fn certify_restriction(
    x: &AssociationScheme,
    y: &AssociationScheme,
    aut_x: &PermutationGroup,
    aut_y: &PermutationGroup,
) -> RestrictionCertificate {
    let m = x.order();
    let coupled = aut_y.degree() == 2 * m + 1
        && aut_y
            .generators()
            .iter()
            .all(|s| s.at(m) == m && (0..m).all(|a| s.at(a) < m && s.at(a + m + 1) == s.at(a) + m + 1));
    let restrictions_in_aut_x = coupled
        && aut_y.generators().iter().all(|s| {
            let tau = Permutation::from_zero_based((0..m).map(|a| s.at(a)).collect());
            is_automorphism(x, &tau)
        });
    let lifts_in_aut_y = aut_x
        .generators()
        .iter()
        .all(|tau| is_automorphism(y, &lift_to_doubled(tau)));
    RestrictionCertificate {
        coupled,
        restrictions_in_aut_x,
        lifts_in_aut_y,
        order_x: aut_x.order(),
        order_y: aut_y.order(),
    }
}
