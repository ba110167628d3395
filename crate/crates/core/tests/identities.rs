mod common;

use common::*;
use skewdouble::bits::BitMatrix;
use skewdouble::hadamard::paley_skew_hadamard;
use skewdouble::scheme::{
    doubled_scheme, scheme_from_skew_hadamard, verify_class2_products, verify_scheme_axioms, AssociationScheme,
    RelationColoring,
};
use skewdouble::{AxiomError, Error};

fn paley_scheme(q: u64) -> AssociationScheme {
    scheme_from_skew_hadamard(&paley_skew_hadamard(q).unwrap()).unwrap()
}

/// Schemes of orders 3, 7, 11, 15, 19, 23, 39 and a few more.
fn corpus() -> Vec<AssociationScheme> {
    let x3 = paley_scheme(3);
    let x7 = paley_scheme(7);
    let x11 = paley_scheme(11);
    let x19 = paley_scheme(19);
    vec![
        doubled_scheme(&x3).unwrap(),
        doubled_scheme(&x7).unwrap(),
        doubled_scheme(&x11).unwrap(),
        doubled_scheme(&x19).unwrap(),
        doubled_scheme(&doubled_scheme(&x3).unwrap()).unwrap(),
        paley_scheme(23),
        paley_scheme(31),
        x3,
        x7,
        x11,
        x19,
    ]
}

/// `A1² = ((m-3)/4)A1 + ((m+1)/4)A2`, `A1A2 = A2A1 = ((m-1)/2)A0 + ((m-3)/4)(A1 + A2)`,
/// computed with plain integer matrix products.
fn check_products(x: &AssociationScheme) {
    let m = x.order() as i64;
    let a0 = relation_matrix(x, 0);
    let a1 = relation_matrix(x, 1);
    let a2 = relation_matrix(x, 2);
    assert_eq!(a2, transpose(&a1));
    let (p, r, s) = ((m - 3) / 4, (m + 1) / 4, (m - 1) / 2);
    assert_eq!(mul(&a1, &a1), combo(&[(p, &a1), (r, &a2)]), "m = {m}");
    assert_eq!(mul(&a2, &a2), combo(&[(r, &a1), (p, &a2)]), "m = {m}");
    let a1a2 = combo(&[(s, &a0), (p, &a1), (p, &a2)]);
    assert_eq!(mul(&a1, &a2), a1a2, "m = {m}");
    assert_eq!(mul(&a2, &a1), a1a2, "m = {m}");
}

#[test]
fn class2_product_formulas() {
    for x in corpus() {
        check_products(&x);
        assert!(verify_class2_products(&x).unwrap());
        let m = x.order() as u64;
        let t = x.intersection_numbers();
        assert_eq!(t.product(1, 1), vec![0, (m - 3) / 4, (m + 1) / 4]);
        assert_eq!(t.product(1, 2), vec![(m - 1) / 2, (m - 3) / 4, (m - 3) / 4]);
        assert!(!x.is_symmetric() && x.is_commutative() && x.is_non_symmetric_class2());
    }
}

/// In terms of the Hadamard order `n`: the order-`(n-1)` scheme and its
/// order-`(2n-1)` doubling.
#[test]
fn hadamard_parameterized_products() {
    for q in [3i64, 7, 11, 19, 23] {
        let n = q + 1;
        let x = paley_scheme(q as u64);
        let (a0, a1, a2) = (relation_matrix(&x, 0), relation_matrix(&x, 1), relation_matrix(&x, 2));
        assert_eq!(mul(&a1, &a1), combo(&[((n - 4) / 4, &a1), (n / 4, &a2)]));
        assert_eq!(mul(&a2, &a2), combo(&[(n / 4, &a1), ((n - 4) / 4, &a2)]));
        let e3 = combo(&[((n - 2) / 2, &a0), ((n - 4) / 4, &a1), ((n - 4) / 4, &a2)]);
        assert_eq!(mul(&a1, &a2), e3);
        assert_eq!(mul(&a2, &a1), e3);

        let y = doubled_scheme(&x).unwrap();
        let (b0, b1, b2) = (relation_matrix(&y, 0), relation_matrix(&y, 1), relation_matrix(&y, 2));
        assert_eq!(mul(&b1, &b1), combo(&[((n - 2) / 2, &b1), (n / 2, &b2)]));
        assert_eq!(mul(&b2, &b2), combo(&[(n / 2, &b1), ((n - 2) / 2, &b2)]));
        let e5 = combo(&[(n - 1, &b0), ((n - 2) / 2, &b1), ((n - 2) / 2, &b2)]);
        assert_eq!(mul(&b1, &b2), e5);
        assert_eq!(mul(&b2, &b1), e5);
    }
}

#[test]
fn fifteen_point_coefficients() {
    let y = doubled_scheme(&paley_scheme(7)).unwrap();
    let t = y.intersection_numbers();
    assert_eq!(t.product(1, 1), vec![0, 3, 4]);
    assert_eq!(t.product(1, 2), vec![7, 3, 3]);
    let x3 = paley_scheme(3);
    let t3 = x3.intersection_numbers();
    assert_eq!(t3.product(1, 1), vec![0, 0, 1]);
    assert_eq!(t3.product(1, 2), vec![1, 0, 0]);
    assert_eq!(t3.get(1, 2, 0), 1);
}

/// The minimal polynomial `(A1 - (m-1)/2 I)(4A1² + 4A1 + (m+1)I) = 0`.
#[test]
fn minimal_polynomial_vanishes() {
    for x in corpus() {
        let m = x.order() as i64;
        let a1 = relation_matrix(&x, 1);
        let id = identity(x.order());
        let left = combo(&[(1, &a1), (-(m - 1) / 2, &id)]);
        let sq = mul(&a1, &a1);
        let right = combo(&[(4, &sq), (4, &a1), (m + 1, &id)]);
        let zero = vec![vec![0i64; x.order()]; x.order()];
        assert_eq!(mul(&left, &right), zero, "m = {m}");
    }
}

#[test]
fn axioms_accept_small_schemes() {
    let t = verify_scheme_axioms(&[BitMatrix::identity(1)]).unwrap();
    assert_eq!(t.get(0, 0, 0), 1);
    assert_eq!(t.class(), 0);
    // {I, J - I} on 5 points
    let rels = vec![BitMatrix::identity(5), BitMatrix::from_fn(5, |i, j| i != j)];
    let t = verify_scheme_axioms(&rels).unwrap();
    assert_eq!(t.product(1, 1), vec![4, 3]);
    assert!(t.is_symmetric());
}

#[test]
fn axioms_reject_violations() {
    let n = 5;
    let id = BitMatrix::identity(n);
    let j_minus_i = BitMatrix::from_fn(n, |i, j| i != j);
    // non-regular relation: a path instead of a cycle
    let path = BitMatrix::from_fn(n, |i, j| i.abs_diff(j) == 1);
    let rest = BitMatrix::from_fn(n, |i, j| i != j && i.abs_diff(j) != 1);
    assert!(matches!(
        verify_scheme_axioms(&[id.clone(), path, rest]),
        Err(AxiomError::ProductNotConstant { .. })
    ));
    // overlap
    assert!(matches!(
        verify_scheme_axioms(&[id.clone(), j_minus_i.clone(), j_minus_i.clone()]),
        Err(AxiomError::CellCoverage { .. })
    ));
    // missing cells
    assert!(matches!(
        verify_scheme_axioms(std::slice::from_ref(&id)),
        Err(AxiomError::CellCoverage { .. })
    ));
    // no identity
    assert!(matches!(
        verify_scheme_axioms(&[j_minus_i.clone(), id.clone()]),
        Err(AxiomError::IdentityMissing)
    ));
    // tournament that is not doubly regular: transitive tournament
    let up = BitMatrix::from_fn(n, |i, j| i < j);
    let down = BitMatrix::from_fn(n, |i, j| i > j);
    assert!(verify_scheme_axioms(&[id.clone(), up.clone(), down]).is_err());
    // transpose not present: directed 5-cycle plus the rest
    let cyc = BitMatrix::from_fn(n, |i, j| (j + n - i) % n == 1);
    let other = BitMatrix::from_fn(n, |i, j| i != j && (j + n - i) % n != 1);
    assert!(matches!(
        verify_scheme_axioms(&[id.clone(), cyc, other]),
        Err(AxiomError::TransposeMissing { .. })
    ));
    assert!(matches!(verify_scheme_axioms(&[]), Err(AxiomError::Empty)));
    assert!(matches!(
        verify_scheme_axioms(&[id, BitMatrix::from_fn(4, |i, j| i != j)]),
        Err(AxiomError::OrderMismatch { .. })
    ));
}

#[test]
fn cyclic_group_schemes_are_schemes() {
    // relation k: y - x = k (mod n); rank n, non-symmetric for n > 2
    for n in [3usize, 4, 6, 8] {
        let rels: Vec<BitMatrix> = (0..n)
            .map(|k| BitMatrix::from_fn(n, |i, j| (j + n - i) % n == k))
            .collect();
        let t = verify_scheme_axioms(&rels).unwrap();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(t.get(a, b, c), u64::from((a + b) % n == c));
                }
            }
        }
    }
}

#[test]
fn class2_check_preconditions() {
    let rels = vec![BitMatrix::identity(5), BitMatrix::from_fn(5, |i, j| i != j)];
    let k5 = AssociationScheme::from_relations(rels).unwrap();
    assert!(matches!(verify_class2_products(&k5), Err(Error::NotNonSymmetricClass2)));
    assert!(doubled_scheme(&k5).is_err());
}

#[test]
fn asc_round_trip_and_rejections() {
    let x = paley_scheme(3);
    let text = x.to_string();
    assert_eq!(text, "3 2\n0 1 2\n2 0 1\n1 2 0\n");
    assert_eq!(text.parse::<AssociationScheme>().unwrap(), x);
    for y in corpus() {
        assert_eq!(y.to_string().parse::<AssociationScheme>().unwrap(), y);
    }
    for bad in [
        "",
        "3\n",
        "3 2\n0 1 2\n2 0 1\n",
        "3 2\n0 1 3\n2 0 1\n1 2 0\n",
        "3 2\n0 1 2 0\n2 0 1\n1 2 0\n",
        "3 2\n0 1 x\n2 0 1\n1 2 0\n",
    ] {
        assert!(bad.parse::<RelationColoring>().is_err(), "{bad:?}");
    }
    // parses as a coloring, fails the axioms
    let not_scheme = "3 2\n0 1 1\n2 0 1\n2 2 0\n";
    let coloring: RelationColoring = not_scheme.parse().unwrap();
    assert!(matches!(coloring.into_scheme(), Err(Error::Axiom(_))));
}

#[test]
fn relation_of_is_one_based() {
    let x = paley_scheme(3);
    assert_eq!(x.relation_of(1, 1).unwrap(), 0);
    assert_eq!(x.relation_of(1, 2).unwrap(), 1);
    assert_eq!(x.relation_of(2, 1).unwrap(), 2);
    assert!(x.relation_of(0, 1).is_err());
    assert!(x.relation_of(1, 4).is_err());
    assert_eq!(x.transpose_of(1), 2);
}
