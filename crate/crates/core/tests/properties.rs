mod common;

use common::*;
use proptest::prelude::*;
use skewdouble::autgroup::{automorphism_group, Permutation, PermutationGroup};
use skewdouble::hadamard::{paley_skew_hadamard, SignMatrix};
use skewdouble::scheme::{doubled_scheme, scheme_from_skew_hadamard, AssociationScheme};

const PRIMES: [u64; 5] = [3, 7, 11, 19, 23];

fn conjugate(h: &SignMatrix, d: &[bool]) -> SignMatrix {
    let n = h.order();
    let rows: Vec<Vec<i8>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let s = if d[i] != d[j] { -1 } else { 1 };
                    s * h.entry(i, j)
                })
                .collect()
        })
        .collect();
    SignMatrix::from_rows(&rows).unwrap()
}

/// The scheme with point `i` renamed `p[i]` (0-based).
fn relabel(x: &AssociationScheme, p: &[usize]) -> AssociationScheme {
    let m = x.order();
    let c = colors_of(x);
    let mut inv = vec![0; m];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    let mut text = format!("{m} {}\n", x.class());
    for i in 0..m {
        let row: Vec<String> = (0..m).map(|j| c[inv[i]][inv[j]].to_string()).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    text.parse().unwrap()
}

fn prime_and_shuffle() -> impl Strategy<Value = (u64, Vec<usize>)> {
    (0usize..3).prop_flat_map(|qi| {
        let q = PRIMES[qi];
        (Just(q), Just((0..q as usize).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalize_is_idempotent_under_sign_changes(qi in 0usize..PRIMES.len(), mask in proptest::collection::vec(any::<bool>(), 24)) {
        let h = paley_skew_hadamard(PRIMES[qi]).unwrap();
        let c = conjugate(&h, &mask[..h.order()]);
        prop_assert!(naive_skew_hadamard(&rows_of(&c)));
        let n = c.normalize().unwrap();
        prop_assert!(n.is_normalized());
        prop_assert_eq!(n.normalize().unwrap(), n.clone());
        prop_assert_eq!(n, h);
    }

    #[test]
    fn shm_round_trip(qi in 0usize..PRIMES.len(), doublings in 0usize..2) {
        let mut h = paley_skew_hadamard(PRIMES[qi]).unwrap();
        for _ in 0..doublings {
            h = h.double().unwrap();
        }
        let back: SignMatrix = h.to_string().parse().unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn asc_round_trip(qi in 0usize..PRIMES.len(), doubled in any::<bool>()) {
        let mut x = scheme_from_skew_hadamard(&paley_skew_hadamard(PRIMES[qi]).unwrap()).unwrap();
        if doubled {
            x = doubled_scheme(&x).unwrap();
        }
        let back: AssociationScheme = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    /// Relabelling a scheme conjugates its automorphism group.
    #[test]
    fn group_is_label_invariant((q, p) in prime_and_shuffle()) {
        let x = scheme_from_skew_hadamard(&paley_skew_hadamard(q).unwrap()).unwrap();
        let y = relabel(&x, &p);
        let gx = automorphism_group(&x).unwrap();
        let gy = automorphism_group(&y).unwrap();
        prop_assert_eq!(gx.order(), gy.order());
        let shifted: Vec<usize> = p.iter().map(|v| v + 1).collect();
        let pi = Permutation::from_images(&shifted).unwrap();
        for s in gx.generators() {
            prop_assert!(gy.contains(&pi.inverse().then(s).then(&pi)));
        }
    }

    #[test]
    fn group_text_round_trip(cycle in Just((1..=9).collect::<Vec<usize>>()).prop_shuffle(), k in 2usize..9) {
        let a = Permutation::from_cycles(9, &[&cycle[..k]]).unwrap();
        let b = Permutation::from_cycles(9, &[&cycle[k - 1..]]).unwrap();
        let g = PermutationGroup::new(9, vec![a, b]).unwrap();
        let back: PermutationGroup = g.to_string().parse().unwrap();
        prop_assert_eq!(back.generators(), g.generators());
        prop_assert_eq!(back.order(), g.order());
        for orbit in g.orbits() {
            prop_assert_eq!(g.order() % orbit.len(), 0u32.into());
        }
    }
}
