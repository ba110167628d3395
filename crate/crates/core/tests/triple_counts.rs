mod common;

use std::collections::BTreeMap;

use common::*;
use skewdouble::hadamard::paley_skew_hadamard;
use skewdouble::scheme::{doubled_scheme, scheme_from_skew_hadamard, AssociationScheme};
use skewdouble::triples::{
    check_extremal_characterization, middle_point, neighbor_set, nu, nu_extremes, pair_intersection_size, NuMode,
    NuReport,
};
use skewdouble::Error;

fn doubled_paley(q: u64) -> AssociationScheme {
    doubled_scheme(&scheme_from_skew_hadamard(&paley_skew_hadamard(q).unwrap()).unwrap()).unwrap()
}

fn doubled_twice() -> AssociationScheme {
    let x3 = scheme_from_skew_hadamard(&paley_skew_hadamard(3).unwrap()).unwrap();
    doubled_scheme(&doubled_scheme(&x3).unwrap()).unwrap()
}

#[test]
fn neighbourhood_examples() {
    let y = doubled_paley(7);
    assert_eq!(middle_point(&y), 8);
    assert_eq!(neighbor_set(&y, 8).unwrap(), (1..=7).collect::<Vec<_>>());
    let x3 = scheme_from_skew_hadamard(&paley_skew_hadamard(3).unwrap()).unwrap();
    assert_eq!(neighbor_set(&x3, 1).unwrap(), vec![2]);
    assert!(neighbor_set(&x3, 4).is_err());
}

#[test]
fn pair_sizes_are_constant() {
    for (y, expected) in [(doubled_paley(7), 3), (doubled_paley(11), 5), (doubled_paley(19), 9)] {
        let m = y.order();
        for i in 1..=m {
            for j in i + 1..=m {
                assert_eq!(pair_intersection_size(&y, i, j).unwrap(), expected);
            }
        }
    }
    let fano = scheme_from_skew_hadamard(&paley_skew_hadamard(7).unwrap()).unwrap();
    for i in 1..=7 {
        for j in i + 1..=7 {
            assert_eq!(pair_intersection_size(&fano, i, j).unwrap(), 1);
        }
    }
}

#[test]
fn point_examples_on_fifteen() {
    let y = doubled_paley(7);
    assert_eq!(nu(&y, 1, 8, 9).unwrap(), 3);
    assert_eq!(nu(&y, 1, 2, 8).unwrap(), 1);
    assert!(nu(&y, 1, 2, 3).unwrap() <= 2);
    assert!(matches!(nu(&y, 2, 1, 3), Err(Error::PointsNotIncreasing)));
    assert!(matches!(nu(&y, 1, 1, 3), Err(Error::PointsNotIncreasing)));
    assert!(matches!(nu(&y, 1, 2, 16), Err(Error::PointOutOfRange { .. })));
}

/// Every triple against a hash-set implementation.
#[test]
fn exhaustive_agreement_with_hash_sets() {
    for y in [doubled_paley(7), doubled_paley(11)] {
        let sets = out_sets(&colors_of(&y));
        let m = y.order();
        let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
        let mut best = 0;
        let mut maximizers = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                for k in j + 1..=m {
                    let v = naive_nu(&sets, i, j, k);
                    assert_eq!(nu(&y, i, j, k).unwrap(), v, "({i}, {j}, {k})");
                    *histogram.entry(v).or_default() += 1;
                    if v > best {
                        best = v;
                        maximizers.clear();
                    }
                    if v == best {
                        maximizers.push((i, j, k));
                    }
                }
            }
        }
        let report = nu_extremes(&y, NuMode::Survey).unwrap();
        assert_eq!(report.histogram, histogram);
        assert_eq!(report.max_nu, best);
        assert_eq!(report.extremal_triples, maximizers);
    }
}

#[test]
fn extremal_triples_pass_through_the_middle() {
    for y in [doubled_paley(7), doubled_paley(11), doubled_paley(19), doubled_twice()] {
        let m = y.order();
        let n = m.div_ceil(2);
        let report = nu_extremes(&y, NuMode::AssertExtremal).unwrap();
        assert_eq!(report.max_nu, (n - 2) / 2);
        let expected: Vec<_> = (1..n).map(|a| (a, n, n + a)).collect();
        assert_eq!(report.extremal_triples, expected);
        assert_eq!(report.pair_size, (n - 2) / 2);
        check_extremal_characterization(&report).unwrap();
        // other triples through n
        let sets = out_sets(&colors_of(&y));
        for i in 1..=m {
            for j in i + 1..=m {
                if i == n || j == n {
                    continue;
                }
                let mut t = [i, j, n];
                t.sort_unstable();
                if j == i + n {
                    continue;
                }
                assert_eq!(naive_nu(&sets, t[0], t[1], t[2]), (n - 4) / 4, "{t:?}");
            }
        }
    }
}

#[test]
fn small_order_survey() {
    let fano = scheme_from_skew_hadamard(&paley_skew_hadamard(7).unwrap()).unwrap();
    let report = nu_extremes(&fano, NuMode::Survey).unwrap();
    assert_eq!(report.max_nu, 1);
    let y7 = doubled_scheme(&scheme_from_skew_hadamard(&paley_skew_hadamard(3).unwrap()).unwrap()).unwrap();
    assert!(matches!(
        nu_extremes(&y7, NuMode::AssertExtremal),
        Err(Error::NotDoubledScale { .. })
    ));
}

#[test]
fn assert_mode_rejects_non_doubled_schemes() {
    // order 23 Paley scheme has the right size but no distinguished middle point
    let x23 = scheme_from_skew_hadamard(&paley_skew_hadamard(23).unwrap()).unwrap();
    assert!(nu_extremes(&x23, NuMode::Survey).is_ok());
    assert!(nu_extremes(&x23, NuMode::AssertExtremal).is_err());
}

#[test]
fn report_text_round_trip() {
    let report = nu_extremes(&doubled_paley(7), NuMode::Survey).unwrap();
    let text = report.to_string();
    assert!(text.starts_with("order 15\npair_size 3\nmax_nu 3\ncount_extremal 7\n1 8 9\n"));
    let back: NuReport = text.parse().unwrap();
    assert_eq!(back, report);
    let total: u64 = report.histogram.values().sum();
    assert_eq!(total, 15 * 14 * 13 / 6);
}
