use dubrovnik::closed_form::{count_paths, path_sum};
use dubrovnik::skein::{dubrovnik_skein_via_mirror, evaluate_unmemoized, SkeinEvaluator};
use dubrovnik::{
    dubrovnik_closed, dubrovnik_reduce, dubrovnik_skein, BraidTuple, Engine, Error, LaurentPoly2,
};
use proptest::prelude::*;

fn t(e: &[i64]) -> BraidTuple {
    BraidTuple::new(e.to_vec()).unwrap()
}

/// Reference values from the recurrence engine, which shares no code with
/// the skein rules.
fn pr(e: &[i64]) -> LaurentPoly2 {
    dubrovnik_reduce(&t(e)).unwrap()
}

fn z() -> LaurentPoly2 {
    LaurentPoly2::z()
}

fn za(k: i64) -> LaurentPoly2 {
    LaurentPoly2::monomial(1, k, 1)
}

fn a(k: i64) -> LaurentPoly2 {
    LaurentPoly2::a_pow(k)
}

fn cat(head: &[i64], tail: &[i64]) -> Vec<i64> {
    head.iter().chain(tail).copied().collect()
}

fn all_tuples(n: usize, max: i64) -> Vec<Vec<i64>> {
    (0..n).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (1..=max).map(move |b| {
                    let mut v = v.clone();
                    v.push(b);
                    v
                })
            })
            .collect()
    })
}

#[test]
fn small_values() {
    assert_eq!(dubrovnik_skein(&t(&[1])).unwrap(), LaurentPoly2::a());
    assert_eq!(dubrovnik_skein(&t(&[-1])).unwrap(), a(-1));
    let hopf: LaurentPoly2 = "a z^-1 - a^-1 z^-1 + 1 - a^-1 z + a z".parse().unwrap();
    assert_eq!(dubrovnik_skein(&t(&[2])).unwrap(), hopf);
    // Trefoil from the skein relation by hand: P[3] = P[1] - z a^-2 P[inf] + z P[2].
    let trefoil = a(1) - za(-2) + z() * &hopf;
    for engine in Engine::ALL {
        assert_eq!(engine.evaluate(&t(&[3])).unwrap(), trefoil, "{engine}");
    }
}

#[test]
fn memoized_matches_plain_recursion() {
    for n in [1, 3, 5] {
        for e in all_tuples(n, 3) {
            assert_eq!(dubrovnik_skein(&t(&e)).unwrap(), evaluate_unmemoized(&e), "{e:?}");
        }
    }
}

#[test]
fn shared_memo_agrees_with_fresh() {
    let mut ev = SkeinEvaluator::new();
    for e in all_tuples(3, 4) {
        assert_eq!(ev.evaluate(&t(&e)).unwrap(), dubrovnik_skein(&t(&e)).unwrap());
    }
    assert!(ev.memo_len() > 64);
}

#[test]
fn even_rules_match_odd_normalization() {
    let mut ev = SkeinEvaluator::new();
    for n in [2, 4] {
        for e in all_tuples(n, 4) {
            for s in [1, -1] {
                let e: Vec<i64> = e.iter().map(|b| s * b).collect();
                let odd = t(&e).normalize_odd().unwrap();
                assert_eq!(odd.len() % 2, 1);
                assert_eq!(ev.evaluate_entries(&e), ev.evaluate_entries(odd.entries()), "{e:?}");
            }
        }
    }
}

#[test]
fn even_inputs_agree_across_engines() {
    for n in [2, 4, 6] {
        for e in all_tuples(n, 3) {
            let s = dubrovnik_skein(&t(&e)).unwrap();
            assert_eq!(dubrovnik_reduce(&t(&e)).unwrap(), s, "{e:?}");
            assert_eq!(dubrovnik_closed(&t(&e)).unwrap(), s, "{e:?}");
        }
    }
}

#[test]
fn negative_table_matches_mirror_shortcut() {
    for n in 1..=5 {
        for e in all_tuples(n, 3) {
            let neg = t(&e).mirror();
            assert_eq!(dubrovnik_skein(&neg).unwrap(), dubrovnik_skein_via_mirror(&neg).unwrap(), "{neg}");
        }
    }
}

#[test]
fn reversal_preserves_normalized_polynomial() {
    for n in [1, 3, 5] {
        for e in all_tuples(n, 3) {
            let fwd = t(&e);
            let rev = fwd.reverse();
            let (pf, pv) = (pr(fwd.entries()), pr(rev.entries()));
            match (fwd.normalized_polynomial(&pf), rev.normalized_polynomial(&pv)) {
                (Ok(x), Ok(y)) => assert_eq!(x, y, "{fwd}"),
                (Err(Error::WritheUndefined), Err(Error::WritheUndefined)) => {}
                other => panic!("{fwd}: {other:?}"),
            }
        }
    }
}

#[test]
fn odd_length_relations() {
    let tails: [&[i64]; 4] = [&[], &[1, 2], &[2, 1], &[3, 3]];
    for tail in tails {
        for b1 in 1..=5 {
            for b2 in 1..=5 {
                for b3 in 1..=4 {
                    check_relations(b1, b2, b3, tail);
                }
            }
        }
    }
}

fn check_relations(b1: i64, b2: i64, b3: i64, tail: &[i64]) {
    let lhs = pr(&cat(&[b1, b2, b3], tail));
    let rest = |head: &[i64]| pr(&cat(head, tail));
    let rhs = match (b1, b2) {
        (b1, b2) if b1 >= 3 && b2 >= 2 => {
            rest(&[b1 - 2, b2, b3]) - za(1 - b1) * rest(&[1, b2 - 1, b3]) + z() * rest(&[b1 - 1, b2, b3])
        }
        (2, b2) if b2 >= 2 => {
            a(b2) * rest(&[b3]) - za(-1) * rest(&[1, b2 - 1, b3]) + z() * rest(&[1, b2, b3])
        }
        (1, b2) if b2 >= 3 => rest(&[1, b2 - 2, b3]) - z() * rest(&[1, b2 - 1, b3]) + za(b2) * rest(&[b3]),
        (b1, 1) if b1 >= 3 => {
            rest(&[b1 - 2, 1, b3]) - za(1 - b1) * rest(&[b3 + 1]) + z() * rest(&[b1 - 1, 1, b3])
        }
        (2, 1) => a(1) * rest(&[b3]) - za(-1) * rest(&[b3 + 1]) + z() * rest(&[1, 1, b3]),
        (1, 2) => rest(&[b3 + 1]) - z() * rest(&[1, 1, b3]) + za(2) * rest(&[b3]),
        (1, 1) => match tail {
            [] => a(-b3) - z() * pr(&[b3 + 1]) + za(1) * pr(&[b3]),
            [1, b5, more @ ..] => {
                a(-b3) * pr(&cat(&[1 + b5], more)) - z() * pr(&cat(&[b3 + 1, 1, *b5], more))
                    + za(1) * pr(&cat(&[b3, 1, *b5], more))
            }
            [b4, more @ ..] => {
                a(-b3) * pr(&cat(&[1, b4 - 1], more)) - z() * pr(&cat(&[b3 + 1, *b4], more))
                    + za(1) * pr(&cat(&[b3, *b4], more))
            }
        },
        _ => unreachable!(),
    };
    assert_eq!(lhs, rhs, "[{b1},{b2},{b3}] + {tail:?}");
}

#[test]
fn wide_entries() {
    for e in [vec![9], vec![12, 1, 7], vec![1, 15, 1], vec![20, 20, 20]] {
        let s = dubrovnik_skein(&t(&e)).unwrap();
        assert_eq!(dubrovnik_reduce(&t(&e)).unwrap(), s);
        assert_eq!(dubrovnik_closed(&t(&e)).unwrap(), s);
    }
}

#[test]
fn long_tuples_without_deep_recursion() {
    let ones = vec![1i64; 41];
    let s = dubrovnik_skein(&t(&ones)).unwrap();
    assert_eq!(dubrovnik_reduce(&t(&ones)).unwrap(), s);
    let e: Vec<i64> = (0..15).map(|i| 1 + i % 3).collect();
    assert_eq!(path_sum(&e), dubrovnik_reduce(&t(&e)).unwrap());
}

#[test]
fn resource_limits() {
    let huge = t(&[5_001, 5_001]);
    assert!(matches!(dubrovnik_skein(&huge), Err(Error::ResourceLimit { .. })));
    let many = t(&[1; 25]);
    assert!(count_paths(25) > dubrovnik::closed_form::MAX_PATHS);
    assert!(matches!(dubrovnik_closed(&many), Err(Error::ResourceLimit { .. })));
    assert!(dubrovnik_reduce(&many).is_ok());
}

#[test]
fn mixed_signs_rejected() {
    for engine in Engine::ALL {
        assert_eq!(engine.evaluate(&t(&[2, -1, 3])), Err(Error::MixedSigns { index: 2 }), "{engine}");
    }
}

fn tuple_strategy(max_len: usize, max_entry: i64) -> impl Strategy<Value = Vec<i64>> {
    (prop::collection::vec(1..=max_entry, 1..=max_len), any::<bool>()).prop_map(|(v, neg)| {
        if neg {
            v.into_iter().map(|b| -b).collect()
        } else {
            v
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn engines_agree_on_random_tuples(e in tuple_strategy(7, 8)) {
        let tt = t(&e);
        let s = dubrovnik_skein(&tt).unwrap();
        prop_assert_eq!(&dubrovnik_reduce(&tt).unwrap(), &s);
        prop_assert_eq!(&dubrovnik_closed(&tt).unwrap(), &s);
    }

    #[test]
    fn mirror_identity(e in tuple_strategy(6, 6)) {
        let tt = t(&e);
        prop_assert_eq!(dubrovnik_skein(&tt.mirror()).unwrap(), dubrovnik_skein(&tt).unwrap().mirror());
    }

    #[test]
    fn normalization_commutes_with_odd_form(e in tuple_strategy(6, 5)) {
        let tt = t(&e);
        let odd = tt.normalize_odd().unwrap();
        let (p1, p2) = (dubrovnik_skein(&tt).unwrap(), dubrovnik_skein(&odd).unwrap());
        prop_assert_eq!(&p1, &p2);
        if let (Ok(w1), Ok(w2)) = (tt.writhe(), odd.writhe()) {
            prop_assert_eq!(w1, w2);
        }
    }
}
