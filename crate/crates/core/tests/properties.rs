//! Property suites over randomized range maps and words.

use proptest::prelude::*;

use cliff_operads::cliffs::{self, CliffWord};
use cliff_operads::compose::{black_square, chi, white_square};
use cliff_operads::order;
use cliff_operads::rangemap::RangeMap;

fn range_maps() -> impl Strategy<Value = RangeMap> {
    (proptest::collection::vec(0u32..5, 0..6), 0u32..5)
        .prop_map(|(prefix, tail)| RangeMap::new(prefix, tail))
}

fn words(max_len: usize, max_letter: u32) -> impl Strategy<Value = CliffWord> {
    proptest::collection::vec(0..=max_letter, 0..=max_len).prop_map(CliffWord::new)
}

fn word_pairs() -> impl Strategy<Value = (CliffWord, CliffWord)> {
    (0usize..=6).prop_flat_map(|l| {
        (
            proptest::collection::vec(0u32..6, l),
            proptest::collection::vec(0u32..6, l),
        )
            .prop_map(|(a, b)| (CliffWord::new(a), CliffWord::new(b)))
    })
}

fn cliff_of(d: &RangeMap, raw: &CliffWord) -> CliffWord {
    cliffs::reduce(d, raw).expect("no horizon on generated maps")
}

proptest! {
    #[test]
    fn closure_is_idempotent_and_dominates(d in range_maps()) {
        let bar = d.closure();
        prop_assert_eq!(bar.closure(), bar.clone());
        for i in 1..=d.prefix().len() + 3 {
            prop_assert!(bar.at(i) >= d.at(i));
        }
        prop_assert!(bar.is_weakly_increasing());
        prop_assert!(bar.is_unimodal());
    }

    #[test]
    fn reduction_laws(d in range_maps(), w in words(8, 8)) {
        let r = cliffs::reduce(&d, &w).unwrap();
        prop_assert!(cliffs::is_cliff(&d, &r).unwrap());
        prop_assert_eq!(cliffs::reduce(&d, &r).unwrap(), r.clone());
        prop_assert!(order::leq(&r, &w).unwrap());
        prop_assert_eq!(r == w, cliffs::is_cliff(&d, &w).unwrap());
    }

    #[test]
    fn lattice_absorption((u, v) in word_pairs()) {
        let m = order::meet(&u, &v).unwrap();
        let j = order::join(&u, &v).unwrap();
        prop_assert_eq!(order::join(&u, &m).unwrap(), u.clone());
        prop_assert_eq!(order::meet(&u, &j).unwrap(), u.clone());
        prop_assert!(order::leq(&m, &j).unwrap());
    }

    #[test]
    fn splice_word_laws(
        u in words(5, 6),
        v in words(5, 6),
        w in words(5, 6),
        i in 1usize..6,
        j in 1usize..6,
    ) {
        prop_assume!(i <= u.size());
        // Nested substitution.
        if j <= v.size() {
            let lhs = white_square(&white_square(&u, i, &v).unwrap(), i + j - 1, &w).unwrap();
            let rhs = white_square(&u, i, &white_square(&v, j, &w).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
        // Disjoint substitution.
        if j <= u.size() && i < j {
            let lhs = white_square(&white_square(&u, i, &v).unwrap(), j + v.len(), &w).unwrap();
            let rhs = white_square(&white_square(&u, j, &w).unwrap(), i, &v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn splice_is_monotone(
        d in range_maps(),
        u_raw in words(5, 8),
        v_raw in words(5, 8),
        bump_u in proptest::collection::vec(0u32..2, 5),
        bump_v in proptest::collection::vec(0u32..2, 5),
        i in 1usize..6,
    ) {
        let u = cliff_of(&d, &u_raw);
        let v = cliff_of(&d, &v_raw);
        prop_assume!(i <= u.size());
        let raise = |w: &CliffWord, bump: &[u32]| {
            cliff_of(
                &d,
                &CliffWord::new(
                    w.letters()
                        .iter()
                        .zip(bump)
                        .map(|(&a, &b)| a + b)
                        .collect(),
                ),
            )
        };
        let u2 = raise(&u, &bump_u);
        let v2 = raise(&v, &bump_v);
        let lo = white_square(&u, i, &v).unwrap();
        let hi = white_square(&u2, i, &v2).unwrap();
        prop_assert!(order::leq(&lo, &hi).unwrap());
    }

    #[test]
    fn saturated_splice_bounds_plain(
        d in range_maps(),
        u_raw in words(4, 8),
        v_raw in words(4, 8),
        i in 1usize..5,
    ) {
        let u = cliff_of(&d, &u_raw);
        let v = cliff_of(&d, &v_raw);
        prop_assume!(i <= u.size());
        let lo = white_square(&u, i, &v).unwrap();
        if chi(&d, &lo).unwrap() {
            let hi = black_square(&d, &u, i, &v).unwrap();
            prop_assert!(cliffs::is_cliff(&d, &hi).unwrap());
            prop_assert!(order::leq(&lo, &hi).unwrap());
        }
    }

    #[test]
    fn hill_projections_bracket(w in words(8, 8)) {
        let up = order::running_max(&w);
        let down = order::suffix_min(&w);
        prop_assert!(up.is_weakly_increasing());
        prop_assert!(down.is_weakly_increasing());
        prop_assert!(order::leq(&down, &w).unwrap());
        prop_assert!(order::leq(&w, &up).unwrap());
    }

    #[test]
    fn counts_match_enumeration(d in range_maps(), n in 1usize..6, hills in any::<bool>()) {
        let listed = cliffs::enumerate(&d, n, hills).unwrap();
        prop_assert_eq!(
            cliffs::count(&d, n, hills).unwrap(),
            num_bigint::BigUint::from(listed.len())
        );
        prop_assert!(listed.windows(2).all(|p| p[0] < p[1]));
    }
}
