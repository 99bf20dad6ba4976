mod common;

use common::arb_lattice;
use proptest::prelude::*;
use xlattice::{build_order, validate_lattice, Error, FiniteLattice};

proptest! {
    #[test]
    fn meet_and_join_are_bounds(l in arb_lattice(6)) {
        for x in l.elements() {
            for y in l.elements() {
                let (m, j) = (l.meet(x, y), l.join(x, y));
                prop_assert!(l.leq(m, x) && l.leq(m, y));
                prop_assert!(l.leq(x, j) && l.leq(y, j));
                for z in l.elements() {
                    if l.leq(z, x) && l.leq(z, y) {
                        prop_assert!(l.leq(z, m));
                    }
                    if l.leq(x, z) && l.leq(y, z) {
                        prop_assert!(l.leq(j, z));
                    }
                }
            }
        }
    }

    #[test]
    fn order_is_recovered_from_meet_and_join(l in arb_lattice(6)) {
        for x in l.elements() {
            for y in l.elements() {
                prop_assert_eq!(l.leq(x, y), l.meet(x, y) == x);
                prop_assert_eq!(l.leq(x, y), l.join(x, y) == y);
            }
        }
    }

    #[test]
    fn down_sets_join_back(l in arb_lattice(6)) {
        for a in l.elements() {
            prop_assert_eq!(l.big_join(l.down_set(a).iter()), a);
            prop_assert_eq!(l.big_meet(l.up_set(a).iter()), a);
            prop_assert!(l.leq(l.bottom(), a) && l.leq(a, l.top()));
        }
        prop_assert_eq!(l.big_meet([]), l.top());
        prop_assert_eq!(l.big_join([]), l.bottom());
    }

    #[test]
    fn covers_generate_the_order(l in arb_lattice(6)) {
        let rebuilt = FiniteLattice::from_pairs(l.size(), &l.covers()).unwrap();
        for x in l.elements() {
            for y in l.elements() {
                prop_assert_eq!(rebuilt.leq(x, y), l.leq(x, y));
            }
        }
    }

    #[test]
    fn closure_is_transitive(pairs in proptest::collection::vec((0usize..8, 0usize..8), 0..20)) {
        let forward: Vec<_> = pairs.into_iter().filter(|(a, b)| a < b).collect();
        let order = build_order(8, &forward).unwrap();
        for x in 0..8 {
            prop_assert!(order.leq(x, x));
            for y in 0..8 {
                for z in 0..8 {
                    if order.leq(x, y) && order.leq(y, z) {
                        prop_assert!(order.leq(x, z));
                    }
                }
            }
        }
    }
}

#[test]
fn lattice_k_from_covers() {
    // 0 < a < b < d < 1, 0 < c < d
    let order = build_order(6, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4), (4, 5)]).unwrap();
    let k = validate_lattice(order).unwrap();
    assert_eq!((k.bottom(), k.top()), (0, 5));
    assert_eq!(k.size(), 6);
}

#[test]
fn redundant_pairs_are_accepted() {
    let l = FiniteLattice::from_pairs(3, &[(0, 1), (1, 2), (0, 2), (1, 1)]).unwrap();
    assert_eq!(l.covers(), vec![(0, 1), (1, 2)]);
}

#[test]
fn cycle_through_closure() {
    assert!(matches!(
        build_order(3, &[(0, 1), (1, 2), (2, 1)]),
        Err(Error::Cycle { a: 1, b: 2 })
    ));
}
