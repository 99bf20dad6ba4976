mod common;

use common::arb_lattice;
use proptest::prelude::*;
use xlattice::corpus::{lattice_k, standard_corpus};
use xlattice::suite::lemma_suite;
use xlattice::{meet_mult, trivial_mult, Axiom, Error, FiniteLattice, MultiplicativeLattice};

fn assert_invariants(m: &MultiplicativeLattice) {
    let n = m.size();
    for a in 0..n {
        for b in 0..n {
            assert_eq!(m.mul(a, b), m.mul(b, a));
            assert!(m.leq(m.mul(a, b), m.meet(a, b)));
            for c in 0..n {
                if m.leq(a, b) {
                    assert!(m.leq(m.mul(a, c), m.mul(b, c)));
                }
            }
        }
    }
    for i in 0..n {
        for a in 0..n {
            let r = m.residual(i, a);
            assert!(m.leq(i, r));
            assert!(m.leq(m.mul(r, a), i));
            for x in 0..n {
                assert_eq!(m.leq(m.mul(x, a), i), m.leq(x, r));
            }
        }
        let root = m.radical(i);
        assert!(m.leq(i, root));
        assert_eq!(m.radical(root), root);
        assert_eq!(m.radical_by_powers(i), m.radical_by_min_primes(i));
    }
    if n > 1 {
        assert!(m.nilpotents().is_subset(&m.zero_divisors()));
        for max in m.max_elements().unwrap().iter() {
            assert!(m.is_prime(max));
        }
    }
}

#[test]
fn corpus_invariants() {
    for spec in standard_corpus() {
        assert_invariants(&spec.build().unwrap());
    }
}

/// Adjoins a new top above every element, which makes top join-irreducible.
fn with_new_top(l: &FiniteLattice) -> FiniteLattice {
    let n = l.size();
    let mut pairs = l.covers();
    pairs.push((l.top(), n));
    FiniteLattice::from_pairs(n + 1, &pairs).unwrap()
}

fn is_distributive(l: &FiniteLattice) -> bool {
    l.elements().all(|a| {
        l.elements().all(|b| {
            l.elements()
                .all(|c| l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trivial_mult_with_irreducible_top(l in arb_lattice(5)) {
        let m = trivial_mult(with_new_top(&l)).unwrap();
        assert_invariants(&m);
        prop_assert!(m.is_local().unwrap());
        let report = lemma_suite(&m, &[]).unwrap();
        prop_assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn trivial_mult_accepted_iff_top_irreducible(l in arb_lattice(5)) {
        let reducible = l.top_join_reducing_pair().is_some();
        match trivial_mult(l) {
            Ok(m) => { prop_assert!(!reducible); assert_invariants(&m); }
            Err(e) => {
                prop_assert!(reducible);
                prop_assert!(matches!(e, Error::TopJoinReducible { .. }), "unexpected {e:?}");
            }
        }
    }

    #[test]
    fn meet_mult_accepted_iff_distributive(l in arb_lattice(5)) {
        let distributive = is_distributive(&l);
        match meet_mult(l) {
            Ok(m) => {
                prop_assert!(distributive);
                assert_invariants(&m);
                let report = lemma_suite(&m, &[]).unwrap();
                prop_assert!(report.passed());
            }
            Err(Error::AxiomViolation { axiom, .. }) => {
                prop_assert!(!distributive);
                prop_assert_eq!(axiom, Axiom::JoinDistributivity);
            }
            Err(e) => prop_assert!(false, "unexpected {e:?}"),
        }
    }
}

#[test]
fn lattice_k_examples() {
    let k = lattice_k().unwrap();
    let at = |s: &str| k.index_of(s).unwrap();
    assert_eq!(k.annihilator(at("c")), at("d"));
    assert_eq!(k.annihilator(at("0")), at("1"));
    assert_eq!(k.nilpotents().len(), 5);
    assert!(!k.is_reduced());
    assert_eq!(k.jacobson().unwrap(), at("d"));
    assert!(k.is_local().unwrap());
    for x in ["0", "a", "b", "c", "d"] {
        assert_eq!(k.mul(at(x), at(x)), at("0"));
    }
}

#[test]
fn chains_accept_trivial_and_meet() {
    for len in 1..=9 {
        let chain = FiniteLattice::chain(len).unwrap();
        assert!(trivial_mult(chain.clone()).is_ok());
        assert!(meet_mult(chain).is_ok());
    }
}
