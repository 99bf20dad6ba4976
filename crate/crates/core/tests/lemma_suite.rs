use xlattice::corpus::{lattice_k, standard_corpus, InstanceSpec};
use xlattice::report::{classify, LabeledWitness};
use xlattice::ring::ideal_lattice_zn;
use xlattice::suite::lemma_suite;
use xlattice::xclass::{is_x_element, make_m_closed};
use xlattice::{ElementSet, Error, MClosedSet, MultiplicativeLattice};

fn named(m: &MultiplicativeLattice, name: &str, labels: &[&str]) -> (String, MClosedSet) {
    let set = ElementSet::from_indices(m.size(), labels.iter().map(|l| m.index_of(l).unwrap()));
    (name.to_string(), make_m_closed(m, set).unwrap())
}

#[test]
fn suite_passes_on_named_examples() {
    let k = lattice_k().unwrap();
    let sets = [named(&k, "X", &["0", "a", "b", "c", "d"])];
    let report = lemma_suite(&k, &sets).unwrap();
    assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());

    let z12 = ideal_lattice_zn(12).unwrap().0;
    let report = lemma_suite(&z12, &[]).unwrap();
    assert!(report.passed());
    let ids: std::collections::BTreeSet<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
    for id in ["L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9", "L10", "L11", "L12", "L13", "L14", "L15", "L16"] {
        assert!(ids.contains(id), "missing {id}");
    }

    let z15 = ideal_lattice_zn(15).unwrap().0;
    let sets = [named(&z15, "X", &["(0)", "(3)", "(5)"])];
    let report = lemma_suite(&z15, &sets).unwrap();
    assert!(report.passed());
    let failure = report.join_failures.iter().find(|f| f.set == "X").unwrap();
    let mut pair = [failure.first.as_str(), failure.second.as_str()];
    pair.sort();
    assert_eq!(pair, ["(3)", "(5)"]);
    assert_eq!(failure.join, "(1)");
}

#[test]
fn suite_rejects_degenerate_lattice() {
    let one = InstanceSpec::Chain(0).build().unwrap();
    assert_eq!(lemma_suite(&one, &[]).unwrap_err(), Error::DegenerateLattice);
}

#[test]
fn suite_passes_on_corpus_with_all_down_sets() {
    for spec in standard_corpus().into_iter().step_by(7) {
        let m = spec.build().unwrap();
        let sets: Vec<_> = m
            .elements()
            .map(|j| (format!("down:{}", m.label(j)), MClosedSet::down_set(&m, j)))
            .collect();
        let report = lemma_suite(&m, &sets).unwrap();
        assert!(report.passed(), "{spec}: {:?}", report.failures().collect::<Vec<_>>());
    }
}

/// Every witness in a report must violate its definition when re-checked.
#[test]
fn report_witnesses_recheck() {
    for spec in [InstanceSpec::Zn(12), InstanceSpec::Zn(15), InstanceSpec::Prod(4, 9), InstanceSpec::K] {
        let m = spec.build().unwrap();
        let sets = vec![("all-down".to_string(), MClosedSet::down_set(&m, m.jacobson().unwrap()))];
        let report = classify(&spec.to_string(), &m, &sets).unwrap();
        let at = |l: &str| m.index_of(l).unwrap();
        for row in &report.rows {
            let i = at(&row.element);
            let root = m.radical(i);
            for (flag, violates) in [
                (&row.prime, Box::new(|a, b| !m.leq(a, i) && !m.leq(b, i)) as Box<dyn Fn(usize, usize) -> bool>),
                (&row.primary, Box::new(|a, b| !m.leq(a, i) && !m.leq(b, root))),
            ] {
                match &flag.witness {
                    Some(LabeledWitness::Pair { a, b }) => {
                        let (a, b) = (at(a), at(b));
                        assert!(m.leq(m.mul(a, b), i) && violates(a, b));
                    }
                    Some(LabeledWitness::NotProper) => assert_eq!(i, m.top()),
                    Some(other) => panic!("unexpected {other:?}"),
                    None => assert!(flag.holds),
                }
            }
            if let Some(LabeledWitness::Above { n }) = &row.maximal.witness {
                assert!(m.lt(i, at(n)) && at(n) != m.top());
            }
            for (set_flag, (_, x)) in row.x.iter().zip(&sets) {
                assert_eq!(set_flag.flag.holds, is_x_element(&m, x, i));
                if let Some(LabeledWitness::Pair { a, b }) = &set_flag.flag.witness {
                    let (a, b) = (at(a), at(b));
                    assert!(!x.contains(a) && m.leq(m.mul(a, b), i) && !m.leq(b, i));
                }
            }
        }
    }
}
