//! Corpus scans for properties of X-element sets.

use xlattice::corpus::InstanceSpec;
use xlattice::suite::standard_sets;
use xlattice::xclass::{self, x_elements};
use xlattice::{MClosedSet, MultiplicativeLattice, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Property {
    /// Two X-elements (X = Z, (√0] or (J]) whose join is not an X-element.
    JoinOfXNotX,
    /// X = (meet of primes]: an X-element exists ⟺ that meet is prime ⟺
    /// exactly one minimal prime. Matches are counterexamples.
    XExistsIffMinPrimeUnique,
    /// Some r-element is not an n-element. An n-element that is not an
    /// r-element is a counterexample.
    NStrictlyInsideR,
    /// Some J-element is not an n-element. An n-element that is not a
    /// J-element is a counterexample.
    NStrictlyInsideJ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub instance: InstanceSpec,
    pub detail: String,
    /// The match refutes an expected implication.
    pub counterexample: bool,
}

fn strict_inside(
    m: &MultiplicativeLattice,
    inner_name: &str,
    inner: &MClosedSet,
    outer_name: &str,
    outer: &MClosedSet,
) -> Option<(String, bool)> {
    let (xi, xo) = (x_elements(m, inner), x_elements(m, outer));
    if let Some(e) = xi.difference(&xo).first() {
        return Some((
            format!("{}: {inner_name}-element, not {outer_name}-element", m.label(e)),
            true,
        ));
    }
    xo.difference(&xi).first().map(|e| {
        (
            format!("{}: {outer_name}-element, not {inner_name}-element", m.label(e)),
            false,
        )
    })
}

/// Tests one instance; `None` when it does not match.
pub fn check(m: &MultiplicativeLattice, property: Property) -> Result<Option<(String, bool)>> {
    Ok(match property {
        Property::JoinOfXNotX => {
            let mut found = Vec::new();
            for (name, x) in standard_sets(m)? {
                let xs = x_elements(m, &x);
                'set: for a in &xs {
                    for b in &xs {
                        let join = m.join(a, b);
                        if a < b && !xs.contains(join) {
                            found.push(format!(
                                "{name}: {} ∨ {} = {}",
                                m.label(a),
                                m.label(b),
                                m.label(join)
                            ));
                            break 'set;
                        }
                    }
                }
            }
            (!found.is_empty()).then(|| (found.join("; "), false))
        }
        Property::XExistsIffMinPrimeUnique => {
            let meet_of_primes = m.big_meet(m.primes().iter());
            let x = MClosedSet::down_set(m, meet_of_primes);
            let exists = !x_elements(m, &x).is_empty();
            let prime = m.is_prime(meet_of_primes);
            let unique = m.min_primes()?.len() == 1;
            (!(exists == prime && prime == unique)).then(|| {
                (
                    format!("X-element exists: {exists}, meet of primes is prime: {prime}, one minimal prime: {unique}"),
                    true,
                )
            })
        }
        Property::NStrictlyInsideR => strict_inside(m, "n", &xclass::n_set(m)?, "r", &xclass::r_set(m)?),
        Property::NStrictlyInsideJ => strict_inside(m, "n", &xclass::n_set(m)?, "J", &xclass::j_set(m)?),
    })
}

/// Scans the corpus in order and returns every match.
pub fn search(corpus: &[InstanceSpec], property: Property) -> Result<Vec<Hit>> {
    let mut hits = Vec::new();
    for &instance in corpus {
        let m = instance.build()?;
        if let Some((detail, counterexample)) = check(&m, property)? {
            hits.push(Hit { instance, detail, counterexample });
        }
    }
    Ok(hits)
}
