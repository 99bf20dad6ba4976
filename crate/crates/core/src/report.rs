//! Per-element classification reports with labeled witnesses.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::mult::{MultiplicativeLattice, Witness};
use crate::set::ElementSet;
use crate::xclass::{self, MClosedSet};

/// A [`Witness`] with element labels in place of indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LabeledWitness {
    NotProper,
    Pair { a: String, b: String },
    Above { n: String },
}

impl LabeledWitness {
    fn new(m: &MultiplicativeLattice, w: Witness) -> Self {
        match w {
            Witness::NotProper => LabeledWitness::NotProper,
            Witness::Pair { a, b } => LabeledWitness::Pair {
                a: m.label(a).to_string(),
                b: m.label(b).to_string(),
            },
            Witness::Above { n } => LabeledWitness::Above {
                n: m.label(n).to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<LabeledWitness>,
}

impl Flag {
    fn from_witness(m: &MultiplicativeLattice, w: Option<Witness>) -> Self {
        Self {
            holds: w.is_none(),
            witness: w.map(|w| LabeledWitness::new(m, w)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFlag {
    pub set: String,
    #[serde(flatten)]
    pub flag: Flag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRow {
    pub element: String,
    pub prime: Flag,
    pub primary: Flag,
    pub maximal: Flag,
    pub r: Flag,
    pub n: Flag,
    pub j: Flag,
    pub x: Vec<SetFlag>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub max: Vec<String>,
    pub jacobson: String,
    pub min_primes: Vec<String>,
    pub nilpotents: Vec<String>,
    pub zero_divisors: Vec<String>,
    pub nil_radical: String,
    pub local: bool,
    pub domain: bool,
    pub reduced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSet {
    pub name: String,
    pub members: Vec<String>,
    pub x_elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub name: String,
    pub elements: Vec<String>,
    pub summary: Summary,
    pub sets: Vec<NamedSet>,
    pub rows: Vec<ElementRow>,
}

fn labels(m: &MultiplicativeLattice, s: &ElementSet) -> Vec<String> {
    s.iter().map(|x| m.label(x).to_string()).collect()
}

/// Classifies every element of `m` against the given sets and the r/n/J sets.
pub fn classify(
    name: &str,
    m: &MultiplicativeLattice,
    sets: &[(String, MClosedSet)],
) -> Result<ClassificationReport> {
    let (r, n, j) = (xclass::r_set(m)?, xclass::n_set(m)?, xclass::j_set(m)?);
    let summary = Summary {
        max: labels(m, &m.max_elements()?),
        jacobson: m.label(m.jacobson()?).to_string(),
        min_primes: labels(m, &m.min_primes()?),
        nilpotents: labels(m, &m.nilpotents()),
        zero_divisors: labels(m, &m.zero_divisors()),
        nil_radical: m.label(m.radical(m.bottom())).to_string(),
        local: m.is_local()?,
        domain: m.is_domain(),
        reduced: m.is_reduced(),
    };
    let named = sets
        .iter()
        .map(|(name, x)| NamedSet {
            name: name.clone(),
            members: labels(m, x.members()),
            x_elements: labels(m, &xclass::x_elements(m, x)),
        })
        .collect();
    let rows = m
        .elements()
        .map(|i| ElementRow {
            element: m.label(i).to_string(),
            prime: Flag::from_witness(m, m.prime_witness(i)),
            primary: Flag::from_witness(m, m.primary_witness(i)),
            maximal: Flag::from_witness(m, m.maximal_witness(i)),
            r: Flag::from_witness(m, xclass::x_element_witness(m, &r, i)),
            n: Flag::from_witness(m, xclass::x_element_witness(m, &n, i)),
            j: Flag::from_witness(m, xclass::x_element_witness(m, &j, i)),
            x: sets
                .iter()
                .map(|(name, x)| SetFlag {
                    set: name.clone(),
                    flag: Flag::from_witness(m, xclass::x_element_witness(m, x, i)),
                })
                .collect(),
        })
        .collect();
    Ok(ClassificationReport {
        name: name.to_string(),
        elements: m.labels().to_vec(),
        summary,
        sets: named,
        rows,
    })
}
