//! Turning parsed lattice files into validated lattices, and naming the
//! elements in diagnostics.

use xlattice::order::FiniteLattice;
use xlattice::xclass::{self, make_m_closed};
use xlattice::{attach_multiplication, meet_mult, trivial_mult, ElementSet, Error, MClosedSet, MultTable, MultiplicativeLattice};

use crate::spec::{parse_spec, LatticeSpecFile, Multiplication, ParseError, SetDef};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    /// The file parsed but does not describe a multiplicative lattice, or a
    /// named set is not M-closed. `message` names elements by label.
    #[error("{message}")]
    Invalid { error: Error, message: String },
}

/// A validated lattice with its named sets.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub name: String,
    pub lattice: MultiplicativeLattice,
    pub sets: Vec<(String, MClosedSet)>,
}

fn invalid(error: Error, labels: &[String]) -> LoadError {
    LoadError::Invalid { message: describe(&error, labels), error }
}

pub fn load(spec: &LatticeSpecFile) -> Result<Loaded, LoadError> {
    let labels = &spec.elements;
    let at = |l: &str| labels.iter().position(|x| x == l).expect("labels resolved by the parser");
    let pairs: Vec<(usize, usize)> = spec.order.iter().map(|(a, b)| (at(a), at(b))).collect();
    let lattice = FiniteLattice::from_pairs(labels.len(), &pairs)
        .map_err(|e| invalid(e, labels))?
        .with_labels(labels.iter().cloned());
    let m = match &spec.multiplication {
        Multiplication::Trivial => trivial_mult(lattice),
        Multiplication::Meet => meet_mult(lattice),
        Multiplication::Table(rows) => {
            let rows = rows.iter().map(|r| r.iter().map(|e| at(e)).collect()).collect();
            let table = MultTable::from_rows(rows).map_err(|e| invalid(e, labels))?;
            attach_multiplication(lattice, table)
        }
    }
    .map_err(|e| invalid(e, labels))?;

    let mut sets = Vec::with_capacity(spec.sets.len());
    for decl in &spec.sets {
        let x = match &decl.def {
            SetDef::Explicit(members) => {
                let set = ElementSet::from_indices(m.size(), members.iter().map(|e| at(e)));
                make_m_closed(&m, set)
            }
            SetDef::ZeroDivisors => xclass::r_set(&m),
            SetDef::NilDownset => xclass::n_set(&m),
            SetDef::JradDownset => xclass::j_set(&m),
            SetDef::Downset(e) => Ok(MClosedSet::down_set(&m, at(e))),
        }
        .map_err(|e| {
            let inner = invalid(e.clone(), labels);
            LoadError::Invalid { message: format!("set {}: {inner}", decl.name), error: e }
        })?;
        sets.push((decl.name.clone(), x));
    }
    Ok(Loaded { name: spec.name.clone(), lattice: m, sets })
}

pub fn load_str(text: &str) -> Result<Loaded, LoadError> {
    load(&parse_spec(text)?)
}

/// Renders a library error with element labels in place of indices.
pub fn describe(error: &Error, labels: &[String]) -> String {
    let l = |i: &usize| labels.get(*i).map(String::as_str).unwrap_or("?").to_string();
    match error {
        Error::Cycle { a, b } => format!("order has a cycle: {} ≤ {} and {} ≤ {}", l(a), l(b), l(b), l(a)),
        Error::NotALattice { x, y, bound } => {
            format!("not a lattice: {} and {} have no {bound}", l(x), l(y))
        }
        Error::AxiomViolation { axiom, witness } => {
            let w: Vec<String> = witness.iter().map(l).collect();
            format!("axiom {axiom} violated at ({})", w.join(", "))
        }
        Error::TopJoinReducible { x, y } => format!(
            "trivial multiplication needs a join-irreducible top, but {} ∨ {} is the top",
            l(x),
            l(y)
        ),
        Error::ResidualMismatch { i, a, residual, x } => format!(
            "residual ({}:{}) = {} breaks the adjunction at {}",
            l(i),
            l(a),
            l(residual),
            l(x)
        ),
        Error::RadicalMismatch { a, by_powers, by_primes } => format!(
            "radical of {}: powers give {}, minimal primes give {}",
            l(a),
            l(by_powers),
            l(by_primes)
        ),
        Error::NotMClosed { a, b, product } => {
            format!("not M-closed: {}·{} = {} is missing", l(a), l(b), l(product))
        }
        Error::PreconditionViolated { t, a } => format!("precondition violated: {} ≤ {}", l(t), l(a)),
        Error::ConclusionFailed { i, witness: (a, b) } => format!(
            "maximal avoiding element {} is not an X-element (witness {}, {})",
            l(i),
            l(a),
            l(b)
        ),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use xlattice::Axiom;

    #[test]
    fn broken_identity_is_reported_with_labels() {
        // 1·1 = a
        let text = "name: c\nelements: 0 a 1\norder:\n  0 < a < 1\nmultiplication: table\n  0: 0 0 0\n  a: 0 0 a\n  1: 0 a a\n";
        let err = load_str(text).unwrap_err();
        let LoadError::Invalid { error, message } = err else { panic!() };
        assert!(matches!(error, Error::AxiomViolation { axiom: Axiom::Identity, .. }), "{error:?}");
        assert!(message.contains("identity"), "{message}");
    }

    #[test]
    fn non_m_closed_set_names_the_set() {
        let text = "name: K\nelements: 0 a b c d 1\norder:\n  0 < a < b < d < 1\n  0 < c < d\nmultiplication: trivial\nsets:\n  A = {1, c, d}\n";
        let err = load_str(text).unwrap_err();
        assert!(err.to_string().starts_with("set A: not M-closed"), "{err}");
    }
}
