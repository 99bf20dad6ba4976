//! M-closed sets, X-elements and their r/n/J specializations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mult::{MultiplicativeLattice, Witness};
use crate::set::ElementSet;

/// A nonempty set closed under multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MClosedSet {
    members: ElementSet,
}

/// Validates that `set` is nonempty and closed under products.
pub fn make_m_closed(m: &MultiplicativeLattice, set: ElementSet) -> Result<MClosedSet> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if set.universe() != m.size() {
        return Err(Error::IndexOutOfRange {
            index: set.universe(),
            size: m.size(),
        });
    }
    for a in set.iter() {
        for b in set.iter() {
            let product = m.mul(a, b);
            if !set.contains(product) {
                return Err(Error::NotMClosed { a, b, product });
            }
        }
    }
    Ok(MClosedSet { members: set })
}

impl MClosedSet {
    pub fn new(m: &MultiplicativeLattice, set: ElementSet) -> Result<Self> {
        make_m_closed(m, set)
    }

    /// `(j]`, which is always M-closed since products shrink.
    pub fn down_set(m: &MultiplicativeLattice, j: usize) -> Self {
        Self {
            members: m.down_set(j).clone(),
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// The `j` with `self = (j]`, if the set is principal.
    pub fn principal_generator(&self, m: &MultiplicativeLattice) -> Option<usize> {
        let j = m.big_join(self.members.iter());
        (m.down_set(j) == &self.members).then_some(j)
    }
}

/// First `(a, b)` in index order with `a·b ≤ i`, `a ∉ X` and `b ≰ i`.
pub fn x_element_witness(m: &MultiplicativeLattice, x: &MClosedSet, i: usize) -> Option<Witness> {
    if i == m.top() {
        return Some(Witness::NotProper);
    }
    for a in m.elements().filter(|&a| !x.contains(a)) {
        for b in m.elements() {
            if m.leq(m.mul(a, b), i) && !m.leq(b, i) {
                return Some(Witness::Pair { a, b });
            }
        }
    }
    None
}

pub fn is_x_element(m: &MultiplicativeLattice, x: &MClosedSet, i: usize) -> bool {
    x_element_witness(m, x, i).is_none()
}

pub fn x_elements(m: &MultiplicativeLattice, x: &MClosedSet) -> ElementSet {
    ElementSet::from_indices(
        m.size(),
        m.elements().filter(|&i| is_x_element(m, x, i)),
    )
}

/// `Z(L)`, the set behind r-elements.
pub fn r_set(m: &MultiplicativeLattice) -> Result<MClosedSet> {
    if m.size() == 1 {
        return Err(Error::DegenerateLattice);
    }
    make_m_closed(m, m.zero_divisors())
}

/// `(√0]`, the set behind n-elements.
pub fn n_set(m: &MultiplicativeLattice) -> Result<MClosedSet> {
    if m.size() == 1 {
        return Err(Error::DegenerateLattice);
    }
    Ok(MClosedSet::down_set(m, m.radical(m.bottom())))
}

/// `(J(L)]`, the set behind J-elements.
pub fn j_set(m: &MultiplicativeLattice) -> Result<MClosedSet> {
    Ok(MClosedSet::down_set(m, m.jacobson()?))
}

pub fn is_r(m: &MultiplicativeLattice, i: usize) -> Result<bool> {
    Ok(is_x_element(m, &r_set(m)?, i))
}

pub fn is_n(m: &MultiplicativeLattice, i: usize) -> Result<bool> {
    Ok(is_x_element(m, &n_set(m)?, i))
}

pub fn is_j(m: &MultiplicativeLattice, i: usize) -> Result<bool> {
    Ok(is_x_element(m, &j_set(m)?, i))
}

/// `i` proper and `i = (i:a)` for every `a ∉ X`.
pub fn residual_characterization(m: &MultiplicativeLattice, x: &MClosedSet, i: usize) -> bool {
    i != m.top()
        && m
            .elements()
            .filter(|&a| !x.contains(a))
            .all(|a| m.residual(i, a) == i)
}

/// Why a set fails to be X-multiplicatively closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum XMultWitness {
    Empty,
    /// An element outside X that is missing from the set.
    Missing { a: usize },
    /// `a1 ∉ X`, `a2` in the set, `a1·a2` not in the set.
    Escapes { a1: usize, a2: usize, product: usize },
}

impl fmt::Display for XMultWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XMultWitness::Empty => write!(f, "empty set"),
            XMultWitness::Missing { a } => write!(f, "{a} lies outside X but is missing"),
            XMultWitness::Escapes { a1, a2, product } => {
                write!(f, "{a1}·{a2} = {product} escapes the set")
            }
        }
    }
}

pub fn x_mult_closed_witness(
    m: &MultiplicativeLattice,
    x: &MClosedSet,
    set: &ElementSet,
) -> Option<XMultWitness> {
    if set.is_empty() {
        return Some(XMultWitness::Empty);
    }
    let outside = x.members().complement();
    if let Some(a) = outside.iter().find(|&a| !set.contains(a)) {
        return Some(XMultWitness::Missing { a });
    }
    for a1 in outside.iter() {
        for a2 in set.iter() {
            let product = m.mul(a1, a2);
            if !set.contains(product) {
                return Some(XMultWitness::Escapes { a1, a2, product });
            }
        }
    }
    None
}

pub fn check_x_mult_closed(m: &MultiplicativeLattice, x: &MClosedSet, set: &ElementSet) -> bool {
    x_mult_closed_witness(m, x, set).is_none()
}

/// A validated X-multiplicatively closed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XMultClosedSet {
    members: ElementSet,
}

impl XMultClosedSet {
    pub fn new(m: &MultiplicativeLattice, x: &MClosedSet, set: ElementSet) -> Result<Self> {
        match x_mult_closed_witness(m, x, &set) {
            None => Ok(Self { members: set }),
            Some(w) => Err(Error::NotXMultClosed(w)),
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }
}

/// Whether `L ∖ (i]` is X-multiplicatively closed, for proper `i`.
pub fn complement_characterization(m: &MultiplicativeLattice, x: &MClosedSet, i: usize) -> bool {
    i != m.top() && check_x_mult_closed(m, x, &m.down_set(i).complement())
}

/// Maximal elements of `{c | a ≤ c, t ≰ c for all t ∈ A}`, in decreasing
/// order of down-set size (ties by index).
pub fn avoiding_maximals(
    m: &MultiplicativeLattice,
    a: usize,
    avoid: &XMultClosedSet,
) -> Result<Vec<usize>> {
    if let Some(t) = avoid.members().iter().find(|&t| m.leq(t, a)) {
        return Err(Error::PreconditionViolated { t, a });
    }
    let region: Vec<usize> = m
        .up_set(a)
        .iter()
        .filter(|&c| !avoid.members().iter().any(|t| m.leq(t, c)))
        .collect();
    let mut maximals: Vec<usize> = region
        .iter()
        .copied()
        .filter(|&c| !region.iter().any(|&d| m.lt(c, d)))
        .collect();
    maximals.sort_by_key(|&c| (std::cmp::Reverse(m.down_set(c).len()), c));
    Ok(maximals)
}

/// An X-element above `a` that is maximal among elements avoiding every
/// member of `avoid`. The X-element property of the result is checked, not
/// assumed.
pub fn maximal_x_avoiding(
    m: &MultiplicativeLattice,
    x: &MClosedSet,
    a: usize,
    avoid: &XMultClosedSet,
) -> Result<usize> {
    // `a` itself avoids A, so the region is nonempty.
    let i = avoiding_maximals(m, a, avoid)?[0];
    match x_element_witness(m, x, i) {
        None => Ok(i),
        Some(Witness::Pair { a, b }) => Err(Error::ConclusionFailed { i, witness: (a, b) }),
        Some(_) => Err(Error::ConclusionFailed {
            i,
            witness: (i, i),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mult::trivial_mult;
    use crate::order::FiniteLattice;

    fn k() -> MultiplicativeLattice {
        trivial_mult(
            FiniteLattice::from_pairs(6, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4), (4, 5)])
                .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn k_proper_elements_are_x_elements() {
        let m = k();
        let x = make_m_closed(&m, ElementSet::from_indices(6, 0..5)).unwrap();
        assert_eq!(x_elements(&m, &x), ElementSet::from_indices(6, 0..5));
        assert_eq!(x.principal_generator(&m), Some(4));
    }

    #[test]
    fn top_only_set_has_no_x_elements() {
        let m = k();
        let x = make_m_closed(&m, ElementSet::singleton(6, 5)).unwrap();
        assert!(x_elements(&m, &x).is_empty());
        assert_eq!(x.principal_generator(&m), None);
    }

    #[test]
    fn empty_and_open_sets_rejected() {
        let m = k();
        assert_eq!(make_m_closed(&m, ElementSet::empty(6)), Err(Error::EmptySet));
        // {1, c, d}: c·d = 0
        assert_eq!(
            make_m_closed(&m, ElementSet::from_indices(6, [3, 4, 5])),
            Err(Error::NotMClosed {
                a: 3,
                b: 3,
                product: 0
            })
        );
    }

    #[test]
    fn remark_sets_on_k() {
        let m = k();
        let x = make_m_closed(&m, ElementSet::from_indices(6, 0..5)).unwrap();
        let a = ElementSet::from_indices(6, [3, 4, 5]);
        assert!(check_x_mult_closed(&m, &x, &a));
        assert!(check_x_mult_closed(&m, &x, &m.all()));
        assert_eq!(
            x_mult_closed_witness(&m, &x, &ElementSet::empty(6)),
            Some(XMultWitness::Empty)
        );
    }

    #[test]
    fn maximal_avoiding_on_k() {
        let m = k();
        let x = MClosedSet::down_set(&m, 4);
        let a = XMultClosedSet::new(&m, &x, ElementSet::singleton(6, 5)).unwrap();
        assert_eq!(maximal_x_avoiding(&m, &x, 0, &a), Ok(4));
        let with_bottom = XMultClosedSet::new(&m, &x, m.all()).unwrap();
        assert_eq!(
            maximal_x_avoiding(&m, &x, 2, &with_bottom),
            Err(Error::PreconditionViolated { t: 0, a: 2 })
        );
    }

    #[test]
    fn residual_characterization_on_k() {
        let m = k();
        let x = make_m_closed(&m, ElementSet::from_indices(6, 0..5)).unwrap();
        assert!(residual_characterization(&m, &x, 2));
        assert!(!residual_characterization(&m, &x, 5));
    }
}
