//! Multiplications on finite lattices and the element classes they induce.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Axiom, Error, Result};
use crate::order::FiniteLattice;
use crate::set::ElementSet;

/// A `size × size` table of products, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultTable {
    size: usize,
    entries: Vec<usize>,
}

impl MultTable {
    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                entries.push(f(a, b));
            }
        }
        Self { size, entries }
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::TableShape {
                    expected: size * size,
                    got: size * (size - 1) + row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.size + b]
    }

    pub fn set(&mut self, a: usize, b: usize, value: usize) {
        self.entries[a * self.size + b] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.entries.chunks(self.size.max(1))
    }
}

/// Why an element fails a classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    /// The element is top.
    NotProper,
    /// `a·b ≤ i` but the definition's conclusion fails for `(a, b)`.
    Pair { a: usize, b: usize },
    /// A proper element strictly above the candidate.
    Above { n: usize },
}

/// A finite lattice with a validated commutative, associative,
/// join-distributive multiplication that has top as identity.
#[derive(Debug, Clone)]
pub struct MultiplicativeLattice {
    lattice: FiniteLattice,
    table: MultTable,
    primes: ElementSet,
    radicals: Vec<usize>,
}

impl Deref for MultiplicativeLattice {
    type Target = FiniteLattice;

    fn deref(&self) -> &FiniteLattice {
        &self.lattice
    }
}

/// Validates `table` against `lattice` and attaches it.
///
/// Besides the four axioms (distributivity checked on binary joins and on the
/// empty join `a·0 = 0`), this re-checks the derived inequalities, the
/// residual adjunction, and that the power-sequence radical of every element
/// equals the meet of its minimal primes.
pub fn attach_multiplication(
    lattice: FiniteLattice,
    table: MultTable,
) -> Result<MultiplicativeLattice> {
    let n = lattice.size();
    if table.size() != n || table.entries.len() != n * n {
        return Err(Error::TableShape {
            expected: n * n,
            got: table.entries.len(),
        });
    }
    let violation = |axiom, witness: Vec<usize>| Err(Error::AxiomViolation { axiom, witness });
    let mul = |a, b| table.get(a, b);
    let top = lattice.top();
    let bottom = lattice.bottom();

    for a in 0..n {
        for b in 0..n {
            if mul(a, b) >= n {
                return violation(Axiom::Closure, vec![a, b]);
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if mul(a, b) != mul(b, a) {
                return violation(Axiom::Commutativity, vec![a, b]);
            }
        }
    }
    for a in 0..n {
        if mul(a, top) != a {
            return violation(Axiom::Identity, vec![a]);
        }
    }
    for a in 0..n {
        if mul(a, bottom) != bottom {
            return violation(Axiom::ZeroAnnihilation, vec![a]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in b + 1..n {
                if mul(a, lattice.join(b, c)) != lattice.join(mul(a, b), mul(a, c)) {
                    return violation(Axiom::JoinDistributivity, vec![a, b, c]);
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(a, mul(b, c)) != mul(mul(a, b), c) {
                    return violation(Axiom::Associativity, vec![a, b, c]);
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !lattice.leq(mul(a, b), lattice.meet(a, b)) {
                return violation(Axiom::BelowMeet, vec![a, b]);
            }
        }
    }
    for a in 0..n {
        for b in lattice.up_set(a) {
            for c in 0..n {
                if !lattice.leq(mul(a, c), mul(b, c)) {
                    return violation(Axiom::Monotonicity, vec![a, b, c]);
                }
            }
        }
    }

    let mut m = MultiplicativeLattice {
        lattice,
        table,
        primes: ElementSet::empty(n),
        radicals: Vec::new(),
    };

    for i in 0..n {
        for a in 0..n {
            let r = m.residual(i, a);
            for x in 0..n {
                if m.leq(m.mul(x, a), i) != m.leq(x, r) {
                    return Err(Error::ResidualMismatch { i, a, residual: r, x });
                }
            }
        }
    }

    m.primes = ElementSet::from_indices(n, (0..n).filter(|&p| m.prime_witness(p).is_none()));
    let mut radicals = Vec::with_capacity(n);
    for a in 0..n {
        let by_powers = m.radical_by_powers(a);
        let by_primes = m.radical_by_min_primes(a);
        if by_powers != by_primes {
            return Err(Error::RadicalMismatch {
                a,
                by_powers,
                by_primes,
            });
        }
        radicals.push(by_powers);
    }
    m.radicals = radicals;
    Ok(m)
}

/// `x·y = 0` for `x, y ≠ 1` and `x·1 = x`.
///
/// Distributivity forces top to be join-irreducible; otherwise
/// `a·(x∨y) = a` while `(a·x)∨(a·y) = 0`.
pub fn trivial_mult(lattice: FiniteLattice) -> Result<MultiplicativeLattice> {
    if let Some((x, y)) = lattice.top_join_reducing_pair() {
        return Err(Error::TopJoinReducible { x, y });
    }
    let (top, bottom) = (lattice.top(), lattice.bottom());
    let table = MultTable::from_fn(lattice.size(), |a, b| {
        if a == top {
            b
        } else if b == top {
            a
        } else {
            bottom
        }
    });
    attach_multiplication(lattice, table)
}

/// Multiplication by meet; valid exactly when the lattice is distributive.
pub fn meet_mult(lattice: FiniteLattice) -> Result<MultiplicativeLattice> {
    let table = MultTable::from_fn(lattice.size(), |a, b| lattice.meet(a, b));
    attach_multiplication(lattice, table)
}

impl MultiplicativeLattice {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn table(&self) -> &MultTable {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    /// `(i:a)`, the largest `x` with `x·a ≤ i`.
    pub fn residual(&self, i: usize, a: usize) -> usize {
        self.big_join(self.elements().filter(|&x| self.leq(self.mul(x, a), i)))
    }

    pub fn annihilator(&self, a: usize) -> usize {
        self.residual(self.bottom(), a)
    }

    /// `a^k` for `k ≥ 1`. Panics on `k = 0`.
    pub fn power(&self, a: usize, k: u32) -> usize {
        assert!(k >= 1, "powers start at 1");
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    /// `{a, a², a³, ..}`, stopping at the first repeated value.
    pub fn power_closure(&self, a: usize) -> ElementSet {
        let mut seen = self.empty_set();
        let mut x = a;
        while seen.insert(x) {
            x = self.mul(x, a);
        }
        seen
    }

    /// `√a`; the two radical formulas were cross-checked at construction.
    pub fn radical(&self, a: usize) -> usize {
        self.radicals[a]
    }

    /// Join of all `x` some power of which lies below `a`.
    pub fn radical_by_powers(&self, a: usize) -> usize {
        self.big_join(
            self.elements()
                .filter(|&x| self.power_closure(x).iter().any(|p| self.leq(p, a))),
        )
    }

    /// Meet of the primes minimal over `a`.
    pub fn radical_by_min_primes(&self, a: usize) -> usize {
        let over: Vec<usize> = self
            .primes
            .iter()
            .filter(|&p| self.leq(a, p))
            .collect();
        let minimal = over
            .iter()
            .copied()
            .filter(|&p| !over.iter().any(|&q| self.lt(q, p)));
        self.big_meet(minimal)
    }

    /// `Nil(L)`: elements with a power equal to bottom.
    pub fn nilpotents(&self) -> ElementSet {
        ElementSet::from_indices(
            self.size(),
            self.elements()
                .filter(|&x| self.power_closure(x).contains(self.bottom())),
        )
    }

    /// `Z(L)`: elements killed by some nonzero element.
    pub fn zero_divisors(&self) -> ElementSet {
        let bottom = self.bottom();
        ElementSet::from_indices(
            self.size(),
            self.elements().filter(|&x| {
                self.elements()
                    .any(|y| y != bottom && self.mul(x, y) == bottom)
            }),
        )
    }

    pub fn is_reduced(&self) -> bool {
        self.nilpotents().len() == 1
    }

    pub fn prime_witness(&self, p: usize) -> Option<Witness> {
        if p == self.top() {
            return Some(Witness::NotProper);
        }
        self.first_pair(|a, b| {
            self.leq(self.mul(a, b), p) && !self.leq(a, p) && !self.leq(b, p)
        })
    }

    pub fn is_prime(&self, p: usize) -> bool {
        self.primes.contains(p)
    }

    pub fn primes(&self) -> &ElementSet {
        &self.primes
    }

    pub fn primary_witness(&self, i: usize) -> Option<Witness> {
        if i == self.top() {
            return Some(Witness::NotProper);
        }
        let root = self.radical(i);
        self.first_pair(|a, b| {
            self.leq(self.mul(a, b), i) && !self.leq(a, i) && !self.leq(b, root)
        })
    }

    pub fn is_primary(&self, i: usize) -> bool {
        self.primary_witness(i).is_none()
    }

    pub fn maximal_witness(&self, m: usize) -> Option<Witness> {
        if m == self.top() {
            return Some(Witness::NotProper);
        }
        self.proper()
            .find(|&n| self.lt(m, n))
            .map(|n| Witness::Above { n })
    }

    pub fn is_maximal(&self, m: usize) -> bool {
        self.maximal_witness(m).is_none()
    }

    fn first_pair(&self, violates: impl Fn(usize, usize) -> bool) -> Option<Witness> {
        for a in self.elements() {
            for b in self.elements() {
                if violates(a, b) {
                    return Some(Witness::Pair { a, b });
                }
            }
        }
        None
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.size() == 1 {
            Err(Error::DegenerateLattice)
        } else {
            Ok(())
        }
    }

    /// `Max(L)`.
    pub fn max_elements(&self) -> Result<ElementSet> {
        self.require_nondegenerate()?;
        let max = ElementSet::from_indices(
            self.size(),
            self.elements().filter(|&m| self.is_maximal(m)),
        );
        debug_assert!(max.iter().all(|m| self.is_prime(m)));
        Ok(max)
    }

    /// `J(L)`, the meet of the maximal elements.
    pub fn jacobson(&self) -> Result<usize> {
        Ok(self.big_meet(self.max_elements()?.iter()))
    }

    /// `Min(L)`: primes with no prime strictly below.
    pub fn min_primes(&self) -> Result<ElementSet> {
        self.require_nondegenerate()?;
        let primes = self.primes();
        Ok(ElementSet::from_indices(
            self.size(),
            primes
                .iter()
                .filter(|&p| !primes.iter().any(|q| self.lt(q, p))),
        ))
    }

    pub fn is_local(&self) -> Result<bool> {
        Ok(self.max_elements()?.len() == 1)
    }

    /// Whether bottom is prime. False for the one-element lattice.
    pub fn is_domain(&self) -> bool {
        self.is_prime(self.bottom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> FiniteLattice {
        FiniteLattice::from_pairs(6, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4), (4, 5)])
            .unwrap()
            .with_labels(["0", "a", "b", "c", "d", "1"])
    }

    fn boolean_2x2() -> FiniteLattice {
        FiniteLattice::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn trivial_mult_on_k() {
        let m = trivial_mult(k()).unwrap();
        assert_eq!(m.mul(2, 3), 0);
        assert_eq!(m.mul(2, 5), 2);
        assert_eq!(m.annihilator(3), 4);
        assert_eq!(m.nilpotents().len(), 5);
        assert!(!m.is_reduced());
        assert_eq!(m.max_elements().unwrap().iter().collect::<Vec<_>>(), vec![4]);
        assert_eq!(m.jacobson().unwrap(), 4);
        assert!(m.is_local().unwrap());
    }

    #[test]
    fn trivial_mult_on_boolean_rejected() {
        assert_eq!(
            trivial_mult(boolean_2x2()).unwrap_err(),
            Error::TopJoinReducible { x: 1, y: 2 }
        );
        let l = boolean_2x2();
        let (top, bottom) = (l.top(), l.bottom());
        let table = MultTable::from_fn(4, |a, b| {
            if a == top {
                b
            } else if b == top {
                a
            } else {
                bottom
            }
        });
        assert_eq!(
            attach_multiplication(l, table).unwrap_err(),
            Error::AxiomViolation {
                axiom: Axiom::JoinDistributivity,
                witness: vec![1, 1, 2]
            }
        );
    }

    #[test]
    fn meet_mult_on_chain_and_boolean() {
        let c = meet_mult(FiniteLattice::chain(5).unwrap()).unwrap();
        assert!(c.is_local().unwrap());
        assert!(c.is_domain());
        let b = meet_mult(boolean_2x2()).unwrap();
        assert_eq!(b.max_elements().unwrap().len(), 2);
        assert_eq!(b.jacobson().unwrap(), 0);
    }

    #[test]
    fn meet_mult_on_pentagon_fails() {
        // N5: 0 < a < b < 1, 0 < c < 1
        let n5 = FiniteLattice::from_pairs(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(matches!(
            meet_mult(n5),
            Err(Error::AxiomViolation {
                axiom: Axiom::JoinDistributivity,
                ..
            })
        ));
    }

    #[test]
    fn table_shape_and_closure() {
        let c = FiniteLattice::chain(2).unwrap();
        assert!(matches!(
            attach_multiplication(c.clone(), MultTable::from_fn(3, |_, _| 0)),
            Err(Error::TableShape { .. })
        ));
        assert_eq!(
            attach_multiplication(c, MultTable::from_fn(2, |_, _| 7)).unwrap_err(),
            Error::AxiomViolation {
                axiom: Axiom::Closure,
                witness: vec![0, 0]
            }
        );
        assert!(MultTable::from_rows(vec![vec![0, 0], vec![0]]).is_err());
    }

    #[test]
    fn degenerate_lattice() {
        let m = trivial_mult(FiniteLattice::chain(1).unwrap()).unwrap();
        assert_eq!(m.max_elements(), Err(Error::DegenerateLattice));
        assert_eq!(m.jacobson(), Err(Error::DegenerateLattice));
        assert!(!m.is_domain());
        assert!(m.zero_divisors().is_empty());
    }

    #[test]
    fn properness_conventions() {
        let m = trivial_mult(k()).unwrap();
        assert_eq!(m.prime_witness(5), Some(Witness::NotProper));
        assert_eq!(m.primary_witness(5), Some(Witness::NotProper));
        assert_eq!(m.maximal_witness(5), Some(Witness::NotProper));
        assert_eq!(m.maximal_witness(2), Some(Witness::Above { n: 4 }));
        assert_eq!(m.residual(2, 5), 2);
        assert_eq!(m.residual(5, 2), 5);
        assert_eq!(m.power(5, 4), 5);
    }
}
