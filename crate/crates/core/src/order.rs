//! Finite partial orders and bounded lattices over dense element indices.

use crate::error::{Bound, Error, Result};
use crate::set::ElementSet;

/// A validated partial order on `{0, .., size - 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrder {
    size: usize,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

/// Builds the reflexive-transitive closure of `leq_pairs` and checks antisymmetry.
///
/// Pairs `(x, y)` read as `x ≤ y`; cover relations and arbitrary comparabilities
/// are both accepted.
pub fn build_order(size: usize, leq_pairs: &[(usize, usize)]) -> Result<PartialOrder> {
    if size == 0 {
        return Err(Error::EmptyOrder);
    }
    let mut up: Vec<ElementSet> = (0..size).map(|i| ElementSet::singleton(size, i)).collect();
    for &(x, y) in leq_pairs {
        for index in [x, y] {
            if index >= size {
                return Err(Error::IndexOutOfRange { index, size });
            }
        }
        up[x].insert(y);
    }
    // Warshall over bitset rows.
    for k in 0..size {
        let row_k = up[k].clone();
        for row in up.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
    for a in 0..size {
        for b in up[a].iter() {
            if b != a && up[b].contains(a) {
                return Err(Error::Cycle {
                    a: a.min(b),
                    b: a.max(b),
                });
            }
        }
    }
    let mut down = vec![ElementSet::empty(size); size];
    for (x, row) in up.iter().enumerate() {
        for y in row {
            down[y].insert(x);
        }
    }
    Ok(PartialOrder { size, up, down })
}

impl PartialOrder {
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn up_set(&self, x: usize) -> &ElementSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &ElementSet {
        &self.down[x]
    }
}

/// A finite bounded lattice with precomputed binary meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    order: PartialOrder,
    bottom: usize,
    top: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
    labels: Vec<String>,
}

/// Checks that every pair has a meet and a join and identifies the bounds.
pub fn validate_lattice(order: PartialOrder) -> Result<FiniteLattice> {
    let n = order.size;
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for x in 0..n {
        for y in x..n {
            let m = greatest_in(&order.down, order.down[x].intersection(&order.down[y]))
                .ok_or(Error::NotALattice {
                    x,
                    y,
                    bound: Bound::Meet,
                })?;
            let j = greatest_in(&order.up, order.up[x].intersection(&order.up[y])).ok_or(
                Error::NotALattice {
                    x,
                    y,
                    bound: Bound::Join,
                },
            )?;
            meet[x * n + y] = m;
            meet[y * n + x] = m;
            join[x * n + y] = j;
            join[y * n + x] = j;
        }
    }
    // With all binary bounds present the bounds of the whole set exist too.
    let bottom = (0..n).find(|&b| order.up[b].len() == n).ok_or(Error::NotALattice {
        x: 0,
        y: 0,
        bound: Bound::Meet,
    })?;
    let top = (0..n).find(|&t| order.down[t].len() == n).ok_or(Error::NotALattice {
        x: 0,
        y: 0,
        bound: Bound::Join,
    })?;
    Ok(FiniteLattice {
        labels: (0..n).map(|i| i.to_string()).collect(),
        order,
        bottom,
        top,
        meet,
        join,
    })
}

/// The element `g` of `candidates` whose `cone[g]` covers all of `candidates`.
fn greatest_in(cone: &[ElementSet], candidates: ElementSet) -> Option<usize> {
    candidates
        .iter()
        .find(|&g| candidates.is_subset(&cone[g]))
}

impl FiniteLattice {
    /// Convenience: closure, order validation and lattice validation in one step.
    pub fn from_pairs(size: usize, leq_pairs: &[(usize, usize)]) -> Result<Self> {
        validate_lattice(build_order(size, leq_pairs)?)
    }

    /// The chain `0 < 1 < .. < size-1`.
    pub fn chain(size: usize) -> Result<Self> {
        let covers: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
        Self::from_pairs(size, &covers)
    }

    /// Replaces the display labels. Panics if the count does not match.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.size(), "label count must equal lattice size");
        self.labels = labels;
        self
    }

    pub fn size(&self) -> usize {
        self.order.size
    }

    pub fn order(&self) -> &PartialOrder {
        &self.order
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.order.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size() + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size() + y]
    }

    /// Meet of a finite set; the empty meet is top.
    pub fn big_meet<I: IntoIterator<Item = usize>>(&self, set: I) -> usize {
        set.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a finite set; the empty join is bottom.
    pub fn big_join<I: IntoIterator<Item = usize>>(&self, set: I) -> usize {
        set.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `(a] = {x | x ≤ a}`
    pub fn down_set(&self, a: usize) -> &ElementSet {
        self.order.down_set(a)
    }

    pub fn up_set(&self, a: usize) -> &ElementSet {
        self.order.up_set(a)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.size())
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    /// Elements other than top.
    pub fn proper(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements().filter(move |&x| x != self.top)
    }

    /// Cover pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.up_set(x).iter().filter(|&y| y != x) {
                let between = self
                    .up_set(x)
                    .intersection(self.down_set(y))
                    .len();
                if between == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Elements that are not the join of two strictly smaller elements
    /// (bottom excluded).
    pub fn join_irreducibles(&self) -> ElementSet {
        let mut out = self.empty_set();
        for x in self.elements().filter(|&x| x != self.bottom) {
            let lower: Vec<usize> = self.down_set(x).iter().filter(|&y| y != x).collect();
            if self.big_join(lower) != x {
                out.insert(x);
            }
        }
        out
    }

    /// Whether `x ∨ y = top` forces `x = top` or `y = top`.
    pub fn top_join_reducing_pair(&self) -> Option<(usize, usize)> {
        for x in self.proper() {
            for y in self.proper().filter(|&y| y >= x) {
                if self.join(x, y) == self.top {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The lattice K: 0 < a < b < d < 1 and 0 < c < d.
    pub(crate) fn k() -> FiniteLattice {
        FiniteLattice::from_pairs(6, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4), (4, 5)])
            .unwrap()
            .with_labels(["0", "a", "b", "c", "d", "1"])
    }

    #[test]
    fn singleton_order() {
        let l = FiniteLattice::from_pairs(1, &[]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 0);
        assert_eq!(l.big_meet([]), 0);
    }

    #[test]
    fn lattice_k_bounds() {
        let k = k();
        assert_eq!(k.bottom(), 0);
        assert_eq!(k.top(), 5);
        assert_eq!(k.meet(2, 3), 0);
        assert_eq!(k.join(2, 3), 4);
        assert_eq!(k.down_set(4).iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
        assert_eq!(k.covers().len(), 6);
    }

    #[test]
    fn cycle_rejected() {
        assert_eq!(build_order(2, &[(0, 1), (1, 0)]), Err(Error::Cycle { a: 0, b: 1 }));
        assert!(matches!(
            build_order(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::Cycle { .. })
        ));
    }

    #[test]
    fn index_out_of_range() {
        assert_eq!(
            build_order(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
        assert_eq!(build_order(0, &[]), Err(Error::EmptyOrder));
    }

    #[test]
    fn chain_is_lattice() {
        let c = FiniteLattice::chain(3).unwrap();
        assert_eq!((c.bottom(), c.top()), (0, 2));
        assert_eq!(c.join(0, 1), 1);
        assert_eq!(c.meet(2, 1), 1);
    }

    #[test]
    fn two_maximal_elements_without_top() {
        // 0 < 2, 0 < 3, 1 < 2, 1 < 3: no top, no bottom, no joins of {2,3}.
        let order = build_order(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(matches!(validate_lattice(order), Err(Error::NotALattice { .. })));
        // With a bottom but two maximal elements.
        let order = build_order(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            validate_lattice(order),
            Err(Error::NotALattice {
                x: 1,
                y: 2,
                bound: Bound::Join
            })
        );
    }

    #[test]
    fn join_irreducibles_of_k() {
        let k = k();
        // d = b ∨ c is reducible; 1 has the unique lower cover d.
        assert_eq!(k.join_irreducibles().iter().collect::<Vec<_>>(), vec![1, 2, 3, 5]);
        assert_eq!(k.top_join_reducing_pair(), None);
    }
}
