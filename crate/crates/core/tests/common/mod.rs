//! Set-level ideal arithmetic for ℤ_n: ideals are explicit sets of residues
//! and every operation is computed by closure, never via divisors.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Ideal = BTreeSet<u64>;

pub struct ExplicitIdeals {
    pub n: u64,
    pub ideals: Vec<Ideal>,
    sums: Vec<Vec<usize>>,
    products: Vec<Vec<usize>>,
}

/// Smallest ideal of ℤ_n containing `gens`: the additive closure of all
/// multiples `r·g`, found by breadth-first search from 0.
pub fn generated(n: u64, gens: impl IntoIterator<Item = u64>) -> Ideal {
    let size = n as usize;
    let mut is_gen = vec![false; size];
    for g in gens {
        is_gen[(g % n) as usize] = true;
    }
    let mut is_step = vec![false; size];
    for g in (0..n).filter(|&g| is_gen[g as usize]) {
        for r in 0..n {
            is_step[(r * g % n) as usize] = true;
        }
    }
    let steps: Vec<usize> = (0..size).filter(|&s| is_step[s]).collect();
    let mut seen = vec![false; size];
    seen[0] = true;
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for &s in &steps {
            let y = (x + s) % size;
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    (0..n).filter(|&x| seen[x as usize]).collect()
}

impl ExplicitIdeals {
    pub fn new(n: u64) -> Self {
        let mut ideals: Vec<Ideal> = Vec::new();
        for g in 0..n {
            let i = generated(n, [g]);
            if !ideals.contains(&i) {
                ideals.push(i);
            }
        }
        let find = |i: &Ideal| ideals.iter().position(|x| x == i).expect("closed");
        let sums = ideals
            .iter()
            .map(|a| {
                ideals
                    .iter()
                    .map(|b| find(&generated(n, a.iter().chain(b.iter()).copied())))
                    .collect()
            })
            .collect();
        let products = ideals
            .iter()
            .map(|a| {
                ideals
                    .iter()
                    .map(|b| find(&generated(n, a.iter().flat_map(|x| b.iter().map(move |y| x * y % n)))))
                    .collect()
            })
            .collect();
        Self {
            n,
            ideals,
            sums,
            products,
        }
    }

    fn pos(&self, i: &Ideal) -> usize {
        self.ideals.iter().position(|x| x == i).expect("not an ideal")
    }

    pub fn zero(&self) -> Ideal {
        [0].into_iter().collect()
    }

    pub fn whole(&self) -> Ideal {
        (0..self.n).collect()
    }

    /// `(g)`
    pub fn principal(&self, g: u64) -> Ideal {
        generated(self.n, [g])
    }

    pub fn sum(&self, a: &Ideal, b: &Ideal) -> Ideal {
        self.ideals[self.sums[self.pos(a)][self.pos(b)]].clone()
    }

    pub fn intersection(&self, a: &Ideal, b: &Ideal) -> Ideal {
        a.intersection(b).copied().collect()
    }

    pub fn product(&self, a: &Ideal, b: &Ideal) -> Ideal {
        self.ideals[self.products[self.pos(a)][self.pos(b)]].clone()
    }

    /// Sum of all ideals `x` with `x·a ⊆ i`.
    pub fn residual(&self, i: &Ideal, a: &Ideal) -> Ideal {
        let mut acc = self.zero();
        for x in &self.ideals {
            if self.product(x, a).is_subset(i) {
                acc = self.sum(&acc, x);
            }
        }
        acc
    }

    pub fn power(&self, a: &Ideal, k: u32) -> Ideal {
        (1..k).fold(a.clone(), |acc, _| self.product(&acc, a))
    }

    /// Sum of ideals with some power inside `a`.
    pub fn radical(&self, a: &Ideal) -> Ideal {
        let mut acc = self.zero();
        for x in &self.ideals {
            if (1..=8).any(|k| self.power(x, k).is_subset(a)) {
                acc = self.sum(&acc, x);
            }
        }
        acc
    }

    pub fn is_prime(&self, p: &Ideal) -> bool {
        p != &self.whole()
            && self.ideals.iter().all(|a| {
                self.ideals.iter().all(|b| {
                    !self.product(a, b).is_subset(p) || a.is_subset(p) || b.is_subset(p)
                })
            })
    }

    pub fn nilpotent(&self) -> Vec<Ideal> {
        let zero = self.zero();
        self.ideals
            .iter()
            .filter(|x| (1..=8).any(|k| self.power(x, k) == zero))
            .cloned()
            .collect()
    }

    pub fn zero_divisors(&self) -> Vec<Ideal> {
        let zero = self.zero();
        self.ideals
            .iter()
            .filter(|x| {
                self.ideals
                    .iter()
                    .any(|y| *y != zero && self.product(x, y) == zero)
            })
            .cloned()
            .collect()
    }

    pub fn maximal(&self) -> Vec<Ideal> {
        let whole = self.whole();
        self.ideals
            .iter()
            .filter(|m| {
                **m != whole
                    && !self
                        .ideals
                        .iter()
                        .any(|k| *k != whole && *k != **m && m.is_subset(k))
            })
            .cloned()
            .collect()
    }
}

use proptest::prelude::*;
use xlattice::FiniteLattice;

/// Random bounded lattices: a random DAG on inner elements `1..=k`, plus a
/// bottom `0` and top `k + 1`, kept only when every pair has bounds.
pub fn arb_lattice(max_inner: usize) -> impl Strategy<Value = FiniteLattice> {
    (0..=max_inner)
        .prop_flat_map(|k| {
            let pairs: Vec<(usize, usize)> = (1..=k)
                .flat_map(|i| (i + 1..=k).map(move |j| (i, j)))
                .collect();
            let len = pairs.len();
            (Just(k), Just(pairs), proptest::collection::vec(any::<bool>(), len))
        })
        .prop_filter_map("not a lattice", |(k, pairs, keep)| {
            let mut edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .zip(keep)
                .filter(|(_, keep)| *keep)
                .map(|(p, _)| p)
                .collect();
            for i in 1..=k {
                edges.push((0, i));
                edges.push((i, k + 1));
            }
            if k == 0 {
                edges.push((0, 1));
            }
            FiniteLattice::from_pairs(k + 2, &edges).ok()
        })
}
