//! Ideal lattices of `ℤ_n` and `ℤ_m × ℤ_n`, and ring-side r/n/J-ideal
//! decisions made by scanning ring elements.
//!
//! The lattice side classifies ideals through products of ideals; the ring
//! side applies the ideal definitions to individual elements. The two are
//! computed independently so that [`cross_validate_zn`] and
//! [`cross_validate_prod`] act as oracles for each other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mult::{attach_multiplication, MultTable, MultiplicativeLattice};
use crate::order::FiniteLattice;
use crate::set::ElementSet;
use crate::xclass;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A finite commutative ring with elements encoded as `0..order()`.
pub trait FiniteRing {
    fn order(&self) -> usize;
    fn zero(&self) -> usize;
    fn one(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;

    fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }
}

/// `ℤ_n`, elements `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zn {
    pub n: u64,
}

impl FiniteRing for Zn {
    fn order(&self) -> usize {
        self.n as usize
    }
    fn zero(&self) -> usize {
        0
    }
    fn one(&self) -> usize {
        (1 % self.n) as usize
    }
    fn add(&self, a: usize, b: usize) -> usize {
        ((a as u64 + b as u64) % self.n) as usize
    }
    fn neg(&self, a: usize) -> usize {
        ((self.n - a as u64) % self.n) as usize
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        ((a as u64 * b as u64) % self.n) as usize
    }
}

/// `ℤ_m × ℤ_n`, element `(x, y)` encoded as `x·n + y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZmZn {
    pub left: Zn,
    pub right: Zn,
}

impl ZmZn {
    pub fn encode(&self, x: usize, y: usize) -> usize {
        x * self.right.order() + y
    }

    pub fn decode(&self, e: usize) -> (usize, usize) {
        (e / self.right.order(), e % self.right.order())
    }

    fn lift(&self, a: usize, b: usize, f: impl Fn(&Zn, usize, usize) -> usize) -> usize {
        let (a1, a2) = self.decode(a);
        let (b1, b2) = self.decode(b);
        self.encode(f(&self.left, a1, b1), f(&self.right, a2, b2))
    }
}

impl FiniteRing for ZmZn {
    fn order(&self) -> usize {
        self.left.order() * self.right.order()
    }
    fn zero(&self) -> usize {
        0
    }
    fn one(&self) -> usize {
        self.encode(self.left.one(), self.right.one())
    }
    fn add(&self, a: usize, b: usize) -> usize {
        self.lift(a, b, |r, x, y| r.add(x, y))
    }
    fn neg(&self, a: usize) -> usize {
        let (x, y) = self.decode(a);
        self.encode(self.left.neg(x), self.right.neg(y))
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.lift(a, b, |r, x, y| r.mul(x, y))
    }
}

fn divisors_desc(n: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    ds.reverse();
    ds
}

fn ideal_label(d: u64, n: u64) -> String {
    format!("({})", d % n)
}

/// Ideals of `ℤ_n` indexed by divisors of `n`, largest divisor (the zero
/// ideal) first and `(1)` last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZnIdealModel {
    n: u64,
    divisors: Vec<u64>,
}

impl ZnIdealModel {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Self {
            n,
            divisors: divisors_desc(n),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn ring(&self) -> Zn {
        Zn { n: self.n }
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn divisor(&self, k: usize) -> u64 {
        self.divisors[k]
    }

    /// Index of the ideal generated by `g`, i.e. of `(gcd(g, n))`.
    pub fn index_of(&self, g: u64) -> usize {
        let d = gcd(g, self.n);
        self.divisors
            .iter()
            .position(|&x| x == d)
            .expect("gcd with n divides n")
    }

    pub fn label(&self, k: usize) -> String {
        ideal_label(self.divisors[k], self.n)
    }

    /// `ideal(d1) ⊆ ideal(d2) ⟺ d2 | d1`
    pub fn contained(&self, k1: usize, k2: usize) -> bool {
        self.divisors[k1].is_multiple_of(self.divisors[k2])
    }

    pub fn sum(&self, k1: usize, k2: usize) -> usize {
        self.index_of(gcd(self.divisors[k1], self.divisors[k2]))
    }

    pub fn intersection(&self, k1: usize, k2: usize) -> usize {
        self.index_of(lcm(self.divisors[k1], self.divisors[k2]))
    }

    pub fn product(&self, k1: usize, k2: usize) -> usize {
        self.index_of(self.divisors[k1] * self.divisors[k2])
    }

    /// The ring elements of ideal `k`: multiples of its divisor.
    pub fn members(&self, k: usize) -> ElementSet {
        let d = self.divisors[k];
        ElementSet::from_indices(self.n as usize, (0..self.n).filter(|x| x % d == 0).map(|x| x as usize))
    }

    fn lattice(&self) -> Result<MultiplicativeLattice> {
        let len = self.len();
        let mut pairs = Vec::new();
        for k1 in 0..len {
            for k2 in 0..len {
                if self.contained(k1, k2) {
                    pairs.push((k1, k2));
                }
            }
        }
        let lattice = FiniteLattice::from_pairs(len, &pairs)?
            .with_labels((0..len).map(|k| self.label(k)));
        attach_multiplication(lattice, MultTable::from_fn(len, |a, b| self.product(a, b)))
    }
}

/// `Id(ℤ_n)` with divisor arithmetic: sum is gcd, intersection lcm, product
/// `gcd(d1·d2, n)`.
pub fn ideal_lattice_zn(n: u64) -> Result<(MultiplicativeLattice, ZnIdealModel)> {
    let model = ZnIdealModel::new(n)?;
    Ok((model.lattice()?, model))
}

/// Ideals of `ℤ_m × ℤ_n` as pairs of component ideals; index `k1·len(n) + k2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductRingModel {
    left: ZnIdealModel,
    right: ZnIdealModel,
}

impl ProductRingModel {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        Ok(Self {
            left: ZnIdealModel::new(m)?,
            right: ZnIdealModel::new(n)?,
        })
    }

    pub fn moduli(&self) -> (u64, u64) {
        (self.left.n, self.right.n)
    }

    pub fn ring(&self) -> ZmZn {
        ZmZn {
            left: self.left.ring(),
            right: self.right.ring(),
        }
    }

    pub fn len(&self) -> usize {
        self.left.len() * self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn split(&self, k: usize) -> (usize, usize) {
        (k / self.right.len(), k % self.right.len())
    }

    fn join_index(&self, k1: usize, k2: usize) -> usize {
        k1 * self.right.len() + k2
    }

    pub fn label(&self, k: usize) -> String {
        let (a, b) = self.split(k);
        format!("{}x{}", self.left.label(a), self.right.label(b))
    }

    pub fn members(&self, k: usize) -> ElementSet {
        let (a, b) = self.split(k);
        let ring = self.ring();
        let (left, right) = (self.left.members(a), self.right.members(b));
        let mut out = ElementSet::empty(ring.order());
        for x in left.iter() {
            for y in right.iter() {
                out.insert(ring.encode(x, y));
            }
        }
        out
    }

    fn lattice(&self) -> Result<MultiplicativeLattice> {
        let len = self.len();
        let mut pairs = Vec::new();
        for k1 in 0..len {
            for k2 in 0..len {
                let ((a1, b1), (a2, b2)) = (self.split(k1), self.split(k2));
                if self.left.contained(a1, a2) && self.right.contained(b1, b2) {
                    pairs.push((k1, k2));
                }
            }
        }
        let lattice = FiniteLattice::from_pairs(len, &pairs)?
            .with_labels((0..len).map(|k| self.label(k)));
        let table = MultTable::from_fn(len, |k1, k2| {
            let ((a1, b1), (a2, b2)) = (self.split(k1), self.split(k2));
            self.join_index(self.left.product(a1, a2), self.right.product(b1, b2))
        });
        attach_multiplication(lattice, table)
    }
}

/// `Id(ℤ_m × ℤ_n)` with componentwise order and products.
pub fn ideal_lattice_prod(m: u64, n: u64) -> Result<(MultiplicativeLattice, ProductRingModel)> {
    let model = ProductRingModel::new(m, n)?;
    Ok((model.lattice()?, model))
}

/// Element-level radicals of a finite ring.
#[derive(Debug, Clone)]
pub struct RingRadicals {
    /// `√0`
    pub nilradical: ElementSet,
    /// `Z(R)`: elements with nonzero annihilator.
    pub zero_divisors: ElementSet,
    /// `J(R) = {x | 1 - xy is a unit for all y}`
    pub jacobson: ElementSet,
    pub units: ElementSet,
}

impl RingRadicals {
    pub fn of<R: FiniteRing>(ring: &R) -> Self {
        let size = ring.order();
        let zero = ring.zero();
        let one = ring.one();
        let units = ElementSet::from_indices(
            size,
            ring.elements()
                .filter(|&u| ring.elements().any(|v| ring.mul(u, v) == one)),
        );
        let nilradical = ElementSet::from_indices(
            size,
            ring.elements().filter(|&a| {
                let mut p = a;
                for _ in 0..size {
                    if p == zero {
                        return true;
                    }
                    p = ring.mul(p, a);
                }
                p == zero
            }),
        );
        let zero_divisors = ElementSet::from_indices(
            size,
            ring.elements()
                .filter(|&a| ring.elements().any(|b| b != zero && ring.mul(a, b) == zero)),
        );
        let jacobson = ElementSet::from_indices(
            size,
            ring.elements().filter(|&x| {
                ring.elements()
                    .all(|y| units.contains(ring.add(one, ring.neg(ring.mul(x, y)))))
            }),
        );
        Self {
            nilradical,
            zero_divisors,
            jacobson,
            units,
        }
    }
}

/// `ab ∈ I` with `a` outside `excluded` implies `b ∈ I`, for proper `I`.
fn ideal_absorbs<R: FiniteRing>(ring: &R, ideal: &ElementSet, excluded: &ElementSet) -> bool {
    if ideal.contains(ring.one()) {
        return false;
    }
    ring.elements().filter(|&a| !excluded.contains(a)).all(|a| {
        ring.elements()
            .all(|b| !ideal.contains(ring.mul(a, b)) || ideal.contains(b))
    })
}

/// `ab ∈ I` with `ann(a) = (0)` implies `b ∈ I`.
pub fn ring_is_r_ideal<R: FiniteRing>(ring: &R, radicals: &RingRadicals, ideal: &ElementSet) -> bool {
    ideal_absorbs(ring, ideal, &radicals.zero_divisors)
}

/// `ab ∈ I` with `a ∉ √0` implies `b ∈ I`.
pub fn ring_is_n_ideal<R: FiniteRing>(ring: &R, radicals: &RingRadicals, ideal: &ElementSet) -> bool {
    ideal_absorbs(ring, ideal, &radicals.nilradical)
}

/// `ab ∈ I` with `a ∉ J(R)` implies `b ∈ I`.
pub fn ring_is_j_ideal<R: FiniteRing>(ring: &R, radicals: &RingRadicals, ideal: &ElementSet) -> bool {
    ideal_absorbs(ring, ideal, &radicals.jacobson)
}

/// One proper ideal's classification from both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossRow {
    pub ideal: String,
    pub ring_r: bool,
    pub ring_n: bool,
    pub ring_j: bool,
    pub lattice_r: bool,
    pub lattice_n: bool,
    pub lattice_j: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossReport {
    pub ring: String,
    pub rows: Vec<CrossRow>,
}

fn cross_validate<R: FiniteRing>(
    name: String,
    lattice: &MultiplicativeLattice,
    ring: &R,
    members: impl Fn(usize) -> ElementSet,
) -> Result<CrossReport> {
    let radicals = RingRadicals::of(ring);
    let (r_set, n_set, j_set) = (
        xclass::r_set(lattice)?,
        xclass::n_set(lattice)?,
        xclass::j_set(lattice)?,
    );
    let mismatch = |k: usize, class: &str, ring: bool, lattice_side: bool| {
        Err(Error::CrossValidationMismatch {
            ideal: lattice.label(k).to_string(),
            class: class.to_string(),
            ring,
            lattice: lattice_side,
        })
    };

    let nil = lattice.nilpotents();
    let zdiv = lattice.zero_divisors();
    let jac = lattice.jacobson()?;
    for k in lattice.elements() {
        let ideal = members(k);
        let ring_nil = ideal.is_subset(&radicals.nilradical);
        if ring_nil != nil.contains(k) {
            return mismatch(k, "nil", ring_nil, nil.contains(k));
        }
        let ring_z = ideal.is_subset(&radicals.zero_divisors);
        if ring_z != zdiv.contains(k) {
            return mismatch(k, "zero-divisor", ring_z, zdiv.contains(k));
        }
    }
    if members(jac) != radicals.jacobson {
        return mismatch(jac, "jacobson", false, true);
    }

    let mut rows = Vec::new();
    for k in lattice.proper() {
        let ideal = members(k);
        let row = CrossRow {
            ideal: lattice.label(k).to_string(),
            ring_r: ring_is_r_ideal(ring, &radicals, &ideal),
            ring_n: ring_is_n_ideal(ring, &radicals, &ideal),
            ring_j: ring_is_j_ideal(ring, &radicals, &ideal),
            lattice_r: xclass::is_x_element(lattice, &r_set, k),
            lattice_n: xclass::is_x_element(lattice, &n_set, k),
            lattice_j: xclass::is_x_element(lattice, &j_set, k),
        };
        for (class, ring_side, lattice_side) in [
            ("r", row.ring_r, row.lattice_r),
            ("n", row.ring_n, row.lattice_n),
            ("J", row.ring_j, row.lattice_j),
        ] {
            if ring_side != lattice_side {
                return mismatch(k, class, ring_side, lattice_side);
            }
        }
        rows.push(row);
    }
    Ok(CrossReport { ring: name, rows })
}

/// Compares ring-side and lattice-side r/n/J classification of every proper
/// ideal of `ℤ_n`, plus the correspondence of Nil, Z and J.
pub fn cross_validate_zn(n: u64) -> Result<CrossReport> {
    let (lattice, model) = ideal_lattice_zn(n)?;
    cross_validate(format!("Z{n}"), &lattice, &model.ring(), |k| model.members(k))
}

pub fn cross_validate_prod(m: u64, n: u64) -> Result<CrossReport> {
    let (lattice, model) = ideal_lattice_prod(m, n)?;
    cross_validate(format!("Z{m}xZ{n}"), &lattice, &model.ring(), |k| model.members(k))
}
